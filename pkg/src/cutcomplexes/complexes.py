"""Simplicial complexes with explicit ground sets, and the graph complexes built on them.

A complex is facet-represented: the ground set is declared (phantom vertices
allowed), the facets are the inclusion-maximal simplices, and the void complex
(no simplices at all) is distinct from ``{emptyset}`` (exactly one empty
facet).  Simplices are enumerated on demand and held as bitmasks over the
ground set; builders that already know the full simplex list attach it so
nothing is enumerated twice.

The two graph complexes:

* ``total_cut_complex(g, d)``: vertex sets whose complement induces a
  subgraph with an independent set of size d.  Its facets are exactly the
  complements of the independent d-sets.
* ``bounded_independence_complex(g, d)``: vertex sets inducing subgraphs
  with independence number below d (the clique complex at d = 2).

The two are Alexander duals of one another; the dual, link, star, deletion,
join, skeleton, and nerve constructions here are the toolkit the verification
suites are built from.
"""

from __future__ import annotations

import threading
from itertools import combinations

from .graphs import Graph
from .limits import SizeCapError, resolve_cap


def _prune_to_maximal(masks):
    """Inclusion-maximal masks, deduplicated, sorted descending by popcount."""
    uniq = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    kept = []
    for m in uniq:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


class SimplicialComplex:
    """Immutable abstract simplicial complex on a declared ground set."""

    __slots__ = ("ground", "facets", "_bit", "_facet_masks", "_simplices", "_lock")

    def __init__(self, ground, facets):
        ground = tuple(sorted(set(ground)))
        bit = {v: i for i, v in enumerate(ground)}
        fsets = frozenset(frozenset(f) for f in facets)
        for f in fsets:
            for v in f:
                if v not in bit:
                    raise ValueError(f"facet vertex {v} not in ground set")
        for f in fsets:
            for g in fsets:
                if f < g:
                    raise ValueError(f"facet {sorted(f)} is contained in {sorted(g)}")
        self.ground = ground
        self.facets = fsets
        self._bit = bit
        self._facet_masks = None
        self._simplices = None
        self._lock = threading.Lock()

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_facet_candidates(cls, ground, candidates):
        """Build from arbitrary generating sets; dominated sets are pruned."""
        ground = tuple(sorted(set(ground)))
        bit = {v: i for i, v in enumerate(ground)}
        masks = []
        for f in candidates:
            m = 0
            for v in f:
                if v not in bit:
                    raise ValueError(f"facet vertex {v} not in ground set")
                m |= 1 << bit[v]
            masks.append(m)
        return cls._from_masks(ground, _prune_to_maximal(masks))

    @classmethod
    def _from_masks(cls, ground, facet_masks, simplices=None):
        """Trusted fast path: ``facet_masks`` must already be maximal."""
        self = object.__new__(cls)
        ground = tuple(ground)
        self.ground = ground
        self._bit = {v: i for i, v in enumerate(ground)}
        self._facet_masks = sorted(facet_masks)
        self.facets = frozenset(
            frozenset(self._unmask(m)) for m in self._facet_masks
        )
        self._simplices = sorted(simplices) if simplices is not None else None
        self._lock = threading.Lock()
        return self

    def _mask(self, vertices):
        m = 0
        for v in vertices:
            m |= 1 << self._bit[v]
        return m

    def _unmask(self, m):
        ground = self.ground
        out = []
        while m:
            low = m & -m
            m ^= low
            out.append(ground[low.bit_length() - 1])
        return out

    def facet_masks(self):
        if self._facet_masks is None:
            self._facet_masks = sorted(self._mask(f) for f in self.facets)
        return self._facet_masks

    # -- structure ------------------------------------------------------------

    @property
    def is_void(self):
        return not self.facets

    @property
    def has_empty_simplex(self):
        return bool(self.facets)

    def dim(self):
        """Dimension; -1 for {emptyset}, None for the void complex."""
        if self.is_void:
            return None
        return max(len(f) for f in self.facets) - 1

    def contains(self, vertices):
        """Membership test: is ``vertices`` a simplex?"""
        try:
            m = self._mask(vertices)
        except KeyError:
            return False
        return self._contains_mask(m)

    def _contains_mask(self, m):
        if self.is_void:
            return False
        for f in self.facet_masks():
            if m & ~f == 0:
                return True
        return False

    def simplex_masks(self, cap=None):
        """All simplices as bitmasks (ascending); ground capped for enumeration."""
        if self._simplices is None:
            with self._lock:
                if self._simplices is None:
                    limit = resolve_cap(cap)
                    if len(self.ground) > limit:
                        # wide ground sets are fine as long as the facets keep
                        # the enumeration within the 2^limit work budget
                        budget = 1 << limit
                        est = sum(1 << f.bit_count() for f in self.facet_masks())
                        if est > budget:
                            raise SizeCapError(
                                f"simplex enumeration over {len(self.ground)} ground "
                                f"vertices exceeds the 2^{limit} budget"
                            )
                    seen = set()
                    for f in self.facet_masks():
                        sub = f
                        while True:
                            seen.add(sub)
                            if sub == 0:
                                break
                            sub = (sub - 1) & f
                    self._simplices = sorted(seen)
        return self._simplices

    def simplices(self, cap=None):
        """All simplices as sorted vertex tuples, by (dimension, lex)."""
        out = [tuple(self._unmask(m)) for m in self.simplex_masks(cap)]
        out.sort(key=lambda t: (len(t), t))
        return out

    def f_vector(self, cap=None):
        """Counts per dimension, indexed from -1 (the empty simplex)."""
        counts = {}
        for m in self.simplex_masks(cap):
            q = m.bit_count() - 1
            counts[q] = counts.get(q, 0) + 1
        return counts

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.ground == other.ground and self.facets == other.facets

    def __hash__(self):
        return hash((self.ground, self.facets))

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex(void on {len(self.ground)} vertices)"
        return (
            f"SimplicialComplex({len(self.ground)} ground vertices, "
            f"{len(self.facets)} facets, dim {self.dim()})"
        )


class Cover:
    """An ordered family of subcomplexes sharing one ground set."""

    __slots__ = ("pieces",)

    def __init__(self, pieces):
        pieces = tuple(pieces)
        if not pieces:
            raise ValueError("a cover needs at least one piece")
        ground = pieces[0].ground
        for p in pieces[1:]:
            if p.ground != ground:
                raise ValueError("cover pieces must share one ground set")
        self.pieces = pieces

    def covers(self, k):
        """Does the union of the pieces equal the simplex set of ``k``?"""
        union = set()
        for p in self.pieces:
            union.update(p.simplex_masks())
        return set(k.simplex_masks()) == union


# -- elementary complexes ------------------------------------------------------


def full_simplex(vertices):
    vertices = tuple(sorted(set(vertices)))
    return SimplicialComplex(vertices, [vertices])


def simplex_boundary(vertices):
    """Boundary of the full simplex: all proper subsets of ``vertices``."""
    vertices = tuple(sorted(set(vertices)))
    if not vertices:
        raise ValueError("boundary needs at least one vertex")
    if len(vertices) == 1:
        return SimplicialComplex(vertices, [frozenset()])
    facets = [set(vertices) - {v} for v in vertices]
    return SimplicialComplex(vertices, facets)


def void_complex(ground=()):
    return SimplicialComplex(ground, [])


def empty_simplex_complex(ground=()):
    """The complex {emptyset} (every ground vertex phantom)."""
    return SimplicialComplex(ground, [frozenset()])


# -- graph complexes -----------------------------------------------------------


def independent_set_masks(g: Graph, d):
    """Bitmasks of all independent d-subsets of V(g)."""
    opens = g.open_masks()
    out = []
    for combo in combinations(range(g.n), d):
        m = 0
        ok = True
        for i in combo:
            if m & opens[i]:
                ok = False
                break
            m |= 1 << i
        if ok:
            out.append(m)
    return out


def _total_cut(g: Graph, d):
    n = g.n
    ground = range(1, n + 1)
    full = (1 << n) - 1
    indep = independent_set_masks(g, d)
    if not indep:
        return SimplicialComplex._from_masks(ground, [])
    facet_masks = sorted(full ^ s for s in indep)
    k = SimplicialComplex._from_masks(ground, facet_masks)
    return k


def total_cut_complex(g: Graph, d):
    """Complex of vertex sets whose complement keeps an independent d-set.

    Facets are the complements of the independent d-sets (equal-size sets
    never nest, so they are automatically inclusion-maximal).  Void exactly
    when the independence number of g is below d.
    """
    if d < 2:
        raise ValueError(f"total cut complex needs d >= 2, got {d}")
    return _total_cut(g, d)


def _bounded_independence(g: Graph, d):
    table = g.alpha_table()
    n = g.n
    full = (1 << n) - 1
    simplices = [m for m in range(full + 1) if table[m] < d]
    facet_masks = []
    for m in simplices:
        rest = full & ~m
        maximal = True
        while rest:
            low = rest & -rest
            rest ^= low
            if table[m | low] < d:
                maximal = False
                break
        if maximal:
            facet_masks.append(m)
    return SimplicialComplex._from_masks(
        range(1, n + 1), facet_masks, simplices=simplices
    )


def bounded_independence_complex(g: Graph, d):
    """Complex of vertex sets inducing subgraphs with independence number < d.

    The exhaustive subset scan uses the memoized per-subset independence
    table; at d = 2 this is the clique complex of g.
    """
    if d < 2:
        raise ValueError(f"bounded independence complex needs d >= 2, got {d}")
    return _bounded_independence(g, d)


# -- constructions on complexes -------------------------------------------------


def alexander_dual(k: SimplicialComplex, cap=None):
    """Dual complex: sets whose ground-set complement is not a simplex of k.

    The facets of the dual are the complements of the minimal non-faces of k;
    the dual of the full simplex is void and the dual of the void complex is
    the full simplex.
    """
    n = len(k.ground)
    if n == 0:
        raise ValueError("Alexander dual needs a nonempty ground set")
    limit = resolve_cap(cap)
    if n > limit:
        raise SizeCapError(f"Alexander dual capped at {limit} ground vertices")
    full = (1 << n) - 1
    if k.is_void:
        return SimplicialComplex._from_masks(k.ground, [full])
    members = set(k.simplex_masks(cap))
    dual_facets = []
    for m in range(full + 1):
        if m in members:
            continue
        mm = m
        minimal = True
        while mm:
            low = mm & -mm
            mm ^= low
            if (m ^ low) not in members:
                minimal = False
                break
        if minimal:
            dual_facets.append(full ^ m)
    return SimplicialComplex._from_masks(k.ground, sorted(dual_facets))


def _sigma_mask(k, sigma):
    sigma = frozenset(sigma)
    for v in sigma:
        if v not in k._bit:
            raise ValueError(f"vertex {v} is not in the ground set")
    return sigma, k._mask(sigma)


def link(k: SimplicialComplex, sigma):
    """Link of sigma; ground set drops sigma's vertices.

    Void when sigma is not a simplex (in particular for phantom vertices).
    """
    sigma, sm = _sigma_mask(k, sigma)
    ground = tuple(v for v in k.ground if v not in sigma)
    if not k._contains_mask(sm):
        return void_complex(ground)
    facets = [f - sigma for f in k.facets if sigma <= f]
    return SimplicialComplex.from_facet_candidates(ground, facets)


def star(k: SimplicialComplex, sigma):
    """Star of sigma: simplices whose union with sigma is still a simplex.

    Ground set unchanged; void when sigma is not a simplex.
    """
    sigma, sm = _sigma_mask(k, sigma)
    if not k._contains_mask(sm):
        return void_complex(k.ground)
    facets = [f for f in k.facets if sigma <= f]
    return SimplicialComplex.from_facet_candidates(k.ground, facets)


def deletion(k: SimplicialComplex, sigma):
    """Deletion of sigma: simplices not containing sigma.  Ground set unchanged."""
    sigma, sm = _sigma_mask(k, sigma)
    if k.is_void:
        return void_complex(k.ground)
    if not sigma:
        # no simplex avoids the empty set
        return void_complex(k.ground)
    candidates = []
    for f in k.facets:
        if sigma <= f:
            candidates.extend(f - {v} for v in sigma)
        else:
            candidates.append(f)
    return SimplicialComplex.from_facet_candidates(k.ground, candidates)


def join(k1: SimplicialComplex, k2: SimplicialComplex):
    """Join: unions of a simplex from each; requires disjoint ground sets."""
    if set(k1.ground) & set(k2.ground):
        raise ValueError("join requires disjoint ground sets")
    ground = k1.ground + k2.ground
    facets = [f1 | f2 for f1 in k1.facets for f2 in k2.facets]
    # facets of a join of facet pairs are automatically maximal
    return SimplicialComplex(ground, facets)


def skeleton(k: SimplicialComplex, d):
    """Subcomplex of simplices with at most d+1 vertices."""
    if d < 0:
        raise ValueError(f"skeleton needs d >= 0, got {d}")
    if k.is_void:
        return void_complex(k.ground)
    facets = set()
    for f in k.facets:
        if len(f) <= d + 1:
            facets.add(f)
        else:
            facets.update(map(frozenset, combinations(sorted(f), d + 1)))
    return SimplicialComplex(k.ground, facets)


def is_skeleton_full(k: SimplicialComplex, d):
    """Is every (d+1)-subset of the ground set a simplex?

    Fullness of the d-skeleton certifies that the complex is (d-1)-connected.
    """
    if d < 0:
        return not k.is_void
    fmasks = k.facet_masks()
    bits = [1 << i for i in range(len(k.ground))]
    for combo in combinations(bits, d + 1):
        m = 0
        for b in combo:
            m |= b
        if not any(m & ~f == 0 for f in fmasks):
            return False
    return True


def nerve(cover):
    """Nerve of a cover: piece i becomes vertex i; a set of pieces spans a
    simplex iff their intersection contains a non-empty simplex."""
    pieces = cover.pieces if isinstance(cover, Cover) else Cover(cover).pieces
    m = len(pieces)
    if m > 20:
        raise SizeCapError("nerve capped at 20 cover pieces")
    # a family of pieces shares a non-empty simplex iff it shares a vertex
    supports = []
    for p in pieces:
        s = 0
        for f in p.facet_masks():
            s |= f
        supports.append(s)
    qualifying = []
    for subset in range(1, 1 << m):
        inter = ~0
        mm = subset
        while mm:
            low = mm & -mm
            mm ^= low
            inter &= supports[low.bit_length() - 1]
            if not inter:
                break
        if inter:
            qualifying.append(subset)
    ground = range(1, m + 1)
    if not qualifying:
        return empty_simplex_complex(ground)
    return SimplicialComplex._from_masks(
        ground, _prune_to_maximal(qualifying), simplices=[0] + qualifying
    )


def complex_union(k1: SimplicialComplex, k2: SimplicialComplex):
    """Union of simplex sets; complexes must share a ground set."""
    if k1.ground != k2.ground:
        raise ValueError("union requires a shared ground set")
    return SimplicialComplex.from_facet_candidates(
        k1.ground, list(k1.facets) + list(k2.facets)
    )


def complex_intersection(k1: SimplicialComplex, k2: SimplicialComplex):
    """Intersection of simplex sets; complexes must share a ground set."""
    if k1.ground != k2.ground:
        raise ValueError("intersection requires a shared ground set")
    if k1.is_void or k2.is_void:
        return void_complex(k1.ground)
    masks = [f1 & f2 for f1 in k1.facet_masks() for f2 in k2.facet_masks()]
    return SimplicialComplex._from_masks(k1.ground, _prune_to_maximal(masks))


def relabel_complex(k: SimplicialComplex, mapping):
    """Push a complex through an injective vertex relabelling.

    ``mapping`` is a dict or callable old label -> new label.
    """
    f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
    new_ground = [f(v) for v in k.ground]
    if len(set(new_ground)) != len(new_ground):
        raise ValueError("relabelling must be injective")
    facets = [frozenset(f(v) for v in fac) for fac in k.facets]
    if k.is_void:
        return void_complex(new_ground)
    return SimplicialComplex(new_ground, facets)


# -- serialization ---------------------------------------------------------------


def complex_to_json(k: SimplicialComplex):
    return {
        "ground": list(k.ground),
        "facets": sorted([sorted(f) for f in k.facets]),
        "void": k.is_void,
    }


def complex_from_json(obj):
    if not isinstance(obj, dict):
        raise ValueError(f"complex JSON must be an object, got {type(obj).__name__}")
    for field in ("ground", "facets", "void"):
        if field not in obj:
            raise ValueError(f'complex JSON is missing the "{field}" field')
    ground = obj["ground"]
    if not isinstance(ground, list) or not all(isinstance(v, int) for v in ground):
        raise ValueError('"ground" must be a list of integers')
    if obj["void"]:
        if obj["facets"]:
            raise ValueError("a void complex cannot list facets")
        return void_complex(ground)
    facets = obj["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ValueError('"facets" must be a list of vertex lists')
    return SimplicialComplex(ground, [frozenset(f) for f in facets])
