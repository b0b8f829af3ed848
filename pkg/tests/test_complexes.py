"""Complex construction: graph complexes, duality, link/star/deletion, join,
skeleta, nerve, and the facet representation's invariants."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutcomplexes import (
    Cover,
    Graph,
    SimplicialComplex,
    alexander_dual,
    bounded_independence_complex,
    complete,
    complete_multipartite,
    complex_from_json,
    complex_to_json,
    complex_union,
    cycle,
    deletion,
    disjoint_union,
    full_simplex,
    graph_power,
    is_skeleton_full,
    join,
    link,
    nerve,
    path,
    relabel_complex,
    simplex_boundary,
    skeleton,
    star,
    total_cut_complex,
    void_complex,
)
from cutcomplexes.complexes import empty_simplex_complex, independent_set_masks
from cutcomplexes.graphs import delete_vertices
from cutcomplexes.posets import compositions


def all_graphs_on(n):
    for bits in range(1 << (n * (n - 1) // 2)):
        edges = [
            e for i, e in enumerate(combinations(range(1, n + 1), 2)) if bits >> i & 1
        ]
        yield Graph(n, edges)


def random_graph(n, p, rng):
    return Graph(
        n, [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < p]
    )


ground_sets = st.integers(1, 8).map(lambda n: tuple(range(1, n + 1)))


@st.composite
def random_complexes(draw):
    ground = draw(ground_sets)
    n_facets = draw(st.integers(0, 6))
    facets = [
        draw(st.sets(st.sampled_from(ground), max_size=len(ground)))
        for _ in range(n_facets)
    ]
    return SimplicialComplex.from_facet_candidates(ground, facets)


# -- data model ------------------------------------------------------------------


def test_void_versus_empty_simplex():
    v = void_complex([1, 2])
    e = empty_simplex_complex([1, 2])
    assert v.is_void and not e.is_void
    assert v.dim() is None and e.dim() == -1
    assert not v.contains([]) and e.contains([])
    assert v != e


def test_constructor_rejects_nested_facets():
    with pytest.raises(ValueError, match="contained"):
        SimplicialComplex([1, 2, 3], [{1, 2}, {1}])
    with pytest.raises(ValueError, match="ground"):
        SimplicialComplex([1, 2], [{3}])


def test_membership_and_simplices():
    k = SimplicialComplex([1, 2, 3, 4], [{1, 2, 3}, {3, 4}])
    assert k.contains([1, 3]) and k.contains([]) and not k.contains([1, 4])
    assert k.simplices() == [
        (),
        (1,),
        (2,),
        (3,),
        (4,),
        (1, 2),
        (1, 3),
        (2, 3),
        (3, 4),
        (1, 2, 3),
    ]


@settings(max_examples=80, deadline=None)
@given(random_complexes())
def test_downward_closure(k):
    masks = set(k.simplex_masks())
    for m in masks:
        mm = m
        while mm:
            low = mm & -mm
            mm ^= low
            assert (m ^ low) in masks


# -- graph complex builders ---------------------------------------------------------


def test_total_cut_examples():
    k = total_cut_complex(cycle(4), 2)
    assert k.facets == frozenset({frozenset({1, 3}), frozenset({2, 4})})
    assert total_cut_complex(complete(3), 2).is_void
    c6 = total_cut_complex(cycle(6), 2)
    # C_6 has C(6,2) - 6 = 9 independent pairs
    assert len(c6.facets) == 9
    assert all(len(f) == 4 for f in c6.facets)
    with pytest.raises(ValueError):
        total_cut_complex(cycle(4), 1)


def test_bounded_independence_examples():
    k = bounded_independence_complex(cycle(5), 2)
    assert k.facets == frozenset(
        frozenset(e) for e in [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    )
    assert bounded_independence_complex(complete(4), 3) == full_simplex([1, 2, 3, 4])
    four_cycle = bounded_independence_complex(complete_multipartite(2, 2), 2)
    assert sorted(len(f) for f in four_cycle.facets) == [2, 2, 2, 2]
    with pytest.raises(ValueError):
        bounded_independence_complex(cycle(5), 0)


def test_filtrations_nest():
    # bounded independence complexes grow with d; total cut complexes shrink
    rng = random.Random(23)
    for _ in range(15):
        g = random_graph(rng.randint(4, 8), 0.5, rng)
        alpha = g.alpha_table()[(1 << g.n) - 1]
        for d in range(2, alpha + 1):
            lower = set(bounded_independence_complex(g, d).simplex_masks())
            upper = set(bounded_independence_complex(g, d + 1).simplex_masks())
            assert lower <= upper
            cut_hi = set(total_cut_complex(g, d).simplex_masks())
            if d + 1 <= alpha:
                cut_lo = set(total_cut_complex(g, d + 1).simplex_masks())
                assert cut_lo <= cut_hi


def test_degenerate_total_cut_is_empty_simplex_complex():
    # two isolated vertices: the only independent pair is everything, so the
    # complex is {emptyset} with both vertices phantom
    g = Graph(2, [])
    k = total_cut_complex(g, 2)
    assert k.facets == frozenset({frozenset()})
    assert not k.is_void


def test_builder_simplices_match_closure():
    # the builder's cached simplex list must agree with facet closure
    g = graph_power(cycle(9), 2)
    k = bounded_independence_complex(g, 3)
    rebuilt = SimplicialComplex(k.ground, k.facets)
    assert k.simplex_masks() == rebuilt.simplex_masks()


def test_independent_set_masks_counts():
    assert len(independent_set_masks(cycle(6), 2)) == 9
    assert len(independent_set_masks(cycle(13), 4)) == 182


# -- Alexander duality ----------------------------------------------------------------


def test_dual_edge_cases():
    assert alexander_dual(full_simplex([1, 2, 3])).is_void
    assert alexander_dual(void_complex([1, 2, 3])) == full_simplex([1, 2, 3])
    assert alexander_dual(empty_simplex_complex([1, 2, 3])) == simplex_boundary([1, 2, 3])
    with pytest.raises(ValueError):
        alexander_dual(void_complex([]))


def test_duality_identity_exhaustive_small():
    # dual(BI_d) equals the total cut complex, simplex for simplex
    for g in all_graphs_on(4):
        alpha = g.alpha_table()[(1 << g.n) - 1]
        for d in range(2, alpha + 1):
            assert alexander_dual(
                bounded_independence_complex(g, d)
            ) == total_cut_complex(g, d)


def test_duality_identity_random():
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(rng.randint(5, 9), rng.choice([0.3, 0.5, 0.7]), rng)
        alpha = g.alpha_table()[(1 << g.n) - 1]
        for d in range(2, alpha + 1):
            assert alexander_dual(
                bounded_independence_complex(g, d)
            ) == total_cut_complex(g, d)


@settings(max_examples=80, deadline=None)
@given(random_complexes())
def test_dual_involution(k):
    assert alexander_dual(alexander_dual(k)) == k


# -- link, star, deletion ---------------------------------------------------------------


def test_link_law_on_cycles():
    # the link of a vertex in the total cut complex is the total cut complex
    # of the graph without that vertex
    for n in range(4, 9):
        for d in (2, 3):
            g = cycle(n)
            k = total_cut_complex(g, d)
            for v in g.vertices():
                if not k.contains([v]):
                    continue
                sub = delete_vertices(g, [v])
                expected = relabel_complex(
                    total_cut_complex(sub, d),
                    {w: sub.original_label(w) for w in sub.vertices()},
                )
                assert link(k, [v]) == expected


def test_phantom_vertex_rules():
    # vertex 4 of this complex is phantom: present in the ground set only
    k = SimplicialComplex([1, 2, 3, 4], [{1, 2}, {2, 3}])
    assert star(k, [4]).is_void
    assert link(k, [4]).is_void
    assert deletion(k, [4]) == k
    with pytest.raises(ValueError):
        link(k, [9])


def test_link_star_deletion_shapes():
    k = SimplicialComplex([1, 2, 3, 4], [{1, 2, 3}, {3, 4}])
    assert link(k, [3]) == SimplicialComplex([1, 2, 4], [{1, 2}, {4}])
    assert star(k, [4]) == SimplicialComplex([1, 2, 3, 4], [{3, 4}])
    assert deletion(k, [3]) == SimplicialComplex([1, 2, 3, 4], [{1, 2}, {4}])
    assert deletion(k, [1, 2]) == SimplicialComplex([1, 2, 3, 4], [{1, 3}, {2, 3}, {3, 4}])


# -- join and skeleton ---------------------------------------------------------------------


def test_join_rules():
    k = SimplicialComplex([1, 2, 3], [{1, 2}, {2, 3}])
    unit = empty_simplex_complex([9])
    joined = join(k, unit)
    assert joined.facets == k.facets and 9 in joined.ground
    two_points = SimplicialComplex([1, 2], [{1}, {2}])
    other = SimplicialComplex([3, 4], [{3}, {4}])
    square = join(two_points, other)
    assert sorted(sorted(f) for f in square.facets) == [[1, 3], [1, 4], [2, 3], [2, 4]]
    assert join(void_complex([1]), other).is_void
    with pytest.raises(ValueError):
        join(k, SimplicialComplex([3, 5], [{3}]))


def test_skeleton_rules():
    k = full_simplex([1, 2, 3, 4])
    edges = skeleton(k, 1)
    assert len(edges.facets) == 6
    assert skeleton(k, k.dim()) == k
    # C(n+1, d+1) facets on the skeleton of a full simplex
    assert len(skeleton(full_simplex(range(1, 7)), 2).facets) == 20


def test_skeleton_fullness_examples():
    assert is_skeleton_full(bounded_independence_complex(cycle(7), 3), 1)
    c4 = total_cut_complex(cycle(4), 2)
    assert is_skeleton_full(c4, 0)
    assert not is_skeleton_full(c4, 1)  # {1,2} has complement {3,4}, an edge
    big = total_cut_complex(graph_power(cycle(11), 3), 2)
    assert is_skeleton_full(big, 2)


# -- nerve ------------------------------------------------------------------------------------


def test_nerve_of_tight_cycle_power_cover():
    g = graph_power(cycle(6), 2)
    k = total_cut_complex(g, 2)
    assert len(k.facets) == 3
    pieces = [SimplicialComplex(k.ground, [f]) for f in sorted(k.facets, key=sorted)]
    n = nerve(Cover(pieces))
    assert n == simplex_boundary([1, 2, 3])


def test_nerve_small_cases():
    one = SimplicialComplex([1, 2], [{1, 2}])
    assert nerve([one]) == full_simplex([1])
    a = SimplicialComplex([1, 2, 3, 4], [{1, 2}])
    b = SimplicialComplex([1, 2, 3, 4], [{3, 4}])
    assert nerve([a, b]) == SimplicialComplex([1, 2], [{1}, {2}])


def test_cover_covers():
    k = total_cut_complex(cycle(4), 2)
    pieces = [SimplicialComplex(k.ground, [f]) for f in k.facets]
    assert Cover(pieces).covers(k)
    assert not Cover(pieces[:1]).covers(k)


def test_cover_validation_and_nerve_cap():
    from cutcomplexes import SizeCapError

    with pytest.raises(ValueError, match="share"):
        Cover([full_simplex([1]), full_simplex([2])])
    with pytest.raises(ValueError, match="at least one"):
        Cover([])
    piece = SimplicialComplex([1, 2], [{1, 2}])
    with pytest.raises(SizeCapError):
        nerve([piece] * 21)


# -- disjoint union law ------------------------------------------------------------------------


def union_law_holds(components, d):
    """The bounded independence complex of a disjoint union is the union of
    joins indexed by compositions of d + k - 1 into k parts."""
    g = disjoint_union(*components)
    whole = bounded_independence_complex(g, d)
    k = len(components)
    offsets = []
    base = 0
    for comp in components:
        offsets.append(base)
        base += comp.n

    from cutcomplexes.complexes import _bounded_independence

    pieces = []
    for comp_tuple in compositions(d + k - 1, k):
        parts = []
        for comp, dd, off in zip(components, comp_tuple, offsets):
            local = _bounded_independence(comp, dd)
            parts.append(relabel_complex(local, {v: v + off for v in comp.vertices()}))
        joined = parts[0]
        for p in parts[1:]:
            joined = join(joined, p)
        pieces.append(joined)
    union = pieces[0]
    for p in pieces[1:]:
        union = complex_union(union, p)
    return union.facets == whole.facets and union.ground == whole.ground


@pytest.mark.parametrize(
    "components,d",
    [
        ([path(2), path(3)], 2),
        ([path(2), path(3)], 3),
        ([path(3), path(3), path(2)], 2),
        ([path(3), path(3), path(2)], 3),
        ([path(2), path(2), path(4)], 4),
    ],
)
def test_disjoint_union_law(components, d):
    assert union_law_holds(components, d)


# -- serialization -------------------------------------------------------------------------------


def test_complex_json_round_trip():
    for k in [
        total_cut_complex(cycle(5), 2),
        void_complex([1, 2]),
        empty_simplex_complex([1, 2]),
    ]:
        assert complex_from_json(complex_to_json(k)) == k


def test_complex_json_validation():
    with pytest.raises(ValueError, match="missing"):
        complex_from_json({"ground": [1]})
    with pytest.raises(ValueError, match="void"):
        complex_from_json({"ground": [1], "facets": [[1]], "void": True})
