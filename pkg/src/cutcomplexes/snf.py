"""Exact Smith normal form over the integers.

The primary path is a sparse elimination on dict-of-rows with arbitrary
precision throughout.  Pivots are chosen by smallest nonzero absolute value,
tie-broken by minimal fill (nonzero count of the pivot row plus column), which
keeps coefficient growth and fill-in tame on boundary matrices.  A dense
textbook reduction and a fraction-free rank are kept as independent
cross-checks.

Eliminating a pivot clears its column with row operations; the column
operations that would clear the pivot row then touch only the pivot row
itself (its column is a singleton by that point), so the row is simply
retired and its value recorded.  The recorded diagonal is normalized into the
divisibility chain at the end, which is the Smith normal form of the diagonal
matrix the eliminations produced.
"""

from collections import defaultdict
from math import gcd


def _xgcd(a, b):
    """(g, x, y) with g = gcd(a, b) = x*a + y*b and g > 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _to_rows(matrix):
    """Copy input (sequence of row sequences, or dict-of-dicts) into dict-of-rows."""
    if isinstance(matrix, dict):
        return {r: dict(rv) for r, rv in matrix.items() if rv}
    rows = {}
    for i, row in enumerate(matrix):
        rv = {j: int(x) for j, x in enumerate(row) if x}
        if rv:
            rows[i] = rv
    return rows


def invariant_chain(values):
    """Normalize a diagonal multiset into invariant factors d1 | d2 | ... ."""
    ones = sum(1 for v in values if abs(v) == 1)
    rest = sorted(abs(v) for v in values if abs(v) != 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                a, b = rest[i], rest[j]
                if b % a:
                    g = gcd(a, b)
                    rest[i], rest[j] = g, a * b // g
                    changed = True
        rest.sort()
    return [1] * ones + rest


def smith_normal_form(matrix):
    """Invariant factors (d1 | d2 | ... | dr, all > 0) and rank r.

    ``matrix`` is a sequence of rows or a dict-of-rows mapping; the input is
    not modified.  The zero matrix yields ``([], 0)``.
    """
    diag = _eliminate(_to_rows(matrix))
    factors = invariant_chain(diag)
    return factors, len(factors)


def _eliminate(rows):
    """Sparse unimodular elimination; returns the diagonal values collected."""
    cols = defaultdict(set)
    for r, rv in rows.items():
        for c in rv:
            cols[c].add(r)

    row_nnz = {r: len(rv) for r, rv in rows.items()}
    col_nnz = {c: len(cv) for c, cv in cols.items()}
    rows_by_nnz = defaultdict(set)
    for r, k in row_nnz.items():
        rows_by_nnz[k].add(r)
    cols_by_nnz = defaultdict(set)
    for c, k in col_nnz.items():
        cols_by_nnz[k].add(c)
    # columns that contain at least one +-1 entry, with a per-column count
    col_units = defaultdict(int)
    unit_total = 0
    for r, rv in rows.items():
        for c, v in rv.items():
            if v == 1 or v == -1:
                col_units[c] += 1
                unit_total += 1

    def set_entry(r, c, value):
        """Write/clear one entry, maintaining every index."""
        nonlocal unit_total
        rv = rows[r]
        old = rv.get(c, 0)
        if old == value:
            return
        if (old == 1 or old == -1) and not (value == 1 or value == -1):
            col_units[c] -= 1
            unit_total -= 1
        elif (value == 1 or value == -1) and not (old == 1 or old == -1):
            col_units[c] += 1
            unit_total += 1
        if old == 0:
            rv[c] = value
            cols[c].add(r)
            rows_by_nnz[row_nnz[r]].discard(r)
            row_nnz[r] += 1
            rows_by_nnz[row_nnz[r]].add(r)
            cols_by_nnz[col_nnz.get(c, 0)].discard(c)
            col_nnz[c] = col_nnz.get(c, 0) + 1
            cols_by_nnz[col_nnz[c]].add(c)
        elif value == 0:
            del rv[c]
            cols[c].discard(r)
            rows_by_nnz[row_nnz[r]].discard(r)
            row_nnz[r] -= 1
            rows_by_nnz[row_nnz[r]].add(r)
            cols_by_nnz[col_nnz[c]].discard(c)
            col_nnz[c] -= 1
            cols_by_nnz[col_nnz[c]].add(c)
        else:
            rv[c] = value

    def row_axpy(i, q, pivot_items):
        """row_i += q * pivot_row."""
        for j, pv in pivot_items:
            set_entry(i, j, rows[i].get(j, 0) + q * pv)

    def retire_row(r):
        for j in list(rows[r]):
            set_entry(r, j, 0)
        rows_by_nnz[0].discard(r)
        del rows[r], row_nnz[r]

    def min_row_nnz():
        k = 1
        while True:
            bucket = rows_by_nnz.get(k)
            if bucket:
                return k
            k += 1
            if k > len(rows) + len(cols) + 2:
                return 1  # unreachable; defensive

    def pick_pivot():
        """Smallest |value|, tie-broken by minimal nnz(row) + nnz(col).

        The scan walks columns in increasing-nnz buckets and stops as soon as
        a candidate provably attains the minimum fill (its fill equals the
        current bucket size plus the global minimum row nnz), or after a
        bounded number of candidates once one has been found.
        """
        have_units = unit_total > 0
        target = 1 if have_units else min(
            abs(v) for rv in rows.values() for v in rv.values()
        )
        floor = min_row_nnz()
        best = None  # (fill, c, r)
        budget = 4096
        k = 1
        while True:
            if best is not None and k + floor >= best[0]:
                break
            bucket = cols_by_nnz.get(k)
            if bucket:
                for c in bucket:
                    if have_units and not col_units[c]:
                        continue
                    for r in cols[c]:
                        if abs(rows[r][c]) != target:
                            continue
                        fill = k + row_nnz[r]
                        if best is None or fill < best[0]:
                            best = (fill, c, r)
                            if fill <= k + floor:
                                return r, c
                    budget -= 1
                    if best is not None and budget <= 0:
                        return best[2], best[1]
            k += 1
            if k > len(rows) + 2:
                break
        _, c, r = best
        return r, c

    def reduce_pivot(r, c):
        """Make the pivot divide every entry in its row and column."""
        while True:
            v = rows[r][c]
            if v == 1 or v == -1:
                return
            bad = next((i for i in cols[c] if i != r and rows[i][c] % v), None)
            if bad is not None:
                a, b = v, rows[bad][c]
                g, x, y = _xgcd(a, b)
                combine_rows(r, bad, x, y, -(b // g), a // g)
                continue
            bad = next((j for j in rows[r] if j != c and rows[r][j] % v), None)
            if bad is not None:
                a, b = v, rows[r][bad]
                g, x, y = _xgcd(a, b)
                combine_cols(c, bad, x, y, -(b // g), a // g)
                continue
            return

    def combine_rows(r1, r2, x, y, z, w):
        """(row_r1, row_r2) <- (x*r1 + y*r2, z*r1 + w*r2); det(x w - y z) = +-1."""
        touched = set(rows[r1]) | set(rows[r2])
        for j in touched:
            a = rows[r1].get(j, 0)
            b = rows[r2].get(j, 0)
            set_entry(r1, j, x * a + y * b)
            set_entry(r2, j, z * a + w * b)

    def combine_cols(c1, c2, x, y, z, w):
        touched = set(cols[c1]) | set(cols[c2])
        for i in touched:
            a = rows[i].get(c1, 0)
            b = rows[i].get(c2, 0)
            set_entry(i, c1, x * a + y * b)
            set_entry(i, c2, z * a + w * b)

    diag = []
    while rows:
        r, c = pick_pivot()
        reduce_pivot(r, c)
        v = rows[r][c]
        pivot_items = list(rows[r].items())
        for i in list(cols[c]):
            if i != r:
                row_axpy(i, -(rows[i][c] // v), pivot_items)
        diag.append(abs(v))
        retire_row(r)
        # rows that became zero carry no further information
        for dead in list(rows_by_nnz.get(0, ())):
            rows_by_nnz[0].discard(dead)
            del rows[dead], row_nnz[dead]
    return diag


# -- independent reference implementations ------------------------------------


def smith_normal_form_dense(matrix):
    """Textbook dense reduction; same contract as smith_normal_form.

    Kept as an independent oracle for the sparse engine (and perfectly fine
    for small matrices).
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    top = 0
    while True:
        # find a pivot below/right of (top, top-ish)
        pivot = None
        for i in range(top, m):
            for j in range(n):
                if a[i][j]:
                    if pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        # hmm: column swap needs a stable target; use column `top` as home
        while True:
            v = a[top][top]
            moved = False
            for i in range(top + 1, m):
                if a[i][top] % v:
                    g, x, y = _xgcd(v, a[i][top])
                    z, w = -(a[i][top] // g), v // g
                    for j in range(n):
                        ai, at = a[i][j], a[top][j]
                        a[top][j] = x * at + y * ai
                        a[i][j] = z * at + w * ai
                    moved = True
                    v = a[top][top]
            for i in range(top + 1, m):
                q = a[i][top] // v
                if q:
                    for j in range(n):
                        a[i][j] -= q * a[top][j]
            for j in range(top + 1, n):
                if a[top][j] % v:
                    g, x, y = _xgcd(v, a[top][j])
                    z, w = -(a[top][j] // g), v // g
                    for i in range(m):
                        at, aj = a[i][top], a[i][j]
                        a[i][top] = x * at + y * aj
                        a[i][j] = z * at + w * aj
                    moved = True
                    v = a[top][top]
            for j in range(top + 1, n):
                q = a[top][j] // v
                if q:
                    for i in range(m):
                        a[i][j] -= q * a[i][top]
            if not moved and all(a[i][top] == 0 for i in range(top + 1, m)) and all(
                a[top][j] == 0 for j in range(top + 1, n)
            ):
                break
        diag.append(abs(a[top][top]))
        top += 1
        if top >= m or top >= n:
            break
    factors = invariant_chain(diag)
    return factors, len(factors)


def bareiss_rank(matrix):
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for i in range(row + 1, m):
            for j in range(col + 1, n):
                a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) // prev
            a[i][col] = 0
        prev = a[row][col]
        rank += 1
        row += 1
        if row == m:
            break
    return rank
