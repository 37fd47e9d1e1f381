"""Exact linear algebra for small dense integer matrices.

Matrices are lists of rows of Python ints, so intermediate growth is
harmless.  The routines here are sized for chain complexes whose strata
rarely exceed a few dozen states: clarity and exactness beat asymptotic
cleverness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SNFResult:
    """Outcome of a Smith normal form computation.

    ``invariant_factors`` lists the diagonal entries that exceed 1, each
    dividing the next.  When transforms are requested, ``left`` and
    ``right`` are unimodular with ``left @ M @ right`` diagonal.
    """

    rank: int
    invariant_factors: tuple
    diagonal: tuple
    left: tuple = None
    right: tuple = None


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _sparse_unit_reduce(mat, m, n):
    """Clear every +-1 pivot by unimodular row and column operations.

    Deleting a unit pivot's row and column is the usual chain-complex
    reduction: it contributes a 1 to the diagonal and leaves the other
    invariant factors alone.  Returns ``(units, rows)`` with the
    remaining block as sparse row dicts; on the sparse differentials this
    package produces, the remainder is tiny.
    """
    rows = {}
    cols = {}
    for r in range(m):
        src = mat[r]
        rd = {c: src[c] for c in range(n) if src[c]}
        if rd:
            rows[r] = rd
            for c in rd:
                cols.setdefault(c, set()).add(r)
    units = 0
    work = list(rows)
    while work:
        r0 = work.pop()
        rd0 = rows.get(r0)
        if rd0 is None:
            continue
        c0 = next((c for c, x in rd0.items() if x == 1 or x == -1), None)
        if c0 is None:
            continue
        x0 = rd0[c0]
        del rows[r0]
        for c in rd0:
            cols[c].discard(r0)
        for r in list(cols.get(c0, ())):
            rd = rows.get(r)
            if rd is None or c0 not in rd:
                continue
            f = rd[c0] * x0
            for c, x in rd0.items():
                v = rd.get(c, 0) - f * x
                if v:
                    if c not in rd:
                        cols.setdefault(c, set()).add(r)
                    rd[c] = v
                elif c in rd:
                    del rd[c]
                    cols[c].discard(r)
            if rd:
                work.append(r)
            else:
                del rows[r]
        cols.pop(c0, None)
        units += 1
    return units, rows


def smith_normal_form(mat, nrows=None, ncols=None, transforms=False):
    """Smith normal form of an integer matrix.

    ``mat`` is a list of rows; pass ``nrows``/``ncols`` explicitly when a
    dimension is zero.  Without transforms, unit pivots are first
    stripped sparsely and only the small remainder goes through dense
    reduction.
    """
    m = nrows if nrows is not None else len(mat)
    n = ncols if ncols is not None else (len(mat[0]) if mat else 0)
    if not transforms and m and n:
        units, rows = _sparse_unit_reduce(mat, m, n)
        live = sorted({c for rd in rows.values() for c in rd})
        pos = {c: k for k, c in enumerate(live)}
        rem = [[0] * len(live) for _ in rows]
        for k, rd in enumerate(rows.values()):
            for c, x in rd.items():
                rem[k][pos[c]] = x
        res = _dense_snf(rem, len(rem), len(live), False)
        diag = (1,) * units + res.diagonal
        diag += (0,) * (min(m, n) - len(diag))
        return SNFResult(units + res.rank, res.invariant_factors, diag)
    return _dense_snf(mat, m, n, transforms)


def _dense_snf(mat, m, n, transforms):
    """Dense reduction: minimal-absolute-value pivots, divisibility of the
    trailing block enforced as soon as a pivot clears, so the diagonal
    comes out in invariant-factor order."""
    a = [list(row) for row in mat]
    assert len(a) == m and all(len(r) == n for r in a)
    U = _identity(m) if transforms else None
    V = _identity(n) if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        if not q:
            return
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        if U is not None:
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def addmul_col(dst, src, q):
        if not q:
            return
        for row in a:
            row[dst] += q * row[src]
        if V is not None:
            for row in V:
                row[dst] += q * row[src]

    t = 0
    while True:
        # locate the smallest nonzero entry in the trailing block
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            # clear the pivot column, then the pivot row, restarting whenever
            # a remainder smaller than the pivot shows up
            restart = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    addmul_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    addmul_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            # pivot must divide the whole trailing block
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            addmul_row(t, offender, 1)
        t += 1

    for i in range(t):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            if U is not None:
                U[i] = [-x for x in U[i]]

    diag = tuple(a[i][i] for i in range(min(m, n)))
    factors = tuple(d for d in diag if d > 1)
    return SNFResult(
        rank=t,
        invariant_factors=factors,
        diagonal=diag,
        left=tuple(map(tuple, U)) if transforms else None,
        right=tuple(map(tuple, V)) if transforms else None,
    )


def rank_int(mat, nrows=None, ncols=None):
    """Rank over the rationals (equal to the number of nonzero SNF entries)."""
    return smith_normal_form(mat, nrows, ncols).rank


def kernel_basis(mat, nrows, ncols):
    """An integer basis of the kernel, as a list of length-``ncols`` vectors.

    The basis is saturated (spans the full rational kernel lattice)
    because it consists of columns of a unimodular matrix.
    """
    res = smith_normal_form(mat, nrows, ncols, transforms=True)
    return [[res.right[i][j] for i in range(ncols)] for j in range(res.rank, ncols)]


def image_basis(mat, nrows, ncols):
    """Integer vectors spanning the column space (not necessarily saturated)."""
    res = smith_normal_form(mat, nrows, ncols, transforms=True)
    out = []
    for j in range(res.rank):
        col = [sum(mat[i][k] * res.right[k][j] for k in range(ncols)) for i in range(nrows)]
        out.append(col)
    return out


def solve_int(mat, rhs, nrows, ncols):
    """One integer solution of ``mat @ x = rhs``, or ``None``."""
    res = smith_normal_form(mat, nrows, ncols, transforms=True)
    c = [sum(res.left[i][k] * rhs[k] for k in range(nrows)) for i in range(nrows)]
    y = [0] * ncols
    for i in range(nrows):
        d = res.diagonal[i] if i < len(res.diagonal) else 0
        if i < res.rank:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return [sum(res.right[i][k] * y[k] for k in range(ncols)) for i in range(ncols)]


def rank_mod_p(mat, p, nrows=None, ncols=None):
    """Rank over the prime field with ``p`` elements.

    Sparse elimination on row dicts; pivot columns are chosen smallest
    first for determinism.
    """
    m = nrows if nrows is not None else len(mat)
    n = ncols if ncols is not None else (len(mat[0]) if mat else 0)
    if not m or not n:
        return 0
    rows = []
    for src in mat:
        rd = {c: src[c] % p for c in range(n) if src[c] % p}
        if rd:
            rows.append(rd)
    rank = 0
    while rows:
        rd0 = rows.pop()
        c0 = min(rd0)
        inv = pow(rd0[c0], p - 2, p)
        rd0 = {c: (x * inv) % p for c, x in rd0.items()}
        rank += 1
        live = []
        for rd in rows:
            f = rd.get(c0)
            if f:
                for c, x in rd0.items():
                    v = (rd.get(c, 0) - f * x) % p
                    if v:
                        rd[c] = v
                    else:
                        rd.pop(c, None)
            if rd:
                live.append(rd)
        rows = live
    return rank


def mat_mul(a, b, n, k, m):
    """Product of an ``n x k`` and a ``k x m`` integer matrix."""
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


# ---------------------------------------------------------------------------
# rational elimination, used for induced maps on homology


def rref(rows, ncols):
    """Reduced row echelon form over the rationals.

    Returns ``(reduced_rows, pivot_columns)``; input rows may be ints or
    Fractions and are not modified.
    """
    a = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def solve_frac(columns, rhs):
    """Coordinates of ``rhs`` in the span of ``columns``, or ``None``.

    ``columns`` is a list of equal-length vectors; exact rational
    elimination on the augmented system.
    """
    if not columns:
        return [] if all(not x for x in rhs) else None
    n = len(columns[0])
    rows = [[Fraction(col[i]) for col in columns] + [Fraction(rhs[i])] for i in range(n)]
    red, pivots = rref(rows, len(columns) + 1)
    if len(columns) in pivots:
        return None
    sol = [Fraction(0)] * len(columns)
    for row, c in zip(red, pivots):
        sol[c] = row[-1]
    return sol
