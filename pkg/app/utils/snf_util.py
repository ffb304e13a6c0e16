"""Smith normal form over the integers with unimodular transforms.

Everything stays in Python ints, so intermediate coefficient growth never
overflows.
"""
from typing import List, Optional, Sequence, Tuple

from ..models.group_models import Matrix, SNFResult
from .log_util import setup_logger

logger = setup_logger()


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    """Exact product. ``ncols`` gives the column count of ``b`` when it has no rows."""
    inner = len(b)
    width = len(b[0]) if inner else (ncols or 0)
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(width)] for row in a]


def _find_pivot(d: Matrix, t: int) -> Optional[Tuple[int, int]]:
    """Smallest nonzero |entry| in the lower-right block, lowest (row, col) on ties."""
    best = None
    for i in range(t, len(d)):
        for j in range(t, len(d[i])):
            x = abs(d[i][j])
            if x and (best is None or x < best[0]):
                best = (x, i, j)
    return None if best is None else (best[1], best[2])


def _swap_rows(m: Matrix, i: int, j: int):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: Matrix, i: int, j: int):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: Matrix, src: int, dst: int, q: int):
    """row[dst] += q * row[src]"""
    m[dst] = [x + q * y for x, y in zip(m[dst], m[src])]


def _add_col(m: Matrix, src: int, dst: int, q: int):
    """col[dst] += q * col[src]"""
    for row in m:
        row[dst] += q * row[src]


def smith_normal_form(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SNFResult:
    """
    Diagonalizes an integer matrix.

    Args:
        a: integer matrix, given as rows. May be empty.
        ncols: column count, only needed when ``a`` has no rows.

    Returns:
        SNFResult with u·a·v = d, u and v unimodular, the diagonal nonnegative
        with d1 | d2 | ... and the zeros last.
    """
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    d = [[int(x) for x in row] for row in a]
    u = identity(m)
    v = identity(n)
    steps = 0

    for t in range(min(m, n)):
        while True:
            pivot = _find_pivot(d, t)
            if pivot is None:
                break
            i, j = pivot
            if i != t:
                _swap_rows(d, t, i)
                _swap_rows(u, t, i)
            if j != t:
                _swap_cols(d, t, j)
                _swap_cols(v, t, j)
            p = d[t][t]
            steps += 1

            clean = True
            for r in range(t + 1, m):
                q = d[r][t] // p
                if q:
                    _add_row(d, t, r, -q)
                    _add_row(u, t, r, -q)
                if d[r][t]:
                    clean = False
            for c in range(t + 1, n):
                q = d[t][c] // p
                if q:
                    _add_col(d, t, c, -q)
                    _add_col(v, t, c, -q)
                if d[t][c]:
                    clean = False
            if not clean:
                # a smaller remainder is now in row/column t
                continue

            # divisibility: fold an offending row into row t and go again
            offender = next(
                (r for r in range(t + 1, m) for c in range(t + 1, n) if d[r][c] % p),
                None)
            if offender is None:
                break
            _add_row(d, offender, t, 1)
            _add_row(u, offender, t, 1)

        if t < m and d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

    logger.debug(f'smith_normal_form {m}x{n}: {steps} pivot steps')
    return SNFResult(
        d=tuple(tuple(row) for row in d),
        u=tuple(tuple(row) for row in u),
        v=tuple(tuple(row) for row in v),
    )


def integer_kernel(a: Sequence[Sequence[int]], ncols: int) -> List[List[int]]:
    """Basis of {x in Z^ncols : a·x = 0}, read off the column transform of the SNF."""
    snf = smith_normal_form(a, ncols=ncols)
    rank = snf.rank
    return [[snf.v[r][c] for r in range(ncols)] for c in range(rank, ncols)]
