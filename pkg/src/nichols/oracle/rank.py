"""Exact rank of matrices over ``Q(z)[t_1^+-1, ..., t_p^+-1]``.

Two independent methods:

* :func:`laurent_rank` -- fraction-free (Bareiss) elimination directly on
  Laurent polynomial entries.  Simple, but slow on large blocks.
* :func:`evaluation_rank` -- a certified specialization.  Rows are shifted
  to polynomials, the parameters are packed into one variable ``s`` by a
  Kronecker substitution, and ``s`` is set to an integer ``T`` that is too
  large to be a root of any nonzero minor.  The resulting matrix over
  ``Z[z]`` is expanded into its regular representation over ``Z`` and
  ranked by integer Bareiss.

Why ``T`` is safe: let ``f(s)`` be a nonzero minor of size ``r``.  Its
coefficients lie in ``Z[z]`` and have l1-norm (in the power basis) at most
``H = C^r * prod(row l1-norms)``, where ``C`` bounds the l1-norm of any
reduced power of ``z``.  Some embedding ``z -> complex`` sends the leading
coefficient to absolute value ``>= 1`` (its norm is a nonzero integer), and
every coefficient to absolute value ``<= H``.  By Cauchy's bound every root
of that conjugate of ``f`` has absolute value ``< 1 + H``, so ``f(H + 2)`` is
nonzero.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int

from ..scalar import LaurentScalar, _vmul, _zeta_powers, reduction_norm

__all__ = ["integer_rank", "evaluation_rank", "laurent_rank", "matrix_rank"]


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix (Bareiss, exact division)."""
    A = [[mpz(x) for x in r] for r in rows if any(r)]
    if not A:
        return 0
    nrows, ncols = len(A), len(A[0])
    rank, prev = 0, mpz(1)
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][c]
        prow = A[rank]
        for r in range(rank + 1, nrows):
            row = A[r]
            f = row[c]
            if f:
                for k in range(c + 1, ncols):
                    row[k] = (p * row[k] - f * prow[k]) // prev
            else:
                for k in range(c + 1, ncols):
                    row[k] = (p * row[k]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _row_polynomials(ctx, row: Sequence[LaurentScalar]) -> list[dict] | None:
    """Shift a row to nonnegative exponents and clear denominators."""
    exps = [e for x in row for e in x.terms]
    if not exps:
        return None
    lo = tuple(min(e[k] for e in exps) for k in range(ctx.nparams))
    den = 1
    for x in row:
        for c in x.terms.values():
            for v in c:
                if isinstance(v, Fraction):
                    den = math.lcm(den, v.denominator)
    out = []
    for x in row:
        out.append(
            {
                tuple(a - b for a, b in zip(e, lo)): tuple(int(v * den) for v in c)
                for e, c in x.terms.items()
            }
        )
    return out


def _regular_block(vec: Sequence[int], order: int, dim: int) -> list[list[int]]:
    """Matrix of multiplication by ``vec`` in the basis ``1, z, ..., z^(dim-1)``."""
    if dim == 1:
        return [[vec[0]]]
    powers = _zeta_powers(order)
    cols = [_vmul(vec, powers[k], order) for k in range(dim)]
    return [[cols[k][r] for k in range(dim)] for r in range(dim)]


def evaluation_rank(M: Sequence[Sequence[LaurentScalar]]) -> int:
    """Rank over the fraction field, by certified integer specialization."""
    if not M or not M[0]:
        return 0
    ctx = M[0][0].ctx
    order, dim, p = ctx.order, ctx.field_dim, ctx.nparams
    rows = [r for r in (_row_polynomials(ctx, row) for row in M) if r is not None]
    if not rows:
        return 0
    size = min(len(rows), len(M[0]))
    # Kronecker weights: t_k -> s^w_k, injective on exponents of any minor
    degs = [max((e[k] for r in rows for x in r for e in x), default=0) for k in range(p)]
    weights, w = [], 1
    for k in range(p):
        weights.append(w)
        w *= size * degs[k] + 1
    H = reduction_norm(order) ** size if dim > 1 else 1
    for r in rows:
        H *= sum(abs(v) for x in r for c in x.values() for v in c)
    T = mpz(H + 2)
    big = []
    for r in rows:
        vals = []
        for x in r:
            acc = [mpz(0)] * dim
            for e, c in x.items():
                scale = T ** sum(a * b for a, b in zip(e, weights))
                for k, v in enumerate(c):
                    if v:
                        acc[k] += v * scale
            vals.append(acc)
        blocks = [_regular_block(v, order, dim) for v in vals]
        for rr in range(dim):
            big.append([b[rr][cc] for b in blocks for cc in range(dim)])
    qrank = integer_rank(big)
    assert qrank % dim == 0
    return qrank // dim


def laurent_rank(M: Sequence[Sequence[LaurentScalar]]) -> int:
    """Rank by Bareiss elimination in the Laurent ring.

    Pivot: a nonzero entry of the column with fewest terms, ties broken by
    lowest total degree.
    """
    A = [list(r) for r in M]
    if not A or not A[0]:
        return 0
    ctx = A[0][0].ctx
    nrows, ncols = len(A), len(A[0])
    rank = 0
    prev = LaurentScalar.one(ctx)

    def cost(x: LaurentScalar) -> tuple:
        return len(x), x.total_degree_span()

    for c in range(ncols):
        cands = [r for r in range(rank, nrows) if A[r][c]]
        if not cands:
            continue
        piv = min(cands, key=lambda r: cost(A[r][c]))
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][c]
        prow = A[rank]
        for r in range(rank + 1, nrows):
            row = A[r]
            f = row[c]
            for k in range(c + 1, ncols):
                num = p * row[k] - f * prow[k] if f else p * row[k]
                row[k] = num.exact_div(prev)
            row[c] = LaurentScalar.zero(ctx)
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def matrix_rank(M, method: str = "evaluate") -> int:
    if method == "evaluate":
        return evaluation_rank(M)
    if method == "laurent":
        return laurent_rank(M)
    raise ValueError(f"unknown rank method {method!r}")
