"""Braided symmetrizers on multidegree blocks of the tensor algebra."""

from __future__ import annotations

from ..braiding import BraidingMatrix
from ..scalar import LaurentScalar, _zeta_powers, _vadd, _vis_zero, _vscale
from .words import WordVector, words_of_degree

__all__ = ["symmetrizer_block", "symmetrizer_columns", "symmetrize", "in_kernel"]

# Entries are first accumulated in the group ring Z[Z/N x Z^p]: a dict from
# (torsion, *exps) keys to integer multiplicities.  That avoids field
# arithmetic in the inner loop; conversion happens once per entry.


def _key_mul(a: tuple, b: tuple, order: int) -> tuple:
    t = (a[0] + b[0]) % order if order else 0
    return (t,) + tuple(x + y for x, y in zip(a[1:], b[1:]))


def _to_laurent(ctx, ring: dict) -> LaurentScalar:
    powers = _zeta_powers(ctx.order)
    terms: dict = {}
    for key, mult in ring.items():
        if not mult:
            continue
        vec = _vscale(powers[key[0]], mult)
        e = key[1:]
        terms[e] = _vadd(terms[e], vec) if e in terms else vec
    return LaurentScalar._raw(ctx, {e: c for e, c in terms.items() if not _vis_zero(c)})


def symmetrizer_columns(q: BraidingMatrix, d) -> tuple[list, dict]:
    """``S_m(w)`` for every word ``w`` of degree ``d``, as group-ring dicts.

    Uses ``S_m = (id (x) S_{m-1}) S_{1,m-1}``: ``S_{1,m-1}`` moves letter
    ``a_k`` to the front, picking up ``prod_{l<k} q_{a_k a_l}^-1``.
    """
    n, order = q.rank, q.ctx.order
    inv = [[(u.torsion,) + u.exps for u in (q[a, b].inverse() for b in range(n))] for a in range(n)]
    one = (0,) * (1 + q.ctx.nparams)
    memo: dict = {(): {(): {one: 1}}}

    def S(word: tuple) -> dict:
        hit = memo.get(word)
        if hit is not None:
            return hit
        out: dict = {}
        # prefix[b] = prod_{l<k} q_{b, a_l}^-1
        prefix = [one] * n
        for k, a in enumerate(word):
            scalar = prefix[a]
            rest = S(word[:k] + word[k + 1 :])
            for w, ring in rest.items():
                target = out.setdefault((a,) + w, {})
                for key, mult in ring.items():
                    kk = _key_mul(key, scalar, order)
                    target[kk] = target.get(kk, 0) + mult
            prefix = [_key_mul(prefix[b], inv[b][a], order) for b in range(n)]
        memo[word] = out
        return out

    basis = words_of_degree(d)
    return basis, {w: S(w) for w in basis}


def symmetrizer_block(q: BraidingMatrix, d) -> list[list[LaurentScalar]]:
    """Matrix of ``S_m`` on the degree-``d`` block in the lexicographic word basis.

    Entry ``[r][c]`` is the coefficient of word ``r`` in ``S_m(word c)``.
    """
    basis, cols = symmetrizer_columns(q, d)
    zero = LaurentScalar.zero(q.ctx)
    return [
        [_to_laurent(q.ctx, cols[c][r]) if r in cols[c] else zero for c in basis]
        for r in basis
    ]


def symmetrize(q: BraidingMatrix, v: WordVector) -> WordVector:
    """``S_m(v)`` for a homogeneous vector ``v``."""
    basis, cols = symmetrizer_columns(q, v.degree)
    out: dict = {}
    for w, c in v.terms.items():
        for r, ring in cols[w].items():
            p = _to_laurent(q.ctx, ring) * c
            s = out[r] + p if r in out else p
            if s:
                out[r] = s
            else:
                out.pop(r, None)
    return WordVector(q.ctx, v.degree, out)


def in_kernel(q: BraidingMatrix, v: WordVector) -> bool:
    """Whether ``v`` vanishes in the Nichols algebra."""
    return not symmetrize(q, v)
