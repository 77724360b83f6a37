"""Homogeneous elements of the tensor algebra and the operators acting on them.

A word is a tuple of 0-based letter indices; ``(0, 1)`` is ``x_1 x_2``.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Mapping

from ..braiding import BraidingMatrix
from ..scalar import LaurentScalar, UnitMonomial, embed

__all__ = [
    "WordVector",
    "words_of_degree",
    "degree_of",
    "braiding_inverse_swap",
    "braiding_swap",
    "ad_power",
    "skew_diff",
    "pairing",
    "act_scalar",
]


def degree_of(word, n: int) -> tuple[int, ...]:
    d = [0] * n
    for a in word:
        d[a] += 1
    return tuple(d)


def words_of_degree(d) -> list[tuple[int, ...]]:
    """All words of multidegree ``d`` in lexicographic order."""
    letters = [a for a, k in enumerate(d) for _ in range(k)]
    return sorted(set(permutations(letters)))


class WordVector:
    """Linear combination of words of one multidegree over Laurent scalars."""

    __slots__ = ("ctx", "degree", "terms")

    def __init__(self, ctx, degree, terms: Mapping[tuple, LaurentScalar] | None = None):
        self.ctx = ctx
        self.degree = tuple(degree)
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if degree_of(w, len(self.degree)) != self.degree:
                raise ValueError(f"word {w} does not have degree {self.degree}")
            if c.ctx != ctx:
                raise ValueError("coefficient context mismatch")
            if c:
                clean[w] = clean[w] + c if w in clean else c
                if not clean[w]:
                    del clean[w]
        self.terms = clean

    @classmethod
    def word(cls, ctx, n: int, word, coefficient: LaurentScalar | None = None) -> WordVector:
        word = tuple(word)
        c = LaurentScalar.one(ctx) if coefficient is None else coefficient
        return cls(ctx, degree_of(word, n), {word: c})

    @classmethod
    def zero(cls, ctx, degree) -> WordVector:
        return cls(ctx, degree)

    @property
    def rank(self) -> int:
        return len(self.degree)

    @property
    def length(self) -> int:
        return sum(self.degree)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _same(self, other: WordVector) -> None:
        if other.ctx != self.ctx or other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: WordVector) -> WordVector:
        self._same(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out[w] + c if w in out else c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return WordVector._raw(self.ctx, self.degree, out)

    def __neg__(self) -> WordVector:
        return WordVector._raw(self.ctx, self.degree, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: WordVector) -> WordVector:
        return self + (-other)

    def scale(self, c) -> WordVector:
        """Multiply every coefficient by a Laurent scalar, monomial or integer."""
        if isinstance(c, UnitMonomial):
            return WordVector._raw(
                self.ctx, self.degree, {w: v.times_monomial(c) for w, v in self.terms.items()}
            )
        out = {}
        for w, v in self.terms.items():
            p = v * c
            if p:
                out[w] = p
        return WordVector._raw(self.ctx, self.degree, out)

    def concat(self, other: WordVector) -> WordVector:
        """Product in the tensor algebra."""
        deg = tuple(a + b for a, b in zip(self.degree, other.degree))
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                p = c1 * c2
                s = out[w] + p if w in out else p
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return WordVector._raw(self.ctx, deg, out)

    def coefficient(self, word) -> LaurentScalar:
        return self.terms.get(tuple(word), LaurentScalar.zero(self.ctx))

    @classmethod
    def _raw(cls, ctx, degree, terms) -> WordVector:
        obj = cls.__new__(cls)
        obj.ctx, obj.degree, obj.terms = ctx, degree, terms
        return obj

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordVector):
            return NotImplemented
        return self.ctx == other.ctx and self.degree == other.degree and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            name = "".join(f"x{a + 1}" for a in w) or "1"
            parts.append(f"({self.terms[w]})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


def _sum(ctx, degree, items: Iterable[tuple[tuple, LaurentScalar]]) -> WordVector:
    out: dict = {}
    for w, c in items:
        s = out[w] + c if w in out else c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return WordVector._raw(ctx, tuple(degree), out)


def act_scalar(q: BraidingMatrix, i: int, degree, side: str = "g") -> UnitMonomial:
    """Scalar by which ``g_i`` (``prod_l q_il^d_l``) or ``e_i`` (``prod_l q_li^d_l``) acts."""
    out = q.ctx.one()
    for l, k in enumerate(degree):
        if k:
            out = out * (q[i, l] if side == "g" else q[l, i]) ** k
    return out


def braiding_inverse_swap(q: BraidingMatrix, v: WordVector, position: int) -> WordVector:
    """``sigma^-1`` on tensor slots ``position, position+1`` (1-based).

    ``x_j (x) x_m  ->  q_mj^-1 x_m (x) x_j``.
    """
    if not 1 <= position < v.length:
        raise IndexError(f"position {position} out of range for length {v.length}")
    p = position - 1
    items = []
    for w, c in v.terms.items():
        j, m = w[p], w[p + 1]
        items.append((w[:p] + (m, j) + w[p + 2 :], c.times_monomial(q[m, j].inverse())))
    return _sum(v.ctx, v.degree, items)


def braiding_swap(q: BraidingMatrix, v: WordVector, position: int) -> WordVector:
    """``sigma`` on slots ``position, position+1``: ``x_j (x) x_m -> q_jm x_m (x) x_j``."""
    if not 1 <= position < v.length:
        raise IndexError(f"position {position} out of range for length {v.length}")
    p = position - 1
    items = []
    for w, c in v.terms.items():
        j, m = w[p], w[p + 1]
        items.append((w[:p] + (m, j) + w[p + 2 :], c.times_monomial(q[j, m])))
    return _sum(v.ctx, v.degree, items)


def ad_power(q: BraidingMatrix, i: int, j: int, m: int) -> WordVector:
    """``(ad x_i)^m (x_j)`` in the free algebra, ``ad x_i(r) = x_i r - (g_i . r) x_i``."""
    if i == j:
        raise ValueError("ad_power needs i != j")
    if m < 0:
        raise ValueError("m must be >= 0")
    n, ctx = q.rank, q.ctx
    v = WordVector.word(ctx, n, (j,))
    xi = WordVector.word(ctx, n, (i,))
    for _ in range(m):
        g = act_scalar(q, i, v.degree)
        v = xi.concat(v) - v.concat(xi).scale(g)
    return v


def skew_diff(q: BraidingMatrix, side: str, i: int, v: WordVector) -> WordVector:
    """Left or right skew derivative ``d_i``.

    Unrolling the Leibniz rules with ``d_i(x_j) = delta_ij`` gives, on a word
    ``a_1 ... a_m``,

    * left:  ``sum_k delta(i, a_k) prod_{l<k} q_{i,a_l}^-1  a_1..^a_k..a_m``
    * right: ``sum_k delta(i, a_k) prod_{l>k} q_{a_l,i}^-1  a_1..^a_k..a_m``
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    n = q.rank
    # for a vector without the letter x_i this is the zero vector
    deg = tuple(x - (k == i) for k, x in enumerate(v.degree))
    left = side == "left"
    inv = [q[i, a].inverse() if left else q[a, i].inverse() for a in range(n)]
    items = []
    for w, c in v.terms.items():
        m = len(w)
        order = range(m) if left else range(m - 1, -1, -1)
        scalar = q.ctx.one()
        for k in order:
            a = w[k]
            if a == i:
                items.append((w[:k] + w[k + 1 :], c.times_monomial(scalar)))
            scalar = scalar * inv[a]
    return _sum(v.ctx, deg, items)


def pairing(q: BraidingMatrix, u: WordVector, v: WordVector) -> LaurentScalar:
    """``<u, v>``: for a word ``b_1..b_m`` of ``u`` apply ``d_b1 d_b2 ... d_bm``
    (left derivatives, ``d_bm`` first) to ``v`` and keep the constant part.
    """
    if u.ctx != v.ctx or u.degree != v.degree:
        raise ValueError(f"degree mismatch: {u.degree} vs {v.degree}")
    total = LaurentScalar.zero(q.ctx)
    for w, c in u.terms.items():
        x = v
        for a in reversed(w):
            x = skew_diff(q, "left", a, x)
            if not x:
                break
        if x:
            total = total + c * x.coefficient(())
    return total
