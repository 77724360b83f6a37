"""Exact scalars.

Two domains live here:

* :class:`UnitMonomial` -- elements ``z^a * t_1^e_1 * ... * t_p^e_p`` of the
  abelian group ``Z/N x Z^p``.  ``z`` is a fixed primitive ``N``-th root of
  unity and the ``t_k`` are algebraically independent transcendentals.  Every
  braiding constant is one of these.
* :class:`LaurentScalar` -- Laurent polynomials in the ``t_k`` with
  coefficients in the cyclotomic field ``Q(z)``.  Matrix entries of the
  brute-force oracle are of this kind.

``Q(z)`` is modelled by :class:`CycloRational`, a coefficient vector reduced
modulo the ``N``-th cyclotomic polynomial so that equality is syntactic.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import ContextMismatch, ParseError

__all__ = [
    "ScalarContext",
    "UnitMonomial",
    "CycloRational",
    "LaurentScalar",
    "cyclotomic_polynomial",
    "euler_phi",
    "multiplicative_order",
    "is_qnumber_zero",
    "embed",
    "parse_monomial",
]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_FACTOR_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^([+-]?\d+))?\Z")


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list, list]:
    """Long division of integer polynomials (coefficients low -> high)."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c == 0:
            continue
        if c % lead:
            c = Fraction(c, lead)
        else:
            c //= lead
        q[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    rem = num[: len(den) - 1]
    while rem and rem[-1] == 0:
        rem.pop()
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the ``n``-th cyclotomic polynomial.

    Computed by dividing ``x^n - 1`` by ``Phi_d`` for every proper divisor
    ``d`` of ``n``.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not rem, "x^n - 1 must be divisible by Phi_d"
    return tuple(int(c) for c in poly)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _field_dim(order: int) -> int:
    return 1 if order == 0 else euler_phi(order)


@lru_cache(maxsize=None)
def _zeta_powers(order: int) -> tuple[tuple[int, ...], ...]:
    """``z^k`` reduced modulo ``Phi_N`` for ``0 <= k < N``."""
    if order == 0:
        return ((1,),)
    phi = cyclotomic_polynomial(order)
    dim = len(phi) - 1
    out = []
    cur = [1] + [0] * (dim - 1)
    for _ in range(order):
        out.append(tuple(cur))
        # multiply by x and reduce with the monic Phi_N
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi)]
    return tuple(out)


@lru_cache(maxsize=None)
def reduction_norm(order: int) -> int:
    """Max l1-norm of ``z^k`` in the reduced basis over all ``k``.

    Bounds the coefficient growth caused by one reduced multiplication.
    """
    return max(sum(abs(c) for c in v) for v in _zeta_powers(order))


# coefficient vectors: tuples of rationals of length _field_dim(order)


def _vzero(dim: int) -> tuple:
    return (0,) * dim


def _vis_zero(a: Sequence) -> bool:
    return not any(a)


def _vadd(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _vneg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def _vscale(a: Sequence, c) -> tuple:
    return tuple(x * c for x in a)


def _vmul(a: Sequence, b: Sequence, order: int) -> tuple:
    dim = len(a)
    if dim == 1:
        return (a[0] * b[0],)
    powers = _zeta_powers(order)
    out = [0] * dim
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if not y:
                continue
            k = i + j
            if k < dim:
                out[k] += x * y
            else:
                xy = x * y
                for l, c in enumerate(powers[k % order]):
                    if c:
                        out[l] += c * xy
    return tuple(out)


def _vrot(a: Sequence, k: int, order: int) -> tuple:
    """Multiply a coefficient vector by ``z^k``."""
    if order <= 1 or k % order == 0:
        return tuple(a)
    if order == 2:
        return tuple(-x for x in a)
    return _vmul(a, _zeta_powers(order)[k % order], order)


def _qpoly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, d in enumerate(b):
            a[shift + i] -= c * d
        _qpoly_trim(a)
    return _qpoly_trim(q), a


def _vinv(a: Sequence, order: int) -> tuple:
    """Inverse in ``Q(z)`` by the extended Euclidean algorithm."""
    if _vis_zero(a):
        raise ZeroDivisionError("inverse of zero in Q(z)")
    dim = len(a)
    if dim == 1:
        return (Fraction(1) / a[0],)
    r0, r1 = list(cyclotomic_polynomial(order)), _qpoly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _qpoly_divmod(r0, r1)
        prod = _qpoly_mul(q, s1)
        s = _qpoly_trim(
            [
                (s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)
                for i in range(max(len(s0), len(prod)))
            ]
        )
        r0, r1 = r1, r
        s0, s1 = s1, s
    c = Fraction(1) / r1[0]
    inv = [x * c for x in s1] + [0] * dim
    _, rem = _qpoly_divmod(inv, list(cyclotomic_polynomial(order)))
    rem = rem + [0] * (dim - len(rem))
    return tuple(_normalize_number(x) for x in rem[:dim])


def _qpoly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _normalize_number(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


# ---------------------------------------------------------------------------
# context and unit monomials


@dataclass(frozen=True)
class ScalarContext:
    """Fixes the torsion order ``N`` of ``z`` and the parameter names.

    ``order == 0`` means no root of unity is available.
    """

    order: int = 0
    params: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        if not isinstance(self.order, int) or self.order < 0:
            raise ValueError(f"torsion order must be a nonnegative integer, got {self.order!r}")
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"duplicate parameter names in {self.params}")
        for name in self.params:
            if name == "z":
                raise ValueError('"z" is reserved for the root of unity')
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid parameter name {name!r}")

    @property
    def nparams(self) -> int:
        return len(self.params)

    @property
    def field_dim(self) -> int:
        """Degree of ``Q(z)`` over ``Q``."""
        return _field_dim(self.order)

    def one(self) -> UnitMonomial:
        return UnitMonomial(self, 0, (0,) * self.nparams)

    def zeta(self, power: int = 1) -> UnitMonomial:
        if self.order == 0:
            raise ValueError("z used without a declared torsion order")
        return UnitMonomial(self, power, (0,) * self.nparams)

    def param(self, name: str, power: int = 1) -> UnitMonomial:
        exps = [0] * self.nparams
        try:
            exps[self.params.index(name)] = power
        except ValueError:
            raise ValueError(f"unknown parameter {name!r}") from None
        return UnitMonomial(self, 0, tuple(exps))

    def monomial(self, torsion: int = 0, exps: Sequence[int] | None = None) -> UnitMonomial:
        if exps is None:
            exps = (0,) * self.nparams
        return UnitMonomial(self, torsion, tuple(exps))

    def parse(self, text: str) -> UnitMonomial:
        return parse_monomial(text, self)


@dataclass(frozen=True)
class UnitMonomial:
    """``z^torsion * prod t_k^exps[k]``, an element of ``Z/N x Z^p``."""

    ctx: ScalarContext
    torsion: int = 0
    exps: tuple[int, ...] = field(default=())

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if len(exps) != self.ctx.nparams:
            raise ValueError(
                f"expected {self.ctx.nparams} parameter exponents, got {len(exps)}"
            )
        object.__setattr__(self, "exps", exps)
        n = self.ctx.order
        if n == 0:
            if self.torsion != 0:
                raise ValueError("torsion exponent requires a positive order")
        else:
            object.__setattr__(self, "torsion", self.torsion % n)

    def _check(self, other: UnitMonomial) -> None:
        if not isinstance(other, UnitMonomial):
            raise TypeError(f"expected UnitMonomial, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    def __mul__(self, other: UnitMonomial) -> UnitMonomial:
        if not isinstance(other, UnitMonomial):
            return NotImplemented
        self._check(other)
        return UnitMonomial(
            self.ctx,
            self.torsion + other.torsion,
            tuple(a + b for a, b in zip(self.exps, other.exps)),
        )

    def __truediv__(self, other: UnitMonomial) -> UnitMonomial:
        if not isinstance(other, UnitMonomial):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int) -> UnitMonomial:
        k = int(k)
        return UnitMonomial(self.ctx, self.torsion * k, tuple(e * k for e in self.exps))

    def inverse(self) -> UnitMonomial:
        return self ** -1

    def is_one(self) -> bool:
        return self.torsion == 0 and not any(self.exps)

    @property
    def is_torsion(self) -> bool:
        """True when no free parameter occurs (the element has finite order)."""
        return not any(self.exps)

    def order(self) -> int | None:
        """Multiplicative order, or ``None`` when it is infinite."""
        if any(self.exps):
            return None
        n = self.ctx.order
        if n == 0:
            return 1
        return n // math.gcd(n, self.torsion)

    def __str__(self) -> str:
        parts = []
        if self.torsion:
            parts.append("z" if self.torsion == 1 else f"z^{self.torsion}")
        for name, e in zip(self.ctx.params, self.exps):
            if e:
                parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"UnitMonomial({self})"


def unit_mul(a: UnitMonomial, b: UnitMonomial) -> UnitMonomial:
    return a * b


def unit_inv(a: UnitMonomial) -> UnitMonomial:
    return a.inverse()


def unit_pow(a: UnitMonomial, k: int) -> UnitMonomial:
    return a ** k


def is_one(a: UnitMonomial) -> bool:
    return a.is_one()


def multiplicative_order(a: UnitMonomial) -> int | None:
    """Order of ``a``; ``None`` stands for infinite order."""
    return a.order()


def is_qnumber_zero(m: int, a: UnitMonomial) -> bool:
    """Whether ``[m]_a = 1 + a + ... + a^(m-1)`` vanishes (characteristic 0)."""
    if m < 1:
        raise ValueError("q-number index must be >= 1")
    d = a.order()
    return d is not None and d >= 2 and m % d == 0


def parse_monomial(text: str, ctx: ScalarContext) -> UnitMonomial:
    """Parse ``1`` or ``factor*factor*...`` with ``factor := atom[^int]``."""
    s = text.strip()
    if not s:
        raise ParseError("empty monomial")
    if s == "1":
        return ctx.one()
    result = ctx.one()
    for raw in s.split("*"):
        tok = raw.strip()
        m = _FACTOR_RE.match(tok)
        if not m:
            raise ParseError(f"malformed factor {tok!r} in monomial {text!r}")
        atom, exp = m.group(1), m.group(2)
        k = int(exp) if exp is not None else 1
        if atom == "z":
            if ctx.order == 0:
                raise ParseError('"z" used without a declared order')
            result = result * ctx.zeta(k)
        elif atom in ctx.params:
            result = result * ctx.param(atom, k)
        else:
            raise ParseError(f"unknown parameter {atom!r}")
    return result


# ---------------------------------------------------------------------------
# cyclotomic field elements


class CycloRational:
    """Element of ``Q(z)``, ``z`` a primitive ``order``-th root of unity.

    Stored as its coordinates in the basis ``1, z, ..., z^(phi(N)-1)``.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Rational]):
        dim = _field_dim(order)
        coeffs = list(coeffs)
        if len(coeffs) > dim:
            # reduce a longer polynomial in z
            red = [0] * dim
            for k, c in enumerate(coeffs):
                if c:
                    red = list(_vadd(red, _vscale(_vrot((1,) + (0,) * (dim - 1), k, order), c)))
            coeffs = red
        coeffs += [0] * (dim - len(coeffs))
        self.order = order
        self.coeffs = tuple(_normalize_number(c) for c in coeffs)

    @classmethod
    def zeta_power(cls, order: int, k: int) -> CycloRational:
        return cls(order, _zeta_powers(order)[k % order] if order else (1,))

    @classmethod
    def from_rational(cls, order: int, c: Rational) -> CycloRational:
        return cls(order, [c])

    def _check(self, other: CycloRational) -> None:
        if self.order != other.order:
            raise ContextMismatch(f"Q(z_{self.order}) vs Q(z_{other.order})")

    def __add__(self, other: CycloRational) -> CycloRational:
        self._check(other)
        return CycloRational(self.order, _vadd(self.coeffs, other.coeffs))

    def __sub__(self, other: CycloRational) -> CycloRational:
        self._check(other)
        return CycloRational(self.order, _vsub(self.coeffs, other.coeffs))

    def __neg__(self) -> CycloRational:
        return CycloRational(self.order, _vneg(self.coeffs))

    def __mul__(self, other: CycloRational) -> CycloRational:
        self._check(other)
        return CycloRational(self.order, _vmul(self.coeffs, other.coeffs, self.order))

    def inverse(self) -> CycloRational:
        return CycloRational(self.order, _vinv(self.coeffs, self.order))

    def __truediv__(self, other: CycloRational) -> CycloRational:
        return self * other.inverse()

    def is_zero(self) -> bool:
        return _vis_zero(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloRational):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"CycloRational({self.order}, {self.coeffs})"

    def __str__(self) -> str:
        return _format_cyclo(self.coeffs)


def _format_cyclo(coeffs: Sequence) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = "z"
        else:
            mono = f"z^{k}"
        if mono and c == 1:
            terms.append(mono)
        elif mono and c == -1:
            terms.append("-" + mono)
        elif mono:
            terms.append(f"{c}*{mono}")
        else:
            terms.append(str(c))
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# ---------------------------------------------------------------------------
# Laurent polynomials over Q(z)


class LaurentScalar:
    """Laurent polynomial in the context parameters with ``Q(z)`` coefficients.

    ``terms`` maps exponent tuples to coefficient vectors (see
    :class:`CycloRational`); zero coefficients are never stored.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: ScalarContext, terms: Mapping[tuple, Sequence] | None = None):
        self.ctx = ctx
        clean = {}
        if terms:
            dim = ctx.field_dim
            for exps, coef in terms.items():
                coef = tuple(coef)
                if len(coef) != dim:
                    raise ValueError(f"coefficient vector must have length {dim}")
                if not _vis_zero(coef):
                    clean[tuple(exps)] = coef
        self.terms = clean

    @classmethod
    def _raw(cls, ctx: ScalarContext, terms: dict) -> LaurentScalar:
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, ctx: ScalarContext) -> LaurentScalar:
        return cls._raw(ctx, {})

    @classmethod
    def one(cls, ctx: ScalarContext) -> LaurentScalar:
        return cls.constant(ctx, 1)

    @classmethod
    def constant(cls, ctx: ScalarContext, c: Rational) -> LaurentScalar:
        if not c:
            return cls.zero(ctx)
        coef = (c,) + (0,) * (ctx.field_dim - 1)
        return cls._raw(ctx, {(0,) * ctx.nparams: coef})

    @classmethod
    def from_monomial(cls, u: UnitMonomial, coefficient: Rational = 1) -> LaurentScalar:
        ctx = u.ctx
        if not coefficient:
            return cls.zero(ctx)
        base = _zeta_powers(ctx.order)[u.torsion] if ctx.order else (1,)
        return cls._raw(ctx, {u.exps: _vscale(base, coefficient)})

    def _check(self, other: LaurentScalar) -> None:
        if not isinstance(other, LaurentScalar):
            raise TypeError(f"expected LaurentScalar, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: LaurentScalar) -> LaurentScalar:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            if prev is None:
                out[e] = c
            else:
                s = _vadd(prev, c)
                if _vis_zero(s):
                    del out[e]
                else:
                    out[e] = s
        return LaurentScalar._raw(self.ctx, out)

    def __neg__(self) -> LaurentScalar:
        return LaurentScalar._raw(self.ctx, {e: _vneg(c) for e, c in self.terms.items()})

    def __sub__(self, other: LaurentScalar) -> LaurentScalar:
        return self + (-other)

    def __mul__(self, other) -> LaurentScalar:
        if isinstance(other, UnitMonomial):
            return self.times_monomial(other)
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentScalar.zero(self.ctx)
            return LaurentScalar._raw(
                self.ctx, {e: _vscale(c, other) for e, c in self.terms.items()}
            )
        self._check(other)
        order = self.ctx.order
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = _vmul(c1, c2, order)
                prev = out.get(e)
                out[e] = c if prev is None else _vadd(prev, c)
        return LaurentScalar._raw(
            self.ctx, {e: c for e, c in out.items() if not _vis_zero(c)}
        )

    __rmul__ = __mul__

    def times_monomial(self, u: UnitMonomial) -> LaurentScalar:
        """Product with a unit monomial (a cheap exponent shift)."""
        if u.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx} vs {u.ctx}")
        order = self.ctx.order
        out = {}
        for e, c in self.terms.items():
            out[tuple(a + b for a, b in zip(e, u.exps))] = _vrot(c, u.torsion, order)
        return LaurentScalar._raw(self.ctx, out)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == LaurentScalar.constant(self.ctx, other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms.items())))

    def coefficient(self, exps: Sequence[int]) -> CycloRational:
        c = self.terms.get(tuple(exps))
        return CycloRational(self.ctx.order, c if c is not None else _vzero(self.ctx.field_dim))

    def constant_term(self) -> CycloRational:
        return self.coefficient((0,) * self.ctx.nparams)

    def leading_exponent(self) -> tuple:
        return max(self.terms)

    def total_degree_span(self) -> int:
        if not self.terms:
            return 0
        return min(sum(abs(x) for x in e) for e in self.terms)

    def exact_div(self, other: LaurentScalar) -> LaurentScalar:
        """Quotient ``self / other``, which must lie in the Laurent ring.

        Division by leading terms in lexicographic order; raises
        ``ArithmeticError`` if ``other`` does not divide ``self``.
        """
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentScalar.zero(self.ctx)
        order = self.ctx.order
        lead_e = max(other.terms)
        lead_inv = _vinv(other.terms[lead_e], order)
        low_bound = tuple(a - b for a, b in zip(min(self.terms), min(other.terms)))
        rem = self
        quot: dict = {}
        while rem.terms:
            e = max(rem.terms)
            qe = tuple(a - b for a, b in zip(e, lead_e))
            if qe < low_bound:
                raise ArithmeticError("Laurent polynomial is not divisible")
            qc = _vmul(rem.terms[e], lead_inv, order)
            quot[qe] = qc
            step = LaurentScalar._raw(self.ctx, {qe: qc})
            rem = rem - step * other
        return LaurentScalar._raw(self.ctx, quot)

    def l1_norm(self) -> Rational:
        return sum(abs(x) for c in self.terms.values() for x in c)

    def __repr__(self) -> str:
        return f"LaurentScalar({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            coef = _format_cyclo(self.terms[e])
            mono = "*".join(
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.ctx.params, e)
                if k
            )
            if not mono:
                parts.append(f"({coef})" if " " in coef else coef)
            elif coef in ("1", "-1"):
                parts.append(coef[:-1] + mono)
            else:
                parts.append(f"({coef})*{mono}" if " " in coef else f"{coef}*{mono}")
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def embed(u: UnitMonomial) -> LaurentScalar:
    """The unit ``u`` as a one-term Laurent polynomial."""
    return LaurentScalar.from_monomial(u)
