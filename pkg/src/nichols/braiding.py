"""Diagonal braiding matrices, their text format, and Cartan-type detection."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError
from .scalar import ScalarContext, UnitMonomial, parse_monomial

__all__ = [
    "BraidingMatrix",
    "CartanMatrix",
    "parse",
    "serialize",
    "sym_product",
    "cartan_entry",
    "is_cartan_type",
    "solve_power",
]

CartanMatrix = tuple  # tuple of row tuples of ints, a_ii = 2


@dataclass(frozen=True)
class BraidingMatrix:
    """Structure constants ``q_ij`` of a braiding of diagonal type.

    Indices are 0-based in the API and 1-based in the text format.
    """

    ctx: ScalarContext
    entries: tuple[tuple[UnitMonomial, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        n = len(rows)
        if n < 1:
            raise ValueError("rank must be at least 1")
        for r in rows:
            if len(r) != n:
                raise ValueError("braiding matrix must be square")
            for u in r:
                if not isinstance(u, UnitMonomial) or u.ctx != self.ctx:
                    raise ValueError("entries must be unit monomials in the matrix context")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, ctx: ScalarContext, rows: Iterable[Iterable]) -> BraidingMatrix:
        """Build from rows of monomials or monomial strings."""
        out = []
        for r in rows:
            out.append(tuple(x if isinstance(x, UnitMonomial) else parse_monomial(str(x), ctx) for x in r))
        return cls(ctx, tuple(out))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> UnitMonomial:
        i, j = ij
        return self.entries[i][j]

    def diagonal(self) -> tuple[UnitMonomial, ...]:
        return tuple(self.entries[i][i] for i in range(self.rank))

    def replace(self, i: int, j: int, value: UnitMonomial) -> BraidingMatrix:
        rows = [list(r) for r in self.entries]
        rows[i][j] = value
        return BraidingMatrix(self.ctx, tuple(tuple(r) for r in rows))

    def permuted(self, perm: Sequence[int]) -> BraidingMatrix:
        """Relabel generators: new index ``k`` is old index ``perm[k]``."""
        return BraidingMatrix(
            self.ctx,
            tuple(tuple(self.entries[perm[a]][perm[b]] for b in range(self.rank)) for a in range(self.rank)),
        )

    def transposed(self) -> BraidingMatrix:
        n = self.rank
        return BraidingMatrix(self.ctx, tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)))

    def key(self) -> tuple:
        """Hashable canonical form (entrywise exponents)."""
        return tuple((u.torsion, u.exps) for r in self.entries for u in r)

    def __str__(self) -> str:
        return serialize(self)


def _check_index(q: BraidingMatrix, *idx: int) -> None:
    for i in idx:
        if not 0 <= i < q.rank:
            raise IndexError(f"index {i} out of range for rank {q.rank}")


# ---------------------------------------------------------------------------
# text format

_DIRECTIVE_RE = re.compile(r"\s+")


def parse(text: str) -> BraidingMatrix:
    """Parse the line-oriented braiding format.

    ::

        # comment
        rank 2
        order 12          (optional)
        params t          (optional)
        entry 1 1 t
        entry 1 2 t^-1
        ...
    """
    rank = None
    order = 0
    params: tuple[str, ...] = ()
    seen_order = seen_params = False
    raw_entries: dict[tuple[int, int], tuple[str, int]] = {}
    first = True
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if first:
            if head != "rank":
                raise ParseError("first directive must be 'rank <n>'", lineno)
            first = False
        if head == "rank":
            if rank is not None:
                raise ParseError("duplicate 'rank' directive", lineno)
            try:
                rank = int(rest)
            except ValueError:
                raise ParseError(f"invalid rank {rest!r}", lineno) from None
            if rank < 1:
                raise ParseError("rank must be >= 1", lineno)
        elif head == "order":
            if seen_order:
                raise ParseError("duplicate 'order' directive", lineno)
            seen_order = True
            try:
                order = int(rest)
            except ValueError:
                raise ParseError(f"invalid order {rest!r}", lineno) from None
            if order < 1:
                raise ParseError("order must be >= 1", lineno)
        elif head == "params":
            if seen_params:
                raise ParseError("duplicate 'params' directive", lineno)
            seen_params = True
            params = tuple(rest.split()) if rest else ()
        elif head == "entry":
            fields = rest.split(None, 2)
            if len(fields) != 3:
                raise ParseError("expected 'entry <i> <j> <monomial>'", lineno)
            try:
                i, j = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError("entry indices must be integers", lineno) from None
            if not (1 <= i <= rank and 1 <= j <= rank):
                raise ParseError(f"entry index ({i}, {j}) out of range", lineno)
            if (i, j) in raw_entries:
                raise ParseError(f"duplicate entry ({i}, {j})", lineno)
            raw_entries[(i, j)] = (fields[2], lineno)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if rank is None:
        raise ParseError("missing 'rank' directive")
    try:
        ctx = ScalarContext(order, params)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    rows = []
    for i in range(1, rank + 1):
        row = []
        for j in range(1, rank + 1):
            if (i, j) not in raw_entries:
                raise ParseError(f"missing entry ({i}, {j})")
            mono, lineno = raw_entries[(i, j)]
            try:
                row.append(parse_monomial(mono, ctx))
            except ParseError as exc:
                raise ParseError(str(exc), lineno) from None
        rows.append(tuple(row))
    return BraidingMatrix(ctx, tuple(rows))


def serialize(q: BraidingMatrix) -> str:
    lines = [f"rank {q.rank}"]
    if q.ctx.order:
        lines.append(f"order {q.ctx.order}")
    if q.ctx.params:
        lines.append("params " + " ".join(q.ctx.params))
    for i in range(q.rank):
        for j in range(q.rank):
            lines.append(f"entry {i + 1} {j + 1} {q.entries[i][j]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Cartan type


def sym_product(q: BraidingMatrix, i: int, j: int) -> UnitMonomial:
    """``q_ij * q_ji``."""
    _check_index(q, i, j)
    return q.entries[i][j] * q.entries[j][i]


def solve_power(base: UnitMonomial, target: UnitMonomial) -> tuple[int, int] | None:
    """All integers ``a`` with ``base^a == target``.

    Returns ``(a0, period)``: the solutions are ``a0 + period*Z`` (``period``
    0 means ``a0`` is the only solution), or ``None`` if there is none.
    """
    if base.ctx != target.ctx:
        raise ValueError("context mismatch")
    n = base.ctx.order
    u, v = base.exps, target.exps
    if any(u):
        # free part fixes a uniquely
        k = next(idx for idx, x in enumerate(u) if x)
        if v[k] % u[k]:
            return None
        a = v[k] // u[k]
        if any(a * x != y for x, y in zip(u, v)):
            return None
        if n and (a * base.torsion - target.torsion) % n:
            return None
        return a, 0
    if any(v):
        return None
    if n == 0:
        return (0, 1) if target.is_one() else None
    # torsion congruence: base.torsion * a == target.torsion (mod n)
    g = math.gcd(base.torsion, n)
    if target.torsion % g:
        return None
    period = n // g
    if period == 1:
        return 0, 1
    a0 = (target.torsion // g) * pow(base.torsion // g, -1, period) % period
    return a0, period


def cartan_entry(q: BraidingMatrix, i: int, j: int) -> int | None:
    """Maximal nonpositive ``a`` with ``q_ij q_ji = q_ii^a``, or ``None``."""
    _check_index(q, i, j)
    if i == j:
        raise ValueError("cartan_entry needs i != j")
    sol = solve_power(q.entries[i][i], sym_product(q, i, j))
    if sol is None:
        return None
    a0, period = sol
    if period == 0:
        return a0 if a0 <= 0 else None
    # residue class mod period, 0 <= a0 < period: largest representative <= 0
    return a0 - period if a0 else 0


def is_cartan_type(q: BraidingMatrix) -> CartanMatrix | None:
    n = q.rank
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2)
                continue
            a = cartan_entry(q, i, j)
            if a is None:
                return None
            row.append(a)
        rows.append(tuple(row))
    return tuple(rows)
