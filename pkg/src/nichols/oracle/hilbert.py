"""Graded dimensions of Nichols algebras and PBW data read off from them."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from ..braiding import BraidingMatrix
from ..errors import AmbiguousFactorization, NegativeDiscrepancy
from ..groupoid import sort_roots
from ..reflection import m_row
from .rank import matrix_rank
from .symmetrizer import symmetrizer_block

__all__ = [
    "graded_dimension",
    "multidegrees",
    "hilbert_data",
    "PbwDatum",
    "pbw_infer",
    "series_from_pbw",
    "oracle_roots",
    "ReflectionCheck",
    "check_reflection_roots",
]


def graded_dimension(q: BraidingMatrix, d, method: str = "evaluate") -> int:
    """``dim B(V)_d``, the rank of the braided symmetrizer on the block."""
    d = tuple(d)
    if len(d) != q.rank or any(x < 0 for x in d):
        raise ValueError(f"bad multidegree {d}")
    m = sum(d)
    if m == 0:
        return 1
    if m == 1:
        return 1
    return matrix_rank(symmetrizer_block(q, d), method)


def multidegrees(n: int, D: int) -> list[tuple[int, ...]]:
    """All of total degree ``<= D``, in graded-lexicographic order."""
    degs = [d for d in product(range(D + 1), repeat=n) if sum(d) <= D]
    return sorted(degs, key=lambda d: (sum(d), d))


def hilbert_data(q: BraidingMatrix, D: int, threads: int = 1, method: str = "evaluate") -> dict:
    """Map every multidegree of total degree ``<= D`` to its dimension."""
    if D < 0:
        raise ValueError("D must be >= 0")
    degs = multidegrees(q.rank, D)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            dims = list(pool.map(lambda d: graded_dimension(q, d, method), degs))
    else:
        dims = [graded_dimension(q, d, method) for d in degs]
    return dict(zip(degs, dims))


@dataclass(frozen=True)
class PbwDatum:
    """PBW generators of one degree; ``height`` is ``None`` when not seen by ``D``.

    ``height_bound`` is the known height, or the least height consistent
    with the table when the height is unknown.
    """

    root: tuple[int, ...]
    multiplicity: int
    height: int | None
    height_bound: int

    def __post_init__(self):
        if not any(self.root) or any(x < 0 for x in self.root):
            raise ValueError("root must be a nonzero vector in N_0^n")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")
        if self.height is not None and self.height < 2:
            raise ValueError("a known height is >= 2")

    def height_text(self) -> str:
        return str(self.height) if self.height is not None else f">={self.height_bound}"


def _mul_geometric(P: dict, r: tuple, D: int) -> None:
    """``P *= 1 / (1 - z^r)`` truncated at total degree ``D``, in place."""
    for d in sorted(P, key=lambda d: (sum(d), d)):
        src = tuple(a - b for a, b in zip(d, r))
        if all(x >= 0 for x in src):
            P[d] += P[src]


def _mul_binomial(P: dict, r: tuple, D: int) -> None:
    """``P *= (1 - z^r)`` in place."""
    for d in sorted(P, key=lambda d: (sum(d), d), reverse=True):
        src = tuple(a - b for a, b in zip(d, r))
        if all(x >= 0 for x in src):
            P[d] -= P[src]


def series_from_pbw(data, n: int, D: int) -> dict:
    """Truncated Hilbert series of ``prod_r (1 + z^r + ... + z^((h-1) r))``."""
    P = {d: 0 for d in multidegrees(n, D)}
    P[(0,) * n] = 1
    for datum in data:
        for _ in range(datum.multiplicity):
            _mul_geometric(P, datum.root, D)
            if datum.height is not None:
                _mul_binomial(P, tuple(datum.height * x for x in datum.root), D)
    return P


def pbw_infer(hilbert: dict, D: int) -> list[PbwDatum]:
    """Greedy factorization of the Hilbert table into PBW factors.

    Degrees are visited in graded-lexicographic order.  A positive
    discrepancy adds generators of that degree; a negative one truncates the
    height of earlier generators ``r`` with ``d = k r``.  Raises
    :class:`NegativeDiscrepancy` if too few such generators exist and
    :class:`AmbiguousFactorization` if different roots could absorb it.
    """
    degs = multidegrees(len(next(iter(hilbert))), D)
    n = len(degs[0])
    for d in degs:
        if d not in hilbert:
            raise ValueError(f"Hilbert table is missing degree {d}")
    P = {d: 0 for d in degs}
    P[(0,) * n] = 1
    # one entry per generator occurrence: [root, height or None]
    gens: list[list] = []
    for d in degs[1:]:
        delta = hilbert[d] - P[d]
        if delta < 0:
            cands = []
            for g in gens:
                r, h = g
                if h is not None:
                    continue
                ks = {a // b for a, b in zip(d, r) if b}
                if len(ks) == 1 and all(a == k * b for k in ks for a, b in zip(d, r)):
                    k = ks.pop()
                    if k >= 2:
                        cands.append((g, k))
            roots = sorted({tuple(g[0]) for g, _ in cands})
            if len(roots) > 1:
                raise AmbiguousFactorization(d, roots)
            if len(cands) < -delta:
                raise NegativeDiscrepancy(d, delta)
            for g, k in cands[:-delta]:
                g[1] = k
                _mul_binomial(P, d, D)
            delta = hilbert[d] - P[d]
        if delta > 0:
            for _ in range(delta):
                gens.append([d, None])
                _mul_geometric(P, d, D)
    grouped: dict = {}
    for r, h in gens:
        grouped[(r, h)] = grouped.get((r, h), 0) + 1
    out = []
    for (r, h), mult in grouped.items():
        bound = h if h is not None else D // sum(r) + 1
        out.append(PbwDatum(r, mult, h, bound))
    order = {r: k for k, r in enumerate(sort_roots({r for r, _ in grouped}))}
    out.sort(key=lambda p: (order[p.root], p.height is None, p.height or 0))
    return out


def oracle_roots(data) -> tuple[tuple[int, ...], ...]:
    """Distinct PBW root degrees, sorted graded-lexicographically."""
    return sort_roots({p.root for p in data})


@dataclass(frozen=True)
class ReflectionCheck:
    """Outcome of comparing the PBW roots of ``q`` and of its reflection at ``i``."""

    index: int
    missing_in_reflected: tuple
    missing_in_original: tuple
    not_positive: tuple

    @property
    def ok(self) -> bool:
        return not (self.missing_in_reflected or self.missing_in_original or self.not_positive)


def _apply_s(m: list[int], i: int, v: tuple) -> tuple:
    # s_i(e_i) = -e_i, s_i(e_j) = e_j + m_ij e_i
    out = list(v)
    out[i] = -v[i] + sum(m[j] * v[j] for j in range(len(v)) if j != i)
    return tuple(out)


def check_reflection_roots(
    q: BraidingMatrix, i: int, D: int, threads: int = 1, method: str = "evaluate"
) -> ReflectionCheck:
    """``roots+(q_i) = (s_i(roots+(q)) minus {-e_i}) union {e_i}`` up to degree ``D``.

    Only roots whose image under ``s_i`` also has total degree ``<= D`` can
    be checked; the others are outside the window on one side.
    """
    from ..reflection import reflect_braiding

    m = m_row(q, i)
    qi = reflect_braiding(q, i)
    A = set(oracle_roots(pbw_infer(hilbert_data(q, D, threads, method), D)))
    B = set(oracle_roots(pbw_infer(hilbert_data(qi, D, threads, method), D)))
    ei = tuple(int(k == i) for k in range(q.rank))
    missing_b, missing_a, bad = [], [], []
    for src, dst, missing in ((A, B, missing_b), (B, A, missing_a)):
        if ei not in src:
            missing.append(ei)
        for a in src:
            if a == ei:
                continue
            img = _apply_s(m, i, a)
            if any(x < 0 for x in img):
                bad.append(a)
            elif sum(img) <= D and img not in dst:
                missing.append(img)
    return ReflectionCheck(i, sort_roots(missing_b), sort_roots(missing_a), tuple(sorted(set(bad))))
