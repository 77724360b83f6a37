"""Generalized Cartan matrices: finite type, Weyl groups, root systems.

All matrices are tuples of row tuples of ints.  ``a_ij`` sits in row ``i``,
column ``j``; the simple reflection ``sigma_i`` sends ``e_j`` to
``e_j - a_ij e_i``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import CapExceeded, NotA3Cycle, NotFiniteType, NotInvertible
from .groupoid import RootSet, sort_roots
from .reflection import identity_matrix, matmul, matvec

__all__ = [
    "FiniteTypeReport",
    "validate_cartan",
    "components",
    "is_symmetrizable",
    "is_finite_type",
    "root_system",
    "reflection_matrices",
    "weyl_group",
    "trace_3cycle",
    "cycle_product",
    "matrix_order",
    "sign_coherent_set",
    "root_multiples",
    "root_norm",
    "realization_obstruction",
    "NONSYM_4CYCLE",
    "NONSYM_4CYCLE_PRODUCT",
    "NONSYM_5CYCLE",
]

# the two non-symmetrizable cycles that survive the reduction to small cycles
NONSYM_4CYCLE = (
    (2, -2, 0, -1),
    (-1, 2, -1, 0),
    (0, -1, 2, -2),
    (-1, 0, -1, 2),
)
NONSYM_4CYCLE_PRODUCT = (
    (6, 0, 3, -5),
    (3, 0, 1, -2),
    (2, 1, 1, -2),
    (1, 0, 1, -1),
)
NONSYM_5CYCLE = (
    (2, -2, 0, 0, -1),
    (-1, 2, -1, 0, 0),
    (0, -1, 2, -1, 0),
    (0, 0, -1, 2, -1),
    (-1, 0, 0, -1, 2),
)


def validate_cartan(C) -> tuple:
    C = tuple(tuple(int(x) for x in row) for row in C)
    n = len(C)
    for i, row in enumerate(C):
        if len(row) != n:
            raise ValueError("Cartan matrix must be square")
        if row[i] != 2:
            raise ValueError("diagonal entries must be 2")
        for j, a in enumerate(row):
            if i != j:
                if a > 0:
                    raise ValueError("off-diagonal entries must be nonpositive")
                if (a == 0) != (C[j][i] == 0):
                    raise ValueError("zero pattern must be symmetric")
    return C


def components(C) -> list[tuple[int, ...]]:
    """Connected components of the Dynkin diagram, each sorted."""
    n = len(C)
    seen: set[int] = set()
    out = []
    for start in range(n):
        if start in seen:
            continue
        comp = {start}
        todo = [start]
        while todo:
            i = todo.pop()
            for j in range(n):
                if j != i and C[i][j] and j not in comp:
                    comp.add(j)
                    todo.append(j)
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def is_symmetrizable(C) -> tuple[int, ...] | None:
    """Positive integers ``d`` with ``d_i a_ij = d_j a_ji``, or ``None``.

    Values are propagated along a spanning tree of each component, then
    checked on every edge; each component is scaled to coprime integers.
    """
    C = validate_cartan(C)
    n = len(C)
    d: list[Fraction | None] = [None] * n
    for comp in components(C):
        root = comp[0]
        d[root] = Fraction(1)
        todo = deque([root])
        while todo:
            i = todo.popleft()
            for j in comp:
                if j != i and C[i][j] and d[j] is None:
                    d[j] = d[i] * C[i][j] / C[j][i]
                    todo.append(j)
        for i in comp:
            for j in comp:
                if i != j and d[i] * C[i][j] != d[j] * C[j][i]:
                    return None
        scale = math.lcm(*(d[i].denominator for i in comp))
        ints = [int(d[i] * scale) for i in comp]
        g = math.gcd(*ints)
        for i, v in zip(comp, ints):
            d[i] = Fraction(v // g)
    return tuple(int(x) for x in d)


def _positive_definite(B) -> bool:
    """Exact test via the pivots of Gaussian elimination (leading minors)."""
    n = len(B)
    M = [[Fraction(x) for x in row] for row in B]
    for k in range(n):
        if M[k][k] <= 0:
            return False
        for r in range(k + 1, n):
            f = M[r][k] / M[k][k]
            if f:
                for c in range(k, n):
                    M[r][c] -= f * M[k][c]
    return True


@dataclass(frozen=True)
class FiniteTypeReport:
    """Per-component type labels; ``symmetrizer`` is ``None`` if there is none."""

    components: tuple[tuple[tuple[int, ...], str], ...]
    symmetrizer: tuple[int, ...] | None
    finite: bool

    def label(self) -> str:
        return " x ".join(lbl for _, lbl in self.components)


def _label(C, comp, d) -> str:
    n = len(comp)
    sub = [[C[i][j] for j in comp] for i in comp]
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if sub[a][b]]
    if n == 1:
        return "A_1"
    bonds = {(a, b): sub[a][b] * sub[b][a] for a, b in edges}
    degree = [sum(1 for e in edges if a in e) for a in range(n)]
    if any(v == 3 for v in bonds.values()):
        return "G_2"
    if any(v == 2 for v in bonds.values()):
        if n == 2:
            return "B_2"
        (a, b), = [e for e, v in bonds.items() if v == 2]
        if degree[a] == 2 and degree[b] == 2:
            return "F_4"
        dv = [d[i] for i in comp]
        return f"B_{n}" if dv.count(min(dv)) == 1 else f"C_{n}"
    branch = [a for a in range(n) if degree[a] == 3]
    if not branch:
        return f"A_{n}"
    # arm lengths from the branch node
    c = branch[0]
    arms = []
    for nb in (b if a == c else a for a, b in edges if c in (a, b)):
        length, prev, cur = 1, c, nb
        while True:
            nxt = [x for e in edges if cur in e for x in e if x not in (cur, prev)]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D_{n}"
    return {(1, 2, 2): "E_6", (1, 2, 3): "E_7", (1, 2, 4): "E_8"}.get(tuple(arms), "?")


def is_finite_type(C) -> FiniteTypeReport:
    """Finite type iff symmetrizable with positive definite ``(d_i a_ij)``.

    Labels come from diagram shape and are informational only.
    """
    C = validate_cartan(C)
    d = is_symmetrizable(C)
    comps = components(C)
    if d is None:
        return FiniteTypeReport(tuple((c, "not finite type") for c in comps), None, False)
    out = []
    finite = True
    for comp in comps:
        B = [[d[i] * C[i][j] for j in comp] for i in comp]
        if _positive_definite(B):
            out.append((comp, _label(C, comp, d)))
        else:
            out.append((comp, "not finite type"))
            finite = False
    return FiniteTypeReport(tuple(out), d, finite)


def reflection_matrices(C) -> list[tuple]:
    """Matrices of the simple reflections; column ``j`` is ``sigma_i(e_j)``."""
    C = validate_cartan(C)
    n = len(C)
    mats = []
    for i in range(n):
        rows = [list(r) for r in identity_matrix(n)]
        rows[i] = [-C[i][j] if j != i else -1 for j in range(n)]
        mats.append(tuple(tuple(r) for r in rows))
    return mats


def root_system(C, cap: int = 100_000) -> RootSet:
    """Closure of the simple roots under the simple reflections."""
    C = validate_cartan(C)
    if not is_finite_type(C).finite:
        raise NotFiniteType("root_system needs a Cartan matrix of finite type")
    n = len(C)
    mats = reflection_matrices(C)
    start = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(start)
    todo = deque(start)
    while todo:
        v = todo.popleft()
        for s in mats:
            w = matvec(s, v)
            if w not in seen:
                seen.add(w)
                todo.append(w)
                if len(seen) > cap:
                    raise CapExceeded("root closure did not terminate", seen)
    return RootSet(sort_roots(v for v in seen if all(x >= 0 for x in v)))


def weyl_group(C, cap: int = 100_000) -> set:
    """Weyl group as a set of integer matrices."""
    C = validate_cartan(C)
    mats = reflection_matrices(C)
    ident = identity_matrix(len(C))
    seen = {ident}
    todo = deque([ident])
    while todo:
        w = todo.popleft()
        for s in mats:
            x = matmul(w, s)
            if x not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"Weyl group has more than {cap} elements", seen)
                seen.add(x)
                todo.append(x)
    return seen


def _check_3cycle(C) -> tuple:
    C = validate_cartan(C)
    if len(C) != 3 or any(C[i][j] >= 0 for i in range(3) for j in range(3) if i != j):
        raise NotA3Cycle("need a 3x3 Cartan matrix with all off-diagonal entries negative")
    return C


def trace_3cycle(C) -> int:
    """``a12 a21 + a13 a31 + a23 a32 - a12 a23 a31 - 3``."""
    C = _check_3cycle(C)
    a = lambda i, j: C[i - 1][j - 1]  # noqa: E731
    return a(1, 2) * a(2, 1) + a(1, 3) * a(3, 1) + a(2, 3) * a(3, 2) - a(1, 2) * a(2, 3) * a(3, 1) - 3


def cycle_product(C) -> tuple:
    """``t_1 t_2 ... t_n`` for the simple reflection matrices of ``C``."""
    mats = reflection_matrices(C)
    out = mats[0]
    for m in mats[1:]:
        out = matmul(out, m)
    return out


def _det(M) -> Fraction:
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if A[r][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = -det
        det *= A[k][k]
        for r in range(k + 1, n):
            f = A[r][k] / A[k][k]
            if f:
                for c in range(k, n):
                    A[r][c] -= f * A[k][c]
    return det


def matrix_order(M, cap: int = 10_000) -> int | None:
    """Least ``k <= cap`` with ``M^k = 1``; ``None`` if the cap is exceeded."""
    M = tuple(tuple(int(x) for x in row) for row in M)
    if abs(_det(M)) != 1:
        raise NotInvertible("matrix is not invertible over the integers")
    ident = identity_matrix(len(M))
    power = M
    for k in range(1, cap + 1):
        if power == ident:
            return k
        power = matmul(power, M)
    return None


def root_norm(C, d, beta) -> int:
    """``(beta, beta)`` for the invariant form ``(e_i, e_j) = d_i a_ij``."""
    n = len(C)
    return sum(beta[i] * beta[j] * d[i] * C[i][j] for i in range(n) for j in range(n))


def root_multiples(C, box_radius: int) -> set:
    """``{m beta : beta a root, m in Z}`` inside the coordinate box."""
    n = len(C)
    out = {(0,) * n}
    for beta in root_system(C).positive:
        for m in range(-box_radius, box_radius + 1):
            v = tuple(m * x for x in beta)
            if all(abs(x) <= box_radius for x in v):
                out.add(v)
    return out


def sign_coherent_set(C, box_radius: int) -> set:
    """Lattice points in the box whose whole Weyl orbit is sign-coherent."""
    C = validate_cartan(C)
    if box_radius < 1:
        raise ValueError("box_radius must be >= 1")
    if not is_finite_type(C).finite:
        raise NotFiniteType("sign_coherent_set needs a Cartan matrix of finite type")
    W = weyl_group(C)
    n = len(C)
    out = set()
    for v in product(range(-box_radius, box_radius + 1), repeat=n):
        ok = True
        for w in W:
            img = matvec(w, v)
            if not (all(x >= 0 for x in img) or all(x <= 0 for x in img)):
                ok = False
                break
        if ok:
            out.add(tuple(v))
    return out


# ---------------------------------------------------------------------------
# realizability by a braiding


def _hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form (echelon, positive pivots)."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    out = []
    for c in range(ncols):
        while True:
            nz = [r for r in A if r[c]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[c]))
            piv = nz[0]
            for r in nz[1:]:
                f = r[c] // piv[c]
                for k in range(ncols):
                    r[k] -= f * piv[k]
            A = [r for r in A if any(r)]
        nz = [r for r in A if r[c]]
        if nz:
            piv = nz[0]
            if piv[c] < 0:
                piv = [-x for x in piv]
            out.append(piv)
            A = [r for r in A if not r[c]]
    return out


def _in_lattice(v, basis) -> bool:
    v = list(v)
    for row in basis:
        c = next(k for k, x in enumerate(row) if x)
        if v[c] % row[c]:
            return False
        f = v[c] // row[c]
        v = [a - f * b for a, b in zip(v, row)]
    return not any(v)


def realization_obstruction(C) -> tuple[int, int] | None:
    """Why no diagonal braiding has Cartan matrix ``C``, if that is forced.

    Any braiding of Cartan type ``C`` satisfies ``q_ii^a_ij = q_jj^a_ji``,
    and maximality of ``a_ij`` forces ``q_ii^k != 1`` for ``1 <= k <= -a_ij``.
    Returns ``(i, k)`` when ``q_ii^k = 1`` follows from the relations alone,
    otherwise ``None``.
    """
    C = validate_cartan(C)
    n = len(C)
    rel = []
    for i in range(n):
        for j in range(i + 1, n):
            if C[i][j] or C[j][i]:
                v = [0] * n
                v[i] += C[i][j]
                v[j] -= C[j][i]
                rel.append(v)
    basis = _hnf(rel)
    for i in range(n):
        kmax = max((-C[i][j] for j in range(n) if j != i), default=0)
        for k in range(1, kmax + 1):
            if _in_lattice([k if x == i else 0 for x in range(n)], basis):
                return i, k
    return None
