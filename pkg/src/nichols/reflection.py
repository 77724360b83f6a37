"""The constants ``m_ij``, pseudo-reflections, and reflected braidings."""

from __future__ import annotations

from .braiding import BraidingMatrix, solve_power, sym_product
from .errors import NotReflectable

__all__ = [
    "m_coefficient",
    "m_row",
    "pseudo_reflection",
    "reflect_braiding",
    "is_reflectable",
    "identity_matrix",
    "matmul",
    "matvec",
]

IntMatrix = tuple  # tuple of row tuples


def m_coefficient(q: BraidingMatrix, i: int, j: int) -> int | None:
    """Least ``m >= 0`` with ``[m+1]_{q_ii} (q_ii^m q_ij q_ji - 1) = 0``.

    ``None`` when no such ``m`` exists (the set ``M_ij`` is infinite).
    """
    if i == j:
        raise ValueError("m_coefficient needs i != j")
    qii = q.entries[i][i]
    candidates = []
    # q_ii^m = (q_ij q_ji)^-1
    sol = solve_power(qii, sym_product(q, i, j).inverse())
    if sol is not None:
        a0, period = sol
        if period == 0:
            if a0 >= 0:
                candidates.append(a0)
        else:
            candidates.append(a0 % period)
    # [m+1]_{q_ii} = 0
    d = qii.order()
    if d is not None and d >= 2:
        candidates.append(d - 1)
    return min(candidates) if candidates else None


def m_row(q: BraidingMatrix, i: int) -> list[int]:
    """``[m_ij for j]`` with ``m_ii`` reported as 0; raises if undefined."""
    row = []
    for j in range(q.rank):
        if j == i:
            row.append(0)
            continue
        m = m_coefficient(q, i, j)
        if m is None:
            raise NotReflectable(i, j)
        row.append(m)
    return row


def is_reflectable(q: BraidingMatrix, i: int) -> bool:
    return all(m_coefficient(q, i, j) is not None for j in range(q.rank) if j != i)


def pseudo_reflection(q: BraidingMatrix, i: int) -> IntMatrix:
    """Integer matrix of ``s_i``; column ``j`` is the image of ``e_j``."""
    n = q.rank
    m = m_row(q, i)
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    rows[i][i] = -1
    for j in range(n):
        if j != i:
            rows[i][j] = m[j]
    return tuple(tuple(r) for r in rows)


def reflect_braiding(q: BraidingMatrix, i: int) -> BraidingMatrix:
    """Braiding of the reflected Nichols algebra at ``i``.

    New generators have degrees ``s_i(e_j)``; their structure constants are
    the bicharacter of ``q`` evaluated on those degrees.
    """
    n = q.rank
    m = m_row(q, i)
    e = q.entries
    qii = e[i][i]
    rows = []
    for j in range(n):
        row = []
        for k in range(n):
            if j == i and k == i:
                val = qii
            elif j == i:
                val = qii ** (-m[k]) * e[i][k].inverse()
            elif k == i:
                val = qii ** (-m[j]) * e[j][i].inverse()
            else:
                val = qii ** (m[j] * m[k]) * e[i][k] ** m[j] * e[j][i] ** m[k] * e[j][k]
            row.append(val)
        rows.append(tuple(row))
    return BraidingMatrix(q.ctx, tuple(rows))


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n, k, p = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[r][t] * b[t][c] for t in range(k)) for c in range(p)) for r in range(n)
    )


def matvec(a: IntMatrix, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)
