"""Seeded generators of braidings shared by the test modules."""

from __future__ import annotations

import random

from nichols.braiding import BraidingMatrix, is_cartan_type
from nichols.reflection import is_reflectable
from nichols.oracle import WordVector, words_of_degree
from nichols.scalar import LaurentScalar, ScalarContext, embed

GENERIC = ScalarContext(0, ("t",))


def random_braiding(rng: random.Random, n: int, order: int = 0) -> BraidingMatrix:
    """Random braiding; ``order = 0`` uses one generic parameter ``t``."""
    ctx = GENERIC if order == 0 else ScalarContext(order)
    span = 3 if order == 0 else order

    def mono(k: int):
        return ctx.param("t", k) if order == 0 else ctx.zeta(k)

    rows = [[mono(rng.randint(-span, span)) for _ in range(n)] for _ in range(n)]
    return BraidingMatrix(ctx, tuple(tuple(r) for r in rows))


def random_cartan_braiding(rng: random.Random, n: int, order: int = 0) -> BraidingMatrix:
    """Random braiding of Cartan type.

    Diagonal entries are drawn first; each product ``q_ij q_ji`` is set to
    ``q_ii^-k`` for a random ``k`` and split randomly between the two
    entries.  Draws are repeated until the result is of Cartan type.
    """
    ctx = GENERIC if order == 0 else ScalarContext(order)
    while True:
        if order == 0:
            diag = [ctx.param("t", rng.choice([1, 1, 2, 3])) for _ in range(n)]
        else:
            diag = [ctx.zeta(rng.randrange(order)) for _ in range(n)]
        rows = [[ctx.one()] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = diag[i]
        for i in range(n):
            for j in range(i + 1, n):
                k = rng.choice([0, 0, 1, 1, 2, 3])
                a, b = (i, j) if rng.random() < 0.5 else (j, i)
                prod = diag[a] ** (-k)
                split = ctx.param("t", rng.randint(-3, 3)) if order == 0 else ctx.zeta(rng.randrange(order))
                rows[i][j] = split
                rows[j][i] = prod / split
        q = BraidingMatrix(ctx, tuple(tuple(r) for r in rows))
        if is_cartan_type(q) is not None:
            return q


def cartan_sample(seed: int, count: int, max_rank: int = 4, max_order: int = 24) -> list[BraidingMatrix]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_rank)
        order = rng.choice([0, rng.randint(2, max_order)])
        out.append(random_cartan_braiding(rng, n, order))
    return out


def reflectable_sample(seed: int, count: int, max_rank: int = 4, max_order: int = 24) -> list[tuple]:
    """``(q, i)`` pairs where reflection at ``i`` is defined."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_rank)
        order = rng.choice([0, rng.randint(2, max_order)])
        if rng.random() < 0.5:
            q = random_cartan_braiding(rng, n, order)
        else:
            q = random_braiding(rng, n, order)
        i = rng.randrange(n)
        if is_reflectable(q, i):
            out.append((q, i))
    return out


def random_vector(rng, q, d):
    terms = {}
    for w in words_of_degree(d):
        k = rng.randint(-2, 2)
        if k:
            u = q.ctx.monomial(rng.randrange(q.ctx.order) if q.ctx.order else 0,
                               [rng.randint(-2, 2) for _ in range(q.ctx.nparams)])
            terms[w] = embed(u) * k
    return WordVector(q.ctx, d, terms)


def qnum(m, a):
    return sum((embed(a**k) for k in range(m)), LaurentScalar.zero(a.ctx))
