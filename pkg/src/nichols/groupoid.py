"""The Weyl-Brandt groupoid of a diagonal braiding.

Objects are braiding matrices reached from the input by repeated
reflection; morphisms are labelled by the reflected index.  Bases and
groupoid elements ``(s, E)`` are explicit integer matrices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .braiding import BraidingMatrix
from .errors import CapExceeded, MixedSignRoot, NotReflectable
from .reflection import identity_matrix, matmul, pseudo_reflection, reflect_braiding

__all__ = [
    "Caps",
    "GroupoidState",
    "GroupoidArrow",
    "Obstruction",
    "Groupoid",
    "RootSet",
    "WeylBrandtElement",
    "BrandtResult",
    "build_groupoid",
    "basis_orbit",
    "real_roots",
    "weyl_brandt_elements",
    "check_brandt_axioms",
    "export_dot",
    "sort_roots",
]


@dataclass(frozen=True)
class Caps:
    max_objects: int = 10_000
    max_arrows: int = 100_000
    max_depth: int = 64
    max_elements: int = 1_000_000

    def __post_init__(self):
        for name in ("max_objects", "max_arrows", "max_depth", "max_elements"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class GroupoidState:
    id: int
    braiding: BraidingMatrix


@dataclass(frozen=True)
class GroupoidArrow:
    source: int
    target: int
    label: int
    basis_change: tuple


@dataclass(frozen=True)
class Obstruction:
    """Reflection at ``label`` is undefined at ``state`` because of ``m_{label,j}``."""

    state: int
    label: int
    j: int


@dataclass
class Groupoid:
    states: list[GroupoidState] = field(default_factory=list)
    arrows: list[GroupoidArrow] = field(default_factory=list)
    obstructions: list[Obstruction] = field(default_factory=list)
    complete: bool = True

    @property
    def rank(self) -> int:
        return self.states[0].braiding.rank

    def arrows_from(self, state: int) -> list[GroupoidArrow]:
        return [a for a in self.arrows if a.source == state]

    def is_connected(self) -> bool:
        if not self.states:
            return True
        adj: dict[int, set] = {s.id: set() for s in self.states}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {0}
        todo = [0]
        while todo:
            for nb in adj[todo.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    todo.append(nb)
        return len(seen) == len(self.states)


@dataclass(frozen=True)
class WeylBrandtElement:
    s: tuple
    E: tuple


@dataclass(frozen=True)
class RootSet:
    """``positive`` sorted graded-lexicographically; negatives implied."""

    positive: tuple[tuple[int, ...], ...]

    @property
    def negative(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(-x for x in r) for r in self.positive)

    def all(self) -> frozenset:
        return frozenset(self.positive) | frozenset(self.negative)

    def __len__(self) -> int:
        return 2 * len(self.positive)

    def __contains__(self, v) -> bool:
        v = tuple(v)
        return v in self.positive or tuple(-x for x in v) in self.positive


def sort_roots(roots) -> tuple:
    return tuple(sorted({tuple(r) for r in roots}, key=lambda r: (sum(r), tuple(-x for x in r))))


# ---------------------------------------------------------------------------
# object graph


def build_groupoid(q: BraidingMatrix, caps: Caps = DEFAULT_CAPS, strict: bool = True) -> Groupoid:
    """Breadth-first closure of ``{q}`` under reflection.

    Undefined reflections become :class:`Obstruction` records.  When a cap is
    hit, ``CapExceeded`` is raised with the partial groupoid attached, unless
    ``strict`` is false, in which case the partial groupoid is returned with
    ``complete = False``.
    """
    g = Groupoid()
    ids: dict = {q.key(): 0}
    g.states.append(GroupoidState(0, q))
    todo = deque([0])
    while todo:
        sid = todo.popleft()
        p = g.states[sid].braiding
        for i in range(p.rank):
            try:
                target = reflect_braiding(p, i)
                s = pseudo_reflection(p, i)
            except NotReflectable as exc:
                g.obstructions.append(Obstruction(sid, i, exc.j))
                continue
            key = target.key()
            tid = ids.get(key)
            if tid is None:
                if len(g.states) >= caps.max_objects:
                    g.complete = False
                    if strict:
                        raise CapExceeded(f"more than {caps.max_objects} objects", g)
                    return g
                tid = len(g.states)
                ids[key] = tid
                g.states.append(GroupoidState(tid, target))
                todo.append(tid)
            if len(g.arrows) >= caps.max_arrows:
                g.complete = False
                if strict:
                    raise CapExceeded(f"more than {caps.max_arrows} arrows", g)
                return g
            g.arrows.append(GroupoidArrow(sid, tid, i, s))
    return g


def _reflection_table(g: Groupoid) -> dict:
    """``(state, label) -> (target, s_label)``."""
    return {(a.source, a.label): (a.target, a.basis_change) for a in g.arrows}


def _pair_closure(g: Groupoid, start_state: int, caps: Caps, right: bool) -> dict:
    """Closure of ``(identity, start_state)`` under the reflections.

    Left action (``right=False``) follows the composition order
    ``s_{i_m} ... s_{i_1}``; right action composes ``s_{i_1} ... s_{i_m}``.
    Returns ``{(matrix, state): depth}``.
    """
    table = _reflection_table(g)
    n = g.rank
    start = (identity_matrix(n), start_state)
    seen = {start: 0}
    frontier = [start]
    depth = 0
    while frontier:
        if depth >= caps.max_depth:
            # one more expansion decides whether the closure is finished
            for mat, st in frontier:
                for i in range(n):
                    hop = table.get((st, i))
                    if hop is None:
                        continue
                    nxt = (matmul(mat, hop[1]) if right else matmul(hop[1], mat), hop[0])
                    if nxt not in seen:
                        raise CapExceeded(f"reflection words longer than {caps.max_depth}", seen)
            break
        depth += 1
        new = []
        for mat, st in frontier:
            for i in range(n):
                hop = table.get((st, i))
                if hop is None:
                    continue
                nxt = (matmul(mat, hop[1]) if right else matmul(hop[1], mat), hop[0])
                if nxt not in seen:
                    if len(seen) >= caps.max_objects:
                        raise CapExceeded(f"more than {caps.max_objects} bases", seen)
                    seen[nxt] = depth
                    new.append(nxt)
        frontier = new
    return seen


def basis_orbit(q: BraidingMatrix, caps: Caps = DEFAULT_CAPS, groupoid: Groupoid | None = None) -> dict:
    """Ordered bases ``s_{i_m} ... s_{i_1}(E_0)`` reachable from ``E_0``.

    Returns ``{E: witnessing state id}``; each basis is a matrix whose
    columns are the basis vectors.
    """
    g = groupoid if groupoid is not None else build_groupoid(q, caps)
    pairs = _pair_closure(g, 0, caps, right=False)
    out: dict = {}
    for (mat, st) in sorted(pairs, key=lambda p: (pairs[p], p[1], p[0])):
        out.setdefault(mat, st)
    return out


def real_roots(q: BraidingMatrix, caps: Caps = DEFAULT_CAPS, groupoid: Groupoid | None = None) -> RootSet:
    """Real roots of ``q`` as a :class:`RootSet`.

    A root is a column of ``s_{i_1} s_{i_2} ... s_{i_m}`` where ``s_{i_1}``
    is computed at ``q`` and each later factor at the object reached so far.
    """
    g = groupoid if groupoid is not None else build_groupoid(q, caps)
    pairs = _pair_closure(g, 0, caps, right=True)
    pos = set()
    for mat, _ in pairs:
        n = len(mat)
        for c in range(n):
            col = tuple(mat[r][c] for r in range(n))
            if all(x >= 0 for x in col):
                pos.add(col)
            elif all(x <= 0 for x in col):
                pos.add(tuple(-x for x in col))
            else:
                raise MixedSignRoot(col)
    return RootSet(sort_roots(pos))


def weyl_brandt_elements(q: BraidingMatrix, caps: Caps = DEFAULT_CAPS, groupoid: Groupoid | None = None) -> set:
    """All pairs ``(s, E)`` of the Weyl-Brandt groupoid.

    ``E`` runs over bases reachable at some object ``p`` and ``s`` over
    products of reflections along chains starting at ``p``.
    """
    g = groupoid if groupoid is not None else build_groupoid(q, caps)
    carried = _pair_closure(g, 0, caps, right=False)
    chains: dict[int, set] = {}
    out: set = set()
    for E, st in carried:
        if st not in chains:
            chains[st] = {mat for mat, _ in _pair_closure(g, st, caps, right=False)}
        for s in chains[st]:
            out.add(WeylBrandtElement(s, E))
            if len(out) > caps.max_elements:
                raise CapExceeded(f"more than {caps.max_elements} groupoid elements", out)
    return out


# ---------------------------------------------------------------------------
# Brandt axioms


@dataclass(frozen=True)
class BrandtResult:
    """Outcome of :func:`check_brandt_axioms`.

    ``failures`` maps each violated axiom (1-6) to a witness tuple and a
    message; ``axiom``/``witness`` describe the first one.
    """

    failures: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def axiom(self) -> int | None:
        return self.failures[0][0] if self.failures else None

    @property
    def witness(self) -> tuple | None:
        return self.failures[0][1] if self.failures else None

    @property
    def failed_axioms(self) -> tuple[int, ...]:
        return tuple(f[0] for f in self.failures)

    def __bool__(self) -> bool:
        return self.ok


def check_brandt_axioms(elements) -> BrandtResult:
    """Check the six Brandt groupoid axioms on a finite set of ``(s, E)``.

    ``(s, E) o (t, F)`` is defined iff ``t(F) == E`` and the composite
    ``(st, F)`` belongs to the set.
    """
    elems = sorted(set(elements), key=lambda x: (x.E, x.s))
    if not elems:
        return BrandtResult(((5, (), "empty set"),))
    index = {x: k for k, x in enumerate(elems)}
    src = [x.E for x in elems]
    tgt = [matmul(x.s, x.E) for x in elems]
    by_src: dict = {}
    by_tgt: dict = {}
    for k in range(len(elems)):
        by_src.setdefault(src[k], []).append(k)
        by_tgt.setdefault(tgt[k], []).append(k)

    comp: dict[tuple[int, int], int] = {}
    for k, x in enumerate(elems):
        for l in by_tgt.get(src[k], ()):
            r = index.get(WeylBrandtElement(matmul(x.s, elems[l].s), elems[l].E))
            if r is not None:
                comp[(k, l)] = r

    failures: dict[int, tuple] = {}

    def fail(axiom: int, witness, message: str) -> None:
        failures.setdefault(axiom, (axiom, tuple(elems[w] for w in witness), message))

    # 1: each of x, y, xy is determined by the other two
    left_cancel: dict = {}
    right_cancel: dict = {}
    for (a, b), r in comp.items():
        if left_cancel.setdefault((a, r), b) != b:
            fail(1, (a, b), "x and xy do not determine y")
        if right_cancel.setdefault((b, r), a) != a:
            fail(1, (a, b), "y and xy do not determine x")

    after: dict = {}
    for (a, b) in comp:
        after.setdefault(a, []).append(b)
    before: dict = {}
    for (a, b) in comp:
        before.setdefault(b, []).append(a)

    for (a, b), ab in comp.items():
        # 2: (x,y), (y,z) in D
        for c in after.get(b, ()):
            bc = comp[(b, c)]
            if (ab, c) not in comp or (a, bc) not in comp:
                fail(2, (a, b, c), "composite not defined")
            elif comp[(ab, c)] != comp[(a, bc)]:
                fail(2, (a, b, c), "not associative")
        # 3: (x,y), (xy,z) in D
        for c in after.get(ab, ()):
            if (b, c) not in comp or (a, comp[(b, c)]) not in comp:
                fail(3, (a, b, c), "composite not defined")
            elif comp[(ab, c)] != comp[(a, comp[(b, c)])]:
                fail(3, (a, b, c), "not associative")
    for (b, c), bc in comp.items():
        # 4: (y,z), (x,yz) in D
        for a in before.get(bc, ()):
            if (a, b) not in comp or (comp[(a, b)], c) not in comp:
                fail(4, (a, b, c), "composite not defined")
            elif comp[(comp[(a, b)], c)] != comp[(a, bc)]:
                fail(4, (a, b, c), "not associative")

    # 5: unique left unit, right unit and inverse
    for x in range(len(elems)):
        es = [e for e in before.get(x, ()) if comp[(e, x)] == x]
        fs = [f for f in after.get(x, ()) if comp[(x, f)] == x]
        if len(es) != 1 or len(fs) != 1:
            fail(5, (x,), "missing or non-unique unit")
            continue
        ys = [y for y in before.get(x, ()) if comp[(y, x)] == fs[0]]
        if len(ys) != 1:
            fail(5, (x,), "missing or non-unique inverse")

    # 6: any two idempotents are joined by some element
    idem = [e for e in range(len(elems)) if comp.get((e, e)) == e]
    for e in idem:
        for f in idem:
            if not any(comp.get((e, x)) == x and comp.get((x, f)) == x for x in after.get(e, ())):
                fail(6, (e, f), "idempotents not connected")
    return BrandtResult(tuple(failures[k] for k in sorted(failures)))


# ---------------------------------------------------------------------------
# DOT export


def export_dot(g: Groupoid) -> str:
    lines = ["digraph weyl_groupoid {", "  node [shape=box, fontname=monospace];"]
    for st in g.states:
        label = "\\n".join(
            " ".join(str(u) for u in row) for row in st.braiding.entries
        )
        lines.append(f'  s{st.id} [label="{st.id}\\n{label}"];')
    for a in sorted(g.arrows, key=lambda a: (a.source, a.label, a.target)):
        lines.append(f'  s{a.source} -> s{a.target} [label="{a.label + 1}"];')
    for k, ob in enumerate(sorted(g.obstructions, key=lambda o: (o.state, o.label, o.j))):
        lines.append(
            f'  x{k} [shape=plaintext, label="m_{ob.label + 1}{ob.j + 1} undefined"];'
        )
        lines.append(f'  s{ob.state} -> x{k} [style=dashed, label="{ob.label + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
