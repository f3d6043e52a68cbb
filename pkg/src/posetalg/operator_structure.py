"""Operator structures: abstract (join, meet, 0, 1) with set-valued operators.

The maps ``structure_from_poset`` and ``poset_from_structure`` send a bounded
poset to its (Min U, Max L) structure and back.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cones import max_l, min_u
from .errors import AxiomsFail, ConsistencyFail, CycleDetected, EmptyArgument, NotBounded
from .poset import ElementSet, FinitePoset, bits, render_set, single
from .report import AxiomReport, Checker

Table = tuple[tuple[int, ...], ...]


def _freeze(table: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(row) for row in table)


@dataclass(frozen=True)
class OperatorStructure:
    """Carrier labels, pair tables of result masks for join and meet, and 0, 1."""

    names: tuple[str, ...]
    join: Table
    meet: Table
    zero: int
    one: int

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "join", _freeze(self.join))
        object.__setattr__(self, "meet", _freeze(self.meet))
        n = len(self.names)
        full = (1 << n) - 1
        for table in (self.join, self.meet):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError("operator tables must be total on carrier x carrier")
            if any(cell & ~full for row in table for cell in row):
                raise ValueError("table result outside the carrier")

    @property
    def size(self) -> int:
        return len(self.names)

    def render(self, mask: ElementSet) -> str:
        return render_set(self.names, mask)

    def lift_join(self, A: ElementSet, B: ElementSet) -> ElementSet:
        """Join of two subsets: the minimal common upper bounds under the
        relation ``x <= y iff join(x, y) = {y}``.  Singleton pairs read the table.
        """
        if not A or not B:
            raise EmptyArgument("join of an empty set")
        return self._lift_join(A, B)

    def lift_meet(self, A: ElementSet, B: ElementSet) -> ElementSet:
        if not A or not B:
            raise EmptyArgument("meet of an empty set")
        return self._lift_meet(A, B)

    def _lift_join(self, A: int, B: int) -> int:
        x, y = single(A), single(B)
        if x is not None and y is not None:
            return self.join[x][y]
        U = A | B
        if not U:
            return 0
        join = self.join
        cand = 0
        for z in range(self.size):
            bz = 1 << z
            if all(join[a][z] == bz for a in bits(U)):
                cand |= bz
        r = 0
        for z in bits(cand):
            bz = 1 << z
            if not any(u != z and join[u][z] == bz for u in bits(cand)):
                r |= bz
        return r

    def _lift_meet(self, A: int, B: int) -> int:
        x, y = single(A), single(B)
        if x is not None and y is not None:
            return self.meet[x][y]
        U = A | B
        if not U:
            return 0
        meet = self.meet
        cand = 0
        for z in range(self.size):
            bz = 1 << z
            if all(meet[z][a] == bz for a in bits(U)):
                cand |= bz
        r = 0
        for z in bits(cand):
            bz = 1 << z
            if not any(u != z and meet[z][u] == bz for u in bits(cand)):
                r |= bz
        return r


def structure_from_poset(p: FinitePoset) -> OperatorStructure:
    """(P, Min U, Max L, 0, 1) for a bounded poset P."""
    b = p.bounds()
    if b is None:
        raise NotBounded("operator structures need a bounded poset")
    n = p.size
    join = [[min_u(p, 1 << x | 1 << y) for y in range(n)] for x in range(n)]
    meet = [[max_l(p, 1 << x | 1 << y) for y in range(n)] for x in range(n)]
    return OperatorStructure(p.names, join, meet, b[0], b[1])


AXIOMS = (
    ("i", "x+x = x and x*x = x"),
    ("ii", "x+y = y+x and x*y = y*x"),
    ("iii", "0+x = x and x*1 = x"),
    ("iv", "x+((x+y)+z) = 0+((x+y)+z) and x*((x*y)*z) = ((x*y)*z)*1"),
    ("v", "(x*y)+y = y and x*(x+y) = x"),
    ("vi", "z in x+y iff z is a minimal common upper bound (dually for *)"),
)


def check_axioms(s: OperatorStructure) -> AxiomReport:
    """Check the six operator-structure axioms exhaustively.

    In statements ``+`` is the join operator and ``*`` the meet operator.
    """
    n = s.size
    J, M, R = s.join, s.meet, s.render
    lj, lm = s._lift_join, s._lift_meet
    zero, one = 1 << s.zero, 1 << s.one
    names = s.names
    report = AxiomReport("operator structure axioms")
    c = {label: Checker(report, label, text) for label, text in AXIOMS}
    el = [1 << x for x in range(n)]

    for x in range(n):
        if J[x][x] != el[x]:
            c["i"].fail(x=names[x], lhs=R(J[x][x]), rhs=names[x])
        elif M[x][x] != el[x]:
            c["i"].fail(x=names[x], lhs=R(M[x][x]), rhs=names[x])
        if J[s.zero][x] != el[x]:
            c["iii"].fail(x=names[x], lhs=R(J[s.zero][x]), rhs=names[x])
        elif M[x][s.one] != el[x]:
            c["iii"].fail(x=names[x], lhs=R(M[x][s.one]), rhs=names[x])

    for x in range(n):
        for y in range(n):
            if J[x][y] != J[y][x]:
                c["ii"].fail(x=names[x], y=names[y], lhs=R(J[x][y]), rhs=R(J[y][x]))
            elif M[x][y] != M[y][x]:
                c["ii"].fail(x=names[x], y=names[y], lhs=R(M[x][y]), rhs=R(M[y][x]))
            if not c["v"].done:
                lhs = lj(M[x][y], el[y])
                if lhs != el[y]:
                    c["v"].fail(x=names[x], y=names[y], lhs=R(lhs), rhs=names[y])
                else:
                    lhs = lm(el[x], J[x][y])
                    if lhs != el[x]:
                        c["v"].fail(x=names[x], y=names[y], lhs=R(lhs), rhs=names[x])

    for x in range(n):
        for y in range(n):
            for z in range(n):
                if c["iv"].done:
                    break
                t = lj(J[x][y], el[z])
                lhs, rhs = lj(el[x], t), lj(zero, t)
                if lhs != rhs:
                    c["iv"].fail(x=names[x], y=names[y], z=names[z], inner=R(t), lhs=R(lhs), rhs=R(rhs))
                    break
                t = lm(M[x][y], el[z])
                lhs, rhs = lm(el[x], t), lm(t, one)
                if lhs != rhs:
                    c["iv"].fail(x=names[x], y=names[y], z=names[z], inner=R(t), lhs=R(lhs), rhs=R(rhs))

    vi = c["vi"]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if vi.done:
                    break
                bz = el[z]
                char = J[x][z] == bz and J[y][z] == bz and not any(
                    u != z and J[x][u] == el[u] and J[y][u] == el[u] and M[u][z] == el[u]
                    for u in range(n)
                )
                if bool(J[x][y] & bz) != char:
                    vi.fail(op="join", x=names[x], y=names[y], z=names[z],
                            table=R(J[x][y]), characterization=str(char))
                    break
                char = M[z][x] == bz and M[z][y] == bz and not any(
                    u != z and M[u][x] == el[u] and M[u][y] == el[u] and J[z][u] == el[u]
                    for u in range(n)
                )
                if bool(M[x][y] & bz) != char:
                    vi.fail(op="meet", x=names[x], y=names[y], z=names[z],
                            table=R(M[x][y]), characterization=str(char))
    return report


def poset_from_structure(s: OperatorStructure) -> FinitePoset:
    """The bounded poset with ``x <= y iff join(x, y) = {y}``.

    Also confirms that ``x <= y iff meet(x, y) = {x}`` and that join and meet
    are Min U and Max L of the derived order.
    """
    report = check_axioms(s)
    if not report.ok:
        raise AxiomsFail(report)
    n = s.size
    leq = [[s.join[x][y] == 1 << y for y in range(n)] for x in range(n)]
    try:
        p = FinitePoset.from_leq(s.names, leq)
    except CycleDetected as exc:
        raise ConsistencyFail(f"derived relation is not a partial order: {exc}") from exc
    if p.bounds() != (s.zero, s.one):
        raise ConsistencyFail("0 and 1 are not the bounds of the derived order")
    for x in range(n):
        for y in range(n):
            xy = 1 << x | 1 << y
            if (s.meet[x][y] == 1 << x) != leq[x][y]:
                raise ConsistencyFail(f"meet does not induce the same order at ({s.names[x]},{s.names[y]})")
            if s.join[x][y] != min_u(p, xy):
                raise ConsistencyFail(f"join differs from Min U at ({s.names[x]},{s.names[y]})")
            if s.meet[x][y] != max_l(p, xy):
                raise ConsistencyFail(f"meet differs from Max L at ({s.names[x]},{s.names[y]})")
    return p


def roundtrip_structure(s: OperatorStructure) -> bool:
    """True iff rebuilding the structure from its derived poset reproduces both tables."""
    back = structure_from_poset(poset_from_structure(s))
    return back == s
