"""Sheffer structures: one set-valued stroke from which order, complement and
both cone operators can be recovered.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cones import max_l, min_u
from .complemented import ComplementedPoset
from .errors import AxiomsFail, ConsistencyFail, CycleDetected, EmptyArgument, NotComplemented
from .operator_structure import Table, _freeze
from .poset import ElementSet, FinitePoset, bits, render_set, single
from .report import AxiomReport, Checker


@dataclass(frozen=True)
class ShefferStructure:
    names: tuple[str, ...]
    stroke: Table

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "stroke", _freeze(self.stroke))
        n = len(self.names)
        if len(self.stroke) != n or any(len(r) != n for r in self.stroke):
            raise ValueError("stroke table must be total on carrier x carrier")
        if any(c >> n for r in self.stroke for c in r):
            raise ValueError("table result outside the carrier")

    @property
    def size(self) -> int:
        return len(self.names)

    def render(self, mask: ElementSet) -> str:
        return render_set(self.names, mask)

    def comp(self, x: int) -> Optional[int]:
        """``x' = x|x`` when that is a single element."""
        return single(self.stroke[x][x])

    def prime(self, A: ElementSet) -> ElementSet:
        """Elementwise ``A' = {a|a : a in A}``."""
        r = 0
        for a in bits(A):
            r |= self.stroke[a][a]
        return r

    def lift(self, A: ElementSet, B: ElementSet) -> ElementSet:
        """``A|B``: the maximal z with ``z'|a = z`` for every a in A and B.

        Singleton pairs read the table.
        """
        if not A or not B:
            raise EmptyArgument("stroke of an empty set")
        return self._lift(A, B)

    def _lift(self, A: int, B: int) -> int:
        x, y = single(A), single(B)
        if x is not None and y is not None:
            return self.stroke[x][y]
        U = A | B
        if not U:
            return 0
        S = self.stroke
        comp = [self.comp(z) for z in range(self.size)]
        cand = 0
        for z in range(self.size):
            zp = comp[z]
            if zp is not None and all(S[zp][a] == 1 << z for a in bits(U)):
                cand |= 1 << z
        r = 0
        for z in bits(cand):
            zp = comp[z]
            if not any(u != z and S[zp][comp[u]] == 1 << z for u in bits(cand)):
                r |= 1 << z
        return r


def sheffer_from_poset(cp: ComplementedPoset) -> ShefferStructure:
    """``x|y = Max L(x', y')``."""
    p, c = cp.poset, cp.comp
    n = p.size
    stroke = [[max_l(p, 1 << c[x] | 1 << c[y]) for y in range(n)] for x in range(n)]
    return ShefferStructure(p.names, stroke)


AXIOMS = (
    ("i", "x|y = y|x"),
    ("ii", "(x|x)|(x|x) = x"),
    ("iii", "(x|y)|(x|x) = x"),
    ("iv", "(x'|(y'|z')')'|z' = (x'|(y'|z')')'|(x|x')"),
    ("v", "x|x' is an element and x|x' = y|y'"),
    ("vi", "(x|x')'|x = x|x'"),
    ("vii", "z in x|y iff z is maximal with z'|x = z'|y = z"),
)


def check_sheffer_axioms(s: ShefferStructure) -> AxiomReport:
    n, S, R, names = s.size, s.stroke, s.render, s.names
    lift, prime = s._lift, s.prime
    el = [1 << x for x in range(n)]
    report = AxiomReport("Sheffer structure axioms")
    c = {label: Checker(report, label, text) for label, text in AXIOMS}
    comp = [s.comp(x) for x in range(n)]
    zeros = [lift(el[x], S[x][x]) for x in range(n)]

    for x in range(n):
        xp = S[x][x]
        lhs = lift(xp, xp)
        if lhs != el[x]:
            c["ii"].fail(x=names[x], **{"x|x": R(xp)}, lhs=R(lhs))
        if single(zeros[x]) is None:
            c["v"].fail(x=names[x], **{"x|x'": R(zeros[x])})
        elif zeros[x] != zeros[0]:
            c["v"].fail(x=names[0], y=names[x], lhs=R(zeros[0]), rhs=R(zeros[x]))
        lhs = lift(prime(zeros[x]), el[x])
        if lhs != zeros[x]:
            c["vi"].fail(x=names[x], lhs=R(lhs), rhs=R(zeros[x]))
        for y in range(n):
            if S[x][y] != S[y][x]:
                c["i"].fail(x=names[x], y=names[y], lhs=R(S[x][y]), rhs=R(S[y][x]))
            lhs = lift(S[x][y], xp)
            if lhs != el[x]:
                c["iii"].fail(x=names[x], y=names[y], lhs=R(lhs), rhs=names[x])

    iv = c["iv"]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if iv.done:
                    break
                yz = lift(prime(el[y]), prime(el[z]))
                t = lift(prime(el[x]), prime(yz))
                tp = prime(t)
                lhs = lift(tp, prime(el[z]))
                rhs = lift(tp, zeros[x])
                if lhs != rhs:
                    iv.fail(x=names[x], y=names[y], z=names[z], **{"y'|z'": R(yz), "x'|(y'|z')'": R(t)},
                            lhs=R(lhs), rhs=R(rhs))

    vii = c["vii"]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if vii.done:
                    break
                char = _below_both(S, comp, z, x, y) and not any(
                    u != z and _below_both(S, comp, u, x, y) and S[comp[z]][comp[u]] == el[z]
                    for u in range(n)
                    if comp[u] is not None
                )
                if bool(S[x][y] & el[z]) != char:
                    vii.fail(x=names[x], y=names[y], z=names[z], table=R(S[x][y]), characterization=str(char))
    return report


def _below_both(S: Table, comp: list, z: int, x: int, y: int) -> bool:
    zp = comp[z]
    return zp is not None and S[zp][x] == 1 << z and S[zp][y] == 1 << z


def poset_from_sheffer(s: ShefferStructure) -> ComplementedPoset:
    """Complemented poset with ``x' = x|x``, ``x <= y iff x'|y' = x``, ``0 = x|x'``.

    Confirms that the stroke equals ``Max L(x', y')`` and its complement equals
    ``Min U(x, y)`` in the derived order.
    """
    report = check_sheffer_axioms(s)
    if not report.ok:
        raise AxiomsFail(report)
    n, S = s.size, s.stroke
    comp = [s.comp(x) for x in range(n)]
    leq = [[S[comp[x]][comp[y]] == 1 << x for y in range(n)] for x in range(n)]
    try:
        p = FinitePoset.from_leq(s.names, leq)
    except CycleDetected as exc:
        raise ConsistencyFail(f"derived relation is not a partial order: {exc}") from exc
    zero = single(S[0][comp[0]])
    one = comp[zero]
    if p.bounds() != (zero, one):
        raise ConsistencyFail("x|x' and its complement are not the bounds of the derived order")
    try:
        cp = ComplementedPoset(p, tuple(comp))
    except NotComplemented as exc:
        raise ConsistencyFail(f"derived complement is not a complementation: {exc}") from exc
    for x in range(n):
        for y in range(n):
            if S[x][y] != max_l(p, 1 << comp[x] | 1 << comp[y]):
                raise ConsistencyFail(f"{s.names[x]}|{s.names[y]} differs from Max L(x',y')")
            if cp.prime(S[x][y]) != min_u(p, 1 << x | 1 << y):
                raise ConsistencyFail(f"({s.names[x]}|{s.names[y]})' differs from Min U(x,y)")
    return cp


def sheffer_roundtrip(cp: ComplementedPoset) -> bool:
    """True iff the Sheffer structure of ``cp`` gives back the same order, complement and bounds."""
    return poset_from_sheffer(sheffer_from_poset(cp)) == cp
