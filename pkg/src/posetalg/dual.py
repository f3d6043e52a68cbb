"""Duals of Boolean posets: structures (P, +, *, 0, 1) standing to Boolean posets
as unitary Boolean rings stand to Boolean algebras.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .cones import max_l, min_u
from .complemented import (
    DEFAULT_SEED,
    DEFAULT_SUBSET_CAP,
    DEFAULT_SAMPLES,
    ComplementedPoset,
    _sample_masks,
    is_boolean,
    is_distributive,
    sym_diff,
)
from .errors import AxiomsFail, ConsistencyFail, CycleDetected, NotBoolean, NotComplemented
from .operator_structure import Table, _freeze
from .poset import ElementSet, FinitePoset, bits, render_set, single
from .report import AxiomReport, Checker


@dataclass(frozen=True)
class DualStructure:
    """Pair tables for ``+`` and ``*`` plus the constants 0 and 1.

    Subset arguments are evaluated through ``source`` when the structure was
    built from a Boolean poset, and otherwise through lifts: ``A*B`` is the set
    of maximal common lower bounds under ``x <= y iff x*y = {x}``, and ``A+B``
    is ``Min U(Max L(A', B), Max L(A, B'))`` in that derived order with
    ``x' = x+1``.  Pairs of single elements always read the tables.
    """

    names: tuple[str, ...]
    plus: Table
    times: Table
    zero: int
    one: int
    source: Optional[ComplementedPoset] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "plus", _freeze(self.plus))
        object.__setattr__(self, "times", _freeze(self.times))
        n = len(self.names)
        for t in (self.plus, self.times):
            if len(t) != n or any(len(r) != n for r in t):
                raise ValueError("tables must be total on carrier x carrier")
            if any(c >> n for r in t for c in r):
                raise ValueError("table result outside the carrier")

    @property
    def size(self) -> int:
        return len(self.names)

    def render(self, mask: ElementSet) -> str:
        return render_set(self.names, mask)

    def without_source(self) -> "DualStructure":
        return DualStructure(self.names, self.plus, self.times, self.zero, self.one)

    # derived order, used by the lifts ------------------------------------

    def _derived(self) -> FinitePoset:
        cached = self.__dict__.get("_derived_poset")
        if cached is None:
            n = self.size
            down = []
            for y in range(n):
                d = 0
                for x in range(n):
                    if self.times[x][y] == 1 << x:
                        d |= 1 << x
                down.append(d)
            # not validated: a malformed table still yields well-defined cones
            cached = FinitePoset(self.names, down)
            object.__setattr__(self, "_derived_poset", cached)
        return cached

    def prime(self, A: ElementSet) -> ElementSet:
        """Elementwise ``A' = {a+1 : a in A}``."""
        r = 0
        for a in bits(A):
            r |= self.plus[a][self.one]
        return r

    def mul(self, A: ElementSet, B: ElementSet) -> ElementSet:
        x, y = single(A), single(B)
        if x is not None and y is not None:
            return self.times[x][y]
        if self.source is not None:
            return max_l(self.source.poset, A, B)
        return self.lift_times(A, B)

    def add(self, A: ElementSet, B: ElementSet) -> ElementSet:
        x, y = single(A), single(B)
        if x is not None and y is not None:
            return self.plus[x][y]
        if self.source is not None:
            if not A or not B:
                return 0
            return sym_diff(self.source, A, B)
        return self.lift_plus(A, B)

    def lift_times(self, A: ElementSet, B: ElementSet) -> ElementSet:
        """Members x of the characterization: x*y = x for all y in A and B, and no
        other such z has x*z = x.
        """
        U = A | B
        T = self.times
        cand = 0
        for x in range(self.size):
            if all(T[x][y] == 1 << x for y in bits(U)):
                cand |= 1 << x
        r = 0
        for x in bits(cand):
            if not any(z != x and T[x][z] == 1 << x for z in bits(cand)):
                r |= 1 << x
        return r

    def lift_plus(self, A: ElementSet, B: ElementSet) -> ElementSet:
        if not A or not B:
            return 0
        p = self._derived()
        return min_u(p, max_l(p, self.prime(A), B) | max_l(p, A, self.prime(B)))


def dual_from_boolean(cp: ComplementedPoset) -> DualStructure:
    """``a+b = Min U(Max L(a',b), Max L(a,b'))`` and ``a*b = Max L(a,b)``."""
    if not is_boolean(cp):
        raise NotBoolean("the dual is defined for Boolean posets only")
    p = cp.poset
    n = p.size
    plus = [[sym_diff(cp, 1 << x, 1 << y) for y in range(n)] for x in range(n)]
    times = [[max_l(p, 1 << x | 1 << y) for y in range(n)] for x in range(n)]
    return DualStructure(p.names, plus, times, p.bottom, p.top, source=cp)


AXIOMS = (
    ("i", "x*x = x, x*y = y*x, x*0 = 0, x*1 = x, (x*(y*z))*z = (x*(y*z))*1"),
    ("ii", "(x+1)+1 = x"),
    ("iii", "x*y = x implies (x+1)*(y+1) = y+1"),
    ("iv", "x*(x+1) = 0"),
    ("v", "((x+1)*(y+1)+1)*z = ((x*z+1)*(y*z+1)+1)*1"),
    ("vi", "x in A*B iff x is a maximal common lower bound of A and B"),
)


def check_dual_axioms(
    d: DualStructure,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> AxiomReport:
    """Check the six axioms; (i)-(v) over all element tuples.

    (vi) compares ``A*B`` with its characterization.  Both sides depend on A
    and B only through their union unless both are single elements, so the
    exhaustive check covers every element pair plus every subset of the
    carrier.  Carriers larger than ``subset_cap`` use ``samples`` random
    subsets instead.
    """
    n, names, R = d.size, d.names, d.render
    mul, add = d.mul, d.add
    el = [1 << x for x in range(n)]
    zero, one = el[d.zero], el[d.one]
    report = AxiomReport("dual of a Boolean poset axioms")
    c = {label: Checker(report, label, text) for label, text in AXIOMS}
    T = d.times
    inc = [d.plus[x][d.one] for x in range(n)]  # x+1

    def fail(label, lhs, rhs, **args):
        c[label].fail(**{k: names[v] for k, v in args.items()}, lhs=R(lhs), rhs=R(rhs))

    for x in range(n):
        if T[x][x] != el[x]:
            fail("i", T[x][x], el[x], x=x)
        if T[x][d.zero] != zero:
            fail("i", T[x][d.zero], zero, x=x)
        if T[x][d.one] != el[x]:
            fail("i", T[x][d.one], el[x], x=x)
        lhs = add(inc[x], one)
        if lhs != el[x]:
            fail("ii", lhs, el[x], x=x)
        lhs = mul(el[x], inc[x])
        if lhs != zero:
            fail("iv", lhs, zero, x=x)
        for y in range(n):
            if T[x][y] != T[y][x]:
                fail("i", T[x][y], T[y][x], x=x, y=y)
            if T[x][y] == el[x]:
                iy = inc[y]
                lhs = mul(inc[x], iy)
                if lhs != iy:
                    fail("iii", lhs, iy, x=x, y=y)

    for x in range(n):
        for y in range(n):
            for z in range(n):
                t = mul(el[x], T[y][z])
                lhs, rhs = mul(t, el[z]), mul(t, one)
                if lhs != rhs:
                    fail("i", lhs, rhs, x=x, y=y, z=z)
                if not c["v"].done:
                    lhs = mul(add(mul(inc[x], inc[y]), one), el[z])
                    a = add(T[x][z], one)
                    b = add(T[y][z], one)
                    rhs = mul(add(mul(a, b), one), one)
                    if lhs != rhs:
                        fail("v", lhs, rhs, x=x, y=y, z=z)

    vi = c["vi"]
    for x in range(n):
        for y in range(n):
            if T[x][y] != d.lift_times(el[x], el[y]):
                vi.fail(A=names[x], B=names[y], product=R(T[x][y]), characterization=R(d.lift_times(el[x], el[y])))
                break
        if vi.done:
            break
    if not vi.done:
        if n <= subset_cap:
            unions: Iterable[int] = range(1 << n)
        else:
            unions = _sample_masks(np.random.default_rng(seed), n, samples)
            report.notes.append(f"(vi) sampled over {samples} subsets")
        for U in unions:
            # split U into two parts that are not both single elements
            A = U
            B = U & -U if U else 0
            if single(A) is not None:
                B = 0
            lhs, rhs = mul(A, B), d.lift_times(A, B)
            if lhs != rhs:
                vi.fail(A=R(A), B=R(B), product=R(lhs), characterization=R(rhs))
                break
    return report


def boolean_from_dual(d: DualStructure, subset_cap: int = DEFAULT_SUBSET_CAP) -> ComplementedPoset:
    """Boolean poset with ``x <= y iff x*y = x`` and ``x' = x+1``."""
    report = check_dual_axioms(d, subset_cap)
    if not report.ok:
        raise AxiomsFail(report)
    n, T = d.size, d.times
    leq = [[T[x][y] == 1 << x for y in range(n)] for x in range(n)]
    try:
        p = FinitePoset.from_leq(d.names, leq)
    except CycleDetected as exc:
        raise ConsistencyFail(f"derived relation is not a partial order: {exc}") from exc
    comp = [single(d.plus[x][d.one]) for x in range(n)]
    if None in comp:
        raise ConsistencyFail("x+1 is not a single element for some x")
    if p.bounds() != (d.zero, d.one):
        raise ConsistencyFail("0 and 1 are not the bounds of the derived order")
    try:
        cp = ComplementedPoset(p, tuple(comp))
    except NotComplemented as exc:
        raise ConsistencyFail(f"derived poset is not complemented: {exc}") from exc
    if not is_distributive(p):
        raise ConsistencyFail("derived poset is not distributive")
    return cp


@dataclass(frozen=True)
class DualRoundtrip:
    """Comparison of D with D(B(D)); the multiplicative reduct is what must agree."""

    times_equal: bool
    constants_equal: bool
    plus_equal: bool

    def __bool__(self) -> bool:
        return self.times_equal and self.constants_equal


def dual_roundtrip(d: DualStructure, subset_cap: int = DEFAULT_SUBSET_CAP) -> DualRoundtrip:
    back = dual_from_boolean(boolean_from_dual(d, subset_cap))
    return DualRoundtrip(
        times_equal=back.times == d.times,
        constants_equal=(back.zero, back.one) == (d.zero, d.one),
        plus_equal=back.plus == d.plus,
    )
