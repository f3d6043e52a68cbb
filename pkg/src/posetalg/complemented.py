"""Complemented and Boolean posets, and the set-valued symmetric difference."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .cones import max_l, min_u
from .errors import EmptyArgument, NotBounded, NotComplemented
from .poset import ElementSet, FinitePoset, bits
from .report import AxiomReport, Checker, Verdict

DEFAULT_SEED = 20240531
DEFAULT_SUBSET_CAP = 12
DEFAULT_SAMPLES = 2000


@dataclass(frozen=True)
class ComplementedPoset:
    """A bounded poset with an antitone involution giving each element a complement."""

    poset: FinitePoset
    comp: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "comp", tuple(self.comp))
        problem = complementation_problem(self.poset, self.comp)
        if problem:
            raise NotComplemented(problem)

    @classmethod
    def from_pairs(cls, poset: FinitePoset, pairs: Sequence[tuple[str, str]]) -> "ComplementedPoset":
        comp = [-1] * poset.size
        for a, b in pairs:
            i, j = poset.index(a), poset.index(b)
            comp[i], comp[j] = j, i
        if -1 in comp:
            missing = poset.names[comp.index(-1)]
            raise NotComplemented(f"no complement given for {missing}")
        return cls(poset, tuple(comp))

    @property
    def names(self) -> tuple[str, ...]:
        return self.poset.names

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def bottom(self) -> int:
        return self.poset.bottom

    @property
    def top(self) -> int:
        return self.poset.top

    def prime(self, A: ElementSet) -> ElementSet:
        """Image ``{a' | a in A}``."""
        r = 0
        for a in bits(A):
            r |= 1 << self.comp[a]
        return r

    def pairs(self) -> list[tuple[str, str]]:
        """Complement pairs, each listed once with the earlier-declared element first."""
        return [(self.names[i], self.names[j]) for i, j in enumerate(self.comp) if i <= j]


def complementation_problem(p: FinitePoset, comp: Sequence[int]) -> Optional[str]:
    """Reason ``comp`` is not a complementation of ``p``, or None if it is one."""
    b = p.bounds()
    if b is None:
        return "poset is not bounded"
    bottom, top = b
    n = p.size
    if len(comp) != n or any(not 0 <= c < n for c in comp):
        return "complement map is not total on the carrier"
    names = p.names
    for x in range(n):
        if comp[comp[x]] != x:
            return f"({names[x]}')' != {names[x]}"
        pair = 1 << x | 1 << comp[x]
        if p.lower_cone(pair) != 1 << bottom or p.upper_cone(pair) != 1 << top:
            return f"{names[comp[x]]} is not a complement of {names[x]}"
        for y in bits(p.up[x]):
            if not p.leq(comp[y], comp[x]):
                return f"{names[x]} <= {names[y]} but not {names[comp[y]]} <= {names[comp[x]]}"
    return None


def find_complementations(p: FinitePoset) -> list[tuple[int, ...]]:
    """Every antitone involution of a bounded poset that sends each element to a complement.

    Returned in lexicographic order of the complement tuples.
    """
    b = p.bounds()
    if b is None:
        raise NotBounded("complementations need a bounded poset")
    bottom, top = 1 << b[0], 1 << b[1]
    n = p.size
    options = []
    for x in range(n):
        opts = []
        for y in range(n):
            pair = 1 << x | 1 << y
            if p.lower_cone(pair) == bottom and p.upper_cone(pair) == top:
                opts.append(y)
        options.append(opts)
    comp = [-1] * n
    found: list[tuple[int, ...]] = []

    def consistent(x: int, y: int) -> bool:
        # antitone w.r.t. every pair already assigned
        for u in range(n):
            cu = comp[u]
            if cu < 0:
                continue
            for a, ca in ((x, y), (y, x)):
                if p.leq(a, u) and not p.leq(cu, ca):
                    return False
                if p.leq(u, a) and not p.leq(ca, cu):
                    return False
        return True

    def extend(x: int) -> None:
        while x < n and comp[x] >= 0:
            x += 1
        if x == n:
            found.append(tuple(comp))
            return
        for y in options[x]:
            if comp[y] >= 0 and y != x:
                continue
            if not consistent(x, y):
                continue
            comp[x] = y
            comp[y] = x
            extend(x + 1)
            comp[x] = comp[y] = -1

    extend(0)
    found.sort()
    return found


class Witness(NamedTuple):
    """Arguments of a violated identity together with both evaluated sides."""

    args: tuple[int, ...]
    lhs: ElementSet
    rhs: ElementSet

    def render(self, p: FinitePoset) -> str:
        args = ",".join(p.names[a] for a in self.args)
        return f"({args}): {p.render(self.lhs)} != {p.render(self.rhs)}"


def distributivity_witness(p: FinitePoset) -> Optional[Witness]:
    """First triple violating ``L(U(x,y),z) = LU(L(x,z),L(y,z))``."""
    n = p.size
    L, U = p.lower_cone, p.upper_cone
    for x in range(n):
        for y in range(n):
            uxy = p.up[x] & p.up[y]
            for z in range(n):
                lhs = L(uxy | 1 << z)
                rhs = L(U(L(1 << x | 1 << z) | L(1 << y | 1 << z)))
                if lhs != rhs:
                    return Witness((x, y, z), lhs, rhs)
    return None


def is_distributive(p: FinitePoset) -> bool:
    return distributivity_witness(p) is None


class ConeTables:
    """Lower and upper cones of every subset, indexed by mask (small carriers only)."""

    def __init__(self, p: FinitePoset):
        size = 1 << p.size
        L = np.empty(size, dtype=np.int64)
        U = np.empty(size, dtype=np.int64)
        L[0] = U[0] = p.full
        for m in range(1, size):
            low = (m & -m).bit_length() - 1
            rest = m & (m - 1)
            L[m] = L[rest] & p.down[low]
            U[m] = U[rest] & p.up[low]
        self.L, self.U = L, U
        self._maxl = self._minu = None
        self.p = p

    @property
    def maxl(self) -> np.ndarray:
        """``Max L`` of every subset."""
        if self._maxl is None:
            p = self.p
            self._maxl = np.array([p.maximal(int(v)) for v in self.L], dtype=np.int64)
        return self._maxl

    @property
    def minu(self) -> np.ndarray:
        if self._minu is None:
            p = self.p
            self._minu = np.array([p.minimal(int(v)) for v in self.U], dtype=np.int64)
        return self._minu


class DistributivityConditions(NamedTuple):
    verdicts: tuple[bool, bool, bool, bool]
    exhaustive: bool

    @property
    def agree(self) -> bool:
        return len(set(self.verdicts)) == 1


def _sample_masks(rng: np.random.Generator, n: int, count: int, nonempty: bool = False) -> list[int]:
    out = []
    while len(out) < count:
        m = int(sum(1 << i for i in range(n) if rng.random() < 0.5))
        if m or not nonempty:
            out.append(m)
    return out


def distributivity_conditions(
    p: FinitePoset,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> DistributivityConditions:
    """Evaluate the four equivalent distributivity conditions separately.

    The two element-only conditions are exhaustive; the two that quantify over
    a subset A are exhaustive when the carrier has at most ``subset_cap``
    elements and otherwise use ``samples`` random (x, y, A) tuples.
    """
    n = p.size
    L, U = p.lower_cone, p.upper_cone
    el = [1 << i for i in range(n)]

    def cond1(x, y, Z):
        return L((p.up[x] & p.up[y]) | Z) == L(U(L(el[x] | Z) | L(el[y] | Z)))

    def cond2(x, y, Z):
        return U((p.down[x] & p.down[y]) | Z) == U(L(U(el[x] | Z) | U(el[y] | Z)))

    v1 = all(cond1(x, y, el[z]) for x in range(n) for y in range(n) for z in range(n))
    v2 = all(cond2(x, y, el[z]) for x in range(n) for y in range(n) for z in range(n))
    exhaustive = n <= subset_cap
    if exhaustive:
        cones = ConeTables(p)
        Lt, Ut = cones.L, cones.U
        subsets = np.arange(1 << n, dtype=np.int64)
        v3 = v4 = True
        for x in range(n):
            for y in range(n):
                uxy, lxy = p.up[x] & p.up[y], p.down[x] & p.down[y]
                if v3:
                    lhs = Lt[uxy | subsets]
                    rhs = Lt[Ut[Lt[el[x] | subsets] | Lt[el[y] | subsets]]]
                    v3 = bool(np.array_equal(lhs, rhs))
                if v4:
                    lhs = Ut[lxy | subsets]
                    rhs = Ut[Lt[Ut[el[x] | subsets] | Ut[el[y] | subsets]]]
                    v4 = bool(np.array_equal(lhs, rhs))
    else:
        rng = np.random.default_rng(seed)
        xs = rng.integers(0, n, size=(samples, 2))
        masks = _sample_masks(rng, n, samples)
        tuples = [(int(a), int(b), A) for (a, b), A in zip(xs, masks)]
        v3 = all(cond1(x, y, A) for x, y, A in tuples)
        v4 = all(cond2(x, y, A) for x, y, A in tuples)
    return DistributivityConditions((v1, v2, v3, v4), exhaustive)


def distributivity_conditions_agree(p: FinitePoset, subset_cap: int = DEFAULT_SUBSET_CAP) -> bool:
    return distributivity_conditions(p, subset_cap).agree


def is_boolean(cp: ComplementedPoset) -> bool:
    """A Boolean poset is a distributive complemented poset."""
    return is_distributive(cp.poset)


def sym_diff(cp: ComplementedPoset, A: ElementSet, B: ElementSet) -> ElementSet:
    """``A + B = Min U(Max L(A', B), Max L(A, B'))`` for non-empty subsets."""
    if not A or not B:
        raise EmptyArgument("symmetric difference of an empty set")
    p = cp.poset
    return min_u(p, max_l(p, cp.prime(A), B) | max_l(p, A, cp.prime(B)))


def sym_diff_table(cp: ComplementedPoset):
    from .tables import OperatorTable

    n = cp.size
    cells = [[sym_diff(cp, 1 << x, 1 << y) for y in range(n)] for x in range(n)]
    return OperatorTable("+", cp.names, cells)


SD_IDENTITIES = (
    ("1", "x+x = 0"),
    ("2", "x+y = y+x"),
    ("3", "x+0 = x"),
    ("4", "x+1 = x'"),
    ("5", "(x+1)+1 = x"),
    ("6", "x+x' = 1"),
    ("7", "x+y = x'+y'"),
    ("8", "x+y' = x'+y"),
)


def check_sd_identities(cp: ComplementedPoset) -> AxiomReport:
    """The eight symmetric-difference identities over all element pairs."""
    n, names, R = cp.size, cp.names, cp.poset.render
    c = cp.comp
    el = [1 << i for i in range(n)]
    zero, one = el[cp.bottom], el[cp.top]
    table = [[sym_diff(cp, el[x], el[y]) for y in range(n)] for x in range(n)]
    report = AxiomReport("symmetric difference identities")
    chk = {label: Checker(report, label, text) for label, text in SD_IDENTITIES}

    def expect(label, lhs, rhs, **args):
        if lhs != rhs:
            chk[label].fail(**{k: names[v] for k, v in args.items()}, lhs=R(lhs), rhs=R(rhs))

    for x in range(n):
        expect("1", table[x][x], zero, x=x)
        expect("3", table[x][cp.bottom], el[x], x=x)
        expect("4", table[x][cp.top], el[c[x]], x=x)
        expect("5", sym_diff(cp, table[x][cp.top], one), el[x], x=x)
        expect("6", table[x][c[x]], one, x=x)
        for y in range(n):
            expect("2", table[x][y], table[y][x], x=x, y=y)
            expect("7", table[x][y], table[c[x]][c[y]], x=x, y=y)
            expect("8", table[x][c[y]], table[c[x]][y], x=x, y=y)
    return report


def sd_associativity_witness(cp: ComplementedPoset) -> Optional[Witness]:
    """First triple with ``(x+y)+z != x+(y+z)``."""
    n = cp.size
    el = [1 << i for i in range(n)]
    table = [[sym_diff(cp, el[x], el[y]) for y in range(n)] for x in range(n)]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = sym_diff(cp, table[x][y], el[z])
                rhs = sym_diff(cp, el[x], table[y][z])
                if lhs != rhs:
                    return Witness((x, y, z), lhs, rhs)
    return None


def _sd_cone_rhs(cp: ComplementedPoset, A: ElementSet, B: ElementSet) -> ElementSet:
    p = cp.poset
    return min_u(p, max_l(p, min_u(p, A, B) | min_u(p, cp.prime(A), cp.prime(B))))


def boolean_sd_identity(cp: ComplementedPoset) -> Verdict:
    """``x+y = Min U(Max L(Min U(x,y), Min U(x',y')))`` for all pairs."""
    n = cp.size
    for x in range(n):
        for y in range(n):
            lhs = sym_diff(cp, 1 << x, 1 << y)
            rhs = _sd_cone_rhs(cp, 1 << x, 1 << y)
            if lhs != rhs:
                return Verdict(False, Witness((x, y), lhs, rhs))
    return Verdict(True)


class SubsetDistributivity(NamedTuple):
    """Verdicts for the subset hypothesis and the subset symmetric-difference
    identity.  Both are always measured; ``holds`` is the implication.
    """

    hypothesis: bool
    conclusion: bool
    exhaustive: bool
    hypothesis_witness: Optional[tuple[int, int, int]] = None
    conclusion_witness: Optional[Witness] = None

    @property
    def holds(self) -> bool:
        return not self.hypothesis or self.conclusion


def strong_subset_distributivity(
    cp: ComplementedPoset,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> SubsetDistributivity:
    """Check ``U(L(A,B),C) = UL(U(A,C),U(B,C))`` over non-empty subset triples and
    ``A+B = Min U(Max L(Min U(A,B), Min U(A',B')))`` over non-empty subset pairs.

    Exhaustive for carriers up to ``subset_cap``, sampled above.
    """
    if cp.size > subset_cap:
        return _strong_sampled(cp, samples, seed)
    cones = ConeTables(cp.poset)
    hw = _hypothesis_witness(cones, cp.size)
    cw = _conclusion_witness(cp, cones)
    return SubsetDistributivity(hw is None, cw is None, True, hw, cw)


def _hypothesis_witness(cones: ConeTables, n: int) -> Optional[tuple[int, int, int]]:
    L, U = cones.L, cones.U
    # A enters the identity only through (L(A), U(A)) and C only through U(C).
    reps: dict = {}
    uc: dict = {}
    for m in range(1, 1 << n):
        reps.setdefault((int(L[m]), int(U[m])), m)
        uc.setdefault(int(U[m]), m)
    classes = list(reps.items())
    for (la, ua), A in classes:
        for (lb, ub), B in classes:
            ulab = int(U[la & lb])
            for UC, C in uc.items():
                if ulab & UC != int(U[int(L[ua & UC]) & int(L[ub & UC])]):
                    return (A, B, C)
    return None


def _conclusion_witness(cp: ComplementedPoset, cones: ConeTables) -> Optional[Witness]:
    maxl, minu = cones.maxl, cones.minu
    full = 1 << cp.size
    img = np.array([cp.prime(m) for m in range(full)], dtype=np.int64)
    Bs = np.arange(1, full, dtype=np.int64)
    imgB = img[Bs]
    for A in range(1, full):
        iA = int(img[A])
        lhs = minu[maxl[iA | Bs] | maxl[A | imgB]]
        rhs = minu[maxl[minu[A | Bs] | minu[iA | imgB]]]
        bad = np.nonzero(lhs != rhs)[0]
        if bad.size:
            k = int(bad[0])
            return Witness((A, int(Bs[k])), int(lhs[k]), int(rhs[k]))
    return None


def _strong_sampled(cp: ComplementedPoset, samples: int, seed: int) -> SubsetDistributivity:
    p = cp.poset
    rng = np.random.default_rng(seed)
    masks = _sample_masks(rng, p.size, 3 * samples, nonempty=True)
    L, U = p.lower_cone, p.upper_cone
    hw = cw = None
    for k in range(samples):
        A, B, C = masks[3 * k: 3 * k + 3]
        if U(L(A | B) | C) != U(L(U(A | C) | U(B | C))):
            hw = (A, B, C)
            break
    for k in range(samples):
        A, B = masks[3 * k: 3 * k + 2]
        lhs, rhs = sym_diff(cp, A, B), _sd_cone_rhs(cp, A, B)
        if lhs != rhs:
            cw = Witness((A, B), lhs, rhs)
            break
    return SubsetDistributivity(hw is None, cw is None, False, hw, cw)


def weak_distributivity(cp: ComplementedPoset) -> Verdict:
    """``Min U(Max L(x', y')) = Max L(x, y') + y'`` for all pairs.

    Juxtaposition is read as Max L and ``x+1`` as ``x'``.
    """
    p = cp.poset
    n = p.size
    for x in range(n):
        for y in range(n):
            xp, yp = 1 << cp.comp[x], 1 << cp.comp[y]
            lhs = min_u(p, max_l(p, xp, yp))
            rhs = sym_diff(cp, max_l(p, 1 << x, yp), yp)
            if lhs != rhs:
                return Verdict(False, Witness((x, y), lhs, rhs))
    return Verdict(True)
