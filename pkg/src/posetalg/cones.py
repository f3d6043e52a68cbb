"""The set-valued operators Max L and Min U.

Both take two subsets and act on their union, so ``max_l(p, x, y)`` with
singleton masks, ``max_l(p, A, x)`` and ``max_l(p, A, B)`` are all the same
operation.  In a lattice they reduce to meet and join.
"""
from __future__ import annotations

from typing import NamedTuple, Optional

from .poset import ElementSet, FinitePoset, bits, single


def max_l(p: FinitePoset, A: ElementSet, B: ElementSet = 0) -> ElementSet:
    """Maximal elements of the lower cone of A and B."""
    return p.maximal(p.lower_cone(A | B))


def min_u(p: FinitePoset, A: ElementSet, B: ElementSet = 0) -> ElementSet:
    """Minimal elements of the upper cone of A and B."""
    return p.minimal(p.upper_cone(A | B))


def meets_exist(p: FinitePoset) -> bool:
    """True iff every pair has a one-element Max L and Min U, i.e. p is a lattice."""
    n = p.size
    for x in range(n):
        for y in range(x + 1, n):
            xy = 1 << x | 1 << y
            if single(max_l(p, xy)) is None or single(min_u(p, xy)) is None:
                return False
    return True


class AssocWitness(NamedTuple):
    x: int
    y: int
    z: int
    lhs: ElementSet
    rhs: ElementSet

    def render(self, p: FinitePoset) -> str:
        n = p.names
        return f"({n[self.x]},{n[self.y]},{n[self.z]}): {p.render(self.lhs)} != {p.render(self.rhs)}"


def associativity_witness(p: FinitePoset, which: str = "maxl") -> Optional[AssocWitness]:
    """First triple (lexicographic on indices) where the operator is not associative."""
    if which == "maxl":
        op = max_l
    elif which == "minu":
        op = min_u
    else:
        raise ValueError(f"which must be 'maxl' or 'minu', not {which!r}")
    n = p.size
    pair = [[op(p, 1 << x, 1 << y) for y in range(n)] for x in range(n)]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = op(p, pair[x][y], 1 << z)
                rhs = op(p, 1 << x, pair[y][z])
                if lhs != rhs:
                    return AssocWitness(x, y, z, lhs, rhs)
    return None


def cone_lemma_violation(p: FinitePoset) -> Optional[str]:
    """Scan every subset A of the carrier for a failure of the basic cone facts.

    Checked: every member of A lies above some minimal and below some maximal
    member of A; ``L(A) = L(B)`` exactly when ``Max L(A) = Max L(B)`` and dually
    for upper cones; ``L(Min A) = L(A)`` and ``U(Max A) = U(A)``.  Returns a
    description of the first failure, or None.
    """
    L, U = p.lower_cone, p.upper_cone
    by_l: dict[int, int] = {}
    by_maxl: dict[int, int] = {}
    by_u: dict[int, int] = {}
    by_minu: dict[int, int] = {}
    for A in range(1 << p.size):
        lo, hi = p.minimal(A), p.maximal(A)
        for a in bits(A):
            if not (p.down[a] & lo and p.up[a] & hi):
                return f"{p.names[a]} in {p.render(A)} has no minimal or no maximal member around it"
        la, ua = L(A), U(A)
        if L(lo) != la or U(hi) != ua:
            return f"Min or Max of {p.render(A)} changes its cones"
        ml, mu = p.maximal(la), p.minimal(ua)
        if by_l.setdefault(la, ml) != ml or by_maxl.setdefault(ml, la) != la:
            return f"lower cone and Max L disagree at {p.render(A)}"
        if by_u.setdefault(ua, mu) != mu or by_minu.setdefault(mu, ua) != ua:
            return f"upper cone and Min U disagree at {p.render(A)}"
    return None
