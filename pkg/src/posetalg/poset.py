"""Finite posets on at most 64 named elements.

Subsets of the carrier are plain ``int`` bitmasks: bit ``i`` stands for the
element with index ``i``.  Every operator in the package takes and returns
such masks; :meth:`FinitePoset.mask` and :meth:`FinitePoset.render` convert
between masks and labels.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .errors import CycleDetected, DuplicateName, NotBounded, UnknownName

ElementSet = int

MAX_SIZE = 64


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def single(mask: int) -> Optional[int]:
    """The index of the only member of ``mask``, or None if it is not a singleton."""
    if mask and not mask & (mask - 1):
        return mask.bit_length() - 1
    return None


class FinitePoset:
    """Immutable finite poset.

    ``down[i]`` is the mask of all ``j <= i`` and ``up[i]`` the mask of all
    ``j >= i`` (both include ``i``).
    """

    __slots__ = ("names", "down", "up", "size", "full", "_index", "_covers")

    def __init__(self, names: Sequence[str], down: Sequence[int]):
        self.names = tuple(names)
        self.size = len(self.names)
        self.down = tuple(down)
        self.full = (1 << self.size) - 1
        up = [0] * self.size
        for j, d in enumerate(self.down):
            for i in bits(d):
                up[i] |= 1 << j
        self.up = tuple(up)
        self._index = {name: i for i, name in enumerate(self.names)}
        self._covers = None

    # construction -------------------------------------------------------

    @classmethod
    def from_covers(cls, names: Sequence[str], covers: Iterable[tuple[str, str]]) -> "FinitePoset":
        """Build the poset whose order is the reflexive-transitive closure of ``covers``.

        Each cover ``(x, y)`` states ``x < y``.
        """
        names = [str(n) for n in names]
        _check_names(names)
        index = {n: i for i, n in enumerate(names)}
        n = len(names)
        below = [0] * n
        for lo, hi in covers:
            for label in (lo, hi):
                if label not in index:
                    raise UnknownName(f"unknown element {label!r}")
            below[index[hi]] |= 1 << index[lo]
        return cls(names, _closure(names, below))

    @classmethod
    def from_leq(cls, names: Sequence[str], leq) -> "FinitePoset":
        """Build from a full relation given as ``leq[x][y]`` truth values.

        The relation must already be a partial order; reflexivity is added.
        """
        names = [str(n) for n in names]
        _check_names(names)
        n = len(names)
        down = []
        for y in range(n):
            d = 1 << y
            for x in range(n):
                if leq[x][y]:
                    d |= 1 << x
            down.append(d)
        p = cls(names, down)
        p.validate()
        return p

    def validate(self) -> None:
        """Raise CycleDetected unless the relation is a reflexive, antisymmetric, transitive order."""
        for i, d in enumerate(self.down):
            if not d >> i & 1:
                raise CycleDetected(f"{self.names[i]} is not <= itself")
            for j in bits(d):
                if j != i and self.down[j] >> i & 1:
                    raise CycleDetected(f"{self.names[i]} and {self.names[j]} are mutually comparable")
                if self.down[j] & ~d:
                    raise CycleDetected(f"order is not transitive below {self.names[i]}")

    # labels and masks ---------------------------------------------------

    def __len__(self) -> int:
        return self.size

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownName(f"unknown element {label!r}") from None

    def mask(self, *labels: str) -> ElementSet:
        m = 0
        for label in labels:
            m |= 1 << self.index(label)
        return m

    def labels(self, mask: ElementSet) -> list[str]:
        return [self.names[i] for i in bits(mask)]

    def render(self, mask: ElementSet) -> str:
        """``{a,b'}`` in declaration order; singletons bare, the empty set as ``{}``."""
        return render_set(self.names, mask)

    def compact(self, mask: ElementSet) -> str:
        """Members concatenated in declaration order, e.g. ``b'c'``."""
        return compact_set(self.names, mask)

    # order --------------------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """The cover (Hasse) pairs ``(x, y)`` with ``x < y``, sorted."""
        if self._covers is None:
            pairs = []
            for y, d in enumerate(self.down):
                strict = d & ~(1 << y)
                for x in bits(strict):
                    between = strict & self.up[x] & ~(1 << x)
                    if not between:
                        pairs.append((x, y))
            self._covers = tuple(sorted(pairs))
        return self._covers

    def lower_cone(self, A: ElementSet) -> ElementSet:
        """``{x | x <= a for all a in A}``; the whole carrier when A is empty."""
        r = self.full
        for a in bits(A):
            r &= self.down[a]
        return r

    def upper_cone(self, A: ElementSet) -> ElementSet:
        r = self.full
        for a in bits(A):
            r &= self.up[a]
        return r

    def maximal(self, A: ElementSet) -> ElementSet:
        r = 0
        for a in bits(A):
            if self.up[a] & A == 1 << a:
                r |= 1 << a
        return r

    def minimal(self, A: ElementSet) -> ElementSet:
        r = 0
        for a in bits(A):
            if self.down[a] & A == 1 << a:
                r |= 1 << a
        return r

    def set_leq(self, A: ElementSet, B: ElementSet) -> bool:
        """True iff every member of A is below every member of B."""
        return A & ~self.lower_cone(B) == 0

    def bounds(self) -> Optional[tuple[int, int]]:
        """(bottom, top) indices, or None unless both exist."""
        bottom = [i for i, u in enumerate(self.up) if u == self.full]
        top = [i for i, d in enumerate(self.down) if d == self.full]
        if bottom and top:
            return bottom[0], top[0]
        return None

    @property
    def bottom(self) -> int:
        b = self.bounds()
        if b is None:
            raise NotBounded("poset has no bottom and top")
        return b[0]

    @property
    def top(self) -> int:
        b = self.bounds()
        if b is None:
            raise NotBounded("poset has no bottom and top")
        return b[1]

    def is_bounded(self) -> bool:
        return self.bounds() is not None

    def dual(self) -> "FinitePoset":
        """The order-dual poset on the same labels."""
        return FinitePoset(self.names, self.up)

    def relabel(self, perm: Sequence[int]) -> "FinitePoset":
        """Poset with element ``i`` moved to index ``perm[i]``."""
        n = self.size
        names = [""] * n
        down = [0] * n
        for i in range(n):
            names[perm[i]] = self.names[i]
            d = 0
            for j in bits(self.down[i]):
                d |= 1 << perm[j]
            down[perm[i]] = d
        return FinitePoset(names, down)

    # equality is label-respecting: same names, same order ------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.names == other.names and self.down == other.down

    def __hash__(self) -> int:
        return hash((self.names, self.down))

    def __repr__(self) -> str:
        cov = ", ".join(f"{self.names[x]}<{self.names[y]}" for x, y in self.covers)
        return f"FinitePoset([{' '.join(self.names)}]; {cov})"


def render_set(names: Sequence[str], mask: int) -> str:
    i = single(mask)
    if i is not None:
        return names[i]
    return "{" + ",".join(names[i] for i in bits(mask)) + "}"


def compact_set(names: Sequence[str], mask: int) -> str:
    return "".join(names[i] for i in bits(mask)) if mask else "{}"


def _check_names(names: Sequence[str]) -> None:
    if len(names) > MAX_SIZE:
        raise ValueError(f"at most {MAX_SIZE} elements are supported")
    seen = set()
    for n in names:
        if n in seen:
            raise DuplicateName(f"duplicate element {n!r}")
        seen.add(n)


def _closure(names: Sequence[str], below: list[int]) -> list[int]:
    n = len(below)
    down: list[Optional[int]] = [None] * n
    state = [0] * n  # 0 new, 1 on stack, 2 done

    def visit(y: int) -> int:
        if state[y] == 2:
            return down[y]
        if state[y] == 1:
            raise CycleDetected(f"cover relation has a cycle through {names[y]}")
        state[y] = 1
        d = 1 << y
        for x in bits(below[y]):
            d |= visit(x)
        state[y] = 2
        down[y] = d
        return d

    for y in range(n):
        visit(y)
    return down
