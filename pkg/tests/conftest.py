"""Shared fixtures, brute-force oracles and hypothesis strategies.

The oracles here work from an explicit ``leq`` matrix with plain lists and
never call the package's cone code, so they can referee it.
"""
from __future__ import annotations

import pytest
from hypothesis import strategies as st

from posetalg import FinitePoset, load_fixture


_ACCEPTANCE: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def figs():
    return {name: load_fixture(name) for name in ("fig1", "fig2", "fig3", "fig4")}


@pytest.fixture(scope="session")
def fig1(figs):
    return figs["fig1"].poset()


@pytest.fixture(scope="session")
def fig2(figs):
    return figs["fig2"].complemented()


@pytest.fixture(scope="session")
def fig3(figs):
    return figs["fig3"].complemented()


@pytest.fixture(scope="session")
def fig4(figs):
    return figs["fig4"].complemented()


def S(p, *labels) -> int:
    """Mask of the given labels of ``p`` (a FinitePoset or ComplementedPoset)."""
    p = getattr(p, "poset", p)
    return p.mask(*labels)


# oracles ---------------------------------------------------------------------


def leq_matrix(p: FinitePoset) -> list[list[bool]]:
    return [[bool(p.down[y] >> x & 1) for y in range(p.size)] for x in range(p.size)]


def oracle_max_l(leq, members: list[int]) -> set[int]:
    n = len(leq)
    lower = [z for z in range(n) if all(leq[z][a] for a in members)]
    return {z for z in lower if not any(w != z and leq[z][w] for w in lower)}


def oracle_min_u(leq, members: list[int]) -> set[int]:
    n = len(leq)
    upper = [z for z in range(n) if all(leq[a][z] for a in members)]
    return {z for z in upper if not any(w != z and leq[w][z] for w in upper)}


def as_set(mask: int) -> set[int]:
    return {i for i in range(mask.bit_length()) if mask >> i & 1}


# strategies ------------------------------------------------------------------


@st.composite
def posets(draw, min_size=1, max_size=7, bounded=False):
    """Random labeled poset: a random order compatible with 0<1<...<n-1, closed
    transitively, then shuffled.  ``bounded`` adds a bottom and a top.
    """
    n = draw(st.integers(min_size, max_size))
    below = [0] * n
    for j in range(n):
        for i in range(j):
            if draw(st.booleans()):
                below[j] |= 1 << i
    down = []
    for j in range(n):
        d = 1 << j
        for i in range(j):
            if below[j] >> i & 1:
                d |= down[i]
        down.append(d)
    if bounded:
        # shift up by one, add bottom 0 and top n+1
        full = (1 << (n + 2)) - 1
        down = [1] + [(d << 1) | 1 for d in down] + [full]
        n += 2
    perm = draw(st.permutations(range(n)))
    names = [f"e{i}" for i in range(n)]
    return FinitePoset(names, down).relabel(perm)


bounded_posets = posets(min_size=0, max_size=5, bounded=True)
