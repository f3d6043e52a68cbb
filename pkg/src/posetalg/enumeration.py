"""Exhaustive generation of small posets and of the structures built on them.

Two labelings are available.  ``labeled`` produces every partial order on the
index set ``0..n-1`` exactly once.  ``natural`` produces only orders in which
``i < j`` implies ``i < j`` as integers; every poset has such a labeling, so
this covers every isomorphism class at a fraction of the cost.  ``auto`` is
labeled up to six elements and natural above.

Labeled posets are grown one element at a time: the new element ``k`` gets a
down-set ``D`` (an ideal of the current poset) and an up-set ``F`` (a filter)
with everything in ``D`` below everything in ``F``.  The restriction to
``0..k-1`` is unique, so each poset appears once.  Natural labelings always
take ``F`` empty.
"""
from __future__ import annotations

import itertools
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional, Union

from .complemented import (
    ComplementedPoset,
    boolean_sd_identity,
    check_sd_identities,
    find_complementations,
    is_distributive,
    sd_associativity_witness,
)
from .cones import associativity_witness, cone_lemma_violation, meets_exist
from .dual import boolean_from_dual, check_dual_axioms, dual_from_boolean, dual_roundtrip
from .errors import PosetError, SizeTooLarge
from .operator_structure import check_axioms, poset_from_structure, roundtrip_structure, structure_from_poset
from .poset import FinitePoset, bits
from .sheffer import check_sheffer_axioms, sheffer_from_poset, sheffer_roundtrip

MAX_EXHAUSTIVE = 8
FILTERS = ("all", "bounded", "lattice", "complemented", "boolean")
LABELINGS = ("labeled", "natural", "auto")
WORKERS_ENV = "POSETALG_WORKERS"

Instance = Union[FinitePoset, ComplementedPoset]


def _check_size(n: int) -> None:
    if not 1 <= n <= MAX_EXHAUSTIVE:
        raise SizeTooLarge(f"exhaustive mode supports 1..{MAX_EXHAUSTIVE} elements, got {n}")


def _resolve_labeling(labeling: str, n: int) -> str:
    if labeling not in LABELINGS:
        raise ValueError(f"labeling must be one of {', '.join(LABELINGS)}")
    if labeling == "auto":
        return "labeled" if n <= 6 else "natural"
    return labeling


# raw generation on down-mask tuples -----------------------------------------


def _ideals(down: tuple[int, ...]) -> list[int]:
    """Down-closed subsets of a poset given by its down masks."""
    n = len(down)
    out = []
    for m in range(1 << n):
        if all(down[i] & ~m == 0 for i in bits(m)):
            out.append(m)
    return out


def _up_masks(down: tuple[int, ...]) -> list[int]:
    up = [0] * len(down)
    for j, d in enumerate(down):
        for i in bits(d):
            up[i] |= 1 << j
    return up


@lru_cache(maxsize=None)
def _downs(n: int, natural: bool) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for down in _downs(n - 1, natural):
        k = n - 1
        ideals = _ideals(down)
        if natural:
            for D in ideals:
                out.append(down + (D | 1 << k,))
            continue
        up = _up_masks(down)
        full = (1 << k) - 1
        filters = [full & ~I for I in ideals]
        for D in ideals:
            # every member of F must lie above every member of D
            above_d = full
            for d in bits(D):
                above_d &= up[d]
            for F in filters:
                if F & D or F & ~above_d:
                    continue
                nd = tuple(down[i] | 1 << k if F >> i & 1 else down[i] for i in range(k))
                out.append(nd + (D | 1 << k,))
    return tuple(out)


def _bounded_downs(n: int, natural: bool) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (1,)
        return
    full = (1 << n) - 1
    pairs = [(0, n - 1)] if natural else [(b, t) for b in range(n) for t in range(n) if b != t]
    for middle in _downs(n - 2, natural):
        for b, t in pairs:
            rest = [i for i in range(n) if i not in (b, t)]
            down = [0] * n
            down[b] = 1 << b
            down[t] = full
            for i, d in enumerate(middle):
                m = 1 << b
                for j in bits(d):
                    m |= 1 << rest[j]
                down[rest[i]] = m
            yield tuple(down)


def _names(n: int, bounds: Optional[tuple[int, int]]) -> tuple[str, ...]:
    letters = iter("abcdefghijklmnop")
    names = []
    for i in range(n):
        if bounds and i == bounds[0]:
            names.append("0")
        elif bounds and i == bounds[1]:
            names.append("1")
        else:
            names.append(next(letters))
    return tuple(names)


def _poset(down: tuple[int, ...]) -> FinitePoset:
    n = len(down)
    full = (1 << n) - 1
    bottom = [i for i in range(n) if all(d >> i & 1 for d in down)]
    top = [i for i in range(n) if down[i] == full]
    bounds = (bottom[0], top[0]) if bottom and top and n > 1 else None
    return FinitePoset(_names(n, bounds), down)


def _raw(n: int, filt: str, natural: bool) -> Iterator[Instance]:
    if filt == "all":
        for down in _downs(n, natural):
            yield _poset(down)
        return
    for down in _bounded_downs(n, natural):
        p = _poset(down)
        if filt == "bounded":
            yield p
        elif filt == "lattice":
            if meets_exist(p):
                yield p
        else:
            if filt == "boolean" and not is_distributive(p):
                continue
            for comp in find_complementations(p):
                yield ComplementedPoset(p, comp)


# streams -------------------------------------------------------------------


@dataclass
class PosetStream:
    """Deterministic, resumable stream of the instances of one size and filter.

    ``position`` counts instances already yielded (within the shard), so a
    stream rebuilt from :meth:`cursor` continues where the old one stopped.
    Shard ``k`` of ``shards`` takes every instance whose global index is
    congruent to ``k``.
    """

    size: int
    filter: str = "all"
    labeling: str = "auto"
    position: int = 0
    shard: int = 0
    shards: int = 1

    def __post_init__(self):
        _check_size(self.size)
        if self.filter not in FILTERS:
            raise ValueError(f"filter must be one of {', '.join(FILTERS)}")
        self.labeling = _resolve_labeling(self.labeling, self.size)
        if not 0 <= self.shard < self.shards:
            raise ValueError("shard index out of range")

    def __iter__(self) -> Iterator[Instance]:
        natural = self.labeling == "natural"
        mine = (x for i, x in enumerate(_raw(self.size, self.filter, natural)) if i % self.shards == self.shard)
        for item in itertools.islice(mine, self.position, None):
            self.position += 1
            yield item

    def cursor(self) -> str:
        return json.dumps({
            "size": self.size, "filter": self.filter, "labeling": self.labeling,
            "position": self.position, "shard": self.shard, "shards": self.shards,
        }, sort_keys=True)

    @classmethod
    def from_cursor(cls, text: str) -> "PosetStream":
        return cls(**json.loads(text))

    def count(self) -> int:
        """Number of remaining instances; consumes the stream."""
        return sum(1 for _ in self)


def enumerate_posets(n: int, filter: str = "all", labeling: str = "auto") -> PosetStream:
    return PosetStream(n, filter, labeling)


def labeled_count(n: int, filter: str = "all") -> int:
    return PosetStream(n, filter, "labeled").count()


def naive_count(n: int) -> int:
    """Labeled posets on n points by filtering every relation on the off-diagonal pairs."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    total = 0
    for chosen in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if chosen >> k & 1}
        if any((j, i) in rel for i, j in rel):
            continue
        if all((i, k) in rel for i, j in rel for j2, k in rel if j == j2 and i != k):
            total += 1
    return total


def canonical_form(p: FinitePoset) -> tuple[int, ...]:
    """Label-free invariant: the least down-mask tuple over all relabelings that
    keep elements sorted by (down-set size, up-set size).
    """
    n = p.size
    key = [(bin(p.down[i]).count("1"), bin(p.up[i]).count("1")) for i in range(n)]
    groups: dict = {}
    for i in range(n):
        groups.setdefault(key[i], []).append(i)
    blocks = [groups[k] for k in sorted(groups)]
    best = None
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order = [i for block in choice for i in block]
        pos = {old: new for new, old in enumerate(order)}
        down = []
        for old in order:
            m = 0
            for j in bits(p.down[old]):
                m |= 1 << pos[j]
            down.append(m)
        t = tuple(down)
        if best is None or t < best:
            best = t
    return best


def unlabeled_count(n: int, filter: str = "all", labeling: str = "auto") -> int:
    seen = set()
    for item in PosetStream(n, filter, labeling):
        p = item.poset if isinstance(item, ComplementedPoset) else item
        seen.add(canonical_form(p))
    return len(seen)


# theorem sweeps --------------------------------------------------------------


def _operator_axioms(p: FinitePoset) -> Optional[str]:
    report = check_axioms(structure_from_poset(p))
    return None if report.ok else f"axioms failed: {', '.join(report.failed_labels())}"


def _operator_recovery(p: FinitePoset) -> Optional[str]:
    try:
        poset_from_structure(structure_from_poset(p))
    except PosetError as exc:
        return str(exc)
    return None


def _operator_roundtrip(p: FinitePoset) -> Optional[str]:
    s = structure_from_poset(p)
    if poset_from_structure(s) != p:
        return "recovered poset differs"
    if not roundtrip_structure(s):
        return "recovered operators differ"
    return None


def _sheffer_axioms(cp: ComplementedPoset) -> Optional[str]:
    report = check_sheffer_axioms(sheffer_from_poset(cp))
    return None if report.ok else f"axioms failed: {', '.join(report.failed_labels())}"


def _sheffer_roundtrip(cp: ComplementedPoset) -> Optional[str]:
    return None if sheffer_roundtrip(cp) else "recovered complemented poset differs"


def _dual_axioms(cp: ComplementedPoset) -> Optional[str]:
    report = check_dual_axioms(dual_from_boolean(cp))
    return None if report.ok else f"axioms failed: {', '.join(report.failed_labels())}"


def _dual_roundtrip(cp: ComplementedPoset) -> Optional[str]:
    d = dual_from_boolean(cp)
    if boolean_from_dual(d) != cp:
        return "recovered Boolean poset differs"
    if not dual_roundtrip(d):
        return "multiplicative reducts differ"
    return None


def _sd_identities(cp: ComplementedPoset) -> Optional[str]:
    report = check_sd_identities(cp)
    return None if report.ok else f"identities failed: {', '.join(report.failed_labels())}"


def _sd_cone_identity(cp: ComplementedPoset) -> Optional[str]:
    v = boolean_sd_identity(cp)
    return None if v else v.witness.render(cp.poset)


# tag -> (filter, check)
THEOREMS: dict[str, tuple[str, Callable[..., Optional[str]]]] = {
    "operator-axioms": ("bounded", _operator_axioms),
    "operator-recovery": ("bounded", _operator_recovery),
    "roundtrip-operator": ("bounded", _operator_roundtrip),
    "cone-lemma": ("all", cone_lemma_violation),
    "sheffer": ("complemented", _sheffer_axioms),
    "sheffer-roundtrip": ("complemented", _sheffer_roundtrip),
    "dual": ("boolean", _dual_axioms),
    "dual-roundtrip": ("boolean", _dual_roundtrip),
    "sd-identities": ("complemented", _sd_identities),
    "sd-cone-identity": ("boolean", _sd_cone_identity),
}


@dataclass
class Failure:
    size: int
    instance: Instance
    message: str


@dataclass
class SweepReport:
    theorem: str
    labeling: str
    instances: dict[int, int] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def total(self) -> int:
        return sum(self.instances.values())

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def render(self) -> str:
        lines = [f"theorem {self.theorem} ({self.labeling} enumeration)"]
        for n in sorted(self.instances):
            lines.append(f"  size {n}: {self.instances[n]} instances")
        for f in self.failures[:5]:
            lines.append(f"  FAIL size {f.size}: {f.message}")
        lines.append(f"{len(self.failures)} failures / {self.total} instances")
        return "\n".join(lines)


def _sweep_shard(theorem: str, n: int, labeling: str, shard: int, shards: int) -> tuple[int, list[Failure]]:
    filt, check = THEOREMS[theorem]
    count, failures = 0, []
    for item in PosetStream(n, filt, labeling, shard=shard, shards=shards):
        count += 1
        msg = check(item)
        if msg is not None:
            failures.append(Failure(n, item, msg))
    return count, failures


def _workers(workers: Optional[int]) -> int:
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    return max(1, workers)


def exhaustive_check(
    theorem: str,
    n_max: int,
    labeling: str = "auto",
    workers: Optional[int] = None,
    n_min: int = 1,
) -> SweepReport:
    """Run the check tagged ``theorem`` on every instance with ``n_min..n_max`` elements.

    ``workers`` defaults to the ``POSETALG_WORKERS`` environment variable, else 1.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem tag {theorem!r}; choose from {', '.join(THEOREMS)}")
    _check_size(n_max)
    workers = _workers(workers)
    start = time.perf_counter()
    report = SweepReport(theorem, labeling)
    sizes = range(max(1, n_min), n_max + 1)
    if workers == 1:
        for n in sizes:
            count, failures = _sweep_shard(theorem, n, labeling, 0, 1)
            report.instances[n] = count
            report.failures += failures
    else:
        with ProcessPoolExecutor(workers) as pool:
            jobs = {(n, k): pool.submit(_sweep_shard, theorem, n, labeling, k, workers)
                    for n in sizes for k in range(workers)}
            for (n, _), job in sorted(jobs.items()):
                count, failures = job.result()
                report.instances[n] = report.instances.get(n, 0) + count
                report.failures += failures
    report.elapsed = time.perf_counter() - start
    return report


# counterexample search -------------------------------------------------------


def _maxl_assoc(p: FinitePoset):
    return associativity_witness(p, "maxl")


def _minu_assoc(p: FinitePoset):
    return associativity_witness(p, "minu")


def _sd_cone_identity_fail(cp: ComplementedPoset):
    v = boolean_sd_identity(cp)
    return None if v else v.witness


def _has_bottom(p: FinitePoset) -> bool:
    return any(u == p.full for u in p.up)


def _has_top(p: FinitePoset) -> bool:
    return any(d == p.full for d in p.down)


# tag -> (filter, extra predicate, witness finder).  The associativity searches
# need a bottom (resp. top) so that no Max L (resp. Min U) is empty; otherwise
# an antichain of two points already breaks associativity for a trivial reason.
PROPERTIES: dict[str, tuple[str, Optional[Callable], Callable]] = {
    "maxl-associativity": ("all", _has_bottom, _maxl_assoc),
    "minu-associativity": ("all", _has_top, _minu_assoc),
    "sd-associativity": ("complemented", None, sd_associativity_witness),
    "sd-cone-identity-complemented": ("complemented", None, _sd_cone_identity_fail),
    "maxl-associativity-lattice": ("lattice", None, _maxl_assoc),
}


@dataclass
class Counterexample:
    instance: Instance
    witness: object

    @property
    def poset(self) -> FinitePoset:
        return self.instance.poset if isinstance(self.instance, ComplementedPoset) else self.instance

    def render(self) -> str:
        return self.witness.render(self.poset)


def find_counterexample(property: str, n_max: int, labeling: str = "auto") -> Optional[Counterexample]:
    """First instance (by size, then stream order) violating ``property``, or None."""
    if property not in PROPERTIES:
        raise ValueError(f"unknown property {property!r}; choose from {', '.join(PROPERTIES)}")
    _check_size(n_max)
    filt, keep, find = PROPERTIES[property]
    for n in range(1, n_max + 1):
        for item in PosetStream(n, filt, labeling):
            if keep is not None and not keep(item):
                continue
            w = find(item)
            if w is not None:
                return Counterexample(item, w)
    return None
