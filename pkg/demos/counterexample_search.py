"""
Sweeping every small poset
==========================

The theorems are about all finite posets, so the package can check them on
every poset up to eight elements and look for the smallest counterexample to
statements that are expected to fail.
"""

from posetalg.enumeration import (
    exhaustive_check,
    find_counterexample,
    labeled_count,
    naive_count,
    unlabeled_count,
)
from posetalg.io import PosetFile

# labeled posets, checked against brute force over all relations
for n in range(1, 5):
    print(n, labeled_count(n), naive_count(n), unlabeled_count(n))

# theorems: zero failures expected
for tag, n in [("roundtrip-operator", 5), ("sheffer-roundtrip", 6), ("sd-cone-identity", 8)]:
    print(exhaustive_check(tag, n).render())

# statements that fail: the search returns the smallest witness
for prop in ("maxl-associativity", "sd-associativity", "sd-cone-identity-complemented"):
    found = find_counterexample(prop, 8)
    print(f"--- {prop}: {found.render()}")
    print(PosetFile.from_poset(found.poset, getattr(found.instance, "comp", None)).dumps())

print("lattices:", find_counterexample("maxl-associativity-lattice", 5))
