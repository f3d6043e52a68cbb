"""
From posets to operator structures and back
===========================================

A bounded poset determines a pair of set-valued operators; a complemented
poset determines a single stroke; a Boolean poset determines a ring-like pair
(+, *).  Each construction can be inverted.  The script runs all three on the
Boolean fixture and then breaks one table entry to show the checker's report.
"""

from posetalg import (
    DualStructure,
    boolean_from_dual,
    check_axioms,
    check_dual_axioms,
    check_sheffer_axioms,
    dual_from_boolean,
    dual_roundtrip,
    load_fixture,
    poset_from_sheffer,
    poset_from_structure,
    sheffer_from_poset,
    structure_from_poset,
)
from posetalg.io import StructureFile

cp = load_fixture("fig3").complemented()

s = structure_from_poset(cp.poset)
print(check_axioms(s).render())
print("poset recovered:", poset_from_structure(s) == cp.poset)

stroke = sheffer_from_poset(cp)
print(check_sheffer_axioms(stroke).render())
print("complemented poset recovered:", poset_from_sheffer(stroke) == cp)

d = dual_from_boolean(cp)
print(check_dual_axioms(d).render())
print("Boolean poset recovered:", boolean_from_dual(d) == cp)
print("round trip on the structure:", dual_roundtrip(d))

# the text format is what the command line reads
print(StructureFile.from_structure(d).dumps()[:200], "...")

# one wrong product entry is caught with a witness
a, b = cp.poset.index("a"), cp.poset.index("b")
times = [list(r) for r in d.times]
times[a][b] = times[b][a] = 1 << a
print(check_dual_axioms(DualStructure(d.names, d.plus, times, d.zero, d.one)).render())
