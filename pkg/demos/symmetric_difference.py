"""
Symmetric difference on complemented posets
===========================================

x + y = Min U(Max L(x', y), Max L(x, y')) is set-valued.  This script prints
the tables for the three complemented fixtures, checks the identities that
carry over from Boolean algebras, and shows where the ring-like behaviour stops.
"""

from posetalg import (
    boolean_sd_identity,
    check_sd_identities,
    is_boolean,
    load_fixture,
    sd_associativity_witness,
    sym_diff,
    sym_diff_table,
    weak_distributivity,
)

fixtures = {name: load_fixture(name).complemented() for name in ("fig2", "fig3", "fig4")}

for name, cp in fixtures.items():
    print(f"--- {name} ({'Boolean' if is_boolean(cp) else 'not distributive'})")
    print(sym_diff_table(cp).render_golden())
    print("identities:", "all pass" if check_sd_identities(cp).ok else "some fail")

# the expression through Min U and Max L only agrees with + when the poset is distributive
for name, cp in fixtures.items():
    v = boolean_sd_identity(cp)
    print(f"{name}: x+y = Min U(Max L(Min U(x,y), Min U(x',y')))", "holds" if v else f"fails at {v.witness.render(cp.poset)}")

# + is not associative, even on a Boolean poset
cp = fixtures["fig4"]
a, b, c = (cp.poset.mask(x) for x in "abc")
print("fig4: (a+b)+c =", cp.poset.render(sym_diff(cp, sym_diff(cp, a, b), c)),
      " a+(b+c) =", cp.poset.render(sym_diff(cp, a, sym_diff(cp, b, c))))
print("fig4: first failing triple", sd_associativity_witness(cp).render(cp.poset))

for name, cp in fixtures.items():
    print(f"{name}: weak distributivity", "holds" if weak_distributivity(cp) else "fails")
