"""
Max L and Min U on a poset that is not a lattice
================================================

In a poset a pair of elements need not have a meet.  The set of maximal
common lower bounds, Max L, stands in for it.  This script shows what that
operator looks like on the six-element fixture and why it is not associative.
"""

from posetalg import FinitePoset, associativity_witness, load_fixture, max_l, min_u

p = load_fixture("fig1").poset()
print(p)

# c and d have two maximal lower bounds, so their "meet" is a two-element set
cd = max_l(p, p.mask("c"), p.mask("d"))
print("Max L(c, d) =", p.render(cd))

# feeding a set back in: the operator acts on the union of its arguments
left = max_l(p, cd, p.mask("e"))
right = max_l(p, p.mask("c"), max_l(p, p.mask("d"), p.mask("e")))
print("Max L(Max L(c,d), e) =", p.render(left))
print("Max L(c, Max L(d,e)) =", p.render(right))

# the scanner finds the first failing triple in index order
w = associativity_witness(p, "maxl")
print("first non-associative triple:", w.render(p))

# Min U is the order dual; e has no upper bound shared with c here
print("Min U(c, e) =", p.render(min_u(p, p.mask("c"), p.mask("e"))))

# on a lattice both operators return the single meet and join
square = FinitePoset.from_covers("0 a b 1".split(), [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
print("in the square: Max L(a,b) =", square.render(max_l(square, square.mask("a", "b"))),
      " Min U(a,b) =", square.render(min_u(square, square.mask("a", "b"))))
print("associative on the square:", associativity_witness(square) is None)
