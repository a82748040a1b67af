#!/usr/bin/env python3
"""The insertion pre-Lie product and its Lie bracket.

Inserting one tree into another at a decoration matching its root
redecorates the site with the integrator letter and shuffles the suffix
into the inserted word.  The product is dual to the single-subset part
of the coproduct.
"""

from circletree.hopf import linearized_coproduct
from circletree.lincomb import format_rational
from circletree.prelie import lie_bracket, prelie_product
from circletree.trees import Rct, format_rct

c = Rct(1, (1, 2, 1))
d = Rct(1, (4,))
print(f"{format_rct(c)} inserted with {format_rct(d)} (two matching sites):")
for tree, coeff in sorted(prelie_product(c, d).items()):
    print(f"  {format_rational(coeff)} * {format_rct(tree)}")

print("\nbracket [2:1, 1:e]:")
for tree, coeff in sorted(lie_bracket(Rct(2, (1,)), Rct(1, ())).items()):
    print(f"  {format_rational(coeff)} * {format_rct(tree)}")

target = Rct(1, (0,))
print(f"\nsingle-subset coproduct of {format_rct(target)} at m=2 "
      "(pair basis dual to insertion):")
for (left, right), coeff in sorted(linearized_coproduct(target, 2).items()):
    print(f"  {format_rct(left[0])} (x) {format_rct(right[0])}  {format_rational(coeff)}")

# dual pairing: the coefficient of 1:0 in (1:1) inserted with (1:e)
a, b = Rct(1, (1,)), Rct(1, ())
print(f"\ncoefficient of {format_rct(target)} in {format_rct(a)} <- {format_rct(b)}:",
      format_rational(prelie_product(a, b).get(target, 0)))
