#!/usr/bin/env python3
"""The coordinate-map Hopf algebra and its bijection with circle trees.

The coproduct on coordinate maps is built from prepend-operator
recursions, never from extraction combinatorics, yet transporting the
tree coproduct through channel/word identification gives exactly the
same answer.  That cross-check is what certifies both implementations.
"""

from circletree.coordmaps import (
    CoordMap,
    antipode,
    deshuffle_coproduct,
    format_cmono,
    format_poly,
    full_delta,
    to_coord_map,
    tree_tensor_to_coord,
)
from circletree.hopf import coproduct
from circletree.lincomb import format_rational
from circletree.trees import Rct

a = CoordMap(1, (2, 1))
print("deshuffle of a[1;2.1] against channel 2:")
for (left, right), coeff in sorted(deshuffle_coproduct(a, 2).items()):
    print(f"  {format_cmono(left)} (x) {format_cmono(right)}  {format_rational(coeff)}")

print("\nantipode of a[1;0] at m=2:")
print(format_poly(antipode(CoordMap(1, (0,)), 2)))

c = Rct(1, (0, 0))
lhs = tree_tensor_to_coord(coproduct(c, 1))
rhs = full_delta(to_coord_map(c), 1)
assert lhs == rhs
print("\ntree coproduct of 1:0.0, transported, equals the recursion-built one:")
for (left, right), coeff in sorted(rhs.items()):
    print(f"  {format_cmono(left)} (x) {format_cmono(right)}  {format_rational(coeff)}")
