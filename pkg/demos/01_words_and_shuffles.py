#!/usr/bin/env python3
"""Words, the grading, and the shuffle product.

The alphabet is {x_0, x_1, ..., x_m}.  x_0 is the integrator letter and
weighs 2 in the grading; every other letter weighs 1.  Words multiply
under the shuffle product, which sums all interleavings.
"""

from circletree.words import format_word, letter_weight, shuffle, word_degree

print("letter weights:", {f"x_{i}": letter_weight(i) for i in range(3)})

for word in [(), (0, 1), (0, 0)]:
    print(f"degree of {format_word(word)!r}: {word_degree(word)}")

print("\nshuffle of x_0x_1 with x_2:")
for word, coeff in sorted(shuffle((0, 1), (2,)).items()):
    print(f"  {coeff} * {format_word(word)}")

print("\nidentical letters merge with multiplicity:")
for word, coeff in shuffle((1,), (1,)).items():
    print(f"  {coeff} * {format_word(word)}")

total = sum(shuffle((0, 1, 2), (1, 1)).values())
print(f"\ncoefficient mass of a (3,2) shuffle: {total} (= binomial(5,3) = 10)")
