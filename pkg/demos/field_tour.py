"""Tour of the extension field layer: arithmetic, Frobenius, rank.

Elements of F_{q^m} are plain ints whose base-q digits are the
coordinates over the power basis, so 0 and 1 are the field's own zero
and one and hex strings are canonical.
"""

import random

from rankfuzz import element_rank, ext_field, find_normal_element, modulus_string

F = ext_field(2, 8)
print(f"F_{{2^8}}: order {F.order}, modulus {modulus_string(F)}")

a, b = 0x57, 0x83
print(f"\narithmetic on a={F.to_hex(a)} b={F.to_hex(b)}")
print(f"  a + b   = {F.to_hex(F.add(a, b))}")
print(f"  a * b   = {F.to_hex(F.mul(a, b))}")
print(f"  a^-1    = {F.to_hex(F.inv(a))}")
print(f"  a * a^-1 = {F.to_hex(F.mul(a, F.inv(a)))}")

# Frobenius x -> x^2 walks the conjugates; after m steps it is back home
orbit = [F.frobenius(a, i) for i in range(9)]
print(f"\nconjugate orbit of a: {[F.to_hex(x) for x in orbit]}")
assert orbit[8] == a

alpha = find_normal_element(F)
print(f"normal element {F.to_hex(alpha)}: conjugates form a basis,", end=" ")
print(f"rank {element_rank(F, [F.frobenius(alpha, i) for i in range(8)])}")

# rank of a set = dimension of its F_2-span; duplicates and sums drop it
rng = random.Random(7)
sets = {
    "power basis      ": [1, 2, 4, 8, 16, 32, 64, 128],
    "with a repeat    ": [1, 2, 4, 8, 16, 32, 64, 1],
    "with a sum       ": [1, 2, 3, 8, 16, 32, 64, 128],
    "random elements  ": [F.random_element(rng) for _ in range(8)],
}
print("\nrank of 8-element sets:")
for name, elems in sets.items():
    print(f"  {name} rank {element_rank(F, elems)}")

big = ext_field(251, 2)
x = big.random_element(rng)
print(f"\nlarger base field F_{{251^2}}: random x = {big.to_hex(x)},", end=" ")
print(f"x^(order-1) = {big.pow_(x, big.order - 1)}")
