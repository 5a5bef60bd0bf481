"""The chord-diagram graph complex: a vertex is itself a perfect matching.

Placing a chord diagram (perfect matching) at each vertex means the
structure count at an n-valent vertex is the Gaussian moment (n-1)!!
for even n and 0 for odd n.  Odd valences drop out entirely, which
already changes the leading coefficient: the theta graph and the
figure-eight both have odd-valence contributions in the commutative
complex, but here only the 4-valent figure-eight survives at n = 2.
"""

from fractions import Fraction

from orbchi import builtin_species, euler_characteristic, gaussian_moment

chord = builtin_species("chord")

print("structure counts Q_n = (n-1)!! (even n only):")
print("  ", {n: chord.structure_count(n) for n in range(3, 11)})
print()

table = euler_characteristic(chord, 11)
print("connected chi_n for the chord complex:")
for n in range(2, 12):
    print(f"  {n:>2}: {table[n]}")

# the n = 2 value by hand: one 4-valent vertex, two loops, |Aut| = 8,
# Q_4 = 3 structures, sign (-1)^1
assert table[2] == Fraction(-1, 8) * gaussian_moment(4)
print()
print("n=2 check: (-1/8) * Q_4 =", Fraction(-1, 8) * gaussian_moment(4))
