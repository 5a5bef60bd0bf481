"""Reproduce the headline table: chi_n for three classical graph complexes.

For each loop order n, chi_n = sum over connected graphs with n loops
(every vertex at least trivalent) of (-1)^{vertices} / |Aut|.  The
commutative column puts no structure at vertices, the associative
column a cyclic order of the incident half-edges (ribbon graphs), the
Lie column a vertex space of dimension (n-2)!.

Run:  python3 demos/reproduce_table.py
"""

from orbchi import builtin_species, euler_characteristic

N = 11
names = ("commutative", "associative", "lie")
tables = {name: euler_characteristic(builtin_species(name), N) for name in names}

widths = {name: max([len(name)] + [len(str(tables[name][n]))
                                   for n in range(2, N + 1)])
          for name in names}

header = "  n | " + " | ".join(f"{name:>{widths[name]}}" for name in names)
print(header)
print("-" * len(header))
for n in range(2, N + 1):
    row = " | ".join(f"{str(tables[name][n]):>{widths[name]}}" for name in names)
    print(f" {n:>2} | {row}")

print()
print("Commutative and associative columns agree entry for entry, even")
print("though the associative complex has (n-1)! times as many vertex")
print("structures; the signed automorphism weights conspire to cancel:")
assert all(tables["commutative"][n] == tables["associative"][n]
           for n in range(2, N + 1))
print("  checked exactly for n = 2..%d" % N)
