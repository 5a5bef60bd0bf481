"""The commutative Euler characteristics are Bernoulli numbers in disguise.

chi_n = B_n / (n(n-1)) for even n, and 0 for odd n.  These are exactly
the coefficients of the Stirling correction series for log Gamma, which
is why the analytic check in demos/stirling_asymptotics.py works.  Here
we verify the identity exactly, term by term.
"""

from orbchi import (
    bernoulli_numbers,
    builtin_species,
    euler_characteristic,
    verify_bernoulli,
)

N = 14
bern = bernoulli_numbers(N)
print("Bernoulli numbers (B_1 = -1/2 convention):")
print("  ", {n: str(bern[n]) for n in range(0, 9)})
print()

table = euler_characteristic(builtin_species("commutative"), N)
print(f"{'n':>3} {'chi_n':>12} {'B_n/(n(n-1))':>14}")
for check in verify_bernoulli(table):
    mark = "" if check.ok else "   <- MISMATCH"
    print(f"{check.loops:>3} {str(check.value):>12} {str(check.expected):>14}{mark}")

assert all(c.ok for c in verify_bernoulli(table))
print()
print(f"exact agreement for n = 2..{N}")
