"""Watch the exact series approximate log Gamma.

The generating function of the commutative chi_n, evaluated as a power
series in t, is the asymptotic expansion of

    (1/t)(1 + log t) - (1/2) log(2 pi t) + log Gamma(1/t)

as t -> 0.  Asymptotic means: truncate after K terms and the error is
on the scale of the first omitted term, |B_{2K+2}/((2K+2)(2K+1))| t^{2K+1}.
The table below shows the residual hugging that bound from below.
"""

from orbchi import check_commutative_asymptotics

print(f"{'t':>6} {'K':>2} {'residual':>12} {'next-term bound':>16} {'ratio':>7}")
for t in (0.2, 0.1, 0.05):
    for terms in (1, 2, 3):
        r = check_commutative_asymptotics(t, terms)
        ratio = r.residual / r.bound if r.bound else float("inf")
        status = "pass" if r.passed else "FAIL"
        print(f"{t:>6} {terms:>2} {r.residual:>12.3e} {r.bound:>16.3e} "
              f"{ratio:>7.3f} {status}")

print()
print("ratio stays near 1 (and always under the 10x slack): the series")
print("is asymptotic, not convergent, so shrinking t -- not adding")
print("terms -- is what buys accuracy.")
