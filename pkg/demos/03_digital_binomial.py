"""The digital binomial identity and its collapse to the classical one.

Run:  python demos/03_digital_binomial.py
"""

import random

from sierpinski import (
    X,
    Y,
    binomial,
    digital_expansion,
    exponent_pair_counts,
    sum_of_digits,
    verify_digital_binomial,
)

# (x+y)^s(m) equals the sum of x^s(k) y^s(m-k) over the carry-free splits
# k + (m-k) = m.  For m = 3 every k in 0..3 qualifies:
for m in (3, 5, 7):
    expansion = digital_expansion(m)
    pieces = " + ".join(f"x^s({k})y^s({m - k})" for k, _, _ in expansion.terms)
    print(f"(x+y)^s({m}) = {pieces}")
    print(f"           = {expansion.collect().pretty()}")
    print()

# both sides are compared symbolically, in exact arithmetic
report = verify_digital_binomial(3)
print(report.to_text())
print()

# at m = 2^n - 1 every k in [0, m] is carry-free and the exponent pairs
# collapse with binomial multiplicities: the classical Binomial Theorem
n = 5
counts = exponent_pair_counts(2**n - 1)
row = [counts[(k, n - k)] for k in range(n + 1)]
print(f"m = 2^{n}-1 collapses to coefficients {row}")
print(f"Pascal row {n}:                        {[binomial(n, k) for k in range(n + 1)]}")
print()

# the identity holds for every m; spot-check a few large random ones
rng = random.Random(7)
for _ in range(3):
    m = rng.getrandbits(36)
    ok = verify_digital_binomial(m).passed
    print(f"m = {m} (s = {sum_of_digits(m)}): {'verified' if ok else 'FAILED'}")

# a numeric sanity check at integer points
m = 1234567
sigma = sum_of_digits(m)
lhs = ((X + Y) ** sigma).eval(3, -2)
rhs = digital_expansion(m).collect().eval(3, -2)
print(f"\nboth sides at (x, y) = (3, -2), m = {m}: {lhs} == {rhs} == {(3 - 2) ** sigma}")
