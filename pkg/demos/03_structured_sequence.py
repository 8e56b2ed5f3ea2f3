"""The {1,2}-sequence behind the construction, generated two ways.

b_i is 1 when i = 1 mod 3, 2 when i = 2 mod 3, and b_{i/3} when 3 divides i;
equivalently the fixed point of 1 -> 121, 2 -> 122.  Its factors have rigid
periods: once a period q persists for 3^k extra letters, 3^k divides q.
Factors that begin and end in 2 exist at every length, which the builder
leans on.
"""

from circwords import (
    beta_prefix,
    beta_recurrence,
    beta_tau,
    factor_bracketed_by_two,
    period_divisibility_violations,
    sigma,
)

print("== the first 60 letters, from both generators ==")
print("  recurrence:", "".join(map(str, beta_recurrence(60))))
print("  tau power: ", "".join(map(str, beta_tau(60))))
print("  cross-checked prefix object:", beta_prefix(60).word)

print()
print("== leftmost factors bracketed by the letter 2 ==")
for k in (1, 2, 4, 10, 25):
    start, factor = factor_bracketed_by_two(k)
    print(f"  length {k:>3}: position {start:>3}, factor {factor}")

print()
print("== the {1,3} renaming used for the second half of the interleave ==")
start, factor = factor_bracketed_by_two(12)
print(f"  u        = {factor}")
print(f"  sigma(u) = {sigma(factor)}")

print()
print("== period rigidity on the 2000-letter prefix ==")
violations = period_divisibility_violations(2000, max_factor_length=40)
print(f"  violations of the 3-power divisibility law: {violations or 'none'}")
