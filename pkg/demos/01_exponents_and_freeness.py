"""Periods, exponents, and repetition-freeness, linear and circular.

A positive integer p is a period of w when w[i+p] == w[i] wherever both
sides exist; the exponent of w is |w| divided by its minimal period.  A word
is r-free when no factor has exponent >= r (r+-free: > r).  Everything is
exact rational arithmetic.
"""

from fractions import Fraction

from circwords import (
    circular_is_r_free,
    circular_max_exponent,
    circumnavigations,
    conjugates,
    exponent_report,
    is_r_free,
)

print("== exponents of whole words ==")
for text in ("1212", "0120", "0120210", "aaa".replace("a", "7")):
    rep = exponent_report(text)
    print(f"  {text}: minimal period {rep.period}, exponent {rep.exponent}")

print()
print("== freeness verdicts ==")
res = is_r_free("0120", Fraction(7, 5), strict=True)
print(f"  0120 is (7/5)+-free: {res.free}")
res = is_r_free("01201", Fraction(7, 5))
print(
    f"  01201 is 7/5-free: {res.free}; worst factor {res.witness_word} "
    f"with exponent {res.witness.exponent}"
)

print()
print("== circular words see more factors ==")
# the hexagonal circle below is 2-free, yet its linear factor 0120 is not
# 2-free as a circle: linked ends create the square 00
free = circular_is_r_free("012021", Fraction(2))
print(f"  <012021> is circularly square-free: {free.free}")
rep = circular_max_exponent("0120")
print(f"  <0120> has a factor of exponent {rep.exponent} (period {rep.period})")

print()
print("== conjugates and circumnavigations of 012 ==")
print("  conjugates:", ", ".join(str(w) for w in conjugates("012")))
print("  circumnavigations:", ", ".join(f"{j}->{w}" for j, w in circumnavigations("012")))
