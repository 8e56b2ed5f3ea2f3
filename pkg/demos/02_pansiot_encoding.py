"""The binary encoding of highly repetition-free words and its two
forbidden-factor detectors.

Binary letters act on {1..n} as cycles: 0 as (1 2 ... n-1), 1 as
(1 2 ... n).  The codeword letter at each position is the preimage of the
point 1 under the image of the prefix, so long repetition-free words over n
letters compress to binary sequences.  Dangerous structure shows up in the
binary word as short stabilizing factors or as kernel repetitions.
"""

from circwords import (
    Word,
    find_kernel_repetition,
    find_short_stabilizing,
    gamma,
    phi,
    rotation_rename,
)

n = 5
print(f"== permutation images over {{1..{n}}} ==")
for u in ("0", "1", "01", "0000", "11111"):
    print(f"  phi({u!r}) = {phi(n, u)}")

print()
print("== codewords ==")
for u in ("0", "011", "0110100110010110"):
    print(f"  gamma({u}) = {gamma(n, u)}")

print()
print("== forbidden factors in the binary word ==")
hit = find_short_stabilizing(n, "0000")
print(f"  0000 stabilizes 1..{hit.k} with only {hit.length} letters: "
      f"factor at {hit.start}")
wit = find_kernel_repetition(3, "0000")
print(f"  0000 (n=3) kernel repetition: period {wit.period}, length {wit.length}")
print(f"  0101 (n=3) kernel repetition: {find_kernel_repetition(3, '0101')}")

print()
print("== rotating a kernel word only renames its codeword ==")
u = Word((0, 1, 0, 1), 2)
print(f"  u = {u}, gamma = {gamma(3, u)}")
for j in range(1, 4):
    code, renaming = rotation_rename(3, u, j)
    print(f"  rotation by {j}: gamma = {code}, renaming = {renaming}")
