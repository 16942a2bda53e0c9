"""Polarizing a code, and the formal polarization next to it.

For the four-word code below the polarized code has 29 words and the formal
polarization 35, yet their canonical forms are related and the polarized
minimal primes sit inside the formal ones.
"""

from polarcodes import (
    Code,
    formal_polarize,
    max_mot,
    max_mot_polarized,
    min_primes,
    neural_ideal_cf,
    polarize_code,
    sorted_motifs,
)
from polarcodes.polarization import cf_of_polarized_code, cf_polarized_ideal

C = Code.from_words(["000", "100", "110", "011"])
print("MaxMot(C):  ", [str(a) for a in sorted_motifs(max_mot(C))])
print("polarized:  ", [a.format(True) for a in sorted_motifs(max_mot_polarized(C))])

P, F = polarize_code(C), formal_polarize(C)
print(f"|C^p| = {len(P)}, |C^[p]| = {len(F)}, C^p inside C^[p]: {P <= F}")

print("polarized CF of J_C:", cf_polarized_ideal(C).lines())
print("CF of J_{C^[p]}:    ", neural_ideal_cf(F, True).lines())
print("CF of J_{C^p}:      ", cf_of_polarized_code(C).lines())

polar = min_primes(P, True)
print("minimal primes of J_{C^p}:")
for p in sorted(polar, key=str):
    print("  ", p)
print("extra minimal primes of J_{C^[p]}:")
for p in sorted(min_primes(F, True) - polar, key=str):
    print("  ", p)
