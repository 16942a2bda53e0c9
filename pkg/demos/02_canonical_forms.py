"""Neural ideals through their canonical forms.

Each maximal motif of the complement gives one Lagrange polynomial, and
together they are the canonical form.  The same machinery computes the
canonical form of any ideal given by pseudo-monomial generators.
"""

from polarcodes import (
    Code,
    VariableSpace,
    cf_of_pm_ideal,
    min_primes,
    neural_ideal_cf,
    parse_pm,
    primary_decomposition,
    variety_of_neural_ideal,
)

C = Code.from_words(["000", "001", "011", "111"])
cf = neural_ideal_cf(C)
print("CF(J_C):")
print(cf)
print("zero set is C again:", variety_of_neural_ideal(C) == C)

# two generators, but the canonical form has a third element
S = VariableSpace(3)
gens = [parse_pm("X1(1-X2)", S), parse_pm("X2(1-X3)", S)]
print("CF of", ", ".join(map(str, gens)), "->", cf_of_pm_ideal(gens, S).lines())

print("minimal primes:", sorted(str(p) for p in min_primes(C)))
print("decomposition: ", "  and  ".join(str(p) for p in primary_decomposition(C)))
