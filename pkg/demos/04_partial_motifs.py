"""Testing primes over the formal polarization with partial codes.

Whether a monomial prime contains the ideal of C^[p] can be decided back in
length n: turn ones into stars, switch off every neuron whose two halves are
both 0, and ask whether what remains is a partial motif of the switched-off
code.  'u' marks an inactive neuron.  p_c and p_a (ones turned into
stars) contain that ideal together or not at all.
"""

from polarcodes import (
    Code,
    deactivate,
    formal_polarize,
    gjs_prime_test,
    gjs_witness,
    max_par_mot,
    motivic_prime,
    prime_contains_neural_ideal,
)
from polarcodes.oracle import brute_gjs_scan

C = Code.from_words(["000", "100", "110", "011"])
F = formal_polarize(C)

for c in ["00**0*", "0*0**0", "100*0*", "1*1***"]:
    idx, a = gjs_witness(c, C)
    P = deactivate(C, idx)
    a_full = c.replace("1", "*")
    print(f"{c}  p_c = {motivic_prime(c, True)}  p_a = {motivic_prime(a_full, True)}")
    print(f"    off: {sorted(idx)}  partial motif {a}  in ParMot: {gjs_prime_test(c, C)}"
          f"  (direct: {prime_contains_neural_ideal(c, F)})")
    print(f"    MaxParMot: {sorted(map(str, max_par_mot(P)))}")

rep = brute_gjs_scan(C)
print(f"all {rep.checked} doubled motifs agree:", rep.ok)
