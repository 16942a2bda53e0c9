"""Neural codes, their neural ideals, and polarization.

>>> from polarcodes import Code, max_mot, neural_ideal_cf, sorted_motifs
>>> C = Code.from_words(["000", "001", "011", "111"])
>>> [str(a) for a in sorted_motifs(max_mot(C))]
['00*', '0*1', '*11']
>>> neural_ideal_cf(C).lines()
['X1(1-X2)', 'X1(1-X3)', 'X2(1-X3)']
"""

from .ideals import (
    CanonicalForm,
    MotivicPrime,
    PseudoMonomial,
    VariableSpace,
    cf_of_pm_ideal,
    evaluate,
    format_pm,
    lagrange,
    min_primes,
    motivic_prime,
    neural_ideal_cf,
    parse_pm,
    pm_divides,
    primary_decomposition,
    prime_contains_neural_ideal,
    variety_of_neural_ideal,
)
from .motifs import (
    Code,
    Motif,
    PartialCode,
    PartialMotif,
    complement,
    deactivate,
    is_disjoint,
    is_motif_of,
    max_mot,
    max_mot_complement,
    max_par_mot,
    motif_add,
    motif_leq,
    par_mot_contains,
    parse_code,
    read_code,
    sorted_motifs,
    variety,
)
from .polarization import (
    bar,
    cf_of_polarized_code,
    cf_polarized_ideal,
    depolarize,
    formal_polarize,
    gjs_prime_test,
    gjs_witness,
    max_mot_polarized,
    min_primes_polarized,
    polarize_code,
    polarize_motif,
    polarize_partial_motif,
    polarize_pm,
)

__version__ = "0.1.0"
