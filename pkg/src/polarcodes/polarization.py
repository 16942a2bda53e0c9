"""Polarization of motifs, pseudo-monomials, codes and partial motifs.

A motif of length ``n`` polarizes to one of length ``2n``::

    0  ->  0 | *
    1  ->  * | 0
    *  ->  * | *

(and ``u -> u | u`` for partial motifs).  Everything on the doubled side is
derived from data of length ``n``: maximal motifs transfer directly and
complements go through the hitting-set enumeration in
:func:`polarcodes.motifs.max_mot_complement`, so no ``3**(2n)`` search is
needed.
"""

from __future__ import annotations

from functools import lru_cache

from .ideals import (
    CanonicalForm,
    MotivicPrime,
    PseudoMonomial,
    VariableSpace,
    cf_from_complement_motifs,
    neural_ideal_cf,
    primary_decomposition,
)
from .motifs import (
    INACTIVE,
    STAR,
    Code,
    Motif,
    PartialMotif,
    as_motif,
    complement,
    deactivate,
    max_mot,
    max_mot_complement,
    par_mot_contains,
    variety_mask,
)

_POLAR = {"0": ("0", "*"), "1": ("*", "0"), "*": ("*", "*"), "u": ("u", "u")}
_DEPOLAR = {pair: c for c, pair in _POLAR.items()}
_BAR = str.maketrans("01", "10")


def polarize_pm(f: PseudoMonomial) -> PseudoMonomial:
    """``prod X_i prod (1 - X_j)`` becomes the square-free ``prod X_i prod Y_j``."""
    if f.space.doubled:
        raise ValueError("pseudo-monomial is already in a doubled space")
    n = f.space.n
    return PseudoMonomial(VariableSpace(n, True), f.sigma | {n + j for j in f.tau})


def polarize_motif(a) -> Motif:
    a = as_motif(a)
    first = "".join(_POLAR[c][0] for c in a)
    second = "".join(_POLAR[c][1] for c in a)
    return type(a)(first + second)


def is_polar(b) -> bool:
    b = as_motif(b)
    if len(b) % 2:
        return False
    n = len(b) // 2
    return all((b[i], b[n + i]) in _DEPOLAR for i in range(n))


def depolarize(b) -> Motif:
    """The unique ``a`` with ``polarize_motif(a) == b``."""
    b = as_motif(b)
    if len(b) % 2:
        raise ValueError(f"{b} has odd length")
    n = len(b) // 2
    out = []
    for i in range(n):
        pair = (b[i], b[n + i])
        if pair not in _DEPOLAR:
            raise ValueError(f"{b.format(True)} is not polar at position {i + 1}")
        out.append(_DEPOLAR[pair])
    return type(b)("".join(out))


def bar(a) -> Motif:
    """Swap 0 and 1, keep stars."""
    a = as_motif(a)
    return type(a)(a.symbols.translate(_BAR))


def bar_polar_bar(b) -> Motif:
    """The doubled motif ``bar(polarize(bar(b)))``; its Lagrange polynomial is
    the polarization of ``L_b``."""
    return bar(polarize_motif(bar(b)))


def max_mot_polarized(C: Code) -> set[Motif]:
    """Maximal motifs of the polarized code, read off from those of ``C``."""
    return {polarize_motif(a) for a in max_mot(C)}


@lru_cache(maxsize=32)
def polarize_code(C: Code) -> Code:
    n2 = 2 * C.n
    return Code.from_mask(variety_mask(max_mot_polarized(C), n2), n2)


def formal_complement_motifs(C: Code) -> set[Motif]:
    """``bar(polarize(bar(b)))`` over the maximal motifs ``b`` of the complement.

    These are exactly the maximal motifs of the complement of the formal
    polarization.
    """
    return {bar_polar_bar(b) for b in max_mot(complement(C))}


@lru_cache(maxsize=32)
def formal_polarize(C: Code) -> Code:
    n2 = 2 * C.n
    return Code.from_mask(~variety_mask(formal_complement_motifs(C), n2), n2)


def cf_polarized_ideal(C: Code) -> CanonicalForm:
    """CF of the polarized neural ideal: polarize each element of CF(J_C)."""
    return CanonicalForm(VariableSpace(C.n, True),
                         {polarize_pm(f) for f in neural_ideal_cf(C).elements})


def cf_polarized_ideal_via_motifs(C: Code) -> CanonicalForm:
    """Same canonical form, built from bar-polarized complement motifs."""
    return cf_from_complement_motifs(formal_complement_motifs(C), VariableSpace(C.n, True))


def polarized_complement_max_mot(C: Code) -> set[Motif]:
    """Maximal motifs of the complement of the polarized code."""
    return max_mot_complement(max_mot_polarized(C), 2 * C.n)


def cf_of_polarized_code(C: Code) -> CanonicalForm:
    """CF(J of the polarized code), via the hitting-set complement."""
    return cf_from_complement_motifs(polarized_complement_max_mot(C), VariableSpace(C.n, True))


def min_primes_polarized(C: Code) -> set[MotivicPrime]:
    return {MotivicPrime(b, True) for b in max_mot_polarized(C)}


def polarize_prime(p: MotivicPrime) -> MotivicPrime:
    if p.doubled:
        raise ValueError("prime is already in a doubled space")
    return MotivicPrime(polarize_motif(p.motif), True)


def primary_decomposition_polarized(C: Code) -> list[MotivicPrime]:
    """Decomposition of the polarized code's ideal, component by component."""
    return [polarize_prime(p) for p in primary_decomposition(C)]


def polarize_partial_motif(a) -> PartialMotif:
    return PartialMotif(polarize_motif(PartialMotif(str(a))).symbols)


def gjs_witness(c, C: Code) -> tuple[frozenset[int], PartialMotif]:
    """Deactivated neurons and depolarized partial motif attached to ``c``.

    Ones in ``c`` become stars; every neuron ``i`` whose two halves are both 0
    is deactivated, and the remaining pairs depolarize.
    """
    c = as_motif(c)
    if len(c) % 2:
        raise ValueError(f"{c} has odd length")
    n = len(c) // 2
    if n != C.n:
        raise ValueError(f"{c} does not have length {2 * C.n}")
    a = c.symbols.replace("1", STAR)
    idx = frozenset(i + 1 for i in range(n) if a[i] == a[n + i] == "0")
    s = list(a)
    for i in idx:
        s[i - 1] = s[n + i - 1] = INACTIVE
    return idx, depolarize(PartialMotif("".join(s)))


def gjs_prime_test(c, C: Code) -> bool:
    """Decide whether ``p_c`` contains the formally polarized neural ideal,
    using only the partial code obtained from ``C`` by deactivation."""
    idx, a = gjs_witness(c, C)
    return par_mot_contains(a, deactivate(C, idx))
