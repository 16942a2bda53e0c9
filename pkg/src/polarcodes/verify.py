"""Executable checks of the polarization results over families of codes.

Each check returns a list of failure messages (empty on success).  A suite
run collects them per check name so callers can print one line per check.
"""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import oracle
from .ideals import (
    VariableSpace,
    evaluate,
    lagrange,
    min_primes,
    neural_ideal_cf,
    pm_divides,
    prime_contains_neural_ideal,
    primary_decomposition,
    variety_of_neural_ideal,
)
from .motifs import (
    Code,
    Motif,
    complement,
    is_antichain,
    is_disjoint,
    max_mot,
    max_mot_complement,
    motif_add,
    motif_leq,
    motif_table,
    motifs_of,
    variety,
    variety_mask,
)
from .polarization import (
    bar,
    bar_polar_bar,
    cf_of_polarized_code,
    cf_polarized_ideal,
    cf_polarized_ideal_via_motifs,
    depolarize,
    formal_polarize,
    gjs_prime_test,
    max_mot_polarized,
    min_primes_polarized,
    polarize_code,
    polarize_motif,
    polarize_pm,
    polarized_complement_max_mot,
    primary_decomposition_polarized,
)


@dataclass
class SuiteResult:
    checks: dict[str, int] = field(default_factory=lambda: defaultdict(int))
    failures: dict[str, list[str]] = field(default_factory=lambda: defaultdict(list))

    def record(self, name: str, problems: list[str]):
        self.checks[name] += 1
        self.failures[name].extend(problems)

    def merge(self, other: "SuiteResult"):
        for k, v in other.checks.items():
            self.checks[k] += v
        for k, v in other.failures.items():
            self.failures[k].extend(v)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def summary(self) -> list[str]:
        out = []
        for name in sorted(self.checks):
            bad = self.failures.get(name, [])
            status = "PASS" if not bad else f"FAIL ({len(bad)})"
            out.append(f"{status:10} {name} [{self.checks[name]} runs]")
        return out


def _diff(label: str, got, want) -> list[str]:
    if got == want:
        return []
    return [f"{label}: got {sorted(map(str, got))} expected {sorted(map(str, want))}"]


# -- per-code checks --------------------------------------------------------

def check_max_mot(C: Code) -> list[str]:
    mm = max_mot(C)
    out = []
    if not is_antichain(mm):
        out.append(f"{C.to_hex()}: MaxMot is not an antichain")
    if not np.array_equal(variety_mask(mm, C.n), C.mask):
        out.append(f"{C.to_hex()}: MaxMot varieties do not cover the code")
    if C.n <= 5:
        for a in motifs_of(C):
            if not any(motif_leq(a, b) for b in mm):
                out.append(f"{C.to_hex()}: motif {a} below no maximal motif")
    return out


def check_oracle(C: Code) -> list[str]:
    out = []
    if C.n <= oracle.MAX_MOTIF_DIM:
        out += _diff(f"{C.to_hex()} brute MaxMot", max_mot(C), oracle.brute_max_mot(C))
        out += _diff(f"{C.to_hex()} brute CF", neural_ideal_cf(C).elements,
                     oracle.brute_cf(C).elements)
    out += _diff(f"{C.to_hex()} complement MaxMot",
                 max_mot_complement(max_mot(C), C.n), max_mot(complement(C)))
    return out


def check_cf(C: Code) -> list[str]:
    cf = neural_ideal_cf(C)
    out = []
    zeros = oracle.brute_variety(cf.elements, VariableSpace(C.n))
    if zeros != C:
        out.append(f"{C.to_hex()}: CF zero set differs from the code")
    for f in cf.elements:
        for g in cf.elements:
            if f != g and pm_divides(f, g):
                out.append(f"{C.to_hex()}: {f} divides {g} inside CF")
    if C.n <= 4:
        for w in C.words:
            if any(evaluate(f, w) for f in cf.elements):
                out.append(f"{C.to_hex()}: CF does not vanish at {w}")
    return out


def check_variety(C: Code) -> list[str]:
    if variety_of_neural_ideal(C) != C:
        return [f"{C.to_hex()}: V(J_C) differs from C"]
    return []


def check_prime_containment(C: Code) -> list[str]:
    """p_a contains J_C iff a lies below some maximal motif."""
    mm = max_mot(C)
    out = []
    for a in Motif.all(C.n):
        lhs = prime_contains_neural_ideal(a, C)
        rhs = any(motif_leq(a, b) for b in mm)
        if lhs != rhs:
            out.append(f"{C.to_hex()}: containment of p_{a} is {lhs}, order says {rhs}")
    return out


def check_min_primes_antichain(C: Code) -> list[str]:
    primes = min_primes(C)
    if any(p != q and p <= q for p in primes for q in primes):
        return [f"{C.to_hex()}: minimal primes are not an antichain"]
    return []


def check_maxmot_transfer(C: Code) -> list[str]:
    cp = polarize_code(C)
    want = max_mot_polarized(C)
    out = _diff(f"{C.to_hex()} MaxMot(C^p)", max_mot(cp), want)
    if cp.n <= oracle.MAX_MOTIF_DIM:
        out += _diff(f"{C.to_hex()} brute MaxMot(C^p)", oracle.brute_max_mot(cp), want)
    return out


def check_polar_motifs_are_motifs(C: Code) -> list[str]:
    if not C.words:
        return []
    table = motif_table(polarize_code(C))
    digit = {"0": 0, "1": 1, "*": 2}
    out = []
    for a in motifs_of(C):
        b = polarize_motif(a)
        if not table[tuple(digit[c] for c in b)]:
            out.append(f"{C.to_hex()}: {b.format(True)} not a motif of C^p")
    return out


def check_lagrange_and_disjointness(C: Code) -> list[str]:
    out = []
    mc, md = max_mot(C), max_mot(complement(C))
    for b in md:
        if polarize_pm(lagrange(b)) != lagrange(bar_polar_bar(b), True):
            out.append(f"{C.to_hex()}: polarized L_{b} mismatch")
    for a in mc:
        for b in md:
            if is_disjoint(a, b) != is_disjoint(polarize_motif(a), bar_polar_bar(b)):
                out.append(f"{C.to_hex()}: disjointness of {a}, {b} not transferred")
            if not is_disjoint(a, b):
                out.append(f"{C.to_hex()}: {a} and {b} overlap")
    return out


def check_polar_inside_formal(C: Code) -> list[str]:
    cp, cfp = polarize_code(C), formal_polarize(C)
    if not cp <= cfp:
        return [f"{C.to_hex()}: C^p not inside C^[p]"]
    return []


def check_cf_chain(C: Code) -> list[str]:
    pol = cf_polarized_ideal(C).elements
    out = _diff(f"{C.to_hex()} CF routes", cf_polarized_ideal_via_motifs(C).elements, pol)
    out += _diff(f"{C.to_hex()} CF(J_C[p])",
                 neural_ideal_cf(formal_polarize(C), doubled=True).elements, pol)
    cfcp = cf_of_polarized_code(C).elements
    out += _diff(f"{C.to_hex()} CF(J_C^p) direct",
                 neural_ideal_cf(polarize_code(C), doubled=True).elements, cfcp)
    if 2 * C.n <= oracle.MAX_MOTIF_DIM:
        out += _diff(f"{C.to_hex()} brute CF(J_C^p)",
                     oracle.brute_cf(polarize_code(C), doubled=True).elements, cfcp)
    if not pol <= cfcp:
        out.append(f"{C.to_hex()}: polarized CF not inside CF(J_C^p)")
    return out


def check_complement_all_ones(C: Code) -> list[str]:
    return [f"{C.to_hex()}: complement motif {b.format(True)} has a 0"
            for b in polarized_complement_max_mot(C) if "0" in b.symbols]


def check_min_prime_chain(C: Code) -> list[str]:
    pol = min_primes_polarized(C)
    out = _diff(f"{C.to_hex()} Min(J_C^p)", min_primes(polarize_code(C), doubled=True), pol)
    if not pol <= min_primes(formal_polarize(C), doubled=True):
        out.append(f"{C.to_hex()}: polar minimal primes not minimal over J_C[p]")
    return out


def check_decomposition(C: Code) -> list[str]:
    if not C.words:
        return []
    got = primary_decomposition(polarize_code(C), doubled=True)
    want = primary_decomposition_polarized(C)
    if len(got) != len(want) or set(got) != set(want):
        return [f"{C.to_hex()}: decomposition {list(map(str, got))} vs {list(map(str, want))}"]
    return []


def check_gjs(C: Code) -> list[str]:
    """Partial-code criterion against direct containment over every doubled motif."""
    cfp = formal_polarize(C)
    out = []
    for c in Motif.all(2 * C.n):
        fast = gjs_prime_test(c, C)
        direct = prime_contains_neural_ideal(c, cfp)
        if fast != direct:
            out.append(f"CODE {C.to_hex()} MOTIF {c.format(True)} "
                       f"fast={str(fast).lower()} oracle={str(direct).lower()}")
    return out


CODE_CHECKS: dict[str, Callable[[Code], list[str]]] = {
    "maxmot properties": check_max_mot,
    "oracle agreement": check_oracle,
    "canonical form properties": check_cf,
    "variety of neural ideal": check_variety,
    "minimal primes antichain": check_min_primes_antichain,
    "maxmot transfer to C^p": check_maxmot_transfer,
    "polarized motifs are motifs of C^p": check_polar_motifs_are_motifs,
    "lagrange/disjointness under polarization": check_lagrange_and_disjointness,
    "C^p inside C^[p]": check_polar_inside_formal,
    "canonical form chain": check_cf_chain,
    "complement of C^p has all-ones motifs": check_complement_all_ones,
    "minimal prime chain": check_min_prime_chain,
    "primary decomposition polarizes": check_decomposition,
}


def check_code(C: Code, result: SuiteResult | None = None, *, gjs: bool = False,
               containment: bool = False) -> SuiteResult:
    result = result or SuiteResult()
    for name, fn in CODE_CHECKS.items():
        result.record(name, fn(C))
    if containment:
        result.record("prime containment vs motif order", check_prime_containment(C))
    if gjs:
        result.record("partial-code prime criterion", check_gjs(C))
    return result


def check_inclusion_transfer(C: Code, D: Code) -> list[str]:
    """D inside the complement of C iff the bar-polarized D avoids C^p."""
    lhs = not (C.mask & D.mask).any()
    barred = variety_mask({bar_polar_bar(b) for b in max_mot(D)}, 2 * C.n)
    rhs = not (barred & polarize_code(C).mask).any()
    if lhs != rhs:
        return [f"codes {C.to_hex()} / {D.to_hex()}: inclusion {lhs} vs {rhs}"]
    return []


# -- code-independent laws --------------------------------------------------

def motif_laws(max_len: int = 4) -> SuiteResult:
    """Exhaustive identities of the motif order, addition and polarization."""
    res = SuiteResult()
    for n in range(1, max_len + 1):
        ms = list(Motif.all(n))
        var = {a: variety(a).words for a in ms}
        pol = {a: polarize_motif(a) for a in ms}
        bpb = {a: bar_polar_bar(a) for a in ms}
        below = {b: [a for a in ms if motif_leq(a, b)] for b in ms}
        bad_order, bad_disj, bad_mono, bad_pol, bad_bar = [], [], [], [], []
        for a in ms:
            if bar(bar(a)) != a or depolarize(pol[a]) != a:
                bad_bar.append(str(a))
            if motif_add(a, Motif("0" * n)) != a:
                bad_mono.append(f"identity {a}")
            for b in ms:
                leq = motif_leq(a, b)
                if leq != (var[a] <= var[b]):
                    bad_order.append(f"{a},{b}")
                if leq != motif_leq(pol[a], pol[b]):
                    bad_pol.append(f"order {a},{b}")
                s = motif_add(a, b)
                disjoint = is_disjoint(a, b)
                if disjoint != ("1" in s.symbols):
                    bad_disj.append(f"{a},{b}")
                if disjoint != is_disjoint(pol[a], bpb[b]):
                    bad_pol.append(f"disjoint {a},{b}")
                if s != motif_add(b, a):
                    bad_mono.append(f"commute {a},{b}")
                if disjoint:
                    for b2 in below[b]:
                        if not is_disjoint(a, b2):
                            bad_disj.append(f"monotone {a},{b},{b2}")
        if n <= 3:
            for a, b, c in itertools.product(ms, repeat=3):
                if motif_add(motif_add(a, b), c) != motif_add(a, motif_add(b, c)):
                    bad_mono.append(f"assoc {a},{b},{c}")
        res.record("motif order equals variety inclusion", bad_order)
        res.record("addition monoid laws", bad_mono)
        res.record("disjointness via addition", bad_disj)
        res.record("polarization preserves order and disjointness", bad_pol)
        res.record("bar and depolarization are inverses", bad_bar)
    bad_lag = []
    for n in range(1, min(max_len + 2, 6) + 1):
        for a in Motif.all(n):
            if polarize_pm(lagrange(a)) != lagrange(bar_polar_bar(a), True):
                bad_lag.append(str(a))
    res.record("polarized lagrange polynomial", bad_lag)
    bad_div = []
    for n in range(1, min(max_len, 4) + 1):
        pts = [format(k, f"0{n}b") for k in range(2**n)]
        pms = [lagrange(a) for a in Motif.all(n)]
        vals = {f: {w for w in pts if evaluate(f, w)} for f in pms}
        for f in pms:
            for g in pms:
                if pm_divides(f, g) != (vals[g] <= vals[f]):
                    bad_div.append(f"{f} | {g}")
                if pm_divides(f, g) != pm_divides(polarize_pm(f), polarize_pm(g)):
                    bad_div.append(f"polarized {f} | {g}")
    res.record("divisibility equals evaluation order", bad_div)
    return res


# -- drivers ----------------------------------------------------------------

def run_exhaustive(n: int) -> SuiteResult:
    """Every code of length ``n`` through the per-code checks."""
    res = motif_laws(min(n + 1, 4))
    for C in oracle.all_codes(n):
        check_code(C, res, containment=n <= 3)
    return res


def random_family(count: int, n: int, seed: int) -> list[Code]:
    """The ``count`` seeded random codes used by the randomized suites."""
    rng = random.Random(seed)
    return [oracle.random_code(n, rng) for _ in range(count)]


def run_random(count: int, n: int, seed: int) -> SuiteResult:
    """``count`` seeded random codes of length ``n``."""
    rng = random.Random(f"pairs-{seed}")
    res = SuiteResult()
    prev = None
    for C in random_family(count, n, seed):
        check_code(C, res)
        comp = sorted(complement(C).words)
        inside = Code(n, frozenset(w for w in comp if rng.random() < 0.5))
        res.record("inclusion transfer", check_inclusion_transfer(C, inside))
        if prev is not None:
            res.record("inclusion transfer", check_inclusion_transfer(C, prev))
        prev = C
    return res


def run_gjs(n: int, count: int, seed: int, extra: list[Code] = ()) -> SuiteResult:
    res = SuiteResult()
    for C in random_family(count, n, seed) + list(extra):
        res.record("partial-code prime criterion", check_gjs(C))
    return res
