"""Acceptance criteria, one test per criterion.

Each test prints a single ``CRITERION k PASS|FAIL`` line with its wall time,
whether or not output capture is on.  Run with::

    pytest tests/test_acceptance.py -v
"""

import time

import pytest

from polarcodes import (
    Code,
    complement,
    deactivate,
    formal_polarize,
    gjs_witness,
    gjs_prime_test,
    max_mot,
    max_mot_complement,
    max_mot_polarized,
    max_par_mot,
    min_primes,
    neural_ideal_cf,
    parse_pm,
    polarize_code,
    polarize_motif,
    prime_contains_neural_ideal,
    VariableSpace,
    cf_of_pm_ideal,
)
from polarcodes import oracle, verify
from polarcodes.motifs import variety_mask
from polarcodes.polarization import cf_of_polarized_code, cf_polarized_ideal

RANDOM_SEEDS = {4: 404, 5: 505, 6: 606, 7: 707}
RANDOM_COUNT = 200
GJS_SEED = 33


def strs(xs):
    return {str(x) for x in xs}


@pytest.fixture
def report(capsys):
    """A callable that prints the criterion line and asserts on it.

    Called last in each test, so the wall time covers the whole test body.
    """
    start = time.perf_counter()

    def record(k, limit, checks):
        elapsed = time.perf_counter() - start
        failed = [name for name, ok in checks if not ok]
        in_time = elapsed < limit
        verdict = "PASS" if not failed and in_time else "FAIL"
        detail = f"{len(checks)} checks"
        if failed:
            detail += f", failed: {', '.join(failed)}"
        if not in_time:
            detail += f", over the {limit:.0f}s limit"
        with capsys.disabled():
            print(f"\nCRITERION {k} {verdict} ({elapsed:.2f}s / {limit:.0f}s; {detail})")
        assert not failed, failed
        assert in_time, f"{elapsed:.1f}s >= {limit}s"

    return record


def test_criterion_1_single_word_chain(report):
    C = Code.from_words(["10"])
    D = complement(C)
    Dp = Code.from_mask(variety_mask({polarize_motif(a) for a in max_mot(D)}, 4), 4)
    P = polarize_code(C)
    report(1, 1.0, [
        ("MaxMot(C)", strs(max_mot(C)) == {"10"}),
        ("MaxMot(cC)", strs(max_mot(D)) == {"0*", "*1"}),
        ("10^p", str(polarize_motif("10")) == "*00*"),
        ("C^p", P.words == {"0000", "1000", "0001", "1001"}),
        ("(cC)^p words", Dp.words == {"0000", "0100", "0010", "0110", "0001", "0101",
                                      "0011", "0111", "1000", "1100", "1010", "1110"}),
        ("MaxMot(c(C^p))", strs(max_mot(complement(P))) == {"*1**", "**1*"}),
        ("CF(J_C)", strs(neural_ideal_cf(C).elements) == {"(1-X1)", "X2"}),
        ("CF^p", strs(cf_polarized_ideal(C).elements) == {"X2", "Y1"}),
        ("CF(J_{C^p})", strs(cf_of_polarized_code(C).elements) == {"X2", "Y1"}),
        ("CF(J_{C^p}) direct", strs(neural_ideal_cf(P, True).elements) == {"X2", "Y1"}),
        ("C^p = C^[p]", P == formal_polarize(C)),
    ])


def test_criterion_2_four_word_chain(report):
    C = Code.from_words(["000", "100", "110", "011"])
    P, F = polarize_code(C), formal_polarize(C)
    six_motifs = {"**1*1*", "1*1***", "*1*1*1", "**1**1", "*1*11*", "11*1**"}
    six_monomials = {"X3Y2", "X1X3", "X2Y1Y3", "X3Y3", "X2Y1Y2", "X1X2Y1"}
    polar_primes = {"(X2, X3)", "(X3, Y1)", "(X1, Y2, Y3)"}
    report(2, 1.0, [
        ("MaxMot(C)", strs(max_mot(C)) == {"*00", "1*0", "011"}),
        ("MaxMot(cC)", strs(max_mot(complement(C))) == {"*01", "1*1", "010"}),
        ("MaxMot(C^p)", strs(max_mot_polarized(C)) == {"*00***", "**00**", "0***00"}),
        ("MaxMot(C^p) direct", strs(max_mot(P)) == {"*00***", "**00**", "0***00"}),
        ("CF(J_{C^[p]})", strs(neural_ideal_cf(F, True).elements) == {"X3Y2", "X1X3", "X2Y1Y3"}),
        ("CF^p", strs(cf_polarized_ideal(C).elements) == {"X3Y2", "X1X3", "X2Y1Y3"}),
        ("MaxMot(c(C^p))", strs(max_mot_complement(max_mot_polarized(C), 6)) == six_motifs),
        ("MaxMot(c(C^p)) direct", strs(max_mot(complement(P))) == six_motifs),
        ("CF(J_{C^p})", strs(cf_of_polarized_code(C).elements) == six_monomials),
        ("|C^p|", len(P) == 29),
        ("|C^[p]|", len(F) == 35),
        ("Min(J_{C^p})", strs(min_primes(P, True)) == polar_primes),
        ("Min(J_{C^[p]})", strs(min_primes(F, True)) == polar_primes | {
            "(X3, Y3)", "(X1, X2, Y2)", "(X1, Y1, Y2)"}),
    ])


def test_criterion_3_generated_ideal_cf(report):
    S = VariableSpace(3)
    cf = cf_of_pm_ideal([parse_pm("X1(1-X2)", S), parse_pm("X2(1-X3)", S)], S)
    report(3, 1.0, [
        ("three elements", len(cf) == 3),
        ("CF", strs(cf.elements) == {"X1(1-X2)", "X2(1-X3)", "X1(1-X3)"}),
    ])


def test_criterion_4_partial_code_examples(report):
    C = Code.from_words(["000", "100", "110", "011"])
    F = formal_polarize(C)
    minimal = strs(min_primes(F, True))
    checks = []
    for c, idx, partial, maxpar in [
        ("00**0*", {2}, "0u*", {"*u0", "0u*"}),
        ("0*0**0", {3}, "0*u", {"**u"}),
        ("100*0*", {2}, "*u0", {"*u0", "0u*"}),
    ]:
        got_idx, a = gjs_witness(c, C)
        checks += [
            (f"{c} holds", gjs_prime_test(c, C)),
            (f"{c} agrees with containment", prime_contains_neural_ideal(c, F)),
            (f"{c} deactivated", set(got_idx) == idx),
            (f"{c} partial motif", str(a) == partial),
            (f"{c} MaxParMot", strs(max_par_mot(deactivate(C, idx))) == maxpar),
        ]
    for c, prime in [("0*0**0", "(X1, X3, Y3)"), ("*00*0*", "(X2, X3, Y2)")]:
        checks += [
            (f"{prime} contains J", prime_contains_neural_ideal(c, F) and gjs_prime_test(c, C)),
            (f"{prime} not minimal", prime not in minimal),
        ]
    report(4, 1.0, checks)


def _suite_checks(res):
    checks = [(name, not res.failures.get(name)) for name in sorted(res.checks)]
    for name, bad in res.failures.items():
        for msg in bad[:5]:
            print(f"  {name}: {msg}")
    return checks


def test_criterion_5_exhaustive_n3(report):
    res = verify.run_exhaustive(3)
    report(5, 120.0, _suite_checks(res) + [("256 codes", res.checks["maxmot properties"] == 256)])


def test_criterion_6_random_families(report):
    res = verify.SuiteResult()
    for n, seed in RANDOM_SEEDS.items():
        res.merge(verify.run_random(RANDOM_COUNT, n, seed))
    count = RANDOM_COUNT * len(RANDOM_SEEDS)
    report(6, 300.0, _suite_checks(res) + [(f"{count} codes", res.checks["maxmot properties"] == count)])


def test_criterion_7_partial_code_scan(report):
    C = Code.from_words(["000", "100", "110", "011"])
    codes = verify.random_family(20, 3, GJS_SEED) + [C]
    checks = []
    scanned = 0
    for D in codes:
        bad = verify.check_gjs(D)
        scanned += 3**6
        checks.append((f"code {D.to_hex()}", not bad))
        for line in bad[:5]:
            print(line)
    report(7, 120.0, checks + [("21 x 729 motifs", scanned == 21 * 729)])


def test_criterion_8_oracle_equivalence(report):
    families = list(oracle.all_codes(3))
    for n, seed in RANDOM_SEEDS.items():
        families += verify.random_family(RANDOM_COUNT, n, seed)
    mismatched = []
    for C in families:
        if max_mot(C) != oracle.brute_max_mot(C) or neural_ideal_cf(C) != oracle.brute_cf(C):
            mismatched.append(C.to_hex())
    report(8, 180.0, [
        (f"{len(families)} codes", len(families) == 256 + RANDOM_COUNT * len(RANDOM_SEEDS)),
        (f"mismatches {mismatched[:5]}", not mismatched),
    ])
