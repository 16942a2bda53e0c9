import itertools

import pytest
from hypothesis import given, settings, strategies as st

from polarcodes import (
    Code,
    Motif,
    VariableSpace,
    cf_of_pm_ideal,
    evaluate,
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
from polarcodes.ideals import CanonicalForm, PseudoMonomial, sorted_primes
from polarcodes.oracle import brute_variety

S3 = VariableSpace(3)


def pm(text, n=3, doubled=False):
    return parse_pm(text, VariableSpace(n, doubled))


def test_lagrange_examples():
    assert str(lagrange("11*0")) == "X1X2(1-X4)"
    assert str(lagrange("***")) == "1"
    f = lagrange("10")
    assert [w for w in ("00", "01", "10", "11") if evaluate(f, w)] == ["10"]


def test_lagrange_doubled_rendering():
    assert str(lagrange("*00***", doubled=True)) == "(1-X2)(1-X3)"
    assert str(lagrange("**1*1*", doubled=True)) == "X3Y2"


def test_pseudo_monomial_rejects_overlap_and_range():
    with pytest.raises(ValueError):
        PseudoMonomial(S3, frozenset({1}), frozenset({1}))
    with pytest.raises(ValueError):
        PseudoMonomial(S3, frozenset({4}), frozenset())


def test_parse_and_render_round_trip():
    for text in ["1", "X1", "(1-X2)", "X1X3(1-X2)", "X2Y1Y3", "Y1(1-X2)"]:
        f = pm(text, doubled=True)
        assert pm(str(f), doubled=True) == f
    with pytest.raises(ValueError):
        pm("X1Z2")
    with pytest.raises(ValueError):
        pm("Y1")


def test_divisibility_examples():
    assert pm_divides(pm("X1X3"), pm("X1X2X3"))
    f = pm("X1(1-X2)")
    assert pm_divides(f, f)
    g = pm("X2(1-X3)")
    assert not pm_divides(f, g) and not pm_divides(g, f)
    with pytest.raises(ValueError):
        pm_divides(pm("X1"), pm("X1", 4))


def test_evaluate_examples():
    assert evaluate(pm("X1(1-X2)", 2), "10") == 1
    assert evaluate(lagrange("*00*"), "1001") == 1
    assert evaluate(pm("X2", 2), "10") == 0
    with pytest.raises(ValueError):
        evaluate(pm("X1", 2), "101")


def test_neural_ideal_cf_examples(single_word_code, chain_code):
    assert neural_ideal_cf(single_word_code).lines() == ["(1-X1)", "X2"]
    assert set(neural_ideal_cf(chain_code).lines()) == {"X1(1-X2)", "X2(1-X3)", "X1(1-X3)"}
    assert neural_ideal_cf(Code.full(3)).lines() == []
    assert neural_ideal_cf(Code(2, frozenset())).lines() == ["1"]


def test_cf_of_generated_ideal_finds_the_third_element():
    cf = cf_of_pm_ideal([pm("X1(1-X2)"), pm("X2(1-X3)")], S3)
    assert set(cf.lines()) == {"X1(1-X2)", "X2(1-X3)", "X1(1-X3)"}
    D2 = VariableSpace(2, True)
    assert set(cf_of_pm_ideal([parse_pm("X2", D2), parse_pm("Y1", D2)], D2).lines()) == {"X2", "Y1"}
    assert len(cf_of_pm_ideal([], S3)) == 0


def test_canonical_form_rejects_dividing_pair():
    with pytest.raises(ValueError):
        CanonicalForm(S3, {pm("X1"), pm("X1X2")})


def test_motivic_prime_examples():
    assert str(motivic_prime("10")) == "(1-X1, X2)"
    assert str(motivic_prime("*00***", doubled=True)) == "(X2, X3)"
    assert str(motivic_prime("***")) == "(0)"


def test_prime_containment_examples(single_word_code):
    assert prime_contains_neural_ideal("10", single_word_code)
    assert not prime_contains_neural_ideal("11", single_word_code)


def test_min_primes_and_decomposition(single_word_code, four_word_code):
    assert [str(p) for p in sorted_primes(min_primes(single_word_code))] == ["(1-X1, X2)"]
    assert [str(p) for p in primary_decomposition(single_word_code)] == ["(1-X1, X2)"]
    dec = primary_decomposition(four_word_code)
    assert {str(p.motif) for p in dec} == {"*00", "1*0", "011"}
    with pytest.raises(ValueError):
        primary_decomposition(Code(3, frozenset()))
    # the zero ideal is its own prime
    assert [str(p) for p in primary_decomposition(Code.full(2))] == ["(0)"]


def test_prime_inclusion_reverses_motif_order():
    assert not (motivic_prime("10") <= motivic_prime("11"))
    assert motivic_prime("1*") <= motivic_prime("10")
    assert not (motivic_prime("10") <= motivic_prime("1*"))


def test_variety_of_neural_ideal_examples(single_word_code, four_word_code):
    assert variety_of_neural_ideal(single_word_code) == single_word_code
    empty = Code(3, frozenset())
    assert variety_of_neural_ideal(empty) == empty
    assert variety_of_neural_ideal(four_word_code) == four_word_code


def test_divisibility_agrees_with_evaluation_exhaustively():
    for n in range(1, 5):
        pts = ["".join(p) for p in itertools.product("01", repeat=n)]
        fs = [lagrange(a) for a in Motif.all(n)]
        ones = {f: {w for w in pts if evaluate(f, w)} for f in fs}
        for f, g in itertools.product(fs, repeat=2):
            assert pm_divides(f, g) == (ones[g] <= ones[f])


@st.composite
def codes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    words = draw(st.sets(st.integers(0, 2**n - 1)))
    return Code.from_words([format(w, f"0{n}b") for w in words], n)


@given(codes())
@settings(max_examples=150, deadline=None)
def test_cf_properties(C):
    cf = neural_ideal_cf(C)
    for f in cf:
        assert not any(evaluate(f, w) for w in C.words)
    outside = set(Code.full(C.n).words) - set(C.words)
    for w in outside:
        assert any(evaluate(f, w) for f in cf)
    assert cf_of_pm_ideal(cf.elements, cf.space) == cf
    assert brute_variety(cf.elements, cf.space) == C
    for f in cf:
        assert cf.contains_pm(f)
