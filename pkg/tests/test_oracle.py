import random

import pytest

from polarcodes import Code, VariableSpace, max_mot, neural_ideal_cf, parse_pm
from polarcodes import oracle
from polarcodes.motifs import complement


def strs(xs):
    return {str(x) for x in xs}


def test_brute_max_mot_examples(chain_code, four_word_code):
    assert strs(oracle.brute_max_mot(chain_code)) == {"00*", "0*1", "*11"}
    assert strs(oracle.brute_max_mot(complement(four_word_code))) == {"*01", "1*1", "010"}
    assert oracle.brute_max_mot(Code(3, frozenset())) == set()


def test_brute_cf_examples(single_word_code, chain_code):
    assert strs(oracle.brute_cf(single_word_code).elements) == {"(1-X1)", "X2"}
    assert strs(oracle.brute_cf(chain_code).elements) == {"X1(1-X2)", "X2(1-X3)", "X1(1-X3)"}
    assert len(oracle.brute_cf(Code.full(3))) == 0


def test_brute_variety_examples():
    S3 = VariableSpace(3)
    gens = [parse_pm("X1(1-X2)", S3), parse_pm("X2(1-X3)", S3)]
    assert oracle.brute_variety(gens, S3).words == {"000", "001", "011", "111"}
    assert oracle.brute_variety([], S3) == Code.full(3)
    assert oracle.brute_variety([parse_pm("1", S3)], S3).words == frozenset()


def test_caps_are_errors():
    with pytest.raises(oracle.OracleCapError):
        oracle.brute_max_mot(Code.full(11))
    with pytest.raises(oracle.OracleCapError):
        oracle.brute_gjs_scan(Code.full(5))


def test_gjs_scan(four_word_code, single_word_code):
    rep = oracle.brute_gjs_scan(four_word_code)
    assert rep.ok and rep.lines() == []
    assert rep.checked == 729
    assert oracle.brute_gjs_scan(single_word_code).checked == 81
    empty = oracle.brute_gjs_scan(Code(2, frozenset()))
    assert empty.ok


def test_random_code_is_seeded():
    a = [oracle.random_code(5, random.Random(7)) for _ in range(3)]
    b = [oracle.random_code(5, random.Random(7)) for _ in range(3)]
    assert a == b


def test_all_codes_count():
    assert sum(1 for _ in oracle.all_codes(2)) == 16


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_oracle_agreement_random(n):
    rng = random.Random(100 + n)
    for _ in range(15):
        C = oracle.random_code(n, rng)
        assert max_mot(C) == oracle.brute_max_mot(C)
        assert neural_ideal_cf(C) == oracle.brute_cf(C)
