"""Tests for Z_ell vector spans, duals, and the exhaustive subgroup stream."""

import random

import pytest

from mwl.errors import BudgetExceeded
from mwl.zmod import (
    LinearCode,
    all_linear_codes,
    cardinality,
    dual_code,
    enumerate_codewords,
    format_code_spec,
    parse_code_spec,
)

from oracles import brute_all_subgroups, brute_dual, brute_span


def test_span_order2_element():
    assert set(enumerate_codewords(LinearCode(4, 1, [(2,)]))) == {(0,), (2,)}


def test_span_three_mod_six():
    assert set(enumerate_codewords(LinearCode(6, 1, [(3,)]))) == {(0,), (3,)}


def test_span_diagonal_z4():
    code = LinearCode(4, 2, [(1, 1)])
    expected = {(0, 0), (1, 1), (2, 2), (3, 3)}
    assert set(enumerate_codewords(code)) == expected
    assert set(enumerate_codewords(code)) == brute_span([(1, 1)], 4, 2)


def test_span_matches_bruteforce_random():
    rng = random.Random(1009)
    for _ in range(40):
        ell = rng.randint(2, 9)
        n = rng.randint(1, 3)
        gens = [tuple(rng.randrange(ell) for _ in range(n)) for _ in range(rng.randint(0, 3))]
        code = LinearCode(ell, n, gens)
        assert set(code.codewords()) == brute_span(gens, ell, n)


def test_span_is_sorted_and_contains_zero():
    code = LinearCode(6, 2, [(2, 1), (0, 3)])
    words = code.codewords()
    assert list(words) == sorted(words)
    assert (0, 0) in words


def test_dual_examples():
    assert set(dual_code(LinearCode(4, 1, [(2,)])).codewords()) == {(0,), (2,)}
    assert set(dual_code(LinearCode(6, 1, [(3,)])).codewords()) == {(0,), (2,), (4,)}
    assert set(dual_code(LinearCode(4, 1, [(1,)])).codewords()) == {(0,)}


def test_dual_of_zero_code_is_full_space():
    code = LinearCode(3, 2)
    assert dual_code(code).cardinality() == 9


def test_dual_generator_list_is_codeword_list():
    dual = dual_code(LinearCode(6, 1, [(3,)]))
    assert dual.generators == dual.codewords()


def test_dual_matches_bruteforce_random():
    rng = random.Random(2406)
    for _ in range(30):
        ell = rng.randint(2, 8)
        n = rng.randint(1, 3)
        gens = [tuple(rng.randrange(ell) for _ in range(n)) for _ in range(rng.randint(0, 3))]
        code = LinearCode(ell, n, gens)
        assert set(code.dual().codewords()) == brute_dual(code.codewords(), ell, n)


def test_cardinality_examples():
    assert cardinality(LinearCode(5, 3)) == 1
    assert cardinality(LinearCode(4, 1, [(1,)])) == 4
    assert cardinality(LinearCode(6, 2, [(2, 0), (0, 3)])) == 6


def test_all_linear_codes_counts():
    assert len(list(all_linear_codes(2, 1))) == 2
    assert len(list(all_linear_codes(4, 1))) == 3
    assert len(list(all_linear_codes(6, 1))) == 4


def test_all_linear_codes_matches_bruteforce():
    for ell, n in [(2, 2), (3, 2), (4, 2), (6, 1), (5, 2)]:
        ours = {frozenset(c.codewords()) for c in all_linear_codes(ell, n)}
        assert ours == brute_all_subgroups(ell, n)


def test_all_linear_codes_canonical_order():
    codes = list(all_linear_codes(4, 2))
    lists = [c.codewords() for c in codes]
    assert lists == sorted(lists)
    assert len(set(lists)) == len(lists)
    assert codes[0].cardinality() == 1  # zero code first


def test_subgroup_closure_invariant():
    for ell in (2, 3, 4, 5, 6):
        for code in all_linear_codes(ell, 2):
            words = code.codeword_set()
            assert (0, 0) in words
            for u in words:
                for v in words:
                    assert tuple((a + b) % ell for a, b in zip(u, v)) in words
            assert ell**2 % code.cardinality() == 0  # Lagrange


def test_duality_invariants_exhaustive():
    for ell in range(2, 13):
        for code in all_linear_codes(ell, 2):
            dual = code.dual()
            assert code.cardinality() * dual.cardinality() == ell**2
            assert dual.dual() == code
            for x in dual.codewords():
                for y in code.codewords():
                    assert sum(a * b for a, b in zip(x, y)) % ell == 0


def test_duality_product_exhaustive_length3():
    for ell in (9, 10):
        for code in all_linear_codes(ell, 3):
            assert code.cardinality() * code.dual().cardinality() == ell**3


def test_duality_product_random_generators():
    rng = random.Random(77)
    for _ in range(50):
        ell = rng.randint(2, 12)
        n = rng.randint(1, 4)
        gens = [tuple(rng.randrange(ell) for _ in range(n)) for _ in range(rng.randint(0, n))]
        code = LinearCode(ell, n, gens)
        assert code.cardinality() * code.dual().cardinality() == ell**n


def test_code_equality_by_codeword_set():
    a = LinearCode(6, 1, [(2,)])
    b = LinearCode(6, 1, [(4,), (2,)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != LinearCode(6, 1, [(3,)])
    assert a != LinearCode(12, 1, [(2,)])


def test_constructor_validation():
    with pytest.raises(ValueError):
        LinearCode(1, 2)
    with pytest.raises(ValueError):
        LinearCode(4, 0)
    with pytest.raises(ValueError):
        LinearCode(4, 2, [(1,)])


def test_constructor_reduces_entries():
    code = LinearCode(4, 2, [(-1, 7)])
    assert code.generators == ((3, 3),)


def test_budget_exceeded_on_span():
    code = LinearCode(7, 4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    with pytest.raises(BudgetExceeded):
        code.codewords(budget=100)


def test_budget_exceeded_on_dual():
    with pytest.raises(BudgetExceeded):
        LinearCode(5, 3, [(1, 2, 3)]).dual(budget=50)


def test_all_linear_codes_exhaustive_cap():
    with pytest.raises(BudgetExceeded):
        list(all_linear_codes(11, 4))  # 14641 > 10**4
    with pytest.raises(BudgetExceeded):
        list(all_linear_codes(4, 2, budget=3))


def test_env_budget_override(monkeypatch):
    monkeypatch.setenv("MWL_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        LinearCode(5, 2, [(1, 0)]).dual()
    monkeypatch.setenv("MWL_BUDGET", "1000000")
    assert LinearCode(5, 2, [(1, 0)]).dual().cardinality() == 5


def test_parse_code_spec_roundtrip():
    text = "modulus 6\nlength 2\ngen 2 0\ngen 0 3\n"
    code = parse_code_spec(text)
    assert code.ell == 6 and code.length == 2
    assert code.generators == ((2, 0), (0, 3))
    assert format_code_spec(code) == text


def test_parse_code_spec_comments_and_reduction():
    code = parse_code_spec("# a comment\nmodulus 6\nlength 1\ngen 8  # reduced\n")
    assert code.generators == ((2,),)


def test_parse_code_spec_errors():
    with pytest.raises(ValueError):
        parse_code_spec("length 2\ngen 1 1\n")
    with pytest.raises(ValueError):
        parse_code_spec("modulus 4\nlength 2\ngen 1\n")
    with pytest.raises(ValueError):
        parse_code_spec("modulus 4\nlength 2\nfoo 1\n")
    with pytest.raises(ValueError):
        parse_code_spec("modulus 4\n")
