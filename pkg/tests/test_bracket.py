import random

import pytest

from braidbracket.diagram import parse_braid_word, reverse_orientation
from braidbracket.bracket import (
    add_marked_circle,
    bracket_br,
    kauffman_oracle,
    lighten,
    normalize,
    seifert_leading_term,
    skein_expand,
    specialize_chi_to_delta,
)
from braidbracket.laurent import DELTA, lp_mul
from braidbracket.states import SizeCapError

from helpers import bracket_combination


def test_bracket_zero_crossing_circle():
    assert bracket_br(parse_braid_word("B1")) == {"()": {0: 1}}


def test_bracket_one_crossing_closure():
    b = bracket_br(parse_braid_word("B2 1"))
    assert b == {"(())": {1: 1}, "": {1: -1, -3: -1}}


def test_bracket_hopf_closure():
    b = bracket_br(parse_braid_word("B2 1 1"))
    assert b == {"(())": {2: 1}, "": {-6: 1, 2: -1}}


def test_bracket_threads_deterministic():
    d = parse_braid_word("B3 1 2 -1 2 1")
    assert bracket_br(d, threads=4) == bracket_br(d)


def test_bracket_cap():
    with pytest.raises(SizeCapError):
        bracket_br(parse_braid_word("B2" + " 1" * 6), cap=5)


def test_skein_identity_trefoil_every_crossing():
    d = parse_braid_word("B2 1 1 1")
    whole = bracket_br(d)
    for v in range(3):
        d0, d1 = skein_expand(d, v)
        assert whole == bracket_combination(
            [(1, bracket_br(d0)), (-1, bracket_br(d1))]
        )


def test_skein_recursion_reproduces_state_sum():
    d = parse_braid_word("B2 1 1 1")

    def expand(diagram):
        active = diagram.active_crossings
        if not active:
            return bracket_br(diagram)
        d0, d1 = skein_expand(diagram, active[0])
        return bracket_combination([(1, expand(d0)), (-1, expand(d1))])

    assert expand(d) == bracket_br(d)


def test_marked_circle_multiplies_by_delta():
    d = parse_braid_word("B2 1")
    base = bracket_br(d)
    marked = bracket_br(add_marked_circle(d, 2))
    assert marked == {cfg: lp_mul(p, DELTA) for cfg, p in base.items()}


def test_marked_h_circle_adds_nested_configuration():
    d = parse_braid_word("B1")
    got = bracket_br(add_marked_circle(d, 0))
    assert got == {"()()": {0: 1}}


def test_skein_expand_bad_crossing():
    d = parse_braid_word("B2 1")
    with pytest.raises(ValueError):
        skein_expand(d, 5)


def test_lighten_counts_circles():
    b = {"(())": {1: 1}, "": {1: -1, -3: -1}}
    assert lighten(b) == {(1, 2): 1, (1, 0): -1, (-3, 0): -1}
    assert lighten({}) == {}
    assert lighten({"()()": {0: 1}, "(())": {0: 1}}) == {(0, 2): 2}


def test_normalize_shifts_by_writhe():
    d = parse_braid_word("B2 1")
    assert normalize(d, {"": {1: 1}}) == {"": {-2: -1}}
    flat = parse_braid_word("B2 1 -1")
    b = bracket_br(flat)
    assert normalize(flat, b) == b


def test_specialization_small_cases():
    assert specialize_chi_to_delta({(0, 1): 1}) == dict(DELTA)
    assert specialize_chi_to_delta({}) == {}


def test_oracle_identity_on_corpus(corpus_brackets):
    for d, b in corpus_brackets:
        assert specialize_chi_to_delta(lighten(b)) == kauffman_oracle(d)


def test_oracle_trefoil_matches_jones_normalization():
    # (-A)^(-3w) <trefoil> / delta must be the Jones polynomial bracket form
    d = parse_braid_word("B2 1 1 1")
    oracle = kauffman_oracle(d)
    # divide by one unknot factor: <T> = delta * (-A^5 - A^-3 + A^-7)
    reduced = {5: -1, -3: -1, -7: 1}
    assert lp_mul(DELTA, reduced) == oracle


def test_seifert_leading_term_examples():
    cfg, coeff = seifert_leading_term(parse_braid_word("B2 1"))
    assert cfg.canonical == "(())" and coeff == {1: 1}
    cfg, coeff = seifert_leading_term(parse_braid_word("B2 1 1"))
    assert cfg.canonical == "(())" and coeff == {2: 1}
    cfg, coeff = seifert_leading_term(parse_braid_word("B1"))
    assert cfg.canonical == "()" and coeff == {0: 1}


def test_bracket_orientation_reversal(corpus_brackets):
    for d, b in corpus_brackets[:30]:
        assert bracket_br(reverse_orientation(d)) == b


def test_disjoint_union_with_circle_in_oracle():
    d = parse_braid_word("B2 1 1")
    with_circle = add_marked_circle(d, 0)
    assert kauffman_oracle(with_circle) == lp_mul(kauffman_oracle(d), DELTA)


def test_empty_diagram_pipeline():
    d = parse_braid_word("B0")
    assert bracket_br(d) == {"": {0: 1}}
    cfg, coeff = seifert_leading_term(d)
    assert cfg.canonical == "" and coeff == {0: 1}
    assert kauffman_oracle(d) == {0: 1}
