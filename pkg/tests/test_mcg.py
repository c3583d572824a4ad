from fractions import Fraction

import pytest

from twistkit.linalg import ContractError
from twistkit.mcg import (
    A_WORD,
    B_WORD,
    INF,
    SL2,
    ZERO,
    Factor,
    Slope,
    TwistWord,
    act_on_slope,
    classify_monodromy,
    conjugate_word,
    eval_word,
    is_identity_word,
    layer_slopes,
    omega,
    twist_matrix,
)
from twistkit.wordparse import WordSyntaxError, parse_word

A = SL2(1, 1, 0, 1)
B = SL2(1, 0, -1, 1)


def test_slope_canonical_form():
    assert Slope(-1, 2) == Slope(1, -2)
    assert Slope(0, -1) == INF
    assert Slope.of("inf") == INF
    assert Slope.of(3) == Slope(1, 3)
    assert Slope.of("-1/4") == Slope(4, -1)
    assert Slope.of(Fraction(2, 3)) == Slope(3, 2)
    assert Slope.of([2, 1]).value == Fraction(1, 2)
    assert str(INF) == "∞" and INF.to_json() == "inf"
    assert Slope(4, -1).to_json() == "-1/4"


@pytest.mark.parametrize("bad", [(0, 0), (2, 4)])
def test_slope_rejects(bad):
    with pytest.raises(ContractError):
        Slope(*bad)


def test_generators():
    assert twist_matrix(ZERO) == A
    assert twist_matrix(INF) == B
    assert eval_word(A_WORD) == A and eval_word(B_WORD) == B


def test_twist_along_minus_n():
    # frozen from the sympy oracle: [[1+n, 1], [-n^2, 1-n]]
    for n in range(1, 6):
        assert twist_matrix(Slope(1, -n)) == SL2(1 + n, 1, -n * n, 1 - n)


def test_twist_fixes_its_curve():
    for c in [ZERO, INF, Slope(3, 2), Slope(5, -7)]:
        assert act_on_slope(twist_matrix(c), c) == c


def test_sl2_contract():
    with pytest.raises(ContractError):
        SL2(1, 1, 1, 1)
    assert A ** -3 == (A ** 3).inverse()
    assert A ** 0 == SL2.identity()


def test_relations():
    assert eval_word(parse_word("aba")) == eval_word(parse_word("bab"))
    assert is_identity_word(parse_word("(ab)^6"))
    assert eval_word(parse_word("(ab)^3")) == SL2(-1, 0, 0, -1)
    assert is_identity_word(parse_word("(a^3 b)^3"))
    assert is_identity_word(parse_word("(b^3 a)^3"))


def test_gamma_is_b():
    assert eval_word(parse_word("a^3 b a^3 b a^3 b^2")) == B


def test_classify():
    c = classify_monodromy(eval_word(parse_word("ab")))
    assert (c.kind, c.trace, c.order) == ("elliptic", 1, 6)
    c = classify_monodromy(SL2(-1, 0, 0, -1))
    assert (c.kind, c.order) == ("parabolic", 2)  # |trace| = 2; order tells -I apart
    c = classify_monodromy(A)
    assert (c.kind, c.order) == ("parabolic", None)
    c = classify_monodromy(SL2(2, 1, 1, 1))
    assert (c.kind, c.order) == ("hyperbolic", None)


def test_word_algebra():
    w = TwistWord.of([(0, 2), ("inf", -1), ("inf", 1), (0, 1)])
    assert w.normalized() == TwistWord.of([(0, 3)])
    assert (w * w.inverse()).normalized() == TwistWord()
    assert eval_word(w ** -2) == eval_word(w).inverse() ** 2
    assert TwistWord.from_json(w.to_json()) == w
    with pytest.raises(ContractError):
        Factor(ZERO, 0)
    with pytest.raises(ContractError):
        TwistWord.of([(0, -1)]).curves()


def test_conjugate_word_slopes():
    w = parse_word("a^4 b a^3 b a^3 b^4 a b^3 a b^3")
    for n in range(1, 6):
        c = conjugate_word(w, parse_word(f"b^{n}"))
        assert layer_slopes(c) == [Slope(1, -n), INF] * 5
        assert is_identity_word(c)


def test_omega():
    assert omega(ZERO, INF) == 1
    assert omega(INF, ZERO) == -1
    assert omega((1, 2), (1, 2)) == 0


# --- parser ---

def test_parse_gamma():
    w = parse_word("a^3 b a^3 b a^3 b^2")
    assert [(f.slope, f.exp) for f in w] == [(ZERO, 3), (INF, 1), (ZERO, 3), (INF, 1), (ZERO, 3), (INF, 2)]


def test_parse_groups():
    w = parse_word("(ab)^6")
    assert len(w) == 12 and len(w.curves()) == 12
    assert parse_word("(b^3 a)^2") == parse_word("b^3 a b^3 a")
    assert parse_word("ABab") == parse_word("a b a b")
    assert parse_word("a^+2") == parse_word("aa")
    assert parse_word("") == TwistWord()


@pytest.mark.parametrize("text,offset", [("a^^2", 2), ("a^0", 2), ("(ab", 3), ("ab)", 2), ("ac", 1)])
def test_parse_errors(text, offset):
    with pytest.raises(WordSyntaxError) as err:
        parse_word(text)
    assert err.value.offset == offset
