from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eiskling.exact_arith import CycNumber
from eiskling.padic import (
    PadicElem,
    UnramElem,
    congruent_mod,
    embed_cyclotomic,
    teichmuller,
)
from eiskling.errors import (
    InsufficientPrecisionError,
    NotRationalError,
    UnsupportedEmbeddingError,
)

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=21)


@given(fracs, fracs, st.sampled_from([5, 7]))
@settings(max_examples=60, deadline=None)
def test_field_ops_match_rationals(x, y, p):
    if x.denominator % p == 0 or y.denominator % p == 0:
        return
    prec = 12
    a = PadicElem.from_fraction(x, p, prec)
    b = PadicElem.from_fraction(y, p, prec)
    assert a + b == PadicElem.from_fraction(x + y, p, prec)
    assert a * b == PadicElem.from_fraction(x * y, p, prec)
    assert a - b == PadicElem.from_fraction(x - y, p, prec)
    if y != 0:
        assert (a / b) * b == a


def test_valuation_and_residue():
    a = PadicElem.from_fraction(Fraction(50), 5, 10)
    assert a.valuation() == 2
    b = PadicElem.from_fraction(Fraction(7, 5), 5, 10)
    assert b.valuation() == -1
    c = PadicElem.from_fraction(13, 5, 6)
    assert c.residue(1) == 3
    assert c.residue(2) == 13


def test_teichmuller_character_values():
    for p in (5, 7, 11):
        for a in range(1, p):
            t = teichmuller(a, p, 10)
            assert (t ** (p - 1)).unit % p ** 10 == 1
            assert t.residue(1) == a % p


def test_embed_zeta4_in_z5():
    z = CycNumber.root_of_unity(4)
    img = embed_cyclotomic(z, 5, 10)
    assert isinstance(img, PadicElem)
    sq = img * img
    assert sq == PadicElem.from_fraction(-1, 5, 10)


def test_embedding_choices_are_conjugate():
    z = CycNumber.root_of_unity(4)
    a = embed_cyclotomic(z, 5, 10, choice=0)
    b = embed_cyclotomic(z, 5, 10, choice=1)
    assert a != b
    assert a + b == PadicElem.from_fraction(0, 5, 10)


def test_embed_rational_content():
    x = CycNumber.from_rational(Fraction(7, 3))
    img = embed_cyclotomic(x, 5, 8)
    assert img == PadicElem.from_fraction(Fraction(7, 3), 5, 8)


def test_embed_ramified_rejected():
    z = CycNumber.root_of_unity(5)
    with pytest.raises(UnsupportedEmbeddingError):
        embed_cyclotomic(z + 1, 5, 8)


def test_embed_unramified_carrier():
    z = CycNumber.root_of_unity(7)
    img = embed_cyclotomic(z, 5, 8)
    assert isinstance(img, UnramElem)
    total = UnramElem.from_padic(PadicElem.from_fraction(1, 5, 8), img.level)
    cur = img
    for _ in range(6):
        total = total + cur
        cur = cur * img
    v, exact = total.valuation_bound()
    assert not exact or v >= 8  # 1 + z + ... + z^6 = 0
    with pytest.raises(NotRationalError):
        embed_cyclotomic(z, 5, 8, require_rational=True)


def test_congruent_mod_and_precision():
    a = PadicElem.from_fraction(1, 5, 4)
    b = PadicElem.from_fraction(1 + 125, 5, 4)
    assert congruent_mod(a, b, 3)
    assert not congruent_mod(a, b, 4)
    with pytest.raises(InsufficientPrecisionError):
        congruent_mod(a, a, 9)


def test_congruent_mod_mixed_types():
    z = CycNumber.root_of_unity(7)
    u = embed_cyclotomic(z, 5, 8)
    a = PadicElem.from_fraction(0, 5, 8)
    diff = u * PadicElem.from_fraction(25, 5, 8)
    assert congruent_mod(diff, a, 2)
