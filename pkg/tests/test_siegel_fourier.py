import random
from fractions import Fraction

import pytest

from eiskling.exact_arith import CycNumber, HermitianMatrix, QuadFieldElem
from eiskling.characters import DirichletChar, SplitPCharPair
from eiskling.values import ExactValue
from eiskling.siegel_fourier import (
    SiegelDatum,
    additive_char,
    assemble_global,
    coeff_arch_normalized,
    coeff_aux_ell,
    coeff_p,
    coeff_unramified,
    prefactor_ell_lfactors,
    _sqrt_md_residue,
)
from eiskling.errors import UnsupportedBetaError

from oracles import minor_units_mod_p, rank_one_coeff_p_oracle


def make_pair(p, k1, k2, kappa):
    return SplitPCharPair(DirichletChar.from_exponent(p, k1),
                          DirichletChar.from_exponent(p, k2), wt=kappa,
                          at_p1=CycNumber.root_of_unity(4, 1),
                          at_p2=CycNumber.root_of_unity(4, 3))


def make_datum(p, D, n, variant, kappa=None, ell=13):
    k1, k2 = (1, 2) if p == 5 else (2, 3)
    kappa = kappa or n + 4
    return SiegelDatum(n=n, kappa=kappa, pair=make_pair(p, k1, k2, kappa),
                       p=p, D=D, sigma=(2, p), ell=ell, variant=variant)


def random_integral_hermitian(rng, n, D, span=6):
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(rng.randint(-span, span))
        for j in range(i + 1, n):
            a = Fraction(rng.randint(-span, span))
            b = Fraction(rng.randint(-span, span))
            rows[i][j] = QuadFieldElem(a, b, D)
            rows[j][i] = QuadFieldElem(a, -b, D)
    return HermitianMatrix(D, rows)


def test_additive_char():
    assert additive_char(Fraction(3), 5) == CycNumber.one()
    assert additive_char(Fraction(1, 5), 5) == CycNumber.root_of_unity(5, 1)
    assert additive_char(Fraction(2, 25), 5) == CycNumber.root_of_unity(25, 2)
    # additivity
    x, y = Fraction(1, 5), Fraction(3, 25)
    assert (additive_char(x, 5) * additive_char(y, 5)
            == additive_char(x + y, 5))


def test_rank_one_value_oracle():
    """The p-local coefficient matches the literal finite-sum evaluation of
    the stabilized section for more than twenty rank-one indices."""
    p = 5
    count = 0
    for at1, at2 in [(CycNumber.one(), CycNumber.one()),
                     (CycNumber.root_of_unity(4, 1),
                      CycNumber.root_of_unity(4, 3))]:
        pair = SplitPCharPair(DirichletChar.from_exponent(p, 1),
                              DirichletChar.from_exponent(p, 2), wt=6,
                              at_p1=at1, at_p2=at2)
        datum = SiegelDatum(n=1, kappa=6, pair=pair, p=p, D=1, sigma=(2, p),
                            ell=13, variant="lfun")
        s = datum.s_point
        for b in (1, 2, 3, 4, 6, 7, 9, 11, 5, 10, 15, Fraction(1, 2)):
            beta = HermitianMatrix(1, [[Fraction(b)]])
            got = coeff_p(beta, datum).materialize()
            want = rank_one_coeff_p_oracle(Fraction(b), pair, p, s)
            assert got == want
            count += 1
    assert count >= 20


@pytest.mark.parametrize("p,D", [(5, 1), (7, 3)])
@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("variant", ["klingen", "lfun"])
def test_vanishing_set_matches_brute_minors(p, D, n, variant):
    datum = make_datum(p, D, n, variant)
    root = _sqrt_md_residue(datum)
    assert (root * root + D) % p == 0
    rng = random.Random(1000 * p + n)
    checked = 0
    while checked < 40:
        beta = random_integral_hermitian(rng, n, D)
        if beta.det() == 0:
            with pytest.raises(UnsupportedBetaError):
                coeff_p(beta, datum)
            continue
        supported, units = minor_units_mod_p(beta, p, root, variant)
        val = coeff_p(beta, datum)
        assert val.is_zero() == (not (supported and units))
        checked += 1


def test_coeff_p_zero_off_lattice():
    datum = make_datum(5, 1, 2, "lfun")
    beta = HermitianMatrix(1, [[Fraction(1, 5)]])
    datum1 = make_datum(5, 1, 1, "lfun")
    assert coeff_p(beta, datum1).is_zero()


def test_unramified_cancellation():
    datum = make_datum(5, 1, 2, "klingen")
    beta = HermitianMatrix(1, [[Fraction(1), Fraction(1)],
                               [Fraction(1), Fraction(2)]])
    assert beta.det() == 1  # primitive at every good prime
    c = coeff_unramified(beta, 3, datum)
    # the local value is exactly the inverse of the global L-prefactor at 3
    acc = c
    tpb = datum.tau_prime_bar()
    sign = 1
    from eiskling.characters import chi_K
    ck = chi_K(1, 3)
    prod = CycNumber.one()
    for i in range(datum.n):
        prod = prod * (CycNumber.one()
                       - tpb(3) * sign * Fraction(3) ** (-(datum.kappa - i)))
        sign *= ck
    assert (acc * ExactValue(prod.inverse())) == ExactValue(CycNumber.one())


def test_unramified_requires_primitive():
    datum = make_datum(5, 1, 2, "klingen")
    beta = HermitianMatrix(1, [[Fraction(3), Fraction(0)],
                               [Fraction(0), Fraction(3)]])  # det 9
    with pytest.raises(UnsupportedBetaError):
        coeff_unramified(beta, 3, datum)


def test_aux_ell_support_condition():
    datum = make_datum(5, 1, 2, "klingen")
    beta = HermitianMatrix(1, [[Fraction(1, 13), Fraction(0)],
                               [Fraction(0), Fraction(1)]])
    assert coeff_aux_ell(beta, datum).is_zero()
    good = HermitianMatrix(1, [[Fraction(1), Fraction(0)],
                               [Fraction(0), Fraction(1)]])
    assert not coeff_aux_ell(good, datum).is_zero()


def test_arch_normalized():
    datum = make_datum(5, 1, 2, "klingen", kappa=6)
    beta = HermitianMatrix(1, [[Fraction(1), Fraction(0)],
                               [Fraction(0), Fraction(2)]])
    v = coeff_arch_normalized(beta, datum)
    from math import factorial
    want = ExactValue.from_rational(
        Fraction(1, 4) * Fraction(2 ** 4) / factorial(5))
    assert v == want
    neg = HermitianMatrix(1, [[Fraction(-1), Fraction(0)],
                              [Fraction(0), Fraction(1)]])
    assert coeff_arch_normalized(neg, datum).is_zero()


def test_assemble_global_structure():
    datum = make_datum(5, 1, 2, "klingen", kappa=6)
    beta = HermitianMatrix(1, [[Fraction(1), Fraction(1)],
                               [Fraction(1), Fraction(2)]])
    rep = assemble_global(beta, datum)
    assert not rep.degenerate
    assert set(rep.locals) == {"unramified", "ell_prefactor", "ell", "p",
                               "arch"}
    assert rep.locals["unramified"] == ExactValue.one()
    prod = ExactValue.one()
    for v in rep.locals.values():
        prod = prod * v
    assert prod == rep.normalized
    js = rep.to_json()
    assert js["degenerate"] is False


def test_assemble_global_degenerate_and_nonpd():
    datum = make_datum(5, 1, 2, "klingen", kappa=6)
    zero = HermitianMatrix(1, [[Fraction(0), Fraction(0)],
                               [Fraction(0), Fraction(0)]])
    rep = assemble_global(zero, datum)
    assert rep.degenerate and rep.normalized.is_zero()
    indef = HermitianMatrix(1, [[Fraction(1), Fraction(0)],
                                [Fraction(0), Fraction(-1)]])
    rep2 = assemble_global(indef, datum)
    assert not rep2.degenerate and rep2.normalized.is_zero()
    assert any("positive definite" in n for n in rep2.notes)


def test_prefactor_ell_matches_inverse_lfactors():
    datum = make_datum(5, 1, 2, "klingen", kappa=6, ell=13)
    v = prefactor_ell_lfactors(datum)
    assert not v.is_zero()
