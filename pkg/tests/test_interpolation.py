from fractions import Fraction

import pytest

from eiskling.exact_arith import CycNumber, enumerate_hermitian
from eiskling.characters import DirichletChar
from eiskling.siegel_fourier import SiegelDatum
from eiskling.pullback import SatakeParams
from eiskling.interpolation import (
    ArithmeticPoint,
    CharFamilySpec,
    check_congruences,
    coefficient_family,
    constant_term_divisibility,
    specialize,
    wild_char,
)
from eiskling.errors import ConductorError


def family(p=5, r=1, a=(0,)):
    k1, k2 = (1, 2) if p == 5 else (2, 3)
    return CharFamilySpec(p=p, r=r, tau1=DirichletChar.from_exponent(p, k1),
                          tau2=DirichletChar.from_exponent(p, k2),
                          at_p1=CycNumber.root_of_unity(4, 1),
                          at_p2=CycNumber.root_of_unity(4, 3), a=a)


def test_wild_char():
    z = CycNumber.root_of_unity(5, 2)
    chi = wild_char(5, z)
    assert chi.conductor() == 25
    assert chi(6) == z  # 6 = 1 + p
    assert chi.order() == 5
    assert wild_char(5, CycNumber.one()).is_trivial()
    with pytest.raises(ValueError):
        wild_char(5, CycNumber.root_of_unity(3))


def test_specialize_twist_directions():
    fam = family()
    base = specialize(ArithmeticPoint(6, 0), fam)
    moved = specialize(ArithmeticPoint(6, 4), fam)
    # the m-direction leaves the product character fixed
    assert base.pair.tau_prime().key() == moved.pair.tau_prime().key()
    assert moved.weight == (4,)
    # zeta1 moves the product by a wild twist
    z = CycNumber.root_of_unity(5)
    wild1 = specialize(ArithmeticPoint(6, 0, zeta1=z), fam)
    assert wild1.pair.tau_prime().conductor() == 25
    # zeta2 leaves the product fixed (self-dual direction)
    wild2 = specialize(ArithmeticPoint(6, 0, zeta2=z), fam)
    assert (wild2.pair.tau_prime().primitive_part().key()
            == base.pair.tau_prime().primitive_part().key())
    assert wild2.pair.tau1.conductor() == 25
    assert wild2.psi_finite.conductor() == 25


def test_specialize_injective_on_lattice():
    fam = family()
    z = CycNumber.root_of_unity(5)
    pts = [ArithmeticPoint(6, 0), ArithmeticPoint(6, 1),
           ArithmeticPoint(7, 0), ArithmeticPoint(6, 0, zeta1=z),
           ArithmeticPoint(6, 0, zeta2=z)]
    seen = set()
    for pt in pts:
        s = specialize(pt, fam)
        key = (s.kappa_phi, s.weight, s.pair.tau1.key(), s.pair.tau2.key(),
               s.psi_finite.key())
        assert key not in seen
        seen.add(key)


def test_xpb_validation():
    fam = family()
    specialize(ArithmeticPoint(6, 0, flag="Xpb"), fam)  # fine
    with pytest.raises(ConductorError):
        specialize(ArithmeticPoint(2, 0, flag="Xpb"), fam)  # kappa too small
    # m_phi = 3 makes tau2 * omega^-3 trivial: conductor drops to 1
    bad = ArithmeticPoint(6, 2, flag="Xpb")
    with pytest.raises(ConductorError):
        specialize(bad, fam)


def test_xpb_conductor_condition_value():
    fam = family()
    # m = 2: tau2 omega^-2 = omega^0 trivial -> product condition violated
    s = specialize(ArithmeticPoint(6, 2, flag="X"), fam)
    assert not s.pair.conductors_all_p(5)


def make_table(pts, fam=None, jobs=1):
    fam = fam or family()
    pair0 = specialize(pts[0], fam).pair
    datum = SiegelDatum(n=2, kappa=pts[0].kappa_phi, pair=pair0, p=fam.p, D=1,
                        sigma=(2, fam.p), ell=7, variant="klingen")
    betas = [b for b in enumerate_hermitian(2, 1, 3) if b.det() != 0]
    return coefficient_family(fam, pts, betas, datum, jobs=jobs), betas


def test_family_single_point_delegates():
    pts = [ArithmeticPoint(6, 0, flag="Xpb")]
    table, betas = make_table(pts)
    assert len(table.cells) == len(betas)
    assert not table.point_errors
    assert any(not c.report.normalized.is_zero()
               for c in table.cells.values())


def test_family_rejects_bad_point_continues():
    pts = [ArithmeticPoint(6, 0, flag="Xpb"), ArithmeticPoint(6, 2, flag="Xpb")]
    table, betas = make_table(pts)
    assert 1 in table.point_errors
    assert all(k[0] == 0 for k in table.cells)


def test_congruence_identical_points_pass_all():
    pts = [ArithmeticPoint(6, 0, flag="Xpb"), ArithmeticPoint(6, 0, flag="Xpb")]
    table, betas = make_table(pts)
    rep = check_congruences(table, [(0, 1, 6)])
    assert rep["all_pass"]


def test_congruence_symmetry():
    pts = [ArithmeticPoint(6, 0, flag="Xpb"), ArithmeticPoint(6, 4, flag="Xpb")]
    table, _ = make_table(pts)
    a = check_congruences(table, [(0, 1, 1)])
    b = check_congruences(table, [(1, 0, 1)])
    assert [r["status"] for r in a["records"]] == [r["status"]
                                                  for r in b["records"]]


def test_congruence_detects_failure():
    # points congruent only mod nothing: m-difference not divisible by p-1
    pts = [ArithmeticPoint(6, 0, flag="Xpb"), ArithmeticPoint(6, 1, flag="X")]
    table, _ = make_table(pts)
    rep = check_congruences(table, [(0, 1, 1)])
    assert any(r["status"] == "FAIL" for r in rep["records"])


def test_constant_term_divisibility_report():
    fam = family()
    pt = ArithmeticPoint(6, 0, flag="Xpb")
    satake = SatakeParams((CycNumber.root_of_unity(8, 1),))
    rep = constant_term_divisibility(pt, fam, satake, sigma=(2, 5))
    assert rep["status"] in ("CONDITIONAL-PASS", "INCONCLUSIVE")
    assert any("outside the proven range" in n for n in rep["notes"])
    assert rep["p_factor_valuation"] is not None


def test_constant_term_divisibility_r2():
    fam = family(r=2, a=(0, 0))
    pt = ArithmeticPoint(8, 0, flag="Xpb")
    satake = SatakeParams((CycNumber.root_of_unity(8, 1),
                           CycNumber.root_of_unity(8, 3)))
    rep = constant_term_divisibility(pt, fam, satake, sigma=(2, 5))
    assert not any("outside the proven range" in n for n in rep["notes"])
    if rep["status"] == "CONDITIONAL-PASS":
        assert rep["predicted_lower_bound"] is not None
