"""Pullback constants: unramified ratios, auxiliary-prime scalars, and the
p-place constants appearing in the Klingen and L-function normalizations."""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConductorError, NonIntegralExponentError, PoleError
from .exact_arith import CycNumber
from .values import ExactValue


@dataclass
class SatakeParams:
    """Satake parameters chi_1(q), ..., chi_r(q) at a split place, as exact
    cyclotomic units."""

    alphas: tuple

    def __post_init__(self):
        self.alphas = tuple(a if isinstance(a, CycNumber)
                            else CycNumber.from_rational(a) for a in self.alphas)

    @property
    def r(self):
        return len(self.alphas)


def _one_minus_inv(term, side, q):
    dif = CycNumber.one() - term
    if dif.is_zero():
        raise PoleError("%s pole in unramified ratio at q=%d" % (side, q))
    return dif


def klingen_ratio_unramified(params, tau_data, q, s, variant="klingen"):
    """Exact value of the unramified-section ratio at a split prime q:
    a degree-2r L-factor at s + shift over a product of abelian L-factors at
    2s + n - i, with shift = 1, n = r+1 (klingen) or shift = 1/2, n = r (lfun).

    tau_data = (tv, tvbar): values of the character at the two uniformizers
    over q.  All exponents must be integral for exact materialization.
    """
    s = Fraction(s)
    r = params.r
    tv, tvbar = tau_data
    if variant == "klingen":
        shift = Fraction(1)
        nden = r + 1
    elif variant == "lfun":
        shift = Fraction(1, 2)
        nden = r
    else:
        raise ValueError("variant must be 'klingen' or 'lfun'")
    e_num = s + shift
    if e_num.denominator != 1:
        raise NonIntegralExponentError("s + shift = %s is not integral" % e_num)
    qs = Fraction(q) ** (-int(e_num))
    num = CycNumber.one()
    for a in params.alphas:
        num = num * _one_minus_inv(tv.conj() * a * qs, "numerator", q)
        num = num * _one_minus_inv(tvbar.conj() * a.inverse() * qs, "numerator", q)
    num = num.inverse()
    tpbar = (tv * tvbar).conj()
    den = CycNumber.one()
    for i in range(nden):
        # chi_K(q) = 1 at a split prime, so the twists all agree
        e_den = 2 * s + nden - i  # klingen: 2s+r+1-i; lfun: 2s+r-i
        if Fraction(e_den).denominator != 1:
            raise NonIntegralExponentError("denominator exponent %s" % e_den)
        term = tpbar * (Fraction(q) ** (-int(e_den)))
        den = den * _one_minus_inv(term, "denominator", q)
    return num * den


def aux_ell_scalar(y_norm, ell, s, r, vol_Y, variant="klingen", tau_at_y=None):
    """Scalar from the auxiliary-prime intertwined section:
    tau(y ybar) |(y ybar)^2|^(-s - (r+1)/2) Vol(Y)   (klingen variant),
    with (r+1)/2 replaced by r/2 for the lfun variant."""
    s = Fraction(s)
    y_norm = Fraction(y_norm)
    v = 0
    t = y_norm
    while t.numerator % ell == 0:
        t = t / ell
        v += 1
    while t.denominator % ell == 0:
        t = t * ell
        v -= 1
    shift = Fraction(r + 1, 2) if variant == "klingen" else Fraction(r, 2)
    unit = tau_at_y if tau_at_y is not None else CycNumber.one()
    out = ExactValue(unit) * Fraction(vol_Y)
    return out.times_prime_power(ell, 2 * v * (s + shift))


def _p_constant_common(params, pair, kappa, r, p):
    if r < 1:
        raise ValueError("need r >= 1")
    if not pair.conductors_all_p(p):
        raise ConductorError("tau1, tau2 and tau1*tau2 must all have conductor p")
    unit = CycNumber.one()
    for a in params.alphas:
        unit = unit * a * pair.at_p1          # (chi_i tau_1)(p)
        unit = unit * a.inverse() * pair.at_p2  # (chi_i^-1 tau_2)(p)
    unit = unit * pair.at_p2 ** (-r)          # taubar^c at (p^r, 1)
    out = ExactValue(unit).times_prime_power(
        p, Fraction(kappa * r, 2) - Fraction(r * (r + 1), 2))
    return out.with_gauss(pair.tau1.conj().primitive_part(), r)


def p_constant_lfun(params, pair, kappa, r, p):
    """The p-place constant of the L-function normalization:
    p^(kappa r/2 - r(r+1)/2) g(tau1^-1)^r prod (chi_i tau_1)(p)
    prod (chi_i^-1 tau_2)(p) taubar^c((p^r,1))."""
    return _p_constant_common(params, pair, kappa, r, p)


def p_constant_klingen(params, pair, kappa, r, p):
    """The p-place constant of the Klingen normalization: the lfun constant
    times tau'(p^-1) p^(kappa - r) g(taubar')^-1."""
    out = _p_constant_common(params, pair, kappa, r, p)
    out = out * ExactValue(pair.at_p_prime().inverse())
    out = out.times_prime_power(p, kappa - r)
    return out.with_gauss(pair.tau_prime().conj().primitive_part(), -1)


def interpolation_p_factor(point, fam, params):
    """The modified Euler factor at p of the interpolated L-value at an
    arithmetic point: the lfun p-constant evaluated at the specialized
    characters and weight."""
    from .interpolation import specialize
    spec = specialize(point, fam)
    return p_constant_lfun(params, spec.pair, point.kappa_phi, fam.r, fam.p)
