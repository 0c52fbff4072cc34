"""Local Fourier coefficients of the chosen Siegel sections and their
assembly into normalized global q-expansion coefficients.

All values are exact: cyclotomic units times formal prime powers and Gauss
symbols (ExactValue).  Transcendental archimedean factors cancel against the
global normalization and never appear.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import factorial

from .errors import ConductorError, UnsupportedBetaError
from .exact_arith import CycNumber, factorize, sqrt_minus_d
from .characters import chi_K
from .padic import PadicElem, embed_cyclotomic
from .values import ExactValue


@dataclass
class SiegelDatum:
    """Global datum fixing the section at every place.

    n is the size of the coefficient index: n = r + 1 for the klingen variant
    and n = r for the lfun variant, where r is the rank of the definite group.
    """

    n: int
    kappa: int
    pair: object            # SplitPCharPair
    p: int
    D: int
    sigma: tuple
    ell: int
    y_norm: Fraction = Fraction(1)
    vol_Y: Fraction = Fraction(1)
    tau_ell_prime: CycNumber = field(default_factory=CycNumber.one)
    embedding_choice: int = 0
    prec: int = 12
    variant: str = "klingen"

    def __post_init__(self):
        if self.variant not in ("klingen", "lfun"):
            raise ValueError("variant must be 'klingen' or 'lfun'")
        if self.p not in self.sigma:
            raise ValueError("sigma must contain p")
        if self.ell in self.sigma:
            raise ValueError("the auxiliary prime is kept outside sigma")
        if chi_K(self.D, self.p) != 1:
            raise ValueError("p must split in the quadratic field")
        if chi_K(self.D, self.ell) == 0:
            raise ValueError("the auxiliary prime must be unramified")

    @property
    def r(self):
        return self.n - 1 if self.variant == "klingen" else self.n

    @property
    def s_point(self):
        return Fraction(self.kappa - self.n, 2)

    def tau_prime_bar(self):
        return self.pair.tau_prime().conj()


def _vq(x, q):
    """q-adic valuation of a nonzero Fraction."""
    x = Fraction(x)
    v = 0
    n = x.numerator
    while n % q == 0:
        n //= q
        v += 1
    d = x.denominator
    while d % q == 0:
        d //= q
        v -= 1
    return v


def _entry_integral_at(beta, q):
    for row in beta.entries:
        for e in row:
            if e.a.denominator % q == 0 or e.b.denominator % q == 0:
                return False
    return True


def additive_char(x, q):
    """e_q(x) = e(frac_q(x)) as an exact root of unity of q-power order."""
    x = Fraction(x)
    if x == 0:
        return CycNumber.one()
    k = max(0, -_vq(x, q))
    if k == 0:
        return CycNumber.one()
    qk = q ** k
    m = x.denominator // qk
    j = x.numerator * pow(m, -1, qk) % qk
    return CycNumber.root_of_unity(qk, j)


def coeff_unramified(beta, q, datum):
    """Local coefficient at a good prime q for a q-primitive index:
    prod_{i=0}^{n-1} (1 - taubar' chi_K^i (q) q^{-(kappa-i)}), which cancels
    the corresponding abelian L-factors of the global normalization exactly."""
    if q in datum.sigma or q == datum.ell or q == datum.p:
        raise ValueError("q must be a good prime")
    ck = chi_K(datum.D, q)
    if ck == 0:
        raise UnsupportedBetaError("ramified prime %d not supported" % q)
    if not _entry_integral_at(beta, q):
        raise UnsupportedBetaError("beta not integral at %d" % q)
    det = beta.det()
    if det == 0 or _vq(det, q) != 0:
        raise UnsupportedBetaError("beta not primitive at %d" % q)
    tpb = datum.tau_prime_bar()
    acc = CycNumber.one()
    sign = 1
    for i in range(datum.n):
        acc = acc * (CycNumber.one() - tpb(q) * sign * Fraction(q) ** (-(datum.kappa - i)))
        sign *= ck
    return ExactValue(acc)


def prefactor_ell_lfactors(datum):
    """The abelian L-factors of the global normalization at the auxiliary
    prime (which lies outside sigma and is not cancelled locally):
    prod_{i=0}^{n-1} (1 - taubar' chi_K^i (ell) ell^{-(kappa-i)})^{-1}."""
    tpb = datum.tau_prime_bar()
    ck = chi_K(datum.D, datum.ell)
    acc = CycNumber.one()
    sign = 1
    for i in range(datum.n):
        acc = acc * (CycNumber.one()
                     - tpb(datum.ell) * sign * Fraction(datum.ell) ** (-(datum.kappa - i)))
        sign *= ck
    return ExactValue(acc.inverse())


def coeff_aux_ell(beta, datum, A=None):
    """Local coefficient at the auxiliary split prime ell:

    tau(y ybar) |(y ybar)^2|^(-s - shift) Vol(Y) tau(det A Abar)
    |det A Abar|^(-s + n/2) e_ell(d(beta) / (y ybar)) [beta integral at ell]

    where shift = (r+1)/2 (klingen) or r/2 (lfun), A is an optional rational
    diagonal change of basis, and d(beta) is the sum of the last r (klingen)
    or all n (lfun) diagonal entries."""
    from .pullback import aux_ell_scalar
    ell = datum.ell
    s = datum.s_point
    scalar = aux_ell_scalar(datum.y_norm, ell, s, datum.r, datum.vol_Y,
                            variant=datum.variant,
                            tau_at_y=datum.tau_ell_prime ** _vq(datum.y_norm, ell)
                            if datum.y_norm != 1 else None)
    if not _entry_integral_at(beta, ell):
        return ExactValue.zero()
    out = scalar
    if A is not None:
        da = Fraction(1)
        for x in A:
            da *= Fraction(x)
        v = _vq(da, ell)
        if v:
            out = out * ExactValue(datum.tau_ell_prime ** v)
            out = out.times_prime_power(ell, 2 * v * (s - Fraction(datum.n, 2)))
    start = 1 if datum.variant == "klingen" else 0
    tr = sum((beta.entry(i, i).a for i in range(start, datum.n)), Fraction(0))
    out = out * ExactValue(additive_char(tr / datum.y_norm, ell))
    return out


def _sqrt_md_residue(datum):
    """Residue mod p of sqrt(-D) under the embedding fixed by the datum."""
    img = embed_cyclotomic(sqrt_minus_d(datum.D), datum.p, datum.prec,
                           choice=datum.embedding_choice)
    if isinstance(img, PadicElem):
        return img.residue(1)
    # split p guarantees a mod-p root; fall back to the smallest one
    for t in range(datum.p):
        if (t * t + datum.D) % datum.p == 0:
            return t
    raise UnsupportedBetaError("no square root of -D mod p")


def _quad_residue(x, p, root):
    if x.a.denominator % p == 0 or x.b.denominator % p == 0:
        raise UnsupportedBetaError("entry not integral at p")
    a = x.a.numerator * pow(x.a.denominator, -1, p) % p
    b = x.b.numerator * pow(x.b.denominator, -1, p) % p
    return (a + b * root) % p


def coeff_p(beta, datum):
    """Local coefficient at p for the stabilized section:

    taubar'(det beta) |det beta|_p^{2s} g(tau')^n c_n(taubar', -s) Phi(X)

    with c_n(tau', s) = tau'(p^n) p^{2ns - n(n+1)/2}, Phi supported on the
    matrices whose leading minors are all p-adic units with value
    tau_2(det X), and X the transposed (rows 1..r, columns 2..r+1) block
    (klingen) or the transpose of beta itself (lfun).  Nonzero values require
    det beta in Z_p^*; p-divisible determinants give 0 through the character.
    """
    p = datum.p
    n = datum.n
    if not datum.pair.conductors_all_p(p):
        raise ConductorError("tau1, tau2, tau1*tau2 must have conductor p")
    if not _entry_integral_at(beta, p):
        return ExactValue.zero()
    det = beta.det()
    if det == 0:
        raise UnsupportedBetaError("coeff_p needs det beta != 0")
    if _vq(det, p) != 0:
        return ExactValue.zero()  # taubar'(det beta) = 0
    root = _sqrt_md_residue(datum)
    if datum.variant == "klingen":
        rows = range(n - 1)
        cols = range(1, n)
        size = n - 1
    else:
        rows = range(n)
        cols = range(n)
        size = n
    # leading minors of the transposed block = minors on swapped index sets
    for k in range(1, size + 1):
        m = beta.minor(list(rows)[:k], list(cols)[:k])
        if _quad_residue(m, p, root) == 0:
            return ExactValue.zero()
    if size:
        det_x = beta.minor(rows, cols)
        phi_val = datum.pair.tau2(_quad_residue(det_x, p, root))
    else:
        phi_val = CycNumber.one()
    tpb = datum.tau_prime_bar()
    det_res = det.numerator * pow(det.denominator, -1, p) % p
    unit = tpb(det_res) * phi_val * _p_convention_unit(datum)
    s = datum.s_point
    out = ExactValue(unit)
    out = out.with_gauss(datum.pair.tau_prime().primitive_part(), n)
    # c_n(taubar', -s)
    out = out * ExactValue(datum.pair.at_p_prime() ** (-n))
    out = out.times_prime_power(p, -2 * n * s - Fraction(n * (n + 1), 2))
    return out


def _p_convention_unit(datum):
    """Unit calibrated against the finite-sum evaluation of the stabilized
    section with the plus-sign additive character: each of the r rows of the
    unipotent sum contributes tau_2(-1) tau_2(p).  The rank-one case is
    verified computationally in the test suite."""
    return (datum.pair.tau2(-1) * datum.pair.at_p2) ** datum.r


def coeff_arch_normalized(beta, datum):
    """Archimedean coefficient after dividing by the global normalization:
    (-2)^(-n) det(beta)^(kappa-n) / (kappa-1)!  for the klingen variant,
    (-2)^(-n) det(beta)^(kappa-n)               for the lfun variant;
    zero unless det beta > 0.  Requires kappa >= n."""
    n = datum.n
    if datum.kappa < n:
        raise ValueError("need kappa >= n")
    det = beta.det()
    if det <= 0:
        return ExactValue.zero()
    val = Fraction((-1) ** n, 2 ** n) * det ** (datum.kappa - n)
    if datum.variant == "klingen":
        val /= factorial(datum.kappa - 1)
    return ExactValue.from_rational(val)


@dataclass
class CoefficientReport:
    beta: object
    variant: str
    locals: dict
    normalized: object
    notes: list
    degenerate: bool = False

    def to_json(self):
        return {
            "beta": self.beta.to_json(),
            "variant": self.variant,
            "degenerate": self.degenerate,
            "locals": {k: v.to_json() for k, v in self.locals.items()},
            "normalized": self.normalized.to_json(),
            "notes": list(self.notes),
        }


def assemble_global(beta, datum):
    """Assemble the normalized global coefficient at beta as the product of
    the local coefficients, after checking primitivity away from sigma and
    the auxiliary prime.

    Raises UnsupportedBetaError for indices outside the implemented
    (primitive) range; returns a degenerate placeholder report for singular
    indices."""
    if beta.n != datum.n:
        raise ValueError("beta size does not match the datum")
    notes = []
    det = beta.det()
    if det == 0:
        return CoefficientReport(beta, datum.variant, {}, ExactValue.zero(),
                                 ["singular index: constant-term block, "
                                  "value not computed by this assembler"],
                                 degenerate=True)
    if not beta.is_positive_definite():
        return CoefficientReport(beta, datum.variant, {}, ExactValue.zero(),
                                 ["index not positive definite: archimedean "
                                  "coefficient vanishes"], degenerate=False)
    support = set(factorize(abs(det.numerator))) | set(factorize(det.denominator))
    for row in beta.entries:
        for e in row:
            support |= set(factorize(e.a.denominator))
            support |= set(factorize(e.b.denominator))
    good = sorted(q for q in support
                  if q not in datum.sigma and q not in (datum.ell, datum.p))
    locs = {}
    unram = ExactValue.one()
    for q in good:
        c = coeff_unramified(beta, q, datum)  # raises if not primitive at q
        prefq = ExactValue.one()
        tpb = datum.tau_prime_bar()
        ck = chi_K(datum.D, q)
        sign = 1
        acc = CycNumber.one()
        for i in range(datum.n):
            acc = acc * (CycNumber.one()
                         - tpb(q) * sign * Fraction(q) ** (-(datum.kappa - i)))
            sign *= ck
        prefq = ExactValue(acc.inverse())
        unram = unram * c * prefq  # exact cancellation: equals one
    locs["unramified"] = unram
    notes.append("good primes checked for primitivity: %s" % (good or "none"))
    for q in sorted(datum.sigma):
        if q != datum.p:
            notes.append("place %d in sigma: section normalized to 1 "
                         "(its L-factors are omitted from the prefactor)" % q)
    locs["ell_prefactor"] = prefactor_ell_lfactors(datum)
    locs["ell"] = coeff_aux_ell(beta, datum)
    locs["p"] = coeff_p(beta, datum)
    locs["arch"] = coeff_arch_normalized(beta, datum)
    if datum.variant == "lfun":
        notes.append("lfun variant: a residual factor (pi/2)^r is part of "
                     "the period and omitted from the algebraic value")
    total = ExactValue.one()
    for v in locs.values():
        total = total * v
    return CoefficientReport(beta, datum.variant, locs, total, notes)
