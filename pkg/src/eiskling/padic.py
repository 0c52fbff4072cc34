"""p-adic numbers with precision tracking, Teichmuller lifts, and embeddings
of cyclotomic numbers into Q_p or an unramified carrier ring.

PadicElem stores p^val * unit to absolute precision p^prec.  UnramElem models
elements of Z_p[x]/(Phi_B(x), p^prec) for B coprime to p; this ring is a
product of unramified discrete valuation rings, so "all coefficients divisible
by p^k" is a sound (possibly conservative) certificate for valuation >= k in
every factor.
"""

from fractions import Fraction
from math import gcd

from .errors import (InsufficientPrecisionError, NotRationalError,
                     UnsupportedEmbeddingError)
from .exact_arith import CycNumber, cyclotomic_poly, euler_phi, _power_table


def _vp(n, p):
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PadicElem:
    """An element of Q_p known to absolute precision p^prec."""

    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p, val, unit, prec):
        self.p = p
        self.prec = prec
        if unit % p == 0 and unit != 0:
            raise ValueError("unit part must be a p-unit")
        if unit == 0:
            self.val = prec
            self.unit = 0
        else:
            self.val = val
            self.unit = unit % p ** max(prec - val, 1)
            if self.unit == 0:
                self.val = prec

    @classmethod
    def zero(cls, p, prec):
        return cls(p, prec, 0, prec)

    @classmethod
    def from_fraction(cls, x, p, prec):
        x = Fraction(x)
        if x == 0:
            return cls.zero(p, prec)
        vn = _vp(x.numerator, p) if x.numerator else 0
        vd = _vp(x.denominator, p)
        val = vn - vd
        num = x.numerator // p ** vn
        den = x.denominator // p ** vd
        rel = max(prec - val, 1)
        unit = num * pow(den, -1, p ** rel) % p ** rel
        return cls(p, val, unit, prec)

    def is_zero(self):
        """True when the element is zero to the stored precision."""
        return self.unit == 0

    def valuation(self):
        """Valuation; for an element zero to precision, the precision bound."""
        return self.val

    def residue(self, k):
        """Integer representative mod p^k (requires val >= 0 and prec >= k)."""
        if self.prec < k:
            raise InsufficientPrecisionError("prec %d < %d" % (self.prec, k))
        if self.is_zero():
            return 0
        if self.val < 0:
            raise ValueError("negative valuation has no integer residue")
        return self.unit * self.p ** self.val % self.p ** k

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return PadicElem.from_fraction(other, self.p, self.prec)
        if isinstance(other, PadicElem):
            if other.p != self.p:
                raise ValueError("mixed primes")
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = min(self.prec, o.prec)
        if self.is_zero():
            return PadicElem(o.p, o.val, o.unit, prec)
        if o.is_zero():
            return PadicElem(self.p, self.val, self.unit, prec)
        v = min(self.val, o.val)
        rel = max(prec - v, 1)
        total = (self.unit * self.p ** (self.val - v)
                 + o.unit * self.p ** (o.val - v)) % self.p ** rel
        if total == 0:
            return PadicElem.zero(self.p, prec)
        dv = _vp(total, self.p)
        return PadicElem(self.p, v + dv, total // self.p ** dv, prec)

    __radd__ = __add__

    def __neg__(self):
        return PadicElem(self.p, self.val, -self.unit % self.p ** max(self.prec - self.val, 1)
                         if self.unit else 0, self.prec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return PadicElem.zero(self.p, min(self.prec + o.val, o.prec + self.val))
        val = self.val + o.val
        prec = min(self.prec + o.val, o.prec + self.val)
        rel = max(prec - val, 1)
        return PadicElem(self.p, val, self.unit * o.unit % self.p ** rel, prec)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("p-adic division by zero (to precision)")
        rel = max(self.prec - self.val, 1)
        return PadicElem(self.p, -self.val, pow(self.unit, -1, self.p ** rel),
                         rel - self.val)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return PadicElem.from_fraction(other, self.p, self.prec) / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        acc = PadicElem.from_fraction(1, self.p, self.prec + abs(e) * abs(self.val) + 1)
        for _ in range(abs(e)):
            acc = acc * base
        return acc

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None

    def __repr__(self):
        if self.is_zero():
            return "O(%d^%d)" % (self.p, self.prec)
        return "%d*%d^%d + O(%d^%d)" % (self.unit, self.p, self.val, self.p, self.prec)


def teichmuller(a, p, prec):
    """The Teichmuller lift of the p-unit a, to absolute precision p^prec."""
    if isinstance(a, PadicElem):
        if a.val != 0:
            raise ValueError("teichmuller needs a p-unit")
        x = a.unit % p ** prec
    else:
        a = Fraction(a)
        if _vp(a.numerator, p) != 0 or _vp(a.denominator, p) != 0:
            raise ValueError("teichmuller needs a p-unit")
        x = a.numerator * pow(a.denominator, -1, p ** prec) % p ** prec
    mod = p ** prec
    for _ in range(prec + 1):
        nxt = pow(x, p, mod)
        if nxt == x:
            break
        x = nxt
    return PadicElem(p, 0, x, prec)


class UnramElem:
    """Element of Z_p[x]/(Phi_level(x), p^prec), scaled by p^shift."""

    __slots__ = ("p", "level", "coeffs", "prec", "shift")

    def __init__(self, p, level, coeffs, prec, shift=0):
        if gcd(level, p) != 1:
            raise ValueError("carrier level must be coprime to p")
        self.p = p
        self.level = level
        self.prec = prec
        self.shift = shift
        mod = p ** prec
        coeffs = tuple(c % mod for c in coeffs)
        if len(coeffs) != euler_phi(level):
            raise ValueError("bad coefficient count")
        self.coeffs = coeffs

    @classmethod
    def from_padic(cls, x, level):
        phi = euler_phi(level)
        rel = max(x.prec - min(x.val, 0), 1)
        if x.val < 0:
            return cls(x.p, level, (x.unit,) + (0,) * (phi - 1), rel, x.val)
        return cls(x.p, level, (x.unit * x.p ** x.val if x.unit else 0,) + (0,) * (phi - 1),
                   x.prec, 0)

    def _align(self, other):
        if not isinstance(other, UnramElem):
            if isinstance(other, PadicElem):
                other = UnramElem.from_padic(other, self.level)
            elif isinstance(other, (int, Fraction)):
                other = UnramElem.from_padic(
                    PadicElem.from_fraction(other, self.p, self.prec + max(self.shift, 0)),
                    self.level)
            else:
                return None, None
        if other.p != self.p or other.level != self.level:
            raise ValueError("mixed carrier rings")
        s = min(self.shift, other.shift)
        a = self._reshift(s)
        b = other._reshift(s)
        prec = min(a.prec, b.prec)
        return (UnramElem(a.p, a.level, a.coeffs, prec, s),
                UnramElem(b.p, b.level, b.coeffs, prec, s))

    def _reshift(self, s):
        if s == self.shift:
            return self
        d = self.shift - s
        assert d > 0
        return UnramElem(self.p, self.level,
                         tuple(c * self.p ** d for c in self.coeffs),
                         self.prec, s)

    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return UnramElem(a.p, a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)),
                         a.prec, a.shift)

    __radd__ = __add__

    def __neg__(self):
        return UnramElem(self.p, self.level, tuple(-c for c in self.coeffs),
                         self.prec, self.shift)

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return UnramElem(a.p, a.level, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)),
                         a.prec, a.shift)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PadicElem)):
            o = self._align(other)[1]
        elif isinstance(other, UnramElem):
            o = other
        else:
            return NotImplemented
        if o.p != self.p or o.level != self.level:
            raise ValueError("mixed carrier rings")
        phi = len(self.coeffs)
        prec = min(self.prec, o.prec)
        mod = self.p ** prec
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    if y:
                        conv[i + j] += x * y
        table = _power_table(self.level, 2 * phi - 1)
        out = [0] * phi
        for k, c in enumerate(conv):
            if c:
                row = table[k]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return UnramElem(self.p, self.level, tuple(c % mod for c in out), prec,
                         self.shift + o.shift)

    __rmul__ = __mul__

    def valuation_bound(self):
        """(v, exact) where v lower-bounds the valuation in every unramified
        factor; exact=False when the element is zero to working precision."""
        mod = self.p ** self.prec
        vals = []
        for c in self.coeffs:
            c %= mod
            if c:
                vals.append(_vp(c, self.p))
        if not vals:
            return self.prec + self.shift, False
        return min(vals) + self.shift, True

    def is_zero(self):
        return all(c % self.p ** self.prec == 0 for c in self.coeffs)

    def __eq__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return (a - b).is_zero()

    __hash__ = None

    def __repr__(self):
        return "UnramElem(p=%d, level=%d, shift=%d, prec=%d, coeffs=%s)" % (
            self.p, self.level, self.shift, self.prec, list(self.coeffs))


def _smallest_primitive_root(p):
    for g in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    raise ValueError("no primitive root")


def embedding_units(m):
    """Units mod m in increasing order; index into this list picks an embedding."""
    return [a for a in range(1, max(m, 2)) if gcd(a, m) == 1] or [1]


def embed_cyclotomic(x, p, prec, choice=0, require_rational=False):
    """Embed a CycNumber into Q_p (PadicElem) or the unramified carrier ring.

    The p-power part of the level must act trivially (the element must descend
    to the prime-to-p part of its level), otherwise the embedding would be
    ramified and an UnsupportedEmbeddingError is raised.  `choice` selects the
    embedding by composing with a Galois twist of the prime-to-p level.
    """
    n = x.level
    m = n
    while m % p == 0:
        m //= p
    if m != n:
        y = x.descend(m)
        if y is None:
            raise UnsupportedEmbeddingError(
                "element of level %d does not descend to level %d" % (n, m))
        x = y
    units = embedding_units(m)
    a = units[choice % len(units)]
    if a != 1:
        x = x.galois(a)
    if x.is_rational():
        return PadicElem.from_fraction(x.rational(), p, prec)
    if (p - 1) % m == 0:
        g = _smallest_primitive_root(p)
        root = teichmuller(pow(g, (p - 1) // m, p), p, prec)
        acc = PadicElem.zero(p, prec)
        power = PadicElem.from_fraction(1, p, prec)
        for c in x.coeffs:
            if c:
                acc = acc + power * PadicElem.from_fraction(c, p, prec)
            power = power * root
        return acc
    if require_rational:
        raise NotRationalError("image lies in an unramified extension of Q_p")
    phi = euler_phi(m)
    shift = 0
    for c in x.coeffs:
        if c:
            v = _vp(c.numerator, p) - _vp(c.denominator, p)
            shift = min(shift, v)
    mod = p ** prec
    coeffs = []
    for c in x.coeffs:
        c = c / Fraction(p) ** shift
        den = c.denominator
        coeffs.append(c.numerator * pow(den, -1, mod) % mod if c else 0)
    return UnramElem(p, m, tuple(coeffs), prec, shift)


def congruent_mod(a, b, k):
    """Decide valuation(a - b) >= k, raising when precision cannot decide."""
    if isinstance(a, PadicElem) and isinstance(b, UnramElem):
        a = UnramElem.from_padic(a, b.level)
    if isinstance(b, PadicElem) and isinstance(a, UnramElem):
        b = UnramElem.from_padic(b, a.level)
    d = a - b
    if isinstance(d, PadicElem):
        if d.is_zero():
            if d.prec < k:
                raise InsufficientPrecisionError("prec %d < %d" % (d.prec, k))
            return True
        return d.val >= k
    v, exact = d.valuation_bound()
    if exact:
        return v >= k
    if v < k:
        raise InsufficientPrecisionError("prec bound %d < %d" % (v, k))
    return True
