"""Differential-operator multipliers on q-expansion coefficients.

Applying the weight-raising operator and pairing with a highest weight vector
multiplies the coefficient at beta by a monomial in minors of beta.  The two
variants differ only in which block of beta the minors are taken from.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import QuadFieldElem, quad_to_cyc
from .values import ExactValue


def _pad_weights(a):
    return tuple(int(x) for x in a) + (0,)


def multiplier_klingen(beta, a):
    """Multiplier prod_k det(rows 2..k+1, cols 1..k of beta)^(a_k - a_(k+1))
    for an (r+1) x (r+1) coefficient index and weight a = (a_1 >= ... >= a_r),
    with a_(r+1) = 0."""
    r = len(a)
    if beta.n != r + 1:
        raise ValueError("beta must be (r+1) x (r+1)")
    return _minor_monomial(beta, a, row_offset=1)


def multiplier_lfun(beta, a):
    """Multiplier prod_k det(leading k x k block of beta)^(a_k - a_(k+1)) for
    an r x r coefficient index."""
    r = len(a)
    if beta.n != r:
        raise ValueError("beta must be r x r")
    return _minor_monomial(beta, a, row_offset=0)


def _minor_monomial(beta, a, row_offset):
    a = _pad_weights(a)
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
        raise ValueError("weights must be nonincreasing with a_r >= 0")
    acc = QuadFieldElem(Fraction(1), Fraction(0), beta.D)
    for k in range(1, len(a)):
        e = a[k - 1] - a[k]
        if e:
            m = beta.minor(range(row_offset, row_offset + k), range(k))
            acc = acc * m ** e
    return acc


@dataclass
class QExpansion:
    """A finite q-expansion: coefficient values indexed by hermitian beta."""

    n: int
    entries: list  # list of (HermitianMatrix, ExactValue)

    def coefficient(self, beta):
        for b, v in self.entries:
            if b == beta:
                return v
        return ExactValue.zero()


def apply_to_expansion(expansion, variant, a):
    """Multiply each coefficient by its minor monomial; coefficients at
    indices where the monomial vanishes become zero."""
    mul = multiplier_klingen if variant == "klingen" else multiplier_lfun
    out = []
    for beta, value in expansion.entries:
        m = mul(beta, a)
        if m.is_zero():
            out.append((beta, ExactValue.zero()))
        else:
            out.append((beta, value * ExactValue(quad_to_cyc(m))))
    return QExpansion(expansion.n, out)
