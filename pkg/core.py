# ----------------------------------------------------------------------------#
# Imports
# ----------------------------------------------------------------------------#

import cmath
import math
from enum import Enum

import numpy as np


# ----------------------------------------------------------------------------#
# Errors.
# ----------------------------------------------------------------------------#

class HyperError(Exception):
    """Base class for every numerical failure raised by the library."""


class PoleError(HyperError):
    pass


class DomainError(HyperError):
    pass


class ParameterError(HyperError):
    pass


class ConvergenceError(HyperError):
    pass


class QuadratureError(ConvergenceError):
    pass


# ----------------------------------------------------------------------------#
# Branches.
# ----------------------------------------------------------------------------#

class BranchSide(Enum):
    """Which side of the negative real axis a cut is approached from."""

    ABOVE = 'above'
    BELOW = 'below'

    @property
    def sign(self):
        return 1.0 if self is BranchSide.ABOVE else -1.0

    def mirrored(self):
        return BranchSide.BELOW if self is BranchSide.ABOVE else BranchSide.ABOVE


# Lower-side limits everywhere: 2F1(1/2, 3/4; 3/2 | 2) = (1 - i)/2 K(1/sqrt 2).
DEFAULT_SIDE = BranchSide.BELOW

POLE_DISTANCE = 1e-12
SNAP = 1e-15


def principal_pow(base, exp, side=DEFAULT_SIDE):
    """base**exp via the principal logarithm.

    A base on the negative real axis takes arg +pi from above and -pi from
    below, whatever the sign of its zero imaginary part.
    """
    base = complex(base)
    exp = complex(exp)
    if exp == 0:
        return 1 + 0j
    if exp == 1:
        return base
    if base == 0:
        if exp.real > 0:
            return 0j
        raise DomainError('0 ** %r is undefined' % (exp,))
    if base.imag == 0 and base.real < 0:
        log = complex(math.log(-base.real), side.sign * math.pi)
    else:
        log = cmath.log(base)
    return cmath.exp(exp * log)


def branch_log(values, side=DEFAULT_SIDE):
    """Vectorised principal log with the negative axis pinned to side."""
    values = np.asarray(values, dtype=complex)
    out = np.log(values)
    on_cut = (values.imag == 0) & (values.real < 0)
    if np.any(on_cut):
        out = np.where(on_cut, np.log(-values.real) + 1j * side.sign * math.pi, out)
    return out


# ----------------------------------------------------------------------------#
# Gamma.
# ----------------------------------------------------------------------------#

LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _is_pole(z):
    nearest = round(z.real)
    return nearest <= 0 and abs(z - nearest) < POLE_DISTANCE


def gamma(z):
    z = complex(z)
    if _is_pole(z):
        raise PoleError('gamma has a pole at %r' % (z,))
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * gamma(1 - z))
    z -= 1
    series = LANCZOS_COEFFICIENTS[0]
    for i, coefficient in enumerate(LANCZOS_COEFFICIENTS[1:], start=1):
        series += coefficient / (z + i)
    t = z + LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * cmath.exp((z + 0.5) * cmath.log(t) - t) * series


def pochhammer(a, m):
    if m < 0 or int(m) != m:
        raise ParameterError('pochhammer needs a non-negative integer count, got %r' % (m,))
    a = complex(a)
    product = 1 + 0j
    for k in range(int(m)):
        product *= a + k
    return product


# ----------------------------------------------------------------------------#
# Root sets.
# ----------------------------------------------------------------------------#

def _snapped(theta, shift=0.0):
    re = math.cos(theta)
    im = math.sin(theta)
    return complex(shift + (re if abs(re) > SNAP else 0.0), im if abs(im) > SNAP else 0.0)


def roots_of_unity(n):
    """The n-1 non-trivial n-th roots of unity, by increasing angle."""
    if n < 2:
        raise DomainError('roots_of_unity needs n >= 2, got %r' % (n,))
    return [_snapped(2 * math.pi * k / n) for k in range(1, n)]


def unit_shift_roots(n):
    """1 - w for the non-trivial n-th roots of unity w, without cancellation."""
    if n < 2:
        raise DomainError('unit_shift_roots needs n >= 2, got %r' % (n,))
    roots = []
    for k in range(1, n):
        theta = 2 * math.pi * k / n
        im = -math.sin(theta)
        roots.append(complex(2 * math.sin(theta / 2) ** 2, im if abs(im) > SNAP else 0.0))
    return roots


def unit_partition_roots(n):
    """Points x with (1/x)**n + (1 - 1/x)**n = 0.

    x_k = 1 + exp(i(2k - 1)pi/n) for ascending k; for odd n the k that
    would land on x = 0 is skipped.
    """
    if n < 2:
        raise DomainError('unit_partition_roots needs n >= 2, got %r' % (n,))
    skipped = (n + 1) // 2 if n % 2 else None
    return [_snapped((2 * k - 1) * math.pi / n, shift=1.0)
            for k in range(1, n + 1) if k != skipped]
