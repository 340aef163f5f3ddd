# ----------------------------------------------------------------------------#
# Imports
# ----------------------------------------------------------------------------#

import logging
from dataclasses import dataclass

import numpy as np

from core import (
    DEFAULT_SIDE,
    ConvergenceError,
    ParameterError,
    PoleError,
    branch_log,
    gamma,
    principal_pow,
)
from quadrature import IntegrandSpec, integrate

logger = logging.getLogger(__name__)

SERIES_RADIUS = 0.9
SERIES_EPS = 1e-16
MAX_TERMS = 100000
QUAD_TOL = 1e-11
REAL_SNAP = 1e-14
SUM_TOLERANCE = 1e-12


def _is_nonpositive_integer(c):
    nearest = round(c.real)
    return nearest <= 0 and abs(c - nearest) < SUM_TOLERANCE


def _snap(x):
    """Drop an imaginary part that is rounding noise."""
    x = complex(x)
    if x.imag != 0 and abs(x.imag) <= REAL_SNAP * max(1.0, abs(x)):
        return complex(x.real, 0.0)
    return x


def _on_cut(x):
    return x.imag == 0 and x.real > 1


# ----------------------------------------------------------------------------#
# Specs.
# ----------------------------------------------------------------------------#

@dataclass(frozen=True)
class HyperSpec:
    """Parameters of F_D(a; b_1..b_n; c | x_1..x_n)."""

    a: complex
    bs: tuple
    c: complex
    xs: tuple

    def __post_init__(self):
        bs = tuple(complex(b) for b in self.bs)
        xs = tuple(_snap(x) for x in self.xs)
        if not bs or len(bs) != len(xs):
            raise ParameterError('need as many b parameters as arguments, got %d and %d'
                                 % (len(bs), len(xs)))
        c = complex(self.c)
        if _is_nonpositive_integer(c):
            raise ParameterError('c = %r is a non-positive integer' % (c,))
        object.__setattr__(self, 'a', complex(self.a))
        object.__setattr__(self, 'bs', bs)
        object.__setattr__(self, 'c', c)
        object.__setattr__(self, 'xs', xs)

    @property
    def n(self):
        return len(self.xs)

    def order_reducible(self):
        return abs(self.c - sum(self.bs)) <= SUM_TOLERANCE


# ----------------------------------------------------------------------------#
# Series.
# ----------------------------------------------------------------------------#

def _sum_terms(terms):
    """Sum an iterator of terms until two in a row are negligible."""
    total = 0j
    quiet = 0
    for count, term in enumerate(terms):
        if count >= MAX_TERMS:
            break
        total += term
        if term == 0 and count > 0:
            return total
        if abs(term) < SERIES_EPS * abs(total):
            quiet += 1
            if quiet == 2:
                return total
        else:
            quiet = 0
    raise ConvergenceError('series did not converge in %d terms' % MAX_TERMS)


def _gauss_terms(a, b, c, x):
    term = 1 + 0j
    m = 0
    while True:
        yield term
        term *= (a + m) * (b + m) / ((c + m) * (m + 1)) * x
        m += 1


def hyp2f1_series(a, b, c, x):
    a, b, c, x = complex(a), complex(b), complex(c), complex(x)
    if abs(x) > SERIES_RADIUS:
        raise ParameterError('|x| = %.6g is outside the series radius %g' % (abs(x), SERIES_RADIUS))
    if _is_nonpositive_integer(c):
        raise PoleError('2F1 has a pole at c = %r' % (c,))
    if x == 0:
        return 1 + 0j
    return _sum_terms(_gauss_terms(a, b, c, x))


def _appell_terms(a, b1, b2, c, x1, x2):
    coefficient = 1 + 0j
    m = 0
    while True:
        yield coefficient * hyp2f1_series(a + m, b2, c + m, x2)
        coefficient *= (a + m) * (b1 + m) / ((c + m) * (m + 1)) * x1
        m += 1


def _appell_series(a, b1, b2, c, x1, x2):
    if x1 == 0:
        return hyp2f1_series(a, b2, c, x2)
    return _sum_terms(_appell_terms(a, b1, b2, c, x1, x2))


def _series(spec):
    if spec.n == 1:
        return hyp2f1_series(spec.a, spec.bs[0], spec.c, spec.xs[0])
    b1, b2 = spec.bs
    x1, x2 = spec.xs
    return _appell_series(spec.a, b1, b2, spec.c, x1, x2)


# ----------------------------------------------------------------------------#
# Euler integral.
# ----------------------------------------------------------------------------#

def _integral_admissible(spec):
    if spec.a.real <= 0 or (spec.c - spec.a).real <= 0:
        return False
    split_weights = {}
    for b, x in zip(spec.bs, spec.xs):
        if _on_cut(x):
            split_weights[x.real] = split_weights.get(x.real, 0.0) + b.real
    return all(weight < 1 for weight in split_weights.values())


def euler_integrand(spec, side=DEFAULT_SIDE):
    """u**(a-1) (1-u)**(c-a-1) prod (1 - x_k u)**(-b_k) on [0, 1].

    Real x_k > 1 put a zero of 1 - x_k u inside the interval; the interval is
    split there and the negative part of the factor takes the side limit.
    """
    a, c = spec.a, spec.c
    # x approached from below puts 1 - x u above the cut
    cut_side = side.mirrored()
    factors = [(b, x) for b, x in zip(spec.bs, spec.xs) if b != 0 and x != 0]
    splits = sorted({1.0 / x.real for _, x in factors if _on_cut(x)})

    def evaluator(nodes):
        one_minus_u = -nodes.distance(1.0)
        log_value = (a - 1) * np.log(nodes.distance(0.0)) + (c - a - 1) * np.log(one_minus_u)
        for b, x in factors:
            if _on_cut(x):
                base = -x.real * nodes.distance(1.0 / x.real)
            else:
                base = (1 - x) + x * one_minus_u
            log_value = log_value - b * branch_log(base, cut_side)
        return np.exp(log_value)

    return IntegrandSpec(evaluator, tuple(splits), ((a - 1).real, (c - a - 1).real))


def _euler_integral(spec, side, tol):
    logger.debug('euler integral for %r (%s side)', spec, side.value)
    result = integrate(euler_integrand(spec, side), 0.0, 1.0, tol)
    norm = gamma(spec.c) / (gamma(spec.a) * gamma(spec.c - spec.a))
    return norm * result.value


def _candidates(spec):
    yield spec
    if spec.n == 1:
        yield HyperSpec(spec.bs[0], (spec.a,), spec.c, spec.xs)


def _continue(spec, side, tol, allow_pfaff=True):
    for candidate in _candidates(spec):
        if _integral_admissible(candidate):
            return _euler_integral(candidate, side, tol)
    if allow_pfaff:
        transformed, prefactor = pfaff(spec, side)
        logger.debug('pfaff transform of %r gives %r', spec, transformed)
        # x/(x - 1) lands on the cut from the opposite side
        if transformed.n <= 2 and max(abs(x) for x in transformed.xs) <= SERIES_RADIUS:
            return prefactor * _series(transformed)
        return prefactor * _continue(transformed, side.mirrored(), tol, allow_pfaff=False)
    raise ParameterError('no admissible Euler integral for %r: need Re c > Re a > 0 '
                         'and split exponents above -1' % (spec,))


def _check_arguments(xs):
    if any(x == 1 for x in xs):
        raise ParameterError('argument 1 is not supported: the integral diverges there')


# ----------------------------------------------------------------------------#
# Public evaluators.
# ----------------------------------------------------------------------------#

def hyp2f1(a, b, c, x, side=DEFAULT_SIDE, tol=QUAD_TOL):
    a, b, c, x = complex(a), complex(b), complex(c), _snap(x)
    if _is_nonpositive_integer(c):
        raise PoleError('2F1 has a pole at c = %r' % (c,))
    _check_arguments((x,))
    if a == 0 or b == 0 or x == 0:
        return 1 + 0j
    if abs(x) <= SERIES_RADIUS:
        return hyp2f1_series(a, b, c, x)
    return _continue(HyperSpec(a, (b,), c, (x,)), side, tol)


def appell_f1(a, b1, b2, c, x1, x2, side=DEFAULT_SIDE, tol=QUAD_TOL):
    spec = HyperSpec(a, (b1, b2), c, (x1, x2))
    _check_arguments(spec.xs)
    if all(x == 0 for x in spec.xs):
        return 1 + 0j
    if max(abs(x) for x in spec.xs) <= SERIES_RADIUS:
        return _series(spec)
    return _continue(spec, side, tol)


def lauricella_fd(spec, side=DEFAULT_SIDE, tol=QUAD_TOL):
    if all(x == 0 for x in spec.xs):
        return 1 + 0j
    if spec.n == 1:
        return hyp2f1(spec.a, spec.bs[0], spec.c, spec.xs[0], side, tol)
    if spec.n == 2:
        return appell_f1(spec.a, spec.bs[0], spec.bs[1], spec.c, spec.xs[0], spec.xs[1], side, tol)
    _check_arguments(spec.xs)
    return _continue(spec, side, tol)


# ----------------------------------------------------------------------------#
# Transformations.
# ----------------------------------------------------------------------------#

def pfaff(spec, side=DEFAULT_SIDE):
    """F_D(a; b; c | x) = prefactor * F_D(c - a; b; c | x/(x - 1))."""
    prefactor = 1 + 0j
    xs = []
    for b, x in zip(spec.bs, spec.xs):
        if x == 1:
            raise PoleError('pfaff transform has a pole at x = 1')
        prefactor *= principal_pow(1 - x, -b, side.mirrored())
        xs.append(x / (x - 1))
    return HyperSpec(spec.c - spec.a, spec.bs, spec.c, tuple(xs)), prefactor


def pfaff_f1(a, b1, b2, c, x1, x2, side=DEFAULT_SIDE):
    return pfaff(HyperSpec(a, (b1, b2), c, (x1, x2)), side)


def _reduction_stays_principal(spec):
    """True when u = v/(1 - x_n + x_n v) moves the Euler path without crossing a cut.

    That holds for a real x_n below 1 (the path stays on [0, 1]) and inside
    the unit polydisk (the path bends but every factor keeps Re > 0).
    """
    last = spec.xs[-1]
    if last.imag == 0 and last.real < 1:
        return True
    return all(abs(x) < 1 for x in spec.xs)


def fd_order_reduce(spec, side=DEFAULT_SIDE, require_principal=True):
    """Eliminate x_n when c = b_1 + ... + b_n.

    F_D(a; b; c | x) = (1 - x_n)**(-a) F_D(a; b_1..b_{n-1}; c | (x_k - x_n)/(1 - x_n)).

    The principal values of both sides agree only where the reduction stays
    on the principal sheet; elsewhere the reduced function is the analytic
    continuation along the image path, which can differ by a phase.
    k12rep reduces to fd3-two that way with an extra factor -1.
    require_principal=False returns such a reduction anyway.
    """
    if spec.n < 2:
        raise ParameterError('order reduction needs at least two arguments')
    if not spec.order_reducible():
        raise ParameterError('order reduction needs c = sum(b), got c = %r, sum = %r'
                             % (spec.c, sum(spec.bs)))
    last = spec.xs[-1]
    if last == 1:
        raise ParameterError('order reduction needs x_n != 1')
    if require_principal and not _reduction_stays_principal(spec):
        raise ParameterError('order reduction of %r leaves the principal sheet: need every |x| < 1 '
                             'or a real x_n below 1' % (spec,))
    xs = tuple((x - last) / (1 - last) for x in spec.xs[:-1])
    prefactor = principal_pow(1 - last, -spec.a, side.mirrored())
    return HyperSpec(spec.a, spec.bs[:-1], spec.c, xs), prefactor


def eulerian_a(n, a, b):
    """integral_0^1 x**(a-1) (1 - x**n)**(-b) dx."""
    a, b = complex(a), complex(b)
    if a.real <= 0 or b.real >= 1:
        raise ParameterError('A_n needs Re a > 0 and Re b < 1, got a = %r, b = %r' % (a, b))
    return gamma(a / n) * gamma(1 - b) / (n * gamma(1 + a / n - b))


def eulerian_b(n, a, b):
    """integral_0^inf x**(a-1) (1 + x**n)**(-b) dx."""
    a, b = complex(a), complex(b)
    if a.real <= 0 or b.real <= 0 or n * b.real <= a.real:
        raise ParameterError('B_n needs a > 0, b > 0 and nb > a, got a = %r, b = %r' % (a, b))
    return gamma(a / n) * gamma((n * b - a) / n) / (n * gamma(b))
