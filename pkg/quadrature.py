# ----------------------------------------------------------------------------#
# Imports
# ----------------------------------------------------------------------------#

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from core import ParameterError, QuadratureError

logger = logging.getLogger(__name__)

TANH_SINH_RANGE = 6
MAX_LEVEL = 12
MIN_LEVEL = 3
MIN_TOLERANCE = 1e-13
NEGLIGIBLE_WEIGHT = 1e-100
DIVERGENCE_EXPONENT = -0.999


# ----------------------------------------------------------------------------#
# Types.
# ----------------------------------------------------------------------------#

@dataclass(frozen=True, eq=False)
class Abscissae:
    """A batch of nodes with their nearest panel endpoint.

    offset is x - anchor computed directly from the rule, so it keeps full
    relative precision where x itself has collapsed onto the anchor.
    """

    x: np.ndarray
    anchor: np.ndarray
    offset: np.ndarray

    def distance(self, point):
        """x - point, exact where point is the anchor."""
        return np.where(self.anchor == point, self.offset, self.x - point)


@dataclass(frozen=True)
class IntegrandSpec:
    evaluator: object
    interior_singularities: tuple = ()
    endpoint_exponents: tuple = (0.0, 0.0)

    def __post_init__(self):
        points = tuple(float(p) for p in self.interior_singularities)
        if any(b <= a for a, b in zip(points, points[1:])):
            raise ParameterError('interior singularities must be strictly increasing: %r' % (points,))
        object.__setattr__(self, 'interior_singularities', points)
        if len(self.endpoint_exponents) != 2:
            raise ParameterError('need one exponent per endpoint')
        if any(e <= -1 for e in self.endpoint_exponents):
            raise ParameterError('endpoint exponents %r are not integrable' % (self.endpoint_exponents,))


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    error_estimate: float
    evaluations: int
    levels: int


# ----------------------------------------------------------------------------#
# Tanh-sinh rule.
# ----------------------------------------------------------------------------#

@lru_cache(maxsize=None)
def tanh_sinh_rule(level):
    """Nodes first used at level, as (right, fraction, weight).

    right marks nodes anchored at the upper endpoint, fraction is the
    distance to the anchor relative to the panel length, and weight is the
    unscaled weight (multiply by half-length and step).
    """
    if level == 0:
        t = np.arange(-TANH_SINH_RANGE, TANH_SINH_RANGE + 1, dtype=float)
    else:
        h = 2.0 ** -level
        j = np.arange(1, TANH_SINH_RANGE * 2 ** level, 2, dtype=float)
        t = np.concatenate((-j[::-1], j)) * h
    s = 0.5 * math.pi * np.sinh(np.abs(t))
    e = np.exp(-2 * s)
    fraction = e / (1 + e)
    weight = 0.5 * math.pi * np.cosh(t) * 4 * e / (1 + e) ** 2
    right = t >= 0
    for array in (right, fraction, weight):
        array.setflags(write=False)
    return right, fraction, weight


def _panel_nodes(points, level):
    right, fraction, weight = tanh_sinh_rule(level)
    xs, anchors, offsets, weights = [], [], [], []
    for p, q in zip(points, points[1:]):
        length = q - p
        offset = np.where(right, -length * fraction, length * fraction)
        anchor = np.where(right, q, p)
        xs.append(anchor + offset)
        anchors.append(anchor)
        offsets.append(offset)
        weights.append(0.5 * length * weight)
    nodes = Abscissae(np.concatenate(xs), np.concatenate(anchors), np.concatenate(offsets))
    return nodes, np.concatenate(weights)


def _weighted_sum(evaluator, nodes, weights):
    with np.errstate(all='ignore'):
        values = np.asarray(evaluator(nodes), dtype=complex)
    if values.shape != nodes.x.shape:
        raise QuadratureError('integrand returned shape %r for %r nodes' % (values.shape, nodes.x.shape))
    finite = np.isfinite(values)
    bad = ~finite & (weights >= NEGLIGIBLE_WEIGHT)
    if np.any(bad):
        raise QuadratureError('integrand is not finite at x = %r' % (nodes.x[bad][0],))
    return complex(np.sum(np.where(finite, values, 0) * weights))


# ----------------------------------------------------------------------------#
# Integration.
# ----------------------------------------------------------------------------#

def integrate(spec, lo, hi, tol=1e-11):
    """Integrate spec over [lo, hi] with a level-halving tanh-sinh rule.

    The interval is split at the interior singularities, so every
    singularity sits on a panel endpoint where the rule clusters its nodes.
    """
    lo, hi = float(lo), float(hi)
    if not lo < hi:
        raise ParameterError('empty interval [%r, %r]' % (lo, hi))
    if tol < MIN_TOLERANCE:
        raise ParameterError('tolerance %r is below %r' % (tol, MIN_TOLERANCE))
    interior = spec.interior_singularities
    if any(not lo < s < hi for s in interior):
        raise ParameterError('singularities %r are not inside (%r, %r)' % (interior, lo, hi))
    points = (lo,) + interior + (hi,)

    raw = 0j
    previous = None
    evaluations = 0
    for level in range(MAX_LEVEL + 1):
        nodes, weights = _panel_nodes(points, level)
        raw += _weighted_sum(spec.evaluator, nodes, weights)
        evaluations += nodes.x.size
        estimate = raw * 2.0 ** -level
        if previous is not None:
            error = abs(estimate - previous)
            logger.debug('level %d: %r (change %.3g)', level, estimate, error)
            if level >= MIN_LEVEL and error <= tol * max(1.0, abs(estimate)):
                return QuadratureResult(estimate, error, evaluations, level + 1)
        previous = estimate
    raise QuadratureError('no convergence on [%r, %r] after %d levels (last change %.3g)'
                          % (lo, hi, MAX_LEVEL + 1, error))


def integrate_semi_infinite(spec, lo, tol=1e-9):
    """Integrate spec over [lo, inf) through t = lo + (1 - u)/u on (0, 1]."""
    lo = float(lo)
    interior = spec.interior_singularities
    if any(s <= lo for s in interior):
        raise ParameterError('singularities %r are not above %r' % (interior, lo))
    # u-space breakpoint -> t-space point; u = 1 is lo, u = 0 is infinity
    breakpoints = {1.0: lo}
    for s in interior:
        breakpoints[1.0 / (1.0 + (s - lo))] = s

    def evaluator(nodes):
        u = nodes.x
        anchor = np.full(u.shape, np.inf)
        offset = (1 - u) / u
        for u_anchor, t_anchor in breakpoints.items():
            mask = nodes.anchor == u_anchor
            anchor[mask] = t_anchor
            offset[mask] = -nodes.offset[mask] / (u[mask] * u_anchor)
        x = np.where(np.isfinite(anchor), anchor + offset, lo + (1 - u) / u)
        offset = np.where(np.isfinite(anchor), offset, x - lo)
        return spec.evaluator(Abscissae(x, anchor, offset)) / u / u

    _check_decay(evaluator)
    u_interior = tuple(sorted(u for u in breakpoints if u != 1.0))
    mapped = IntegrandSpec(evaluator, u_interior, (0.0, spec.endpoint_exponents[0]))
    return integrate(mapped, 0.0, 1.0, tol)


def _check_decay(evaluator):
    u = np.array([1e-6, 1e-10])
    nodes = Abscissae(u, np.zeros_like(u), u.copy())
    with np.errstate(all='ignore'):
        values = np.abs(np.asarray(evaluator(nodes), dtype=complex))
    if not np.all(np.isfinite(values)) or np.any(values == 0):
        return
    exponent = math.log(values[1] / values[0]) / math.log(u[1] / u[0])
    if exponent <= DIVERGENCE_EXPONENT:
        raise QuadratureError('integral diverges at infinity (tail decays like t**%.3g)'
                              % (-2 - exponent,))


# ----------------------------------------------------------------------------#
# Eulerian integrands.
# ----------------------------------------------------------------------------#

def a_family_integrand(n, a, b):
    """x**(a-1) (1 - x**n)**(-b) on [0, 1]."""

    def evaluator(nodes):
        x = nodes.distance(0.0)
        gap = -nodes.distance(1.0)
        one_minus_power = -np.expm1(n * np.log1p(-gap))
        return np.exp((a - 1) * np.log(x) - b * np.log(one_minus_power))

    return IntegrandSpec(evaluator, endpoint_exponents=(a - 1, -b))


def b_family_integrand(n, a, b):
    """x**(a-1) (1 + x**n)**(-b) on [0, inf)."""

    def evaluator(nodes):
        log_x = np.log(nodes.distance(0.0))
        return np.exp((a - 1) * log_x - b * np.logaddexp(0.0, n * log_x))

    return IntegrandSpec(evaluator, endpoint_exponents=(a - 1, 0.0))
