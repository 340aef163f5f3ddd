# ----------------------------------------------------------------------------#
# Imports
# ----------------------------------------------------------------------------#

import logging
import math
import time
from dataclasses import dataclass
from fnmatch import fnmatchcase
from fractions import Fraction
from functools import lru_cache

import numpy as np

from core import HyperError, ParameterError
from hyperfun import HyperSpec, eulerian_a, hyp2f1_series, lauricella_fd
from identities import (
    F_GOURSAT,
    GAMMA_THIRD,
    K_HERMITE,
    K_LEMNISCATIC,
    K_SILVER,
    SQRT2,
    SQRT3,
    EvalReport,
    Status,
    g,
    matches,
    measure,
)
from quadrature import IntegrandSpec, a_family_integrand, b_family_integrand, integrate, integrate_semi_infinite

logger = logging.getLogger(__name__)

FINITE_TOLERANCE = 1e-8
SEMI_INFINITE_TOLERANCE = 1e-7
ENDPOINT_TOLERANCE = 1e-10
REDUCTION_QUAD_TOL = 1e-9
REPRESENTATION_QUAD_TOL = 1e-11
NEWTON_STEPS = 50


# ----------------------------------------------------------------------------#
# Types.
# ----------------------------------------------------------------------------#

@dataclass(frozen=True)
class Integral:
    spec: IntegrandSpec
    lo: float
    hi: float = math.inf

    @property
    def semi_infinite(self):
        return math.isinf(self.hi)

    def evaluate(self, tol):
        if self.semi_infinite:
            return integrate_semi_infinite(self.spec, self.lo, tol).value
        return integrate(self.spec, self.lo, self.hi, tol).value


@dataclass(frozen=True)
class ReductionRecord:
    id: str
    anchor: str
    lhs: Integral
    rhs: Integral
    lhs_scale: float = 1.0
    rhs_scale: float = 1.0
    closed_form: object = None
    product: bool = False
    substitution: object = None
    endpoint_pairs: tuple = ()
    tolerance: float = None
    params: tuple = ()
    family: str = None

    def __post_init__(self):
        if self.tolerance is None:
            loose = self.lhs.semi_infinite or self.rhs.semi_infinite
            object.__setattr__(self, 'tolerance', SEMI_INFINITE_TOLERANCE if loose else FINITE_TOLERANCE)

    @property
    def base_id(self):
        return self.family or self.id


def integrand(evaluator, *singularities):
    return IntegrandSpec(evaluator, tuple(singularities))


# ----------------------------------------------------------------------------#
# Cubics.
# ----------------------------------------------------------------------------#

def real_cubic_roots(p, q, r, s):
    """Real roots of p z^3 + q z^2 + r z + s, ascending, Newton-polished."""
    if p == 0:
        raise ParameterError('leading coefficient of a cubic must not vanish')
    b, c, d = q / p, r / p, s / p
    shift = b / 3
    depressed_p = c - b * b / 3
    depressed_q = 2 * b ** 3 / 27 - b * c / 3 + d
    disc = (depressed_q / 2) ** 2 + (depressed_p / 3) ** 3
    if disc < 0:
        radius = 2 * math.sqrt(-depressed_p / 3)
        cosine = 3 * depressed_q / (depressed_p * radius)
        angle = math.acos(max(-1.0, min(1.0, cosine))) / 3
        roots = [radius * math.cos(angle - 2 * math.pi * k / 3) - shift for k in range(3)]
    else:
        root = math.sqrt(disc)
        u = float(np.cbrt(-depressed_q / 2 + root))
        v = float(np.cbrt(-depressed_q / 2 - root))
        roots = [u + v - shift]
        if disc == 0 and u != 0:
            roots.append(-u - shift)
    return sorted(_polish(z, p, q, r, s) for z in roots)


def _polish(z, p, q, r, s):
    for _ in range(NEWTON_STEPS):
        slope = (3 * p * z + 2 * q) * z + r
        if slope == 0:
            break
        step = (((p * z + q) * z + r) * z + s) / slope
        z -= step
        if abs(step) <= 1e-14 * max(1.0, abs(z)):
            break
    return z


# ----------------------------------------------------------------------------#
# Catalogue.
# ----------------------------------------------------------------------------#

def _id(base, params):
    return '%s(%s)' % (base, ','.join('%s=%s' % (name, Fraction(value)) for name, value in params))


def _jacobi(a=4.0, b=2.0):
    c = -(math.sqrt(a) - math.sqrt(b)) ** 2 / ((1 - a) * (1 - b))
    scale = 1 / math.sqrt((1 - a) * (1 - b))
    ab = a * b

    def lhs(n):
        z = n.distance(0.0)
        return (math.sqrt(ab) + z) / np.sqrt(z * -n.distance(1.0) * (ab - z) * (a - z) * (b - z))

    def rhs(n):
        x = n.distance(0.0)
        return 1 / np.sqrt(x * -n.distance(1.0) * (1 - c * x))

    return ReductionRecord(
        id=_id('jacobi-g2', (('a', a), ('b', b))),
        anchor='int_0^1 (sqrt(ab) + z) dz / sqrt(z(1-z)(ab-z)(a-z)(b-z)) = '
               '((1-a)(1-b))^(-1/2) int_0^1 dx / sqrt(x(1-x)(1-cx))',
        lhs=Integral(integrand(lhs), 0.0, 1.0),
        rhs=Integral(integrand(rhs), 0.0, 1.0),
        rhs_scale=scale,
        closed_form=lambda: scale * math.pi * hyp2f1_series(0.5, 0.5, 1, c).real,
        substitution=lambda z: (1 - a) * (1 - b) * z / ((z - a) * (z - b)),
        endpoint_pairs=((0.0, 0.0), (1.0, 1.0)),
        params=(('a', a), ('b', b)), family='jacobi-g2')


def _hermite_cubic(a, b):
    """Hermite's cubic map on [z1, inf) for b > a^(3/2)."""
    if b <= a ** 1.5:
        raise ParameterError('need b > a^(3/2) for a single real branch point, got a=%r, b=%r' % (a, b))
    z1 = real_cubic_roots(4.0, 0.0, -3 * a, -b)[-1]
    y1 = -2 * z1

    def lhs(n):
        z = n.x
        return z / np.sqrt((z * z - a) * 4 * n.distance(z1) * (z * z + z1 * z + z1 * z1 - 0.75 * a))

    def rhs(n):
        y = n.x
        return 1 / np.sqrt(n.distance(y1) * (y * y - 2 * z1 * y + 4 * z1 * z1 - 3 * a))

    return ReductionRecord(
        id=_id('hermite-ugu', (('a', a), ('b', b))),
        anchor='y = 2(z^3 - b)/(3(z^2 - a)) maps int_z1^inf z dz / sqrt((z^2-a)(4z^3-3az-b)) '
               'onto 6^(-1/2) int_(-2 z1)^inf dy / sqrt(y^3 - 3ay + 2b)',
        lhs=Integral(integrand(lhs), z1),
        rhs=Integral(integrand(rhs), y1),
        rhs_scale=1 / math.sqrt(6),
        substitution=lambda z: 2 * (z ** 3 - b) / (3 * (z * z - a)),
        endpoint_pairs=((z1, y1),),
        params=(('a', a), ('b', b)), family='hermite-ugu')


def _goursat_closed():
    return math.sqrt(math.pi) * GAMMA_THIRD / (3 * g(5 / 6))


def _sextic(n):
    t3 = n.x ** 3
    return 1 / np.sqrt((t3 + 2) * (t3 + 8))


def _goursat_dig():
    def lhs(n):
        x = n.x
        return 1 / np.sqrt(x * n.distance(1.0) * (x * x + x + 1))

    return ReductionRecord(
        id='goursat-dig',
        anchor='int_1^inf dx / sqrt(x(x^3 - 1)) = 6 int_1^inf dt / sqrt((t^3 + 2)(t^3 + 8)), x = (t^3 + 2)/(3t)',
        lhs=Integral(integrand(lhs), 1.0),
        rhs=Integral(integrand(_sextic), 1.0),
        rhs_scale=6.0,
        closed_form=_goursat_closed,
        substitution=lambda t: (t ** 3 + 2) / (3 * t),
        endpoint_pairs=((1.0, 1.0),))


def _goursat_gb0():
    def lhs(n):
        x = n.x
        return 1 / np.sqrt(-n.distance(1.0) * (1 + x + x * x))

    return ReductionRecord(
        id='goursat-gb0',
        anchor='int_0^1 dx / sqrt(1 - x^3) = 6 int_0^1 dt / sqrt((t^3 + 2)(t^3 + 8)), x = 3t/(t^3 + 2)',
        lhs=Integral(integrand(lhs), 0.0, 1.0),
        rhs=Integral(integrand(_sextic), 0.0, 1.0),
        rhs_scale=6.0,
        closed_form=_goursat_closed,
        substitution=lambda t: 3 * t / (t ** 3 + 2),
        endpoint_pairs=((0.0, 0.0), (1.0, 1.0)))


def _goursat_011b():
    def lhs(n):
        x = n.x
        return 1 / np.sqrt(-n.distance(1.0) * (x * x + 3 * x + 4))

    def rhs(n):
        t = n.x
        t3 = t ** 3
        return t / np.sqrt((t3 + 1) * (4 * t3 + t + 1))

    return ReductionRecord(
        id='goursat-011b',
        anchor='int_0^1 dx / sqrt((1-x)(x^2 + 3x + 4)) = 3 int_0^1 t dt / sqrt((t^3 + 1)(4t^3 + t + 1)), '
               'x = t^2 (3 - t)/(1 + t^3)',
        lhs=Integral(integrand(lhs), 0.0, 1.0),
        rhs=Integral(integrand(rhs), 0.0, 1.0),
        rhs_scale=3.0,
        closed_form=lambda: 2 ** -0.75 * F_GOURSAT,
        substitution=lambda t: t * t * (3 - t) / (1 + t ** 3),
        endpoint_pairs=((0.0, 0.0), (1.0, 1.0)))


def _hermite_b0(a=1.0):
    a2 = a * a

    def lhs(n):
        z = n.distance(0.0)
        return 1 / np.sqrt(z * (a2 - z * z) * (3 * a2 - 4 * z * z))

    def rhs(n):
        x = n.x
        return 1 / np.sqrt(-n.distance(0.0) * n.distance(-a) * (a - x))

    return ReductionRecord(
        id=_id('hermite-b0', (('a', a),)),
        anchor='3a int_0^(a/2) dz / sqrt(z(a^2 - z^2)(3a^2 - 4z^2)) = int_(-a)^0 dx / sqrt(|x|(a^2 - x^2)), '
               'x = (4z^3 - 3a^2 z)/a^2',
        lhs=Integral(integrand(lhs), 0.0, a / 2),
        rhs=Integral(integrand(rhs), -a, 0.0),
        lhs_scale=3 * a,
        closed_form=lambda: SQRT2 * K_LEMNISCATIC / math.sqrt(a),
        substitution=lambda z: (4 * z ** 3 - 3 * a2 * z) / a2,
        endpoint_pairs=((0.0, 0.0), (a / 2, -a)),
        params=(('a', a),), family='hermite-b0')


def _hermite_full():
    r = math.sqrt(7 / 3)
    lo, hi = -2 * r, -18 / 7

    def lhs(n):
        z = n.x
        return 1 / np.sqrt((28 / 3 - z * z) * n.distance(1.0) * (2 - z) * (z + 3))

    def rhs(n):
        x = n.x
        return 1 / np.sqrt(-n.distance(hi) * (2 * r - x) * n.distance(lo))

    return ReductionRecord(
        id='hermite-full',
        anchor='int_1^r dz / sqrt((28/3 - z^2)(z-1)(2-z)(z+3)) = 21^(-1/2) int_(-2r)^(-18/7) dx / '
               'sqrt((-18/7 - x)(4r^2 - x^2)), r = sqrt(7/3), x = 3(4z^3 - 28z)/28',
        lhs=Integral(integrand(lhs), 1.0, r),
        rhs=Integral(integrand(rhs), lo, hi),
        rhs_scale=1 / math.sqrt(21),
        closed_form=lambda: 2 * K_HERMITE / (math.sqrt(21) * math.sqrt(4 * r)),
        substitution=lambda z: (4 * z ** 3 - 28 * z) * 3 / 28,
        endpoint_pairs=((1.0, hi), (r, lo)))


def _lemniscatic_cubic_integral():
    lo = -SQRT3

    def evaluator(n):
        y = n.x
        return 1 / np.sqrt(-n.distance(0.0) * n.distance(lo) * (SQRT3 - y))

    return Integral(integrand(evaluator), lo, 0.0)


def _genus_three_closed():
    return (4 / 3) ** 0.25 * K_LEMNISCATIC


def _hermite_g3():
    hi = 2 / math.sqrt(5)
    x0 = (math.sqrt(11) - SQRT3) / 2
    alpha = (math.sqrt(8) - SQRT3) / 5
    beta = (math.sqrt(8) + SQRT3) / 5

    def rhs(n):
        x = n.x
        x2 = x * x
        return (5 * x2 - 1) / np.sqrt(x * -n.distance(hi) * (hi + x) * (x2 - alpha ** 2) * (beta ** 2 - x2))

    def substitution(x):
        x2 = x * x
        phi = 125 * x2 ** 3 - 210 * x2 ** 2 + 93 * x2 - 4
        psi = phi - 24 * x2 * (x2 - 1) * (5 * x2 - 4)
        return psi / (12 * x * (x2 - 1) ** 2)

    return ReductionRecord(
        id='hermite-g3',
        anchor='int_(-sqrt3)^0 dy / sqrt(y^3 - 3y) = (2/5) sqrt(3/5) int_x0^(2/sqrt5) (5x^2 - 1) dx / '
               'sqrt(x(4/5 - x^2)(x^2 - alpha^2)(beta^2 - x^2)), y = psi(x)/(12x(x^2 - 1)^2)',
        lhs=_lemniscatic_cubic_integral(),
        rhs=Integral(integrand(rhs), x0, hi),
        rhs_scale=0.4 * math.sqrt(0.6),
        closed_form=_genus_three_closed,
        substitution=substitution,
        endpoint_pairs=((hi, 0.0), (x0, -SQRT3)))


def _maier():
    x1 = 2 * math.sqrt(21)
    x2 = 2 * math.sqrt(66) - 5 * SQRT3
    x3_squared = 3 * (113 + 20 * math.sqrt(22))
    lo, hi = -x1, -x2

    def rhs(n):
        x = n.x
        xx = x * x
        radicand = ((624 - xx) * (x1 - x) * n.distance(lo) * -n.distance(hi) * (x2 - x) * (x3_squared - xx))
        return 10 * np.sqrt(-x) * (273 - xx) / np.sqrt(radicand)

    def substitution(x):
        xx = x * x
        return ((xx - 84) * (xx * xx + 1617 * xx - 1333584) ** 2
                / (100 * (x ** 3 - 1029 * x) ** 2 * (x ** 3 - 624 * x)))

    return ReductionRecord(
        id='maier-g4',
        anchor='int_(-sqrt3)^0 dy / sqrt(y^3 - 3y) = int_(-2 sqrt21)^(5 sqrt3 - 2 sqrt66) 10 sqrt|x| (273 - x^2) dx / '
               'sqrt|(x^2 - 624)(x^2 - 84)(x^4 - 678x^2 + 35721)|, tenth degree map',
        lhs=_lemniscatic_cubic_integral(),
        rhs=Integral(integrand(rhs), lo, hi),
        closed_form=_genus_three_closed,
        substitution=substitution,
        endpoint_pairs=((lo, 0.0), (hi, -SQRT3)))


def _legendre_z1(n, a):
    closed = {
        (8, 1): lambda: K_SILVER / SQRT2,
        (8, 3): lambda: (1 - 1 / SQRT2) * K_SILVER,
    }.get((n, a), lambda: eulerian_a(n, a, 0.5).real)
    return ReductionRecord(
        id=_id('legendre-z1', (('n', n), ('a', a))),
        anchor='int_0^1 x^(a-1) dx / sqrt(1 - x^n) = cos(a pi/n) int_0^inf z^(a-1) dz / sqrt(1 + z^n)',
        lhs=Integral(a_family_integrand(n, a, 0.5), 0.0, 1.0),
        rhs=Integral(b_family_integrand(n, a, 0.5), 0.0),
        rhs_scale=math.cos(a * math.pi / n),
        closed_form=closed,
        params=(('n', n), ('a', a)), family='legendre-z1')


def _legendre_z2(n, a):
    return ReductionRecord(
        id=_id('legendre-z2', (('n', n), ('a', a))),
        anchor='int_0^inf z^(n-a-1) dz / sqrt(1 + z^n) * int_0^1 x^(a-1) dx / sqrt(1 - x^n) '
               '= 2 pi / (n (2a - n) sin(pi a/n))',
        lhs=Integral(b_family_integrand(n, n - a, 0.5), 0.0),
        rhs=Integral(a_family_integrand(n, a, 0.5), 0.0, 1.0),
        closed_form=lambda: 2 * math.pi / (n * (2 * a - n) * math.sin(math.pi * a / n)),
        product=True,
        params=(('n', n), ('a', a)), family='legendre-z2')


@lru_cache(maxsize=None)
def _catalogue():
    records = [_jacobi()]
    records += [_hermite_cubic(a, b) for a, b in ((1.0, 2.0), (3.0, 6.0))]
    records += [_goursat_dig(), _goursat_gb0(), _goursat_011b(), _hermite_b0(), _hermite_full(),
                _hermite_g3(), _maier()]
    records += [_legendre_z1(n, a) for n, a in ((4, 1), (6, 1), (6, 2), (8, 1), (8, 3))]
    records += [_legendre_z2(n, a) for n, a in ((4, 3), (6, 4), (6, 5), (8, 5), (8, 7))]
    return tuple(records)


def reduction_registry():
    return list(_catalogue())


def lookup_reduction(id):
    for record in _catalogue():
        if record.id == id:
            return record
    raise ParameterError('unknown reduction id %r' % (id,))


# ----------------------------------------------------------------------------#
# Checks.
# ----------------------------------------------------------------------------#

def _endpoint_note(record):
    if record.substitution is None:
        return None
    for source, target in record.endpoint_pairs:
        image = record.substitution(source)
        if abs(image - target) > ENDPOINT_TOLERANCE * max(1.0, abs(target)):
            return 'substitution maps %r to %r, expected %r' % (source, image, target)
    return None


def check_record(record, tol=None, quad_tol=REDUCTION_QUAD_TOL):
    tolerance = tol or record.tolerance
    start = time.perf_counter()
    try:
        lhs_integral = record.lhs.evaluate(quad_tol)
        rhs_integral = record.rhs.evaluate(quad_tol)
        closed = record.closed_form() if record.closed_form else None
    except HyperError as exc:
        logger.info('%s: %s', record.id, exc)
        nan = complex(math.nan, math.nan)
        return EvalReport(record.id, record.anchor, nan, nan, math.inf, math.inf, Status.FAIL,
                          time.perf_counter() - start, '%s: %s' % (type(exc).__name__, exc))

    lhs = record.lhs_scale * lhs_integral
    rhs = record.rhs_scale * rhs_integral
    if record.product:
        lhs, rhs = lhs * rhs, complex(closed)
        abs_err, rel_err = measure(lhs, rhs)
    else:
        abs_err, rel_err = measure(lhs, rhs)
        if closed is not None:
            for value in (lhs, rhs):
                closed_abs, closed_rel = measure(value, complex(closed))
                abs_err, rel_err = max(abs_err, closed_abs), max(rel_err, closed_rel)

    note = _endpoint_note(record)
    if lhs_integral.real <= 0 or rhs_integral.real <= 0:
        note = 'non-positive integral'
    status = Status.PASS if note is None and rel_err <= tolerance else Status.FAIL
    return EvalReport(record.id, record.anchor, lhs, rhs, abs_err, rel_err, status,
                      time.perf_counter() - start, note)


def check_reduction(id, tol=None, quad_tol=REDUCTION_QUAD_TOL):
    return check_record(lookup_reduction(id), tol, quad_tol)


def check_all(filter=None, tol=None, quad_tol=REDUCTION_QUAD_TOL):
    records = [record for record in _catalogue() if matches(record, filter)]
    return sorted((check_record(record, tol, quad_tol) for record in records), key=lambda r: r.id)


# ----------------------------------------------------------------------------#
# Representation formulas.
# ----------------------------------------------------------------------------#

def quintic_representation(a, b, c, y, d, e):
    """(integral over [c, y], F_D closed form) for a < b < c < y < d < e."""
    roots = (a, b, c, d, e)

    def evaluator(n):
        z = n.x
        product = n.distance(c)
        for root in roots:
            if root != c:
                product = product * np.abs(z - root)
        return 1 / np.sqrt(product)

    h = c - y
    spec = HyperSpec(0.5, (0.5,) * 4, 1.5, (h / (c - a), h / (c - b), -h / (d - c), -h / (e - c)))
    prefactor = 2 * math.sqrt((y - c) / ((c - a) * (c - b) * (d - c) * (e - c)))
    return Integral(integrand(evaluator), c, y), lambda tol: prefactor * lauricella_fd(spec, tol=tol)


def sextic_representation(m, a, y, b, c):
    """(integral over [y, b] of x^m / sqrt(x(b^2-x^2)(x^2-a^2)(c^2-x^2)), F_D form), 0 < a < y < b < c."""

    def evaluator(n):
        x = n.x
        return x ** m / np.sqrt(x * -n.distance(b) * (b + x) * (x * x - a * a) * (c * c - x * x))

    gap = b * b - y * y
    spec = HyperSpec(1.0, (0.75 - m / 2, 0.5, 0.5), 1.5,
                     (-gap / (y * y), gap / (a * a - y * y), gap / (c * c - y * y)))
    prefactor = y ** (m - 1.5) * math.sqrt(gap / ((y * y - a * a) * (c * c - y * y)))
    return Integral(integrand(evaluator), y, b), lambda tol: prefactor * lauricella_fd(spec, tol=tol)


def quartic_representation(m, a, b, c, d):
    """(integral over [a, b] of x^m / sqrt((x-a)(b-x)(c-x)(d-x)), F_D form), 0 < a < b < c < d."""

    def evaluator(n):
        x = n.x
        return x ** m / np.sqrt(n.distance(a) * -n.distance(b) * (c - x) * (d - x))

    spec = HyperSpec(0.5, (-m, 0.5, 0.5), 1.0, ((a - b) / a, (b - a) / (c - a), (b - a) / (d - a)))
    prefactor = math.pi * a ** m / math.sqrt((c - a) * (d - a))
    return Integral(integrand(evaluator), a, b), lambda tol: prefactor * lauricella_fd(spec, tol=tol)


def _representation_cases():
    r = math.sqrt(7 / 3)
    heovr = dict(a=(math.sqrt(8) - SQRT3) / 5, y=(math.sqrt(11) - SQRT3) / 2,
                 b=2 / math.sqrt(5), c=(math.sqrt(8) + SQRT3) / 5)
    maier = dict(a=3 * (113 - 20 * math.sqrt(22)), b=84.0, c=3 * (113 + 20 * math.sqrt(22)), d=624.0)
    leading = 'F_D leading parameter is 1; a printed 1/2 disagrees with the integral'
    return [
        ('irto1876(hermite)', 'quintic over [c, y] as 2 sqrt(...) F_D(1/2; 1/2 x4; 3/2)',
         quintic_representation(-2 * r, -3.0, 1.0, r, 2.0, 2 * r), None),
        ('irto1876(generic)', 'quintic over [c, y] as 2 sqrt(...) F_D(1/2; 1/2 x4; 3/2)',
         quintic_representation(-3.0, -1.0, 0.0, 0.5, 1.0, 2.0), None),
        ('irtoapp(m=0)', 'x^m over sqrt(x(b^2-x^2)(x^2-a^2)(c^2-x^2)) as F_D(1; 3/4-m/2, 1/2, 1/2; 3/2)',
         sextic_representation(0, **heovr), leading),
        ('irtoapp(m=2)', 'x^m over sqrt(x(b^2-x^2)(x^2-a^2)(c^2-x^2)) as F_D(1; 3/4-m/2, 1/2, 1/2; 3/2)',
         sextic_representation(2, **heovr), leading),
        ('irtoapp(generic)', 'x^m over sqrt(x(b^2-x^2)(x^2-a^2)(c^2-x^2)) as F_D(1; 3/4-m/2, 1/2, 1/2; 3/2)',
         sextic_representation(1, 0.3, 0.5, 0.8, 1.2), leading),
        ('irtg4(m=-1/4)', 'x^m over sqrt((x-a)(b-x)(c-x)(d-x)) as pi a^m F_D(1/2; -m, 1/2, 1/2; 1)',
         quartic_representation(-0.25, **maier), None),
        ('irtg4(m=3/4)', 'x^m over sqrt((x-a)(b-x)(c-x)(d-x)) as pi a^m F_D(1/2; -m, 1/2, 1/2; 1)',
         quartic_representation(0.75, **maier), None),
        ('irtg4(generic)', 'x^m over sqrt((x-a)(b-x)(c-x)(d-x)) as pi a^m F_D(1/2; -m, 1/2, 1/2; 1)',
         quartic_representation(0, 1.0, 2.0, 3.0, 5.0), None),
    ]


def representation_formulas_check(quad_tol=REPRESENTATION_QUAD_TOL, filter=None):
    reports = []
    for id, anchor, (integral, formula), note in _representation_cases():
        if filter and not (fnmatchcase(id, filter) or fnmatchcase(id.split('(')[0], filter)):
            continue
        start = time.perf_counter()
        try:
            lhs = integral.evaluate(quad_tol)
            rhs = complex(formula(quad_tol))
        except HyperError as exc:
            nan = complex(math.nan, math.nan)
            reports.append(EvalReport(id, anchor, nan, nan, math.inf, math.inf, Status.FAIL,
                                      time.perf_counter() - start, str(exc)))
            continue
        abs_err, rel_err = measure(lhs, rhs)
        status = Status.PASS if rel_err <= FINITE_TOLERANCE else Status.FAIL
        reports.append(EvalReport(id, anchor, lhs, rhs, abs_err, rel_err, status,
                                  time.perf_counter() - start, note))
    return reports
