# ----------------------------------------------------------------------------#
# Imports
# ----------------------------------------------------------------------------#

import cmath
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fnmatch import fnmatchcase
from fractions import Fraction
from functools import lru_cache

from core import (
    DEFAULT_SIDE,
    HyperError,
    ParameterError,
    gamma,
    principal_pow,
    roots_of_unity,
    unit_partition_roots,
    unit_shift_roots,
)
from elliptic import (
    COMPLEMENT_K3,
    GOURSAT_MODULUS,
    HERMITE_MODULUS,
    K3_MODULUS,
    LEMNISCATIC,
    SILVER_MODULUS,
    complete_e,
    complete_k,
    incomplete_f,
)
from hyperfun import QUAD_TOL, HyperSpec, appell_f1, hyp2f1, lauricella_fd

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-8
LOOSE_TOLERANCE = 1e-7
SEARCH_TOLERANCE = 1e-6
SMALL_VALUE = 1e-6
SEARCH_FACTORS = tuple(Fraction(f) for f in (
    '1/2', '-1/2', '1/3', '-1/3', '2', '-2', '3', '-3', '1/4', '-1/4', '4', '-4', '-1'))


# ----------------------------------------------------------------------------#
# Types.
# ----------------------------------------------------------------------------#

@dataclass(frozen=True)
class Env:
    """Evaluation settings handed to every plan."""

    quad_tol: float = QUAD_TOL
    side: object = DEFAULT_SIDE


@dataclass(frozen=True)
class Erratum:
    note: str
    as_printed_lhs: object = None
    as_printed_rhs: object = None


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    anchor: str
    lhs: object
    rhs: object
    tolerance: float = DEFAULT_TOLERANCE
    erratum: Erratum = None
    params: tuple = ()
    family: str = None
    real_valued: bool = False

    @property
    def base_id(self):
        return self.family or self.id


class Status(Enum):
    PASS = 'pass'
    FAIL = 'fail'
    PASS_WITH_ERRATUM = 'pass_with_erratum'


# JSON has no NaN or infinity; non-finite numbers travel as null
def _finite(value):
    return value if math.isfinite(value) else None


def _number(value):
    return math.nan if value is None else value


@dataclass(frozen=True)
class EvalReport:
    id: str
    anchor: str
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    status: Status
    elapsed: float
    note: str = None

    @property
    def passed(self):
        return self.status is not Status.FAIL

    def to_dict(self):
        row = {
            'id': self.id,
            'anchor': self.anchor,
            'lhs': {'re': _finite(self.lhs.real), 'im': _finite(self.lhs.imag)},
            'rhs': {'re': _finite(self.rhs.real), 'im': _finite(self.rhs.imag)},
            'abs_err': _finite(self.abs_err),
            'rel_err': _finite(self.rel_err),
            'status': self.status.value,
            'elapsed_ms': self.elapsed * 1000.0,
        }
        if self.note:
            row['note'] = self.note
        return row

    @classmethod
    def from_dict(cls, row):
        return cls(
            id=row['id'],
            anchor=row['anchor'],
            lhs=complex(_number(row['lhs']['re']), _number(row['lhs']['im'])),
            rhs=complex(_number(row['rhs']['re']), _number(row['rhs']['im'])),
            abs_err=_number(row['abs_err']),
            rel_err=_number(row['rel_err']),
            status=Status(row['status']),
            elapsed=row['elapsed_ms'] / 1000.0,
            note=row.get('note'),
        )


def measure(lhs, rhs):
    """(absolute, relative) error; relative falls back to absolute near zero."""
    abs_err = abs(lhs - rhs)
    if abs(rhs) < SMALL_VALUE:
        return abs_err, abs_err
    return abs_err, abs_err / abs(rhs)


def format_complex(value):
    return '%.10g%+.10gi' % (value.real, value.imag)


# ----------------------------------------------------------------------------#
# Plan builders.
# ----------------------------------------------------------------------------#

def const(value):
    value = complex(value)
    return lambda env: value


def scaled(factor, plan):
    factor = complex(factor)
    return lambda env: factor * plan(env)


def fd(a, b, c, xs):
    """Plan for F_D(a; b; c | xs); a scalar b is repeated."""
    xs = tuple(xs)
    bs = tuple(b) if isinstance(b, (tuple, list)) else (b,) * len(xs)
    spec = HyperSpec(a, bs, c, xs)
    return lambda env: lauricella_fd(spec, env.side, env.quad_tol)


def gauss(a, b, c, x):
    return lambda env: hyp2f1(a, b, c, x, env.side, env.quad_tol)


def appell(a, b1, b2, c, x1, x2):
    return lambda env: appell_f1(a, b1, b2, c, x1, x2, env.side, env.quad_tol)


def g(z):
    return gamma(z).real


SQRT2 = math.sqrt(2)
SQRT3 = math.sqrt(3)
SQRT7 = math.sqrt(7)
SQRT21 = math.sqrt(21)
SQRT22 = math.sqrt(22)
SQRT33 = math.sqrt(33)

K_LEMNISCATIC = complete_k(LEMNISCATIC)
E_LEMNISCATIC = complete_e(LEMNISCATIC)
K_15 = complete_k(K3_MODULUS)
K_SILVER = complete_k(SILVER_MODULUS)
K_HERMITE = complete_k(HERMITE_MODULUS)
F_75 = incomplete_f(math.acos(2 - SQRT3), COMPLEMENT_K3)
F_GOURSAT = incomplete_f(math.acos((9 - 4 * SQRT2) / 7), GOURSAT_MODULUS)
GAMMA_THIRD = g(1 / 3)
SILVER_B8 = math.sqrt(2 - SQRT2) * K_SILVER


def phase(turns):
    """exp(i pi turns)."""
    return cmath.exp(1j * math.pi * turns)


# ----------------------------------------------------------------------------#
# Families.
# ----------------------------------------------------------------------------#

def _case_id(base, params):
    return '%s(%s)' % (base, ','.join('%s=%s' % (name, value) for name, value in params))


def _expand(base, anchor, grid, build, **fields):
    """One record per grid point; build gets the float parameters."""
    records = []
    for point in grid:
        params = tuple((name, Fraction(value)) for name, value in point)
        values = {name: float(value) for name, value in params}
        built = build(**values)
        lhs, rhs = built[:2]
        extra = built[2] if len(built) > 2 else {}
        records.append(IdentityRecord(
            id=_case_id(base, params), anchor=anchor, lhs=lhs, rhs=rhs,
            params=params, family=base, **dict(fields, **extra)))
    return records


def _pairs(*pairs, names=('a', 'b')):
    return [tuple(zip(names, pair)) for pair in pairs]


def _lunga(a, b):
    p = 2 * b - a
    rhs = principal_pow(-1j, p) * math.sqrt(math.pi) * g(b + 0.5) / (g((a + 1) / 2) * g((p + 1) / 2))
    return gauss(p, b, 2 * b, 2.0), const(rhs)


def _kummer(a, b):
    return gauss(a, b, 1 + a - b, -1.0), const(g(1 + a - b) * g(1 + a / 2) / (g(1 + a) * g(1 + a / 2 - b)))


def _root_kummer_value(n, a, b):
    return g(1 + a - b) * g(1 + a / n) / (g(1 + a) * g(1 + a / n - b))


def _effe1(a, b):
    w, w_bar = roots_of_unity(3)
    return appell(a, b, b, 1 + a - b, w, w_bar), const(_root_kummer_value(3, a, b))


def _effe1b(a, b):
    x1, x2 = (w / (w - 1) for w in roots_of_unity(3))
    return appell(1 - b, b, b, 1 + a - b, x1, x2), const(3 ** b * _root_kummer_value(3, a, b))


def _fdn(n, a, b):
    n = int(n)
    return fd(a, b, 1 + a - b, roots_of_unity(n)), const(_root_kummer_value(n, a, b))


def _fdnb(n, a, b):
    n = int(n)
    xs = [w / (w - 1) for w in roots_of_unity(n)]
    return fd(1 - b, b, 1 + a - b, xs), const(n ** b * _root_kummer_value(n, a, b))


def partition_value(n, a, b):
    """Closed form of F_D(nb - a; b; nb | unit partition roots of n)."""
    return g(a / n) * g(n * b) * g((n * b - a) / n) / (n * g(a) * g(b) * g(n * b - a))


def _even(m, a, b):
    n = 2 * int(m)
    return fd(n * b - a, b, n * b, unit_partition_roots(n)), const(partition_value(n, a, b))


def _odd(m, a, b):
    n = 2 * int(m) - 1
    return fd(n * b - a, b, n * b, unit_partition_roots(n)), const(partition_value(n, a, b))


def _even_reduced(m, a, b):
    n = 2 * int(m)
    top = n * b - a
    lhs = fd(top, b, n * b, unit_shift_roots(n))
    value = partition_value(n, a, b)
    printed_factor = principal_pow(-phase(1 / n), top)
    erratum = Erratum(
        'the printed prefactor (-exp(i pi/2m))^(2mb-a) is the order reduction of even continued off '
        'the principal sheet; the principal value carries exp(-i pi (2mb-a)/2m)',
        as_printed_lhs=lambda env: printed_factor * lhs(env),
        as_printed_rhs=const(value))
    return lhs, const(phase(-top / n) * value), {'erratum': erratum}


def _families():
    records = []
    records += _expand(
        'lunga', '2F1(2b-a, b; 2b | 2) = (-i)^(2b-a) sqrt(pi) G(b+1/2) / (G((a+1)/2) G((2b-a+1)/2))',
        _pairs(('1/2', '3/4'), ('3/2', '1')), _lunga)
    records += _expand(
        'kummer', '2F1(a, b; 1+a-b | -1) = G(1+a-b) G(1+a/2) / (G(1+a) G(1+a/2-b))',
        _pairs(('1', '1/2'), ('1/2', '1/2'), ('2', '1/2'), ('1', '1/4'), ('3/2', '3/4'), ('3', '1/4')),
        _kummer, real_valued=True)
    effe_grid = _pairs(('1/2', '1/4'), ('1', '1/2'), ('3/2', '3/4'))
    records += _expand(
        'effe1', 'F1(a; b, b; 1+a-b | w, w^2), w^3 = 1, = G(1+a-b) G(1+a/3) / (G(1+a) G(1+a/3-b))',
        effe_grid, _effe1, real_valued=True)
    records += _expand(
        'effe1b', 'F1(1-b; b, b; 1+a-b | w/(w-1), w^2/(w^2-1)) = 3^b G(1+a-b) G(1+a/3) / (G(1+a) G(1+a/3-b))',
        effe_grid, _effe1b, real_valued=True)
    fd3_grid = [(('n', 4),) + point for point in _pairs(('1', '1/2'), ('1/2', '1/4'))]
    records += _expand(
        'fd3', 'F_D(a; b, b, b; 1+a-b | i, -1, -i) = G(1+a-b) G(1+a/4) / (G(1+a) G(1+a/4-b))',
        fd3_grid, _fdn, real_valued=True)
    records += _expand(
        'fd3b', 'F_D(1-b; b, b, b; 1+a-b | w/(w-1), w^4 = 1) = 4^b G(1+a-b) G(1+a/4) / (G(1+a) G(1+a/4-b))',
        fd3_grid, _fdnb, real_valued=True)
    fdn_grid = [(('n', n),) + point for n in (5, 6, 8) for point in _pairs(('1', '1/2'), ('2', '1/3'))]
    records += _expand(
        'fdn', 'F_D(a; b..; 1+a-b | w_k, w^n = 1) = G(1+a-b) G(1+a/n) / (G(1+a) G(1+a/n-b))',
        fdn_grid, _fdn, real_valued=True)
    records += _expand(
        'fdnb', 'F_D(1-b; b..; 1+a-b | w_k/(w_k-1)) = n^b G(1+a-b) G(1+a/n) / (G(1+a) G(1+a/n-b))',
        fdn_grid, _fdnb, real_valued=True)
    partition_pairs = _pairs(('1/2', '3/4'), ('1/2', '1/3'))
    records += _expand(
        'even', 'F_D(nb-a; b..; nb | 1 + exp(i(2k-1)pi/n)), n = 2m, = G(a/n) G(nb) G((nb-a)/n) / (n G(a) G(b) G(nb-a))',
        [(('m', m),) + point for m in (1, 2, 3) for point in partition_pairs], _even, real_valued=True)
    records += _expand(
        'odd', 'F_D(nb-a; b..; nb | 1 + exp(i(2k-1)pi/n), x != 0), n = 2m-1, same closed form',
        [(('m', m),) + point for m in (2, 3) for point in partition_pairs], _odd, real_valued=True)
    records += _expand(
        'even-reduced', 'F_D(2mb-a; b..; 2mb | 1 - w_k, w^(2m) = 1), lower side, = exp(-i pi (2mb-a)/2m) X',
        [(('m', m), ('a', 1), ('b', '3/4')) for m in (1, 2, 3)], _even_reduced)
    return records


# ----------------------------------------------------------------------------#
# Single identities.
# ----------------------------------------------------------------------------#

def _single(id, anchor, lhs, rhs, **fields):
    return IdentityRecord(id=id, anchor=anchor, lhs=lhs, rhs=rhs, family=id, **fields)


def _singles():
    w6 = roots_of_unity(6)
    w8 = roots_of_unity(8)
    x6 = unit_partition_roots(6)
    x8 = unit_partition_roots(8)
    k27 = 27 ** 0.25
    records = [
        _single('enu5-1', '2F1(1/2, 3/4; 3/2 | 2) = (1-i)/2 K(1/sqrt2)',
                gauss(0.5, 0.75, 1.5, 2.0), const((1 - 1j) / 2 * K_LEMNISCATIC)),
        _single('k12rep', 'F_D(1; 1/2 x4; 2 | 1 + exp(i(2k-1)pi/4)) = K(1/sqrt2)',
                fd(1, 0.5, 2, unit_partition_roots(4)), const(K_LEMNISCATIC), real_valued=True),
        _single('kr6r2rep', 'F1(1; 1/2, 1/2; 3/2 | 3/2 + i sqrt3/2, 3/2 - i sqrt3/2) = 2 K(k15) / 27^(1/4)',
                fd(1, 0.5, 1.5, unit_partition_roots(3)), const(2 / k27 * K_15), real_valued=True),
        _single('fd3-two', 'F_D(1; 1/2 x3; 2 | 1-i, 2, 1+i) = exp(-i pi/4) K(1/sqrt2)',
                fd(1, 0.5, 2, unit_shift_roots(4)), const(phase(-0.25) * K_LEMNISCATIC),
                erratum=Erratum('printed value -(1-i)/sqrt2 K is the order reduction of k12rep continued '
                                'off the principal sheet; it differs from the principal value by -1',
                                as_printed_rhs=const(-(1 - 1j) / SQRT2 * K_LEMNISCATIC))),
        _single('gr-3-183-2', '2F1(1, 1/4; 7/4 | -1) = (3/4) sqrt2 (2E - K)',
                gauss(1, 0.25, 1.75, -1.0), const(0.75 * SQRT2 * (2 * E_LEMNISCATIC - K_LEMNISCATIC)),
                real_valued=True),
        _single('gr-3-184-1', '2F1(3, 1/4; 15/4 | -1) = (231 sqrt2/320) (2E - K)',
                gauss(3, 0.25, 3.75, -1.0), const(231 * SQRT2 / 320 * (2 * E_LEMNISCATIC - K_LEMNISCATIC)),
                real_valued=True),
        _single('gr-3-185-2', '2F1(1, 3/4; 5/4 | -1) = (sqrt2/4) K',
                gauss(1, 0.75, 1.25, -1.0), const(SQRT2 / 4 * K_LEMNISCATIC), real_valued=True),
        _single('gr-3-185-4', '2F1(3, 3/4; 13/4 | -1) = 15 K / (32 sqrt2)',
                gauss(3, 0.75, 3.25, -1.0), const(15 / (32 * SQRT2) * K_LEMNISCATIC), real_valued=True),
        _single('bf-576-00b', 'F_D(1; 1/2 x5; 3/2 | w_k, w^6 = 1) = K(k15) / (2 3^(1/4))',
                fd(1, 0.5, 1.5, w6), const(K_15 / (2 * 3 ** 0.25)), real_valued=True,
                erratum=Erratum('printed coefficient 1/(4 3^(1/4)) is half the value',
                                as_printed_rhs=const(K_15 / (4 * 3 ** 0.25)))),
        _single('bf-578-00b', 'F_D(2; 1/2 x6; 3 | 1 + exp(i(2k-1)pi/6)) = 4 K(k15) / 27^(1/4)',
                fd(2, 0.5, 3, x6), const(4 / k27 * K_15), tolerance=LOOSE_TOLERANCE, real_valued=True),
        _single('serretprol', 'F_D(2; 1/2 x5; 3 | 1 - w_k, w^6 = 1) = exp(-i pi/3) 4 K(k15) / 27^(1/4)',
                fd(2, 0.5, 3, unit_shift_roots(6)), const(phase(-1 / 3) * 4 / k27 * K_15),
                tolerance=LOOSE_TOLERANCE,
                erratum=Erratum('printed phase -sqrt3/2 + i/2 is (1 - x_6) where order reduction '
                                'of bf-578-00b with a = 2 needs its square exp(-i pi/3)',
                                as_printed_rhs=const(complex(-SQRT3 / 2, 0.5) * 4 / k27 * K_15))),
        _single('legendre-fd7', 'F_D(1; 1/2 x7; 3/2 | w_k, w^8 = 1) = K(sqrt2-1) / (2 sqrt2)',
                fd(1, 0.5, 1.5, w8), const(K_SILVER / (2 * SQRT2)), tolerance=LOOSE_TOLERANCE,
                real_valued=True),
        _single('richelot-fd7', 'F_D(3; 1/2 x7; 7/2 | w_k, w^8 = 1) = (15/16)(1 - 1/sqrt2) K(sqrt2-1)',
                fd(3, 0.5, 3.5, w8), const(15 / 16 * (1 - 1 / SQRT2) * K_SILVER),
                tolerance=LOOSE_TOLERANCE, real_valued=True,
                erratum=Erratum('printed factor 1 - 1/(2 sqrt2) replaced by 1 - 1/sqrt2',
                                as_printed_rhs=const(15 / 16 * (1 - 1 / (2 * SQRT2)) * K_SILVER))),
        _single('fd8a', 'F_D(3; 1/2 x8; 4 | 1 + exp(i(2k-1)pi/8)) = 3 sqrt(2-sqrt2) K(sqrt2-1)',
                fd(3, 0.5, 4, x8), const(3 * SILVER_B8), tolerance=LOOSE_TOLERANCE, real_valued=True),
        _single('fd8b', 'F_D(1; 1/2 x8; 4 | 1 + exp(i(2k-1)pi/8)) = 3 sqrt(2-sqrt2) K(sqrt2-1)',
                fd(1, 0.5, 4, x8), const(3 * SILVER_B8), tolerance=LOOSE_TOLERANCE, real_valued=True),
        _single('fd7a', 'F_D(3; 1/2 x7; 4 | 1 - w_k, w^8 = 1) = exp(-3i pi/8) 3 sqrt(2-sqrt2) K(sqrt2-1)',
                fd(3, 0.5, 4, unit_shift_roots(8)), const(phase(-3 / 8) * 3 * SILVER_B8),
                tolerance=LOOSE_TOLERANCE,
                erratum=Erratum('printed value (-3/sqrt2 + i(3 - 3/sqrt2)) K is exp(7i pi/8) 3 sqrt(2-sqrt2) K, '
                                'the off-sheet reduction of fd8b; the values printed for fd7a and fd7b are swapped',
                                as_printed_rhs=const(complex(-3 / SQRT2, 3 - 3 / SQRT2) * K_SILVER))),
        _single('fd7b', 'F_D(1; 1/2 x7; 4 | 1 - w_k, w^8 = 1) = exp(-i pi/8) 3 sqrt(2-sqrt2) K(sqrt2-1)',
                fd(1, 0.5, 4, unit_shift_roots(8)), const(phase(-1 / 8) * 3 * SILVER_B8),
                tolerance=LOOSE_TOLERANCE,
                erratum=Erratum('printed value (3(1/sqrt2 - 1) + 3i/sqrt2) K is exp(5i pi/8) 3 sqrt(2-sqrt2) K, '
                                'the off-sheet reduction of fd8a; the values printed for fd7a and fd7b are swapped',
                                as_printed_rhs=const(complex(3 * (1 / SQRT2 - 1), 3 / SQRT2) * K_SILVER))),
        _single('fd7c', 'F_D(5; 1/2 x7; 11/2 | w_k, w^8 = 1) = 315 pi / (1024 sqrt2 K(sqrt2-1))',
                fd(5, 0.5, 5.5, w8), const(315 * math.pi / (1024 * SQRT2 * K_SILVER)),
                tolerance=LOOSE_TOLERANCE, real_valued=True),
        _single('fd7d', 'F_D(7; 1/2 x7; 15/2 | w_k, w^8 = 1) = 1001 (2 + sqrt2) pi / (16384 K(sqrt2-1))',
                fd(7, 0.5, 7.5, w8), const(1001 * (2 + SQRT2) * math.pi / (16384 * K_SILVER)),
                tolerance=LOOSE_TOLERANCE, real_valued=True),
        _single('serret-fd6', 'F_D(1; 1/3 x6; 2 | 1 + exp(i(2k-1)pi/6)) = 4^(1/3) K(k15) / 3^(1/4)',
                fd(1, 1 / 3, 2, x6), const(4 ** (1 / 3) / 3 ** 0.25 * K_15), real_valued=True),
        _single('serretprol2', 'F_D(1; 1/3 x5; 2 | 1 - w_k, w^6 = 1) = exp(-i pi/6) 4^(1/3) K(k15) / 3^(1/4)',
                fd(1, 1 / 3, 2, unit_shift_roots(6)), const(phase(-1 / 6) * 4 ** (1 / 3) / 3 ** 0.25 * K_15),
                erratum=Erratum('printed phase -sqrt3/2 + i/2 is the order reduction of serret-fd6 '
                                'continued off the principal sheet; it differs by -1',
                                as_printed_rhs=const(complex(-SQRT3 / 2, 0.5) * 4 ** (1 / 3) / 3 ** 0.25 * K_15))),
    ]
    return records


def _later_singles():
    w6 = roots_of_unity(6)
    cap_value = 32 ** (1 / 3) / 2187 ** 0.25 * K_15
    cap_reduced = (complex(1.5, SQRT3 / 2), complex(1, SQRT3), complex(0, SQRT3), complex(-0.5, SQRT3 / 2))

    bg_f1 = appell(2 / 3, 0.5, 0.5, 5 / 3, -2.0, -8.0)
    bg01_f1 = appell(1 / 3, 0.5, 0.5, 4 / 3, -0.5, -0.125)
    bg00_value = GAMMA_THIRD ** 3 / (3 * math.pi * 16 ** (1 / 3) * SQRT3)

    alpha = complex(-3 / 8, -SQRT7 / 8)
    omega = complex(0.5, -SQRT3 / 2)
    epsilon = complex(0.5, -SQRT7 / 2)
    laured_lhs = fd(2, 0.5, 3, (-1.0, omega, omega.conjugate(), -2.0, epsilon, epsilon.conjugate()))
    laured_rhs = scaled(2 / 3, appell(1, 0.5, 0.5, 1.5, alpha, alpha.conjugate()))
    laured_fd5 = scaled(0.25, fd(2, 0.5, 3, (
        -0.5, complex(0.75, -SQRT3 / 4), complex(0.75, SQRT3 / 4),
        complex(0.75, -SQRT7 / 4), complex(0.75, SQRT7 / 4))))

    her_xs = ((3 * SQRT21 - 17) / 25, (3 - SQRT21) / 12, (SQRT21 - 3) / 3, (11 - SQRT21) / 25)

    records = [
        _single('capXXX205b', 'F_D(1; 1/3 x5; 5/3 | w_k, w^6 = 1) = 32^(1/3) K(k15) / 2187^(1/4)',
                fd(1, 1 / 3, 5 / 3, w6), const(cap_value), real_valued=True),
        _single('capXXX205-fd4', 'F_D(1; 1/3 x4; 5/3 | (w_k - w_5)/(1 - w_5)) = exp(i pi/3) 32^(1/3) K(k15) / 2187^(1/4)',
                fd(1, 1 / 3, 5 / 3, cap_reduced), const(phase(1 / 3) * cap_value)),
        _single('bg00', 'F1(2/3; 1/2, 1/2; 5/3 | -2, -8) = G(1/3)^3 / (3 pi 16^(1/3) sqrt3)',
                bg_f1, const(bg00_value), real_valued=True,
                erratum=Erratum('printed value lacks the factor 1/3 carried by the reduced integral',
                                as_printed_rhs=const(3 * bg00_value))),
        _single('bg00a', 'F1(2/3; 1/2, 1/2; 5/3 | -2, -8) = F(arccos(2 - sqrt3), k75) / 3^(5/4)',
                bg_f1, const(F_75 / 3 ** 1.25), real_valued=True),
        _single('bg01', 'F1(1/3; 1/2, 1/2; 4/3 | -1/2, -1/8) = G(1/3)^3 / (pi sqrt27 2^(1/3))',
                bg01_f1, const(GAMMA_THIRD ** 3 / (math.pi * math.sqrt(27) * 2 ** (1 / 3))), real_valued=True),
        _single('bg01-elliptic', 'F1(1/3; 1/2, 1/2; 4/3 | -1/2, -1/8) = 2 F(arccos(2 - sqrt3), k75) / (3 3^(1/4))',
                bg01_f1, const(2 / (3 * 3 ** 0.25) * F_75), real_valued=True),
        _single('laured', 'F_D(2; 1/2 x6; 3 | -1, w, w*, -2, e, e*) = (2/3) F1(1; 1/2, 1/2; 3/2 | a, a*)',
                laured_lhs, laured_rhs, real_valued=True),
        _single('lauredb', 'F_D(2; 1/2 x6; 3 | -1, w, w*, -2, e, e*) = 2^(1/4) F(arccos((9 - 4 sqrt2)/7), k) / 3',
                laured_lhs, const(2 ** 0.25 / 3 * F_GOURSAT), real_valued=True),
        _single('laured-fd5', '(1/4) F_D(2; 1/2 x5; 3 | -1/2, (3 -+ i sqrt3)/4, (3 -+ i sqrt7)/4) = (2/3) F1(1; 1/2, 1/2; 3/2 | a, a*)',
                laured_fd5, laured_rhs, real_valued=True),
        _single('hermyF1', 'sqrt3 F1(1/4; 1/2, 1/2; 5/4 | 1/3, 1/4) = K(1/sqrt2)',
                scaled(SQRT3, appell(0.25, 0.5, 0.5, 1.25, 1 / 3, 0.25)), const(K_LEMNISCATIC),
                real_valued=True),
        _single('her1876bth', 'F_D(1/2; 1/2 x4; 3/2 | x_k) = (5/14) sqrt(7/3 + sqrt(7/3)) K(sqrt((49 - 9 sqrt21)/2)/7)',
                fd(0.5, 0.5, 1.5, her_xs),
                const(5 / 14 * math.sqrt(7 / 3 + math.sqrt(7 / 3)) * K_HERMITE), real_valued=True,
                erratum=Erratum('printed lower parameter 3/4 replaced by 3/2',
                                as_printed_lhs=fd(0.5, 0.5, 0.75, her_xs))),
        _single('idhermiteK', '(4/3)^(1/4) K(1/sqrt2) = sqrt(12/125) (C1 H1 - C2 H2)',
                const((4 / 3) ** 0.25 * K_LEMNISCATIC), _hermite_combination(), real_valued=True),
        _single('maier-g4', '(4/3)^(1/4) K(1/sqrt2) = P1 pi L1 - P2 pi L2',
                const((4 / 3) ** 0.25 * K_LEMNISCATIC), _maier_combination(), real_valued=True),
        _single('pi-corollary', 'pi = 12 sqrt(22 (9 + 2 sqrt22)) K / (91 L1 22^(1/4) - L2 sqrt(21569 sqrt22 - 99440))',
                const(math.pi), _pi_formula(), real_valued=True),
    ]
    return records


def hermite_arguments():
    numerator = 5 * (27 - 5 * SQRT33)
    root6 = 8 * math.sqrt(6)
    return ((3 - SQRT33) / 10,
            numerator / (153 + root6 - 25 * SQRT33),
            numerator / (153 - root6 - 25 * SQRT33))


def _hermite_combination():
    xs = hermite_arguments()
    h1 = fd(1, (-0.25, 0.5, 0.5), 1.5, xs)
    h2 = fd(1, (0.75, 0.5, 0.5), 1.5, xs)
    c1 = (15625 * (1649 + 225 * SQRT33) / 55296) ** 0.25
    c2 = math.sqrt(5 * (1552 * SQRT3 + 816 * math.sqrt(11))) / 96
    scale = math.sqrt(12 / 125)
    return lambda env: scale * (c1 * h1(env) - c2 * h2(env))


def maier_arguments():
    return (5 / 567 * (23 - 16 * SQRT22), 0.5 - 17 / (8 * SQRT22), 16 * SQRT22 - 75)


def _maier_lauricellas():
    ys = maier_arguments()
    return fd(0.5, (0.25, 0.5, 0.5), 1, ys), fd(0.5, (-0.75, 0.5, 0.5), 1, ys)


def _maier_combination():
    l1, l2 = _maier_lauricellas()
    p1 = 91 / (6 * (264 * (169 + 36 * SQRT22)) ** 0.25)
    p2 = (113 - 20 * SQRT22) ** 0.75 / (2 * 3 ** 0.25 * math.sqrt(176 + 38 * SQRT22))
    return lambda env: math.pi * (p1 * l1(env) - p2 * l2(env))


def _pi_formula():
    l1, l2 = _maier_lauricellas()
    numerator = 12 * math.sqrt(22 * (9 + 2 * SQRT22)) * K_LEMNISCATIC
    root = math.sqrt(21569 * SQRT22 - 99440)
    return lambda env: numerator / (91 * l1(env) * 22 ** 0.25 - l2(env) * root)


# ----------------------------------------------------------------------------#
# Registry.
# ----------------------------------------------------------------------------#

@lru_cache(maxsize=None)
def _catalogue():
    records = tuple(_families() + _singles() + _later_singles())
    ids = [record.id for record in records]
    assert len(ids) == len(set(ids)), 'duplicate identity ids'
    return records


def registry():
    return list(_catalogue())


def lookup(id):
    for record in _catalogue():
        if record.id == id:
            return record
    raise ParameterError('unknown identity id %r' % (id,))


def matches(record, pattern):
    if not pattern:
        return True
    return fnmatchcase(record.id, pattern) or fnmatchcase(record.base_id, pattern)


# ----------------------------------------------------------------------------#
# Verification.
# ----------------------------------------------------------------------------#

def search_erratum(lhs, rhs):
    """(note, corrected rhs) when lhs matches a small multiple of rhs or the other side limit."""
    for factor in SEARCH_FACTORS:
        corrected = float(factor) * rhs
        if measure(lhs, corrected)[1] <= SEARCH_TOLERANCE:
            return 'lhs agrees with %s x rhs' % (factor,), corrected
    # |conj(lhs) - rhs| = |lhs - conj(rhs)|
    if measure(lhs, rhs.conjugate())[1] <= SEARCH_TOLERANCE:
        return 'lhs agrees with rhs only for the opposite side limit', rhs.conjugate()
    return None


def _printed_ratio(record, env):
    erratum = record.erratum
    lhs = (erratum.as_printed_lhs or record.lhs)(env)
    rhs = (erratum.as_printed_rhs or record.rhs)(env)
    return lhs, rhs


def check_record(record, tol_override=None, env=Env(), as_printed=False):
    tolerance = tol_override or record.tolerance
    start = time.perf_counter()
    note = None
    try:
        if as_printed and record.erratum:
            lhs, rhs = _printed_ratio(record, env)
        else:
            lhs, rhs = complex(record.lhs(env)), complex(record.rhs(env))
        if record.erratum and not as_printed:
            printed_lhs, printed_rhs = _printed_ratio(record, env)
            note = '%s; as printed lhs/rhs = %s' % (
                record.erratum.note, format_complex(printed_lhs / printed_rhs))
    except HyperError as exc:
        logger.info('%s: %s', record.id, exc)
        nan = complex(math.nan, math.nan)
        return EvalReport(record.id, record.anchor, nan, nan, math.inf, math.inf, Status.FAIL,
                          time.perf_counter() - start, '%s: %s' % (type(exc).__name__, exc))
    abs_err, rel_err = measure(lhs, rhs)
    if record.real_valued and abs(lhs.imag) >= 1e-9 * (1 + abs(lhs)):
        status = Status.FAIL
        note = 'imaginary part %.3g on a real-valued identity' % lhs.imag
    elif rel_err <= tolerance:
        status = Status.PASS_WITH_ERRATUM if note else Status.PASS
    elif not as_printed and not record.erratum and rel_err > SEARCH_TOLERANCE:
        match = search_erratum(lhs, rhs)
        if match:
            note = '%s; uncorrected rel_err %.3g' % (match[0], rel_err)
            rhs = match[1]
            abs_err, rel_err = measure(lhs, rhs)
            logger.info('%s: %s', record.id, note)
        status = Status.PASS_WITH_ERRATUM if match and rel_err <= tolerance else Status.FAIL
    else:
        status = Status.FAIL
    return EvalReport(record.id, record.anchor, lhs, rhs, abs_err, rel_err, status,
                      time.perf_counter() - start, note)


def verify(id, tol_override=None, quad_tol=QUAD_TOL, side=DEFAULT_SIDE, as_printed=False):
    return check_record(lookup(id), tol_override, Env(quad_tol, side), as_printed)


def verify_all(filter=None, tol_override=None, quad_tol=QUAD_TOL, threads=1,
               side=DEFAULT_SIDE, as_printed=False):
    records = [record for record in _catalogue() if matches(record, filter)]
    env = Env(quad_tol, side)

    def run(record):
        return check_record(record, tol_override, env, as_printed)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(run, records))
    else:
        reports = [run(record) for record in records]
    return sorted(reports, key=lambda report: report.id)
