import math

from core import DomainError, ConvergenceError

# Named moduli.
LEMNISCATIC = 1 / math.sqrt(2)
K3_MODULUS = (math.sqrt(6) - math.sqrt(2)) / 4
SILVER_MODULUS = math.sqrt(2) - 1
COMPLEMENT_K3 = (math.sqrt(6) + math.sqrt(2)) / 4
HERMITE_MODULUS = math.sqrt((49 - 9 * math.sqrt(21)) / 2) / 7
GOURSAT_MODULUS = math.sqrt(8 + 5 * math.sqrt(2)) / 4

MAX_ITERATIONS = 64
EPS = 2.220446049250313e-16


def _check_modulus(k):
    if not 0 <= k < 1:
        raise DomainError('elliptic modulus must lie in [0, 1), got %r' % (k,))


def _complementary(k):
    return math.sqrt((1 - k) * (1 + k))


def agm(a, b):
    for _ in range(MAX_ITERATIONS):
        if abs(a - b) <= EPS * a:
            return a
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise ConvergenceError('agm(%r, %r) did not settle' % (a, b))


def complete_k(k):
    _check_modulus(k)
    return math.pi / (2 * agm(1.0, _complementary(k)))


def complete_e(k):
    """E(k) from the same AGM run, K(k) (1 - sum 2**(n-1) c_n**2)."""
    _check_modulus(k)
    a, b, c = 1.0, _complementary(k), k
    weight = 0.5
    total = weight * c * c
    for _ in range(MAX_ITERATIONS):
        if abs(a - b) <= EPS * a:
            break
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        weight *= 2
        total += weight * c * c
    else:
        raise ConvergenceError('agm for E(%r) did not settle' % (k,))
    return math.pi / (2 * a) * (1 - total)


def carlson_rf(x, y, z):
    """Carlson's RF by duplication; at most one argument may be zero."""
    if min(x, y, z) < 0 or (x == 0) + (y == 0) + (z == 0) > 1:
        raise DomainError('carlson_rf(%r, %r, %r) is undefined' % (x, y, z))
    x0, y0 = x, y
    a0 = (x + y + z) / 3
    q = (3 * EPS) ** (-1 / 8) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a, scale = a0, 1.0
    for _ in range(MAX_ITERATIONS):
        if q < abs(a):
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x, y, z, a = (x + lam) / 4, (y + lam) / 4, (z + lam) / 4, (a + lam) / 4
        q /= 4
        scale *= 4
    else:
        raise ConvergenceError('carlson_rf did not settle')
    big_x = (a0 - x0) / (a * scale)
    big_y = (a0 - y0) / (a * scale)
    big_z = -(big_x + big_y)
    e2 = big_x * big_y - big_z * big_z
    e3 = big_x * big_y * big_z
    return (1 + e3 * (1 / 14 + 3 * e3 / 104)
            + e2 * (-1 / 10 + e2 / 24 - 3 * e3 / 44 - 5 * e2 * e2 / 208 + e2 * e3 / 16)) / math.sqrt(a)


def incomplete_f(phi, k):
    """F(phi, k) for 0 <= phi <= pi/2."""
    _check_modulus(k)
    if not 0 <= phi <= math.pi / 2 + 1e-15:
        raise DomainError('amplitude must lie in [0, pi/2], got %r' % (phi,))
    if phi == 0:
        return 0.0
    s, c = math.sin(phi), math.cos(phi)
    return s * carlson_rf(c * c, (1 - k * s) * (1 + k * s), 1.0)
