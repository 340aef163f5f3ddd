import math
import unittest

import numpy as np
from scipy import special

from core import ParameterError, QuadratureError
from hyperfun import eulerian_a, eulerian_b
from quadrature import (
    MIN_LEVEL,
    Abscissae,
    IntegrandSpec,
    a_family_integrand,
    b_family_integrand,
    integrate,
    integrate_semi_infinite,
    tanh_sinh_rule,
)


def power(exponent, point=0.0):
    return IntegrandSpec(lambda n: np.abs(n.distance(point)) ** exponent)


class AbscissaeTests(unittest.TestCase):

    def testDistanceUsesOffsetAtTheAnchor(self):
        x = np.array([1.0, 0.5])
        nodes = Abscissae(x, np.array([1.0, 0.0]), np.array([-1e-30, 0.5]))
        self.assertEqual(nodes.distance(1.0)[0], -1e-30)
        self.assertEqual(nodes.distance(1.0)[1], -0.5)
        self.assertEqual(nodes.distance(0.0)[1], 0.5)

    def testRuleIsSymmetric(self):
        right, fraction, weight = tanh_sinh_rule(2)
        self.assertEqual(right.sum(), (~right).sum())
        np.testing.assert_allclose(fraction[right][::-1], fraction[~right])
        self.assertTrue(np.all(fraction > 0))
        self.assertTrue(np.all(fraction <= 0.5))
        self.assertFalse(weight.flags.writeable)


class IntegrandSpecTests(unittest.TestCase):

    def testValidation(self):
        self.assertRaises(ParameterError, IntegrandSpec, abs, (0.5, 0.2))
        self.assertRaises(ParameterError, IntegrandSpec, abs, (), (-1.0, 0.0))
        self.assertRaises(ParameterError, IntegrandSpec, abs, (), (0.0,))
        spec = IntegrandSpec(abs, (1, 2))
        self.assertEqual(spec.interior_singularities, (1.0, 2.0))


class IntegrateTests(unittest.TestCase):

    def testPolynomial(self):
        result = integrate(IntegrandSpec(lambda n: n.x ** 2), 0.0, 1.0)
        self.assertAlmostEqual(result.value.real, 1 / 3, places=13)
        self.assertEqual(result.value.imag, 0)
        self.assertGreater(result.evaluations, 0)
        self.assertGreater(result.levels, MIN_LEVEL)
        self.assertLessEqual(result.error_estimate, 1e-11)

    def testEndpointSingularities(self):
        result = integrate(power(-0.5), 0.0, 1.0)
        self.assertAlmostEqual(result.value.real, 2.0, places=10)
        spec = IntegrandSpec(lambda n: 1 / np.sqrt(n.distance(0.0) * -n.distance(1.0)))
        self.assertAlmostEqual(integrate(spec, 0.0, 1.0).value.real, math.pi, places=10)

    def testInteriorSingularity(self):
        spec = IntegrandSpec(lambda n: np.abs(n.distance(1.0)) ** -0.5, (1.0,))
        self.assertAlmostEqual(integrate(spec, 0.0, 2.0).value.real, 4.0, places=10)

    def testStrongEndpointSingularity(self):
        result = integrate(power(-0.9), 0.0, 1.0, tol=1e-9)
        self.assertAlmostEqual(result.value.real, 10.0, places=6)

    def testComplexIntegrand(self):
        result = integrate(IntegrandSpec(lambda n: np.exp(1j * n.x)), 0.0, math.pi)
        self.assertAlmostEqual(result.value.real, 0.0, places=12)
        self.assertAlmostEqual(result.value.imag, 2.0, places=12)

    def testPreconditions(self):
        self.assertRaises(ParameterError, integrate, power(0), 1.0, 1.0)
        self.assertRaises(ParameterError, integrate, power(0), 0.0, 1.0, 1e-15)
        self.assertRaises(ParameterError, integrate, IntegrandSpec(abs, (2.0,)), 0.0, 1.0)

    def testNonFiniteSample(self):
        spec = IntegrandSpec(lambda n: np.full(n.x.shape, np.nan))
        self.assertRaises(QuadratureError, integrate, spec, 0.0, 1.0)

    def testNaiveEndpointDistanceIsRejected(self):
        # 1 - x rounds to zero long before the weights become negligible
        spec = IntegrandSpec(lambda n: 1 / np.sqrt(1 - n.x))
        self.assertRaises(QuadratureError, integrate, spec, 0.0, 1.0)


class SemiInfiniteTests(unittest.TestCase):

    def testRational(self):
        spec = IntegrandSpec(lambda n: 1 / (1 + n.x ** 2))
        self.assertAlmostEqual(integrate_semi_infinite(spec, 0.0).value.real, math.pi / 2, places=9)

    def testShiftedLowerEndpoint(self):
        spec = IntegrandSpec(lambda n: np.exp(-n.distance(2.0)))
        self.assertAlmostEqual(integrate_semi_infinite(spec, 2.0).value.real, 1.0, places=9)

    def testLowerEndpointSingularity(self):
        spec = IntegrandSpec(lambda n: 1 / (np.sqrt(n.distance(1.0)) * n.x))
        self.assertAlmostEqual(integrate_semi_infinite(spec, 1.0).value.real, math.pi, places=8)

    def testInteriorSingularity(self):
        def evaluator(n):
            return np.abs(n.distance(1.0)) ** -0.5 / (1 + n.x ** 2)

        head = integrate(IntegrandSpec(evaluator, (1.0,)), 0.0, 2.0).value
        tail = integrate_semi_infinite(IntegrandSpec(evaluator), 2.0).value
        whole = integrate_semi_infinite(IntegrandSpec(evaluator, (1.0,)), 0.0).value
        self.assertAlmostEqual(whole.real, (head + tail).real, places=8)

    def testDivergence(self):
        spec = IntegrandSpec(lambda n: 1 / n.x)
        self.assertRaises(QuadratureError, integrate_semi_infinite, spec, 1.0)

    def testSingularityBelowLowerEndpoint(self):
        self.assertRaises(ParameterError, integrate_semi_infinite, IntegrandSpec(abs, (0.5,)), 1.0)


class EulerianIntegrandTests(unittest.TestCase):

    def testAFamily(self):
        for n, a, b in ((4, 1, 0.5), (3, 2, 0.5), (6, 1, 1 / 3), (8, 3, 0.5)):
            expected = special.beta(a / n, 1 - b) / n
            value = integrate(a_family_integrand(n, a, b), 0.0, 1.0).value
            self.assertAlmostEqual(value.real / expected, 1.0, places=10)

    def testBFamily(self):
        for n, a, b in ((4, 1, 0.5), (3, 1, 0.5), (6, 2, 0.5), (8, 5, 1.0)):
            expected = special.beta(a / n, b - a / n) / n
            value = integrate_semi_infinite(b_family_integrand(n, a, b), 0.0).value
            self.assertAlmostEqual(value.real / expected, 1.0, places=8)

    def testClosedFormGrid(self):
        for n in (2, 3, 4, 6, 8):
            for a in (0.5, 1.0, 1.5):
                for b in (0.25, 0.5, 0.75):
                    value = integrate(a_family_integrand(n, a, b), 0.0, 1.0, tol=1e-10).value
                    self.assertLess(abs(value / eulerian_a(n, a, b) - 1), 1e-8, (n, a, b))
                    if n * b > a:
                        value = integrate_semi_infinite(b_family_integrand(n, a, b), 0.0).value
                        self.assertLess(abs(value / eulerian_b(n, a, b) - 1), 1e-7, (n, a, b))


class LinearityTests(unittest.TestCase):

    def testLinearCombination(self):
        f = a_family_integrand(4, 1, 0.5)
        g = a_family_integrand(3, 0.5, 0.25)
        both = IntegrandSpec(lambda n: f.evaluator(n) - 2.5 * g.evaluator(n))
        expected = integrate(f, 0.0, 1.0).value - 2.5 * integrate(g, 0.0, 1.0).value
        self.assertLess(abs(integrate(both, 0.0, 1.0).value - expected), 1e-10 * abs(expected))

    def testAdditivity(self):
        spec = a_family_integrand(3, 0.5, 0.5)
        whole = integrate(spec, 0.0, 1.0).value
        rng = np.random.default_rng(1835)
        for split in rng.uniform(0.05, 0.95, 10):
            parts = integrate(spec, 0.0, split).value + integrate(spec, split, 1.0).value
            self.assertLess(abs(parts - whole), 1e-10 * abs(whole), split)


if __name__ == '__main__':
    unittest.main()
