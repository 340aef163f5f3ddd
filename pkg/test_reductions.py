import dataclasses
import math
import unittest

from core import ParameterError
from hyperfun import eulerian_a
from identities import Status
from quadrature import a_family_integrand
from reductions import (
    FINITE_TOLERANCE,
    SEMI_INFINITE_TOLERANCE,
    Integral,
    _hermite_cubic,
    check_all,
    check_reduction,
    check_record,
    lookup_reduction,
    quartic_representation,
    real_cubic_roots,
    reduction_registry,
    representation_formulas_check,
)


class CubicTests(unittest.TestCase):

    def testThreeRealRoots(self):
        roots = real_cubic_roots(1.0, -6.0, 11.0, -6.0)
        self.assertEqual(len(roots), 3)
        for root, expected in zip(roots, (1.0, 2.0, 3.0)):
            self.assertAlmostEqual(root, expected, places=12)

    def testOneRealRoot(self):
        roots = real_cubic_roots(2.0, 0.0, 0.0, -16.0)
        self.assertEqual(len(roots), 1)
        self.assertAlmostEqual(roots[0], 2.0, places=13)
        roots = real_cubic_roots(1.0, 0.0, 1.0, 0.0)
        self.assertEqual(len(roots), 1)
        self.assertAlmostEqual(roots[0], 0.0, places=13)

    def testHermiteBranchPoint(self):
        z1 = real_cubic_roots(4.0, 0.0, -3.0, -2.0)[-1]
        self.assertAlmostEqual(4 * z1 ** 3 - 3 * z1 - 2, 0.0, places=12)
        self.assertGreater(z1, 1.0)

    def testDegenerate(self):
        self.assertRaises(ParameterError, real_cubic_roots, 0.0, 1.0, 2.0, 3.0)


class RegistryTests(unittest.TestCase):

    def testIds(self):
        ids = [record.id for record in reduction_registry()]
        self.assertEqual(len(ids), 20)
        self.assertEqual(len(set(ids)), 20)
        for id in ('jacobi-g2(a=4,b=2)', 'hermite-ugu(a=1,b=2)', 'hermite-ugu(a=3,b=6)', 'goursat-dig',
                   'goursat-gb0', 'goursat-011b', 'hermite-b0(a=1)', 'hermite-full', 'hermite-g3',
                   'maier-g4', 'legendre-z1(n=8,a=3)', 'legendre-z2(n=6,a=5)'):
            self.assertEqual(lookup_reduction(id).id, id)

    def testUnknownId(self):
        self.assertRaises(ParameterError, lookup_reduction, 'no-such-reduction')
        self.assertRaises(ParameterError, check_reduction, 'no-such-reduction')

    def testTolerances(self):
        self.assertEqual(lookup_reduction('jacobi-g2(a=4,b=2)').tolerance, FINITE_TOLERANCE)
        self.assertEqual(lookup_reduction('legendre-z1(n=4,a=1)').tolerance, SEMI_INFINITE_TOLERANCE)
        self.assertEqual(lookup_reduction('hermite-ugu(a=1,b=2)').tolerance, SEMI_INFINITE_TOLERANCE)

    def testHermiteCubicDomain(self):
        self.assertRaises(ParameterError, _hermite_cubic, 1.0, 1.0)
        self.assertRaises(ParameterError, _hermite_cubic, 4.0, 7.0)


class IntegralTests(unittest.TestCase):

    def testFinite(self):
        integral = Integral(a_family_integrand(4, 1, 0.5), 0.0, 1.0)
        self.assertFalse(integral.semi_infinite)
        self.assertAlmostEqual(integral.evaluate(1e-11).real, eulerian_a(4, 1, 0.5).real, places=10)


class CheckTests(unittest.TestCase):

    def testSelectedReductions(self):
        for id in ('jacobi-g2(a=4,b=2)', 'goursat-gb0', 'hermite-b0(a=1)', 'legendre-z1(n=4,a=1)',
                   'legendre-z2(n=4,a=3)'):
            report = check_reduction(id)
            self.assertIs(report.status, Status.PASS, (id, report.rel_err, report.note))

    def testProductMode(self):
        report = check_reduction('legendre-z2(n=4,a=3)')
        # 2 pi / (4 * 2 * sin(3 pi/4))
        self.assertAlmostEqual(report.rhs.real, math.pi / (2 * math.sqrt(2)), places=12)

    def testWrongEndpointIsNoted(self):
        record = dataclasses.replace(lookup_reduction('jacobi-g2(a=4,b=2)'), endpoint_pairs=((0.0, 0.5),))
        report = check_record(record)
        self.assertIs(report.status, Status.FAIL)
        self.assertIn('substitution maps', report.note)

    def testWholeCatalogue(self):
        reports = check_all()
        self.assertEqual([r.id for r in reports], sorted(r.id for r in reports))
        failed = [(r.id, r.rel_err, r.note) for r in reports if not r.passed]
        self.assertEqual(failed, [])

    def testFilter(self):
        reports = check_all('legendre-z1')
        self.assertEqual(len(reports), 5)


class RepresentationTests(unittest.TestCase):

    def testQuarticRepresentation(self):
        integral, formula = quartic_representation(0, 1.0, 2.0, 3.0, 5.0)
        self.assertAlmostEqual(abs(integral.evaluate(1e-11) - formula(1e-11)), 0.0, places=9)

    def testFilter(self):
        reports = representation_formulas_check(filter='irtg4')
        self.assertEqual(len(reports), 3)
        self.assertEqual(len(representation_formulas_check(filter='irtoapp(m=2)')), 1)

    def testAllFormulas(self):
        for report in representation_formulas_check():
            self.assertIs(report.status, Status.PASS, (report.id, report.rel_err))
            if report.id.startswith('irtoapp'):
                self.assertIn('leading parameter is 1', report.note)


if __name__ == '__main__':
    unittest.main()
