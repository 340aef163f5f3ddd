import json
import math
import os
import tempfile
import unittest
from datetime import datetime

from werkzeug.datastructures import MultiDict

# read by app.config.from_prefixed_env at import
os.environ['HYPER_SQLALCHEMY_DATABASE_URI'] = 'sqlite://'
os.environ['HYPER_LOG_FILE'] = os.devnull

from app import app, format_value, render_json, render_text  # noqa: E402
from forms import EvalForm, RunConfigForm, parse_complex, parse_complex_list  # noqa: E402
from identities import EvalReport, Status  # noqa: E402
from models import ReportRow  # noqa: E402


def form(cls, **values):
    return cls(MultiDict([(name, str(value)) for name, value in values.items()]))


class ParseTests(unittest.TestCase):

    def testComplex(self):
        self.assertEqual(parse_complex('2'), 2)
        self.assertEqual(parse_complex('1,-2'), 1 - 2j)
        self.assertEqual(parse_complex(' 1/4 '), 0.25)
        for text in ('x', '1,2,3', '1/0', ''):
            self.assertRaises(ValueError, parse_complex, text)

    def testList(self):
        self.assertEqual(parse_complex_list('0.5,1/2,2'), (0.5, 0.5, 2))
        self.assertEqual(parse_complex_list('1,1;2,-1;3'), (1 + 1j, 2 - 1j, 3))


class EvalFormTests(unittest.TestCase):

    def testGauss(self):
        f = form(EvalForm, function='2f1', a='1', b='1/2', c='3/2', x='-1')
        self.assertTrue(f.validate(), f.errors)
        self.assertEqual(f.arguments(), (1, (0.5,), 1.5, (-1,)))
        self.assertEqual(f.side.data, 'below')

    def testMissingArgument(self):
        f = form(EvalForm, function='2f1', a='1', b='1/2', c='3/2')
        self.assertFalse(f.validate())
        self.assertIn('x', f.errors)

    def testUnknownFunction(self):
        self.assertFalse(form(EvalForm, function='3f2', a='1', c='2', bs='1', xs='0.5').validate())

    def testMalformed(self):
        f = form(EvalForm, function='2f1', a='one', b='1/2', c='3/2', x='-1')
        self.assertFalse(f.validate())
        self.assertIn('a', f.errors)

    def testLengthMismatch(self):
        f = form(EvalForm, function='fd', a='1', c='2', bs='0.5,0.5', xs='0.1')
        self.assertFalse(f.validate())
        self.assertIn('xs', f.errors)

    def testAppellArity(self):
        f = form(EvalForm, function='f1', a='1', c='2', bs='0.5,0.5,0.5', xs='0.1,0.2,0.3')
        self.assertFalse(f.validate())
        f = form(EvalForm, function='f1', a='1', c='2', bs='0.5,0.5', xs='0.1;0.2,1')
        self.assertTrue(f.validate(), f.errors)
        self.assertEqual(f.arguments()[3], (0.1, 0.2 + 1j))


class RunConfigFormTests(unittest.TestCase):

    def testDefaults(self):
        f = form(RunConfigForm, tolerance='1e-8', quad_tol='1e-9', format='json', threads='2')
        self.assertTrue(f.validate(), f.errors)
        self.assertEqual(f.threads.data, 2)

    def testQuadratureTighterThanTolerance(self):
        self.assertFalse(form(RunConfigForm, tolerance='1e-8', quad_tol='1e-8', format='text',
                              threads='1').validate())

    def testQuadratureFloor(self):
        # 1e-13 is as tight as quadrature goes, so it is accepted for any tolerance
        self.assertTrue(form(RunConfigForm, tolerance='1e-15', quad_tol='1e-13', format='text',
                             threads='1').validate())
        self.assertFalse(form(RunConfigForm, tolerance='1e-15', quad_tol='1e-12', format='text',
                              threads='1').validate())

    def testPositiveTolerance(self):
        self.assertFalse(form(RunConfigForm, tolerance='-1e-8', quad_tol='1e-12', format='text',
                              threads='1').validate())
        self.assertFalse(form(RunConfigForm, tolerance='1e-8', quad_tol='1e-12', format='text',
                              threads='0').validate())


class RenderTests(unittest.TestCase):

    def testFormatValue(self):
        self.assertEqual(format_value(0.25 + 0j), '0.25')
        self.assertEqual(format_value(0.5 - 1.5j), '0.5-1.5i')

    def testRenderText(self):
        reports = [EvalReport('kummer(a=1,b=1/2)', 'anchor', 1 + 0j, 1 + 0j, 0.0, 0.0, Status.PASS, 0.001),
                   EvalReport('bg00', 'anchor', 1 + 0j, 2 + 0j, 1.0, 0.5, Status.FAIL, 0.002, 'off')]
        text = render_text(reports, datetime(2026, 1, 2, 3, 4))
        lines = text.splitlines()
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith('bg00 '))
        self.assertTrue(lines[1].endswith('off'))
        self.assertTrue(lines[2].startswith('2 records, 1 passed, 1 failed'))

    def testJsonWithoutNumbers(self):
        nan = complex(math.nan, math.nan)
        report = EvalReport('x', 'anchor', nan, 1 + 0j, math.inf, math.inf, Status.FAIL, 0.5, 'PoleError: c')
        text = render_json([report])
        self.assertNotIn('NaN', text)
        self.assertNotIn('Infinity', text)
        row = json.loads(text)[0]
        self.assertEqual(row['lhs'], {'re': None, 'im': None})
        self.assertIsNone(row['rel_err'])
        back = EvalReport.from_dict(row)
        self.assertTrue(math.isnan(back.lhs.real))
        self.assertTrue(math.isnan(back.abs_err))

    def testJsonIsStable(self):
        reports = [EvalReport('kummer(a=1,b=1/2)', 'anchor', 1 / 3 + 0.1j, 1 / 3 + 0j, 0.1, 0.3, Status.FAIL,
                              0.25, 'off'),
                   EvalReport('bg00', 'anchor', complex(math.nan, 0), -2.5 + 0j, math.inf, math.inf,
                              Status.FAIL, 0.5)]
        text = render_json(reports)
        self.assertEqual(json.dumps(json.loads(text), indent=2, allow_nan=False), text)
        again = render_json([EvalReport.from_dict(row) for row in json.loads(text)])
        self.assertEqual(again, text)

    def testStoredRow(self):
        nan = complex(math.nan, math.nan)
        report = EvalReport('x', 'anchor', nan, 1 + 0j, math.inf, math.inf, Status.FAIL, 0.5, 'PoleError: c')
        back = ReportRow.from_report(report).to_report()
        self.assertTrue(math.isnan(back.lhs.real))
        self.assertEqual(back.rhs, 1)
        self.assertIs(back.status, Status.FAIL)
        self.assertEqual(back.note, 'PoleError: c')


class CommandTests(unittest.TestCase):

    def setUp(self):
        self.runner = app.test_cli_runner()

    def invoke(self, *args):
        return self.runner.invoke(args=['hyper'] + list(args))

    def testEval(self):
        result = self.invoke('eval', '2f1', '--a', '1', '--b', '1/2', '--c', '3/2', '--x', '-1')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('0.78539816339744', result.output)
        self.assertIn('error estimate', result.output)

    def testEvalOnTheCut(self):
        result = self.invoke('eval', '2f1', '--a', '1/2', '--b', '3/4', '--c', '3/2', '--x', '2',
                             '--side', 'above')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('i', result.output.splitlines()[0])

    def testEvalFlagErrors(self):
        result = self.invoke('eval', '2f1', '--a', '1', '--b', 'half', '--c', '3/2', '--x', '-1')
        self.assertEqual(result.exit_code, 2)
        result = self.invoke('eval', 'fd', '--a', '1', '--bs', '0.5,0.5', '--c', '2', '--xs', '0.1')
        self.assertEqual(result.exit_code, 2)

    def testEvalFailure(self):
        result = self.invoke('eval', 'f1', '--a', '1', '--bs', '1/2,1/2', '--c', '2', '--xs', '1,0.5')
        self.assertEqual(result.exit_code, 3)

    def testVerifyJson(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'report.json')
            result = self.invoke('verify', '--filter', 'kummer', '--format', 'json', '--out', path,
                                 '--no-persist')
            self.assertEqual(result.exit_code, 0, result.output)
            with open(path) as handle:
                rows = json.load(handle)
        self.assertEqual(len(rows), 6)
        self.assertEqual({row['status'] for row in rows}, {'pass'})
        report = EvalReport.from_dict(rows[0])
        self.assertTrue(report.id.startswith('kummer('))

    def testVerifyAsPrintedFails(self):
        result = self.invoke('verify', '--filter', 'bg00', '--as-printed', '--no-persist')
        self.assertEqual(result.exit_code, 1)
        self.assertIn('1 failed', result.output)

    def testVerifyBadTolerances(self):
        result = self.invoke('verify', '--tol', '1e-8', '--quad-tol', '1e-8', '--no-persist')
        self.assertEqual(result.exit_code, 2)

    def testTightToleranceRuns(self):
        # quad_tol follows the tolerance down to the quadrature floor
        result = self.invoke('verify', '--tol', '1e-15', '--filter', 'fd8a', '--no-persist')
        self.assertEqual(result.exit_code, 1, result.output)
        self.assertIn('1 failed', result.output)

    def testReduceRepresentations(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'report.json')
            result = self.invoke('reduce', '--filter', 'irtg4', '--format', 'json', '--out', path,
                                 '--no-persist')
            self.assertEqual(result.exit_code, 0, result.output)
            with open(path) as handle:
                rows = json.load(handle)
        self.assertEqual([row['id'] for row in rows], ['irtg4(generic)', 'irtg4(m=-1/4)', 'irtg4(m=3/4)'])

    def testHistory(self):
        result = self.invoke('verify', '--filter', 'gr-3-185-*')
        self.assertEqual(result.exit_code, 0, result.output)
        result = self.invoke('history', '--limit', '50')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('gr-3-185-*', result.output)
        run_id = int(next(line for line in result.output.splitlines() if 'gr-3-185-*' in line).split()[0])
        result = self.invoke('history', '--run', str(run_id))
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('gr-3-185-2', result.output)
        self.assertIn('2 records, 2 passed, 0 failed', result.output)
        self.assertEqual(self.invoke('history', '--run', '999999').exit_code, 2)


if __name__ == '__main__':
    unittest.main()
