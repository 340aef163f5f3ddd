# ----------------------------------------------------------------------------#
# Imports
# ----------------------------------------------------------------------------#

import json
import logging
from datetime import datetime
from logging import Formatter, FileHandler

import babel.dates
import click
from flask import Flask
from flask.cli import AppGroup, FlaskGroup
from sqlalchemy.exc import SQLAlchemyError
from werkzeug.datastructures import MultiDict

import identities
import reductions
from core import BranchSide, HyperError
from forms import EvalForm, RunConfigForm
from hyperfun import HyperSpec, appell_f1, hyp2f1, lauricella_fd
from quadrature import MIN_TOLERANCE

# ----------------------------------------------------------------------------#
# App Config.
# ----------------------------------------------------------------------------#

LIBRARY_LOGGERS = ('core', 'quadrature', 'hyperfun', 'elliptic', 'identities', 'reductions')

app = Flask(__name__)
app.config.from_object('config')
app.config.from_prefixed_env('HYPER')

# ----------------------------------------------------------------------------#
# Models.
# ----------------------------------------------------------------------------#

from models import ReportRow, VerificationRun, db

db.init_app(app)


def setting(name):
    """HYPER_<name> from config.py, overridden by the HYPER_<name> environment variable."""
    return app.config.get(name, app.config['HYPER_' + name])


# ----------------------------------------------------------------------------#
# Filters.
# ----------------------------------------------------------------------------#

def format_datetime(value, format="EE MM, dd, y h:mma"):
    return babel.dates.format_datetime(value, format, locale='en')


def format_value(value):
    if value.imag == 0:
        return '%.15g' % value.real
    return '%.15g%+.15gi' % (value.real, value.imag)


def render_text(reports, finished_at):
    width = max([len(report.id) for report in reports] + [2])
    lines = []
    for report in reports:
        line = '%-*s  %-17s  abs %9.3e  rel %9.3e  %9.1f ms' % (
            width, report.id, report.status.value, report.abs_err, report.rel_err, report.elapsed * 1000.0)
        if report.note:
            line += '  ' + report.note
        lines.append(line)
    failed = sum(1 for report in reports if not report.passed)
    lines.append('%d records, %d passed, %d failed, finished %s' % (
        len(reports), len(reports) - failed, failed, format_datetime(finished_at)))
    return '\n'.join(lines)


def render_json(reports):
    return json.dumps([report.to_dict() for report in reports], indent=2, allow_nan=False)


# ----------------------------------------------------------------------------#
# Helpers.
# ----------------------------------------------------------------------------#

def _flag_errors(ctx, form):
    for name, errors in form.errors.items():
        for error in errors:
            click.echo('%s: %s' % (name or 'flags', error), err=True)
    ctx.exit(2)


def _derived_quad_tol(tolerance, default):
    """default tightened to tolerance/10, but not below the quadrature floor."""
    try:
        return max(MIN_TOLERANCE, min(default, float(tolerance) / 10))
    except ValueError:
        return default


def _run_form(tol, quad_tol, filter, format, out, default_quad_tol):
    tolerance = tol or str(setting('TOLERANCE'))
    return RunConfigForm(MultiDict([
        ('tolerance', tolerance),
        ('quad_tol', quad_tol or str(_derived_quad_tol(tolerance, default_quad_tol))),
        ('filter', filter or ''),
        ('format', format),
        ('out', out or ''),
        ('threads', str(setting('THREADS'))),
    ]))


def evaluate(function, a, bs, c, xs, side, tol):
    if function == '2f1':
        return hyp2f1(a, bs[0], c, xs[0], side, tol)
    if function == 'f1':
        return appell_f1(a, bs[0], bs[1], c, xs[0], xs[1], side, tol)
    return lauricella_fd(HyperSpec(a, bs, c, xs), side, tol)


def persist_run(command, form, override, reports, started_at, finished_at):
    run_id = None
    failed = sum(1 for report in reports if not report.passed)
    try:
        db.create_all()
        run = VerificationRun(
            command=command,
            filter=form.filter.data or None,
            tolerance=override,
            quad_tol=form.quad_tol.data,
            started_at=started_at,
            finished_at=finished_at,
            passed=len(reports) - failed,
            failed=failed,
            rows=[ReportRow.from_report(report) for report in reports],
        )
        db.session.add(run)
        db.session.commit()
        run_id = run.id
    except SQLAlchemyError:
        db.session.rollback()
        app.logger.exception('could not persist the %s run', command)
    finally:
        db.session.close()
    return run_id


def _finish(ctx, command, form, override, reports, started_at, persist):
    finished_at = datetime.now()
    failed = sum(1 for report in reports if not report.passed)
    run_id = None
    if persist and setting('PERSIST_RUNS'):
        run_id = persist_run(command, form, override, reports, started_at, finished_at)
    app.logger.info('run %s: %d records, %d failed', run_id, len(reports), failed)

    if form.format.data == 'json':
        output = render_json(reports)
    else:
        output = render_text(reports, finished_at)
    if form.out.data:
        with open(form.out.data, 'w') as handle:
            handle.write(output + '\n')
    else:
        click.echo(output)
    if failed:
        ctx.exit(1)


# ----------------------------------------------------------------------------#
# Commands.
# ----------------------------------------------------------------------------#

hyper = AppGroup('hyper', help='Evaluate hypergeometric functions and verify identities.')
app.cli.add_command(hyper)


@hyper.command('eval')
@click.argument('function')
@click.option('--a', help='a as re or re,im')
@click.option('--b', help='b of 2f1')
@click.option('--bs', help='b parameters of f1 and fd')
@click.option('--c', help='c as re or re,im')
@click.option('--x', help='argument of 2f1')
@click.option('--xs', help='arguments of f1 and fd')
@click.option('--side', default='below', help='cut side for real arguments above 1')
@click.option('--quad-tol', 'quad_tol', help='quadrature tolerance')
@click.pass_context
def eval_command(ctx, function, side, quad_tol, **values):
    data = [(name, value) for name, value in values.items() if value is not None]
    data += [('function', function), ('side', side), ('quad_tol', quad_tol or str(setting('QUAD_TOL')))]
    form = EvalForm(MultiDict(data))
    if not form.validate():
        _flag_errors(ctx, form)
    a, bs, c, xs = form.arguments()
    tol = form.quad_tol.data
    try:
        value = evaluate(function, a, bs, c, xs, BranchSide(side), tol)
        coarse = evaluate(function, a, bs, c, xs, BranchSide(side), min(tol * 100, 1e-3))
    except HyperError as exc:
        app.logger.info('eval %s failed: %s', function, exc)
        click.echo('%s: %s' % (type(exc).__name__, exc), err=True)
        ctx.exit(3)
    click.echo(format_value(value))
    click.echo('error estimate %.3g' % abs(value - coarse))


@hyper.command('verify')
@click.option('--tol', help='override every record tolerance')
@click.option('--quad-tol', 'quad_tol', help='quadrature tolerance')
@click.option('--filter', 'filter', help='glob over record ids and family ids')
@click.option('--format', 'format', default='text', help='text or json')
@click.option('--out', help='write the report to this file')
@click.option('--side', default='below', type=click.Choice(['above', 'below']))
@click.option('--as-printed', 'as_printed', is_flag=True, help='check erratum records as printed')
@click.option('--no-persist', 'no_persist', is_flag=True, help='do not record the run')
@click.pass_context
def verify_command(ctx, tol, quad_tol, filter, format, out, side, as_printed, no_persist):
    form = _run_form(tol, quad_tol, filter, format, out, setting('QUAD_TOL'))
    if not form.validate():
        _flag_errors(ctx, form)
    override = form.tolerance.data if tol else None
    started_at = datetime.now()
    app.logger.info('verify started (filter %s, %d threads)', filter or '*', form.threads.data)
    reports = identities.verify_all(form.filter.data or None, override, form.quad_tol.data,
                                    form.threads.data, BranchSide(side), as_printed)
    _finish(ctx, 'verify', form, override, reports, started_at, not no_persist)


@hyper.command('reduce')
@click.option('--tol', help='override every record tolerance')
@click.option('--quad-tol', 'quad_tol', help='quadrature tolerance')
@click.option('--filter', 'filter', help='glob over record ids and family ids')
@click.option('--format', 'format', default='text', help='text or json')
@click.option('--out', help='write the report to this file')
@click.option('--no-persist', 'no_persist', is_flag=True, help='do not record the run')
@click.pass_context
def reduce_command(ctx, tol, quad_tol, filter, format, out, no_persist):
    form = _run_form(tol, quad_tol, filter, format, out, setting('SEMI_INFINITE_TOL'))
    if not form.validate():
        _flag_errors(ctx, form)
    override = form.tolerance.data if tol else None
    started_at = datetime.now()
    app.logger.info('reduce started (filter %s)', filter or '*')
    reports = reductions.check_all(form.filter.data or None, override, form.quad_tol.data)
    representation_tol = form.quad_tol.data if quad_tol else reductions.REPRESENTATION_QUAD_TOL
    reports += reductions.representation_formulas_check(representation_tol, form.filter.data or None)
    reports.sort(key=lambda report: report.id)
    _finish(ctx, 'reduce', form, override, reports, started_at, not no_persist)


@hyper.command('history')
@click.option('--limit', default=10, type=int, help='number of runs to list')
@click.option('--run', 'run_id', type=int, help='print the rows of one run')
@click.pass_context
def history_command(ctx, limit, run_id):
    db.create_all()
    if run_id is not None:
        run = db.session.get(VerificationRun, run_id)
        if run is None:
            click.echo('no run %d' % run_id, err=True)
            ctx.exit(2)
        click.echo(render_text([row.to_report() for row in run.rows], run.finished_at))
        return
    runs = VerificationRun.query.order_by(VerificationRun.id.desc()).limit(limit).all()
    if not runs:
        click.echo('no runs recorded')
    for run in runs:
        click.echo('%4d  %-7s %-24s %4d passed %4d failed  %s' % (
            run.id, run.command, run.filter or '*', run.passed, run.failed,
            format_datetime(run.started_at)))


# ----------------------------------------------------------------------------#
# Logging.
# ----------------------------------------------------------------------------#

if not app.debug:
    file_handler = FileHandler(setting('LOG_FILE'), delay=True)
    file_handler.setFormatter(
        Formatter('%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]')
    )
    app.logger.setLevel(logging.INFO)
    file_handler.setLevel(logging.INFO)
    app.logger.addHandler(file_handler)
    for name in LIBRARY_LOGGERS:
        logging.getLogger(name).setLevel(logging.INFO)
        logging.getLogger(name).addHandler(file_handler)

# ----------------------------------------------------------------------------#
# Launch.
# ----------------------------------------------------------------------------#

cli = FlaskGroup(create_app=lambda: app)

if __name__ == '__main__':
    cli()
