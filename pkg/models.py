import math

from flask_sqlalchemy import SQLAlchemy

from identities import EvalReport, Status

db = SQLAlchemy()


def _stored(value):
    # sqlite keeps NaN as NULL
    return math.nan if value is None else value


class VerificationRun(db.Model):
    __tablename__ = 'runs'

    id = db.Column(db.Integer, primary_key=True)
    command = db.Column(db.String(20), nullable=False)
    filter = db.Column(db.String(250), nullable=True)
    tolerance = db.Column(db.Float, nullable=True)
    quad_tol = db.Column(db.Float, nullable=False)
    started_at = db.Column(db.DateTime, nullable=False)
    finished_at = db.Column(db.DateTime, nullable=False)
    passed = db.Column(db.Integer, default=0)
    failed = db.Column(db.Integer, default=0)
    rows = db.relationship('ReportRow', backref='run', lazy=True, cascade='all, delete-orphan')


class ReportRow(db.Model):
    __tablename__ = 'report_rows'

    id = db.Column(db.Integer, primary_key=True)
    run_id = db.Column(db.Integer, db.ForeignKey('runs.id'), nullable=False)
    record_id = db.Column(db.String(120), nullable=False)
    anchor = db.Column(db.String(500), nullable=False)
    lhs_re = db.Column(db.Float)
    lhs_im = db.Column(db.Float)
    rhs_re = db.Column(db.Float)
    rhs_im = db.Column(db.Float)
    abs_err = db.Column(db.Float)
    rel_err = db.Column(db.Float)
    status = db.Column(db.String(20), nullable=False)
    elapsed_ms = db.Column(db.Float)
    note = db.Column(db.String(500), nullable=True)

    @classmethod
    def from_report(cls, report):
        return cls(
            record_id=report.id,
            anchor=report.anchor,
            lhs_re=report.lhs.real,
            lhs_im=report.lhs.imag,
            rhs_re=report.rhs.real,
            rhs_im=report.rhs.imag,
            abs_err=report.abs_err,
            rel_err=report.rel_err,
            status=report.status.value,
            elapsed_ms=report.elapsed * 1000.0,
            note=report.note,
        )

    def to_report(self):
        return EvalReport(
            id=self.record_id,
            anchor=self.anchor,
            lhs=complex(_stored(self.lhs_re), _stored(self.lhs_im)),
            rhs=complex(_stored(self.rhs_re), _stored(self.rhs_im)),
            abs_err=_stored(self.abs_err),
            rel_err=_stored(self.rel_err),
            status=Status(self.status),
            elapsed=self.elapsed_ms / 1000.0,
            note=self.note,
        )
