from fractions import Fraction

from wtforms import FloatField, Form, IntegerField, SelectField, StringField
from wtforms.validators import AnyOf, DataRequired, NumberRange, Optional, ValidationError

from quadrature import MIN_TOLERANCE

# tolerance/10 is rarely exact in binary.
RATIO_SLACK = 1 + 1e-9


def _real(text):
    text = text.strip()
    if '/' in text:
        return float(Fraction(text))
    return float(text)


def parse_complex(text):
    """'re' or 're,im'; real parts may be written as fractions like 1/3."""
    parts = text.split(',')
    if len(parts) > 2:
        raise ValueError('expected re or re,im, got %r' % text)
    try:
        values = [_real(part) for part in parts]
    except (ValueError, ZeroDivisionError):
        raise ValueError('%r is not a number' % text)
    return complex(*values)


def parse_complex_list(text):
    """';'-separated complexes, or ','-separated reals when there is no ';'."""
    if ';' in text:
        return tuple(parse_complex(part) for part in text.split(';'))
    return tuple(parse_complex(part) for part in text.split(','))


def validate_complex(self, field):
    if not field.data:
        return
    try:
        parse_complex(field.data)
    except ValueError:
        raise ValidationError('Error, %s must be in format re or re,im' % field.name)


def validate_complex_list(self, field):
    if not field.data:
        return
    try:
        parse_complex_list(field.data)
    except ValueError:
        raise ValidationError('Error, %s must be reals separated by , or complexes separated by ;'
                              % field.name)


def validate_positive(self, field):
    if field.data is not None and not field.data > 0:
        raise ValidationError('Error, %s must be positive' % field.name)


class EvalForm(Form):
    function = SelectField(
        'function', validators=[DataRequired(), AnyOf(['2f1', 'f1', 'fd'])],
        choices=[
            ('2f1', '2f1'),
            ('f1', 'f1'),
            ('fd', 'fd'),
        ]
    )
    side = SelectField(
        'side', default='below',
        choices=[
            ('above', 'above'),
            ('below', 'below'),
        ]
    )
    a = StringField(
        'a', validators=[DataRequired(), validate_complex]
    )
    b = StringField(
        'b', validators=[validate_complex]
    )
    bs = StringField(
        'bs', validators=[validate_complex_list]
    )
    c = StringField(
        'c', validators=[DataRequired(), validate_complex]
    )
    x = StringField(
        'x', validators=[validate_complex]
    )
    xs = StringField(
        'xs', validators=[validate_complex_list]
    )
    quad_tol = FloatField(
        'quad_tol', default=1e-11,
        validators=[NumberRange(min=MIN_TOLERANCE, max=1e-3)]
    )

    def validate(self, extra_validators=None):
        if not super().validate(extra_validators):
            return False
        if self.function.data == '2f1':
            required = [self.b, self.x]
        else:
            required = [self.bs, self.xs]
        missing = [field for field in required if not field.data]
        for field in missing:
            field.errors.append('Error, %s is required for %s' % (field.name, self.function.data))
        if missing:
            return False
        if self.function.data == '2f1':
            return True
        bs, xs = self.arguments()[1], self.arguments()[3]
        if len(bs) != len(xs):
            self.xs.errors.append('Error, got %d b parameters and %d arguments' % (len(bs), len(xs)))
            return False
        if self.function.data == 'f1' and len(xs) != 2:
            self.xs.errors.append('Error, f1 takes exactly two arguments')
            return False
        return True

    def arguments(self):
        """(a, bs, c, xs) of a validated form."""
        a, c = parse_complex(self.a.data), parse_complex(self.c.data)
        if self.function.data == '2f1':
            return a, (parse_complex(self.b.data),), c, (parse_complex(self.x.data),)
        return a, parse_complex_list(self.bs.data), c, parse_complex_list(self.xs.data)


class RunConfigForm(Form):
    tolerance = FloatField(
        'tolerance', validators=[DataRequired(), validate_positive]
    )
    quad_tol = FloatField(
        'quad_tol', validators=[DataRequired(), NumberRange(min=MIN_TOLERANCE)]
    )
    filter = StringField(
        'filter', validators=[Optional()]
    )
    format = SelectField(
        'format', default='text',
        choices=[
            ('text', 'text'),
            ('json', 'json'),
        ]
    )
    out = StringField(
        'out', validators=[Optional()]
    )
    threads = IntegerField(
        'threads', default=1,
        validators=[NumberRange(min=1)]
    )

    def validate_quad_tol(self, field):
        tolerance = self.tolerance.data
        # the quadrature floor is always allowed, however tight the tolerance
        limit = max(tolerance / 10 * RATIO_SLACK, MIN_TOLERANCE) if tolerance else None
        if limit and field.data is not None and field.data > limit:
            raise ValidationError('Error, quad_tol must be at most tolerance/10 or %g' % MIN_TOLERANCE)
