"""Polynomial expression parser and canonical printer.

Grammar: integer literals, rational literals `a/b`, variable names from the
ring, `^` with a nonnegative integer exponent, `*`, `+`, binary and unary `-`,
and parentheses.  Implicit multiplication is not allowed.  The canonical
printed form (terms in decreasing term order, explicit `*` and `^`) parses
back to the same polynomial.
"""

import re
from fractions import Fraction

from .errors import PolynomialSyntaxError
from .rings import Polynomial, unit_monomial

_TOKEN_RE = re.compile(
    r"""\s*(?:
        (?P<int>\d+)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<op>[-+*/^()])
    )""",
    re.VERBOSE,
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise PolynomialSyntaxError(
                "unexpected character %r" % stripped[0], len(text) - len(stripped)
            )
        if match.lastgroup == "int":
            tokens.append(("int", int(match.group("int")), match.start("int")))
        elif match.lastgroup == "name":
            tokens.append(("name", match.group("name"), match.start("name")))
        else:
            tokens.append(("op", match.group("op"), match.start("op")))
        pos = match.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, ring, text):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(message, tok[2])

    def parse(self):
        poly = self.expr()
        kind, value, _ = self.peek()
        if kind != "end":
            self.fail("unexpected %r" % (value,))
        return poly

    def expr(self):
        poly = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                poly = poly + rhs if value == "+" else poly - rhs
            else:
                return poly

    def term(self):
        poly = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                poly = poly * self.factor()
            else:
                return poly

    def factor(self):
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.advance()
            return -self.factor()
        return self.primary()

    def exponent(self):
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.fail("negative exponent")
        if kind != "int":
            self.fail("expected integer exponent")
        self.advance()
        return value

    def primary(self):
        kind, value, pos = self.advance()
        if kind == "int":
            nxt_kind, nxt_value, _ = self.peek()
            if nxt_kind == "op" and nxt_value == "/":
                self.advance()
                den_kind, den_value, den_pos = self.advance()
                if den_kind != "int":
                    raise PolynomialSyntaxError("expected integer denominator", den_pos)
                if den_value == 0:
                    raise PolynomialSyntaxError("zero denominator", den_pos)
                coeff = Fraction(value, den_value)
            else:
                coeff = Fraction(value)
            return Polynomial({unit_monomial(self.ring.num_vars): coeff})
        if kind == "name":
            if value not in self.ring._var_index:
                raise PolynomialSyntaxError("unknown identifier %r" % value, pos)
            poly = self.ring.variable(value)
            return self.maybe_power(poly)
        if kind == "op" and value == "(":
            poly = self.expr()
            close_kind, close_value, close_pos = self.advance()
            if not (close_kind == "op" and close_value == ")"):
                raise PolynomialSyntaxError("expected ')'", close_pos)
            return self.maybe_power(poly)
        self.fail("unexpected %s" % ("end of input" if kind == "end" else repr(value)),
                  (kind, value, pos))

    def maybe_power(self, poly):
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            e = self.exponent()
            result = Polynomial({unit_monomial(self.ring.num_vars): 1})
            for _ in range(e):
                result = result * poly
            return result
        return poly


def parse_polynomial(ring, text):
    """Parse text into a Polynomial over the given ring."""
    return _Parser(ring, text).parse()


def _monomial_string(ring, mono):
    parts = []
    for name, e in zip(ring.var_names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def polynomial_to_string(ring, poly):
    """Canonical text form: terms in decreasing term order, explicit * and ^."""
    if poly.is_zero:
        return "0"
    pieces = []
    for mono in sorted(poly.terms, key=ring.monomial_key, reverse=True):
        coeff = poly.terms[mono]
        sign = "-" if coeff < 0 else "+"
        mag = -coeff if coeff < 0 else coeff
        var_part = _monomial_string(ring, mono)
        if not var_part:
            body = str(mag)
        elif mag == 1:
            body = var_part
        else:
            body = "%s*%s" % (mag, var_part)
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += sign + body
    return text
