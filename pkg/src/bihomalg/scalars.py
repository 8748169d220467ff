"""Exact field arithmetic: rationals, prime fields F_p, and fraction fields
of multivariate polynomial rings over the rationals.

Rational functions are deliberately *not* kept in GCD-reduced form; equality
is decided by the cross-multiplied polynomial identity p1*q2 == p2*q1, which
stays exact without multivariate GCDs.  All integer arithmetic is arbitrary
precision (Python ints / Fraction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EvalSingular, FieldMismatch, IncompleteAssignment

RATIONAL = "rational"
PRIME = "prime"
RATIONAL_FUNCTION = "rational_function"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# A polynomial is a dict mapping exponent tuples (one slot per parameter,
# in FieldSpec order) to nonzero Fraction coefficients.  {} is the zero
# polynomial.

def _poly_add(p, q):
    out = dict(p)
    for mono, c in q.items():
        s = out.get(mono, Fraction(0)) + c
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)
    return out


def _poly_neg(p):
    return {mono: -c for mono, c in p.items()}


def _poly_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            mono = tuple(a + b for a, b in zip(m1, m2))
            s = out.get(mono, Fraction(0)) + c1 * c2
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return out


def _poly_eval(p, values):
    total = Fraction(0)
    for mono, c in p.items():
        term = c
        for exp, v in zip(mono, values):
            if exp:
                term *= v ** exp
        total += term
    return total


@dataclass(frozen=True)
class FieldSpec:
    """Names an exact field: Q, F_p, or Q(params)."""

    kind: str
    p: int | None = None
    params: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind == PRIME:
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"{self.p!r} is not prime")
        elif self.kind == RATIONAL_FUNCTION:
            if not self.params:
                raise ValueError("rational_function field needs parameters")
            if len(set(self.params)) != len(self.params):
                raise ValueError("parameter names must be distinct")
            for name in self.params:
                if not name.isidentifier():
                    raise ValueError(f"bad parameter name {name!r}")
        elif self.kind != RATIONAL:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational() -> "FieldSpec":
        return FieldSpec(RATIONAL)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec(PRIME, p=p)

    @staticmethod
    def rational_function(*params: str) -> "FieldSpec":
        return FieldSpec(RATIONAL_FUNCTION, params=tuple(params))

    # -- element builders --------------------------------------------------

    def zero(self) -> "Scalar":
        return self.from_fraction(Fraction(0))

    def one(self) -> "Scalar":
        return self.from_fraction(Fraction(1))

    def from_int(self, n: int) -> "Scalar":
        return self.from_fraction(Fraction(n))

    def from_fraction(self, q: Fraction) -> "Scalar":
        if self.kind == RATIONAL:
            return Scalar(self, Fraction(q))
        if self.kind == PRIME:
            num = q.numerator % self.p
            den = q.denominator % self.p
            if den == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            return Scalar(self, (num * pow(den, -1, self.p)) % self.p)
        zero = (0,) * len(self.params)
        num = {zero: Fraction(q)} if q else {}
        return Scalar(self, (num, {zero: Fraction(1)}))

    def parameter(self, name: str) -> "Scalar":
        if self.kind != RATIONAL_FUNCTION:
            raise ValueError("parameters only exist in rational_function fields")
        if name not in self.params:
            raise ValueError(f"unknown parameter {name!r}")
        i = self.params.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(self.params)))
        one = (0,) * len(self.params)
        return Scalar(self, ({mono: Fraction(1)}, {one: Fraction(1)}))

    def parse(self, text: str) -> "Scalar":
        return parse_scalar(self, text)


class Scalar:
    """An exact element of the field named by its FieldSpec.

    Immutable by convention; all arithmetic returns fresh values.  For
    rational_function fields the value is a (numerator, denominator) pair of
    sparse polynomials, not necessarily reduced.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        self.value = value

    # -- helpers -----------------------------------------------------------

    def _join(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar) or other.field != self.field:
            raise FieldMismatch(f"cannot combine {self!r} and {other!r}")

    def is_zero(self) -> bool:
        if self.field.kind == RATIONAL_FUNCTION:
            return not self.value[0]
        return self.value == 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        self._join(other)
        k = self.field.kind
        if k == RATIONAL:
            return Scalar(self.field, self.value + other.value)
        if k == PRIME:
            return Scalar(self.field, (self.value + other.value) % self.field.p)
        p1, q1 = self.value
        p2, q2 = other.value
        num = _poly_add(_poly_mul(p1, q2), _poly_mul(p2, q1))
        return Scalar(self.field, (num, _poly_mul(q1, q2)))

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        k = self.field.kind
        if k == RATIONAL:
            return Scalar(self.field, -self.value)
        if k == PRIME:
            return Scalar(self.field, (-self.value) % self.field.p)
        return Scalar(self.field, (_poly_neg(self.value[0]), self.value[1]))

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._join(other)
        k = self.field.kind
        if k == RATIONAL:
            return Scalar(self.field, self.value * other.value)
        if k == PRIME:
            return Scalar(self.field, (self.value * other.value) % self.field.p)
        p1, q1 = self.value
        p2, q2 = other.value
        return Scalar(self.field, (_poly_mul(p1, p2), _poly_mul(q1, q2)))

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        k = self.field.kind
        if k == RATIONAL:
            return Scalar(self.field, 1 / self.value)
        if k == PRIME:
            return Scalar(self.field, pow(self.value, -1, self.field.p))
        p, q = self.value
        return Scalar(self.field, (q, p))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar) or other.field != self.field:
            return NotImplemented
        if self.field.kind == RATIONAL_FUNCTION:
            p1, q1 = self.value
            p2, q2 = other.value
            return _poly_mul(p1, q2) == _poly_mul(p2, q1)
        return self.value == other.value

    def __hash__(self):
        raise TypeError("Scalar is unhashable (rational functions lack canonical form)")

    def __repr__(self):
        return f"Scalar({scalar_to_str(self)!r})"

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, assignment: dict[str, Fraction]) -> "Scalar":
        """Substitute rationals for all parameters, returning a Scalar over Q."""
        if self.field.kind != RATIONAL_FUNCTION:
            raise ValueError("evaluate only applies to rational_function scalars")
        values = []
        for name in self.field.params:
            if self._uses(name):
                if name not in assignment:
                    raise IncompleteAssignment(f"no value for parameter {name!r}")
            values.append(Fraction(assignment.get(name, 0)))
        num, den = self.value
        d = _poly_eval(den, values)
        if d == 0:
            raise EvalSingular("denominator evaluates to zero")
        return Scalar(FieldSpec.rational(), _poly_eval(num, values) / d)

    def _uses(self, name: str) -> bool:
        i = self.field.params.index(name)
        num, den = self.value
        return any(m[i] for m in num) or any(m[i] for m in den)


def scalar_eq(x: Scalar, y: Scalar) -> bool:
    """Exact field equality; cross-multiplied for rational functions."""
    x._join(y)
    return x == y


def arith(op: str, x: Scalar, y: Scalar | None = None) -> Scalar:
    """Dispatch-style arithmetic entry point (add/sub/mul/neg/inv)."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Literal grammar: integers, p/q rationals, parameter identifiers, + - * / ( )
# ---------------------------------------------------------------------------

def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j]))
            i = j
        elif c in "+-*/()":
            tokens.append((c, c))
            i += 1
        else:
            raise ValueError(f"bad character {c!r} in scalar literal at {i}")
    tokens.append(("end", ""))
    return tokens


class _Parser:
    def __init__(self, field: FieldSpec, tokens):
        self.field = field
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> Scalar:
        value = self.term()
        while self.peek() in "+-":
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Scalar:
        value = self.factor()
        while self.peek() in "*/":
            op = self.take()[0]
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self) -> Scalar:
        if self.peek() == "-":
            self.take()
            return -self.factor()
        if self.peek() == "+":
            self.take()
            return self.factor()
        kind, text = self.take()
        if kind == "int":
            return self.field.from_int(int(text))
        if kind == "ident":
            return self.field.parameter(text)
        if kind == "(":
            value = self.expr()
            if self.take()[0] != ")":
                raise ValueError("unbalanced parentheses in scalar literal")
            return value
        raise ValueError(f"unexpected token {text!r} in scalar literal")


def parse_scalar(field: FieldSpec, text: str) -> Scalar:
    parser = _Parser(field, _tokenize(text))
    value = parser.expr()
    if parser.peek() != "end":
        raise ValueError(f"trailing garbage in scalar literal {text!r}")
    return value


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _poly_str(p, params) -> str:
    if not p:
        return "0"
    parts = []
    for mono in sorted(p, reverse=True):
        c = p[mono]
        factors = []
        for exp, name in zip(mono, params):
            factors.extend([name] * exp)  # grammar has no '^'
        if not factors:
            parts.append(_frac_str(c))
        elif c == 1:
            parts.append("*".join(factors))
        elif c == -1:
            parts.append("-" + "*".join(factors))
        else:
            parts.append(_frac_str(c) + "*" + "*".join(factors))
    out = parts[0]
    for part in parts[1:]:
        out += part if part.startswith("-") else "+" + part
    return out


def scalar_to_str(x: Scalar) -> str:
    """Serialize back into the literal grammar (round-trips through parse)."""
    if x.field.kind == RATIONAL:
        return _frac_str(x.value)
    if x.field.kind == PRIME:
        return str(x.value)
    num, den = x.value
    num_s = _poly_str(num, x.field.params)
    one = (0,) * len(x.field.params)
    if den == {one: Fraction(1)}:
        return f"({num_s})" if ("+" in num_s[1:] or "-" in num_s[1:]) else num_s
    return f"({num_s})/({_poly_str(den, x.field.params)})"
