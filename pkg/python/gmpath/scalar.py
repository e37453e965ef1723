"""Exact arithmetic in Q and the cyclotomic fields Q(zeta_N).

Elements are stored on the power basis 1, z, ..., z^(phi(N)-1) modulo the
N-th cyclotomic polynomial, with :class:`fractions.Fraction` coefficients.
Values of different conductors are combined by lifting both to the lcm.

Text syntax (used by every input file format)::

    3/4            rational
    z5^2           zeta_5 squared (``z5`` alone is zeta_5)
    1/2 + z3^2     sums and differences
    -2*z8^3        products
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from sympy import Symbol, cyclotomic_poly, divisors, totient

from .errors import ParseError

Scalar = Union[int, Fraction, "Cyclotomic"]

_X = Symbol("x")


@dataclass(frozen=True)
class _FieldData:
    conductor: int
    degree: int
    powers: tuple[tuple[Fraction, ...], ...]  # z^e reduced, for 0 <= e < conductor


@lru_cache(maxsize=None)
def _field(n: int) -> _FieldData:
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    phi = [int(c) for c in reversed(cyclotomic_poly(n, _X, polys=True).all_coeffs())]
    d = len(phi) - 1
    assert d == int(totient(n))
    powers: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * d
    cur[0] = Fraction(1)
    for _ in range(n):
        powers.append(tuple(cur))
        # multiply by z, then reduce z^d = -(phi_0 + ... + phi_{d-1} z^{d-1})
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for k in range(d):
                cur[k] -= top * phi[k]
    return _FieldData(n, d, tuple(powers))


def field_degree(n: int) -> int:
    return _field(n).degree


class Cyclotomic:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, coeffs: Iterable[Scalar] | Scalar = 0, conductor: int = 1):
        data = _field(conductor)
        if isinstance(coeffs, (int, Fraction)):
            vals = [Fraction(coeffs)]
        else:
            vals = [Fraction(c) for c in coeffs]
        if len(vals) > data.degree:
            out = [Fraction(0)] * data.degree
            for e, c in enumerate(vals):
                if c:
                    for k, v in enumerate(data.powers[e % conductor]):
                        if v:
                            out[k] += c * v
            vals = out
        else:
            vals = vals + [Fraction(0)] * (data.degree - len(vals))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # construction helpers

    @classmethod
    def coerce(cls, value: Scalar, conductor: int = 1) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value if value.conductor == conductor else value.lift(math.lcm(value.conductor, conductor))
        return cls(value, conductor)

    def lift(self, conductor: int) -> "Cyclotomic":
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"cannot embed Q(z{self.conductor}) into Q(z{conductor})")
        step = conductor // self.conductor
        data = _field(conductor)
        out = [Fraction(0)] * data.degree
        for e, c in enumerate(self.coeffs):
            if c:
                for k, v in enumerate(data.powers[(e * step) % conductor]):
                    if v:
                        out[k] += c * v
        return Cyclotomic(out, conductor)

    def _align(self, other: Scalar) -> tuple["Cyclotomic", "Cyclotomic"]:
        if not isinstance(other, Cyclotomic):
            return self, Cyclotomic(other, self.conductor)
        if other.conductor == self.conductor:
            return self, other
        n = math.lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    # predicates

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # arithmetic

    def __add__(self, other: Scalar) -> "Cyclotomic":
        if not isinstance(other, (int, Fraction, Cyclotomic)):
            return NotImplemented
        a, b = self._align(other)
        return Cyclotomic([x + y for x, y in zip(a.coeffs, b.coeffs)], a.conductor)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic([-x for x in self.coeffs], self.conductor)

    def __sub__(self, other: Scalar) -> "Cyclotomic":
        if not isinstance(other, (int, Fraction, Cyclotomic)):
            return NotImplemented
        a, b = self._align(other)
        return Cyclotomic([x - y for x, y in zip(a.coeffs, b.coeffs)], a.conductor)

    def __rsub__(self, other: Scalar) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            return Cyclotomic([x * other for x in self.coeffs], self.conductor)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._align(other)
        if a.conductor == 1:
            return Cyclotomic(a.coeffs[0] * b.coeffs[0])
        raw = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        raw[i + j] += x * y
        return Cyclotomic(raw, a.conductor)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.conductor == 1:
            return Cyclotomic(1 / self.coeffs[0])
        from .linalg import solve

        d = len(self.coeffs)
        # column k of the multiplication matrix is self * z^k
        cols = [(self * zeta(self.conductor, k)).coeffs for k in range(d)]
        rows = [{k: cols[k][r] for k in range(d) if cols[k][r]} for r in range(d)]
        sol = solve(rows, d, {0: Fraction(1)})
        assert sol is not None
        return Cyclotomic([sol.get(k, Fraction(0)) for k in range(d)], self.conductor)

    def __truediv__(self, other: Scalar) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic([x / other for x in self.coeffs], self.conductor)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "Cyclotomic":
        return Cyclotomic.coerce(other, self.conductor) * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic(1, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._align(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # rational values hash like Fraction; otherwise hash is per conductor
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    # text

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Cyclotomic({format_scalar(self)!r})"


def zeta(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k in Q(zeta_n)."""
    data = _field(n)
    return Cyclotomic(data.powers[k % n], n)


ONE = Cyclotomic(1)
ZERO = Cyclotomic(0)


def primitive_root_order(a: Scalar) -> int | None:
    """Return m if ``a`` is a primitive m-th root of unity, otherwise None."""
    a = Cyclotomic.coerce(a)
    if a.is_zero():
        return None
    # roots of unity in Q(zeta_N) have order dividing lcm(2, N)
    bound = math.lcm(2, a.conductor)
    if a**bound != 1:
        return None
    for m in divisors(bound):
        if a**m == 1:
            return int(m)
    return None


def common_conductor(values: Iterable[Scalar]) -> int:
    n = 1
    for v in values:
        if isinstance(v, Cyclotomic):
            n = math.lcm(n, v.conductor)
    return n


def format_scalar(a: Scalar) -> str:
    if not isinstance(a, Cyclotomic):
        return str(Fraction(a))
    parts: list[str] = []
    for e, c in enumerate(a.coeffs):
        if not c:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            unit = f"z{a.conductor}" if e == 1 else f"z{a.conductor}^{e}"
            body = unit if abs(c) == 1 else f"{abs(c)}*{unit}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


_TOKEN = re.compile(r"\s*(?:(?P<zeta>z(?P<n>\d+)(?:\^(?P<k>-?\d+))?)|(?P<num>\d+(?:/\d+)?)|(?P<op>[-+*()]))")


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad scalar syntax near {text[pos:]!r}")
        tokens.append(m.group(0).strip())
        pos = m.end()
    return tokens


class _ScalarParser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of scalar")
        self.pos += 1
        return tok

    def expr(self) -> Cyclotomic:
        sign = 1
        if self.peek() in ("-", "+"):
            sign = -1 if self.take() == "-" else 1
        value = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Cyclotomic:
        value = self.factor()
        while self.peek() == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> Cyclotomic:
        tok = self.take()
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ParseError("unbalanced parenthesis in scalar")
            return value
        if tok == "-":
            return -self.factor()
        m = re.fullmatch(r"z(\d+)(?:\^(-?\d+))?", tok)
        if m:
            n = int(m.group(1))
            if n < 1:
                raise ParseError(f"bad root of unity {tok!r}")
            return zeta(n, int(m.group(2) or 1))
        if re.fullmatch(r"\d+(?:/\d+)?", tok):
            try:
                return Cyclotomic(Fraction(tok))
            except ZeroDivisionError:
                raise ParseError(f"zero denominator in {tok!r}") from None
        raise ParseError(f"unexpected token {tok!r} in scalar")


def parse_scalar(text: str, conductor: int = 1) -> Cyclotomic:
    """Parse scalar syntax; the result is lifted to at least ``conductor``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty scalar")
    parser = _ScalarParser(tokens)
    value = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input in scalar {text!r}")
    return value.lift(math.lcm(value.conductor, conductor))


def split_terms(text: str) -> list[str]:
    """Split a linear combination at top-level ``+``/``-`` signs.

    Signs inside parentheses or brackets and signs directly after ``*``, ``^``
    or ``(`` stay with their term. Each returned term carries its sign.
    """
    terms: list[str] = []
    depth = 0
    start = 0
    prev = ""
    for pos, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch in "+-" and depth == 0 and pos > 0 and prev not in "*^(+-":
            chunk = text[start:pos].strip()
            if chunk:
                terms.append(chunk)
            start = pos
        if not ch.isspace():
            prev = ch
    chunk = text[start:].strip()
    if chunk:
        terms.append(chunk)
    return terms


def parse_combination(text: str, conductor: int = 1) -> list[tuple[Cyclotomic, str]]:
    """Parse ``coeff * atom + ...`` into (coefficient, atom) pairs.

    A bare atom has coefficient 1; ``-atom`` has coefficient -1. ``0`` parses
    to the empty combination.
    """
    text = text.strip()
    if text in ("", "0"):
        return []
    out: list[tuple[Cyclotomic, str]] = []
    for term in split_terms(text):
        sign = 1
        body = term
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:].strip()
        if "*" in body:
            head, atom = body.rsplit("*", 1)
            head = head.strip()
            if head.startswith("(") and head.endswith(")"):
                head = head[1:-1]
            coeff = parse_scalar(head, conductor)
        else:
            atom = body
            coeff = Cyclotomic(1, conductor)
        atom = atom.strip()
        if not atom:
            raise ParseError(f"missing atom in term {term!r}")
        out.append((coeff * sign, atom))
    return out
