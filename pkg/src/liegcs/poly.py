"""Sparse multivariate polynomials over the rationals.

Monomials are stored as sorted tuples of (variable name, exponent) pairs
mapping to Fraction coefficients; zero coefficients are never stored, so
equality is structural.  The canonical string form sorts terms by graded
lexicographic order ("1 + a33^2 + a13*a31") and round-trips through
:func:`parse_poly`.

The same grammar doubles as the coefficient-expression language of the
algebra/structure JSON files: rational literals, names, + - * / ^ and
parentheses.  Division is only allowed by subexpressions that evaluate to
a nonzero constant.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<op>[()+\-*/^]))")


class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        t: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    t[mono] = c
        self.terms = t

    # -- constructors -------------------------------------------------
    @staticmethod
    def constant(c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial({(): c} if c else {})

    @staticmethod
    def var(name: str) -> "Polynomial":
        return Polynomial({((name, 1),): Fraction(1)})

    @staticmethod
    def of(x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        return Polynomial.constant(x)

    # -- queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((), Fraction(0))

    def variables(self) -> set:
        return {name for mono in self.terms for name, _ in mono}

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Polynomial.constant(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        o = Polynomial.of(other)
        t = dict(self.terms)
        for mono, c in o.terms.items():
            s = t.get(mono, Fraction(0)) + c
            if s:
                t[mono] = s
            else:
                t.pop(mono, None)
        return Polynomial(t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Polynomial.of(other))

    def __rsub__(self, other):
        return Polynomial.of(other) + (-self)

    def __mul__(self, other):
        o = Polynomial.of(other)
        t: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                s = t.get(m, Fraction(0)) + c1 * c2
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        return Polynomial(t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitution ----------------------------------------------------
    def subs(self, assignment: Mapping[str, Union[Fraction, int, "Polynomial"]]) -> "Polynomial":
        """Exact substitution of a subset of the variables."""
        if not assignment:
            return self
        out = Polynomial()
        for mono, c in self.terms.items():
            term = Polynomial.constant(c)
            for name, e in mono:
                if name in assignment:
                    term = term * (Polynomial.of(assignment[name]) ** e)
                else:
                    term = term * Polynomial({((name, e),): Fraction(1)})
            out = out + term
        return out

    def eval_full(self, assignment: Mapping[str, Fraction]) -> Fraction:
        """Substitute every variable and return the resulting constant."""
        return self.subs(assignment).constant_value()

    # -- display ---------------------------------------------------------
    def _sorted_terms(self):
        universe = sorted(self.variables())

        def key(item):
            mono, _ = item
            d = dict(mono)
            return (sum(e for _, e in mono),
                    tuple(d.get(v, 0) for v in universe))
        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self._sorted_terms():
            factors = [f"{n}^{e}" if e > 1 else n for n, e in mono]
            if not factors:
                body = str(abs(c))
            else:
                body = "*".join(factors)
                if abs(c) != 1:
                    body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    __repr__ = __str__


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    d: Dict[str, int] = {}
    for n, e in a:
        d[n] = d.get(n, 0) + e
    for n, e in b:
        d[n] = d.get(n, 0) + e
    return tuple(sorted((n, e) for n, e in d.items() if e))


ZERO = Polynomial()
ONE = Polynomial.constant(1)


def poly_eval(p: Polynomial, assignment: Mapping[str, Union[Fraction, int, Polynomial]]) -> Polynomial:
    """Substitution entry point; full assignments collapse to constants."""
    return p.subs(assignment)


# ---------------------------------------------------------------------------
# expression parsing
# ---------------------------------------------------------------------------

class ExprError(ValueError):
    pass


class _Parser:
    """Recursive-descent parser for coefficient expressions.

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | base ('^' nat)?
    base   := rational | name | '(' expr ')'
    """

    def __init__(self, text: str, env: Mapping[str, Union[Fraction, int, Polynomial]] | None = None):
        self.env = {k: Polynomial.of(v) for k, v in (env or {}).items()}
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise ExprError(f"bad token at {text[pos:]!r}")
                break
            pos = m.end()
            if m.group("num"):
                self.tokens.append(("num", Fraction(m.group("num"))))
            elif m.group("name"):
                self.tokens.append(("name", m.group("name")))
            else:
                self.tokens.append(("op", m.group("op")))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.i != len(self.tokens):
            raise ExprError(f"trailing tokens after expression: {self.tokens[self.i:]}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.next()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek() == ("op", "*") or self.peek() == ("op", "/"):
            _, op = self.next()
            q = self.factor()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    raise ExprError("division only by nonzero constants "
                                    f"(got divisor {q})")
                p = p * Polynomial.constant(1 / q.constant_value())
        return p

    def factor(self) -> Polynomial:
        kind, val = self.peek()
        if (kind, val) == ("op", "-"):
            self.next()
            return -self.factor()
        p = self.base()
        if self.peek() == ("op", "^"):
            self.next()
            kind, val = self.next()
            if kind != "num" or val.denominator != 1 or val < 0:
                raise ExprError("exponent must be a nonnegative integer")
            p = p ** int(val)
        return p

    def base(self) -> Polynomial:
        kind, val = self.next()
        if kind == "num":
            return Polynomial.constant(val)
        if kind == "name":
            if val in self.env:
                return self.env[val]
            return Polynomial.var(val)
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.next() != ("op", ")"):
                raise ExprError("missing closing parenthesis")
            return p
        raise ExprError(f"unexpected token {val!r}")


def parse_poly(text: str) -> Polynomial:
    """Parse an expression string into a Polynomial."""
    return _Parser(text).parse()


def parse_expr(text: str, params: Mapping[str, Union[Fraction, int, Polynomial]] | None = None,
               allowed: Iterable[str] | None = None):
    """Parse a coefficient expression, substituting parameters as it goes.

    With a full rational parameter assignment the result is a Fraction;
    otherwise it stays a Polynomial in the unassigned names.  ``allowed``
    restricts which free variable names may remain after substitution.
    Division works whenever the divisor evaluates to a nonzero constant
    under the given parameters.
    """
    p = _Parser(text, env=params).parse()
    if allowed is not None:
        extra = p.variables() - set(allowed)
        if extra:
            raise ExprError(f"unknown names in expression {text!r}: {sorted(extra)}")
    if p.is_constant():
        return p.constant_value()
    return p
