"""Nested multivariate polynomials R_0[U_1..U_s] and their content.

The coefficient ring R_0 is either a bare scalar domain (Q, F_p, Z) or a
polynomial ring over one in X-variables.  An R_0 element is a scalar when
there are no X-variables, otherwise a dict mapping X-exponent tuples to
scalars; a :class:`NestedPolynomial` maps U-exponent tuples to R_0 elements.
Both levels are kept canonical: zero coefficients are never stored, so two
values are equal exactly when their dicts are equal.

This module also owns the text grammar shared by the CLI and the test
fixtures: terms joined by ``+``/``-``, each an optional integer or rational
coefficient followed by ``*``-separated powers such as ``X1^2`` or ``U2^3``,
with aliases X,Y,Z for X1,X2,X3 and U,V,W for U1,U2,U3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainMismatch,
    LengthMismatch,
    NotHomogeneous,
    ParseError,
    RingMismatch,
)
from .scalars import ScalarDomain


def lex_less(a: tuple, b: tuple) -> bool:
    """Strict lexicographic comparison of exponent tuples (U_1 > U_2 > ...)."""
    if len(a) != len(b):
        raise LengthMismatch(f"exponent tuples of lengths {len(a)} and {len(b)}")
    return tuple(a) < tuple(b)


@dataclass(frozen=True)
class CoefficientRing:
    """R_0: ``base`` scalars when ``x_vars`` is 0, else base[X_1..X_m]."""

    base: ScalarDomain
    x_vars: int = 0

    # -- element construction -------------------------------------------------

    def zero(self):
        return {} if self.x_vars else self.base.zero()

    def one(self):
        if self.x_vars:
            return {(0,) * self.x_vars: self.base.one()}
        return self.base.one()

    def from_int(self, n: int):
        if self.x_vars:
            c = self.base.from_int(n)
            return {} if self.base.is_zero(c) else {(0,) * self.x_vars: c}
        return self.base.from_int(n)

    def monomial(self, scalar, exps: tuple = ()):
        """The element ``scalar * X^exps`` (exps ignored when x_vars is 0)."""
        scalar = self.base.normalize(scalar)
        if not self.x_vars:
            return scalar
        exps = tuple(exps) if exps else (0,) * self.x_vars
        if len(exps) != self.x_vars or any(e < 0 for e in exps):
            raise DomainMismatch(f"bad X-exponent tuple {exps}")
        return {} if self.base.is_zero(scalar) else {exps: scalar}

    def normalize(self, elem):
        if not self.x_vars:
            return self.base.normalize(elem)
        if not isinstance(elem, dict):
            raise DomainMismatch(f"{elem!r} is not a polynomial over {self.base}")
        out = {}
        for exps, c in elem.items():
            exps = tuple(exps)
            if len(exps) != self.x_vars or any(e < 0 for e in exps):
                raise DomainMismatch(f"bad X-exponent tuple {exps}")
            c = self.base.normalize(c)
            if not self.base.is_zero(c):
                out[exps] = c
        return out

    # -- arithmetic ------------------------------------------------------------

    def add(self, a, b):
        if not self.x_vars:
            return self.base.add(a, b)
        out = dict(a)
        for exps, c in b.items():
            acc = self.base.add(out.get(exps, self.base.zero()), c)
            if self.base.is_zero(acc):
                out.pop(exps, None)
            else:
                out[exps] = acc
        return out

    def neg(self, a):
        if not self.x_vars:
            return self.base.neg(a)
        return {exps: self.base.neg(c) for exps, c in a.items()}

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not self.x_vars:
            return self.base.mul(a, b)
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                acc = self.base.add(out.get(exps, self.base.zero()), self.base.mul(ca, cb))
                if self.base.is_zero(acc):
                    out.pop(exps, None)
                else:
                    out[exps] = acc
        return out

    def scalar_mul(self, scalar, a):
        if not self.x_vars:
            return self.base.mul(self.base.normalize(scalar), a)
        scalar = self.base.normalize(scalar)
        if self.base.is_zero(scalar):
            return {}
        return {exps: self.base.mul(scalar, c) for exps, c in a.items()}

    def is_zero(self, a) -> bool:
        return a == {} if self.x_vars else self.base.is_zero(a)

    def eq(self, a, b) -> bool:
        return a == b

    def is_unit(self, a) -> bool:
        if not self.x_vars:
            return self.base.is_unit(a)
        if len(a) != 1:
            return False
        ((exps, c),) = a.items()
        return all(e == 0 for e in exps) and self.base.is_unit(c)

    def exact_div(self, a, b):
        """Quotient a/b when b divides a exactly in this ring."""
        if not self.x_vars:
            return self.base.exact_div(a, b)
        if not b:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_b = max(b)
        coef_b = b[lead_b]
        quotient = {}
        rem = dict(a)
        while rem:
            lead_r = max(rem)
            t = tuple(x - y for x, y in zip(lead_r, lead_b))
            if any(e < 0 for e in t):
                raise DomainMismatch("inexact polynomial division")
            c = self.base.exact_div(rem[lead_r], coef_b)
            quotient[t] = c
            for eb, cb in b.items():
                exps = tuple(x + y for x, y in zip(t, eb))
                acc = self.base.sub(rem.get(exps, self.base.zero()), self.base.mul(c, cb))
                if self.base.is_zero(acc):
                    rem.pop(exps, None)
                else:
                    rem[exps] = acc
        return quotient

    # -- structure ---------------------------------------------------------------

    def homogeneous_x_degree(self, elem):
        """Total X-degree of a homogeneous element; None for zero.

        Raises NotHomogeneous when terms of different total degrees mix.
        For x_vars == 0 every nonzero scalar has degree 0.
        """
        if not self.x_vars:
            return None if self.base.is_zero(elem) else 0
        if not elem:
            return None
        degrees = {sum(exps) for exps in elem}
        if len(degrees) > 1:
            raise NotHomogeneous(f"mixed X-degrees {sorted(degrees)}")
        return degrees.pop()

    def canonical_key(self, elem):
        """Hashable form of an element, for dedup and dict keys."""
        if not self.x_vars:
            return elem
        return tuple(sorted(elem.items()))

    def to_str(self, elem) -> str:
        return format_coefficient(self, elem)

    def __str__(self):
        if not self.x_vars:
            return str(self.base)
        return f"{self.base}[{', '.join(x_var_name(i, self.x_vars) for i in range(self.x_vars))}]"


@dataclass(frozen=True)
class URing:
    """The ambient polynomial ring R_0[U_1..U_s]."""

    coeffs: CoefficientRing
    s: int

    def zero(self) -> "NestedPolynomial":
        return NestedPolynomial(self, {})

    def one(self) -> "NestedPolynomial":
        return NestedPolynomial(self, {(0,) * self.s: self.coeffs.one()})

    def term(self, coeff, u_exps) -> "NestedPolynomial":
        """The single-term polynomial ``coeff * U^u_exps``."""
        u_exps = tuple(u_exps)
        if len(u_exps) != self.s or any(e < 0 for e in u_exps):
            raise DomainMismatch(f"bad U-exponent tuple {u_exps}")
        coeff = self.coeffs.normalize(coeff)
        if self.coeffs.is_zero(coeff):
            return self.zero()
        return NestedPolynomial(self, {u_exps: coeff})

    def from_terms(self, pairs) -> "NestedPolynomial":
        acc = self.zero()
        for u_exps, coeff in pairs:
            acc = acc + self.term(coeff, u_exps)
        return acc

    def parse(self, text: str) -> "NestedPolynomial":
        return parse_polynomial(text, self)

    def __str__(self):
        return f"{self.coeffs}[{', '.join(u_var_name(i, self.s) for i in range(self.s))}]"


class NestedPolynomial:
    """Element of R_0[U_1..U_s], canonical term map, immutable by convention."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: URing, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def u_degree(self):
        """Common U-total degree; None for the zero polynomial."""
        if not self.terms:
            return None
        degrees = {sum(exps) for exps in self.terms}
        if len(degrees) > 1:
            raise NotHomogeneous(f"mixed U-degrees {sorted(degrees)}")
        return degrees.pop()

    def content(self) -> list:
        """Coefficients of the terms, deduplicated, in ascending U-term order."""
        ring = self.ring.coeffs
        seen = set()
        out = []
        for u_exps in sorted(self.terms):
            key = ring.canonical_key(self.terms[u_exps])
            if key not in seen:
                seen.add(key)
                out.append(self.terms[u_exps])
        return out

    def coefficient(self, u_exps):
        return self.terms.get(tuple(u_exps), self.ring.coeffs.zero())

    def scale(self, coeff) -> "NestedPolynomial":
        """Multiply by an R_0 element."""
        ring = self.ring.coeffs
        coeff = ring.normalize(coeff)
        out = {}
        for u_exps, c in self.terms.items():
            prod = ring.mul(coeff, c)
            if not ring.is_zero(prod):
                out[u_exps] = prod
        return NestedPolynomial(self.ring, out)

    # -- ring operations -----------------------------------------------------

    def _check_ring(self, other):
        if not isinstance(other, NestedPolynomial):
            raise RingMismatch(f"cannot combine polynomial with {other!r}")
        if other.ring != self.ring:
            raise RingMismatch(f"rings differ: {self.ring} vs {other.ring}")

    def __add__(self, other) -> "NestedPolynomial":
        self._check_ring(other)
        ring = self.ring.coeffs
        out = dict(self.terms)
        for u_exps, c in other.terms.items():
            acc = ring.add(out.get(u_exps, ring.zero()), c)
            if ring.is_zero(acc):
                out.pop(u_exps, None)
            else:
                out[u_exps] = acc
        return NestedPolynomial(self.ring, out)

    def __neg__(self) -> "NestedPolynomial":
        ring = self.ring.coeffs
        return NestedPolynomial(self.ring, {e: ring.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other) -> "NestedPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "NestedPolynomial":
        self._check_ring(other)
        ring = self.ring.coeffs
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                acc = ring.add(out.get(exps, ring.zero()), ring.mul(ca, cb))
                if ring.is_zero(acc):
                    out.pop(exps, None)
                else:
                    out[exps] = acc
        return NestedPolynomial(self.ring, out)

    def __pow__(self, n: int) -> "NestedPolynomial":
        if n < 0:
            raise DomainMismatch("negative power of a polynomial")
        acc = self.ring.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, NestedPolynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)}>"


@dataclass(frozen=True)
class GradedIdealInput:
    """Generators of a graded ideal; each must be nonzero and U-homogeneous."""

    generators: tuple

    def __post_init__(self):
        if not all(isinstance(g, NestedPolynomial) for g in self.generators):
            raise RingMismatch("generators must be nested polynomials")
        rings = {g.ring for g in self.generators}
        if len(rings) > 1:
            raise RingMismatch("generators built over different rings")
        for g in self.generators:
            if g.is_zero():
                raise NotHomogeneous("zero generator has no degree")
            g.u_degree()

    @property
    def ring(self) -> URing:
        return self.generators[0].ring

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def graded_ideal(*generators) -> GradedIdealInput:
    return GradedIdealInput(tuple(generators))


def content_ideal(ideal: GradedIdealInput) -> list:
    """Generators of the content ideal: all generator coefficients, deduped."""
    if len(ideal) == 0:
        return []
    ring = ideal.ring.coeffs
    seen = set()
    out = []
    for g in ideal:
        for c in g.content():
            key = ring.canonical_key(c)
            if key not in seen:
                seen.add(key)
                out.append(c)
    return out


# --------------------------------------------------------------------------
# Text grammar
# --------------------------------------------------------------------------

_X_ALIASES = {"X": 1, "Y": 2, "Z": 3}
_U_ALIASES = {"U": 1, "V": 2, "W": 3}

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)"
    r"|(?P<name>[XYZUVW]\d*)"
    r"|(?P<op>[\^*+\-]))"
)


def x_var_name(i: int, m: int) -> str:
    """Display name of the (0-based) i-th X-variable among m."""
    return "XYZ"[i] if m <= 3 else f"X{i + 1}"


def u_var_name(i: int, s: int) -> str:
    return "UVW"[i] if s <= 3 else f"U{i + 1}"


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = len(text) - len(stripped) + 1
            raise ParseError(f"unexpected character {stripped[0]!r}", column=col)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind) + 1))
        pos = match.end()
    return tokens


def _variable_index(name: str, column: int):
    """Resolve a variable token to ('x'|'u', 1-based index)."""
    letter, suffix = name[0], name[1:]
    if suffix:
        if letter not in ("X", "U"):
            raise ParseError(f"indexed variables must use X or U, got {name}", column)
        index = int(suffix)
        if index < 1:
            raise ParseError(f"variable index must be positive in {name}", column)
        return ("x" if letter == "X" else "u"), index
    if letter in _X_ALIASES:
        return "x", _X_ALIASES[letter]
    return "u", _U_ALIASES[letter]


def parse_terms(text: str) -> list:
    """Parse into a list of (sign, coefficient-string, x_exps, u_exps) tuples.

    Exponent maps are dicts from 1-based variable index to exponent; the
    caller validates indices against its ring.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial", column=1)
    terms = []
    i = 0
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise ParseError("dangling sign", column=tokens[-1][2])
        coeff = None
        x_exps: dict = {}
        u_exps: dict = {}
        expect_factor = True
        while i < len(tokens):
            kind, value, column = tokens[i]
            if kind == "op" and value in "+-":
                break
            if kind == "op" and value == "*":
                if expect_factor:
                    raise ParseError("misplaced '*'", column)
                expect_factor = True
                i += 1
                continue
            if kind == "op":
                raise ParseError(f"misplaced {value!r}", column)
            if not expect_factor:
                raise ParseError("missing '*' between factors", column)
            if kind == "number":
                if coeff is not None or x_exps or u_exps:
                    raise ParseError("coefficient must come first in a term", column)
                coeff = value
            else:
                side, index = _variable_index(value, column)
                exponent = 1
                if i + 1 < len(tokens) and tokens[i + 1][:2] == ("op", "^"):
                    if i + 2 >= len(tokens) or tokens[i + 2][0] != "number" or "/" in tokens[i + 2][1]:
                        col = tokens[i + 1][2]
                        raise ParseError("'^' must be followed by an integer", col)
                    exponent = int(tokens[i + 2][1])
                    i += 2
                exps = x_exps if side == "x" else u_exps
                exps[index] = exps.get(index, 0) + exponent
            expect_factor = False
            i += 1
        if expect_factor:
            raise ParseError("term ends with '*'", column=tokens[i - 1][2])
        terms.append((sign, coeff, x_exps, u_exps))
    return terms


def _scalar_from_string(base: ScalarDomain, sign: int, text: str | None, column: int):
    if text is None:
        return base.from_int(sign)
    if "/" in text:
        num, den = text.split("/")
        if base.kind == "integers":
            raise ParseError(f"rational coefficient {text} over Z", column)
        if base.kind == "rationals":
            value = Fraction(sign * int(num), int(den))
        else:
            den_elem = base.from_int(int(den))
            if base.is_zero(den_elem):
                raise ParseError(f"denominator of {text} vanishes mod {base.p}", column)
            value = base.mul(base.from_int(sign * int(num)), base.inv(den_elem))
        return value
    return base.from_int(sign * int(text))


def required_variable_counts(text: str) -> tuple[int, int]:
    """Smallest (m, s) able to host every variable mentioned in ``text``."""
    m = s = 0
    for _, _, x_exps, u_exps in parse_terms(text):
        if x_exps:
            m = max(m, max(x_exps))
        if u_exps:
            s = max(s, max(u_exps))
    return m, s


def parse_polynomial(text: str, ring: URing) -> NestedPolynomial:
    cring = ring.coeffs
    result = ring.zero()
    for sign, coeff_text, x_exps, u_exps in parse_terms(text):
        if x_exps and max(x_exps) > cring.x_vars:
            raise ParseError(
                f"X-variable index {max(x_exps)} exceeds ring with m={cring.x_vars}"
            )
        if u_exps and max(u_exps) > ring.s:
            raise ParseError(f"U-variable index {max(u_exps)} exceeds ring with s={ring.s}")
        scalar = _scalar_from_string(cring.base, sign, coeff_text, column=1)
        x_tuple = tuple(x_exps.get(i + 1, 0) for i in range(cring.x_vars))
        u_tuple = tuple(u_exps.get(i + 1, 0) for i in range(ring.s))
        result = result + ring.term(cring.monomial(scalar, x_tuple), u_tuple)
    return result


def parse_coefficient(text: str, cring: CoefficientRing):
    """Parse an R_0 element (no U-variables allowed)."""
    ring = URing(cring, 0)
    poly = parse_polynomial(text, ring)
    return poly.terms.get((), cring.zero())


def parse_ideal(text: str, ring: URing) -> GradedIdealInput:
    """Parse a list of generators separated by ',' or ';'."""
    chunks = [c for c in re.split(r"[,;]", text) if c.strip()]
    return GradedIdealInput(tuple(parse_polynomial(c, ring) for c in chunks))


def _term_pieces(base, scalar, x_exps, m, u_exps, s):
    names = [
        f"{x_var_name(i, m)}^{e}" if e > 1 else x_var_name(i, m)
        for i, e in enumerate(x_exps)
        if e
    ]
    names += [
        f"{u_var_name(i, s)}^{e}" if e > 1 else u_var_name(i, s)
        for i, e in enumerate(u_exps)
        if e
    ]
    if base.kind == "prime_field":
        sign = 1
        magnitude = scalar
    else:
        sign = -1 if scalar < 0 else 1
        magnitude = -scalar if scalar < 0 else scalar
    if not names:
        return sign, base.to_str(magnitude)
    body = "*".join(names)
    if base.eq(magnitude, base.one()):
        return sign, body
    return sign, f"{base.to_str(magnitude)}*{body}"


def _join_terms(pieces) -> str:
    if not pieces:
        return "0"
    sign, body = pieces[0]
    out = ("-" if sign < 0 else "") + body
    for sign, body in pieces[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out


def format_coefficient(cring: CoefficientRing, elem) -> str:
    """Render an R_0 element; X-terms in descending exponent order."""
    if not cring.x_vars:
        return cring.base.to_str(elem)
    pieces = [
        _term_pieces(cring.base, elem[exps], exps, cring.x_vars, (), 0)
        for exps in sorted(elem, reverse=True)
    ]
    return _join_terms(pieces)


def format_polynomial(poly: NestedPolynomial) -> str:
    """Render with U-terms ascending and X-terms descending within each."""
    ring = poly.ring
    cring = ring.coeffs
    pieces = []
    for u_exps in sorted(poly.terms):
        coeff = poly.terms[u_exps]
        if cring.x_vars:
            for x_exps in sorted(coeff, reverse=True):
                pieces.append(
                    _term_pieces(cring.base, coeff[x_exps], x_exps, cring.x_vars, u_exps, ring.s)
                )
        else:
            pieces.append(_term_pieces(cring.base, coeff, (), 0, u_exps, ring.s))
    return _join_terms(pieces)
