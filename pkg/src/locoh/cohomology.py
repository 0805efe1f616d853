"""Driver layer: Hilbert tables, vanishing, closed forms, and comparisons.

Everything here reduces to the presentation matrices of the degree components
and to exact rank computations: dimensions over a field come from the strand
engine, lengths over Z from Smith normal form, and vanishing is decided twice
(once from the cokernel, once from the content ideal) with any disagreement
treated as an internal bug, never as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .errors import (
    DegreeTooSmall,
    InsufficientData,
    NotAField,
    NotFiniteLength,
    OutOfRange,
    RouteDisagreement,
    TheoremViolation,
)
from .groebner import buchberger, is_cofinite, is_unit_ideal, quotient_dimension
from .linalg import ExactMatrix, rank, smith_normal_form
from .multipoly import (
    CoefficientRing,
    GradedIdealInput,
    URing,
    content_ideal,
    u_var_name,
)
from .presentation import presentation_matrix
from .scalars import ZZ, ScalarDomain
from .strand import StrandReport, coker_dimension, coker_is_zero, from_presentation


@dataclass(frozen=True)
class CohomologyQuery:
    """A ring R = R_0[U_1..U_s]/I together with a degree window."""

    ideal: GradedIdealInput
    s: int
    d_min: int
    d_max: int

    def __post_init__(self):
        if self.ideal.ring.s != self.s:
            raise OutOfRange(f"ideal lives in s={self.ideal.ring.s}, not {self.s}")
        if self.d_min < self.s:
            raise DegreeTooSmall(f"d_min {self.d_min} < s {self.s}")
        if self.d_max < self.d_min:
            raise OutOfRange(f"empty degree range [{self.d_min}, {self.d_max}]")

    @property
    def coefficients(self) -> CoefficientRing:
        return self.ideal.ring.coeffs

    def degrees(self):
        return range(self.d_min, self.d_max + 1)


@dataclass(frozen=True)
class HilbertRow:
    d: int
    value: int | None
    detail: object  # StrandReport | dict | None
    note: str | None = None

    @property
    def vanishes(self) -> bool:
        return self.value == 0

    def stabilized_at(self):
        return self.detail.stabilized_at if isinstance(self.detail, StrandReport) else None


@dataclass(frozen=True)
class HilbertTable:
    query: CohomologyQuery
    rows: tuple

    @property
    def values(self) -> list:
        return [row.value for row in self.rows]

    @property
    def any_not_finite(self) -> bool:
        return any(row.value is None for row in self.rows)

    def consecutive_pairs(self) -> list:
        return [(row.d, row.value) for row in self.rows]


def _omega(n: int) -> int:
    """Number of prime factors with multiplicity."""
    n = abs(n)
    count = 0
    p = 2
    while p * p <= n:
        while n % p == 0:
            count += 1
            n //= p
        p += 1 if p == 2 else 2
    return count + (1 if n > 1 else 0)


def _prime_factors(n: int) -> set:
    n = abs(n)
    out = set()
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.add(n)
    return out


def _top_detail(ideal: GradedIdealInput, s: int, d: int, ceiling: int | None = None):
    """(value, detail) for one degree; raises NotFiniteLength when infinite."""
    cring = ideal.ring.coeffs
    pm = presentation_matrix(ideal, s, d)
    if cring.x_vars == 0:
        scalar_matrix = ExactMatrix(cring.base, pm.matrix.rows)
        if cring.base.is_field:
            image = rank(scalar_matrix)
            return pm.nrows - image, {"rank": image, "rows": pm.nrows}
        invariants = smith_normal_form(scalar_matrix)
        free_rank = sum(1 for v in invariants if v == 0)
        if free_rank:
            raise NotFiniteLength(
                f"cokernel has free rank {free_rank} over Z at d={d}",
                partial={"invariants": invariants},
            )
        return sum(_omega(v) for v in invariants if v > 1), {"invariants": invariants}
    if not cring.base.is_field:
        raise NotAField("polynomial coefficients need a field base for dimensions")
    content = content_ideal(ideal)
    if not is_cofinite(content, cring):
        raise NotFiniteLength(
            "content ideal ("
            + ", ".join(cring.to_str(c) for c in content)
            + ") is not cofinite, so every component has infinite length"
        )
    report = coker_dimension(from_presentation(pm), ceiling)
    return report.total_dim, report


def top_dimension(query: CohomologyQuery, d: int, ceiling: int | None = None) -> int:
    """Length (dimension) of the degree -d component of top local cohomology."""
    value, _ = _top_detail(query.ideal, query.s, d, ceiling)
    return value


def hilbert_table(query: CohomologyQuery, ceiling: int | None = None) -> HilbertTable:
    """Per-degree values over the query window; infinite rows are flagged."""
    rows = []
    for d in query.degrees():
        try:
            value, detail = _top_detail(query.ideal, query.s, d, ceiling)
            rows.append(HilbertRow(d, value, detail))
        except NotFiniteLength as exc:
            rows.append(HilbertRow(d, None, exc.partial, note=exc.diagnosis))
    return HilbertTable(query, tuple(rows))


def content_is_unit(ideal: GradedIdealInput) -> bool:
    ring = ideal.ring.coeffs
    return is_unit_ideal(content_ideal(ideal), ring)


def _coker_vanishes(ideal: GradedIdealInput, s: int, d: int) -> bool:
    """Vanishing decided from the presentation matrix alone."""
    cring = ideal.ring.coeffs
    pm = presentation_matrix(ideal, s, d)
    if cring.x_vars == 0:
        scalar_matrix = ExactMatrix(cring.base, pm.matrix.rows)
        if cring.base.is_field:
            return rank(scalar_matrix) == pm.nrows
        return all(v == 1 for v in smith_normal_form(scalar_matrix))
    if not cring.base.is_field:
        raise NotAField("polynomial coefficients need a field base")
    return coker_is_zero(from_presentation(pm))


def vanishes(query: CohomologyQuery, d: int) -> bool:
    """Whether the degree -d component vanishes, checked by two routes.

    Route A reads the cokernel of the presentation matrix; route B asks
    whether the content ideal is the unit ideal.  They must agree.
    """
    route_a = _coker_vanishes(query.ideal, query.s, d)
    route_b = content_is_unit(query.ideal)
    if route_a != route_b:
        raise RouteDisagreement(
            f"d={d}: cokernel route says {route_a}, content route says {route_b}"
        )
    return route_a


def gap_free_check(query: CohomologyQuery) -> str:
    """Classify the window as AllVanish or NoneVanish, verifying uniformity."""
    expected = content_is_unit(query.ideal)
    for d in query.degrees():
        if vanishes(query, d) != expected:
            raise TheoremViolation(f"gap at d={d}: vanishing is not uniform over the window")
    return "AllVanish" if expected else "NoneVanish"


@dataclass(frozen=True)
class TopComponentReport:
    """R_0/content(I), which the degree -s component realizes."""

    content: tuple
    dimension: int | None  # None means infinite length
    description: str


def top_component_at_s(query: CohomologyQuery, ceiling: int | None = None) -> TopComponentReport:
    """Describe R_0/content(I) and check it against the engine at d = s."""
    ideal = query.ideal
    cring = ideal.ring.coeffs
    content = content_ideal(ideal)
    if cring.x_vars == 0:
        if cring.base.is_field:
            dimension = 0 if content else 1
        else:
            g = 0
            for x in content:
                g = gcd(g, int(x))
            dimension = None if g == 0 else _omega(g)
    else:
        if not cring.base.is_field:
            raise NotAField("polynomial coefficients need a field base")
        gb = buchberger(content, cring)
        dimension = quotient_dimension(gb, cring) if is_cofinite(gb, cring) else None

    try:
        engine_value = top_dimension(query, query.s, ceiling)
    except NotFiniteLength:
        engine_value = None
    if engine_value != dimension:
        raise TheoremViolation(
            f"dim R_0/content = {dimension} but the engine reports {engine_value} at d={query.s}"
        )
    shown = ", ".join(cring.to_str(c) for c in content) if content else "0"
    size = "infinite" if dimension is None else str(dimension)
    return TopComponentReport(tuple(content), dimension, f"R_0/({shown}) of length {size}")


def pi_set(n: int) -> set:
    """Primes dividing some binomial coefficient C(n, i) with 1 <= i <= n."""
    if n < 0:
        raise OutOfRange(f"pi_set of negative {n}")
    primes = set()
    for i in range(1, n + 1):
        primes |= _prime_factors(comb(n, i))
    return primes


def h0_closed(d: int) -> int:
    """Closed form d(d-1)^2(d-2)/12 for the characteristic-0 Singh values."""
    if d < 3:
        raise OutOfRange(f"closed form needs d >= 3, got {d}")
    value = d * (d - 1) ** 2 * (d - 2)
    assert value % 12 == 0
    return value // 12


def h2_closed(d: int) -> int:
    """Oscillating closed form: d^2 when 4 | d, else d^2 - 1."""
    if d < 2:
        raise OutOfRange(f"closed form needs d >= 2, got {d}")
    return d * d if d % 4 == 0 else d * d - 1


def tridiag_det(n: int) -> int:
    """Determinant of the n-th tridiagonal comparison matrix by recurrence."""
    if n < 1:
        raise OutOfRange(f"tridiagonal size must be positive, got {n}")
    if n <= 2:
        return 2
    prev2, prev1 = 2, 2
    for _ in range(n - 2):
        prev2, prev1 = prev1, 2 * prev1 - 2 * prev2
    return prev1


def tridiag_matrix(n: int, domain: ScalarDomain = ZZ) -> ExactMatrix:
    """The n x n tridiagonal matrix with subdiagonal 2, diagonal 2, superdiagonal 1."""
    if n < 1:
        raise OutOfRange(f"tridiagonal size must be positive, got {n}")
    rows = []
    for i in range(n):
        row = [0] * n
        if i > 0:
            row[i - 1] = 2
        row[i] = 2
        if i + 1 < n:
            row[i + 1] = 1
        rows.append(row)
    return ExactMatrix(domain, rows)


# --------------------------------------------------------------------------
# Reverse-polynomial fitting
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Poly1:
    """Univariate polynomial with exact rational coefficients, ascending."""

    coeffs: tuple

    def __call__(self, r) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0 and len(self.coeffs) > 1:
                continue
            mag = abs(c)
            coeff_str = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if power == 0:
                body = coeff_str
            else:
                var = "r" if power == 1 else f"r^{power}"
                body = var if mag == 1 else f"{coeff_str}*{var}"
            pieces.append(("-" if c < 0 else "+", body))
        if not pieces:
            return "0"
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def _interpolate(points) -> Poly1:
    """Unique interpolating polynomial through exact points, by divided differences."""
    xs = [Fraction(x) for x, _ in points]
    table = [Fraction(y) for _, y in points]
    n = len(points)
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)
        ]
        newton.append(table[0])
    # Expand the Newton form into monomial coefficients.
    coeffs = [Fraction(0)] * n
    acc = [Fraction(1)]  # product (r - x_0)...(r - x_{k-1}), ascending coeffs
    for k in range(n):
        for i, a in enumerate(acc):
            coeffs[i] += newton[k] * a
        shifted = [Fraction(0)] + acc
        acc = [s - xs[k] * a for s, a in zip(shifted, acc + [Fraction(0)])]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return Poly1(tuple(coeffs))


@dataclass(frozen=True)
class FittedPolynomial:
    polynomial: Poly1
    window: int


@dataclass(frozen=True)
class RefutationWitness:
    polynomial: Poly1
    conflict_d: int
    table_value: int
    predicted: Fraction


@dataclass(frozen=True)
class Refutation:
    """Two interpolants through different tails, each with a failing degree."""

    primary: RefutationWitness
    alternate: RefutationWitness


def fit_reverse_polynomial(table, window: int = 6):
    """Fit the deep tail of a Hilbert table by an exact interpolant.

    ``table`` is a HilbertTable or a list of (d, value) pairs with
    consecutive d.  The interpolant runs through the window+1 rows of largest
    d (the most negative arguments); if every remaining row matches exactly, a
    FittedPolynomial in the variable r (value at r = -d) is returned,
    otherwise a Refutation carrying two interpolants and a conflicting degree
    for each.
    """
    rows = table.consecutive_pairs() if isinstance(table, HilbertTable) else list(table)
    rows = sorted(rows)
    if any(value is None for _, value in rows):
        raise InsufficientData("table contains infinite-length rows")
    if len(rows) < window + 2:
        raise InsufficientData(f"need at least {window + 2} rows, got {len(rows)}")
    if any(b[0] - a[0] != 1 for a, b in zip(rows, rows[1:])):
        raise InsufficientData("table degrees must be consecutive")

    def witness(tail_rows):
        poly = _interpolate([(-d, value) for d, value in tail_rows])
        tail_ds = {d for d, _ in tail_rows}
        for d, value in rows:
            if d in tail_ds:
                continue
            predicted = poly(-d)
            if predicted != value:
                return poly, RefutationWitness(poly, d, value, predicted)
        return poly, None

    poly1, conflict1 = witness(rows[-(window + 1) :])
    if conflict1 is None:
        return FittedPolynomial(poly1, window)
    _, conflict2 = witness(rows[-(window + 2) : -1])
    if conflict2 is None:
        raise TheoremViolation("shifted interpolant fits although the tail one does not")
    return Refutation(conflict1, conflict2)


# --------------------------------------------------------------------------
# Characteristic comparison and the built-in rings
# --------------------------------------------------------------------------

SINGH_GENERATORS = ("X*U + Y*V + Z*W",)
SECTION3_GENERATORS = ("2*X^2*V^2 + 2*X*Y*U*V + Y^2*U^2",)
REMARK16_GENERATORS = ("X*U^2 + Y*U*V", "X*U*V + Y*V^2")

BUILTIN_SHAPES = {
    "singh": (SINGH_GENERATORS, 3, 3),
    "section3": (SECTION3_GENERATORS, 2, 2),
    "remark16": (REMARK16_GENERATORS, 2, 2),
}


def builtin_ideal(name: str, base: ScalarDomain) -> tuple[GradedIdealInput, int]:
    """One of the bundled example rings; returns (ideal, s)."""
    if name not in BUILTIN_SHAPES:
        raise OutOfRange(f"unknown builtin {name!r}; choose from {sorted(BUILTIN_SHAPES)}")
    texts, m, s = BUILTIN_SHAPES[name]
    ring = URing(CoefficientRing(base, m), s)
    return GradedIdealInput(tuple(ring.parse(t) for t in texts)), s


def builtin_query(name: str, base: ScalarDomain, d_min: int, d_max: int) -> CohomologyQuery:
    ideal, s = builtin_ideal(name, base)
    return CohomologyQuery(ideal, s, d_min, d_max)


@dataclass(frozen=True)
class ComparisonRow:
    d: int
    h0: int
    hp: int
    equal: bool
    p_in_pi: bool


def char_comparison(p: int, d_min: int = 3, d_max: int = 8, ceiling: int | None = None) -> list:
    """Compare the characteristic-0 and characteristic-p values per degree.

    Asserts h_0 <= h_p with equality exactly when p avoids every prime factor
    of the binomials C(d-2, i); a failure is an implementation bug.
    """
    from .scalars import GF, QQ

    if d_min < 3:
        raise OutOfRange("comparison starts at d = 3")
    query0 = builtin_query("singh", QQ, d_min, d_max)
    queryp = builtin_query("singh", GF(p), d_min, d_max)
    out = []
    for d in range(d_min, d_max + 1):
        h0 = top_dimension(query0, d, ceiling)
        hp = top_dimension(queryp, d, ceiling)
        if h0 > hp:
            raise TheoremViolation(f"h_0(-{d}) = {h0} > h_{p}(-{d}) = {hp}")
        p_in_pi = p in pi_set(d - 2)
        if (h0 == hp) == p_in_pi:
            raise TheoremViolation(
                f"d={d}: equality is {h0 == hp} but p in Pi(d-2) is {p_in_pi}"
            )
        out.append(ComparisonRow(d, h0, hp, h0 == hp, p_in_pi))
    return out


@dataclass(frozen=True)
class MinimalPrimesReport:
    """Generators of content(I)R + R_+, reported symbolically."""

    content: tuple
    u_variables: tuple
    whole_ring: bool

    def generator_strings(self, cring: CoefficientRing) -> list:
        if self.whole_ring:
            return ["1"]
        return [cring.to_str(c) for c in self.content] + list(self.u_variables)


def minimal_primes_report(query: CohomologyQuery) -> MinimalPrimesReport:
    ideal = query.ideal
    content = tuple(content_ideal(ideal))
    u_vars = tuple(u_var_name(i, query.s) for i in range(query.s))
    return MinimalPrimesReport(content, u_vars, content_is_unit(ideal))


# --------------------------------------------------------------------------
# Exact serialization helpers
# --------------------------------------------------------------------------

_JSON_INT_LIMIT = 1 << 53


def json_number(n):
    """Ints stay ints while they fit a double; big values become strings."""
    if n is None:
        return None
    if isinstance(n, Fraction):
        return int(n) if n.denominator == 1 and abs(n) < _JSON_INT_LIMIT else str(n)
    return n if abs(n) < _JSON_INT_LIMIT else str(n)


def table_to_json_dict(table: HilbertTable) -> dict:
    return {
        "ring": str(table.query.ideal.ring),
        "ideal": [str(g) for g in table.query.ideal],
        "s": table.query.s,
        "rows": [
            {
                "d": row.d,
                "value": json_number(row.value),
                "stabilizedAt": row.stabilized_at(),
                "notes": row.note or "",
            }
            for row in table.rows
        ],
    }


def table_to_csv_rows(table: HilbertTable) -> list:
    out = [("d", "value", "stabilized_at", "notes")]
    for row in table.rows:
        stab = row.stabilized_at()
        out.append(
            (
                str(row.d),
                "" if row.value is None else str(row.value),
                "" if stab is None else str(stab),
                row.note or "",
            )
        )
    return out


def comparison_to_json_dict(p: int, rows: list) -> dict:
    return {
        "p": p,
        "rows": [
            {
                "d": row.d,
                "h0": json_number(row.h0),
                "hp": json_number(row.hp),
                "equal": row.equal,
                "pInPi": row.p_in_pi,
            }
            for row in rows
        ],
    }


def comparison_to_csv_rows(p: int, rows: list) -> list:
    out = [("d", "h0", f"h{p}", "equal", "p_in_pi")]
    out += [
        (str(r.d), str(r.h0), str(r.hp), str(r.equal).lower(), str(r.p_in_pi).lower())
        for r in rows
    ]
    return out
