"""Degreewise cokernel dimensions of graded matrices over K[X_1..X_m].

A :class:`GradedMatrix` is a matrix of homogeneous polynomials together with
a total-degree shift per row and a total degree per column, so that the entry
at (r, c) is homogeneous of degree ``col_degrees[c] - row_shifts[r]``.  Its
cokernel is a graded module whose degree-e piece is a finite-dimensional
K-vector space; :func:`coker_dimension` walks e = 0, 1, 2, ... computing
``ambient - rank`` of the constant "strand" matrix in each degree and stops,
certified, at the first zero piece at or beyond the largest row shift: the
cokernel is generated in degrees up to that shift, so over a standard graded
ring a zero piece there stays zero forever.

:func:`brute_force_coker_dim` is the independent oracle: it assembles one
constant matrix covering all degrees up to a cap in a single rank
computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import CapTooSmall, DomainMismatch, GradingViolation, NotFiniteLength, NotHomogeneous
from .linalg import ExactMatrix, rank_of_sparse_columns
from .multipoly import CoefficientRing


def monomials_of_degree(m: int, e: int):
    """Exponent tuples of total degree ``e`` in ``m`` variables, lex descending."""
    if e < 0:
        return
    if m == 1:
        yield (e,)
        return
    for first in range(e, -1, -1):
        for rest in monomials_of_degree(m - 1, e - first):
            yield (first,) + rest


def monomial_count(m: int, e: int) -> int:
    return comb(e + m - 1, m - 1) if e >= 0 else 0


def monomial_count_up_to(m: int, e: int) -> int:
    return comb(e + m, m) if e >= 0 else 0


@dataclass(frozen=True)
class GradedMatrix:
    """Matrix over K[X..] with a consistent total-degree grading."""

    ring: CoefficientRing
    entries: tuple
    row_shifts: tuple
    col_degrees: tuple

    def __post_init__(self):
        if self.ring.x_vars < 1:
            raise DomainMismatch("graded matrices need at least one X-variable")
        if len(self.entries) != len(self.row_shifts):
            raise GradingViolation("row count does not match row shifts")
        for r, row in enumerate(self.entries):
            if len(row) != len(self.col_degrees):
                raise GradingViolation("column count does not match column degrees")
            for c, entry in enumerate(row):
                try:
                    degree = self.ring.homogeneous_x_degree(entry)
                except NotHomogeneous as exc:
                    raise GradingViolation(f"entry ({r}, {c}): {exc}") from exc
                if degree is None:
                    continue
                expected = self.col_degrees[c] - self.row_shifts[r]
                if degree != expected:
                    raise GradingViolation(
                        f"entry ({r}, {c}) has degree {degree}, expected {expected}"
                    )

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.col_degrees)

    @property
    def max_shift(self) -> int:
        return max(self.row_shifts, default=0)

    def default_ceiling(self) -> int:
        top_col = max(self.col_degrees, default=0)
        return self.max_shift + top_col * (self.nrows + 2) + 8


def from_presentation(pm) -> GradedMatrix:
    """Reinterpret a presentation matrix as a graded matrix (row shifts 0).

    Each generator must have X-homogeneous coefficients of one common degree;
    that degree becomes the column degree of the whole block.
    """
    cring = pm.ideal.ring.coeffs
    col_degrees = []
    for (gen_index, basis), f in zip(pm.column_blocks, pm.ideal):
        degrees = set()
        for coeff in f.content():
            try:
                degrees.add(cring.homogeneous_x_degree(coeff))
            except NotHomogeneous as exc:
                raise GradingViolation(f"generator {gen_index}: {exc}") from exc
        if len(degrees) != 1:
            raise GradingViolation(
                f"generator {gen_index} has coefficients of mixed degrees {sorted(degrees)}"
            )
        col_degrees.extend([degrees.pop()] * len(basis))
    return GradedMatrix(
        cring,
        tuple(tuple(row) for row in pm.matrix.rows),
        (0,) * pm.matrix.nrows,
        tuple(col_degrees),
    )


def _strand_columns(g: GradedMatrix, e: int) -> list:
    """Sparse columns of the degree-e strand, keyed by (row, monomial)."""
    m = g.ring.x_vars
    columns = []
    for c in range(g.ncols):
        k = e - g.col_degrees[c]
        if k < 0:
            continue
        for u in monomials_of_degree(m, k):
            col = {}
            for r in range(g.nrows):
                entry = g.entries[r][c]
                for exps, coeff in entry.items():
                    v = tuple(a + b for a, b in zip(u, exps))
                    col[(r, v)] = coeff
            columns.append(col)
    return columns


def _ambient_dim(g: GradedMatrix, e: int) -> int:
    m = g.ring.x_vars
    return sum(monomial_count(m, e - shift) for shift in g.row_shifts)


def strand_matrix(g: GradedMatrix, e: int) -> ExactMatrix:
    """The degree-e piece as a dense constant matrix over the base field.

    Rows run over (row, monomial of degree e - shift) pairs, columns over
    (column, monomial of degree e - column degree) pairs, monomials in lex
    descending order; the rank of this matrix is the image dimension in
    degree e.
    """
    m = g.ring.x_vars
    base = g.ring.base
    row_index = {}
    for r, shift in enumerate(g.row_shifts):
        for v in monomials_of_degree(m, e - shift):
            row_index[(r, v)] = len(row_index)
    columns = _strand_columns(g, e)
    zero = base.zero()
    rows = [[zero] * len(columns) for _ in range(len(row_index))]
    for j, col in enumerate(columns):
        for key, value in col.items():
            rows[row_index[key]][j] = value
    return ExactMatrix(base, rows)


@dataclass(frozen=True)
class StrandDegree:
    degree: int
    ambient_dim: int
    image_rank: int
    coker_dim: int


@dataclass(frozen=True)
class StrandReport:
    per_degree: tuple
    total_dim: int
    stabilized_at: int

    def to_json_dict(self) -> dict:
        return {
            "perDegree": [
                {
                    "degree": row.degree,
                    "ambientDim": row.ambient_dim,
                    "imageRank": row.image_rank,
                    "cokerDim": row.coker_dim,
                }
                for row in self.per_degree
            ],
            "totalDim": self.total_dim,
            "stabilizedAt": self.stabilized_at,
        }

    def to_text_table(self) -> str:
        header = ("degree", "ambient", "rank", "coker")
        rows = [
            (str(r.degree), str(r.ambient_dim), str(r.image_rank), str(r.coker_dim))
            for r in self.per_degree
        ]
        widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in rows]
        lines.append(f"total {self.total_dim} (stabilized at degree {self.stabilized_at})")
        return "\n".join(lines)


def coker_dimension(g: GradedMatrix, ceiling: int | None = None) -> StrandReport:
    """Total K-dimension of the cokernel, degree strand by degree strand."""
    if not g.ring.base.is_field:
        raise DomainMismatch("cokernel dimensions need a field base")
    if ceiling is None:
        ceiling = g.default_ceiling()
    base = g.ring.base
    per_degree = []
    total = 0
    e = 0
    while True:
        ambient = _ambient_dim(g, e)
        image = rank_of_sparse_columns(_strand_columns(g, e), base)
        coker = ambient - image
        per_degree.append(StrandDegree(e, ambient, image, coker))
        total += coker
        if coker == 0 and e >= g.max_shift:
            return StrandReport(tuple(per_degree), total, e)
        e += 1
        if e > ceiling:
            raise NotFiniteLength(
                f"no zero strand found through degree {ceiling}; "
                "cokernel appears to have infinite length",
                partial=tuple(per_degree),
            )


def coker_is_zero(g: GradedMatrix) -> bool:
    """Whether the cokernel vanishes: zero strands through the top row shift.

    The cokernel is generated in degrees up to ``max_shift``, so vanishing of
    every strand through that degree forces the whole module to vanish.  This
    needs no finite-length hypothesis.
    """
    if not g.ring.base.is_field:
        raise DomainMismatch("cokernel test needs a field base")
    base = g.ring.base
    for e in range(g.max_shift + 1):
        if _ambient_dim(g, e) != rank_of_sparse_columns(_strand_columns(g, e), base):
            return False
    return True


def brute_force_coker_dim(g: GradedMatrix, e_max: int) -> int:
    """Oracle: one constant matrix over all degrees <= e_max at once.

    Raises CapTooSmall when the cap provably sits below stabilization (a
    nonzero strand at e_max, or a cap below the top row shift).
    """
    if not g.ring.base.is_field:
        raise DomainMismatch("cokernel dimensions need a field base")
    base = g.ring.base
    m = g.ring.x_vars
    if e_max < g.max_shift:
        raise CapTooSmall(f"cap {e_max} is below the top row shift {g.max_shift}")
    top_contribution = _ambient_dim(g, e_max) - rank_of_sparse_columns(
        _strand_columns(g, e_max), base
    )
    if top_contribution:
        raise CapTooSmall(f"strand at the cap degree {e_max} still contributes {top_contribution}")
    columns = []
    for c in range(g.ncols):
        for k in range(e_max - g.col_degrees[c] + 1):
            for u in monomials_of_degree(m, k):
                col = {}
                for r in range(g.nrows):
                    entry = g.entries[r][c]
                    for exps, coeff in entry.items():
                        v = tuple(a + b for a, b in zip(u, exps))
                        col[(r, v)] = coeff
                columns.append(col)
    ambient = sum(monomial_count_up_to(m, e_max - shift) for shift in g.row_shifts)
    return ambient - rank_of_sparse_columns(columns, base)
