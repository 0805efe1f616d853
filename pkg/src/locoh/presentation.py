"""Inverse-polynomial presentation of top local cohomology components.

For R = R_0[U_1..U_s]/I the degree -d component of the top local cohomology
of R is the cokernel of a matrix over R_0 whose rows are indexed by the
inverse monomials of degree -d and whose column blocks, one per generator
f_i, are indexed by the inverse monomials of degree -(d + deg f_i).  The
entry rule is multiplication in the inverse-polynomial module: a term lands
at lambda + mu and is annihilated unless every exponent stays negative.

Bases are ordered ascending, comparing negated exponent tuples
lexicographically with U_1 > ... > U_s.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DegreeTooSmall, DomainMismatch, SizeTooLarge, TooManyMinors
from .linalg import ExactMatrix, determinant
from .multipoly import GradedIdealInput, NestedPolynomial

MINOR_SUBSET_CAP = comb(20, 10)


@dataclass(frozen=True)
class InverseBasis:
    """Ordered basis of the degree -d piece of R_0[U_1^-, .., U_s^-]."""

    s: int
    d: int
    elements: tuple

    def index(self, lam) -> int:
        return self.elements.index(tuple(lam))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _compositions(total: int, parts: int):
    """All ways to write ``total`` as an ordered sum of ``parts`` positives."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def inverse_basis(s: int, d: int) -> InverseBasis:
    """All exponent tuples with entries <= -1 summing to -d, ascending."""
    if s < 1:
        raise DomainMismatch(f"variable count {s} must be positive")
    if d < s:
        raise DegreeTooSmall(f"degree {d} < {s}: component is zero above end -{s}")
    elements = sorted(_compositions(d, s))
    basis = tuple(tuple(-e for e in c) for c in elements)
    assert len(basis) == comb(d - 1, s - 1)
    return InverseBasis(s, d, basis)


def inverse_action(f: NestedPolynomial, lam) -> dict:
    """Surviving terms of f * U^lam in the inverse-polynomial module.

    Returns a map from target exponent tuples (all entries <= -1) to the
    coefficients that land there; terms pushed to a non-negative exponent
    vanish.
    """
    f.u_degree()
    lam = tuple(lam)
    if len(lam) != f.ring.s or any(e > -1 for e in lam):
        raise DomainMismatch(f"{lam} is not an inverse exponent tuple")
    out = {}
    for mu, coeff in f.terms.items():
        target = tuple(l + m for l, m in zip(lam, mu))
        if all(e <= -1 for e in target):
            out[target] = coeff
    return out


@dataclass(frozen=True)
class PresentationMatrix:
    """Matrix over R_0 presenting one graded component of top cohomology."""

    row_basis: InverseBasis
    column_blocks: tuple
    matrix: ExactMatrix
    ideal: GradedIdealInput

    @property
    def s(self) -> int:
        return self.row_basis.s

    @property
    def d(self) -> int:
        return self.row_basis.d

    @property
    def nrows(self) -> int:
        return self.matrix.nrows

    @property
    def ncols(self) -> int:
        return self.matrix.ncols

    def block_degrees(self) -> list:
        """Common X-degree of the coefficients of each generator."""
        return [g.u_degree() for g in self.ideal]

    def to_json_dict(self) -> dict:
        ring = self.ideal.ring.coeffs
        return {
            "s": self.s,
            "d": self.d,
            "rowBasis": [list(lam) for lam in self.row_basis],
            "columnBlocks": [
                {"generator": i, "basis": [list(lam) for lam in basis]}
                for i, basis in self.column_blocks
            ],
            "entries": [[ring.to_str(x) for x in row] for row in self.matrix.rows],
        }


def presentation_matrix(ideal: GradedIdealInput, s: int, d: int) -> PresentationMatrix:
    """Build M(f_1..f_r; d), columns block-major in generator order."""
    ring = ideal.ring
    if ring.s != s:
        raise DomainMismatch(f"ideal lives in s={ring.s} variables, not {s}")
    rows = inverse_basis(s, d)
    row_index = {lam: i for i, lam in enumerate(rows.elements)}
    cring = ring.coeffs
    zero = cring.zero()

    blocks = []
    columns = []
    for gen_index, f in enumerate(ideal):
        delta = f.u_degree()
        block_basis = inverse_basis(s, d + delta)
        blocks.append((gen_index, block_basis))
        for lam in block_basis:
            entries = [zero] * len(rows)
            for target, coeff in inverse_action(f, lam).items():
                entries[row_index[target]] = coeff
            columns.append(entries)
        assert len(block_basis) == comb(d + delta - 1, s - 1)

    matrix = ExactMatrix(
        cring, [[col[i] for col in columns] for i in range(len(rows))]
        if columns
        else [[] for _ in range(len(rows))],
    )
    assert matrix.nrows == comb(d - 1, s - 1)
    return PresentationMatrix(rows, tuple(blocks), matrix, ideal)


def minors_ideal(pm: PresentationMatrix, t: int) -> list:
    """All nonzero t x t minors of the presentation matrix, deduplicated."""
    m = pm.matrix
    if t < 1 or t > min(m.nrows, m.ncols):
        raise SizeTooLarge(f"no {t}x{t} minors in a {m.nrows}x{m.ncols} matrix")
    subsets = comb(m.nrows, t) * comb(m.ncols, t)
    if subsets > MINOR_SUBSET_CAP:
        raise TooManyMinors(f"{subsets} minors exceed the cap {MINOR_SUBSET_CAP}")
    from itertools import combinations

    ring = pm.ideal.ring.coeffs
    seen = set()
    out = []
    for row_set in combinations(range(m.nrows), t):
        for col_set in combinations(range(m.ncols), t):
            sub = ExactMatrix(ring, [[m.rows[i][j] for j in col_set] for i in row_set])
            det = determinant(sub)
            if ring.is_zero(det):
                continue
            key = ring.canonical_key(det)
            if key not in seen:
                seen.add(key)
                out.append(det)
    return out
