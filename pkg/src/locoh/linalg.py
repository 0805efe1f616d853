"""Exact linear algebra over any integral domain with exact division.

Rank and determinant use fraction-free Bareiss elimination, so matrices over
Z or over a polynomial ring are reduced without ever leaving the domain; the
reported rank is the rank over the fraction field.  Rank additionally splits
the matrix into connected components of its support graph first — the value
is unchanged, but the presentation matrices this package produces are sparse
enough that the split turns large eliminations into many tiny ones.

Smith normal form is provided for integer matrices to read off cokernel
invariant factors.
"""

from __future__ import annotations

from .errors import DomainMismatch, NotSquare
from .scalars import ScalarDomain


class ExactMatrix:
    """Dense row-major matrix over a declared domain; immutable by convention."""

    __slots__ = ("domain", "nrows", "ncols", "rows")

    def __init__(self, domain, rows):
        self.domain = domain
        self.rows = [[domain.normalize(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(row) != self.ncols for row in self.rows):
            raise DomainMismatch("ragged rows")

    @classmethod
    def zeros(cls, domain, nrows, ncols):
        z = domain.zero()
        return cls(domain, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, domain, n):
        m = cls.zeros(domain, n, n)
        for i in range(n):
            m.rows[i][i] = domain.one()
        return m

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.domain, [list(col) for col in zip(*self.rows)] if self.rows else [])

    def with_domain(self, domain) -> "ExactMatrix":
        """Reinterpret the entries in another domain (e.g. Z matrix mod p)."""
        return ExactMatrix(domain, self.rows)

    def entry(self, i, j):
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.domain == other.domain
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"ExactMatrix({self.domain}, {self.nrows}x{self.ncols})"


def _bareiss_rank(rows, dom) -> int:
    """Rank by fraction-free elimination; ``rows`` is consumed.

    Pivots are the first nonzero entry scanning top-to-bottom within the
    leftmost unfinished column, so the result is deterministic.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    denom = dom.one()
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not dom.is_zero(rows[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            fi = rows[i]
            fic = fi[c]
            if dom.is_zero(fic):
                for j in range(c + 1, ncols):
                    if not dom.is_zero(fi[j]):
                        fi[j] = dom.exact_div(dom.mul(piv, fi[j]), denom)
            else:
                top = rows[r]
                for j in range(c + 1, ncols):
                    fi[j] = dom.exact_div(
                        dom.sub(dom.mul(piv, fi[j]), dom.mul(fic, top[j])), denom
                    )
                fi[c] = dom.zero()
        denom = piv
        r += 1
        if r == nrows:
            break
    return r


def rank_of_sparse_columns(columns, dom, nrows_hint=None) -> int:
    """Rank of a matrix given as sparse columns ``{row_key: value}``.

    Splits columns into connected components (two columns touch if they share
    a row key) and eliminates each component densely.  Row keys may be any
    sortable values; all-zero columns contribute nothing.
    """
    parent = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    cleaned = []
    for col in columns:
        col = {k: v for k, v in col.items() if not dom.is_zero(v)}
        if not col:
            continue
        cleaned.append(col)
        keys = list(col)
        for k in keys:
            parent.setdefault(k, k)
        first = find(keys[0])
        for k in keys[1:]:
            parent[find(k)] = first

    groups = {}
    for col in cleaned:
        root = find(next(iter(col)))
        groups.setdefault(root, []).append(col)

    total = 0
    for root in groups:
        cols = groups[root]
        keys = sorted({k for col in cols for k in col})
        index = {k: i for i, k in enumerate(keys)}
        zero = dom.zero()
        block = [[zero] * len(cols) for _ in keys]
        for j, col in enumerate(cols):
            for k, v in col.items():
                block[index[k]][j] = v
        total += _bareiss_rank(block, dom)
    return total


def rank(m: ExactMatrix) -> int:
    """Rank of ``m`` over the fraction field of its domain."""
    dom = m.domain
    columns = []
    for j in range(m.ncols):
        col = {}
        for i in range(m.nrows):
            v = m.rows[i][j]
            if not dom.is_zero(v):
                col[i] = v
        columns.append(col)
    return rank_of_sparse_columns(columns, dom)


def determinant(m: ExactMatrix):
    """Exact determinant via fraction-free elimination with sign tracking."""
    if m.nrows != m.ncols:
        raise NotSquare(f"determinant of a {m.nrows}x{m.ncols} matrix")
    dom = m.domain
    n = m.nrows
    if n == 0:
        return dom.one()
    rows = [list(row) for row in m.rows]
    denom = dom.one()
    sign = 1
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if not dom.is_zero(rows[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            return dom.zero()
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            sign = -sign
        piv = rows[c][c]
        for i in range(c + 1, n):
            fi = rows[i]
            fic = fi[c]
            top = rows[c]
            for j in range(c + 1, n):
                fi[j] = dom.exact_div(
                    dom.sub(dom.mul(piv, fi[j]), dom.mul(fic, top[j])), denom
                )
            fi[c] = dom.zero()
        denom = piv
    det = rows[n - 1][n - 1]
    return dom.neg(det) if sign < 0 else det


def smith_normal_form(m: ExactMatrix) -> list[int]:
    """Invariant factors of an integer matrix, padded to the row count.

    Returns ``[d_1, ..., d_k, 0, ..., 0]`` of length ``nrows`` with
    ``d_1 | d_2 | ... | d_k`` positive, so the cokernel of ``m`` is
    ``Z/d_1 + ... + Z/d_k + Z^(#zeros)``.
    """
    if not (isinstance(m.domain, ScalarDomain) and m.domain.kind == "integers"):
        raise DomainMismatch("Smith normal form requires integer entries")
    a = [list(row) for row in m.rows]
    nrows, ncols = m.nrows, m.ncols
    diag = []
    top = 0
    while top < min(nrows, ncols):
        # Locate a nonzero pivot of minimal absolute value in the live block.
        best = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[top], a[i] = a[i], a[top]
        for row in a:
            row[top], row[j] = row[j], row[top]
        while True:
            piv = a[top][top]
            dirty = False
            for i in range(top + 1, nrows):
                q = a[i][top] // piv
                if q:
                    for j in range(top, ncols):
                        a[i][j] -= q * a[top][j]
                if a[i][top]:
                    a[top], a[i] = a[i], a[top]
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(top + 1, ncols):
                q = a[top][j] // piv
                if q:
                    for i in range(top, nrows):
                        a[i][j] -= q * a[i][top]
                if a[top][j]:
                    for i in range(top, nrows):
                        a[i][top], a[i][j] = a[i][j], a[i][top]
                    dirty = True
                    break
            if not dirty:
                break
        piv = abs(a[top][top])
        # Pull in any entry the pivot fails to divide, then redo this corner.
        offender = None
        for i in range(top + 1, nrows):
            for j in range(top + 1, ncols):
                if a[i][j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, ncols):
                a[top][j] += a[offender][j]
            continue
        diag.append(piv)
        top += 1
    diag += [0] * (nrows - len(diag))
    return diag
