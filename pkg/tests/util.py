"""Seeded random instance generators shared across the test modules."""

import random

from locoh.multipoly import CoefficientRing, GradedIdealInput, URing
from locoh.strand import GradedMatrix, monomials_of_degree


def nonzero_int(rng, bound=9):
    value = rng.randint(1, bound)
    return -value if rng.random() < 0.5 else value


def random_scalar(rng, base, bound=9):
    """A nonzero scalar in the given domain."""
    if base.kind == "prime_field":
        return rng.randrange(1, base.p)
    return base.from_int(nonzero_int(rng, bound))


def random_xpoly(rng, cring, max_deg=2, max_terms=3, homog_deg=None):
    """A nonzero polynomial in the X-variables, optionally homogeneous."""
    if homog_deg is None:
        monos = [m for e in range(max_deg + 1) for m in monomials_of_degree(cring.x_vars, e)]
    else:
        monos = list(monomials_of_degree(cring.x_vars, homog_deg))
    while True:
        picks = rng.sample(monos, k=min(rng.randint(1, max_terms), len(monos)))
        poly = cring.zero()
        for exps in picks:
            poly = cring.add(poly, cring.monomial(random_scalar(rng, cring.base, 4), exps))
        if not cring.is_zero(poly):
            return poly


def random_coefficient(rng, cring, homog_deg=None):
    if cring.x_vars:
        return random_xpoly(rng, cring, homog_deg=homog_deg)
    return random_scalar(rng, cring.base)


def random_homogeneous_poly(rng, ring, delta, max_terms=4, coeff_homog_deg=None):
    """A nonzero U-homogeneous polynomial of U-degree delta."""
    monos = list(monomials_of_degree(ring.s, delta))
    while True:
        picks = rng.sample(monos, k=min(rng.randint(1, max_terms), len(monos)))
        terms = [(mu, random_coefficient(rng, ring.coeffs, coeff_homog_deg)) for mu in picks]
        f = ring.from_terms(terms)
        if not f.is_zero():
            return f


def random_graded_ideal(rng, base, x_vars, s, max_gens=2, bihomogeneous=False):
    """Random ideal; with ``bihomogeneous`` each generator gets X-homogeneous
    coefficients of one degree (possibly 0, making the content a unit)."""
    ring = URing(CoefficientRing(base, x_vars), s)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        delta = rng.randint(1, 2)
        homog = rng.choice((0, 1, 2)) if bihomogeneous and x_vars else None
        gens.append(random_homogeneous_poly(rng, ring, delta, coeff_homog_deg=homog))
    return GradedIdealInput(tuple(gens))


def random_graded_matrix(rng, cring, max_rows=3, max_cols=4, zero_chance=0.2):
    """Random homogeneous-entry matrix with row shifts and column degrees."""
    nrows = rng.randint(1, max_rows)
    ncols = rng.randint(1, max_cols)
    shifts = tuple(rng.randint(0, 2) for _ in range(nrows))
    top = max(shifts)
    col_degrees = tuple(rng.randint(top, top + 2) for _ in range(ncols))
    entries = []
    for r in range(nrows):
        row = []
        for c in range(ncols):
            degree = col_degrees[c] - shifts[r]
            if degree < 0 or rng.random() < zero_chance:
                row.append(cring.zero())
            else:
                row.append(random_xpoly(rng, cring, homog_deg=degree))
        entries.append(tuple(row))
    return GradedMatrix(cring, tuple(entries), shifts, col_degrees)


def random_int_rows(rng, nrows, ncols, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)]


def seeded(seed):
    return random.Random(seed)
