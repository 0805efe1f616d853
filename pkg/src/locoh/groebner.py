"""Buchberger engine for ideals in K[X_1..X_m] over a field K.

Provides reduced Groebner bases, ideal membership, the unit-ideal test,
radical membership via one extra variable, and the zero-dimensionality
(cofiniteness) test with staircase counting.  Polynomials are the same
exponent-dict representation used for coefficient rings throughout the
package; the coefficient field is Q or F_p.

Pair selection follows the normal strategy (smallest lcm first) and the
classic coprimality and chain criteria prune the queue; instance sizes here
are tiny, so no further machinery is warranted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotAField, NotFiniteLength
from .multipoly import CoefficientRing


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on exponent tuples refining divisibility."""

    kind: str  # "degrevlex" | "lex"

    def key(self, exps: tuple):
        if self.kind == "lex":
            return tuple(exps)
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def __str__(self):
        return self.kind


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def leading_monomial(p: dict, order: MonomialOrder) -> tuple:
    return max(p, key=order.key)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _require_field(cring: CoefficientRing):
    if cring.x_vars < 1:
        raise NotAField("Groebner bases need at least one X-variable")
    if not cring.base.is_field:
        raise NotAField("Groebner bases require field coefficients")


def normal_form(p: dict, basis: list, cring: CoefficientRing, order: MonomialOrder) -> dict:
    """Full remainder of ``p`` on division by ``basis``."""
    base = cring.base
    lts = [(g, leading_monomial(g, order)) for g in basis if g]
    remainder = {}
    work = dict(p)
    while work:
        lead = max(work, key=order.key)
        coeff = work.pop(lead)
        for g, lt in lts:
            if _divides(lt, lead):
                shift = tuple(x - y for x, y in zip(lead, lt))
                factor = base.exact_div(coeff, g[lt])
                for exps, c in g.items():
                    if exps == lt:
                        continue
                    target = tuple(x + y for x, y in zip(shift, exps))
                    acc = base.sub(work.get(target, base.zero()), base.mul(factor, c))
                    if base.is_zero(acc):
                        work.pop(target, None)
                    else:
                        work[target] = acc
                break
        else:
            remainder[lead] = coeff
    return remainder


def s_polynomial(f: dict, g: dict, cring: CoefficientRing, order: MonomialOrder) -> dict:
    base = cring.base
    lt_f = leading_monomial(f, order)
    lt_g = leading_monomial(g, order)
    lcm = tuple(max(a, b) for a, b in zip(lt_f, lt_g))
    shift_f = tuple(a - b for a, b in zip(lcm, lt_f))
    shift_g = tuple(a - b for a, b in zip(lcm, lt_g))
    inv_f = base.inv(f[lt_f])
    inv_g = base.inv(g[lt_g])
    out = {}
    for exps, c in f.items():
        target = tuple(x + y for x, y in zip(shift_f, exps))
        out[target] = base.mul(inv_f, c)
    for exps, c in g.items():
        target = tuple(x + y for x, y in zip(shift_g, exps))
        acc = base.sub(out.get(target, base.zero()), base.mul(inv_g, c))
        if base.is_zero(acc):
            out.pop(target, None)
        else:
            out[target] = acc
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis: monic elements, no term divisible by another's lead."""

    generators: tuple
    basis: tuple
    order: MonomialOrder
    ring: CoefficientRing

    def leading_monomials(self) -> list:
        return [leading_monomial(g, self.order) for g in self.basis]

    def contains(self, p: dict) -> bool:
        return not normal_form(p, list(self.basis), self.ring, self.order)

    def __len__(self):
        return len(self.basis)


def buchberger(gens, cring: CoefficientRing, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    _require_field(cring)
    base = cring.base
    basis = []
    for g in gens:
        g = cring.normalize(g)
        if g:
            basis.append(g)

    pending = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def lcm_of(i, j):
        lt_i = leading_monomial(basis[i], order)
        lt_j = leading_monomial(basis[j], order)
        return tuple(max(a, b) for a, b in zip(lt_i, lt_j))

    while pending:
        i, j = min(pending, key=lambda ij: (order.key(lcm_of(*ij)), ij))
        pending.discard((i, j))
        lt_i = leading_monomial(basis[i], order)
        lt_j = leading_monomial(basis[j], order)
        lcm = tuple(max(a, b) for a, b in zip(lt_i, lt_j))
        if lcm == tuple(a + b for a, b in zip(lt_i, lt_j)):
            continue  # coprime leading monomials
        chain = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(leading_monomial(basis[k], order), lcm):
                pair_ik = (min(i, k), max(i, k))
                pair_jk = (min(j, k), max(j, k))
                if pair_ik not in pending and pair_jk not in pending:
                    chain = True
                    break
        if chain:
            continue
        remainder = normal_form(s_polynomial(basis[i], basis[j], cring, order), basis, cring, order)
        if remainder:
            basis.append(remainder)
            new = len(basis) - 1
            pending.update((k, new) for k in range(new))

    # Minimalize: drop elements whose lead is divisible by another lead.
    keep = []
    for i, g in enumerate(basis):
        lt_g = leading_monomial(g, order)
        redundant = False
        for j, h in enumerate(basis):
            if i == j:
                continue
            lt_h = leading_monomial(h, order)
            if _divides(lt_h, lt_g) and (lt_h != lt_g or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)

    # Interreduce and make monic.
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r = normal_form(g, others, cring, order)
        if r:
            lead = leading_monomial(r, order)
            r = cring.scalar_mul(base.inv(r[lead]), r)
            reduced.append(r)
    reduced.sort(key=lambda g: order.key(leading_monomial(g, order)))
    return GroebnerBasis(tuple(cring.normalize(g) for g in gens), tuple(reduced), order, cring)


def membership(p: dict, gens, cring: CoefficientRing, order: MonomialOrder = DEGREVLEX) -> bool:
    gb = gens if isinstance(gens, GroebnerBasis) else buchberger(gens, cring, order)
    return gb.contains(cring.normalize(p))


def is_unit_ideal(gens, cring: CoefficientRing) -> bool:
    """Whether 1 lies in the ideal generated by ``gens`` in R_0.

    Over a bare field this asks for a nonzero generator, over Z for
    generators with gcd 1, and over K[X..] it reads the reduced basis.
    """
    if cring.x_vars == 0:
        if cring.base.is_field:
            return any(not cring.base.is_zero(g) for g in gens)
        g = 0
        for x in gens:
            g = gcd(g, int(x))
        return g == 1
    gb = buchberger(gens, cring)
    return len(gb) == 1 and list(gb.basis[0]) == [(0,) * cring.x_vars]


def in_radical(p: dict, gens, cring: CoefficientRing) -> bool:
    """Radical membership via the extra-variable trick: 1 in (gens, 1 - T*p)."""
    _require_field(cring)
    p = cring.normalize(p)
    if not p:
        return True
    extended = CoefficientRing(cring.base, cring.x_vars + 1)
    lifted = [{exps + (0,): c for exps, c in cring.normalize(g).items()} for g in gens]
    one_minus_tp = {(0,) * (cring.x_vars + 1): extended.base.one()}
    for exps, c in p.items():
        target = exps + (1,)
        one_minus_tp[target] = extended.base.neg(c)
    return is_unit_ideal(lifted + [one_minus_tp], extended)


def is_cofinite(gens, cring: CoefficientRing) -> bool:
    """Whether R_0/(gens) has finite length (finite K-dimension over a field)."""
    if cring.x_vars == 0:
        if cring.base.is_field:
            return True
        return any(x != 0 for x in gens)  # Z/(g) is finite exactly when g != 0
    gb = gens if isinstance(gens, GroebnerBasis) else buchberger(gens, cring)
    leads = gb.leading_monomials()
    if any(all(e == 0 for e in lt) for lt in leads):
        return True  # unit ideal, quotient is zero
    for var in range(cring.x_vars):
        if not any(
            lt[var] > 0 and all(e == 0 for i, e in enumerate(lt) if i != var) for lt in leads
        ):
            return False
    return True


def quotient_dimension(gens, cring: CoefficientRing) -> int:
    """dim_K K[X..]/(gens), by staircase count; requires a cofinite ideal."""
    if cring.x_vars == 0:
        return 0 if any(not cring.base.is_zero(g) for g in gens) else 1
    gb = gens if isinstance(gens, GroebnerBasis) else buchberger(gens, cring)
    if not is_cofinite(gb, cring):
        raise NotFiniteLength("ideal is not cofinite: staircase is infinite")
    leads = gb.leading_monomials()
    if any(all(e == 0 for e in lt) for lt in leads):
        return 0
    # Any monomial outside the lead ideal fits under the minimal pure powers,
    # so the box below those bounds exhausts the staircase.
    bounds = []
    for var in range(cring.x_vars):
        pure = [
            lt[var]
            for lt in leads
            if lt[var] > 0 and all(e == 0 for i, e in enumerate(lt) if i != var)
        ]
        bounds.append(min(pure))
    from itertools import product

    return sum(
        1
        for mono in product(*(range(b) for b in bounds))
        if not any(_divides(lt, mono) for lt in leads)
    )
