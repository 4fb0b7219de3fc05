"""Galois descent of O(D) and extraction of cyclic algebras (L/k, f).

Rational functions on X are kept as N / (c * prod F_i^m_i) where N is a form
reduced modulo the sextic (w-degree at most 1) and every F_i is a w-free factor
such as z - Q(x, y), monic in z.  Keeping the denominator factored makes sums
over the group and exact cancellation cheap.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import forms, galois, linalg
from .forms import ExceptionalCurve, SurfaceDescriptor, WeightedPoly
from .galois import Element, compose
from .tower import CoeffAutomorphism, TowerElement, TowerPresentation

log = logging.getLogger(__name__)


class DescentError(ArithmeticError):
    """A descent step failed (empty vanishing space, broken cocycle, zero section, ...)."""


# ---------------------------------------------------------------------------
# Rational functions with factored denominators


@dataclass(frozen=True)
class RationalFunction:
    surface: SurfaceDescriptor
    num: WeightedPoly
    const: TowerElement
    factors: Tuple[Tuple[WeightedPoly, int], ...] = ()

    @staticmethod
    def make(surface: SurfaceDescriptor, num: WeightedPoly, const, factors=()) -> "RationalFunction":
        pres = surface.pres
        const = const if isinstance(const, TowerElement) else pres.scalar(const)
        merged: Dict[WeightedPoly, int] = {}
        for f, m in factors:
            lead = f.terms[0][1]
            if lead != pres.one():
                const = const * lead
                f = f * lead.inverse()
            merged[f] = merged.get(f, 0) + m
        facs = tuple(sorted(((f, m) for f, m in merged.items() if m), key=lambda t: repr(t[0])))
        return RationalFunction(surface, surface.reduce(num), const, facs)

    @staticmethod
    def one(surface: SurfaceDescriptor) -> "RationalFunction":
        return RationalFunction.make(surface, WeightedPoly.constant(surface.pres), 1)

    @property
    def pres(self) -> TowerPresentation:
        return self.surface.pres

    @property
    def den_degree(self) -> int:
        return sum(f.degree * m for f, m in self.factors)

    def denominator(self) -> WeightedPoly:
        out = WeightedPoly.constant(self.pres, self.const)
        for f, m in self.factors:
            out = out * f ** m
        return out

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(self.surface, self.num * other.num, self.const * other.const,
                                     self.factors + other.factors)

    def map_coeffs(self, auto: Callable[[TowerElement], TowerElement]) -> "RationalFunction":
        return RationalFunction.make(self.surface, self.num.map_coeffs(auto), auto(self.const),
                                     tuple((f.map_coeffs(auto), m) for f, m in self.factors))

    def equals(self, other: "RationalFunction") -> bool:
        lhs = self.surface.reduce(self.num * other.denominator())
        rhs = self.surface.reduce(other.num * self.denominator())
        return lhs == rhs

    def value(self, point: Sequence[TowerElement]) -> TowerElement:
        return forms.evaluate_weighted((self.num, self.denominator()), point)


def sum_functions(terms: Sequence[RationalFunction]) -> RationalFunction:
    """Sum over the least common multiple of the factored denominators."""
    surface = terms[0].surface
    lcm: Dict[WeightedPoly, int] = {}
    for t in terms:
        for f, m in t.factors:
            lcm[f] = max(lcm.get(f, 0), m)
    total = None
    for t in terms:
        have = dict(t.factors)
        mult = WeightedPoly.constant(surface.pres, t.const.inverse())
        for f, m in lcm.items():
            if m > have.get(f, 0):
                mult = mult * f ** (m - have.get(f, 0))
        part = surface.reduce(t.num * mult)
        total = part if total is None else total + part
    return RationalFunction.make(surface, total, 1, tuple(lcm.items()))


def divide_exactly(f: WeightedPoly, g: WeightedPoly, surface: SurfaceDescriptor) -> WeightedPoly:
    """f / g for reduced f and w-free g, dividing the w-free and w parts separately."""
    even, odd = f.w_split()
    qe = forms.exact_divide(even, g) if not even.is_zero() else WeightedPoly.from_dict(
        f.pres, f.degree - g.degree, {})
    qo = forms.exact_divide(odd, g) if not odd.is_zero() else WeightedPoly.from_dict(
        f.pres, f.degree - g.degree, {})
    return qe + qo


def z_factor(Q) -> WeightedPoly:
    pres = Q.pres
    terms = {(0, 0, 1, 0): pres.one()}
    for i, c in enumerate(Q.coeffs):
        terms[(2 - i, i, 0, 0)] = -c
    return WeightedPoly.from_dict(pres, 2, terms)


# ---------------------------------------------------------------------------
# Norm functions for cyclic orbits (no descent needed)


def orbit(curve: ExceptionalCurve, auto: CoeffAutomorphism, limit: int = 12) -> List[ExceptionalCurve]:
    out = [curve]
    cur = curve.map_coeffs(auto)
    while cur.key() != curve.key():
        out.append(cur)
        cur = cur.map_coeffs(auto)
        if len(out) > limit:
            raise DescentError("orbit longer than expected")
    return out


def norm_form(curves: Sequence[ExceptionalCurve], pres: TowerPresentation) -> WeightedPoly:
    """The unique monic form of degree len(curves) vanishing on all of them."""
    d = len(curves)
    space = forms.vanishing_form(d, curves, pres)
    if not space:
        raise DescentError(f"no form of degree {d} vanishes on the given curves")
    if len(space) > 1:
        raise DescentError(f"vanishing space of degree {d} has dimension {len(space)}; divisor not cut out")
    return space[0]


def norm_function(positive: ExceptionalCurve, negative: ExceptionalCurve, auto: CoeffAutomorphism,
                  surface: SurfaceDescriptor, point: Optional[Sequence[TowerElement]] = None
                  ) -> Tuple[WeightedPoly, WeightedPoly]:
    """(num, den) with (num/den) = N(positive - negative) for the cyclic group generated by auto.

    With a point, the ratio is scaled to value 1 there.
    """
    pres = surface.pres
    pos, neg = orbit(positive, auto), orbit(negative, auto)
    if len(pos) != len(neg):
        raise DescentError("orbits of different lengths")
    num, den = norm_form(pos, pres), norm_form(neg, pres)
    if point is not None:
        v = forms.evaluate_weighted((num, den), point)
        den = den * v
    return num, den


# ---------------------------------------------------------------------------
# Descent cocycles


@dataclass
class DescentCocycle:
    """Normalized functions f_h with (f_h) = D - hD for every h in H."""

    surface: SurfaceDescriptor
    positive: ExceptionalCurve
    negative: ExceptionalCurve
    elements: List[Element]
    generators: List[Element]
    autos: Dict[Element, CoeffAutomorphism] = field(repr=False)
    functions: Dict[Element, RationalFunction] = field(repr=False)
    numerators: Dict[Element, WeightedPoly] = field(default_factory=dict, repr=False)
    point: Tuple[TowerElement, ...] = ()
    transcript: List[str] = field(default_factory=list)

    def curve(self, h: Element, c: ExceptionalCurve) -> ExceptionalCurve:
        return c.map_coeffs(self.autos[h])

    def conj(self, h: Element, f: RationalFunction) -> RationalFunction:
        return f.map_coeffs(self.autos[h])

    def verify(self) -> List[str]:
        """Check f_{gh} = g(f_h) f_g for every pair and f_h(point) = 1; returns the transcript."""
        lines = []
        one = self.surface.pres.one()
        for h in self.elements:
            if self.functions[h].value(self.point) != one:
                raise DescentError(f"f_{galois.word_of(h)} is not normalized at the base point")
        for g in self.elements:
            for h in self.elements:
                lhs = self.functions[compose(g, h)]
                rhs = self.conj(g, self.functions[h]) * self.functions[g]
                if not lhs.equals(rhs):
                    raise DescentError(f"cocycle condition fails for g={galois.word_of(g)}, h={galois.word_of(h)}")
        lines.append(f"cocycle identities f_gh = g(f_h) f_g verified for all {len(self.elements) ** 2} pairs")
        lines.append(f"all f_h equal 1 at {tuple(str(c) for c in self.point)}")
        self.transcript.extend(lines)
        return lines


def generator_function(positive: ExceptionalCurve, negative: ExceptionalCurve, auto: CoeffAutomorphism,
                       surface: SurfaceDescriptor, point) -> Tuple[RationalFunction, WeightedPoly]:
    """f_g with zeros D, g(negative) and poles negative, g(positive), normalized at the point.

    The numerator is the degree-4 form through positive, g(negative), g(positive)',
    negative'; the denominator is (z - gQ_pos)(z - Q_neg).
    """
    pres = surface.pres
    gpos, gneg = positive.map_coeffs(auto), negative.map_coeffs(auto)
    curves = [positive, gneg, forms.bertini(gpos), forms.bertini(negative)]
    num = norm_form(curves, pres)
    f = RationalFunction.make(surface, num, 1, ((z_factor(gpos.Q), 1), (z_factor(negative.Q), 1)))
    v = f.value(point)
    if v.is_zero():
        raise DescentError("generator function vanishes at the base point")
    return RationalFunction.make(surface, num, v, f.factors), num


def build_descent(positive: ExceptionalCurve, negative: ExceptionalCurve, generators: Sequence[Element],
                  induced: Callable[[Element], CoeffAutomorphism], surface: SurfaceDescriptor,
                  point: Optional[Sequence] = None, verify: bool = True) -> DescentCocycle:
    """Descent data for O(positive - negative) along the group generated by ``generators``.

    The class must be fixed by the group; this is checked through the cocycle
    identities.  ``induced`` gives the coefficient automorphism of each element.
    """
    pres = surface.pres
    point = tuple(surface.point(point or surface.anticanonical_point))
    elements = galois.closure(generators)
    autos = {h: induced(h) for h in elements}
    funcs: Dict[Element, RationalFunction] = {galois.IDENTITY: RationalFunction.one(surface)}
    nums: Dict[Element, WeightedPoly] = {}
    for g in generators:
        funcs[g], nums[g] = generator_function(positive, negative, autos[g], surface, point)
    queue = deque([galois.IDENTITY])
    seen = {galois.IDENTITY}
    while queue:
        h = queue.popleft()
        for g in generators:
            gh = compose(g, h)
            if gh not in seen:
                seen.add(gh)
                if gh not in funcs:
                    funcs[gh] = funcs[h].map_coeffs(autos[g]) * funcs[g]
                queue.append(gh)
    cocycle = DescentCocycle(surface, positive, negative, elements, list(generators), autos, funcs, nums, point)
    if verify:
        cocycle.verify()
    return cocycle


def average_section(cocycle: DescentCocycle) -> RationalFunction:
    """s = sum over h of h^{-1}(f_h), the average of the rational section 1."""
    terms = []
    for h in cocycle.elements:
        hi = galois.inverse(h)
        terms.append(cocycle.conj(hi, cocycle.functions[h]))
    s = sum_functions(terms)
    if s.num.is_zero():
        raise DescentError("averaged section vanishes identically; change the section")
    return s


def section_form(section: RationalFunction, cocycle: DescentCocycle) -> Tuple[WeightedPoly, List[ExceptionalCurve]]:
    """N = s * (z - Q_pos) * prod_{h != 1} (z - hQ_neg), which is a form.

    Returns N and the pole curves sum_h h(negative) of s as a section of O(D).
    """
    pos, neg = cocycle.positive, cocycle.negative
    mult: Dict[WeightedPoly, int] = {z_factor(pos.Q): 1}
    poles = []
    for h in cocycle.elements:
        c = cocycle.curve(h, neg)
        poles.append(c)
        if h != galois.IDENTITY:
            key = z_factor(c.Q)
            mult[key] = mult.get(key, 0) + 1
    num = section.num * WeightedPoly.constant(section.pres, section.const.inverse())
    remaining = dict(mult)
    for f, m in section.factors:
        cancel = min(m, remaining.get(f, 0))
        if cancel:
            remaining[f] -= cancel
        for _ in range(m - cancel):
            try:
                num = divide_exactly(num, f, section.surface)
            except ValueError as exc:
                raise DescentError("averaged section has poles outside the expected orbit") from exc
    for f, m in remaining.items():
        num = section.surface.reduce(num * f ** m)
    return num, poles


# ---------------------------------------------------------------------------
# Cyclic algebra data


@dataclass
class CyclicAlgebraDatum:
    """(L/k, f) with f = scale * q / r.

    kind is 'quadratic' (L = Q(sqrt radicand)) or 'cubic' (L = k(cbrt radicand),
    k = Q(zeta)).
    """

    kind: str
    radicand: int
    q: WeightedPoly
    r: WeightedPoly
    scale: Fraction = Fraction(1)
    generator: str = ""
    transcript: List[str] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return 2 if self.kind == "quadratic" else 3

    def value(self, point: Sequence) -> TowerElement:
        pres = self.q.pres
        pt = tuple(c if isinstance(c, TowerElement) else pres.scalar(c) for c in point)
        return forms.evaluate_weighted((self.q, self.r), pt) * self.scale

    def serialize(self) -> dict:
        return {"extension": {"kind": self.kind, "radicand": self.radicand, "generator": self.generator},
                "scale": str(self.scale), "q": self.q.serialize(), "r": self.r.serialize(),
                "transcript": list(self.transcript)}


def rational_coefficients(f: WeightedPoly) -> Dict[tuple, Fraction]:
    out = {}
    for m, c in f.terms:
        if not c.is_rational():
            raise DescentError(f"coefficient {c} of {m} is not rational")
        out[m] = c.rational()
    return out


def canonical_rational_form(f: WeightedPoly) -> Tuple[WeightedPoly, Fraction]:
    """(g, c) with f = c g, g integral and primitive with positive leading coefficient."""
    coeffs = rational_coefficients(f)
    from math import gcd

    den = 1
    for c in coeffs.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {m: int(c * den) for m, c in coeffs.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = ints[f.terms[0][0]]
    g = g if lead > 0 else -g
    pres = f.pres
    out = WeightedPoly.from_dict(pres, f.degree, {m: pres.scalar(Fraction(v, g)) for m, v in ints.items()})
    return out, Fraction(g, den)


def split_coordinates(f: WeightedPoly, outer: Sequence[str]) -> Dict[tuple, Dict[tuple, Dict[tuple, Fraction]]]:
    """Split the coefficients of f by the exponents of the ``outer`` generators.

    Returns {outer exponents: {monomial: {inner exponents: rational}}}.
    """
    pres = f.pres
    pos = [pres.names.index(n) for n in outer]
    inner = [i for i in range(len(pres.names)) if i not in pos]
    out: Dict[tuple, Dict[tuple, Dict[tuple, Fraction]]] = {}
    for m, c in f.terms:
        for e, v in c.terms().items():
            oe = tuple(e[i] for i in pos)
            ie = tuple(e[i] for i in inner)
            out.setdefault(oe, {}).setdefault(m, {})[ie] = v
    return out


def extract_rational_numerator(N: WeightedPoly, outer: Sequence[str], inner_gen: str) -> WeightedPoly:
    """A rational combination q = sum b_i p_i of the components p_i of N.

    N = sum_i e_i p_i with e_i the monomials in the ``outer`` generators and
    p_i having coefficients in Q(inner_gen) (a quadratic generator u).  The
    b_i in Q(u) are found by linear algebra so that q has rational coefficients.
    """
    pres = N.pres
    parts = split_coordinates(N, outer)
    keys = sorted(parts)
    monos = sorted({m for p in parts.values() for m in p}, key=forms.monomial_order_key, reverse=True)
    iu = [i for i, n in enumerate(pres.names) if n not in outer]
    if [pres.names[i] for i in iu] != [inner_gen]:
        raise DescentError("expected exactly one inner generator")
    u = pres.gen(inner_gen)
    radicand = (u * u).rational()

    def c(i, m, k):
        return parts[keys[i]].get(m, {}).get((k,), Fraction(0))

    n = len(keys)
    # unknowns: b_i0 (i < n), b_i1 (n <= i < 2n)
    rows = []
    for m in monos:
        rows.append([c(i, m, 1) for i in range(n)] + [c(i, m, 0) for i in range(n)])
    null = linalg.nullspace(rows, 2 * n) if rows else linalg.identity(2 * n)
    qs = []
    for v in null:
        vec = [sum(v[i] * c(i, m, 0) + radicand * v[n + i] * c(i, m, 1) for i in range(n)) for m in monos]
        if any(vec):
            qs.append(vec)
    if not qs:
        raise DescentError("no rational combination of the components exists")
    red = [r for r in linalg.rref(qs, len(monos))[0] if any(r)]
    if len(red) != 1:
        raise DescentError(f"rational combinations span dimension {len(red)}; expected 1")
    vec = red[0]
    return WeightedPoly.from_dict(pres, N.degree, {m: pres.scalar(x) for m, x in zip(monos, vec) if x})


def orbit_product(curve: ExceptionalCurve, elements: Sequence[Element],
                  autos: Dict[Element, CoeffAutomorphism]) -> WeightedPoly:
    """prod_h (z - hQ), vanishing on every h(curve) and its Bertini partner."""
    out = WeightedPoly.constant(curve.pres)
    for h in elements:
        out = out * z_factor(curve.map_coeffs(autos[h]).Q)
    return out


def vanishes_on(f: WeightedPoly, c: ExceptionalCurve) -> bool:
    return f.restrict(c.Q, c.C).is_zero()


def extract_cyclic_algebra(cocycle: DescentCocycle, rho: CoeffAutomorphism, radicand: int,
                           generator: str = "", verify: bool = True) -> CyclicAlgebraDatum:
    """(Q(sqrt radicand)/Q, q/r) from a verified descent cocycle.

    q is the rational combination of the field-basis components of the
    averaged section form; r = prod_h (z - hQ_neg).  Both are returned in
    canonical scaling (primitive integral, positive leading coefficient).
    """
    surface = cocycle.surface
    section = average_section(cocycle)
    N, poles = section_form(section, cocycle)
    outer = [n for n in N.pres.names if n != "u"]
    q_raw = extract_rational_numerator(N, outer, "u")
    q_raw = surface.reduce(q_raw)
    r_raw = orbit_product(cocycle.negative, cocycle.elements, cocycle.autos)
    q, _ = canonical_rational_form(q_raw)
    r, _ = canonical_rational_form(r_raw)
    datum = CyclicAlgebraDatum("quadratic", radicand, q, r, Fraction(1), generator)
    if q.degree != r.degree:
        raise DescentError("q and r have different weighted degrees")
    datum.transcript.append(f"section numerator has degree {N.degree}; q and r have degree {q.degree}")
    if verify:
        rpoles = poles + [forms.bertini(c) for c in poles]
        for c in rpoles:
            if not vanishes_on(r, c):
                raise DescentError("r does not vanish on a pole curve")
            if vanishes_on(q, c):
                raise DescentError("q vanishes on a pole curve")
        datum.transcript.append(
            f"r vanishes on all {len(rpoles)} curves h(G) + h(G)' (total degree {len(rpoles)} = deg r); "
            "q vanishes on none of them")
        if not q.map_coeffs(rho) == q:
            raise DescentError("q is not fixed by the quotient generator")
    return datum
