"""Binary forms, weighted polynomials in P(1,1,2,3) and exceptional curves."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .tower import TowerElement, TowerPresentation, RingMap

Monomial = Tuple[int, int, int, int]  # exponents of x, y, z, w
WEIGHTS = (1, 1, 2, 3)


class IndeterminateError(ArithmeticError):
    """A ratio of forms was evaluated at a zero of its denominator."""


class MembershipError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Binary forms


@dataclass(frozen=True)
class BinaryForm:
    """sum_i coeffs[i] x^(d-i) y^i."""

    coeffs: Tuple[TowerElement, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def pres(self) -> TowerPresentation:
        return self.coeffs[0].pres

    @staticmethod
    def zero(pres: TowerPresentation, d: int) -> "BinaryForm":
        return BinaryForm(tuple(pres.zero() for _ in range(d + 1)))

    @staticmethod
    def monomial(pres: TowerPresentation, a: int, b: int, c=1) -> "BinaryForm":
        coeffs = [pres.zero()] * (a + b + 1)
        coeffs[b] = c if isinstance(c, TowerElement) else pres.scalar(c)
        return BinaryForm(tuple(coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return BinaryForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return BinaryForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return BinaryForm(tuple(a * other for a in self.coeffs))
        pres = self.pres
        out = [pres.zero()] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return BinaryForm(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BinaryForm":
        out = BinaryForm.monomial(self.pres, 0, 0)
        for _ in range(n):
            out = out * self
        return out

    def map_coeffs(self, f: Callable[[TowerElement], TowerElement]) -> "BinaryForm":
        return BinaryForm(tuple(f(c) for c in self.coeffs))

    def rescale(self, a: TowerElement, b: TowerElement) -> "BinaryForm":
        """The form F(a x, b y)."""
        d = self.degree
        return BinaryForm(tuple(c * (a ** (d - i)) * (b ** i) for i, c in enumerate(self.coeffs)))

    def evaluate(self, x: TowerElement, y: TowerElement) -> TowerElement:
        d = self.degree
        out = x.pres.zero()
        for i, c in enumerate(self.coeffs):
            out = out + c * x ** (d - i) * y ** i
        return out

    def serialize(self) -> list:
        return [c.serialize() for c in self.coeffs]

    def key(self) -> tuple:
        return tuple(c.key() for c in self.coeffs)


def _poly_trim(p: List[TowerElement]) -> List[TowerElement]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _poly_rem(a: List[TowerElement], b: List[TowerElement]) -> List[TowerElement]:
    a = list(a)
    inv = b[-1].inverse()
    while len(a) >= len(b):
        f = a[-1] * inv
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = a[shift + i] - f * c
        a.pop()
        _poly_trim(a)
    return a


def _poly_gcd_degree(a: List[TowerElement], b: List[TowerElement]) -> int:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b)
    return len(a) - 1


def _dehomogenize(f: BinaryForm) -> Tuple[int, List[TowerElement]]:
    """(multiplicity of y, coefficients of f(x, 1) in ascending powers of x)."""
    m = 0
    while m <= f.degree and f.coeffs[m].is_zero():
        m += 1
    d = f.degree
    # coefficient of x^(d-i) is coeffs[i]
    poly = [f.coeffs[d - j] for j in range(d + 1)]
    return m, _poly_trim(poly)


def gcd_degree(f: BinaryForm, g: BinaryForm) -> int:
    """Degree of gcd of two binary forms over a field (gcd(0, g) = g)."""
    if f.is_zero():
        return g.degree
    if g.is_zero():
        return f.degree
    mf, pf = _dehomogenize(f)
    mg, pg = _dehomogenize(g)
    return min(mf, mg) + _poly_gcd_degree(pf, pg)


# ---------------------------------------------------------------------------
# Weighted polynomials


def weighted_monomials(d: int) -> List[Monomial]:
    """All x^a y^b z^c w^e of weighted degree d, ordered w > z > y > x (descending)."""
    out = []
    for e in range(d // 3, -1, -1):
        for c in range((d - 3 * e) // 2, -1, -1):
            r = d - 3 * e - 2 * c
            for b in range(r, -1, -1):
                out.append((r - b, b, c, e))
    return out


def monomial_order_key(m: Monomial) -> tuple:
    return (m[3], m[2], m[1], m[0])


@dataclass(frozen=True)
class WeightedPoly:
    """Weighted-homogeneous polynomial in x, y, z, w of weights 1, 1, 2, 3."""

    pres: TowerPresentation
    degree: int
    terms: Tuple[Tuple[Monomial, TowerElement], ...]

    @staticmethod
    def from_dict(pres: TowerPresentation, degree: int, terms: Dict[Monomial, TowerElement]) -> "WeightedPoly":
        items = []
        for m, c in terms.items():
            if c.is_zero():
                continue
            if sum(w * k for w, k in zip(WEIGHTS, m)) != degree:
                raise ValueError(f"monomial {m} does not have weighted degree {degree}")
            items.append((tuple(m), c))
        items.sort(key=lambda t: monomial_order_key(t[0]), reverse=True)
        return WeightedPoly(pres, degree, tuple(items))

    @staticmethod
    def variable(pres: TowerPresentation, name: str) -> "WeightedPoly":
        i = "xyzw".index(name)
        m = [0, 0, 0, 0]
        m[i] = 1
        return WeightedPoly.from_dict(pres, WEIGHTS[i], {tuple(m): pres.one()})

    @staticmethod
    def constant(pres: TowerPresentation, c=1) -> "WeightedPoly":
        c = c if isinstance(c, TowerElement) else pres.scalar(c)
        return WeightedPoly.from_dict(pres, 0, {(0, 0, 0, 0): c})

    @cached_property
    def as_dict(self) -> Dict[Monomial, TowerElement]:
        return dict(self.terms)

    def coeff(self, m: Monomial) -> TowerElement:
        return self.as_dict.get(tuple(m), self.pres.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "WeightedPoly") -> "WeightedPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if other.degree != self.degree:
            raise ValueError("weighted degree mismatch")
        out = dict(self.terms)
        for m, c in other.terms:
            out[m] = out[m] + c if m in out else c
        return WeightedPoly.from_dict(self.pres, self.degree, out)

    def __neg__(self) -> "WeightedPoly":
        return WeightedPoly(self.pres, self.degree, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "WeightedPoly") -> "WeightedPoly":
        return self + (-other)

    def __mul__(self, other) -> "WeightedPoly":
        if not isinstance(other, WeightedPoly):
            if isinstance(other, (int, Fraction)):
                other = self.pres.scalar(other)
            return WeightedPoly.from_dict(self.pres, self.degree, {m: c * other for m, c in self.terms})
        out: Dict[Monomial, TowerElement] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                p = c1 * c2
                out[m] = out[m] + p if m in out else p
        return WeightedPoly.from_dict(self.pres, self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "WeightedPoly":
        out = WeightedPoly.constant(self.pres)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.as_dict == other.as_dict

    def __hash__(self) -> int:
        return hash((self.degree, self.terms))

    def map_coeffs(self, f: Callable[[TowerElement], TowerElement],
                   pres: Optional[TowerPresentation] = None) -> "WeightedPoly":
        pres = pres or self.pres
        return WeightedPoly.from_dict(pres, self.degree, {m: f(c) for m, c in self.terms})

    def evaluate(self, point: Sequence[TowerElement]) -> TowerElement:
        x, y, z, w = point
        out = x.pres.zero()
        for (a, b, c, e), coef in self.terms:
            out = out + coef * (x ** a) * (y ** b) * (z ** c) * (w ** e)
        return out

    def substitute(self, images: Sequence["WeightedPoly"]) -> "WeightedPoly":
        """Replace x, y, z, w by weighted polynomials of degrees 1, 1, 2, 3 (up to scaling)."""
        out = None
        pw: Dict[Tuple[int, int], WeightedPoly] = {}

        def power(i, k):
            if (i, k) not in pw:
                pw[(i, k)] = images[i] ** k
            return pw[(i, k)]

        for m, c in self.terms:
            t = WeightedPoly.constant(self.pres, c)
            for i, k in enumerate(m):
                if k:
                    t = t * power(i, k)
            out = t if out is None else out + t
        return out if out is not None else WeightedPoly(self.pres, 0, ())

    def restrict(self, Q: BinaryForm, C: BinaryForm) -> BinaryForm:
        """F(x, y, Q(x,y), C(x,y)) as a binary form of degree d."""
        return restrict_terms(self.terms, self.degree, Q, C, self.pres)

    def content_normalized(self) -> "WeightedPoly":
        """Scale so the leading coefficient (w > z > y > x order) is 1."""
        if self.is_zero():
            return self
        return self * self.terms[0][1].inverse()

    def w_split(self) -> Tuple["WeightedPoly", "WeightedPoly"]:
        """(w-free part, part with w), after reducing w-degree to at most 1."""
        even = {m: c for m, c in self.terms if m[3] == 0}
        odd = {m: c for m, c in self.terms if m[3] == 1}
        if any(m[3] > 1 for m, _ in self.terms):
            raise ValueError("reduce modulo the sextic first")
        return (WeightedPoly.from_dict(self.pres, self.degree, even),
                WeightedPoly.from_dict(self.pres, self.degree, odd))

    def serialize(self) -> list:
        return [[list(m), c.serialize()] for m, c in self.terms]

    def __repr__(self) -> str:
        return format_weighted(self)


def format_weighted(f: WeightedPoly) -> str:
    from .tower import to_string

    parts = []
    for m, c in f.terms:
        mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip("xyzw", m) if k)
        cs = to_string(c)
        if not mono:
            parts.append(f"({cs})")
        elif cs == "1":
            parts.append(mono)
        else:
            parts.append(f"({cs})*{mono}")
    return " + ".join(parts) if parts else "0"


_RESTRICT_CACHE: Dict[tuple, BinaryForm] = {}


def restrict_terms(terms, degree: int, Q: BinaryForm, C: BinaryForm, pres: TowerPresentation) -> BinaryForm:
    qp = [BinaryForm.monomial(pres, 0, 0)]
    cp = [BinaryForm.monomial(pres, 0, 0)]
    out = BinaryForm.zero(pres, degree)
    for (a, b, c, e), coef in terms:
        while len(qp) <= c:
            qp.append(qp[-1] * Q)
        while len(cp) <= e:
            cp.append(cp[-1] * C)
        t = qp[c] * cp[e] * BinaryForm.monomial(pres, a, b, coef)
        out = out + t
    return out


def exact_divide(f: WeightedPoly, g: WeightedPoly) -> WeightedPoly:
    """f / g when g divides f exactly (lex order w > z > y > x); ValueError otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead_m, lead_c = g.terms[0]
    inv = lead_c.inverse()
    rem = dict(f.terms)
    quot: Dict[Monomial, TowerElement] = {}
    while rem:
        m = max(rem, key=monomial_order_key)
        c = rem[m]
        qm = tuple(a - b for a, b in zip(m, lead_m))
        if any(k < 0 for k in qm):
            raise ValueError("not an exact division")
        qc = c * inv
        quot[qm] = qc
        for gm, gc in g.terms:
            mm = tuple(a + b for a, b in zip(qm, gm))
            v = rem.get(mm, f.pres.zero()) - qc * gc
            if v.is_zero():
                rem.pop(mm, None)
            else:
                rem[mm] = v
    return WeightedPoly.from_dict(f.pres, f.degree - g.degree, quot)


# ---------------------------------------------------------------------------
# Surfaces and curves


@dataclass(frozen=True)
class SurfaceDescriptor:
    """w^2 = z^3 + A x^6 + B y^6 with A, B in the coefficient presentation."""

    A: TowerElement
    B: TowerElement
    base_field: str = "Q"
    anticanonical_point: Tuple[int, int, int, int] = (0, 0, 1, 1)

    def __post_init__(self):
        if self.A.is_zero() or self.B.is_zero():
            raise ValueError("A and B must be nonzero")

    @property
    def pres(self) -> TowerPresentation:
        return self.A.pres

    @cached_property
    def sextic(self) -> WeightedPoly:
        pres = self.pres
        return WeightedPoly.from_dict(pres, 6, {
            (0, 0, 0, 2): pres.one(), (0, 0, 3, 0): -pres.one(), (6, 0, 0, 0): -self.A,
            (0, 6, 0, 0): -self.B})

    def contains(self, point: Sequence[TowerElement]) -> bool:
        return self.sextic.evaluate(point).is_zero()

    def reduce(self, f: WeightedPoly) -> WeightedPoly:
        """Normal form modulo the sextic: replace w^2 by z^3 + A x^6 + B y^6."""
        pres = self.pres
        out: Dict[Monomial, TowerElement] = {}

        def add(m, c):
            out[m] = out[m] + c if m in out else c

        for (a, b, c, e), coef in f.terms:
            k, r = divmod(e, 2)
            # (z^3 + A x^6 + B y^6)^k expanded
            from math import comb
            for i in range(k + 1):
                for j in range(k - i + 1):
                    l = k - i - j
                    mult = comb(k, i) * comb(k - i, j)
                    cc = coef * mult * (self.A ** j) * (self.B ** l)
                    add((a + 6 * j, b + 6 * l, c + 3 * i, r), cc)
        return WeightedPoly.from_dict(pres, f.degree, out)

    def point(self, coords: Sequence) -> Tuple[TowerElement, ...]:
        pres = self.pres
        pt = tuple(c if isinstance(c, TowerElement) else pres.scalar(c) for c in coords)
        if not self.contains(pt):
            raise ValueError(f"{coords} is not on the surface")
        return pt

    def fingerprint(self) -> str:
        import hashlib
        import json
        payload = json.dumps([self.pres.fingerprint, self.A.serialize(), self.B.serialize()])
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class ExceptionalCurve:
    """z = Q(x, y), w = C(x, y) on a diagonal sextic."""

    Q: BinaryForm
    C: BinaryForm
    surface: SurfaceDescriptor = field(compare=False, hash=False)
    check: bool = field(default=True, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.Q.degree != 2 or self.C.degree != 3:
            raise ValueError("Q must be quadratic and C cubic")
        if self.check and not self.satisfies_membership():
            raise MembershipError("C^2 != Q^3 + A x^6 + B y^6")

    @property
    def pres(self) -> TowerPresentation:
        return self.Q.pres

    def membership_residual(self) -> BinaryForm:
        s = self.surface
        six = BinaryForm.monomial(self.pres, 6, 0, s.A) + BinaryForm.monomial(self.pres, 0, 6, s.B)
        return self.C * self.C - self.Q ** 3 - six

    def satisfies_membership(self) -> bool:
        return self.membership_residual().is_zero()

    def key(self) -> tuple:
        return (self.Q.key(), self.C.key())

    def serialize(self) -> dict:
        return {"Q": self.Q.serialize(), "C": self.C.serialize()}

    def map_coeffs(self, f: Callable[[TowerElement], TowerElement],
                   surface: Optional[SurfaceDescriptor] = None) -> "ExceptionalCurve":
        return ExceptionalCurve(self.Q.map_coeffs(f), self.C.map_coeffs(f), surface or self.surface)

    def rescale(self, a: TowerElement, b: TowerElement, surface: Optional[SurfaceDescriptor] = None,
                check: bool = True) -> "ExceptionalCurve":
        return ExceptionalCurve(self.Q.rescale(a, b), self.C.rescale(a, b), surface or self.surface, check)

    def z_form(self) -> WeightedPoly:
        """z - Q(x, y)."""
        pres = self.pres
        terms = {(0, 0, 1, 0): pres.one()}
        for i, c in enumerate(self.Q.coeffs):
            terms[(2 - i, i, 0, 0)] = -c
        return WeightedPoly.from_dict(pres, 2, terms)

    def w_form(self) -> WeightedPoly:
        """w - C(x, y)."""
        pres = self.pres
        terms = {(0, 0, 0, 1): pres.one()}
        for i, c in enumerate(self.C.coeffs):
            terms[(3 - i, i, 0, 0)] = -c
        return WeightedPoly.from_dict(pres, 3, terms)

    def __repr__(self) -> str:
        q = WeightedPoly.from_dict(self.pres, 2, {(2 - i, i, 0, 0): c for i, c in enumerate(self.Q.coeffs)})
        c = WeightedPoly.from_dict(self.pres, 3, {(3 - i, i, 0, 0): c for i, c in enumerate(self.C.coeffs)})
        return f"Curve(Q={q!r}, C={c!r})"


def bertini(c: ExceptionalCurve) -> ExceptionalCurve:
    """The image under w -> -w."""
    return ExceptionalCurve(c.Q, -c.C, c.surface, check=False)


def pairing(c1: ExceptionalCurve, c2: ExceptionalCurve) -> int:
    """Intersection number of two exceptional curves over a field presentation."""
    dq = c1.Q - c2.Q
    dc = c1.C - c2.C
    if dq.is_zero() and dc.is_zero():
        return -1
    return gcd_degree(dq, dc)


def substitute_curve(c: ExceptionalCurve, alpha: TowerElement, beta: TowerElement,
                     surface: SurfaceDescriptor, coeff_map: Optional[RingMap] = None) -> ExceptionalCurve:
    """Transport a curve on w^2 = z^3 + x^6 + y^6 to X(alpha^6, beta^6)."""
    mapped = c if coeff_map is None else ExceptionalCurve(
        c.Q.map_coeffs(coeff_map), c.C.map_coeffs(coeff_map),
        SurfaceDescriptor(coeff_map(c.surface.A), coeff_map(c.surface.B)), check=False)
    return ExceptionalCurve(mapped.Q.rescale(alpha, beta), mapped.C.rescale(alpha, beta), surface)


# ---------------------------------------------------------------------------
# Linear algebra over a field presentation


def field_rref(rows: List[List[TowerElement]], ncols: int) -> Tuple[List[List[TowerElement]], List[int]]:
    """Reduced row echelon form with TowerElement entries (field presentations only)."""
    m = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def field_nullspace(rows: List[List[TowerElement]], ncols: int, pres: TowerPresentation) -> List[List[TowerElement]]:
    red, pivots = field_rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [pres.zero()] * ncols
        v[f] = pres.one()
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def vanishing_form(d: int, curves: Sequence[ExceptionalCurve],
                   pres: Optional[TowerPresentation] = None) -> List[WeightedPoly]:
    """Basis of weighted-degree-d forms vanishing on every listed curve.

    The basis is in reduced echelon form with respect to the monomial order
    w > z > y > x, so each element is monic in its leading monomial.
    """
    if pres is None:
        if not curves:
            raise ValueError("need a presentation when no curves are given")
        pres = curves[0].pres
    monos = weighted_monomials(d)
    rows: List[List[TowerElement]] = []
    for cv in curves:
        images = [restrict_terms([(m, pres.one())], d, cv.Q, cv.C, pres) for m in monos]
        for k in range(d + 1):
            rows.append([img.coeffs[k] for img in images])
    null = field_nullspace(rows, len(monos), pres)
    if not null:
        return []
    red, _ = field_rref(null, len(monos))
    return [WeightedPoly.from_dict(pres, d, dict(zip(monos, v))) for v in red]


def evaluate_weighted(f, point: Sequence[TowerElement]) -> TowerElement:
    """Value of a weighted form, or of a ratio (num, den) of equal weighted degree."""
    if isinstance(f, WeightedPoly):
        return f.evaluate(point)
    num, den = f
    if num.degree != den.degree and not num.is_zero():
        raise ValueError("ratio of forms with different weighted degrees")
    dv = den.evaluate(point)
    if dv.is_zero():
        raise IndeterminateError("denominator vanishes at the point; choose another point or representative")
    return num.evaluate(point) / dv


def weighted_rescale(point: Sequence[TowerElement], lam) -> Tuple[TowerElement, ...]:
    return tuple(c * lam ** w for c, w in zip(point, WEIGHTS))


def parse_weighted(pres: TowerPresentation, text: str, degree: Optional[int] = None,
                   constants: Optional[Dict[str, object]] = None) -> WeightedPoly:
    """Parse a polynomial in x, y, z, w with coefficients in the generator names."""
    import sympy

    gens = {n: sympy.Symbol(n) for n in pres.names}
    xs = sympy.symbols("x y z w")
    locs = dict(gens)
    locs.update(dict(zip("xyzw", xs)))
    if constants:
        locs.update({k: sympy.sympify(v) for k, v in constants.items()})
    expr = sympy.expand(sympy.sympify(text, locals=locs))
    poly = sympy.Poly(expr, *xs, *[gens[n] for n in pres.names])
    terms: Dict[Monomial, TowerElement] = {}
    for monom, coeff in poly.terms():
        m = tuple(int(k) for k in monom[:4])
        c = pres.monomial(tuple(int(k) for k in monom[4:]), Fraction(str(coeff)))
        terms[m] = terms[m] + c if m in terms else c
    if degree is None:
        degree = max(sum(w * k for w, k in zip(WEIGHTS, m)) for m in terms) if terms else 0
    return WeightedPoly.from_dict(pres, degree, terms)


def binary_form(pres: TowerPresentation, coeffs: Iterable) -> BinaryForm:
    return BinaryForm(tuple(c if isinstance(c, TowerElement) else pres.scalar(c) for c in coeffs))


def parse_binary(pres: TowerPresentation, text: str, degree: int) -> BinaryForm:
    f = parse_weighted(pres, text, degree)
    if any(m[2] or m[3] for m, _ in f.terms):
        raise ValueError("binary forms may only involve x and y")
    return BinaryForm(tuple(f.coeff((degree - i, i, 0, 0)) for i in range(degree + 1)))
