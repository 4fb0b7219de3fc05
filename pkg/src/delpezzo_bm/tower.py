"""Monomial-presented commutative Q-algebras and their automorphisms.

A presentation is an ordered list of generators g_1, ..., g_m, each with a
defining power d_i and a rule rewriting g_i^d_i as a polynomial in g_i (lower
powers) and earlier generators.  Elements are stored densely over the monomial
basis as integer numerators with one positive common denominator.
"""
from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import cached_property
from math import gcd, prod
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from . import linalg

Exponents = Tuple[int, ...]


class PresentationError(ValueError):
    pass


class ZeroDivisorError(ArithmeticError):
    pass


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class TowerPresentation:
    """Ordered generators with power-reduction rules.

    ``rules[name]`` maps exponent tuples (over all generators, zero beyond the
    generator itself) to rational coefficients.
    """

    def __init__(self, generators: Sequence[Tuple[str, int, Mapping[Exponents, object]]], name: str = ""):
        self.name = name
        self.names: Tuple[str, ...] = tuple(g[0] for g in generators)
        self.degrees: Tuple[int, ...] = tuple(g[1] for g in generators)
        m = len(self.names)
        self.rules: Tuple[Dict[Exponents, Fraction], ...] = tuple(
            {tuple(e): Fraction(c) for e, c in g[2].items() if Fraction(c) != 0} for g in generators
        )
        for k, rule in enumerate(self.rules):
            for e in rule:
                if len(e) != m:
                    raise PresentationError(f"rule for {self.names[k]} has wrong arity")
                if any(e[j] for j in range(k + 1, m)):
                    raise PresentationError(f"rule for {self.names[k]} references a later generator")
                if e[k] >= self.degrees[k] or any(e[j] >= self.degrees[j] for j in range(k)):
                    raise PresentationError(f"rule for {self.names[k]} is not reduced")
        self.monomials: List[Exponents] = list(itertools.product(*[range(d) for d in self.degrees]))
        self.index: Dict[Exponents, int] = {e: i for i, e in enumerate(self.monomials)}
        self.dimension = len(self.monomials)
        self._reduce_cache: Dict[Exponents, Dict[int, Fraction]] = {}
        self._table_rows: Dict[int, list] = {}

    def __repr__(self) -> str:
        return f"TowerPresentation({self.name or ','.join(self.names)}, dim={self.dimension})"

    @cached_property
    def fingerprint(self) -> str:
        payload = [
            [n, d, sorted([list(e), c.numerator, c.denominator] for e, c in r.items())]
            for n, d, r in zip(self.names, self.degrees, self.rules)
        ]
        return json.dumps(payload, separators=(",", ":"))

    def __eq__(self, other) -> bool:
        return isinstance(other, TowerPresentation) and self.fingerprint == other.fingerprint

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    def gen_index(self, name: str) -> int:
        return self.names.index(name)

    # -- reduction -------------------------------------------------------
    def reduce_monomial(self, e: Exponents) -> Dict[int, Fraction]:
        """Reduce an arbitrary exponent tuple to basis coordinates."""
        e = tuple(e)
        hit = self._reduce_cache.get(e)
        if hit is not None:
            return hit
        k = next((j for j in range(len(e) - 1, -1, -1) if e[j] >= self.degrees[j]), None)
        if k is None:
            out = {self.index[e]: Fraction(1)}
        else:
            out: Dict[int, Fraction] = {}
            base = list(e)
            base[k] -= self.degrees[k]
            for re, rc in self.rules[k].items():
                ne = tuple(b + r for b, r in zip(base, re))
                for idx, c in self.reduce_monomial(ne).items():
                    out[idx] = out.get(idx, 0) + rc * c
            out = {i: c for i, c in out.items() if c != 0}
        self._reduce_cache[e] = out
        return out

    def table_row(self, i: int) -> list:
        """Products of basis monomial i with every basis monomial.

        Each entry is a list of (index, numerator) over ``self.table_den``.
        """
        row = self._table_rows.get(i)
        if row is None:
            ei = self.monomials[i]
            row = []
            for ej in self.monomials:
                red = self.reduce_monomial(tuple(a + b for a, b in zip(ei, ej)))
                row.append([(k, int(c * self.table_den)) for k, c in red.items()])
            self._table_rows[i] = row
        return row

    @cached_property
    def table_den(self) -> int:
        # rules are integral, so monomial products reduce to integer combinations
        for rule in self.rules:
            if any(c.denominator != 1 for c in rule.values()):
                raise PresentationError("only integral reduction rules are supported")
        return 1

    # -- constructors ----------------------------------------------------
    def zero(self) -> "TowerElement":
        return TowerElement(self, (0,) * self.dimension, 1)

    def one(self) -> "TowerElement":
        return self.scalar(1)

    def scalar(self, c) -> "TowerElement":
        c = Fraction(c)
        nums = [0] * self.dimension
        nums[0] = c.numerator
        return TowerElement(self, tuple(nums), c.denominator)

    def gen(self, name: str) -> "TowerElement":
        e = [0] * len(self.names)
        e[self.gen_index(name)] = 1
        return self.monomial(tuple(e))

    def monomial(self, e: Exponents, c=1) -> "TowerElement":
        return self.from_coords({i: Fraction(c) * v for i, v in self.reduce_monomial(e).items()})

    def from_coords(self, coords: Mapping[int, object]) -> "TowerElement":
        fr = {i: Fraction(v) for i, v in coords.items()}
        den = 1
        for v in fr.values():
            den = _lcm(den, v.denominator)
        nums = [0] * self.dimension
        for i, v in fr.items():
            nums[i] += int(v * den)
        return TowerElement._make(self, nums, den)

    def from_vector(self, vec: Sequence) -> "TowerElement":
        return self.from_coords(dict(enumerate(vec)))

    def from_terms(self, terms: Mapping[Exponents, object]) -> "TowerElement":
        out = self.zero()
        for e, c in terms.items():
            out = out + self.monomial(tuple(e), c)
        return out

    def is_field_like(self) -> bool:
        return getattr(self, "_field", False)


class TowerElement:
    """Immutable element of a tower algebra."""

    __slots__ = ("pres", "nums", "den", "_hash")

    def __init__(self, pres: TowerPresentation, nums: Tuple[int, ...], den: int):
        self.pres = pres
        self.nums = nums
        self.den = den
        self._hash = None

    @staticmethod
    def _make(pres: TowerPresentation, nums: List[int], den: int) -> "TowerElement":
        if den < 0:
            nums = [-x for x in nums]
            den = -den
        g = gcd(den, *nums)
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
        if not any(nums):
            den = 1
        return TowerElement(pres, tuple(nums), den)

    # -- views -----------------------------------------------------------
    def coords(self) -> List[Fraction]:
        return [Fraction(x, self.den) for x in self.nums]

    def terms(self) -> Dict[Exponents, Fraction]:
        return {self.pres.monomials[i]: Fraction(x, self.den) for i, x in enumerate(self.nums) if x}

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def serialize(self) -> list:
        return [[list(self.pres.monomials[i]), x // gcd(x, self.den), self.den // gcd(x, self.den)]
                for i, x in enumerate(self.nums) if x]

    def key(self) -> tuple:
        """Total order key (coordinates in canonical monomial order)."""
        return tuple(Fraction(x, self.den) for x in self.nums)

    def __repr__(self) -> str:
        return to_string(self)

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> "TowerElement":
        if isinstance(other, TowerElement):
            if other.pres is not self.pres and other.pres != self.pres:
                raise PresentationError("presentation mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.pres.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return TowerElement._make(self.pres, [a + b for a, b in zip(self.nums, other.nums)], self.den)
        return TowerElement._make(
            self.pres, [a * other.den + b * self.den for a, b in zip(self.nums, other.nums)],
            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.pres, tuple(-x for x in self.nums), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return TowerElement._make(self.pres, [x * c.numerator for x in self.nums], self.den * c.denominator)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        pres = self.pres
        a, b = self.nums, other.nums
        if not any(a[1:]):
            return TowerElement._make(pres, [a[0] * x for x in b], self.den * other.den)
        if not any(b[1:]):
            return TowerElement._make(pres, [b[0] * x for x in a], self.den * other.den)
        out = [0] * pres.dimension
        nzb = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            row = pres.table_row(i)
            for j, y in nzb:
                p = x * y
                for k, c in row[j]:
                    out[k] += p * c
        return TowerElement._make(pres, out, self.den * other.den * pres.table_den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.pres.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.pres.scalar(other)
        if not isinstance(other, TowerElement):
            return NotImplemented
        return self.nums == other.nums and self.den == other.den and self.pres == other.pres

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nums, self.den))
        return self._hash

    def mult_matrix(self) -> List[List[Fraction]]:
        """Matrix of y -> self*y acting on coordinate columns."""
        n = self.pres.dimension
        cols = []
        for j in range(n):
            e = [0] * n
            e[j] = 1
            cols.append((self * TowerElement(self.pres, tuple(e), 1)).coords())
        return linalg.transpose(cols)

    def inverse(self) -> "TowerElement":
        """Inverse by a linear solve against the multiplication matrix."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return self.pres.scalar(1 / self.rational())
        rhs = [0] * self.pres.dimension
        rhs[0] = 1
        try:
            x = linalg.solve(self.mult_matrix(), rhs)
        except ValueError:
            raise ZeroDivisorError(f"{self} is a zero divisor in {self.pres!r}") from None
        return self.pres.from_vector(x)


def to_string(x: TowerElement) -> str:
    parts = []
    for e, c in x.terms().items():
        mono = "*".join(
            n if k == 1 else f"{n}^{k}" for n, k in zip(x.pres.names, e) if k
        )
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def deserialize(pres: TowerPresentation, triples: Iterable) -> TowerElement:
    return pres.from_terms({tuple(e): Fraction(n, d) for e, n, d in triples})


# ---------------------------------------------------------------------------
# Standard presentations


def _rule(m: int, terms: Mapping[Exponents, object]) -> Dict[Exponents, object]:
    return {tuple(e) + (0,) * (m - len(e)): c for e, c in terms.items()}


def presentation(sp: Sequence[Tuple[str, int, Mapping[Exponents, object]]], name: str = "",
                 field: bool = False) -> TowerPresentation:
    """Build a presentation; short exponent tuples are zero padded."""
    m = len(sp)
    pres = TowerPresentation([(n, d, _rule(m, r)) for n, d, r in sp], name=name)
    pres._field = field
    return pres


ZETA_RULE = {(0,): -1, (1,): 1}  # zeta^2 = zeta - 1


def qzeta() -> TowerPresentation:
    """Q(zeta) with zeta a primitive sixth root of unity."""
    return presentation([("zeta", 2, ZETA_RULE)], name="Qzeta", field=True)


def l6() -> TowerPresentation:
    """L6 = Q(zeta, s) with s^3 = 2."""
    return presentation([("zeta", 2, ZETA_RULE), ("s", 3, {(0, 0): 2})], name="L6", field=True)


def l6_sqrt(p: int) -> TowerPresentation:
    """K' = L6[u]/(u^2 - p)."""
    return presentation(
        [("zeta", 2, ZETA_RULE), ("s", 3, {(0, 0): 2}), ("u", 2, {(0, 0, 0): p})],
        name=f"L6(sqrt{p})", field=True)


def r_algebra(a, b) -> TowerPresentation:
    """R = L6[alpha, beta]/(alpha^6 - A, beta^6 - B); usually not a field."""
    return presentation(
        [("zeta", 2, ZETA_RULE), ("s", 3, {(0, 0): 2}), ("alpha", 6, {(0, 0, 0): a}),
         ("beta", 6, {(0, 0, 0, 0): b})],
        name=f"R({a},{b})")


_STANDARD_CACHE: Dict[tuple, TowerPresentation] = {}


def cached(kind: str, *args) -> TowerPresentation:
    """Shared instances of the standard presentations (they are immutable)."""
    key = (kind,) + args
    if key not in _STANDARD_CACHE:
        _STANDARD_CACHE[key] = {"qzeta": qzeta, "l6": l6, "l6_sqrt": l6_sqrt, "r": r_algebra}[kind](*args)
    return _STANDARD_CACHE[key]


# ---------------------------------------------------------------------------
# Ring homomorphisms


class RingMap:
    """Q-algebra homomorphism between presentations, given on generators."""

    def __init__(self, source: TowerPresentation, target: TowerPresentation,
                 images: Mapping[str, TowerElement], name: str = ""):
        self.source = source
        self.target = target
        self.name = name
        self.images = {n: images[n] for n in source.names}
        for n, img in self.images.items():
            if img.pres != target:
                raise PresentationError(f"image of {n} lives in the wrong presentation")
        self._check_rules()

    def _check_rules(self) -> None:
        for k, n in enumerate(self.source.names):
            lhs = self.images[n] ** self.source.degrees[k]
            rhs = self.target.zero()
            for e, c in self.source.rules[k].items():
                rhs = rhs + self._eval_monomial(e) * c
            if lhs != rhs:
                raise PresentationError(
                    f"images violate the rule {n}^{self.source.degrees[k]} = "
                    f"{to_string(self.source.from_terms(self.source.rules[k]))}")

    def _eval_monomial(self, e: Exponents) -> TowerElement:
        out = self.target.one()
        for n, k in zip(self.source.names, e):
            if k:
                out = out * self.images[n] ** k
        return out

    @cached_property
    def basis_images(self) -> List[TowerElement]:
        return [self._eval_monomial(e) for e in self.source.monomials]

    @cached_property
    def _matrix(self) -> List[List[Tuple[int, int]]]:
        # column i: image of basis monomial i as (index, numerator) over a common den
        return [(img.nums, img.den) for img in self.basis_images]

    def __call__(self, x: TowerElement) -> TowerElement:
        if x.pres is not self.source and x.pres != self.source:
            raise PresentationError("presentation mismatch")
        n = self.target.dimension
        den = 1
        for i, xi in enumerate(x.nums):
            if xi:
                den = _lcm(den, self._matrix[i][1])
        out = [0] * n
        for i, xi in enumerate(x.nums):
            if not xi:
                continue
            nums, d = self._matrix[i]
            f = xi * (den // d)
            for k, v in enumerate(nums):
                if v:
                    out[k] += f * v
        return TowerElement._make(self.target, out, den * x.den)

    def compose(self, other: "RingMap") -> "RingMap":
        """self after other."""
        if other.target != self.source:
            raise PresentationError("cannot compose")
        return RingMap(other.source, self.target, {n: self(img) for n, img in other.images.items()},
                       name=f"{self.name}{other.name}")


class CoeffAutomorphism(RingMap):
    """Automorphism of a presentation named by a word in the Galois generators."""

    def __init__(self, pres: TowerPresentation, images: Mapping[str, TowerElement], name: str = ""):
        super().__init__(pres, pres, images, name=name)

    def then(self, other: "CoeffAutomorphism") -> "CoeffAutomorphism":
        return CoeffAutomorphism(self.source, {n: other(img) for n, img in self.images.items()},
                                 name=other.name + self.name)

    def compose(self, other: "CoeffAutomorphism") -> "CoeffAutomorphism":  # type: ignore[override]
        """(self o other)(x) = self(other(x))."""
        return CoeffAutomorphism(self.source, {n: self(img) for n, img in other.images.items()},
                                 name=self.name + other.name)

    def is_identity(self) -> bool:
        return all(img == self.source.gen(n) for n, img in self.images.items())


def identity_auto(pres: TowerPresentation) -> CoeffAutomorphism:
    return CoeffAutomorphism(pres, {n: pres.gen(n) for n in pres.names}, name="")


def tower_eval_auto(a: CoeffAutomorphism, x: TowerElement) -> TowerElement:
    return a(x)


def specialize(x: TowerElement, target: TowerPresentation, images: Mapping[str, TowerElement]) -> TowerElement:
    return RingMap(x.pres, target, images)(x)


# ---------------------------------------------------------------------------
# Galois generators (sigma, tau, iota_A, iota_B) on presentations containing them


def galois_images(pres: TowerPresentation, zeta_exp: int = 1, s_power: int = 0,
                  alpha_shift: int = 0, beta_shift: int = 0, u_sign: int = 1) -> Dict[str, TowerElement]:
    """Images of generators under the coefficient action

    zeta -> zeta^zeta_exp, s -> (-zeta)^s_power * s, alpha -> zeta^alpha_shift * alpha,
    beta -> zeta^beta_shift * beta, u -> u_sign * u.
    """
    z = pres.gen("zeta")
    images = {"zeta": z ** (zeta_exp % 6)}
    if "s" in pres.names:
        images["s"] = (-z) ** (s_power % 3) * pres.gen("s")
    if "alpha" in pres.names:
        images["alpha"] = z ** (alpha_shift % 6) * pres.gen("alpha")
    if "beta" in pres.names:
        images["beta"] = z ** (beta_shift % 6) * pres.gen("beta")
    if "u" in pres.names:
        images["u"] = pres.gen("u") * u_sign
    return images


def sigma(pres: TowerPresentation) -> CoeffAutomorphism:
    return CoeffAutomorphism(pres, galois_images(pres, s_power=1), name="s")


def tau(pres: TowerPresentation) -> CoeffAutomorphism:
    return CoeffAutomorphism(pres, galois_images(pres, zeta_exp=-1), name="t")


def iota_a(pres: TowerPresentation) -> CoeffAutomorphism:
    return CoeffAutomorphism(pres, galois_images(pres, alpha_shift=1), name="a")


def iota_b(pres: TowerPresentation) -> CoeffAutomorphism:
    return CoeffAutomorphism(pres, galois_images(pres, beta_shift=1), name="b")


def parse_element(pres: TowerPresentation, text: str, extra: Mapping[str, object] | None = None) -> TowerElement:
    """Parse an arithmetic expression in the generator names (sympy syntax)."""
    import sympy

    syms = {n: sympy.Symbol(n) for n in pres.names}
    locs = dict(syms)
    if extra:
        locs.update(extra)
    expr = sympy.expand(sympy.sympify(text, locals=locs))
    poly = sympy.Poly(expr, *[syms[n] for n in pres.names]) if pres.names else None
    out = pres.zero()
    for monom, coeff in poly.terms():
        out = out + pres.monomial(tuple(int(k) for k in monom), Fraction(str(coeff)))
    return out


def product(xs: Iterable[TowerElement], pres: TowerPresentation) -> TowerElement:
    out = pres.one()
    for x in xs:
        out = out * x
    return out


__all__ = [
    "TowerPresentation", "TowerElement", "RingMap", "CoeffAutomorphism", "PresentationError",
    "ZeroDivisorError", "qzeta", "l6", "l6_sqrt", "r_algebra", "cached", "sigma", "tau", "iota_a",
    "iota_b", "identity_auto", "tower_eval_auto", "specialize", "parse_element", "deserialize",
    "galois_images", "prod",
]
