"""Local invariants: quadratic Hilbert symbols over Q and cubic norm-residue
symbols (x, 2) over Q(zeta), plus adelic invariant sums.

Cubic convention: at a place v of Q(zeta) prime to 3 the symbol is the tame
symbol raised to (q - 1)/3, written as a power of the cube root of unity
zeta^2 = zeta - 1 reduced mod v.  The value at the prime above 3 is forced by
the product formula.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import tower
from .embedding import is_prime
from .tower import TowerElement

INF = "inf"
PlaceQ = Union[int, str]


def factor(n: int) -> Dict[int, int]:
    """Trial-division factorization (values here are small)."""
    n = abs(n)
    out: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _square_class(x) -> int:
    """An integer in the same square class as the nonzero rational x."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("Hilbert symbol of zero")
    return x.numerator * x.denominator


def hilbert_symbol(a, b, v: PlaceQ) -> int:
    """Quadratic Hilbert symbol (a, b)_v over Q."""
    a, b = _square_class(a), _square_class(b)
    if v == INF:
        return -1 if a < 0 and b < 0 else 1
    p = int(v)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    al, be = valuation(a, p), valuation(b, p)
    u, w = a // p ** al, b // p ** be
    if p != 2:
        eps = (p - 1) // 2
        sign = -1 if (al * be * eps) % 2 else 1
        return sign * legendre(u, p) ** be * legendre(w, p) ** al

    def e(x):
        return ((x - 1) // 2) % 2

    def om(x):
        return ((x * x - 1) // 8) % 2

    t = e(u) * e(w) + al * om(w) + be * om(u)
    return -1 if t % 2 else 1


def quadratic_invariant(a, b, v: PlaceQ) -> Fraction:
    """inv_v of the quaternion algebra (a, b) in Q/Z."""
    return Fraction(1 - hilbert_symbol(a, b, v), 4)


def quadratic_support(values: Iterable) -> List[PlaceQ]:
    """Places where some (a, b) among the given numbers may ramify: 2, inf, and odd primes dividing them."""
    primes = {2}
    for x in values:
        x = Fraction(x)
        primes |= set(factor(x.numerator)) | set(factor(x.denominator))
    return sorted(primes) + [INF]


def hilbert_case_formula(p: int, q: int) -> int:
    """Closed form for [p, 3]_q with p >= 5 prime."""
    if q == 2:
        return (-1) ** ((p - 1) // 2)
    if q == 3:
        return legendre(p, 3)
    if q == p:
        return legendre(3, p)
    return 1


# ---------------------------------------------------------------------------
# Q(zeta)


@dataclass(frozen=True)
class PlaceZeta:
    """A finite place of Q(zeta) over the rational prime ell.

    kind is 'split' (root = the residue of zeta), 'inert' or 'ramified'.
    """

    ell: int
    kind: str
    root: Optional[int] = None

    @property
    def residue_size(self) -> int:
        return self.ell ** 2 if self.kind == "inert" else self.ell

    def __str__(self) -> str:
        if self.kind == "split":
            return f"({self.ell}, zeta-{self.root})"
        return f"({self.ell})" if self.kind == "inert" else f"({self.ell}) ramified"


def places_above(ell: int) -> List[PlaceZeta]:
    if ell == 3:
        return [PlaceZeta(3, "ramified")]
    if ell % 3 == 2:
        return [PlaceZeta(ell, "inert")]
    roots = [r for r in range(ell) if (r * r - r + 1) % ell == 0]
    return [PlaceZeta(ell, "split", r) for r in roots]


PRIME_ABOVE_3 = PlaceZeta(3, "ramified")


def _qzeta_parts(x: TowerElement) -> Tuple[int, int, int]:
    """x = (a + b zeta)/d with integers a, b and d > 0."""
    if x.pres.names != ("zeta",):
        coords = x.coords()
        # accept elements of larger presentations lying in Q(zeta)
        idx = {e: i for i, e in enumerate(x.pres.monomials)}
        z1 = tuple(1 if n == "zeta" else 0 for n in x.pres.names)
        one = tuple(0 for _ in x.pres.names)
        if any(c for i, c in enumerate(coords) if i not in (idx[one], idx[z1])):
            raise ValueError(f"{x} does not lie in Q(zeta)")
        a, b = coords[idx[one]], coords[idx[z1]]
    else:
        a, b = x.coords()
    d = a.denominator * b.denominator
    return int(a * d), int(b * d), d


def to_qzeta(x) -> TowerElement:
    Qz = tower.cached("qzeta")
    if isinstance(x, TowerElement):
        a, b, d = _qzeta_parts(x)
        return Qz.from_vector([Fraction(a, d), Fraction(b, d)])
    return Qz.scalar(x)


def norm_qzeta(x: TowerElement) -> Fraction:
    a, b, d = _qzeta_parts(x)
    return Fraction(a * a + a * b + b * b, d * d)


def _zeta_lift(root: int, ell: int, k: int) -> int:
    mod = ell ** k
    r = root
    m = ell
    while m < mod:
        m = min(m * m, mod)
        r = (r - (r * r - r + 1) * pow(2 * r - 1, -1, m)) % m
    return r % mod


def _val_int_pair(a: int, b: int, place: PlaceZeta) -> int:
    """Valuation of a + b zeta (integers) at the place."""
    if a == 0 and b == 0:
        raise ValueError("valuation of zero")
    ell = place.ell
    if place.kind == "inert":
        return min(valuation(a, ell) if a else 10 ** 9, valuation(b, ell) if b else 10 ** 9)
    n = a * a + a * b + b * b
    if place.kind == "ramified":
        return valuation(n, 3)
    k = valuation(n, ell) + 1
    mod = ell ** k
    r = _zeta_lift(place.root, ell, k)
    v = (a + b * r) % mod
    return valuation(v, ell) if v else k


def valuation_zeta(x: TowerElement, place: PlaceZeta) -> int:
    a, b, d = _qzeta_parts(x)
    e = 2 if place.kind == "ramified" else 1
    return _val_int_pair(a, b, place) - e * valuation(d, place.ell)


class _Residue:
    """Arithmetic in the residue field (F_ell or F_ell[zeta]/(zeta^2 - zeta + 1))."""

    def __init__(self, place: PlaceZeta):
        self.place = place
        self.ell = place.ell

    def mul(self, x, y):
        if self.place.kind == "split":
            return x * y % self.ell
        a, b = x
        c, d = y
        # (a + b z)(c + d z) with z^2 = z - 1
        return ((a * c - b * d) % self.ell, (a * d + b * c + b * d) % self.ell)

    def pow(self, x, n):
        out = 1 if self.place.kind == "split" else (1, 0)
        while n:
            if n & 1:
                out = self.mul(out, x)
            x = self.mul(x, x)
            n >>= 1
        return out

    def inv(self, x):
        return self.pow(x, self.place.residue_size - 2)

    def of_unit(self, x: TowerElement):
        """Residue of an element of valuation 0."""
        a, b, d = _qzeta_parts(x)
        ell = self.ell
        if self.place.kind == "split":
            num = (a + b * self.place.root) % ell
            # strip common factors of ell from numerator and denominator
            if num == 0 or d % ell == 0:
                k = valuation(d, ell)
                a2 = a
                b2 = b
                mod = ell ** (k + 1)
                r = _zeta_lift(self.place.root, ell, k + 1)
                num_full = (a2 + b2 * r) % mod
                num = (num_full // ell ** k) % ell
                d = d // ell ** k
            return num * pow(d, -1, ell) % ell
        k = valuation(d, ell)
        a //= ell ** k
        b //= ell ** k
        d //= ell ** k
        di = pow(d, -1, ell)
        return (a * di % ell, b * di % ell)

    def cube_root_generator(self):
        z = self.of_unit(tower.cached("qzeta").gen("zeta"))
        return self.mul(z, z)

    def log3(self, x) -> int:
        """k with x = omega0^k, omega0 the residue of zeta^2."""
        w = self.cube_root_generator()
        one = 1 if self.place.kind == "split" else (1, 0)
        cur = one
        for k in range(3):
            if cur == x:
                return k
            cur = self.mul(cur, w)
        raise ArithmeticError("value is not a cube root of unity")


def tame_symbol(a: TowerElement, b: TowerElement, place: PlaceZeta) -> int:
    """Cubic symbol (a, b)_v in Z/3 at a place not above 3."""
    if place.kind == "ramified":
        raise ValueError("the tame formula does not apply above 3")
    va, vb = valuation_zeta(a, place), valuation_zeta(b, place)
    ell = place.ell
    Qz = tower.cached("qzeta")
    a, b = to_qzeta(a), to_qzeta(b)
    # u = (-1)^{va vb} a^{vb} / b^{va}, a unit at the place
    u = a ** vb * b ** (-va)
    if (va * vb) % 2:
        u = -u
    res = _Residue(place)
    r = res.of_unit(u)
    val = res.pow(r, (place.residue_size - 1) // 3)
    return res.log3(val)


def cubic_support(c: TowerElement, radicand: int = 2) -> List[PlaceZeta]:
    primes = {3} | set(factor(radicand))
    n = norm_qzeta(to_qzeta(c))
    primes |= set(factor(n.numerator)) | set(factor(n.denominator))
    out = []
    for ell in sorted(primes):
        out.extend(places_above(ell))
    return out


def cubic_symbol(c, place: PlaceZeta, radicand: int = 2) -> int:
    """Additive norm-residue symbol [c, radicand]_v in Z/3."""
    c = to_qzeta(c)
    if c.is_zero():
        raise ValueError("symbol of zero")
    b = tower.cached("qzeta").scalar(radicand)
    if place.kind != "ramified":
        return tame_symbol(c, b, place)
    total = 0
    for v in cubic_support(c, radicand):
        if v.kind != "ramified":
            total += tame_symbol(c, b, v)
    return (-total) % 3


def cubic_invariant(c, place: PlaceZeta, radicand: int = 2) -> Fraction:
    return Fraction(cubic_symbol(c, place, radicand), 3) % 1


# ---------------------------------------------------------------------------
# Adelic sums


@dataclass
class AdelicPoint:
    """A default global point with finitely many local overrides."""

    default: tuple
    overrides: Dict[object, tuple] = field(default_factory=dict)

    def at(self, place) -> tuple:
        return self.overrides.get(place, self.default)


@dataclass
class InvariantRow:
    place: str
    point: tuple
    value: str
    invariant: Fraction


def adelic_sum_quadratic(radicand: int, values_at: Dict[tuple, Fraction], point: AdelicPoint,
                         extra_places: Sequence[int] = ()) -> Tuple[Fraction, List[InvariantRow]]:
    """Sum of inv_v (radicand, f(P_v)) over all places where anything can ramify."""
    vals = [radicand] + list(values_at.values())
    places = sorted(set(quadratic_support(vals)[:-1]) | set(extra_places) |
                    {p for p in point.overrides if p != INF}) + [INF]
    total = Fraction(0)
    rows = []
    for v in places:
        pt = point.at(v)
        c = values_at[pt]
        inv = quadratic_invariant(radicand, c, v)
        rows.append(InvariantRow(str(v), pt, str(c), inv))
        total += inv
    return total % 1, rows


def adelic_sum_cubic(values_at: Dict[tuple, TowerElement], point: AdelicPoint,
                     radicand: int = 2) -> Tuple[Fraction, List[InvariantRow]]:
    places = set()
    for c in values_at.values():
        places |= set(cubic_support(c, radicand))
    places |= {p for p in point.overrides}
    total = Fraction(0)
    rows = []
    for v in sorted(places, key=lambda q: (q.ell, q.root or 0)):
        pt = point.at(v)
        c = values_at[pt]
        inv = cubic_invariant(c, v, radicand)
        rows.append(InvariantRow(str(v), pt, str(to_qzeta(c)), inv))
        total += inv
    return total % 1, rows
