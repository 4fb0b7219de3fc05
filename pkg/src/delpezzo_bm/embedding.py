"""p-adic embeddings of tower algebras and rational reconstruction."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence

from . import linalg
from .tower import TowerElement, TowerPresentation


class LiftError(ArithmeticError):
    pass


class ReconstructionError(ArithmeticError):
    pass


def admissible_primes(start: int = 7, count: int = 10) -> List[int]:
    """Primes p = 1 mod 6 with 2 a cube mod p (zeta and cbrt(2) exist mod p)."""
    out = []
    p = start
    while len(out) < count:
        if p % 6 == 1 and is_prime(p) and pow(2, (p - 1) // 3, p) == 1:
            out.append(p)
        p += 1
    return out


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, trial division below."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rule_poly_value(pres: TowerPresentation, k: int, t: int, res: Sequence[int], mod: int) -> tuple:
    """Value and t-derivative of g_k^d - rule_k at g_k = t."""
    d = pres.degrees[k]
    val = pow(t, d, mod)
    der = d * pow(t, d - 1, mod)
    for e, c in pres.rules[k].items():
        c = int(c)
        m = c
        for j in range(k):
            if e[j]:
                m = m * pow(res[j], e[j], mod)
        ek = e[k]
        val -= m * pow(t, ek, mod)
        if ek:
            der -= m * ek * pow(t, ek - 1, mod)
    return val % mod, der % mod


@dataclass(frozen=True)
class FiniteFieldEmbedding:
    """Residues of the tower generators modulo p0^precision."""

    pres: TowerPresentation
    prime: int
    residues: tuple
    precision: int = 1
    _basis_cache: Dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def modulus(self) -> int:
        return self.prime ** self.precision

    def check(self) -> bool:
        mod = self.modulus
        return all(
            _rule_poly_value(self.pres, k, self.residues[k], self.residues, mod)[0] == 0
            for k in range(len(self.residues))
        )

    def basis_values(self) -> List[int]:
        hit = self._basis_cache.get("basis")
        if hit is None:
            mod = self.modulus
            hit = []
            for e in self.pres.monomials:
                v = 1
                for r, k in zip(self.residues, e):
                    v = v * pow(r, k, mod) % mod
                hit.append(v)
            self._basis_cache["basis"] = hit
        return hit

    def embed(self, x: TowerElement) -> int:
        mod = self.modulus
        if x.den % self.prime == 0:
            raise ValueError(f"denominator of {x} is divisible by {self.prime}")
        acc = sum(n * b for n, b in zip(x.nums, self.basis_values()))
        return acc * pow(x.den, -1, mod) % mod

    def reconstruct(self, value: int, height: int) -> TowerElement:
        return rational_reconstruct(value, self.basis_values(), self.modulus, height, self.pres)


def find_embedding(pres: TowerPresentation, prime: int) -> FiniteFieldEmbedding:
    """Smallest residues (in generator order) that are simple roots mod prime."""
    res: List[int] = []
    for k in range(len(pres.names)):
        for t in range(prime):
            v, dv = _rule_poly_value(pres, k, t, res, prime)
            if v == 0 and dv != 0:
                res.append(t)
                break
        else:
            raise LiftError(f"no simple root for {pres.names[k]} modulo {prime}")
    return FiniteFieldEmbedding(pres, prime, tuple(res), 1)


def default_embedding(pres: TowerPresentation, prime: int = 31) -> FiniteFieldEmbedding:
    """The fixed embedding used by the enumeration (zeta -> 6, s -> 4 mod 31)."""
    if prime == 31 and pres.names[:2] == ("zeta", "s"):
        return FiniteFieldEmbedding(pres, 31, (6, 4) + tuple(find_embedding(pres, 31).residues[2:]), 1)
    return find_embedding(pres, prime)


def hensel_lift(emb: FiniteFieldEmbedding, precision: int) -> FiniteFieldEmbedding:
    """Newton-lift every generator residue to the requested p-adic precision."""
    if precision <= emb.precision:
        return emb
    p = emb.prime
    res = list(emb.residues)
    for k in range(len(res)):
        _, dv = _rule_poly_value(emb.pres, k, res[k] % p, [r % p for r in res], p)
        if dv == 0:
            raise LiftError(f"rule for {emb.pres.names[k]} is singular modulo {p}; replace the prime")
    cur = emb.precision
    while cur < precision:
        cur = min(2 * cur, precision)
        mod = p ** cur
        for k in range(len(res)):
            v, dv = _rule_poly_value(emb.pres, k, res[k], res, mod)
            res[k] = (res[k] - v * pow(dv, -1, mod)) % mod
    return FiniteFieldEmbedding(emb.pres, p, tuple(res), precision)


def rational_reconstruct(value: int, basis_values: Sequence[int], modulus: int, height: int,
                         pres: TowerPresentation) -> TowerElement:
    """Recover x = (c_0 + sum c_i b_i)/d from its residue by lattice reduction.

    The first basis value must be 1.  Searches for integers c, d with
    |c_i| <= height, 0 < d <= height and sum c_i b_i = d * value (mod N), in
    the lattice of dimension (basis size + 1).
    """
    value %= modulus
    if value == 0:
        return pres.zero()
    n = len(basis_values)
    if basis_values[0] % modulus != 1:
        raise ValueError("first basis value must be 1")
    # coordinates: (c_1, ..., c_{n-1}, d, c_0) with c_0 = d*v - sum c_i b_i mod N
    rows = []
    for i in range(1, n):
        row = [0] * (n + 1)
        row[i - 1] = 1
        row[n] = (-basis_values[i]) % modulus
        rows.append(row)
    row = [0] * (n + 1)
    row[n - 1] = 1
    row[n] = value
    rows.append(row)
    row = [0] * (n + 1)
    row[n] = modulus
    rows.append(row)
    reduced = linalg.lll_reduce(rows)
    best = None
    for r in reduced:
        d = r[n - 1]
        if d == 0:
            continue
        if d < 0:
            r = [-x for x in r]
            d = -d
        coeffs = [r[n]] + r[: n - 1]
        if d > height or any(abs(c) > height for c in coeffs):
            continue
        if (sum(c * b for c, b in zip(coeffs, basis_values)) - d * value) % modulus:
            continue
        cand = (max(abs(c) for c in coeffs + [d]), coeffs, d)
        if best is None or cand[0] < best[0]:
            best = cand
    if best is None:
        raise ReconstructionError("no candidate within the height bound; increase precision")
    _, coeffs, d = best
    return pres.from_coords({i: Fraction(c, d) for i, c in enumerate(coeffs)})


def reconstruct_with_doubling(emb: FiniteFieldEmbedding, lift_value, height: int = 64,
                              max_precision: int = 512, check=None) -> TowerElement:
    """Repeatedly double precision (and height) until reconstruction succeeds.

    ``lift_value(emb)`` returns the residue of the unknown modulo emb.modulus;
    ``check(x)`` may reject a candidate (the loop then continues).
    """
    precision = max(emb.precision, 8)
    while precision <= max_precision:
        e = hensel_lift(emb, precision)
        try:
            x = e.reconstruct(lift_value(e), height)
            if check is None or check(x):
                return x
        except ReconstructionError:
            pass
        precision *= 2
        height *= 2
    raise ReconstructionError(f"reconstruction failed up to precision {max_precision}")


def height(x: TowerElement) -> int:
    """max(|numerators|, denominator) of the reduced common-denominator form."""
    return max([abs(n) for n in x.nums] + [x.den])


def unique_precision(emb: FiniteFieldEmbedding, height: int, archimedean_bound: int = 2) -> int:
    """Precision at which a reconstruction of height <= height is unique.

    Two candidates c/d, c'/d' differ by c d' - c' d, an algebraic integer with
    coordinates at most 2 height^2 that vanishes modulo the lifted prime power.
    Its norm is divisible by that power and bounded by (n * M * 2 height^2)^n,
    where n is the degree and M bounds the absolute values of the basis
    monomials (2 for the towers used here).
    """
    n = len(emb.pres.monomials)
    bound = (n * archimedean_bound * 2 * height * height) ** n
    k = 1
    while emb.prime ** k <= bound:
        k += 1
    return k


def round_trip(x: TowerElement, emb: FiniteFieldEmbedding, height: int) -> TowerElement:
    """Embed x into Z/p^k, then reconstruct it at the uniqueness precision."""
    e = hensel_lift(emb, unique_precision(emb, height))
    return e.reconstruct(e.embed(x), height)
