"""Enumeration of the 240 exceptional curves of w^2 = z^3 + x^6 + y^6.

Pipeline: exhaustive search modulo a small prime, Newton lifting of each
solution to high p-adic precision, LLL reconstruction of every coefficient in
L6 = Q(zeta, cbrt 2), and exact verification of the membership identity.
"""
from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from . import tower
from .embedding import (FiniteFieldEmbedding, LiftError, ReconstructionError, admissible_primes,
                        default_embedding, hensel_lift)
from .forms import BinaryForm, ExceptionalCurve, SurfaceDescriptor, bertini
from .tower import RingMap, TowerElement, TowerPresentation, deserialize

log = logging.getLogger(__name__)

FFSolution = Tuple[int, int, int, int, int, int, int]  # q0, q1, q2, c0, c1, c2, c3
FORMAT_TAG = "dp1-catalog/1"


class BadPrimeError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Finite-field search


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [v % p for v in out]


def _sqrt_table(p: int) -> Dict[int, List[int]]:
    roots: Dict[int, List[int]] = {}
    for r in range(p):
        roots.setdefault(r * r % p, []).append(r)
    return roots


def sextic_square_roots(P: Sequence[int], p: int, roots: Optional[Dict[int, List[int]]] = None) -> List[Tuple[int, ...]]:
    """All cubic forms C over F_p with C^2 = P (coefficients in x^(d-i) y^i order)."""
    roots = roots or _sqrt_table(p)
    m = next((i for i, v in enumerate(P) if v), None)
    if m is None:
        return [(0, 0, 0, 0)]
    if m % 2 or m > 6:
        return []
    m //= 2
    out = []
    for lead in roots.get(P[2 * m], []):
        c = [0, 0, 0, 0]
        c[m] = lead
        inv = pow(2 * lead, -1, p)
        for j in range(m + 1, 4):
            # coefficient of index m + j of C^2, excluding the unknown terms 2 c_m c_j
            acc = sum(c[i] * c[m + j - i] for i in range(m + 1, j))
            c[j] = (P[m + j] - acc) * inv % p
        if _poly_mul(c, c, p) == list(P):
            out.append(tuple(c))
    return out


def _sextic(Q: Sequence[int], p: int) -> List[int]:
    P = _poly_mul(_poly_mul(Q, Q, p), Q, p)
    P[0] = (P[0] + 1) % p
    P[6] = (P[6] + 1) % p
    return P


def ff_presolve(p: int) -> List[FFSolution]:
    """All (Q, C) over F_p with C^2 = Q^3 + x^6 + y^6."""
    roots = _sqrt_table(p)
    sols: List[FFSolution] = []
    for q0 in range(p):
        for q1 in range(p):
            for q2 in range(p):
                Q = (q0, q1, q2)
                for C in sextic_square_roots(_sextic(Q, p), p, roots):
                    sols.append(Q + C)
    return sorted(sols)


def ff_presolve_bruteforce(p: int) -> List[FFSolution]:
    """Independent oracle: tabulate every C^2 and look up each Q^3 + x^6 + y^6."""
    squares: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    rng = range(p)
    for c0 in rng:
        for c1 in rng:
            for c2 in rng:
                for c3 in rng:
                    C = (c0, c1, c2, c3)
                    squares.setdefault(tuple(_poly_mul(C, C, p)), []).append(C)
    sols = []
    for q0 in rng:
        for q1 in rng:
            for q2 in rng:
                Q = (q0, q1, q2)
                for C in squares.get(tuple(_sextic(Q, p)), []):
                    sols.append(Q + C)
    return sorted(sols)


# ---------------------------------------------------------------------------
# Newton lifting of the coefficient system


def system_residual(v: Sequence[int], mod: int) -> List[int]:
    Q, C = v[:3], v[3:]
    return [(a - b) % mod for a, b in zip(_poly_mul(C, C, mod), _sextic(Q, mod))]


def system_jacobian(v: Sequence[int], mod: int) -> List[List[int]]:
    Q, C = v[:3], v[3:]
    Q2 = _poly_mul(Q, Q, mod)
    J = [[0] * 7 for _ in range(7)]
    for k in range(7):
        for j in range(3):
            if 0 <= k - j < len(Q2):
                J[k][j] = (-3 * Q2[k - j]) % mod
        for j in range(4):
            if 0 <= k - j < 4:
                J[k][3 + j] = (2 * C[k - j]) % mod
    return J


def solve_mod(a: List[List[int]], b: List[int], p: int, mod: int) -> List[int]:
    """Solve a x = b modulo p^k, pivots must be units mod p."""
    n = len(a)
    m = [list(r) + [bi] for r, bi in zip(a, b)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] % p), None)
        if piv is None:
            raise LiftError("singular Jacobian modulo p")
        m[c], m[piv] = m[piv], m[c]
        inv = pow(m[c][c], -1, mod)
        m[c] = [x * inv % mod for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % mod for x, y in zip(m[r], m[c])]
    return [m[r][n] for r in range(n)]


def newton_lift(sol: Sequence[int], p: int, precision: int) -> List[int]:
    v = list(sol)
    cur = 1
    while cur < precision:
        cur = min(2 * cur, precision)
        mod = p ** cur
        delta = solve_mod(system_jacobian(v, mod), system_residual(v, mod), p, mod)
        v = [(x - d) % mod for x, d in zip(v, delta)]
    return v


# ---------------------------------------------------------------------------
# Catalog


@dataclass
class CurveCatalog:
    surface: SurfaceDescriptor
    curves: List[ExceptionalCurve]
    index: Dict[tuple, int] = field(default_factory=dict, repr=False)
    bertini_partner: List[int] = field(default_factory=list, repr=False)

    def __post_init__(self):
        self.index = {c.key(): i for i, c in enumerate(self.curves)}
        if len(self.index) != len(self.curves):
            raise ValueError("catalog has repeated curves")
        self.bertini_partner = [self.index_of(bertini(c)) for c in self.curves]

    def __len__(self) -> int:
        return len(self.curves)

    def __getitem__(self, i: int) -> ExceptionalCurve:
        return self.curves[i]

    def index_of(self, c: ExceptionalCurve) -> int:
        try:
            return self.index[c.key()]
        except KeyError:
            raise KeyError(f"{c!r} is not in the catalog") from None

    def permutation(self, action) -> List[int]:
        """perm[i] = index of action(curve i)."""
        return [self.index_of(action(c)) for c in self.curves]

    def to_json(self) -> dict:
        return {
            "format": FORMAT_TAG,
            "presentation": json.loads(self.surface.pres.fingerprint),
            "A": self.surface.A.serialize(),
            "B": self.surface.B.serialize(),
            "curves": [c.serialize() for c in self.curves],
        }

    @staticmethod
    def from_json(data: dict, pres: TowerPresentation) -> "CurveCatalog":
        if data.get("format") != FORMAT_TAG:
            raise ValueError("unknown catalog format")
        if json.loads(pres.fingerprint) != data["presentation"]:
            raise ValueError("catalog presentation does not match")
        surface = SurfaceDescriptor(deserialize(pres, data["A"]), deserialize(pres, data["B"]))
        curves = []
        for item in data["curves"]:
            Q = BinaryForm(tuple(deserialize(pres, t) for t in item["Q"]))
            C = BinaryForm(tuple(deserialize(pres, t) for t in item["C"]))
            curves.append(ExceptionalCurve(Q, C, surface))
        return CurveCatalog(surface, curves)


def canonical_sort(curves: Sequence[ExceptionalCurve]) -> List[ExceptionalCurve]:
    return sorted(curves, key=lambda c: c.key())


def unit_surface(pres: Optional[TowerPresentation] = None) -> SurfaceDescriptor:
    pres = pres or tower.cached("l6")
    return SurfaceDescriptor(pres.one(), pres.one(), base_field="Q")


def lift_and_reconstruct(solutions: Sequence[FFSolution], emb: FiniteFieldEmbedding,
                         height: int = 64, start_precision: int = 16,
                         max_precision: int = 1024) -> CurveCatalog:
    """Lift every mod-p solution and reconstruct its coefficients in L6."""
    pres = emb.pres
    surface = unit_surface(pres)
    curves = []
    for sol in solutions:
        precision, h = start_precision, height
        while True:
            if precision > max_precision:
                raise ReconstructionError(f"could not reconstruct the solution {sol}")
            e = hensel_lift(emb, precision)
            lifted = newton_lift(sol, emb.prime, precision)
            try:
                coeffs = [e.reconstruct(v, h) for v in lifted]
                Q = BinaryForm(tuple(coeffs[:3]))
                C = BinaryForm(tuple(coeffs[3:]))
                curve = ExceptionalCurve(Q, C, surface, check=False)
                if curve.satisfies_membership():
                    curves.append(ExceptionalCurve(Q, C, surface))
                    break
            except ReconstructionError:
                pass
            precision *= 2
            h *= 2
    return CurveCatalog(surface, canonical_sort(curves))


def enumerate_unit_curves(prime: Optional[int] = None, pres: Optional[TowerPresentation] = None) -> CurveCatalog:
    """The 240 curves on the unit surface, trying admissible primes in turn."""
    pres = pres or tower.cached("l6")
    primes = [prime] if prime else admissible_primes(31, 6)
    last = None
    for p in primes:
        sols = ff_presolve(p)
        if len(sols) != 240:
            log.info("prime %d gives %d solutions; skipping", p, len(sols))
            last = BadPrimeError(f"prime {p} gives {len(sols)} solutions")
            continue
        try:
            return lift_and_reconstruct(sols, default_embedding(pres, p))
        except LiftError as exc:
            last = exc
    raise BadPrimeError(f"no admissible prime worked: {last}")


def cache_dir() -> Path:
    return Path(os.environ.get("DP1_CACHE_DIR", Path.home() / ".cache" / "delpezzo_bm"))


_MEMO: Dict[str, CurveCatalog] = {}


def unit_catalog(use_cache: bool = True) -> CurveCatalog:
    """Unit catalog, memoized in-process and cached on disk."""
    pres = tower.cached("l6")
    key = unit_surface(pres).fingerprint()
    if key in _MEMO:
        return _MEMO[key]
    path = cache_dir() / f"catalog-{key}.json"
    cat = None
    if use_cache and path.exists():
        try:
            cat = CurveCatalog.from_json(json.loads(path.read_text()), pres)
        except (ValueError, KeyError) as exc:
            log.warning("ignoring unreadable cache %s: %s", path, exc)
    if cat is None:
        cat = enumerate_unit_curves(pres=pres)
        if use_cache:
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(json.dumps(cat.to_json(), separators=(",", ":")))
            except OSError as exc:
                log.warning("could not write cache %s: %s", path, exc)
    _MEMO[key] = cat
    return cat


def l6_into(target: TowerPresentation) -> RingMap:
    """The inclusion of L6 into a presentation containing zeta and s."""
    l6 = tower.cached("l6")
    return RingMap(l6, target, {"zeta": target.gen("zeta"), "s": target.gen("s")})


def catalog_for_surface(unit: CurveCatalog, alpha: TowerElement, beta: TowerElement,
                        surface: Optional[SurfaceDescriptor] = None) -> CurveCatalog:
    """Transport the unit catalog to X(alpha^6, beta^6), keeping the indexing."""
    target = alpha.pres
    surface = surface or SurfaceDescriptor(alpha ** 6, beta ** 6)
    inc = l6_into(target) if target != unit.surface.pres else None
    curves = []
    for c in unit.curves:
        Q, C = c.Q, c.C
        if inc is not None:
            Q, C = Q.map_coeffs(inc), C.map_coeffs(inc)
        curves.append(ExceptionalCurve(Q.rescale(alpha, beta), C.rescale(alpha, beta), surface))
    return CurveCatalog(surface, curves)


def symmetry_actions(pres: TowerPresentation):
    """The maps (x, y) -> (zeta x, y), (x, zeta y), (y, x) on unit-surface curves."""
    z = pres.gen("zeta")
    one = pres.one()

    def mx(c):
        return c.rescale(z, one)

    def my(c):
        return c.rescale(one, z)

    def swap(c):
        return ExceptionalCurve(BinaryForm(c.Q.coeffs[::-1]), BinaryForm(c.C.coeffs[::-1]), c.surface)

    return {"zeta_x": mx, "zeta_y": my, "swap": swap, "bertini": bertini}
