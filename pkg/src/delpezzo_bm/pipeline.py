"""End-to-end computations for the two worked examples and the obstruction verdict."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import cohomology, descent, enumeration, forms, galois, linalg, local, tower
from . import reference_data as R
from .embedding import is_prime
from .forms import SurfaceDescriptor, WeightedPoly
from .galois import GroupAction
from .lattice import PicardLattice

log = logging.getLogger(__name__)


class PipelineError(RuntimeError):
    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


@dataclass
class Context:
    catalog: enumeration.CurveCatalog
    lattice: PicardLattice
    action: GroupAction


_CONTEXT: Optional[Context] = None


def context(use_cache: bool = True) -> Context:
    """The unit catalog, its Picard lattice and the G0 action (built once per process)."""
    global _CONTEXT
    if _CONTEXT is None:
        cat = enumeration.unit_catalog(use_cache=use_cache)
        lat = PicardLattice(cat)
        _CONTEXT = Context(cat, lat, GroupAction(lat))
    return _CONTEXT


def _stage(name: str):
    def wrap(fn):
        def inner(*args, **kwargs):
            t = time.time()
            try:
                out = fn(*args, **kwargs)
            except PipelineError:
                raise
            except Exception as exc:  # tag the failing stage
                raise PipelineError(name, f"{type(exc).__name__}: {exc}") from exc
            log.info("stage %s finished in %.1fs", name, time.time() - t)
            return out
        return inner
    return wrap


def realization_consistent(ctx: Context, catalog: enumeration.CurveCatalog,
                           sp: galois.Specialization, words: Sequence[str]) -> bool:
    """The induced coefficient action on the transported catalog matches the unit-catalog permutation."""
    for w in words:
        g = galois.parse_word(w)
        auto = sp.induced(g)
        direct = catalog.permutation(lambda c: c.map_coeffs(auto))
        if tuple(direct) != tuple(ctx.action.perm(g)):
            return False
    return True


def tate_certificate(m, module_basis, vectors) -> Dict[str, object]:
    res = cohomology.tate_h1_cyclic(m, module_basis)
    ker, im = cohomology.tate_kernel_and_image(m, module_basis)
    inker = all(cohomology.in_lattice(v, ker) for v in vectors)
    gen = inker and cohomology.generates_quotient(vectors, ker, im)
    return {"divisors": res.divisors, "vectors_in_kernel": inker, "vectors_generate": gen}


# ---------------------------------------------------------------------------
# Warm-up: w^2 = z^3 + 16 x^6 + 16 y^6 over Q(zeta)


@dataclass
class WarmupReport:
    tate: Dict[str, object]
    minimal: bool
    numerator: WeightedPoly
    denominator: WeightedPoly
    matches_fixture: bool
    values: Dict[str, object]
    invariant_sum: Fraction
    rows: List[local.InvariantRow]
    realization_ok: bool
    reciprocity_ok: bool

    @property
    def fails_weak_approximation(self) -> bool:
        return self.invariant_sum != 0

    def certificate(self) -> dict:
        return {
            "example": "warmup",
            "surface": "w^2 = z^3 + 16 x^6 + 16 y^6 over Q(zeta)",
            "group": "<s a2 b2>",
            "tate_h1": self.tate,
            "minimal": self.minimal,
            "realization_consistent": self.realization_ok,
            "f": {"numerator": forms.format_weighted(self.numerator),
                  "denominator": forms.format_weighted(self.denominator),
                  "matches_fixture": self.matches_fixture},
            "values": {k: str(v) for k, v in self.values.items()},
            "invariants": [{"place": r.place, "point": list(r.point), "value": r.value,
                            "inv": str(r.invariant)} for r in self.rows],
            "reciprocity_checks_pass": self.reciprocity_ok,
            "invariant_sum": str(self.invariant_sum),
            "verdict": "weak approximation fails" if self.fails_weak_approximation else "no obstruction found",
        }


WARMUP_P1 = (1, 0, 0, 4)
WARMUP_P2 = (0, 1, 0, 4)


@_stage("warmup")
def warmup_example(ctx: Optional[Context] = None) -> WarmupReport:
    ctx = ctx or context()
    l6 = tower.cached("l6")
    s = l6.gen("s")
    surface = SurfaceDescriptor(l6.scalar(16), l6.scalar(16), base_field="Q(zeta)")
    cat = enumeration.catalog_for_surface(ctx.catalog, s ** 2, s ** 2, surface)
    sp = galois.warmup_specialization()
    real = galois.realize_subgroup(["s a2 b2"], ctx.action, sp)
    rho = real.generators[0]
    ok = realization_consistent(ctx, cat, sp, real.words)

    m = ctx.action.matrix(rho)
    tate = tate_certificate(m, linalg.identity(9), R.WARMUP_TATE_VECTORS)
    minimal, _ = cohomology.is_minimal([ctx.action.perm(rho)], ctx.lattice.classes, ctx.lattice.pair)

    idx = {n: ctx.catalog.index_of(c) for n, c in ctx.lattice.basis_curves.items()}
    g2, g5 = cat[idx["G2"]], cat[idx["G5"]]
    point = surface.point(surface.anticanonical_point)
    num, den = descent.norm_function(g2, g5, sp.induced(rho), surface, point)
    ref_num = forms.parse_weighted(l6, R.WARMUP_NUMERATOR, 3)
    ref_den = forms.parse_weighted(l6, R.WARMUP_DENOMINATOR, 3)
    matches = num == ref_num and den == ref_den

    v1 = forms.evaluate_weighted((num, den), surface.point(WARMUP_P1))
    v2 = forms.evaluate_weighted((num, den), surface.point(WARMUP_P2))
    values = {WARMUP_P1: local.to_qzeta(v1), WARMUP_P2: local.to_qzeta(v2)}
    pt = local.AdelicPoint(WARMUP_P1, {local.PRIME_ABOVE_3: WARMUP_P2})
    total, rows = local.adelic_sum_cubic(values, pt)
    recip = all(local.adelic_sum_cubic(values, local.AdelicPoint(P))[0] == 0 for P in values)
    return WarmupReport(tate, minimal, num, den, matches,
                        {"f(P1)": values[WARMUP_P1], "f(P2)": values[WARMUP_P2],
                         "f(O)": forms.evaluate_weighted((num, den), point)},
                        total, rows, ok, recip)


# ---------------------------------------------------------------------------
# Main example: w^2 = z^3 + p^3 x^6 + p^3 y^6 over Q


@dataclass
class MainReport:
    p: int
    tate: Dict[str, object]
    h1_H: List[int]
    fixed_rank_H: int
    fixed_rank_G: int
    minimal: bool
    realization_ok: bool
    cocycle: List[str]
    f1_matches: bool
    f2_matches_corrected: bool
    f2_matches_printed: bool
    algebra: descent.CyclicAlgebraDatum
    q_matches: bool
    r_matches: bool
    values: Dict[str, Fraction]
    rows: List[Dict[str, object]]
    sums: Dict[str, Fraction]
    reciprocity_ok: bool
    hilbert_formula_ok: bool
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def fails_weak_approximation(self) -> bool:
        return any(v != 0 for v in self.sums.values())

    def certificate(self) -> dict:
        alg = self.algebra
        return {
            "example": "main",
            "p": self.p,
            "surface": f"w^2 = z^3 + {self.p}^3 x^6 + {self.p}^3 y^6 over Q",
            "group": "G = <s, t, a3 b3>, H = <s, t>",
            "tate_h1": self.tate,
            "h1_H": self.h1_H,
            "fixed_rank_H": self.fixed_rank_H,
            "fixed_rank_G": self.fixed_rank_G,
            "minimal": self.minimal,
            "realization_consistent": self.realization_ok,
            "cocycle": self.cocycle,
            "f1_matches_fixture": self.f1_matches,
            "f2_matches_corrected_fixture": self.f2_matches_corrected,
            "f2_matches_printed_fixture": self.f2_matches_printed,
            "algebra": {
                "extension": f"Q(sqrt({self.p}))/Q",
                "scale": str(alg.scale),
                "q": forms.format_weighted(alg.q),
                "r": forms.format_weighted(alg.r),
                "q_matches_fixture": self.q_matches,
                "r_matches_fixture": self.r_matches,
                "transcript": alg.transcript,
            },
            "values": {k: str(v) for k, v in self.values.items()},
            "invariants": [{k: str(v) for k, v in row.items()} for row in self.rows],
            "hilbert_case_formula_agrees": self.hilbert_formula_ok,
            "reciprocity_checks_pass": self.reciprocity_ok,
            "invariant_sums": {k: str(v) for k, v in self.sums.items()},
            "verdict": "weak approximation fails" if self.fails_weak_approximation
            else "no obstruction from this algebra",
        }


def main_points(p: int) -> Tuple[Tuple[int, int, int, int], Tuple[int, int, int, int]]:
    return (1, 0, -p, 0), (0, 1, -p, 0)


@_stage("main")
def main_example(p: int, ctx: Optional[Context] = None, verify_forms: bool = True) -> MainReport:
    if p < 5 or not is_prime(p):
        raise PipelineError("config", f"p = {p} must be a prime >= 5")
    ctx = ctx or context()
    times: Dict[str, float] = {}
    t = time.time()
    K = tower.cached("l6_sqrt", p)
    u = K.gen("u")
    surface = SurfaceDescriptor(K.scalar(p ** 3), K.scalar(p ** 3))
    cat = enumeration.catalog_for_surface(ctx.catalog, u, u, surface)
    sp = galois.main_specialization(p)
    real = galois.realize_subgroup(["s", "t", "a3 b3"], ctx.action, sp)
    ok = realization_consistent(ctx, cat, sp, real.words)
    times["realization"] = time.time() - t

    t = time.time()
    act = ctx.action
    s_, t_, rho = real.generators
    fixed_H = cohomology.fixed_submodule([act.matrix(s_), act.matrix(t_)])
    fixed_G = cohomology.fixed_submodule([act.matrix(g) for g in real.generators])
    tate = tate_certificate(act.matrix(rho), fixed_H, R.MAIN_TATE_VECTORS)
    H = galois.closure([s_, t_])
    h1H = cohomology.h1(H, [s_, t_], galois.compose, act.matrix, identity=galois.IDENTITY).divisors
    minimal, _ = cohomology.is_minimal([act.perm(g) for g in real.generators], ctx.lattice.classes,
                                       ctx.lattice.pair)
    times["cohomology"] = time.time() - t

    t = time.time()
    idx = {n: ctx.catalog.index_of(c) for n, c in ctx.lattice.basis_curves.items()}
    g6, g8 = cat[idx["G6"]], cat[idx["G8"]]
    try:
        cocycle = descent.build_descent(g6, g8, [s_, t_], sp.induced, surface)
    except descent.DescentError as exc:
        raise PipelineError("descent", str(exc)) from exc
    consts = {"p": p}
    f1 = forms.parse_weighted(K, R.MAIN_F1, 4, consts).content_normalized()
    f2 = forms.parse_weighted(K, R.MAIN_F2_CORRECTED, 4, consts).content_normalized()
    f2p = forms.parse_weighted(K, R.MAIN_F2, 4, consts).content_normalized()
    f1_ok = cocycle.numerators[s_] == f1
    f2_ok = cocycle.numerators[t_] == f2
    f2p_ok = cocycle.numerators[t_] == f2p
    times["descent"] = time.time() - t

    t = time.time()
    try:
        alg = descent.extract_cyclic_algebra(cocycle, sp.induced(rho), p, generator="a3 b3",
                                             verify=verify_forms)
    except descent.DescentError as exc:
        raise PipelineError("algebra", str(exc)) from exc
    q_ref, q_scale = descent.canonical_rational_form(forms.parse_weighted(K, R.MAIN_Q, 12, consts))
    r_ref, r_scale = descent.canonical_rational_form(forms.parse_weighted(K, R.MAIN_R, 12, consts))
    q_ok, r_ok = alg.q == q_ref, alg.r == r_ref
    if q_ok and r_ok:
        # Use the printed normalization of q and r so that f matches it exactly.
        alg.scale = q_scale / r_scale
        alg.transcript.append(f"scale {alg.scale} taken from the printed normalization of q and r")
    times["algebra"] = time.time() - t

    t = time.time()
    P1, P2 = main_points(p)
    for P in (P1, P2):
        surface.point(P)
    c1, c2 = alg.value(P1).rational(), alg.value(P2).rational()
    values = {"f(P1)": c1, "f(P2)": c2, "f(O)": alg.value(surface.anticanonical_point).rational()}
    places = local.quadratic_support([p, c1, c2])
    rows = []
    for v in places:
        rows.append({"place": v, "inv(P1)": local.quadratic_invariant(p, c1, v),
                     "inv(P2)": local.quadratic_invariant(p, c2, v)})
    vals = {P1: c1, P2: c2}
    sums = {}
    for v in places:
        if v == local.INF:
            continue
        total, _ = local.adelic_sum_quadratic(p, vals, local.AdelicPoint(P1, {v: P2}))
        sums[f"P1 except P2 at {v}"] = total
    recip = all(local.adelic_sum_quadratic(p, vals, local.AdelicPoint(P))[0] == 0 for P in vals)
    formula_ok = all(local.hilbert_symbol(p, 3, q) == local.hilbert_case_formula(p, q) for q in (2, 3, p))
    times["invariants"] = time.time() - t
    return MainReport(p, tate, h1H, len(fixed_H), len(fixed_G), minimal, ok, cocycle.transcript,
                      f1_ok, f2_ok, f2p_ok, alg, q_ok, r_ok, values, rows, sums, recip, formula_ok, times)


def obstruction_verdict(example: str, p: Optional[int] = None) -> dict:
    """Run the full pipeline for 'warmup' or 'main' (with prime p) and return the certificate."""
    if example == "warmup":
        return warmup_example().certificate()
    if example == "main":
        if p is None:
            raise PipelineError("config", "the main example needs a prime p")
        return main_example(p).certificate()
    raise PipelineError("config", f"unknown example {example!r}")
