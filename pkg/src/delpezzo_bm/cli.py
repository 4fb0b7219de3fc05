"""Command-line driver: enumerate, galois, h1, classify, obstruct, symbols.

Every command prints a JSON document (sorted keys) and optionally writes it to
--out.  Exit codes: 0 success, 2 invalid configuration, 3 pipeline failure,
4 a self-check inside the result failed.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from . import classify as classify_mod
from . import cohomology, enumeration, galois, local, pipeline, tower

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PIPELINE = 3
EXIT_CHECK = 4

CASES = {
    "q": (False, False),
    "zeta": (False, True),
    "cbrt2": (True, False),
    "both": (True, True),
}

log = logging.getLogger("delpezzo_bm")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    example: Optional[str] = None
    p: Optional[int] = None
    case: str = "q"
    subgroup: str = "full"
    out: Optional[Path] = None
    verbose: int = 0
    unit: bool = True
    extra: dict = field(default_factory=dict)

    def validate(self) -> List[str]:
        """Raise ConfigError on invalid settings; return warnings."""
        warnings = []
        if self.case not in CASES and self.case != "all":
            raise ConfigError(f"unknown case {self.case!r}; choose from {sorted(CASES)}")
        if self.example not in (None, "warmup", "main"):
            raise ConfigError(f"unknown example {self.example!r}")
        if self.example == "main":
            if self.p is None:
                raise ConfigError("--p is required for the main example")
            if self.p < 5 or not _is_prime(self.p):
                raise ConfigError(f"p = {self.p} must be a prime >= 5")
            if self.p % 12 == 1:
                warnings.append(f"p = {self.p} is 1 mod 12: no obstruction expected from this algebra")
        return warnings


def _is_prime(n: int) -> bool:
    from .embedding import is_prime
    return is_prime(n)


def _dump(data, out: Optional[Path]) -> None:
    text = json.dumps(data, indent=2, sort_keys=True, default=str)
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text + "\n")
    print(text)


def _case_group(case: str):
    return galois.case_group(*CASES[case])


def _subgroup(cfg: RunConfig):
    if cfg.subgroup == "full":
        group = _case_group(cfg.case)
        gens = [galois.GENERATORS[g] for g in galois.case_generators(*CASES[cfg.case])]
        return group, gens
    gens = galois.parse_subgroup(cfg.subgroup)
    ok = galois.case_constraints(*CASES[cfg.case])
    bad = [galois.word_of(g) for g in gens if not ok(g)]
    if bad:
        raise ConfigError(f"elements {bad} are not in G0 for case {cfg.case!r}")
    return galois.closure(gens), gens


# ---------------------------------------------------------------------------
# Commands


def cmd_enumerate(cfg: RunConfig) -> int:
    ctx = pipeline.context()
    cat = ctx.catalog
    if cfg.example == "main":
        K = tower.cached("l6_sqrt", cfg.p)
        u = K.gen("u")
        cat = enumeration.catalog_for_surface(cat, u, u)
    elif cfg.example == "warmup":
        s = tower.cached("l6").gen("s")
        cat = enumeration.catalog_for_surface(cat, s ** 2, s ** 2)
    bp = cat.bertini_partner
    checks = {"count": len(cat),
              "bertini_closed": all(bp[bp[i]] == i != bp[i] for i in range(len(cat))),
              "membership": all(c.satisfies_membership() for c in cat.curves)}
    if cfg.example is None:
        acts = enumeration.symmetry_actions(cat.surface.pres)
        checks["symmetry_closed"] = {name: sorted(cat.permutation(f)) == list(range(len(cat)))
                                     for name, f in acts.items()}
    data = {"surface": cfg.example or "unit", "checks": checks, "catalog": cat.to_json()}
    _dump(data, cfg.out)
    passed = (checks["count"] == 240 and checks["bertini_closed"] and checks["membership"]
              and all(checks.get("symmetry_closed", {}).values()))
    return EXIT_OK if passed else EXIT_CHECK


def cmd_galois(cfg: RunConfig) -> int:
    ctx = pipeline.context()
    group, gens = _subgroup(cfg)
    data = {"case": cfg.case, "order": len(group),
            "matrices": {galois.word_of(g): [list(r) for r in ctx.action.matrix(g)] for g in gens}}
    _dump(data, cfg.out)
    return EXIT_OK


def cmd_h1(cfg: RunConfig) -> int:
    ctx = pipeline.context()
    act = ctx.action
    group, gens = _subgroup(cfg)
    res = cohomology.h1(group, gens, galois.compose, act.matrix, identity=galois.IDENTITY)
    minimal, cert = cohomology.is_minimal([act.perm(g) for g in gens], ctx.lattice.classes, ctx.lattice.pair)
    data = {"case": cfg.case, "subgroup": [galois.word_of(g) for g in gens], "order": len(group),
            "h1": {"divisors": res.divisors, "type": classify_mod.format_type(res.divisors),
                   "generators": res.generators},
            "minimal": minimal, "minimality_certificate": cert}
    if len(gens) == 1:
        data["tate_h1"] = cohomology.tate_h1_cyclic(act.matrix(gens[0])).divisors
    _dump(data, cfg.out)
    if "tate_h1" in data and data["tate_h1"] != res.divisors:
        return EXIT_CHECK
    return EXIT_OK


def cmd_classify(cfg: RunConfig) -> int:
    ctx = pipeline.context()
    cases = sorted(CASES) if cfg.case == "all" else [cfg.case]
    data = {}
    union = set()
    for name in cases:
        rows = classify_mod.classify(*CASES[name], ctx.action)
        types = classify_mod.type_set(rows)
        union |= set(types)
        data[name] = {
            "types": [classify_mod.format_type(t) for t in types],
            "rows": [{"generators": r.words, "order": r.order, "h1": classify_mod.format_type(r.divisors)}
                     for r in rows],
        }
    result = {"cases": data, "union": [classify_mod.format_type(t) for t in sorted(union)],
              "union_size": len(union)}
    _dump(result, cfg.out)
    no_five = all(d % 5 for t in union for d in t)
    return EXIT_OK if no_five else EXIT_CHECK


def cmd_obstruct(cfg: RunConfig) -> int:
    cert = pipeline.obstruction_verdict(cfg.example or "main", cfg.p)
    _dump(cert, cfg.out)
    checks = [cert.get("realization_consistent"), cert.get("reciprocity_checks_pass"), cert.get("minimal")]
    if cfg.example == "main" or cfg.example is None:
        checks.append(cert["algebra"]["q_matches_fixture"] and cert["algebra"]["r_matches_fixture"])
    else:
        checks.append(cert["f"]["matches_fixture"])
    return EXIT_OK if all(checks) else EXIT_CHECK


def _parse_zeta_place(text: str) -> local.PlaceZeta:
    """'3', '2', '5' or '7:3' (split prime with zeta = 3 mod 7)."""
    if ":" in text:
        ell, root = (int(x) for x in text.split(":"))
        place = local.PlaceZeta(ell, "split", root)
        if place not in local.places_above(ell):
            raise ConfigError(f"{root} is not a primitive sixth root of unity mod {ell}")
        return place
    ell = int(text)
    above = local.places_above(ell)
    if len(above) != 1:
        raise ConfigError(f"{ell} splits in Q(zeta); give the place as {ell}:root")
    return above[0]


def cmd_symbols(cfg: RunConfig) -> int:
    ex = cfg.extra
    data = {}
    if ex.get("hilbert"):
        a, b = (Fraction(x) for x in ex["hilbert"])
        places = [ex["place"]] if ex.get("place") else [str(v) for v in local.quadratic_support([a, b])]
        data["hilbert"] = {}
        for v in places:
            pv = v if v == local.INF else int(v)
            data["hilbert"][str(v)] = local.hilbert_symbol(a, b, pv)
    if ex.get("cubic"):
        Qz = tower.cached("qzeta")
        c = tower.parse_element(Qz, ex["cubic"])
        if ex.get("place"):
            places = [_parse_zeta_place(ex["place"])]
        else:
            places = local.cubic_support(c)
        data["cubic"] = {str(v): local.cubic_symbol(c, v) for v in places}
        data["cubic_sum_mod_3"] = sum(data["cubic"].values()) % 3 if not ex.get("place") else None
    if not data:
        raise ConfigError("give --hilbert A B and/or --cubic EXPR")
    _dump(data, cfg.out)
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "galois": cmd_galois,
    "h1": cmd_h1,
    "classify": cmd_classify,
    "obstruct": cmd_obstruct,
    "symbols": cmd_symbols,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="delpezzo-bm",
                                 description="Exact computations on diagonal degree-1 del Pezzo surfaces.")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, example=False, case=False, subgroup=False):
        p.add_argument("--out", type=Path, help="also write the JSON result here")
        if example:
            p.add_argument("--example", choices=["warmup", "main"])
            p.add_argument("--p", type=int, help="prime for the main example")
        if case:
            p.add_argument("--case", default="q", help="q, zeta, cbrt2 or both (classify also accepts all)")
        if subgroup:
            p.add_argument("--subgroup", default="full", help="comma-separated words such as 's,t,a3b3', or 'full'")

    p = sub.add_parser("enumerate", help="the 240 exceptional curves")
    p.add_argument("--unit", action="store_true", help="the surface w^2 = z^3 + x^6 + y^6 (default)")
    common(p, example=True)
    common(sub.add_parser("galois", help="9x9 matrices of group elements"), case=True, subgroup=True)
    common(sub.add_parser("h1", help="H^1 of a subgroup acting on Pic"), case=True, subgroup=True)
    common(sub.add_parser("classify", help="H^1 types over all admissible minimal subgroups"), case=True)
    common(sub.add_parser("obstruct", help="full obstruction pipeline for a worked example"), example=True)
    p = sub.add_parser("symbols", help="Hilbert and cubic norm-residue symbols")
    p.add_argument("--hilbert", nargs=2, metavar=("A", "B"))
    p.add_argument("--cubic", metavar="EXPR", help="element of Q(zeta), e.g. 'zeta' or '1/4'")
    p.add_argument("--place", help="prime, 'inf', or ell:root for a split prime of Q(zeta)")
    common(p)
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    extra = {k: getattr(args, k, None) for k in ("hilbert", "cubic", "place")}
    return RunConfig(command=args.command, example=getattr(args, "example", None), p=getattr(args, "p", None),
                     case=getattr(args, "case", "q"), subgroup=getattr(args, "subgroup", "full"),
                     out=getattr(args, "out", None), verbose=args.verbose, extra=extra)


def run(cfg: RunConfig) -> int:
    try:
        for w in cfg.validate():
            log.warning(w)
        return COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except pipeline.PipelineError as exc:
        print(f"pipeline error: {exc}", file=sys.stderr)
        return EXIT_CONFIG if exc.stage == "config" else EXIT_PIPELINE
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
