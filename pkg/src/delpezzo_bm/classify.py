"""Sweep over subgroups of G0 (up to G0-conjugacy) computing H^1 of the Picard lattice."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from . import cohomology, galois
from .galois import Element, GroupAction, compose, inverse

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubgroupRow:
    generators: Tuple[Element, ...]
    order: int
    surjective: bool
    minimal: bool
    divisors: Tuple[int, ...]

    @property
    def words(self) -> str:
        return ",".join(galois.word_of(g) for g in self.generators) or "1"


def conjugate(H: FrozenSet[Element], g: Element) -> FrozenSet[Element]:
    gi = inverse(g)
    return frozenset(compose(compose(g, h), gi) for h in H)


def canonical_form(H: FrozenSet[Element], group: Sequence[Element]) -> Tuple[Element, ...]:
    return min(tuple(sorted(conjugate(H, g))) for g in group)


def subgroups_up_to_conjugacy(group: Sequence[Element]) -> List[Tuple[FrozenSet[Element], Tuple[Element, ...]]]:
    """One (subgroup, generators) pair per conjugacy class of subgroups of ``group``.

    Elements are indexed and subgroups stored as bitmasks; each new subgroup
    marks its whole conjugacy class as seen, and only representatives are
    extended by further cyclic subgroups.
    """
    els = list(group)
    idx = {g: i for i, g in enumerate(els)}
    n = len(els)
    mul = [[idx[compose(g, h)] for h in els] for g in els]
    conj = []
    for g in els:
        gi = idx[inverse(g)]
        conj.append([mul[mul[idx[g]][j]][gi] for j in range(n)])

    def members(mask: int) -> List[int]:
        return [j for j in range(n) if mask >> j & 1]

    def close(gens: Sequence[int]) -> int:
        e = idx[galois.IDENTITY]
        mask = 1 << e
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul[g][x]
                    if not mask >> y & 1:
                        mask |= 1 << y
                        nxt.append(y)
            frontier = nxt
        return mask

    def conjugates(mask: int) -> set:
        mem = members(mask)
        out = set()
        for c in conj:
            m = 0
            for j in mem:
                m |= 1 << c[j]
            out.add(m)
        return out

    cyclic: Dict[int, int] = {}
    for i in range(n):
        cyclic.setdefault(close([i]), i)
    trivial = close([])
    seen = conjugates(trivial)
    reps = [(trivial, ())]
    frontier = list(reps)
    while frontier:
        nxt = []
        for H, gens in frontier:
            for C, c in cyclic.items():
                if C & ~H == 0:
                    continue
                J = close(list(gens) + [c])
                if J in seen:
                    continue
                seen |= conjugates(J)
                nxt.append((J, tuple(gens) + (c,)))
        reps.extend(nxt)
        frontier = nxt
    out = [(frozenset(els[j] for j in members(H)), tuple(els[j] for j in gens)) for H, gens in reps]
    return sorted(out, key=lambda t: (len(t[0]), sorted(t[0])))


def classify(cbrt2_in_k: bool, zeta_in_k: bool, action: GroupAction,
             only_admissible: bool = True) -> List[SubgroupRow]:
    group = galois.case_group(cbrt2_in_k, zeta_in_k)
    full_image = {galois.quotient_image(g) for g in group}
    lat = action.lattice
    rows = []
    for H, gens in subgroups_up_to_conjugacy(group):
        surj = {galois.quotient_image(h) for h in H} == full_image
        if only_admissible and not surj:
            continue
        perms = [action.perm(g) for g in gens]
        minimal, _ = cohomology.is_minimal(perms, lat.classes, lat.pair)
        if only_admissible and not minimal:
            continue
        res = cohomology.h1(sorted(H), list(gens), compose, action.matrix, identity=galois.IDENTITY)
        rows.append(SubgroupRow(tuple(gens), len(H), surj, minimal, tuple(res.divisors)))
    log.info("case cbrt2_in_k=%s zeta_in_k=%s: %d admissible classes", cbrt2_in_k, zeta_in_k, len(rows))
    return rows


def type_set(rows: Sequence[SubgroupRow]) -> List[Tuple[int, ...]]:
    return sorted({r.divisors for r in rows if r.surjective and r.minimal})


def format_type(divs: Sequence[int]) -> str:
    if not divs:
        return "1"
    counts: Dict[int, int] = {}
    for d in divs:
        counts[d] = counts.get(d, 0) + 1
    return " x ".join(f"(Z/{d})^{k}" if k > 1 else f"Z/{d}" for d, k in sorted(counts.items()))


def example_row_h1(words: str, action: GroupAction) -> Tuple[int, ...]:
    gens = [galois.parse_word(w) for w in words.split(",")]
    els = galois.closure(gens)
    return tuple(cohomology.h1(els, gens, compose, action.matrix, identity=galois.IDENTITY).divisors)
