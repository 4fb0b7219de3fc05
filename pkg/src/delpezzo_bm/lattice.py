"""The rank-9 Picard lattice in the basis G1, ..., G8, B9 = G9 + G1 + G2."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg, reference_data
from .enumeration import CurveCatalog
from .forms import ExceptionalCurve, pairing, parse_binary

PicClass = Tuple[int, ...]


def pair(u: Sequence[int], v: Sequence[int], gram: Sequence[Sequence[int]]) -> int:
    return sum(u[i] * gram[i][j] * v[j] for i in range(len(u)) for j in range(len(v)) if u[i] and v[j])


def load_basis_curves(catalog: CurveCatalog) -> Dict[str, ExceptionalCurve]:
    """Parse the transcribed unit curves; repair any that fail membership.

    A failing transcription is replaced by the unique catalog curve with the
    same pairings against the curves that pass (if there is exactly one).
    """
    pres = catalog.surface.pres
    good: Dict[str, ExceptionalCurve] = {}
    bad: List[str] = []
    for name, (q, c) in reference_data.UNIT_CURVES.items():
        curve = ExceptionalCurve(parse_binary(pres, q, 2), parse_binary(pres, c, 3), catalog.surface, check=False)
        if curve.satisfies_membership():
            good[name] = ExceptionalCurve(curve.Q, curve.C, catalog.surface)
        else:
            bad.append(name)
    expected = {"G9": {"G1": 1, "G2": 1}}
    for name in bad:
        target = {g: expected.get(name, {}).get(g, expected.get(g, {}).get(name, 0)) for g in good}
        cands = [c for c in catalog.curves if all(pairing(c, good[g]) == v for g, v in target.items())
                 and c.key() not in {g.key() for g in good.values()}]
        if len(cands) != 1:
            raise ValueError(f"cannot repair transcription of {name}: {len(cands)} candidates")
        good[name] = cands[0]
    return {n: good[n] for n in reference_data.BASIS_ORDER}


@dataclass
class PicardLattice:
    catalog: CurveCatalog
    basis_curves: Dict[str, ExceptionalCurve] = field(default=None)
    gram_matrix: List[List[int]] = field(default=None, repr=False)
    classes: List[PicClass] = field(default=None, repr=False)

    def __post_init__(self):
        if self.basis_curves is None:
            self.basis_curves = load_basis_curves(self.catalog)
        names = reference_data.BASIS_ORDER
        curves = [self.basis_curves[n] for n in names]
        raw = [[pairing(a, b) for b in curves] for a in curves]
        # change of basis G9 -> B9 = G9 + G1 + G2
        change = linalg.identity(9)
        change[8] = [1, 1, 0, 0, 0, 0, 0, 0, 1]
        self._change = change
        self.gram_matrix = linalg.matmul(linalg.matmul(change, raw), linalg.transpose(change))
        self._gram_inv = _integer_inverse(self.gram_matrix)
        if self.classes is None:
            self.classes = [self.class_of(c) for c in self.catalog.curves]
        self._class_index = {v: i for i, v in enumerate(self.classes)}

    # -- core operations ---------------------------------------------------
    def gram(self) -> List[List[int]]:
        return [list(r) for r in self.gram_matrix]

    def basis_pairings(self, c: ExceptionalCurve) -> List[int]:
        names = reference_data.BASIS_ORDER
        raw = [pairing(c, self.basis_curves[n]) for n in names]
        return linalg.matvec(self._change, raw)

    def class_of(self, c: ExceptionalCurve) -> PicClass:
        w = self.basis_pairings(c)
        v = linalg.vecmat(w, self._gram_inv)
        return tuple(int(x) for x in v)

    def anticanonical(self) -> PicClass:
        """-K: the class pairing to 1 with every basis curve and to 1 with itself."""
        ones = [1] * 8 + [1 + 1 + 1]  # B9 has degree 3
        return tuple(int(x) for x in linalg.vecmat(ones, self._gram_inv))

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        return pair(u, v, self.gram_matrix)

    def index_of_class(self, v: Sequence[int]) -> int:
        return self._class_index[tuple(v)]

    def curve_of_class(self, v: Sequence[int]) -> ExceptionalCurve:
        return self.catalog.curves[self.index_of_class(v)]


def _integer_inverse(m: Sequence[Sequence[int]]) -> List[List[int]]:
    n = len(m)
    cols = [linalg.solve(m, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    inv = linalg.transpose(cols)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("Gram matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def exceptional_classes(gram: Optional[Sequence[Sequence[int]]] = None,
                        anticanonical: Optional[Sequence[int]] = None) -> List[PicClass]:
    """All integer v with (v, v) = -1 and (v, -K) = 1, for the diagonal form diag(-1^8, 1).

    Writing a = v9, the conditions read sum_{i<=8} v_i = 1 - 3a and
    sum v_i^2 = a^2 + 1.  Cauchy-Schwarz gives (1 - 3a)^2 <= 8(a^2 + 1), so
    -1 <= a <= 7; the search is exhaustive within that range.
    """
    gram = gram or [[(-1 if i < 8 else 1) if i == j else 0 for j in range(9)] for i in range(9)]
    if any(gram[i][j] != ((-1 if i < 8 else 1) if i == j else 0) for i in range(9) for j in range(9)):
        raise ValueError("enumeration assumes the diagonal Gram matrix")
    out: List[PicClass] = []
    lo = math.ceil((6 - math.sqrt(36 + 4 * 7)) / 2)  # roots of a^2 - 6a - 7 = 0
    hi = math.floor((6 + math.sqrt(36 + 4 * 7)) / 2)
    for a in range(lo, hi + 1):
        target_sum = 1 - 3 * a
        target_sq = a * a + 1

        def rec(prefix: List[int], rem_sum: int, rem_sq: int, slots: int):
            if slots == 0:
                if rem_sum == 0 and rem_sq == 0:
                    out.append(tuple(prefix) + (a,))
                return
            # remaining slots must satisfy rem_sum^2 <= slots * rem_sq
            if rem_sum * rem_sum > slots * rem_sq:
                return
            bound = math.isqrt(rem_sq)
            for x in range(-bound, bound + 1):
                rec(prefix + [x], rem_sum - x, rem_sq - x * x, slots - 1)

        rec([], target_sum, target_sq, 8)
    if anticanonical is not None:
        k = anticanonical
        out = [v for v in out if pair(v, k, gram) == 1]
    return sorted(out)


def bertini_class(v: Sequence[int], anticanonical: Sequence[int]) -> PicClass:
    """-2K - v."""
    return tuple(2 * k - x for k, x in zip(anticanonical, v))
