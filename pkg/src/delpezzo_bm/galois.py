"""The group G0 of coefficient automorphisms and its action on the Picard lattice.

An element g = (e, i, a, b) acts on K = k(zeta, s, alpha, beta) by

    zeta -> zeta^e,  s -> (-zeta)^i s,  alpha -> zeta^a alpha,  beta -> zeta^b beta,

with e in {1, -1}.  Composition (g o h)(x) = g(h(x)) gives
(e1 e2, i1 + e1 i2, a1 + e1 a2, b1 + e1 b2).  Generators: sigma = (1, 1, 0, 0),
tau = (-1, 0, 0, 0), iota_A = (1, 0, 1, 0), iota_B = (1, 0, 0, 1).
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import tower
from .forms import ExceptionalCurve
from .lattice import PicardLattice
from .tower import CoeffAutomorphism, RingMap, TowerElement, TowerPresentation

Element = Tuple[int, int, int, int]
IDENTITY: Element = (1, 0, 0, 0)
GENERATORS: Dict[str, Element] = {
    "s": (1, 1, 0, 0),
    "t": (-1, 0, 0, 0),
    "a": (1, 0, 1, 0),
    "b": (1, 0, 0, 1),
}


def compose(g: Element, h: Element) -> Element:
    e1, i1, a1, b1 = g
    e2, i2, a2, b2 = h
    return (e1 * e2, (i1 + e1 * i2) % 3, (a1 + e1 * a2) % 6, (b1 + e1 * b2) % 6)


def inverse(g: Element) -> Element:
    e, i, a, b = g
    return (e, (-e * i) % 3, (-e * a) % 6, (-e * b) % 6)


def power(g: Element, n: int) -> Element:
    out = IDENTITY
    for _ in range(n % element_order(g) if n >= 0 else 0):
        out = compose(out, g)
    if n < 0:
        return power(inverse(g), -n)
    return out


def element_order(g: Element) -> int:
    x, n = g, 1
    while x != IDENTITY:
        x = compose(x, g)
        n += 1
    return n


_WORD_RE = re.compile(r"([stab])(\d*)")


def parse_word(word: str) -> Element:
    """A word such as 's a2 b2' or 'sa2b2' (letters compose left to right as g o h)."""
    text = word.replace(" ", "").replace("*", "")
    if text in ("", "1", "e", "id"):
        return IDENTITY
    pos, out = 0, IDENTITY
    for m in _WORD_RE.finditer(text):
        if m.start() != pos:
            raise ValueError(f"cannot parse word {word!r}")
        pos = m.end()
        g = GENERATORS[m.group(1)]
        for _ in range(int(m.group(2) or 1)):
            out = compose(out, g)
    if pos != len(text):
        raise ValueError(f"cannot parse word {word!r}")
    return out


def parse_subgroup(sp: str) -> List[Element]:
    """Comma-separated generator words, e.g. 's,t,a3b3'."""
    sp = sp.strip()
    if sp in ("", "1", "trivial"):
        return []
    return [parse_word(w) for w in sp.split(",")]


def word_of(g: Element) -> str:
    """A canonical word t^x s^i a^a b^b for g."""
    e, i, a, b = g
    parts = []
    if e == -1:
        parts.append("t")
    # g = tau^x o (1, i', a', b'); tau^{-1} = tau
    rest = compose(GENERATORS["t"], g) if e == -1 else g
    _, i2, a2, b2 = rest
    for letter, k in (("s", i2), ("a", a2), ("b", b2)):
        if k:
            parts.append(letter if k == 1 else f"{letter}{k}")
    return " ".join(parts) or "1"


def closure(gens: Iterable[Element]) -> List[Element]:
    gens = list(gens)
    seen = {IDENTITY}
    queue = deque([IDENTITY])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def case_constraints(cbrt2_in_k: bool, zeta_in_k: bool):
    def ok(g: Element) -> bool:
        return (not cbrt2_in_k or g[1] == 0) and (not zeta_in_k or g[0] == 1)
    return ok


def case_generators(cbrt2_in_k: bool, zeta_in_k: bool) -> List[str]:
    gens = []
    if not cbrt2_in_k:
        gens.append("s")
    if not zeta_in_k:
        gens.append("t")
    return gens + ["a", "b"]


def case_group(cbrt2_in_k: bool, zeta_in_k: bool) -> List[Element]:
    return closure(GENERATORS[g] for g in case_generators(cbrt2_in_k, zeta_in_k))


def quotient_image(g: Element) -> Tuple[int, int]:
    """Image in G0 / <iota_A, iota_B>."""
    return (g[0], g[1])


# ---------------------------------------------------------------------------
# Coefficient action


def coefficient_automorphism(g: Element, pres: TowerPresentation) -> CoeffAutomorphism:
    """The action of g on a presentation over zeta, s (and possibly alpha, beta)."""
    e, i, a, b = g
    return CoeffAutomorphism(pres, tower.galois_images(pres, zeta_exp=e, s_power=i, alpha_shift=a,
                                                        beta_shift=b), name=word_of(g))


def act_on_unit_curve(g: Element, c: ExceptionalCurve, auto: Optional[CoeffAutomorphism] = None) -> ExceptionalCurve:
    """g applied to the curve c(alpha x, beta y), written again in unit coordinates."""
    pres = c.pres
    auto = auto or coefficient_automorphism((g[0], g[1], 0, 0), pres)
    z = pres.gen("zeta")
    Q = c.Q.map_coeffs(auto).rescale(z ** g[2], z ** g[3])
    C = c.C.map_coeffs(auto).rescale(z ** g[2], z ** g[3])
    return ExceptionalCurve(Q, C, c.surface)


class GroupAction:
    """Permutations of the unit catalog and 9x9 matrices for elements of G0."""

    def __init__(self, lattice: PicardLattice):
        self.lattice = lattice
        self.catalog = lattice.catalog
        self._perm: Dict[Element, Tuple[int, ...]] = {IDENTITY: tuple(range(len(self.catalog)))}
        for g in GENERATORS.values():
            self._perm[g] = tuple(self.catalog.permutation(lambda c, g=g: act_on_unit_curve(g, c)))
        self._matrix: Dict[Element, Tuple[Tuple[int, ...], ...]] = {}
        self._complete = False
        names = ["G%d" % i for i in range(1, 10)]
        self._basis_idx = [self.catalog.index_of(lattice.basis_curves[n]) for n in names]

    def perm(self, g: Element) -> Tuple[int, ...]:
        """perm[j] = index of g applied to curve j."""
        if not self._complete:
            self._fill_perms()
        return self._perm[g]

    def _fill_perms(self) -> None:
        # breadth-first over G0: perm(gen o h) = perm(gen) o perm(h)
        queue = deque([IDENTITY])
        seen = {IDENTITY}
        while queue:
            h = queue.popleft()
            ph = self._perm[h]
            for gen in GENERATORS.values():
                g = compose(gen, h)
                if g not in seen:
                    seen.add(g)
                    pg = self._perm[gen]
                    self._perm.setdefault(g, tuple(pg[j] for j in ph))
                    queue.append(g)
        self._complete = True

    def perm_direct(self, g: Element) -> Tuple[int, ...]:
        return tuple(self.catalog.permutation(lambda c: act_on_unit_curve(g, c)))

    def matrix(self, g: Element) -> Tuple[Tuple[int, ...], ...]:
        """Row i is the class of g applied to basis element i (row-vector right action)."""
        m = self._matrix.get(g)
        if m is None:
            p = self.perm(g)
            cls = self.lattice.classes
            rows = [list(cls[p[j]]) for j in self._basis_idx]
            rows[8] = [x + y + z for x, y, z in zip(rows[8], rows[0], rows[1])]
            m = tuple(tuple(r) for r in rows)
            self._matrix[g] = m
        return m

    def class_perm(self, g: Element) -> Tuple[int, ...]:
        return self.perm(g)


# ---------------------------------------------------------------------------
# Realizations on concrete surfaces


@dataclass
class Specialization:
    """R = L6[alpha, beta]/(alpha^6 - A, beta^6 - B) -> target, with a section for target generators."""

    A: int
    B: int
    target: TowerPresentation
    images: Dict[str, TowerElement]  # images of zeta, s, alpha, beta
    kernel: List[str]  # kernel generators as expressions in R
    preimages: Dict[str, str]  # target generator -> expression in R

    @property
    def source(self) -> TowerPresentation:
        return tower.cached("r", self.A, self.B)

    @property
    def ring_map(self) -> RingMap:
        return RingMap(self.source, self.target, self.images)

    def kernel_elements(self) -> List[TowerElement]:
        return [tower.parse_element(self.source, k) for k in self.kernel]

    def descends(self, g: Element) -> Optional[str]:
        """None if g preserves the kernel, otherwise the offending kernel generator."""
        auto = coefficient_automorphism(g, self.source)
        phi = self.ring_map
        for text, k in zip(self.kernel, self.kernel_elements()):
            if not phi(auto(k)).is_zero():
                return text
        return None

    def induced(self, g: Element) -> CoeffAutomorphism:
        auto = coefficient_automorphism(g, self.source)
        phi = self.ring_map
        imgs = {n: phi(auto(tower.parse_element(self.source, expr))) for n, expr in self.preimages.items()}
        return CoeffAutomorphism(self.target, imgs, name=word_of(g))


def warmup_specialization() -> Specialization:
    l6 = tower.cached("l6")
    s = l6.gen("s")
    return Specialization(16, 16, l6, {"zeta": l6.gen("zeta"), "s": s, "alpha": s ** 2, "beta": s ** 2},
                          ["alpha - s**2", "beta - s**2"], {"zeta": "zeta", "s": "s"})


def main_specialization(p: int) -> Specialization:
    K = tower.cached("l6_sqrt", p)
    u = K.gen("u")
    return Specialization(p ** 3, p ** 3, K, {"zeta": K.gen("zeta"), "s": K.gen("s"), "alpha": u, "beta": u},
                          ["alpha - beta", f"alpha**2 - {p}"], {"zeta": "zeta", "s": "s", "u": "alpha"})


class RealizationError(ValueError):
    pass


@dataclass
class GaloisRealization:
    words: List[str]
    generators: List[Element]
    elements: List[Element]
    action: GroupAction = field(repr=False)
    specialization: Optional[Specialization] = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def matrix(self, g: Element):
        return self.action.matrix(g)

    def matrices(self) -> Dict[Element, tuple]:
        return {g: self.matrix(g) for g in self.elements}

    def coefficient_map(self, g: Element) -> CoeffAutomorphism:
        if self.specialization is None:
            raise RealizationError("no specialization attached")
        return self.specialization.induced(g)


def realize_subgroup(words: Sequence[str], action: GroupAction,
                     specialization: Optional[Specialization] = None) -> GaloisRealization:
    gens = [parse_word(w) for w in words]
    if specialization is not None:
        for w, g in zip(words, gens):
            bad = specialization.descends(g)
            if bad is not None:
                raise RealizationError(f"word {w!r} does not preserve the kernel generator {bad!r}")
    return GaloisRealization(list(words), gens, closure(gens), action, specialization)


def galois_matrix(g, action: GroupAction):
    if isinstance(g, str):
        g = parse_word(g)
    return [list(r) for r in action.matrix(g)]
