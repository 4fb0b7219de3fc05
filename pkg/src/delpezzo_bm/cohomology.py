"""H^1 of finite groups acting on Z^9, Tate cohomology of cyclic groups,
fixed sublattices, minimality and the subgroup classification sweep.

Matrices are given in the row-vector convention (v -> v M_g, with
M_{gh} = M_h M_g).  Internally cocycles use the transposes T_g = M_g^T, which
form a left action: f(gh) = f(g) + T_g f(h).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from . import linalg

Matrix = Sequence[Sequence[int]]


@dataclass
class H1Result:
    divisors: List[int]
    generators: List[List[int]] = field(default_factory=list)

    @property
    def order(self) -> int:
        out = 1
        for d in self.divisors:
            out *= d
        return out

    def type_string(self) -> str:
        if not self.divisors:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.divisors)


def _nontrivial(divs: Sequence[int]) -> List[int]:
    return [d for d in divs if d != 1]


class _EchelonBasis:
    """Incrementally maintained rational row echelon basis."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: Dict[int, List[Fraction]] = {}

    def add(self, row: Sequence) -> bool:
        v = [Fraction(x) for x in row]
        for c in sorted(self.rows):
            if v[c]:
                f = v[c]
                r = self.rows[c]
                v = [a - f * b for a, b in zip(v, r)]
        piv = next((c for c, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        for c, r in self.rows.items():
            if r[piv]:
                f = r[piv]
                self.rows[c] = [a - f * b for a, b in zip(r, v)]
        self.rows[piv] = v
        return True

    def __len__(self) -> int:
        return len(self.rows)


def fixed_submodule(matrices: Sequence[Matrix], n: int = 9) -> List[List[int]]:
    """Integral basis (rows) of {v in Z^n : v M = v for every M}."""
    eqs = []
    for m in matrices:
        mt = linalg.transpose(m)
        for i in range(n):
            eqs.append([mt[i][j] - (1 if i == j else 0) for j in range(n)])
    if not eqs:
        return linalg.identity(n)
    return linalg.integer_kernel(eqs, n)


def _quotient(sub_coords: List[List[int]], rank: int) -> Tuple[List[int], List[List[int]]]:
    """Invariant factors of Z^rank / span(sub_coords) and representatives (rows of V^-1)."""
    if not sub_coords:
        return [0] * rank, linalg.identity(rank)
    u, d, v, _ = linalg.smith_normal_form(sub_coords)
    vinv = _unimodular_inverse(v)
    divs = []
    for i in range(rank):
        divs.append(d[i][i] if i < len(d) else 0)
    return divs, vinv


def _unimodular_inverse(v: Matrix) -> List[List[int]]:
    n = len(v)
    cols = [linalg.solve(v, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return [[int(x) for x in row] for row in linalg.transpose(cols)]


def h1(elements: Sequence[Hashable], generators: Sequence[Hashable],
       compose: Callable[[Hashable, Hashable], Hashable], matrix: Callable[[Hashable], Matrix],
       n: int = 9, identity: Optional[Hashable] = None) -> H1Result:
    """H^1(G, Z^n) from a Cayley-graph spanning tree.

    Unknowns are the values x_j = f(s_j) on the generators.  Walking the
    Cayley graph by left multiplication, each element gets f(g) as a linear
    expression in the x_j; every non-tree edge yields the linear relation
    f(s g) = x_s + T_s f(g).  Cocycles are the integer kernel of these
    relations; coboundaries are x_j = (T_j - 1) v.
    """
    gens = [g for g in dict.fromkeys(generators)]
    if identity is None:
        identity = next(g for g in elements if all(compose(g, h) == h for h in elements[:3]))
    gens = [g for g in gens if g != identity]
    m = len(gens)
    if m == 0:
        return H1Result([])
    N = n * m
    T = {g: linalg.transpose(matrix(g)) for g in gens}

    fixed_rank = len(fixed_submodule([matrix(g) for g in gens], n))
    target_rank = N - (n - fixed_rank)

    # f(g) as an n x N integer matrix
    expr: Dict[Hashable, List[List[int]]] = {identity: [[0] * N for _ in range(n)]}
    ech = _EchelonBasis(N)
    relations = []
    queue = deque([identity])

    def edge_expr(j: int, fg: List[List[int]]) -> List[List[int]]:
        tj = T[gens[j]]
        out = linalg.matmul(tj, fg)
        for r in range(n):
            out[r][j * n + r] += 1
        return out

    while queue:
        g = queue.popleft()
        for j, s in enumerate(gens):
            h = compose(s, g)
            e = edge_expr(j, expr[g])
            if h not in expr:
                expr[h] = e
                queue.append(h)
            elif len(ech) < target_rank:
                diff = [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(expr[h], e)]
                for row in diff:
                    if any(row) and ech.add(row):
                        relations.append(row)
    z1 = linalg.integer_kernel(relations, N) if relations else linalg.identity(N)
    if not z1:
        return H1Result([])
    # coboundaries
    cob = []
    for i in range(n):
        v = [1 if k == i else 0 for k in range(n)]
        row = []
        for s in gens:
            tv = linalg.matvec(T[s], v)
            row.extend(a - b for a, b in zip(tv, v))
        cob.append(row)
    coords = [linalg.coordinates(z1, c) for c in cob]
    divs, vinv = _quotient([c for c in coords if any(c)], len(z1))
    if any(d == 0 for d in divs):
        raise ArithmeticError("H^1 has a free part; the matrices do not define a finite group action")
    gens_out = []
    for i, d in enumerate(divs):
        if d > 1:
            comb = [sum(vinv[i][k] * z1[k][c] for k in range(len(z1))) for c in range(N)]
            gens_out.append(comb)
    return H1Result(_nontrivial(divs), gens_out)


def matrix_power(m: Matrix, k: int) -> List[List[int]]:
    out = linalg.identity(len(m))
    for _ in range(k):
        out = linalg.matmul(out, m)
    return out


def matrix_order(m: Matrix, limit: int = 1000) -> int:
    ident = linalg.identity(len(m))
    x = [list(r) for r in m]
    k = 1
    while x != ident:
        x = linalg.matmul(x, m)
        k += 1
        if k > limit:
            raise ValueError("matrix does not have finite order")
    return k


def restrict_to_submodule(m: Matrix, basis: Sequence[Sequence[int]]) -> List[List[int]]:
    """Matrix R with B M = R B for a row basis B of an M-stable sublattice."""
    rows = []
    bt = linalg.transpose(basis)
    for b in basis:
        img = linalg.vecmat(b, m)
        x = linalg.solve(bt, img)
        if any(c.denominator != 1 for c in x):
            raise ValueError("submodule is not stable")
        rows.append([int(c) for c in x])
    return rows


def tate_h1_cyclic(m: Matrix, module_basis: Optional[Sequence[Sequence[int]]] = None) -> H1Result:
    """ker N / im (1 - M) for the cyclic group generated by M (row-vector action).

    With ``module_basis`` the computation happens on that stable sublattice;
    generator representatives are returned in ambient coordinates.
    """
    n_amb = len(m)
    if module_basis is None:
        module_basis = linalg.identity(n_amb)
    r = restrict_to_submodule(m, module_basis)
    k = len(r)
    order = matrix_order(r)
    norm = [[0] * k for _ in range(k)]
    p = linalg.identity(k)
    for _ in range(order):
        norm = [[a + b for a, b in zip(x, y)] for x, y in zip(norm, p)]
        p = linalg.matmul(p, r)
    # row vectors v with v N = 0  <=>  N^T v^T = 0
    ker = linalg.integer_kernel(linalg.transpose(norm), k)
    if not ker:
        return H1Result([])
    delta = [[(1 if i == j else 0) - r[i][j] for j in range(k)] for i in range(k)]
    images = [row for row in delta if any(row)]
    coords = [linalg.coordinates(ker, v) for v in images]
    divs, vinv = _quotient([c for c in coords if any(c)], len(ker))
    gens = []
    for i, d in enumerate(divs):
        if d > 1 or d == 0:
            local = [sum(vinv[i][j] * ker[j][c] for j in range(len(ker))) for c in range(k)]
            gens.append(linalg.vecmat(local, module_basis))
    if any(d == 0 for d in divs):
        raise ArithmeticError("Tate group is infinite")
    return H1Result(_nontrivial(divs), gens)


def tate_kernel_and_image(m: Matrix, module_basis: Sequence[Sequence[int]]):
    """(ker N basis, im Delta generators) in ambient coordinates."""
    r = restrict_to_submodule(m, module_basis)
    k = len(r)
    order = matrix_order(r)
    norm = [[0] * k for _ in range(k)]
    p = linalg.identity(k)
    for _ in range(order):
        norm = [[a + b for a, b in zip(x, y)] for x, y in zip(norm, p)]
        p = linalg.matmul(p, r)
    ker = linalg.integer_kernel(linalg.transpose(norm), k)
    delta = [[(1 if i == j else 0) - r[i][j] for j in range(k)] for i in range(k)]
    amb = lambda v: linalg.vecmat(v, module_basis)
    return [amb(v) for v in ker], [amb(v) for v in delta if any(v)]


def generates_quotient(vectors: Sequence[Sequence[int]], kernel: Sequence[Sequence[int]],
                       image: Sequence[Sequence[int]]) -> bool:
    """Whether the classes of ``vectors`` generate ker/im (all must lie in ker)."""
    try:
        coords = [linalg.coordinates(kernel, v) for v in list(vectors) + list(image)]
    except ValueError:
        return False
    return all(d == 1 for d in linalg.elementary_divisors(coords)) and \
        len(linalg.elementary_divisors(coords)) == len(kernel)


def in_lattice(v: Sequence[int], basis: Sequence[Sequence[int]]) -> bool:
    try:
        linalg.coordinates(basis, v)
        return True
    except ValueError:
        return False


# ---------------------------------------------------------------------------
# Minimality


def orbits(perms: Sequence[Sequence[int]], size: int) -> List[List[int]]:
    seen = [False] * size
    out = []
    for i in range(size):
        if seen[i]:
            continue
        orb = {i}
        stack = [i]
        while stack:
            j = stack.pop()
            for p in perms:
                k = p[j]
                if k not in orb:
                    orb.add(k)
                    stack.append(k)
        for j in orb:
            seen[j] = True
        out.append(sorted(orb))
    return out


def is_minimal(perms: Sequence[Sequence[int]], classes: Sequence[Sequence[int]],
               pair: Callable[[Sequence[int], Sequence[int]], int]) -> Tuple[bool, Optional[List[int]]]:
    """Minimal iff no Galois orbit of exceptional classes is pairwise orthogonal.

    A stable set of pairwise skew curves is a union of orbits each of which is
    itself pairwise skew, so checking single orbits suffices.  Returns the
    violating orbit as a certificate when not minimal.
    """
    for orb in orbits(perms, len(classes)):
        if all(pair(classes[a], classes[b]) == 0 for ai, a in enumerate(orb) for b in orb[ai + 1:]):
            return False, orb
    return True, None
