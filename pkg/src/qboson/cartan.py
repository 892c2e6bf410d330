"""Finite-type Cartan data and Weyl groups.

Simple roots are indexed 1..rank (Bourbaki numbering).  Root-lattice
vectors are integer coordinate tuples in the simple-root basis; Weyl
elements are the integer matrices of their action on those coordinates.
All data is immutable after construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]

# enumeration guard: brute-force weak-order calculations refuse beyond this
MAX_WEYL_ENUMERATION = 60_000


@dataclass(frozen=True)
class CartanDatum:
    type_letter: str
    rank: int
    c: Matrix                       # Cartan matrix, c[i][j] = <h_i, alpha_j>
    d: tuple[int, ...]              # minimal symmetrizer, min d_i = 1
    m: Matrix                       # Coxeter exponents m[i][j]
    pos_roots: tuple[Vector, ...]   # positive roots in simple-root coordinates

    def index_range(self) -> range:
        return range(1, self.rank + 1)

    def __repr__(self):
        return f"CartanDatum({self.type_letter}{self.rank})"


def _chain_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, n)]


def _base_cartan(type_letter: str, rank: int) -> list[list[int]]:
    """Cartan matrix entries; raises ValueError for invalid (type, rank)."""
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def set_edge(a: int, b: int, cab: int = -1, cba: int = -1) -> None:
        c[a - 1][b - 1] = cab
        c[b - 1][a - 1] = cba

    if type_letter == "A":
        if rank < 1:
            raise ValueError(f"A_n requires n >= 1, got n={rank}")
        for a, b in _chain_edges(rank):
            set_edge(a, b)
    elif type_letter == "B":
        if rank < 2:
            raise ValueError(f"B_n requires n >= 2, got n={rank}")
        for a, b in _chain_edges(rank):
            set_edge(a, b)
        set_edge(rank - 1, rank, -1, -2)  # alpha_rank is the short root
    elif type_letter == "C":
        if rank < 2:
            raise ValueError(f"C_n requires n >= 2, got n={rank}")
        for a, b in _chain_edges(rank):
            set_edge(a, b)
        set_edge(rank - 1, rank, -2, -1)  # alpha_rank is the long root
    elif type_letter == "D":
        if rank < 4:
            raise ValueError(f"D_n requires n >= 4, got n={rank}")
        for a, b in _chain_edges(rank - 1):
            set_edge(a, b)
        set_edge(rank - 2, rank)
    elif type_letter == "E":
        if rank not in (6, 7, 8):
            raise ValueError(f"E_n requires n in {{6,7,8}}, got n={rank}")
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if rank >= 7:
            edges.append((6, 7))
        if rank == 8:
            edges.append((7, 8))
        for a, b in edges:
            set_edge(a, b)
    elif type_letter == "F":
        if rank != 4:
            raise ValueError(f"F_n requires n = 4, got n={rank}")
        set_edge(1, 2)
        set_edge(2, 3, -1, -2)
        set_edge(3, 4)
    elif type_letter == "G":
        if rank != 2:
            raise ValueError(f"G_n requires n = 2, got n={rank}")
        set_edge(1, 2, -3, -1)  # alpha_1 short, alpha_2 long
    else:
        raise ValueError(f"unknown type letter {type_letter!r}")
    return c


def _symmetrizer(c: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Positive integers d with d_i c_ij = d_j c_ji and min d_i = 1."""
    n = len(c)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i == j or c[i][j] == 0:
                    continue
                ratio = Fraction(c[i][j], c[j][i])  # d_j / d_i
                val = d[i] * ratio
                if d[j] is None:
                    d[j] = val
                    queue.append(j)
                elif d[j] != val:
                    raise ValueError("Cartan matrix is not symmetrizable")
    denom = 1
    for x in d:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ints = [int(x * denom) for x in d]
    low = min(ints)
    if any(v % low for v in ints):
        # normalize so the minimum is exactly 1
        pass
    if low != 1:
        if all(v % low == 0 for v in ints):
            ints = [v // low for v in ints]
        else:
            raise ValueError("symmetrizer cannot be normalized to min 1")
    return tuple(ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


_M_FROM_PRODUCT = {0: 2, 1: 3, 2: 4, 3: 6}


def build_cartan(type_letter: str, rank: int) -> CartanDatum:
    """Standard Cartan datum for a finite type, Bourbaki numbering."""
    c_list = _base_cartan(type_letter, rank)
    d = _symmetrizer(c_list)
    m = [[1 if i == j else _M_FROM_PRODUCT[c_list[i][j] * c_list[j][i]]
          for j in range(rank)] for i in range(rank)]
    c = tuple(tuple(row) for row in c_list)
    pos = _positive_roots(c)
    return CartanDatum(type_letter, rank, c, tuple(d),
                       tuple(tuple(row) for row in m), pos)


def _positive_roots(c: Matrix) -> tuple[Vector, ...]:
    """Closure of the simple roots under the reflection action."""
    rank = len(c)
    simples = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    refl = [_reflection_matrix_raw(c, i) for i in range(rank)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            for mtx in refl:
                img = _mat_vec(mtx, r)
                if all(x >= 0 for x in img) and img not in roots:
                    roots.add(img)
                    nxt.append(img)
        frontier = nxt
    return tuple(sorted(roots, key=lambda v: (sum(v), v)))


def _reflection_matrix_raw(c: Matrix, i0: int) -> Matrix:
    rank = len(c)
    rows = []
    for r in range(rank):
        if r != i0:
            rows.append(tuple(1 if k == r else 0 for k in range(rank)))
        else:
            rows.append(tuple((1 if k == r else 0) - c[i0][k] for k in range(rank)))
    return tuple(rows)


def _mat_vec(m: Matrix, v: Sequence[int]) -> Vector:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in m)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = list(zip(*b))
    return tuple(tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a)


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# weights and the symmetric form

def sym_form(cd: CartanDatum, x: Sequence, y: Sequence) -> Fraction:
    """Bilinear form on root-lattice coordinates, (alpha_i, alpha_j) = d_i c_ij."""
    if len(x) != len(y) or len(x) != cd.rank:
        raise ValueError("dimension mismatch")
    total = Fraction(0)
    for i in range(cd.rank):
        if not x[i]:
            continue
        for j in range(cd.rank):
            if y[j]:
                total += Fraction(x[i]) * Fraction(y[j]) * cd.d[i] * cd.c[i][j]
    return total


def weight_to_root_coords(cd: CartanDatum, y: Sequence) -> tuple[Fraction, ...]:
    """Convert fundamental-weight coordinates to simple-root coordinates."""
    if len(y) != cd.rank:
        raise ValueError("dimension mismatch")
    # y = C x  (since alpha_j = sum_k c_kj Lambda_k); solve for x exactly
    n = cd.rank
    aug = [[Fraction(cd.c[r][k]) for k in range(n)] + [Fraction(y[r])] for r in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(aug[r][n] for r in range(n))


def coroot_pair(cd: CartanDatum, i: int, lam: Sequence, basis: str = "root"):
    """<h_i, lambda>; lam in simple-root ("root") or fundamental ("weight") coords."""
    _check_index(cd, i)
    if len(lam) != cd.rank:
        raise ValueError("dimension mismatch")
    if basis == "weight":
        return lam[i - 1]
    if basis != "root":
        raise ValueError(f"unknown basis {basis!r}")
    val = sum(Fraction(lam[j]) * cd.c[i - 1][j] for j in range(cd.rank))
    return int(val) if val.denominator == 1 else val


def _check_index(cd: CartanDatum, i: int) -> None:
    if not 1 <= i <= cd.rank:
        raise ValueError(f"generator index {i} out of range 1..{cd.rank}")


# ---------------------------------------------------------------------------
# Weyl elements

class WeylElement:
    """A Weyl group element as its action matrix on simple-root coordinates."""

    __slots__ = ("matrix", "inv", "length", "_hash")

    def __init__(self, matrix: Matrix, inv: Matrix, length: int):
        self.matrix = matrix
        self.inv = inv
        self.length = length
        self._hash = hash(matrix)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return self._hash

    def apply(self, v: Sequence[int]) -> Vector:
        return _mat_vec(self.matrix, v)

    def apply_inverse(self, v: Sequence[int]) -> Vector:
        return _mat_vec(self.inv, v)

    def is_identity(self) -> bool:
        return self.length == 0

    def __repr__(self):
        return f"WeylElement(len={self.length})"


def _length_from_matrix(cd: CartanDatum, matrix: Matrix) -> int:
    count = 0
    for root in cd.pos_roots:
        img = _mat_vec(matrix, root)
        if any(x < 0 for x in img):
            count += 1
    return count


@lru_cache(maxsize=None)
def weyl_identity(cd: CartanDatum) -> WeylElement:
    ident = _identity_matrix(cd.rank)
    return WeylElement(ident, ident, 0)


@lru_cache(maxsize=None)
def simple_reflection(cd: CartanDatum, i: int) -> WeylElement:
    _check_index(cd, i)
    mtx = _reflection_matrix_raw(cd.c, i - 1)
    return WeylElement(mtx, mtx, 1)


def weyl_mul(cd: CartanDatum, a: WeylElement, b: WeylElement) -> WeylElement:
    mtx = _mat_mul(a.matrix, b.matrix)
    inv = _mat_mul(b.inv, a.inv)
    return WeylElement(mtx, inv, _length_from_matrix(cd, mtx))


def weyl_from_word(cd: CartanDatum, word: Iterable[int]) -> WeylElement:
    """Product of simple reflections, multiplied left to right as written."""
    out = weyl_identity(cd)
    for i in word:
        out = weyl_mul(cd, out, simple_reflection(cd, i))
    return out


def is_left_descent(w: WeylElement, i: int) -> bool:
    """True iff l(s_i w) < l(w), i.e. w^{-1}(alpha_i) is negative."""
    col = tuple(row[i - 1] for row in w.inv)
    return any(x < 0 for x in col)


def is_right_descent(w: WeylElement, i: int) -> bool:
    """True iff l(w s_i) < l(w), i.e. w(alpha_i) is negative."""
    col = tuple(row[i - 1] for row in w.matrix)
    return any(x < 0 for x in col)


def left_descents(cd: CartanDatum, w: WeylElement) -> list[int]:
    return [i for i in cd.index_range() if is_left_descent(w, i)]


def right_descents(cd: CartanDatum, w: WeylElement) -> list[int]:
    return [i for i in cd.index_range() if is_right_descent(w, i)]


@lru_cache(maxsize=None)
def longest_element(cd: CartanDatum) -> WeylElement:
    """Greedy ascent in the weak order; length = number of positive roots."""
    w = weyl_identity(cd)
    while True:
        for i in cd.index_range():
            if not is_right_descent(w, i):
                w = weyl_mul(cd, w, simple_reflection(cd, i))
                break
        else:
            break
    if w.length != len(cd.pos_roots):
        raise AssertionError("longest element has wrong length")
    return w


@lru_cache(maxsize=None)
def star_involution(cd: CartanDatum) -> tuple[int, ...]:
    """Permutation i -> i* with w_circ(alpha_i) = -alpha_{i*} (1-based tuple)."""
    w0 = longest_element(cd)
    perm = []
    for i in cd.index_range():
        img = w0.apply(tuple(1 if k == i - 1 else 0 for k in range(cd.rank)))
        neg = tuple(-x for x in img)
        target = [k + 1 for k in range(cd.rank)
                  if neg == tuple(1 if t == k else 0 for t in range(cd.rank))]
        if len(target) != 1:
            raise AssertionError("w_circ does not permute the simple roots")
        perm.append(target[0])
    out = tuple(perm)
    for i in cd.index_range():
        if out[out[i - 1] - 1] != i:
            raise AssertionError("star map is not an involution")
    return out


def reduced_word(cd: CartanDatum, w: WeylElement, prefer: str = "low") -> list[int]:
    """A deterministic reduced word; "low"/"high" pick smallest/largest descents."""
    word: list[int] = []
    cur = w
    pick = min if prefer == "low" else max
    while cur.length > 0:
        i = pick(left_descents(cd, cur))
        word.append(i)
        cur = weyl_mul(cd, simple_reflection(cd, i), cur)
    return word


@lru_cache(maxsize=None)
def weyl_universe(cd: CartanDatum) -> tuple[WeylElement, ...]:
    """All Weyl group elements (desk ranks only), found by breadth-first search."""
    seen: dict[Matrix, WeylElement] = {}
    ident = weyl_identity(cd)
    seen[ident.matrix] = ident
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for i in cd.index_range():
                u = weyl_mul(cd, w, simple_reflection(cd, i))
                if u.matrix not in seen:
                    seen[u.matrix] = u
                    nxt.append(u)
        if len(seen) > MAX_WEYL_ENUMERATION:
            raise ValueError(
                f"Weyl group of {cd!r} is too large for brute-force enumeration")
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda w: (w.length, w.matrix)))


def is_weak_prefix(cd: CartanDatum, u: WeylElement, w: WeylElement) -> bool:
    """u is a prefix of w: l(u) + l(u^{-1} w) = l(w)."""
    if u.length > w.length:
        return False
    rest = _mat_mul(u.inv, w.matrix)
    return u.length + _length_from_matrix(cd, rest) == w.length


def weak_meet(cd: CartanDatum, u: WeylElement, v: WeylElement) -> WeylElement:
    """Maximal common prefix of u and v in the weak order (brute force)."""
    key = (u.matrix, v.matrix)
    cache = _weak_meet_cache(cd)
    hit = cache.get(key)
    if hit is not None:
        return hit
    best = [w for w in weyl_universe(cd)
            if is_weak_prefix(cd, w, u) and is_weak_prefix(cd, w, v)]
    top = max(w.length for w in best)
    winners = [w for w in best if w.length == top]
    if len(winners) != 1:
        raise AssertionError("weak order meet is not unique; lattice violated")
    cache[key] = winners[0]
    cache[(v.matrix, u.matrix)] = winners[0]
    return winners[0]


@lru_cache(maxsize=None)
def _weak_meet_cache(cd: CartanDatum) -> dict:
    return {}
