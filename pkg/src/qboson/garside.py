"""Braid groups of finite type in Garside left normal form.

A braid is stored as a power of the Garside element D (the positive lift
of the longest Weyl element) followed by a left-greedy sequence of simple
factors, each identified with a Weyl group element strictly between the
identity and the longest element.  Two braids are equal iff their stored
forms coincide.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import (
    CartanDatum,
    WeylElement,
    is_left_descent,
    is_right_descent,
    longest_element,
    reduced_word,
    simple_reflection,
    weak_meet,
    weyl_identity,
    weyl_mul,
)

BraidLetter = tuple[int, int]   # (generator index, sign +1/-1)


@dataclass(frozen=True)
class Braid:
    cartan: CartanDatum
    inf: int
    factors: tuple[WeylElement, ...]

    def is_positive(self) -> bool:
        return self.inf >= 0

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def canonical_length(self) -> int:
        return len(self.factors)

    def letter_length(self) -> int:
        w0len = len(self.cartan.pos_roots)
        return abs(self.inf) * w0len + sum(x.length for x in self.factors)

    def __repr__(self):
        return f"Braid(D^{self.inf}, {len(self.factors)} factors)"


@lru_cache(maxsize=None)
class _Workspace:
    """Per-datum caches for the hot pair-rewriting step."""

    def __init__(self, cd: CartanDatum):
        self.cd = cd
        self.w0 = longest_element(cd)
        self.pair_cache: dict = {}
        self.tau_cache: dict = {}
        self.right_mul: dict = {}
        self.left_mul: dict = {}

    def rmul(self, x: WeylElement, i: int) -> WeylElement:
        key = (x.matrix, i)
        out = self.right_mul.get(key)
        if out is None:
            out = weyl_mul(self.cd, x, simple_reflection(self.cd, i))
            self.right_mul[key] = out
        return out

    def lmul(self, i: int, x: WeylElement) -> WeylElement:
        key = (i, x.matrix)
        out = self.left_mul.get(key)
        if out is None:
            out = weyl_mul(self.cd, simple_reflection(self.cd, i), x)
            self.left_mul[key] = out
        return out

    def tau(self, x: WeylElement) -> WeylElement:
        """Conjugation by the Garside element on simple factors."""
        out = self.tau_cache.get(x.matrix)
        if out is None:
            out = weyl_mul(self.cd, weyl_mul(self.cd, self.w0, x), self.w0)
            self.tau_cache[x.matrix] = out
        return out

    def greedy_pair(self, x: WeylElement, y: WeylElement):
        """Make (x, y) left-greedy: move every possible letter from y to x."""
        key = (x.matrix, y.matrix)
        out = self.pair_cache.get(key)
        if out is not None:
            return out
        cur_x, cur_y = x, y
        moved = True
        while moved:
            moved = False
            for i in self.cd.index_range():
                if is_left_descent(cur_y, i) and not is_right_descent(cur_x, i):
                    cur_x = self.rmul(cur_x, i)
                    cur_y = self.lmul(i, cur_y)
                    moved = True
        out = (cur_x, cur_y)
        self.pair_cache[key] = out
        return out


def _normalize(cd: CartanDatum, base_inf: int, simples) -> Braid:
    ws = _Workspace(cd)
    xs = [s for s in simples if s.length > 0]
    changed = True
    while changed:
        changed = False
        for t in range(len(xs) - 1):
            a, b = ws.greedy_pair(xs[t], xs[t + 1])
            if (a, b) != (xs[t], xs[t + 1]):
                xs[t], xs[t + 1] = a, b
                changed = True
        if changed:
            xs = [s for s in xs if s.length > 0]
    shift = 0
    while xs and xs[0] == ws.w0:
        shift += 1
        xs.pop(0)
    return Braid(cd, base_inf + shift, tuple(xs))


def identity_braid(cd: CartanDatum) -> Braid:
    return Braid(cd, 0, ())


def delta_power(cd: CartanDatum, m: int) -> Braid:
    return Braid(cd, m, ())


def _require_same(a: Braid, b: Braid) -> CartanDatum:
    if a.cartan != b.cartan:
        raise ValueError("braids over different Cartan data cannot be combined")
    return a.cartan


def multiply(a: Braid, b: Braid) -> Braid:
    cd = _require_same(a, b)
    ws = _Workspace(cd)
    if b.inf % 2 == 0:
        left = list(a.factors)
    else:
        left = [ws.tau(x) for x in a.factors]
    return _normalize(cd, a.inf + b.inf, left + list(b.factors))


def braid_from_word(cd: CartanDatum, word) -> Braid:
    """Normal form of a signed word in the generators."""
    ws = _Workspace(cd)
    out = identity_braid(cd)
    for i, sign in word:
        if not 1 <= i <= cd.rank:
            raise ValueError(f"generator index {i} out of range 1..{cd.rank}")
        if sign > 0:
            step = Braid(cd, 0, (simple_reflection(cd, i),))
        else:
            comp = weyl_mul(cd, ws.w0, simple_reflection(cd, i))
            step = Braid(cd, -1, (comp,) if comp.length else ())
        out = multiply(out, step)
    return out


def braid_to_word(b: Braid) -> list[BraidLetter]:
    """A signed word (not unique) representing the braid."""
    cd = b.cartan
    w0word = _w0_word(cd)
    out: list[BraidLetter] = []
    if b.inf >= 0:
        out.extend((i, 1) for _ in range(b.inf) for i in w0word)
    else:
        out.extend((i, -1) for _ in range(-b.inf) for i in reversed(w0word))
    for x in b.factors:
        out.extend((i, 1) for i in reduced_word(cd, x))
    return out


@lru_cache(maxsize=None)
def _w0_word(cd: CartanDatum) -> tuple[int, ...]:
    return tuple(reduced_word(cd, longest_element(cd)))


def inverse(a: Braid) -> Braid:
    word = [(i, -s) for i, s in reversed(braid_to_word(a))]
    return braid_from_word(a.cartan, word)


def is_prefix(a: Braid, b: Braid) -> bool:
    """True iff a^{-1} b is a positive braid."""
    _require_same(a, b)
    return multiply(inverse(a), b).inf >= 0


def _max_simple(b: Braid) -> WeylElement:
    """Largest simple prefix of a positive braid."""
    if b.inf >= 1:
        return _Workspace(b.cartan).w0
    if b.factors:
        return b.factors[0]
    return weyl_identity(b.cartan)


def _meet_positive(a: Braid, b: Braid) -> Braid:
    cd = a.cartan
    acc: list[WeylElement] = []
    while True:
        s = weak_meet(cd, _max_simple(a), _max_simple(b))
        if s.length == 0:
            break
        acc.append(s)
        step_inv = inverse(Braid(cd, 0, (s,)))
        a = multiply(step_inv, a)
        b = multiply(step_inv, b)
    return _normalize(cd, 0, acc)


def meet(a: Braid, b: Braid) -> Braid:
    """Infimum in the prefix order; translation-invariant."""
    cd = _require_same(a, b)
    low = min(a.inf, b.inf, 0)
    k = (-low + 1) // 2
    if k:
        up = delta_power(cd, 2 * k)
        g = _meet_positive(multiply(up, a), multiply(up, b))
        return multiply(delta_power(cd, -2 * k), g)
    return _meet_positive(a, b)


def psi(a: Braid) -> Braid:
    """The automorphism inverting every generator."""
    word = [(i, -s) for i, s in braid_to_word(a)]
    return braid_from_word(a.cartan, word)


def join(a: Braid, b: Braid) -> Braid:
    """Supremum, computed through psi from the meet."""
    _require_same(a, b)
    return psi(meet(psi(a), psi(b)))


def project_to_weyl(a: Braid) -> WeylElement:
    """Image under the projection sending each braid generator to s_i."""
    cd = a.cartan
    out = longest_element(cd) if a.inf % 2 else weyl_identity(cd)
    for x in a.factors:
        out = weyl_mul(cd, out, x)
    return out


def complete_to_delta_power(x: Braid) -> tuple[Braid, int]:
    """Positive y with x*y a minimal nonnegative power of the Garside element."""
    cd = x.cartan
    z = inverse(x)
    m = max(0, -z.inf)
    y = multiply(z, delta_power(cd, m))
    while y.inf < 0:  # defensive; m is already minimal
        m += 1
        y = multiply(y, delta_power(cd, 1))
    if not multiply(x, y) == delta_power(cd, m):
        raise AssertionError("Garside completion failed")
    return y, m


def check_normal_form(b: Braid) -> bool:
    """Assert the stored factor sequence satisfies the left-greedy condition."""
    ws = _Workspace(b.cartan)
    for x in b.factors:
        if x.length == 0 or x == ws.w0:
            return False
    for t in range(len(b.factors) - 1):
        pair = ws.greedy_pair(b.factors[t], b.factors[t + 1])
        if pair != (b.factors[t], b.factors[t + 1]):
            return False
    return True
