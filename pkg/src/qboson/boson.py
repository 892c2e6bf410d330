"""The layered generator algebra over Q(v) and its bilinear form.

Elements are finite Q(v)-combinations of normal words in letters f[i,p]
(i a simple-root index, p an integer spectral parameter).  A word is
normal when its spectral parameters weakly decrease left to right and
every constant-p block is a normal monomial of the single-layer
reduction (a copy of the negative half of the quantum group).

Multiplication rewrites words with the two relation families:
  * same layer: quantum Serre relations, eliminated by linear algebra
    against the deglex-leading monomials;
  * increasing layers: a q-commutation swap, plus a scalar correction
    term (1 - q_i^2) when the letters are (i,m)(i,m+1).
The swap rule strictly reduces the number of out-of-order pairs and the
correction strictly shortens the word, so rewriting terminates.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from ._linalg import rref
from .cartan import CartanDatum, _check_index, sym_form
from .qscalar import ONE, ZERO, QScalar, qbinom, scalar_display_parts

Letter = tuple[int, int]           # (index, spectral parameter)
Word = tuple[Letter, ...]
IndexWord = tuple[int, ...]


@dataclass(frozen=True)
class LayerNormalSet:
    """Normal monomials of one graded component of a single layer."""
    multidegree: tuple[int, ...]
    normal: tuple[IndexWord, ...]
    expansion: dict   # IndexWord -> {IndexWord: QScalar}, defined on all words

    @property
    def relation_rank(self) -> int:
        return len(self.expansion) - len(self.normal)


class BosonAlgebra:
    """Algebra context: holds the Cartan datum and all rewriting caches."""

    def __init__(self, cartan: CartanDatum):
        self.cartan = cartan
        self._layer_tables: dict[tuple[int, ...], LayerNormalSet] = {}
        self._nf_cache: dict[Word, dict[Word, QScalar]] = {}
        self.letter_image_cache: dict = {}

    # -- element constructors ------------------------------------------------

    def zero(self) -> "AlgElement":
        return AlgElement(self, {})

    def one(self) -> "AlgElement":
        return AlgElement(self, {(): ONE})

    def scalar(self, c) -> "AlgElement":
        if isinstance(c, int):
            c = QScalar.from_int(c)
        return AlgElement(self, {(): c} if c else {})

    def generator(self, i: int, p: int) -> "AlgElement":
        _check_index(self.cartan, i)
        return AlgElement(self, {((i, p),): ONE})

    def element(self, terms: dict) -> "AlgElement":
        return AlgElement(self, {w: c for w, c in terms.items() if c})

    # -- weights ---------------------------------------------------------------

    def weight_of_word(self, word: Word) -> tuple[int, ...]:
        wt = [0] * self.cartan.rank
        for i, p in word:
            wt[i - 1] += 1 if (p % 2) else -1   # (-1)^(p+1)
        return tuple(wt)

    def weight_of(self, x: "AlgElement") -> tuple[int, ...]:
        """Weight of a homogeneous element; raises if mixed or zero."""
        wts = {self.weight_of_word(w) for w in x.terms}
        if len(wts) != 1:
            raise ValueError("element is not weight-homogeneous")
        return next(iter(wts))

    def weight_components(self, x: "AlgElement") -> dict:
        comps: dict[tuple[int, ...], dict] = {}
        for w, c in x.terms.items():
            comps.setdefault(self.weight_of_word(w), {})[w] = c
        return {wt: AlgElement(self, terms) for wt, terms in comps.items()}

    # -- the single-layer reduction -------------------------------------------

    def layer_normal_set(self, weight, degree: int) -> LayerNormalSet:
        """Normal monomials and rewriting table for one layer component.

        ``weight`` is the multidegree in the simple generators (nonnegative
        integer coordinates); ``degree`` must equal its total.
        """
        b = tuple(int(v) for v in weight)
        if len(b) != self.cartan.rank or any(v < 0 for v in b):
            raise ValueError("weight must be nonnegative simple-root coordinates")
        if sum(b) != degree:
            raise ValueError("degree does not match the weight height")
        return self._layer_table(b)

    def _layer_table(self, b: tuple[int, ...]) -> LayerNormalSet:
        hit = self._layer_tables.get(b)
        if hit is not None:
            return hit
        cd = self.cartan
        words = _multiset_words(b)
        # relation consequences u * serre(i,j) * w inside this component
        rows = []
        col_index = {w: k for k, w in enumerate(words)}
        for i in cd.index_range():
            for j in cd.index_range():
                if i == j:
                    continue
                n_i = 1 - cd.c[i - 1][j - 1]
                need = list(b)
                need[i - 1] -= n_i
                need[j - 1] -= 1
                if any(v < 0 for v in need):
                    continue
                rel = _serre_terms(cd, i, j)
                for z in _multiset_words(tuple(need)):
                    for cut in range(len(z) + 1):
                        row = [ZERO] * len(words)
                        for mono, coeff in rel:
                            w = z[:cut] + mono + z[cut:]
                            row[col_index[w]] = row[col_index[w]] + coeff
                        rows.append(row)
        # columns sorted descending so leading monomials are the largest
        order = sorted(range(len(words)), key=lambda k: words[k], reverse=True)
        reordered = [[row[k] for k in order] for row in rows]
        red, pivots = rref(reordered)
        expansion: dict[IndexWord, dict[IndexWord, QScalar]] = {}
        excluded = set()
        for r, pc in enumerate(pivots):
            lead = words[order[pc]]
            excluded.add(lead)
            expansion[lead] = {
                words[order[c]]: -red[r][c]
                for c in range(len(words)) if c != pc and red[r][c]
            }
        normal = tuple(w for w in words if w not in excluded)
        for w in normal:
            expansion[w] = {w: ONE}
        table = LayerNormalSet(b, normal, expansion)
        self._layer_tables[b] = table
        return table

    # -- word normalization ----------------------------------------------------

    def _normalize_word(self, word: Word) -> dict[Word, QScalar]:
        hit = self._nf_cache.get(word)
        if hit is not None:
            return hit
        cd = self.cartan
        out: dict[Word, QScalar] = {}
        stack: list[tuple[Word, QScalar]] = [(word, ONE)]
        while stack:
            w, coeff = stack.pop()
            t = _first_ascent(w)
            if t is None:
                for nw, nc in self._reduce_sorted(w).items():
                    c = out.get(nw, ZERO) + coeff * nc
                    if c:
                        out[nw] = c
                    elif nw in out:
                        del out[nw]
                continue
            (i, m), (j, p) = w[t], w[t + 1]
            exp = cd.d[i - 1] * cd.c[i - 1][j - 1] * (1 if (m + p) % 2 else -1)
            swapped = w[:t] + ((j, p), (i, m)) + w[t + 2:]
            stack.append((swapped, coeff * QScalar.v_power(2 * exp)))
            if j == i and p == m + 1:
                qi_sq = QScalar.q_power(2 * cd.d[i - 1])
                stack.append((w[:t] + w[t + 2:], coeff * (ONE - qi_sq)))
        self._nf_cache[word] = out
        return out

    def _reduce_sorted(self, w: Word) -> dict[Word, QScalar]:
        """Reduce the constant-p blocks of an already layer-sorted word."""
        blocks: list[tuple[int, IndexWord]] = []
        pos = 0
        while pos < len(w):
            p = w[pos][1]
            end = pos
            while end < len(w) and w[end][1] == p:
                end += 1
            blocks.append((p, tuple(i for i, _ in w[pos:end])))
            pos = end
        partial: dict[Word, QScalar] = {(): ONE}
        for p, idxword in blocks:
            table = self._layer_table(_multidegree(idxword, self.cartan.rank))
            expansion = table.expansion[idxword]
            nxt: dict[Word, QScalar] = {}
            for prefix, c0 in partial.items():
                for mono, c1 in expansion.items():
                    full = prefix + tuple((i, p) for i in mono)
                    c = nxt.get(full, ZERO) + c0 * c1
                    if c:
                        nxt[full] = c
                    elif full in nxt:
                        del nxt[full]
            partial = nxt
        return partial

    # -- products ---------------------------------------------------------------

    def multiply(self, x: "AlgElement", y: "AlgElement") -> "AlgElement":
        out: dict[Word, QScalar] = {}
        for w1, c1 in x.terms.items():
            for w2, c2 in y.terms.items():
                c12 = c1 * c2
                for w, c in self._normalize_word(w1 + w2).items():
                    acc = out.get(w, ZERO) + c12 * c
                    if acc:
                        out[w] = acc
                    elif w in out:
                        del out[w]
        return AlgElement(self, out)

    # -- structural operators ----------------------------------------------------

    def dshift(self, x: "AlgElement", k: int) -> "AlgElement":
        """Shift every spectral parameter by k (an algebra automorphism)."""
        return AlgElement(self, {
            tuple((i, p + k) for i, p in w): c for w, c in x.terms.items()})

    def star(self, x: "AlgElement") -> "AlgElement":
        """Anti-automorphism: reverse words, negate parameters, renormalize."""
        out = self.zero()
        for w, c in x.terms.items():
            flipped = tuple((i, -p) for i, p in reversed(w))
            out = out + AlgElement(self, {flipped: c})._renormalized()
        return out

    def qcomm(self, x: "AlgElement", y: "AlgElement") -> "AlgElement":
        """[x, y]_q = xy - q^{-(wt x, wt y)} yx, extended bilinearly by weight."""
        out = self.zero()
        for wx, xc in self.weight_components(x).items():
            for wy, yc in self.weight_components(y).items():
                pairing = sym_form(self.cartan, wx, wy)
                if pairing.denominator != 1:
                    raise AssertionError("root-lattice pairing must be integral")
                tw = QScalar.q_power(-int(pairing))
                out = out + self.multiply(xc, yc) - tw * self.multiply(yc, xc)
        return out

    def E(self, i: int, m: int, x: "AlgElement") -> "AlgElement":
        return self.qcomm(x, self.generator(i, m + 1))

    def Estar(self, i: int, m: int, x: "AlgElement") -> "AlgElement":
        return self.qcomm(self.generator(i, m - 1), x)

    def mproj(self, x: "AlgElement") -> QScalar:
        """Coefficient of the empty word in normal form."""
        return x.terms.get((), ZERO)

    def form(self, x: "AlgElement", y: "AlgElement") -> QScalar:
        return self.mproj(self.multiply(x, self.dshift(y, 1)))

    # -- supports -----------------------------------------------------------------

    def support_window(self, x: "AlgElement") -> tuple[int, int] | None:
        """(min p, max p) over all letters; None for nonzero scalars."""
        if not x.terms:
            raise ValueError("support window of zero is undefined")
        ps = [p for w in x.terms for _, p in w]
        if not ps:
            return None
        return min(ps), max(ps)

    def in_window(self, x: "AlgElement", a, b) -> bool:
        """Membership in the subalgebra generated by letters with a <= p <= b."""
        for w in x.terms:
            for _, p in w:
                if (a is not None and p < a) or (b is not None and p > b):
                    return False
        return True

    def in_Alt(self, x: "AlgElement", m: int) -> bool:
        """Membership in the subalgebra of letters with p < m."""
        return self.in_window(x, None, m - 1)

    # -- graded slices --------------------------------------------------------------

    def graded_basis(self, weight, window: tuple[int, int],
                     max_degree: int) -> list["AlgElement"]:
        """All normal words of the given weight inside the window and degree."""
        lo, hi = window
        words = self._normal_words(weight, lo, hi, max_degree)
        return [AlgElement(self, {w: ONE}) for w in words]

    def _normal_words(self, weight, lo: int, hi: int, max_degree: int) -> list[Word]:
        weight = None if weight is None else tuple(weight)
        rank = self.cartan.rank
        layers = list(range(hi, lo - 1, -1))
        out: list[Word] = []

        def rec(idx: int, remaining: int, acc_wt: list[int], acc: Word):
            if idx == len(layers):
                if weight is None or tuple(acc_wt) == weight:
                    out.append(acc)
                return
            p = layers[idx]
            sign = 1 if (p % 2) else -1
            for b in _multidegs_up_to(rank, remaining):
                total = sum(b)
                if total == 0:
                    rec(idx + 1, remaining, acc_wt, acc)
                    continue
                for k in range(rank):
                    acc_wt[k] += sign * b[k]
                for mono in self._layer_table(b).normal:
                    rec(idx + 1, remaining - total,
                        acc_wt, acc + tuple((i, p) for i in mono))
                for k in range(rank):
                    acc_wt[k] -= sign * b[k]

        rec(0, max_degree, [0] * rank, ())
        return sorted(set(out), key=_word_sort_key)


def _multidegree(idxword: IndexWord, rank: int) -> tuple[int, ...]:
    b = [0] * rank
    for i in idxword:
        b[i - 1] += 1
    return tuple(b)


@lru_cache(maxsize=None)
def _multidegs_up_to(rank: int, total: int) -> tuple[tuple[int, ...], ...]:
    out = []

    def rec(k: int, left: int, acc: tuple[int, ...]):
        if k == rank:
            out.append(acc)
            return
        for v in range(left + 1):
            rec(k + 1, left - v, acc + (v,))

    rec(0, total, ())
    return tuple(out)


def _multiset_words(b: tuple[int, ...]) -> list[IndexWord]:
    letters = []
    for i, mult in enumerate(b, start=1):
        letters.extend([i] * mult)
    return sorted(set(permutations(letters)))


@lru_cache(maxsize=None)
def _serre_terms(cd: CartanDatum, i: int, j: int):
    """Terms of the quantum Serre relation for the ordered pair (i, j)."""
    n = 1 - cd.c[i - 1][j - 1]
    di = cd.d[i - 1]
    terms = []
    for k in range(n + 1):
        sign = QScalar.from_int(-1 if k % 2 else 1)
        coeff = sign * qbinom(n, k, di)
        mono = (i,) * k + (j,) + (i,) * (n - k)
        terms.append((mono, coeff))
    return tuple(terms)


def _first_ascent(w: Word):
    for t in range(len(w) - 1):
        if w[t][1] < w[t + 1][1]:
            return t
    return None


def _word_sort_key(word: Word):
    return (tuple(-p for _, p in word), tuple(i for i, _ in word))


class AlgElement:
    """A finite combination of normal words with nonzero Q(v) coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: BosonAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c}

    def _renormalized(self) -> "AlgElement":
        alg = self.algebra
        out: dict[Word, QScalar] = {}
        for w, c in self.terms.items():
            for nw, nc in alg._normalize_word(w).items():
                acc = out.get(nw, ZERO) + c * nc
                if acc:
                    out[nw] = acc
                elif nw in out:
                    del out[nw]
        return AlgElement(alg, out)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Largest word length appearing (zero for scalars and 0)."""
        return max((len(w) for w in self.terms), default=0)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w, ZERO) + c
            if acc:
                out[w] = acc
            elif w in out:
                del out[w]
        return AlgElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            if other.algebra is not self.algebra:
                if other.algebra.cartan != self.algebra.cartan:
                    raise ValueError("elements of different algebras")
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, QScalar)):
            c = QScalar.from_int(other) if isinstance(other, int) else other
            return AlgElement(self.algebra,
                              {w: c * v for w, v in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in the algebra")
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, AlgElement):
            return other
        if isinstance(other, (int, QScalar)):
            return self.algebra.scalar(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, QScalar)):
            other = self.algebra.scalar(other)
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"AlgElement({format_element(self)})"


def format_element(x: AlgElement) -> str:
    """Canonical text form: descending layers first, scalars last."""
    if not x.terms:
        return "0"
    words = sorted(x.terms, key=_word_sort_key)
    if () in x.terms:
        words = [w for w in words if w] + [()]
    parts: list[str] = []
    for w in words:
        sign, body = scalar_display_parts(x.terms[w])
        word_str = "*".join(f"f[{i},{p}]" for i, p in w)
        if not w:
            piece = body
        elif body == "1":
            piece = word_str
        else:
            if "/" not in body and (" + " in body or " - " in body):
                body = f"({body})"
            piece = f"{body}*{word_str}"
        if not parts:
            parts.append(f"-{piece}" if sign < 0 else piece)
        else:
            parts.append(f"- {piece}" if sign < 0 else f"+ {piece}")
    return " ".join(parts)
