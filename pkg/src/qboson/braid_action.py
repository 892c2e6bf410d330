"""The braid-group action by algebra automorphisms.

A braid word acts by composing the generator automorphisms right to
left: the last letter of the word is applied first.  Negative letters
apply the inverse (starred) automorphism.
"""
from __future__ import annotations

from .boson import AlgElement, BosonAlgebra
from .cartan import _check_index
from .qscalar import ONE, QScalar, qfact

BraidWord = list[tuple[int, int]]


def _divided_power_scalar(alg: BosonAlgebra, i: int, n: int) -> QScalar:
    """Scalar multiplying f_{i,m}^n inside the n-th divided auxiliary power."""
    di = alg.cartan.d[i - 1]
    qi_sq = QScalar.q_power(2 * di)
    return (QScalar.v_power(n * di)
            / (ONE - qi_sq) ** n
            / qfact(n, di))


def _letter_image(alg: BosonAlgebra, i: int, sign: int, j: int, p: int) -> AlgElement:
    key = (i, sign, j, p)
    hit = alg.letter_image_cache.get(key)
    if hit is not None:
        return hit
    cd = alg.cartan
    if i == j:
        out = alg.generator(i, p + 1 if sign > 0 else p - 1)
    else:
        n = -cd.c[i - 1][j - 1]
        di = cd.d[i - 1]
        minus_qi = -QScalar.q_power(di)
        f_i = alg.generator(i, p)
        f_j = alg.generator(j, p)
        powers = [f_i**k * _divided_power_scalar(alg, i, k) for k in range(n + 1)]
        out = alg.zero()
        for r in range(n + 1):
            s = n - r
            twist = minus_qi ** (s if sign > 0 else r)
            out = out + twist * (powers[r] * f_j * powers[s])
    alg.letter_image_cache[key] = out
    return out


def _apply_letter(alg: BosonAlgebra, i: int, sign: int, x: AlgElement) -> AlgElement:
    _check_index(alg.cartan, i)
    out = alg.zero()
    for word, coeff in x.terms.items():
        prod = alg.scalar(coeff)
        for j, p in word:
            prod = prod * _letter_image(alg, i, sign, j, p)
        out = out + prod
    return out


def apply_Ti(alg: BosonAlgebra, i: int, x: AlgElement) -> AlgElement:
    return _apply_letter(alg, i, 1, x)


def apply_Ti_star(alg: BosonAlgebra, i: int, x: AlgElement) -> AlgElement:
    return _apply_letter(alg, i, -1, x)


def apply_braid(alg: BosonAlgebra, word: BraidWord, x: AlgElement) -> AlgElement:
    """Apply the composite automorphism of a signed word, rightmost letter first."""
    for i, sign in reversed(list(word)):
        x = _apply_letter(alg, i, sign, x)
    return x


def invert_word(word: BraidWord) -> BraidWord:
    return [(i, -s) for i, s in reversed(list(word))]


def psi_word(word: BraidWord) -> BraidWord:
    """Image of a word under the generator-inverting automorphism."""
    return [(i, -s) for i, s in word]


def star_conjugation_check(alg: BosonAlgebra, word: BraidWord, x: AlgElement) -> bool:
    """Check star . T_word . star == T_{psi(word)} on the given element."""
    lhs = alg.star(apply_braid(alg, word, alg.star(x)))
    rhs = apply_braid(alg, psi_word(word), x)
    return lhs == rhs


def pbw_generators(alg: BosonAlgebra, word: BraidWord) -> list[AlgElement]:
    """The elements T_{i_1}...T_{i_{k-1}} f_{i_k,0} of a positive word."""
    letters = list(word)
    if any(s <= 0 for _, s in letters):
        raise ValueError("PBW generators require a positive braid word")
    out = []
    for k in range(len(letters)):
        x = alg.generator(letters[k][0], 0)
        out.append(apply_braid(alg, letters[:k], x))
    return out


def subalgebra_monomials(alg: BosonAlgebra, word: BraidWord,
                         max_degree: int) -> list[AlgElement]:
    """Ordered products p_r^{a_r} ... p_1^{a_1} with exponent sum <= max_degree."""
    gens = pbw_generators(alg, word)
    out: list[AlgElement] = []

    def rec(k: int, budget: int, acc: AlgElement):
        if k < 0:
            out.append(acc)
            return
        power = alg.one()
        for a in range(budget + 1):
            if a:
                power = power * gens[k]
            rec(k - 1, budget - a, acc * power)

    # descending index order: p_r powers multiply on the left
    rec(len(gens) - 1, max_degree, alg.one())
    return out


def in_image_of_Alt0(alg: BosonAlgebra, word: BraidWord, x: AlgElement) -> bool:
    """Membership of x in T_word applied to the p<0 subalgebra."""
    y = apply_braid(alg, invert_word(word), x)
    return alg.in_Alt(y, 0)
