"""Exact arithmetic in the field Q(v), where q = v^2.

Scalars are reduced fractions of integer-coefficient polynomials in v.
The canonical form is unique: the denominator is primitive (content 1)
with a positive leading coefficient, and numerator and denominator share
no polynomial factor.  Equality of values is equality of representations.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as _int_gcd

# ---------------------------------------------------------------------------
# dense integer polynomials in v, as trimmed coefficient tuples (low to high)

_ZERO: tuple[int, ...] = ()
_ONE: tuple[int, ...] = (1,)


def _trim(cs: list[int]) -> tuple[int, ...]:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return _trim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return _ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _pcontent(a) -> int:
    g = 0
    for c in a:
        g = _int_gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _pprimitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return _ZERO
    g = _pcontent(a)
    if a[-1] < 0:
        g = -g
    return tuple(c // g for c in a)


def _pdiv_exact(a, b):
    """Exact polynomial division a / b; raises if the division has a remainder."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return _ZERO
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = rem[k + db]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c //= lb
        out[k] = c
        if c:
            for j, bj in enumerate(b):
                rem[k + j] -= c * bj
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _trim(out)


def _pgcd(a, b):
    """Primitive gcd via the primitive Euclidean algorithm."""
    a, b = _pprimitive(a), _pprimitive(b)
    while b:
        # pseudo-remainder of a by b
        da, db = len(a) - 1, len(b) - 1
        if da < db:
            a, b = b, a
            continue
        lead = b[-1]
        rem = [c * lead ** (da - db + 1) for c in a]
        for k in range(da - db, -1, -1):
            c = rem[k + db]
            if c % lead:
                raise AssertionError("pseudo-division drift")
            c //= lead
            if c:
                for j, bj in enumerate(b):
                    rem[k + j] -= c * bj
        a, b = b, _pprimitive(_trim(rem))
    return a


def _is_monomial(a) -> bool:
    return bool(a) and all(c == 0 for c in a[:-1])


class QScalar:
    """An element of Q(v) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=_ONE, *, _reduced=False):
        if isinstance(num, int):
            num = (num,) if num else _ZERO
        if isinstance(den, int):
            den = (den,) if den else _ZERO
        if not den:
            raise ZeroDivisionError("zero denominator in Q(v)")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "QScalar":
        return QScalar((n,) if n else _ZERO, _ONE, _reduced=True)

    @staticmethod
    def v_power(k: int) -> "QScalar":
        """v^k for any integer k (negative powers go to the denominator)."""
        if k >= 0:
            return QScalar((0,) * k + (1,), _ONE, _reduced=True)
        return QScalar(_ONE, (0,) * (-k) + (1,), _reduced=True)

    @staticmethod
    def q_power(k: int) -> "QScalar":
        return QScalar.v_power(2 * k)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return QScalar(_padd(self.num, other.num), self.den)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return QScalar(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return QScalar(_pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # cross-reduce first to keep intermediate polynomials small
        a, d2 = _reduce(self.num, other.den)
        b, d1 = _reduce(other.num, self.den)
        return QScalar(_pmul(a, b), _pmul(d1, d2), _reduced=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(v)")
        return self * QScalar(other.den, other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k == 0:
            return ONE
        base = self if k > 0 else ONE / self
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    # -- structure ----------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def is_one(self) -> bool:
        return self.num == _ONE and self.den == _ONE

    def leading_sign(self) -> int:
        """Sign of the numerator's leading coefficient (0 for zero)."""
        if not self.num:
            return 0
        return 1 if self.num[-1] > 0 else -1

    def substitute_v(self, value: Fraction) -> Fraction:
        """Evaluate at a rational value of v (the denominator must not vanish)."""
        num = sum(Fraction(c) * value**k for k, c in enumerate(self.num))
        den = sum(Fraction(c) * value**k for k, c in enumerate(self.den))
        return num / den

    # -- printing -----------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"QScalar({format_scalar(self)})"


def _reduce(num, den):
    if not num:
        return _ZERO, _ONE
    g = _pgcd(num, den)
    if len(g) > 1:
        num = _pdiv_exact(num, g)
        den = _pdiv_exact(den, g)
    cn, cd = _pcontent(num), _pcontent(den)
    c = _int_gcd(cn, cd)
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


def _coerce(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, int):
        return QScalar.from_int(x)
    return NotImplemented


ZERO = QScalar.from_int(0)
ONE = QScalar.from_int(1)
V = QScalar.v_power(1)
Q = QScalar.v_power(2)


# ---------------------------------------------------------------------------
# quantum integers, factorials, binomials

@lru_cache(maxsize=None)
def qint(n: int, d_i: int) -> QScalar:
    """[n]_i = (q_i^n - q_i^-n) / (q_i - q_i^-1) with q_i = q^{d_i}."""
    if d_i < 1:
        raise ValueError("d_i must be a positive integer")
    num = QScalar.v_power(2 * d_i * n) - QScalar.v_power(-2 * d_i * n)
    den = QScalar.v_power(2 * d_i) - QScalar.v_power(-2 * d_i)
    return num / den


@lru_cache(maxsize=None)
def qfact(n: int, d_i: int) -> QScalar:
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    out = ONE
    for k in range(1, n + 1):
        out = out * qint(k, d_i)
    return out


@lru_cache(maxsize=None)
def qbinom(m: int, n: int, d_i: int) -> QScalar:
    if not 0 <= n <= m:
        raise ValueError("q-binomial requires m >= n >= 0")
    return qfact(m, d_i) / (qfact(n, d_i) * qfact(m - n, d_i))


# ---------------------------------------------------------------------------
# canonical text form (shared with the CLI grammar)

def _fmt_monomial(coeff: int, k: int) -> str:
    if k == 0:
        return str(abs(coeff))
    if k % 2 == 0:
        var = "q" if k == 2 else f"q^{k // 2}"
    else:
        var = "v" if k == 1 else f"v^{k}"
    a = abs(coeff)
    return var if a == 1 else f"{a}*{var}"


def _fmt_poly(p) -> str:
    """Ascending-degree rendering, e.g. ``1 - q^2``."""
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if not c:
            continue
        term = _fmt_monomial(c, k)
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def _poly_is_atomic(p) -> bool:
    """True when the rendering needs no parentheses inside a product."""
    if sum(1 for c in p if c) != 1:
        return False
    k = len(p) - 1
    return abs(p[-1]) == 1 or k == 0


def _lowest_sign(p) -> int:
    for c in p:
        if c:
            return 1 if c > 0 else -1
    return 0


def scalar_display_parts(x: QScalar) -> tuple[int, str]:
    """(sign, magnitude string) with signs normalized for readable output.

    The denominator is flipped so its lowest-degree coefficient is positive
    (so 1/(1-q^2) displays that way rather than as -1/(-1+q^2)); the sign
    returned is that of the resulting numerator's lowest-degree coefficient.
    """
    if not x.num:
        return 0, "0"
    num, den = x.num, x.den
    if den != _ONE and _lowest_sign(den) < 0:
        num, den = _pneg(num), _pneg(den)
    sign = _lowest_sign(num)
    if sign < 0:
        num = _pneg(num)
    if den == _ONE:
        return sign, _fmt_poly(num)
    num_s = _fmt_poly(num) if _poly_is_atomic(num) else f"({_fmt_poly(num)})"
    den_s = _fmt_poly(den) if _poly_is_atomic(den) else f"({_fmt_poly(den)})"
    return sign, f"{num_s}/{den_s}"


def format_scalar(x: QScalar) -> str:
    sign, body = scalar_display_parts(x)
    return f"-{body}" if sign < 0 else body


def format_scalar_factor(x: QScalar) -> str:
    """Render a nonzero scalar so it can prefix ``*word`` in a product.

    Multi-term numerators are parenthesized; the caller handles the sign.
    """
    _, body = scalar_display_parts(x)
    if "/" not in body and (" + " in body or " - " in body):
        return f"({body})"
    return body
