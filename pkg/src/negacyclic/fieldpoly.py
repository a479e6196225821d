"""Arithmetic in the prime field F_p and dense polynomials over it.

A polynomial a_0 + a_1 x + ... + a_d x^d is stored as the tuple
``(a_0, ..., a_d)`` with every entry in ``[0, p-1]`` and ``a_d != 0``.
The zero polynomial is the empty tuple and has no degree (``None``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BudgetExceeded,
    DivisionByZero,
    NotInvertible,
    UndefinedGcd,
    FieldMismatch,
)

MAX_MODULUS = 2**31


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for an odd prime p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"modulus {self.p!r} is not prime")
        if self.p == 2:
            raise ValueError("p must be an odd prime")
        if self.p >= MAX_MODULUS:
            raise ValueError("p must fit in a machine word")

    def __call__(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        return fp_inv(a, self)

    def poly(self, coeffs: Iterable[int] = ()) -> FpPoly:
        return FpPoly(coeffs, self)

    def one(self) -> FpPoly:
        return FpPoly((1,), self)

    def zero(self) -> FpPoly:
        return FpPoly((), self)

    def x(self) -> FpPoly:
        return FpPoly((0, 1), self)


def fp_inv(a: int, field: PrimeField) -> int:
    """Inverse of ``a`` modulo p."""
    a %= field.p
    if a == 0:
        raise NotInvertible("0 has no inverse in F_p")
    return pow(a, -1, field.p)


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class FpPoly:
    """Immutable dense polynomial over F_p."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable[int] = (), field: PrimeField | None = None):
        if field is None:
            raise TypeError("FpPoly needs a PrimeField")
        p = field.p
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", _trim([c % p for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("FpPoly is immutable")

    @classmethod
    def monomial(cls, k: int, field: PrimeField, c: int = 1) -> FpPoly:
        return cls([0] * k + [c], field)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def padded(self, n: int) -> list[int]:
        out = list(self.coeffs[:n])
        return out + [0] * (n - len(out))

    def _check(self, other: FpPoly) -> None:
        if other.field != self.field:
            raise FieldMismatch(f"polynomials over F_{self.p} and F_{other.p}")

    def _coerce(self, other) -> FpPoly:
        if isinstance(other, int):
            return FpPoly((other,), self.field)
        if isinstance(other, FpPoly):
            self._check(other)
            return other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = FpPoly((other,), self.field)
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.p, self.coeffs))

    def sort_key(self) -> tuple:
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    def __add__(self, other) -> FpPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return FpPoly(out, self.field)

    __radd__ = __add__

    def __neg__(self) -> FpPoly:
        return FpPoly([-c for c in self.coeffs], self.field)

    def __sub__(self, other) -> FpPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> FpPoly:
        return (-self) + other

    def __mul__(self, other) -> FpPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPoly((), self.field)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return FpPoly(out, self.field)

    __rmul__ = __mul__

    def scale(self, c: int) -> FpPoly:
        return FpPoly([c * a for a in self.coeffs], self.field)

    def __divmod__(self, other) -> tuple[FpPoly, FpPoly]:
        return poly_divmod(self, self._coerce(other))

    def __floordiv__(self, other) -> FpPoly:
        return poly_divmod(self, self._coerce(other))[0]

    def __mod__(self, other) -> FpPoly:
        return poly_divmod(self, self._coerce(other))[1]

    def __pow__(self, e: int) -> FpPoly:
        return poly_pow(self, e)

    def divides(self, other: FpPoly) -> bool:
        """True when ``self`` divides ``other`` exactly (0 divides only 0)."""
        if self.is_zero():
            return other.is_zero()
        return poly_divmod(other, self)[1].is_zero()

    def monic(self) -> FpPoly:
        if self.is_zero():
            return self
        return self.scale(fp_inv(self.lead, self.field))

    def subs_neg(self) -> FpPoly:
        """f(-x)."""
        return FpPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.field)

    def reduce_mod_xn(self, n: int, sign: int) -> FpPoly:
        """Reduce modulo x^n - sign by folding, i.e. x^n -> sign."""
        if len(self.coeffs) <= n:
            return self
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            q, r = divmod(i, n)
            out[r] += c if (sign == 1 or q % 2 == 0) else -c
        return FpPoly(out, self.field)

    def __call__(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.p
        return acc

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"FpPoly({format_poly(self)!r}, p={self.p})"


def format_poly(f: FpPoly) -> str:
    """Render as e.g. ``x^4+4x^3+x^2+4x+1``; zero renders as ``0``."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        mono = "x" if i == 1 else f"x^{i}"
        parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts)


def poly_divmod(f: FpPoly, g: FpPoly) -> tuple[FpPoly, FpPoly]:
    """Euclidean division ``f = q*g + r`` with ``deg r < deg g``."""
    if g.is_zero():
        raise DivisionByZero("polynomial division by zero")
    f._check(g)
    p = f.p
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return FpPoly((), f.field), f
    inv = fp_inv(g.lead, f.field)
    q = [0] * (len(r) - dg)
    gc = g.coeffs
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] * inv % p
        if c:
            q[k] = c
            for j, gj in enumerate(gc):
                r[k + j] = (r[k + j] - c * gj) % p
    return FpPoly(q, f.field), FpPoly(r[:dg], f.field)


def poly_gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    """Monic gcd of ``f`` and ``g``."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_gcd_many(polys: Sequence[FpPoly]) -> FpPoly:
    out = None
    for f in polys:
        if out is None:
            out = f
        elif not (out.is_zero() and f.is_zero()):
            out = poly_gcd(out, f)
    if out is None or out.is_zero():
        raise UndefinedGcd("gcd of zero polynomials is undefined")
    return out.monic()


def poly_pow(base: FpPoly, e: int, modulus: FpPoly | None = None) -> FpPoly:
    """``base**e``, reduced modulo ``modulus`` when one is given."""
    if e < 0:
        raise ValueError("negative exponent")
    result = base.field.one()
    if modulus is not None:
        result = result % modulus
        base = base % modulus
    while e:
        if e & 1:
            result = result * base
            if modulus is not None:
                result = result % modulus
        e >>= 1
        if e:
            base = base * base
            if modulus is not None:
                base = base % modulus
    return result


def xn_pm1(n: int, field: PrimeField, sign: int) -> FpPoly:
    """x^n - sign, i.e. x^n - 1 for sign=+1 and x^n + 1 for sign=-1."""
    return FpPoly([-sign] + [0] * (n - 1) + [1], field)


def monic_divisors(modulus: FpPoly, budget: int = 10**6) -> list[FpPoly]:
    """All monic divisors of ``modulus`` by exhaustive trial division.

    Divisors pair up with their cofactors, so only monic candidates of
    degree at most ``deg(modulus) // 2`` are tried; ``budget`` caps that
    candidate count.
    """
    if modulus.is_zero() or not modulus.is_monic():
        raise ValueError("modulus must be monic and nonzero")
    p, d = modulus.p, modulus.degree
    half = d // 2
    space = sum(p**k for k in range(half + 1))
    if space > budget:
        raise BudgetExceeded(f"{space} candidate divisors exceed budget {budget}")
    found = set()
    for k in range(half + 1):
        for low in itertools.product(range(p), repeat=k):
            cand = FpPoly(low + (1,), modulus.field)
            q, r = poly_divmod(modulus, cand)
            if r.is_zero():
                found.add(cand)
                found.add(q.monic())
    return sorted(found, key=FpPoly.sort_key)
