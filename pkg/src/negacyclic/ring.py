"""The local ring R = F_p[u, v]/(u^2, v^2, uv - vu) and polynomials over it.

Elements of R are quadruples ``(a, b, c, d)`` standing for
``a + u b + v c + uv d``. Polynomials over R are kept as four F_p
polynomials in the same order, optionally reduced modulo ``x^n - 1``
(cyclic) or ``x^n + 1`` (negacyclic).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import FieldMismatch, ModulusMismatch, NotDivisibleSetup, OddLengthRequired
from .expr import format_components, parse_components
from .fieldpoly import FpPoly, PrimeField, fp_inv, xn_pm1


@dataclass(frozen=True)
class RElem:
    a: int
    b: int
    c: int
    d: int
    field: PrimeField

    def __post_init__(self):
        p = self.field.p
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % p)

    @classmethod
    def of(cls, field: PrimeField, a=0, b=0, c=0, d=0) -> RElem:
        return cls(a, b, c, d, field)

    def parts(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def _check(self, other: RElem) -> None:
        if other.field != self.field:
            raise FieldMismatch(f"elements of R over F_{self.field.p} and F_{other.field.p}")

    def __add__(self, other: RElem) -> RElem:
        self._check(other)
        return RElem(*(x + y for x, y in zip(self.parts(), other.parts())), self.field)

    def __sub__(self, other: RElem) -> RElem:
        self._check(other)
        return RElem(*(x - y for x, y in zip(self.parts(), other.parts())), self.field)

    def __neg__(self) -> RElem:
        return RElem(*(-x for x in self.parts()), self.field)

    def __mul__(self, other: RElem) -> RElem:
        return r_mul(self, other)

    def is_zero(self) -> bool:
        return self.parts() == (0, 0, 0, 0)

    def is_unit(self) -> bool:
        return self.a != 0

    def inverse(self) -> RElem:
        """Inverse of a unit: a^-1 (1 - n + n^2) with n the nilpotent part over a."""
        ai = fp_inv(self.a, self.field)
        b, c, d = self.b * ai, self.c * ai, self.d * ai
        # (1 + ub + vc + uvd)^-1 = 1 - ub - vc + uv(2bc - d)
        return RElem(ai, -b * ai, -c * ai, (2 * b * c - d) * ai, self.field)

    def __str__(self) -> str:
        terms = []
        for coef, sym in zip(self.parts(), ("", "u", "v", "uv")):
            if coef:
                terms.append(f"{coef}{sym}" if coef != 1 or not sym else sym)
        return "+".join(terms) or "0"


def r_mul(x: RElem, y: RElem) -> RElem:
    x._check(y)
    a1, b1, c1, d1 = x.parts()
    a2, b2, c2, d2 = y.parts()
    return RElem(
        a1 * a2,
        a1 * b2 + b1 * a2,
        a1 * c2 + c1 * a2,
        a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        x.field,
    )


class IdealTag(enum.Enum):
    ZERO = "0"
    U = "<u>"
    V = "<v>"
    UV = "<uv>"
    U_PLUS_ALPHA_V = "<u+av>"
    MAXIMAL_UV = "<u,v>"
    UNIT = "<1>"


@dataclass(frozen=True)
class IdealClass:
    tag: IdealTag
    alpha: int | None = None

    def __post_init__(self):
        if (self.tag is IdealTag.U_PLUS_ALPHA_V) != (self.alpha is not None and self.alpha != 0):
            raise ValueError("alpha must be a nonzero field element exactly for <u+av>")

    def __str__(self) -> str:
        if self.tag is IdealTag.U_PLUS_ALPHA_V:
            return f"<u+{self.alpha}v>"
        return self.tag.value


def r_classify(x: RElem) -> IdealClass:
    """Which of the ideals of R the principal ideal <x> is.

    <u, v> is not principal so it never comes out of this function.
    """
    a, b, c, d = x.parts()
    if a:
        return IdealClass(IdealTag.UNIT)
    if b and c:
        return IdealClass(IdealTag.U_PLUS_ALPHA_V, c * fp_inv(b, x.field) % x.field.p)
    if b:
        return IdealClass(IdealTag.U)
    if c:
        return IdealClass(IdealTag.V)
    if d:
        return IdealClass(IdealTag.UV)
    return IdealClass(IdealTag.ZERO)


CYCLIC = 1
NEGACYCLIC = -1


@dataclass(frozen=True)
class ModulusKind:
    """The modulus x^n - 1 (``sign=+1``) or x^n + 1 (``sign=-1``); n odd."""

    sign: int
    n: int

    def __post_init__(self):
        if self.sign not in (CYCLIC, NEGACYCLIC):
            raise ValueError("sign must be +1 (cyclic) or -1 (negacyclic)")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("length must be a positive integer")
        if self.n % 2 == 0:
            raise OddLengthRequired(f"length {self.n} is even")

    @classmethod
    def cyclic(cls, n: int) -> ModulusKind:
        return cls(CYCLIC, n)

    @classmethod
    def negacyclic(cls, n: int) -> ModulusKind:
        return cls(NEGACYCLIC, n)

    @property
    def is_negacyclic(self) -> bool:
        return self.sign == NEGACYCLIC

    def opposite(self) -> ModulusKind:
        return ModulusKind(-self.sign, self.n)

    def polynomial(self, field: PrimeField) -> FpPoly:
        return xn_pm1(self.n, field, self.sign)

    def reduce(self, f: FpPoly) -> FpPoly:
        return f.reduce_mod_xn(self.n, self.sign)

    def __str__(self) -> str:
        return f"x^{self.n}{'-' if self.sign == CYCLIC else '+'}1"


class RPoly:
    """f0 + u f1 + v f2 + uv f3 with f_i in F_p[x].

    With ``modulus=None`` this is an element of R[x]; otherwise every
    component is kept reduced modulo the given x^n -/+ 1.
    """

    __slots__ = ("parts", "modulus", "field")

    def __init__(self, parts: Iterable[FpPoly], modulus: ModulusKind | None, field: PrimeField | None = None):
        parts = tuple(parts)
        if len(parts) != 4:
            raise ValueError("an RPoly has exactly four components")
        if field is None:
            field = parts[0].field
        for f in parts:
            if f.field != field:
                raise FieldMismatch("RPoly components over different fields")
        if modulus is not None:
            parts = tuple(modulus.reduce(f) for f in parts)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("RPoly is immutable")

    @classmethod
    def zero(cls, field: PrimeField, modulus: ModulusKind | None) -> RPoly:
        z = field.zero()
        return cls((z, z, z, z), modulus, field)

    @classmethod
    def constant(cls, elem: RElem, modulus: ModulusKind | None) -> RPoly:
        f = elem.field
        return cls((FpPoly((c,), f) for c in elem.parts()), modulus, f)

    @classmethod
    def from_layers(cls, field: PrimeField, modulus: ModulusKind | None, f0=None, f1=None, f2=None, f3=None) -> RPoly:
        z = field.zero()
        return cls((f0 or z, f1 or z, f2 or z, f3 or z), modulus, field)

    @classmethod
    def parse(cls, text: str, field: PrimeField | int, modulus: ModulusKind | None) -> RPoly:
        if isinstance(field, int):
            field = PrimeField(field)
        return cls(parse_components(text, field), modulus, field)

    def to_text(self) -> str:
        return format_components(self.parts)

    @property
    def f0(self) -> FpPoly:
        return self.parts[0]

    @property
    def f1(self) -> FpPoly:
        return self.parts[1]

    @property
    def f2(self) -> FpPoly:
        return self.parts[2]

    @property
    def f3(self) -> FpPoly:
        return self.parts[3]

    @property
    def degree(self) -> int | None:
        """Degree of the residue f0 (``None`` when f0 = 0)."""
        return self.f0.degree

    @property
    def max_degree(self) -> int | None:
        degs = [f.degree for f in self.parts if f.degree is not None]
        return max(degs) if degs else None

    def coefficient(self, i: int) -> RElem:
        return RElem(*(f[i] for f in self.parts), self.field)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.parts)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RPoly):
            return NotImplemented
        return self.modulus == other.modulus and self.field == other.field and self.parts == other.parts

    def __hash__(self) -> int:
        return hash((self.parts, self.modulus))

    def _check(self, other: RPoly) -> None:
        if other.field != self.field:
            raise FieldMismatch("RPolys over different fields")
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")

    def __add__(self, other: RPoly) -> RPoly:
        self._check(other)
        return RPoly((a + b for a, b in zip(self.parts, other.parts)), self.modulus, self.field)

    def __sub__(self, other: RPoly) -> RPoly:
        self._check(other)
        return RPoly((a - b for a, b in zip(self.parts, other.parts)), self.modulus, self.field)

    def __neg__(self) -> RPoly:
        return RPoly((-a for a in self.parts), self.modulus, self.field)

    def __mul__(self, other) -> RPoly:
        if isinstance(other, RPoly):
            return rpoly_mul(self, other)
        if isinstance(other, FpPoly):
            return RPoly((f * other for f in self.parts), self.modulus, self.field)
        if isinstance(other, int):
            return RPoly((f.scale(other) for f in self.parts), self.modulus, self.field)
        if isinstance(other, RElem):
            return rpoly_mul(self, RPoly.constant(other, self.modulus))
        return NotImplemented

    __rmul__ = __mul__

    def times_u(self) -> RPoly:
        z = self.field.zero()
        return RPoly((z, self.f0, z, self.f2), self.modulus, self.field)

    def times_v(self) -> RPoly:
        z = self.field.zero()
        return RPoly((z, z, self.f0, self.f1), self.modulus, self.field)

    def times_uv(self) -> RPoly:
        z = self.field.zero()
        return RPoly((z, z, z, self.f0), self.modulus, self.field)

    def shift(self, k: int = 1) -> RPoly:
        """x^k * self."""
        return self * FpPoly.monomial(k, self.field)

    def with_modulus(self, modulus: ModulusKind | None) -> RPoly:
        return RPoly(self.parts, modulus, self.field)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RPoly({self.to_text()!r}, p={self.field.p}, modulus={self.modulus})"


def rpoly_mul(f: RPoly, g: RPoly) -> RPoly:
    f._check(g)
    a0, a1, a2, a3 = f.parts
    b0, b1, b2, b3 = g.parts
    return RPoly(
        (a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + a2 * b0, a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1),
        f.modulus,
        f.field,
    )


def residue(f: RPoly) -> FpPoly:
    """Image of ``f`` under reduction modulo the maximal ideal <u, v>."""
    return f.f0


def is_regular(f: RPoly) -> bool:
    """A polynomial over the local ring R is a non-zero-divisor iff its residue is nonzero."""
    return not f.f0.is_zero()


def phi(f: RPoly) -> RPoly:
    """The ring isomorphism f(x) -> f(-x) between the cyclic and negacyclic quotients."""
    if f.modulus is None:
        return RPoly((c.subs_neg() for c in f.parts), None, f.field)
    if f.modulus.n % 2 == 0:
        raise OddLengthRequired("x -> -x swaps x^n-1 and x^n+1 only for odd n")
    return RPoly((c.subs_neg() for c in f.parts), f.modulus.opposite(), f.field)


def rpoly_divmod_regular(f: RPoly, g: RPoly) -> tuple[RPoly, RPoly]:
    """Long division in R[x] by a divisor whose top coefficient is a unit.

    The division works on representatives in R[x]; no reduction modulo
    x^n -/+ 1 takes place. Requires deg(g0) >= deg(g_i) for the nilpotent
    components so that the coefficient at x^deg(g0) is the leading one.
    """
    if f.field != g.field:
        raise FieldMismatch("RPolys over different fields")
    m = g.f0.degree
    if m is None:
        raise NotDivisibleSetup("divisor is not regular (zero residue)")
    if g.max_degree > m:
        raise NotDivisibleSetup("nilpotent part of the divisor exceeds its residue degree")
    field = f.field
    lead_inv = g.coefficient(m).inverse()
    rem = [list(c.padded((f.max_degree or 0) + 1)) for c in f.parts]
    top = f.max_degree
    qlen = (top - m + 1) if top is not None and top >= m else 0
    quot = [[0] * qlen for _ in range(4)]
    gparts = [c.padded(m + 1) for c in g.parts]
    p = field.p
    for k in range(top if top is not None else -1, m - 1, -1):
        coef = RElem(*(r[k] for r in rem), field)
        if coef.is_zero():
            continue
        c = (coef * lead_inv).parts()
        shift = k - m
        for i in range(4):
            quot[i][shift] = c[i]
        # subtract c * x^shift * g, using the R multiplication table
        for j in range(m + 1):
            ga = [gp[j] for gp in gparts]
            prod = (
                c[0] * ga[0],
                c[0] * ga[1] + c[1] * ga[0],
                c[0] * ga[2] + c[2] * ga[0],
                c[0] * ga[3] + c[3] * ga[0] + c[1] * ga[2] + c[2] * ga[1],
            )
            for i in range(4):
                rem[i][shift + j] = (rem[i][shift + j] - prod[i]) % p
    q = RPoly((FpPoly(c, field) for c in quot), f.modulus, field)
    r = RPoly((FpPoly(c, field) for c in rem), f.modulus, field)
    return q, r
