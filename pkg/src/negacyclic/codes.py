"""Codes as ideals of R[x]/(x^n -/+ 1) and their canonical four-generator form.

Every ideal C has a unique generating quadruple

    A1 = g1 + u g11 + v g12 + uv g13
    A2 =      u g2  + v g22 + uv g23
    A3 =              v g3  + uv g33
    A4 =                      uv g4

where g1..g4 are monic divisors of the modulus and each g_ij is zero or
has degree below deg g_{j+1}. A layer with no elements is encoded by
g_i = x^n -/+ 1 (degree n) and A_i = 0.

Canonicalization is plain linear algebra over F_p: close the generators
under x, u and v, row-reduce with the four coefficient layers ordered
f0 | f1 | f2 | f3, read each layer's torsion polynomial off the echelon
rows, lift it to a codeword, and reduce the lower layers.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import gcd
from typing import Sequence

import numpy as np

from .errors import FieldMismatch, InvariantViolation, ModulusMismatch, NoCoprimeForm, NotCoprime, NotFree
from .fieldpoly import FpPoly, PrimeField, poly_divmod, poly_gcd_many
from .linalg import rank as fp_rank
from .linalg import rref
from .ring import CYCLIC, NEGACYCLIC, ModulusKind, RPoly, phi, rpoly_divmod_regular

LAYER_NAMES = ("1", "u", "v", "uv")


def _shift_matrix(coeffs: Sequence[int], n: int, sign: int) -> np.ndarray:
    """Rows are x^i * f reduced mod x^n - sign, for i = 0..n-1."""
    base = np.zeros(n, dtype=np.int64)
    base[: len(coeffs)] = coeffs
    out = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        row = np.roll(base, i)
        if sign == -1:
            row[:i] = -row[:i]
        out[i] = row
    return out


def closure_rows(gens: Sequence[RPoly], with_shifts: bool = True) -> np.ndarray:
    """F_p spanning rows (layer-major) for the ideal (or R-module) spanned by ``gens``.

    With ``with_shifts`` the rows span the ideal generated in the quotient
    ring; without, only the R-submodule generated by ``gens`` themselves.
    """
    if not gens:
        return np.zeros((0, 0), dtype=np.int64)
    n = gens[0].modulus.n
    sign = gens[0].modulus.sign
    blocks = []
    for g in gens:
        if with_shifts:
            F = [_shift_matrix(c.coeffs, n, sign) for c in g.parts]
        else:
            F = [np.array([c.padded(n)], dtype=np.int64) for c in g.parts]
        Z = np.zeros_like(F[0])
        blocks.append(np.hstack(F))
        blocks.append(np.hstack([Z, F[0], Z, F[2]]))
        blocks.append(np.hstack([Z, Z, F[0], F[1]]))
        blocks.append(np.hstack([Z, Z, Z, F[0]]))
    return np.vstack(blocks)


def to_vector(f: RPoly) -> np.ndarray:
    n = f.modulus.n
    return np.concatenate([np.array(c.padded(n), dtype=np.int64) for c in f.parts])


def from_vector(vec, field: PrimeField, modulus: ModulusKind) -> RPoly:
    n = modulus.n
    return RPoly((FpPoly(vec[i * n:(i + 1) * n].tolist(), field) for i in range(4)), modulus, field)


def layer_to_position_major(mat: np.ndarray, n: int) -> np.ndarray:
    """Reorder columns from f0|f1|f2|f3 blocks to n symbols of (a, b, c, d)."""
    if mat.shape[0] == 0:
        return np.zeros((0, 4 * n), dtype=np.int64)
    return mat.reshape(mat.shape[0], 4, n).transpose(0, 2, 1).reshape(mat.shape[0], 4 * n)


@dataclass(eq=False)
class FpBasis:
    """Reduced row-echelon F_p basis of a code inside F_p^(4n).

    Coordinates are position-major: symbol i occupies columns 4i..4i+3
    holding its (a, b, c, d) components.
    """

    rows: np.ndarray
    p: int
    n: int

    @property
    def dim(self) -> int:
        return int(self.rows.shape[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpBasis):
            return NotImplemented
        return (self.p, self.n) == (other.p, other.n) and np.array_equal(self.rows, other.rows)

    def symbol_blocks(self) -> np.ndarray:
        """View as (dim, n, 4)."""
        return self.rows.reshape(self.dim, self.n, 4)


def _exact_div(f: FpPoly, g: FpPoly) -> tuple[FpPoly, bool]:
    q, r = poly_divmod(f, g)
    return q, r.is_zero()


class IdealCode:
    """Canonical form of an ideal of R[x]/(x^n -/+ 1).

    Construct with :func:`from_generators`; the constructor takes an
    already canonical tuple and checks the chain and degree invariants.
    """

    _G_NAMES = ("g1", "g2", "g3", "g4")
    _GIJ_NAMES = ("g11", "g12", "g13", "g22", "g23", "g33")

    def __init__(self, field: PrimeField, modulus: ModulusKind, g: Sequence[FpPoly], gij: dict[str, FpPoly]):
        self.field = field
        self.modulus = modulus
        self.g1, self.g2, self.g3, self.g4 = g
        zero = field.zero()
        for name in self._GIJ_NAMES:
            setattr(self, name, gij.get(name, zero))
        self._check_invariants()

    # basic attributes

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> int:
        return self.modulus.n

    @property
    def is_negacyclic(self) -> bool:
        return self.modulus.is_negacyclic

    @cached_property
    def modulus_poly(self) -> FpPoly:
        return self.modulus.polynomial(self.field)

    @property
    def torsion(self) -> tuple[FpPoly, FpPoly, FpPoly, FpPoly]:
        return (self.g1, self.g2, self.g3, self.g4)

    @property
    def degrees(self) -> tuple[int, int, int, int]:
        return tuple(g.degree for g in self.torsion)

    r1 = property(lambda self: self.g1.degree)
    r2 = property(lambda self: self.g2.degree)
    r3 = property(lambda self: self.g3.degree)
    r4 = property(lambda self: self.g4.degree)

    @property
    def r_prime(self) -> int:
        return min(self.r2, self.r3)

    @property
    def dim_fp(self) -> int:
        return sum(self.n - r for r in self.degrees)

    def is_zero_code(self) -> bool:
        return self.g4 == self.modulus_poly

    @property
    def key(self) -> tuple:
        return (self.p, self.modulus, tuple(g.coeffs for g in self.torsion),
                tuple(getattr(self, k).coeffs for k in self._GIJ_NAMES))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IdealCode):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        kind = "negacyclic" if self.is_negacyclic else "cyclic"
        return f"<{kind} code p={self.p} n={self.n} degrees={self.degrees} gens={[str(a) for a in self.generators if a]}>"

    # generators

    def _rpoly(self, f0=None, f1=None, f2=None, f3=None) -> RPoly:
        return RPoly.from_layers(self.field, self.modulus, f0, f1, f2, f3)

    @cached_property
    def generators(self) -> tuple[RPoly | None, RPoly | None, RPoly | None, RPoly | None]:
        """(A1, A2, A3, A4) with ``None`` for absent layers."""
        M = self.modulus_poly
        A1 = self._rpoly(self.g1, self.g11, self.g12, self.g13) if self.g1 != M else None
        A2 = self._rpoly(None, self.g2, self.g22, self.g23) if self.g2 != M else None
        A3 = self._rpoly(None, None, self.g3, self.g33) if self.g3 != M else None
        A4 = self._rpoly(None, None, None, self.g4) if self.g4 != M else None
        return (A1, A2, A3, A4)

    def present_generators(self) -> list[RPoly]:
        return [a for a in self.generators if a is not None]

    @cached_property
    def layer_basis(self) -> tuple[np.ndarray, list[int]]:
        gens = self.present_generators()
        if not gens:
            return np.zeros((0, 4 * self.n), dtype=np.int64), []
        return rref(closure_rows(gens), self.p)

    def contains(self, f: RPoly) -> bool:
        from .linalg import in_row_space

        rows, piv = self.layer_basis
        return in_row_space(rows, piv, to_vector(f), self.p)

    # invariants

    def _check_invariants(self) -> None:
        M = self.modulus_poly
        g1, g2, g3, g4 = self.torsion
        for name, g in zip(self._G_NAMES, self.torsion):
            if g.field != self.field:
                raise FieldMismatch(f"{name} is over the wrong field")
            if not g.is_monic() or not g.divides(M):
                raise InvariantViolation(f"{name} = {g} is not a monic divisor of {self.modulus}")
        for a, b in ((g4, g2), (g2, g1), (g4, g3), (g3, g1)):
            if not a.divides(b):
                raise InvariantViolation(f"divisibility chain broken: {a} does not divide {b}")
        bounds = {"g11": g2, "g12": g3, "g13": g4, "g22": g3, "g23": g4, "g33": g4}
        for name, bound in bounds.items():
            f = getattr(self, name)
            if not f.is_zero() and f.degree >= bound.degree:
                raise InvariantViolation(f"deg {name} = {f.degree} is not below deg {bound} = {bound.degree}")


class NegacyclicCode(IdealCode):
    """An ideal of R[x]/(x^n + 1)."""


class CyclicCode(IdealCode):
    """An ideal of R[x]/(x^n - 1)."""


def _code_class(modulus: ModulusKind):
    return NegacyclicCode if modulus.is_negacyclic else CyclicCode


def _layer_polys(rows: np.ndarray, pivots: list[int], n: int, layer: int):
    lo, hi = layer * n, (layer + 1) * n
    return [(r, c) for r, c in zip(rows, pivots) if lo <= c < hi]


def canonicalize_rows(rows: np.ndarray, pivots: list[int], field: PrimeField, modulus: ModulusKind) -> IdealCode:
    """Canonical form from a layer-major RREF basis of an ideal."""
    n, p = modulus.n, field.p
    M = modulus.polynomial(field)
    torsion = []
    lifts = []
    for layer in range(4):
        sel = _layer_polys(rows, pivots, n, layer)
        if not sel:
            torsion.append(M)
            lifts.append(None)
            continue
        polys = [FpPoly(r[layer * n:(layer + 1) * n].tolist(), field) for r, _ in sel]
        g = poly_gcd_many(polys + [M])
        torsion.append(g)
        lift = np.zeros(4 * n, dtype=np.int64)
        for r, c in sel:
            coef = g[c - layer * n]
            if coef:
                lift = (lift + coef * r) % p
        lifts.append(from_vector(lift, field, modulus))
        if lifts[-1].parts[layer] != g:
            raise InvariantViolation(f"lift of layer {LAYER_NAMES[layer]} does not reproduce its torsion polynomial")

    reduced: list[RPoly | None] = [None] * 4
    for layer in (3, 2, 1, 0):
        elem = lifts[layer]
        if elem is None:
            continue
        for lower in range(layer + 1, 4):
            A = reduced[lower]
            if A is None:
                continue
            q = elem.parts[lower] // torsion[lower]
            if not q.is_zero():
                elem = elem - A * q
        reduced[layer] = elem

    zero = field.zero()
    A1, A2, A3, _ = reduced
    gij = {
        "g11": A1.f1 if A1 else zero,
        "g12": A1.f2 if A1 else zero,
        "g13": A1.f3 if A1 else zero,
        "g22": A2.f2 if A2 else zero,
        "g23": A2.f3 if A2 else zero,
        "g33": A3.f3 if A3 else zero,
    }
    return _code_class(modulus)(field, modulus, torsion, gij)


def from_generators(gens: Sequence[RPoly], field: PrimeField | None = None,
                    modulus: ModulusKind | None = None) -> IdealCode:
    """Canonical form of the ideal generated by ``gens``.

    An empty list gives the zero code, which then needs ``field`` and
    ``modulus`` to be supplied.
    """
    gens = list(gens)
    if gens:
        field = field or gens[0].field
        modulus = modulus or gens[0].modulus
    if field is None or modulus is None:
        raise ValueError("field and modulus are required for an empty generator list")
    for g in gens:
        if g.field != field:
            raise FieldMismatch("generators over different fields")
        if g.modulus != modulus:
            raise ModulusMismatch(f"generator modulus {g.modulus} differs from {modulus}")
    if not gens:
        M = modulus.polynomial(field)
        return _code_class(modulus)(field, modulus, (M, M, M, M), {})
    rows, pivots = rref(closure_rows(gens), field.p)
    code = canonicalize_rows(rows, pivots, field, modulus)
    code.__dict__["layer_basis"] = (rows, pivots)
    return code


def zero_code(p: int, n: int, negacyclic: bool = True) -> IdealCode:
    field = PrimeField(p)
    modulus = ModulusKind(NEGACYCLIC if negacyclic else CYCLIC, n)
    return from_generators([], field, modulus)


def parse_code(gens: Sequence[str], p: int, n: int, negacyclic: bool = True) -> IdealCode:
    """Canonical code from generator strings ``f0;f1;f2;f3``."""
    field = PrimeField(p)
    modulus = ModulusKind(NEGACYCLIC if negacyclic else CYCLIC, n)
    return from_generators([RPoly.parse(s, field, modulus) for s in gens], field, modulus)


# analysis


def fp_basis(code: IdealCode) -> FpBasis:
    rows, _ = code.layer_basis
    pos = layer_to_position_major(rows, code.n)
    red, _ = rref(pos, code.p) if pos.shape[0] else (pos, [])
    return FpBasis(red, code.p, code.n)


def torsion_ideals(code: IdealCode) -> tuple[FpPoly, FpPoly, FpPoly, FpPoly]:
    return code.torsion


@dataclass
class PropertyReport:
    """Verdicts for the seven structural divisibility properties.

    ``scaled_s`` holds the polynomials ((x^n -/+ 1)/g_i) * s_i(i+j) from
    property (7), computed with the cofactor multiplied through so that
    every division in the recursion is a polynomial division.
    """

    verdicts: dict[int, bool] = dc_field(default_factory=dict)
    witnesses: dict[int, list[str]] = dc_field(default_factory=dict)
    scaled_s: dict[str, FpPoly] = dc_field(default_factory=dict)
    inexact: list[str] = dc_field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return len(self.verdicts) == 7 and all(self.verdicts.values())

    def _record(self, prop: int, ok: bool, witness: str) -> None:
        self.verdicts[prop] = self.verdicts.get(prop, True) and ok
        if not ok:
            self.witnesses.setdefault(prop, []).append(witness)


def check_structure(field: PrimeField, modulus: ModulusKind, g: Sequence[FpPoly], gij: dict[str, FpPoly]) -> PropertyReport:
    """Evaluate properties (1)-(7) on a raw tuple, which need not be canonical."""
    M = modulus.polynomial(field)
    zero = field.zero()
    G = {1: g[0], 2: g[1], 3: g[2], 4: g[3]}
    GG = {(int(k[1]), int(k[2])): gij.get(k, zero) for k in IdealCode._GIJ_NAMES}
    rep = PropertyReport()

    def divides(prop, a, b, label):
        rep._record(prop, a.divides(b), f"{a} does not divide {b} ({label})")

    def quotient(a, b, label):
        q, ok = _exact_div(a, b)
        if not ok:
            rep.inexact.append(f"{label}: {b} does not divide {a}")
        return q, ok

    # (1)
    divides(1, G[4], G[3], "g4 | g3")
    divides(1, G[3], G[1], "g3 | g1")
    divides(1, G[4], G[2], "g4 | g2")
    divides(1, G[2], G[1], "g2 | g1")
    divides(1, G[1], M, "g1 | modulus")

    h = {}
    for i in (1, 2, 3):
        h[i], ok = quotient(M, G[i], f"modulus/g{i}")
        if not ok:
            rep._record(2, False, f"g{i} does not divide the modulus")
            continue
        divides(2, G[i + 1], h[i] * GG[(i, i)], f"g{i + 1} | (modulus/g{i}) g{i}{i}")

    g1_g2, ok12 = quotient(G[1], G[2], "g1/g2")
    g1_g3, ok13 = quotient(G[1], G[3], "g1/g3")
    # (3), (4)
    rep._record(3, ok12, "g2 does not divide g1")
    if ok12:
        divides(3, G[3], g1_g2 * GG[(2, 2)], "g3 | (g1/g2) g22")
    divides(4, G[4], GG[(2, 2)], "g4 | g22")
    # (5)
    rep._record(5, ok13, "g3 does not divide g1")
    if ok13:
        divides(5, G[4], GG[(1, 1)] - g1_g3 * GG[(3, 3)], "g4 | g11 - (g1/g3) g33")
    # (6)
    if ok12:
        t, ok = quotient(g1_g2 * GG[(2, 2)], G[3], "(g1/g2) g22 / g3")
        rep._record(6, ok, "(g1/g2) g22 is not divisible by g3")
        if ok:
            expr = GG[(1, 2)] - g1_g2 * GG[(2, 3)] + t * GG[(3, 3)]
            divides(6, G[4], expr, "g4 | g12 - (g1/g2) g23 + (g1/(g2 g3)) g22 g33")
    else:
        rep._record(6, False, "g2 does not divide g1")
    # (7)
    rep.verdicts.setdefault(7, True)
    for i in (1, 2):
        if i not in h:
            rep._record(7, False, f"g{i} does not divide the modulus")
            continue
        T = {i: h[i] * GG[(i, i)]}
        for j in range(1, 4 - i):
            acc = h[i] * GG[(i, i + j)]
            exact = True
            for l in range(1, j + 1):
                q, ok = quotient(T[i + l - 1], G[i + l], f"s{i}{i + l - 1} / g{i + l}")
                exact &= ok
                acc = acc - q * GG[(i + l, i + j)]
            T[i + j] = acc
            rep.scaled_s[f"{i}{i + j}"] = acc
            if not exact:
                rep._record(7, False, f"inexact division while forming s{i}{i + j}")
            else:
                divides(7, G[i + j + 1], acc, f"g{i + j + 1} | (modulus/g{i}) s{i}{i + j}")
    return rep


def verify_structure(code: IdealCode) -> PropertyReport:
    gij = {k: getattr(code, k) for k in IdealCode._GIJ_NAMES}
    return check_structure(code.field, code.modulus, code.torsion, gij)


def is_free(code: IdealCode) -> bool:
    return code.g1 == code.g4


def free_generator(code: IdealCode) -> RPoly:
    """A1 of a free code; it divides x^n -/+ 1 in R[x]."""
    if not is_free(code):
        raise NotFree(f"g1 = {code.g1} differs from g4 = {code.g4}")
    A1 = code.generators[0]
    if A1 is None:
        return RPoly.zero(code.field, code.modulus)
    return A1


def divides_modulus(f: RPoly) -> bool:
    """Whether ``f`` divides x^n -/+ 1 in R[x]."""
    M = RPoly.from_layers(f.field, None, f.modulus.polynomial(f.field))
    _, r = rpoly_divmod_regular(M, f.with_modulus(None))
    return r.is_zero()


def same_ideal(gens_a: Sequence[RPoly], gens_b: Sequence[RPoly], p: int, with_shifts: bool = True) -> bool:
    a = [g for g in gens_a if g]
    b = [g for g in gens_b if g]
    if not a or not b:
        return not a and not b
    ra, _ = rref(closure_rows(a, with_shifts), p)
    rb, _ = rref(closure_rows(b, with_shifts), p)
    return ra.shape == rb.shape and np.array_equal(ra, rb)


def coprime_form(code: IdealCode) -> tuple[RPoly, RPoly]:
    """Two-generator form (g1 + u g2 + uv g13, v g3 + uv g4) for gcd(n, p) = 1.

    A zero RPoly stands for an absent generator. Codes with a local
    component of type <u + a v> have no such form and raise NoCoprimeForm.
    """
    if gcd(code.n, code.p) != 1:
        raise NotCoprime(f"p = {code.p} divides n = {code.n}")
    first = code._rpoly(code.g1, code.g2, None, code.g13)
    second = code._rpoly(None, None, code.g3, code.g4)
    if not same_ideal([first, second], code.present_generators(), code.p):
        raise NoCoprimeForm("the code contains a component of type <u + a v>")
    return first, second


@dataclass
class SpanningSet:
    elements: list[RPoly]
    free_rank: int
    formula_proven: bool

    @property
    def rank(self) -> int:
        return len(self.elements)


def spanning_set(code: IdealCode) -> SpanningSet:
    """Blocks {x^i A1}_(i<n-r1), {x^i A2}_(i<r1-r2), {x^i A3}_(i<r1-r3), {x^i A4}_(i<r'-r4)."""
    n, r1, r2, r3, r4 = code.n, code.r1, code.r2, code.r3, code.r4
    counts = (n - r1, r1 - r2, r1 - r3, code.r_prime - r4)
    elems = []
    for A, k in zip(code.generators, counts):
        if A is None:
            continue
        elems.extend(A.shift(i) for i in range(max(k, 0)))
    return SpanningSet(elems, n - r1, code.n % code.p == 0)


def rank(code: IdealCode) -> int:
    """n + r1 + r' - r2 - r3 - r4 with r' = min(r2, r3)."""
    return code.n + code.r1 + code.r_prime - code.r2 - code.r3 - code.r4


def free_rank(code: IdealCode) -> int:
    return code.n - code.r1


def rank_formula_proven(code: IdealCode) -> bool:
    return code.n % code.p == 0


def r_span_rows(elems: Sequence[RPoly]) -> tuple[np.ndarray, list[int]]:
    """RREF of the R-submodule spanned by ``elems`` (no multiplication by x)."""
    elems = [e for e in elems if e]
    if not elems:
        n = 0
        return np.zeros((0, n), dtype=np.int64), []
    return rref(closure_rows(elems, with_shifts=False), elems[0].field.p)


def spanning_set_spans(code: IdealCode) -> bool:
    """The R-span of the spanning set equals the code."""
    rows, _ = r_span_rows(spanning_set(code).elements)
    base, _ = code.layer_basis
    if rows.shape[0] == 0 or base.shape[0] == 0:
        return rows.shape[0] == base.shape[0]
    return rows.shape == base.shape and np.array_equal(rows, base)


def minimal_generator_count(code: IdealCode) -> int:
    """dim C - dim (uC + vC): the least number of R-module generators."""
    rows, _ = code.layer_basis
    if rows.shape[0] == 0:
        return 0
    n = code.n
    Z = np.zeros((rows.shape[0], n), dtype=np.int64)
    f = [rows[:, i * n:(i + 1) * n] for i in range(4)]
    u_rows = np.hstack([Z, f[0], Z, f[2]])
    v_rows = np.hstack([Z, Z, f[0], f[1]])
    return rows.shape[0] - fp_rank(np.vstack([u_rows, v_rows]), code.p)


def cyclic_counterpart(code: IdealCode) -> list[RPoly]:
    """Images of A1..A4 under x -> -x, rescaled so their leading layers stay monic."""
    out = []
    for A, r in zip(code.generators, code.degrees):
        if A is None:
            continue
        out.append(phi(A) * (-1 if r % 2 else 1))
    return out


def counterpart_code(code: IdealCode) -> IdealCode:
    return from_generators(cyclic_counterpart(code), code.field, code.modulus.opposite())


def report(code: IdealCode) -> dict:
    """Canonical-form report with the fixed field names used for diffing."""
    out = {"p": code.p, "n": code.n}
    for name in IdealCode._G_NAMES + IdealCode._GIJ_NAMES:
        out[name] = str(getattr(code, name))
    out.update({
        "r1": code.r1, "r2": code.r2, "r3": code.r3, "r4": code.r4,
        "rank": rank(code),
        "free_rank": free_rank(code),
        "is_free": is_free(code),
        "dim_fp": code.dim_fp,
    })
    return out
