"""Code catalogs for small (p, n) and the length-5 example tables over F_5.

Table rows are generator templates in the ``f0;f1;f2;f3`` syntax where
``g`` stands for x+1 and ``{c0}``, ``{c1}``, ... are free coefficients
in F_p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

import numpy as np

from .codes import IdealCode, from_generators, free_rank, is_free, minimal_generator_count, rank, report, verify_structure
from .distance import DEFAULT_ENUM_BUDGET, DEFAULT_SUPPORT_BUDGET, DistanceReport, distance_report, symbols_to_rpoly
from .errors import BudgetExceeded, InvariantViolation
from .fieldpoly import FpPoly, PrimeField, monic_divisors
from .ring import CYCLIC, NEGACYCLIC, ModulusKind, RPoly
from .sampling import random_fppoly, rng_from

FAMILIES = ("all", "free", "single-nonfree", "uv-only")
DEFAULT_COEFF_BUDGET = 25
CSV_FIELDS = ("p", "n", "t1", "t2", "t3", "t4", "g11", "g12", "g13", "g22", "g23", "g33",
              "rank", "free_rank", "dim_fp", "is_free", "d_oracle", "d_formula", "hypothesis_met", "source")


@dataclass(frozen=True)
class Skeleton:
    """Torsion polynomials g1..g4; an absent layer carries the modulus itself."""

    g: tuple[FpPoly, FpPoly, FpPoly, FpPoly]

    @property
    def t(self) -> tuple[int, int, int, int]:
        return tuple(f.degree for f in self.g)

    def is_valid(self, modulus: FpPoly) -> bool:
        g1, g2, g3, g4 = self.g
        return (g1.divides(modulus) and g2.divides(g1) and g3.divides(g1)
                and g4.divides(g2) and g4.divides(g3))


def enumerate_skeletons(p: int, n: int, negacyclic: bool = True, budget: int = 10**6) -> list[Skeleton]:
    """Every divisor quadruple with g4 | g2 | g1 | modulus and g4 | g3 | g1."""
    field = PrimeField(p)
    M = ModulusKind(NEGACYCLIC if negacyclic else CYCLIC, n).polynomial(field)
    divs = monic_divisors(M, budget)
    out = []
    for g1 in divs:
        below = [d for d in divs if d.divides(g1)]
        for g2, g3 in itertools.product(below, repeat=2):
            for g4 in below:
                if g4.divides(g2) and g4.divides(g3):
                    out.append(Skeleton((g1, g2, g3, g4)))
    return out


@dataclass
class CatalogEntry:
    code: IdealCode
    rank: int
    free_rank: int
    distance: DistanceReport
    source: str

    def as_row(self) -> dict:
        rep = report(self.code)
        t = self.code.degrees
        row = {"p": self.code.p, "n": self.code.n,
               "t1": t[0], "t2": t[1], "t3": t[2], "t4": t[3]}
        for name in ("g11", "g12", "g13", "g22", "g23", "g33"):
            row[name] = rep[name]
        row.update({
            "rank": self.rank, "free_rank": self.free_rank, "dim_fp": self.code.dim_fp,
            "is_free": is_free(self.code),
            "d_oracle": self.distance.d_oracle, "d_formula": self.distance.d_formula,
            "hypothesis_met": self.distance.hypothesis_met, "source": self.source,
        })
        return row


def make_entry(code: IdealCode, source: str, support_budget: int = DEFAULT_SUPPORT_BUDGET,
               enum_budget: int = DEFAULT_ENUM_BUDGET) -> CatalogEntry:
    props = verify_structure(code)
    if not props.all_hold:
        raise InvariantViolation(f"structure check failed for {code!r}: {props.witnesses}")
    return CatalogEntry(code, rank(code), free_rank(code),
                        distance_report(code, support_budget, enum_budget), source)


def _slot_choices(bounds: Sequence[int], field: PrimeField, budget: int, rng) -> list[tuple[FpPoly, ...]]:
    """All coefficient tuples with the given degree bounds, or ``budget`` random ones plus zero."""
    total_digits = sum(bounds)
    if field.p**total_digits <= budget:
        out = []
        for digits in itertools.product(range(field.p), repeat=total_digits):
            polys, k = [], 0
            for b in bounds:
                polys.append(FpPoly(digits[k:k + b], field))
                k += b
            out.append(tuple(polys))
        return out
    out = [tuple(field.zero() for _ in bounds)]
    for _ in range(budget - 1):
        out.append(tuple(random_fppoly(field, b, rng) for b in bounds))
    return out


def _skeleton_codes(sk: Skeleton, field: PrimeField, modulus: ModulusKind, budget: int, rng):
    M = modulus.polynomial(field)
    present = [i for i in range(4) if sk.g[i] != M]
    slots = [(i, j) for i in present for j in range(i + 1, 4)]
    bounds = [sk.g[j].degree for _, j in slots]
    for choice in _slot_choices(bounds, field, budget, rng):
        parts = {i: [field.zero()] * 4 for i in present}
        for i in present:
            parts[i][i] = sk.g[i]
        for (i, j), f in zip(slots, choice):
            parts[i][j] = f
        gens = [RPoly(parts[i], modulus, field) for i in present]
        yield from_generators(gens, field, modulus)


def _free_candidates(field: PrimeField, modulus: ModulusKind, budget: int, rng):
    """Single generators g + u g11 + v g12 + uv g13 with deg g_1j < deg g."""
    M = modulus.polynomial(field)
    for g in monic_divisors(M):
        if g == M:
            continue
        for choice in _slot_choices([g.degree] * 3, field, budget, rng):
            yield from_generators([RPoly((g,) + choice, modulus, field)], field, modulus)


def _single_generators(field: PrimeField, modulus: ModulusKind, budget: int, rng):
    """One-generator codes led by g in layer 1, u, v or uv, with sampled lower layers."""
    M = modulus.polynomial(field)
    n = modulus.n
    for g in monic_divisors(M):
        if g == M:
            continue
        for lead in range(4):
            lower = 3 - lead
            for choice in _slot_choices([n] * lower, field, budget, rng):
                parts = [field.zero()] * lead + [g] + list(choice)
                yield from_generators([RPoly(parts, modulus, field)], field, modulus)


def family_codes(p: int, n: int, family: str = "all", coeff_budget: int = DEFAULT_COEFF_BUDGET,
                 seed=0, negacyclic: bool = True) -> list[IdealCode]:
    """Distinct nonzero canonical codes of a family, sorted by skeleton then form."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    rng = rng_from(seed)
    field = PrimeField(p)
    modulus = ModulusKind(NEGACYCLIC if negacyclic else CYCLIC, n)
    M = modulus.polynomial(field)
    if family == "uv-only":
        stream = (from_generators([RPoly([field.zero()] * 3 + [g], modulus, field)], field, modulus)
                  for g in monic_divisors(M) if 0 < g.degree < n)
    elif family == "free":
        stream = (c for c in _free_candidates(field, modulus, coeff_budget, rng) if is_free(c))
    elif family == "single-nonfree":
        stream = (c for c in _single_generators(field, modulus, coeff_budget, rng) if not is_free(c))
    else:
        sks = enumerate_skeletons(p, n, negacyclic)
        stream = (c for s in sks for c in _skeleton_codes(s, field, modulus, coeff_budget, rng))
    seen = {}
    for code in stream:
        if not code.is_zero_code():
            seen.setdefault(code.key, code)
    return sorted(seen.values(), key=lambda c: (c.degrees, c.key))


def catalog_codes(p: int, n: int, family: str = "all", coeff_budget: int = DEFAULT_COEFF_BUDGET,
                  seed=0, negacyclic: bool = True, support_budget: int = DEFAULT_SUPPORT_BUDGET,
                  enum_budget: int = DEFAULT_ENUM_BUDGET) -> list[CatalogEntry]:
    codes = family_codes(p, n, family, coeff_budget, seed, negacyclic)
    return [make_entry(c, "enumerated", support_budget, enum_budget) for c in codes]


# example tables for p = 5, n = 5


def _any(*_):
    return True


@dataclass(frozen=True)
class TableRow:
    table: int
    row: int
    label: str
    templates: tuple[str, ...]
    expected_rank: int
    expected_d: int
    n_params: int = 0
    condition: Callable[..., bool] = _any
    condition_text: str = ""


def _row(table, row, label, templates, rk, d, k=0, cond=_any, cond_text=""):
    return TableRow(table, row, label, tuple(templates), rk, d, k, cond, cond_text)


TABLE_ROWS: tuple[TableRow, ...] = (
    _row(1, 1, "<g^4+uc0g^3+vc1g^3+uvc2g^3>", ["g^4;{c0}g^3;{c1}g^3;{c2}g^3"], 1, 5, 3,
         lambda c: c[0] * c[1] % 5 == 0, "c0c1=0"),
    _row(1, 2, "<g^3+uc0g^2+vc1g^2+uv(c2+c3x)g>", ["g^3;{c0}g^2;{c1}g^2;({c2}+{c3}x)g"], 2, 4, 4),
    _row(1, 3, "<g^2+u(c0+c1x)+v(c2+c3x)+uv(c4+c5x)>", ["g^2;{c0}+{c1}x;{c2}+{c3}x;{c4}+{c5}x"], 3, 3, 6,
         lambda c: c[0] == c[1] or c[2] == c[3], "c0=c1 or c2=c3"),
    _row(1, 4, "<g+uc0+vc1+uvc2>", ["g;{c0};{c1};{c2}"], 4, 2, 3),
    _row(1, 5, "<1>", ["1"], 5, 1),
    _row(2, 1, "<ug^4+vc0g^4+uvc1g^3>", ["0;g^4;{c0}g^4;{c1}g^3"], 1, 5, 2),
    _row(2, 2, "<vg^4+uvc0g^3>", ["0;0;g^4;{c0}g^3"], 1, 5, 1),
    _row(2, 3, "<uvg^4>", ["0;0;0;g^4"], 1, 5),
    _row(2, 4, "<ug^3+v(c0+c1x)g^3+uv(c2+c3x)g>", ["0;g^3;({c0}+{c1}x)g^3;({c2}+{c3}x)g"], 2, 4, 4),
    _row(2, 5, "<vg^3+uv(c0+c1x)g>", ["0;0;g^3;({c0}+{c1}x)g"], 2, 4, 2),
    _row(2, 6, "<uvg^3>", ["0;0;0;g^3"], 2, 4),
    _row(2, 7, "<ug^2+v(c0+c1x+c2x^2)g^2+uv(c3+c4x)>", ["0;g^2;({c0}+{c1}x+{c2}x^2)g^2;{c3}+{c4}x"], 3, 3, 5),
    _row(2, 8, "<vg^2+uv(c0+c1x)>", ["0;0;g^2;{c0}+{c1}x"], 3, 3, 2),
    _row(2, 9, "<uvg^2>", ["0;0;0;g^2"], 3, 3),
    _row(2, 10, "<ug+v(c0+c1x+c2x^2+c3x^3)g+uvc4>", ["0;g;({c0}+{c1}x+{c2}x^2+{c3}x^3)g;{c4}"], 4, 2, 5),
    _row(2, 11, "<vg+uvc0>", ["0;0;g;{c0}"], 4, 2, 1),
    _row(2, 12, "<uvg>", ["0;0;0;g"], 4, 2),
    _row(2, 13, "<u+v(c0+c1x+c2x^2+c3x^3+c4x^4)>", ["0;1;{c0}+{c1}x+{c2}x^2+{c3}x^3+{c4}x^4"], 5, 1, 5),
    _row(2, 14, "<v>", ["0;0;1"], 5, 1),
    _row(2, 15, "<uv>", ["0;0;0;1"], 5, 1),
    _row(3, 1, "<g^4+uc0g^3+vc1g^3+uvc2g^2, uvg^3>", ["g^4;{c0}g^3;{c1}g^3;{c2}g^2", "0;0;0;g^3"], 2, 4, 3),
    _row(3, 2, "<ug^4+uvc0g^3, vg^4+uvc1g^3>", ["0;g^4;0;{c0}g^3", "0;0;g^4;{c1}g^3"], 2, 5, 2),
    _row(3, 3, "<ug^4+v(c0+c1x)g^3+uvg^2, uvg^3>", ["0;g^4;({c0}+{c1}x)g^3;g^2", "0;0;0;g^3"], 2, 4, 2),
    _row(3, 4, "<ug^4+vc0g^3+uvc1g^2, vg^4>", ["0;g^4;{c0}g^3;{c1}g^2", "0;0;g^4"], 2, 5, 2),
    _row(3, 5, "<ug^4+uvc0g^2, uvg^3>", ["0;g^4;0;{c0}g^2", "0;0;0;g^3"], 2, 4, 1),
    _row(3, 6, "<vg^4+uvc0g^2, uvg^3>", ["0;0;g^4;{c0}g^2", "0;0;0;g^3"], 2, 4, 1),
    _row(3, 7, "<vg^4+uvc0g, uvg^2>", ["0;0;g^4;{c0}g", "0;0;0;g^2"], 3, 3, 1),
    _row(3, 8, "<g^3+uc0g+vc1g+uvc2, ug^2+vc3g+uvc4, vg^2+uvc5, uvg>",
         ["g^3;{c0}g;{c1}g;{c2}", "0;g^2;{c3}g;{c4}", "0;0;g^2;{c5}", "0;0;0;g"], 5, 2, 6,
         lambda c: c[0] * c[2] % 5 == 0, "c0c2=0"),
    _row(3, 9, "<ug^3+v(c0+c1x)g^3+uv(c2+c3x), uvg^2>", ["0;g^3;({c0}+{c1}x)g^3;{c2}+{c3}x", "0;0;0;g^2"], 3, 3, 4),
    _row(3, 10, "<vg^3+uvc0, uvg>", ["0;0;g^3;{c0}", "0;0;0;g"], 4, 2, 1),
    _row(3, 11, "<g^2+uc0+vc1, ug+vc2, vg, uv>", ["g^2;{c0};{c1}", "0;g;{c2}", "0;0;g", "0;0;0;1"], 6, 1, 3),
    _row(3, 12, "<ug^2+vc0+uvc1, vg^2+uvc2, uvg>", ["0;g^2;{c0};{c1}", "0;0;g^2;{c2}", "0;0;0;g"], 7, 2, 3),
    _row(3, 13, "<vg^2+uvc0, uvg>", ["0;0;g^2;{c0}", "0;0;0;g"], 4, 2, 1),
    _row(3, 14, "<g+uc0+vc1, uv>", ["g;{c0};{c1}", "0;0;0;1"], 5, 1, 2),
    _row(3, 15, "<g+uc0, v>", ["g;{c0}", "0;0;1"], 5, 1, 1),
    _row(3, 16, "<g+vc0, u+vc1>", ["g;0;{c0}", "0;1;{c1}"], 5, 1, 2),
    _row(3, 17, "<g, u, v>", ["g", "0;1", "0;0;1"], 6, 1),
    _row(3, 18, "<ug+vc0, vg, uv>", ["0;g;{c0}", "0;0;g", "0;0;0;1"], 9, 1, 1),
    _row(3, 19, "<vg, uv>", ["0;0;g", "0;0;0;1"], 5, 1),
    _row(3, 20, "<u, v>", ["0;1", "0;0;1"], 10, 1),
)

TABLE_P = 5
TABLE_N = 5
RANDOM_DRAWS = 5


def instantiate(row: TableRow, coeffs: Sequence[int], p: int = TABLE_P, n: int = TABLE_N) -> IdealCode:
    values = {f"c{i}": c for i, c in enumerate(coeffs)}
    field = PrimeField(p)
    modulus = ModulusKind(NEGACYCLIC, n)
    gens = [RPoly.parse(t.replace("g", "(x+1)").format(**values), field, modulus) for t in row.templates]
    return from_generators(gens, field, modulus)


def coefficient_choices(row: TableRow, rng, draws: int = RANDOM_DRAWS) -> list[tuple[int, ...]]:
    """All-zero and all-one boundary choices plus seeded draws, each honouring the side condition."""
    k = row.n_params
    if k == 0:
        return [()]
    out = [c for c in ((0,) * k, (1,) * k) if row.condition(c)]
    drawn = 0
    while drawn < draws:
        c = tuple(int(v) for v in rng.integers(0, TABLE_P, size=k))
        if row.condition(c):
            out.append(c)
            drawn += 1
    return out


@dataclass
class RowVerdict:
    table: int
    row: int
    label: str
    expected_rank: int
    got_rank: list[int]
    expected_d: int
    got_d: list
    verdict: str
    details: list[dict] = dc_field(default_factory=list)
    min_generators: list[int] = dc_field(default_factory=list)

    @property
    def rank_match(self) -> bool:
        return self.got_rank == [self.expected_rank]

    @property
    def d_match(self) -> bool:
        return all(d == self.expected_d for d in self.got_d if isinstance(d, int))

    def as_dict(self) -> dict:
        return {
            "table": self.table, "row": self.row, "label": self.label,
            "expected_rank": self.expected_rank, "got_rank": _collapse(self.got_rank),
            "expected_d": self.expected_d, "got_d": _collapse(self.got_d),
            "verdict": self.verdict, "min_generators": _collapse(self.min_generators),
            "details": self.details,
        }


def _collapse(values):
    return values[0] if len(values) == 1 else values


def check_row(row: TableRow, rng, support_budget: int = DEFAULT_SUPPORT_BUDGET,
              enum_budget: int = DEFAULT_ENUM_BUDGET, max_distance_dim: int | None = None) -> RowVerdict:
    """Rank and oracle distance for each coefficient choice, compared to the printed values.

    ``max_distance_dim`` skips the oracle on codes of larger F_p dimension.
    """
    ranks, dists, mins, details = [], [], [], []
    for coeffs in coefficient_choices(row, rng):
        code = instantiate(row, coeffs)
        rk = rank(code)
        if max_distance_dim is not None and code.dim_fp > max_distance_dim:
            rep = DistanceReport("skipped(dim)", "not-applicable", "none", False)
        else:
            rep = distance_report(code, support_budget, enum_budget)
        mg = minimal_generator_count(code)
        for lst, v in ((ranks, rk), (dists, rep.d_oracle), (mins, mg)):
            if v not in lst:
                lst.append(v)
        if rk != row.expected_rank or (isinstance(rep.d_oracle, int) and rep.d_oracle != row.expected_d):
            info = {"coefficients": list(coeffs), "rank": rk, "d_oracle": rep.d_oracle,
                    "min_generators": mg, "canonical": report(code)}
            if rep.witness is not None:
                w = symbols_to_rpoly(np.array(rep.witness), code.field, code.modulus)
                info["witness"] = w.to_text()
            details.append(info)
    verdict = "match" if not details else "mismatch"
    return RowVerdict(row.table, row.row, row.label, row.expected_rank, sorted(ranks),
                      row.expected_d, sorted(dists, key=str), verdict, details, sorted(mins))


def reproduce_tables(seed=0, tables: Sequence[int] = (1, 2, 3), support_budget: int = DEFAULT_SUPPORT_BUDGET,
                     enum_budget: int = DEFAULT_ENUM_BUDGET) -> list[RowVerdict]:
    rng = rng_from(seed)
    return [check_row(r, rng, support_budget, enum_budget) for r in TABLE_ROWS if r.table in tables]
