"""Seeded random polynomials, codes and generator presentations."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .codes import IdealCode, from_generators
from .fieldpoly import FpPoly, PrimeField, monic_divisors
from .ring import CYCLIC, NEGACYCLIC, ModulusKind, RElem, RPoly


def rng_from(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_fppoly(field: PrimeField, bound: int, rng: np.random.Generator) -> FpPoly:
    """Uniform polynomial of degree below ``bound``."""
    if bound <= 0:
        return field.zero()
    return FpPoly(rng.integers(0, field.p, size=bound).tolist(), field)


def random_relem(field: PrimeField, rng: np.random.Generator, unit: bool = False) -> RElem:
    a, b, c, d = rng.integers(0, field.p, size=4).tolist()
    if unit and a == 0:
        a = int(rng.integers(1, field.p))
    return RElem.of(field, a, b, c, d)


def random_rpoly(field: PrimeField, modulus: ModulusKind, rng: np.random.Generator) -> RPoly:
    n = modulus.n
    return RPoly([random_fppoly(field, n, rng) for _ in range(4)], modulus, field)


@lru_cache(maxsize=None)
def divisors_of_modulus(p: int, n: int, sign: int) -> tuple[FpPoly, ...]:
    field = PrimeField(p)
    return tuple(monic_divisors(ModulusKind(sign, n).polynomial(field)))


def random_torsion(p: int, n: int, sign: int, rng: np.random.Generator) -> tuple[FpPoly, ...]:
    """g1..g4 with g4 | g2 | g1 and g4 | g3 | g1, all dividing the modulus."""
    divs = divisors_of_modulus(p, n, sign)
    while True:
        g1, g2, g3, g4 = (divs[int(i)] for i in rng.integers(0, len(divs), size=4))
        if g2.divides(g1) and g3.divides(g1) and g4.divides(g2) and g4.divides(g3):
            return g1, g2, g3, g4


def generators_from_torsion(g, field: PrimeField, modulus: ModulusKind,
                            rng: np.random.Generator) -> list[RPoly]:
    """Triangular generators over the given torsion with random lower-layer entries."""
    M = modulus.polynomial(field)
    zero = field.zero()
    gens = []
    for i in range(4):
        if g[i] == M:
            continue
        parts = [zero] * 4
        parts[i] = g[i]
        for j in range(i + 1, 4):
            bound = g[j].degree if g[j].degree is not None else modulus.n
            parts[j] = random_fppoly(field, bound, rng)
        gens.append(RPoly(parts, modulus, field))
    return gens


def random_presentation(gens: list[RPoly], rng: np.random.Generator, extra: int = 2) -> list[RPoly]:
    """Another generating set for the same ideal.

    Each generator is scaled by a random unit and receives random R[x]
    multiples of the later ones (an invertible triangular change), then
    ``extra`` redundant combinations are appended and the list shuffled.
    """
    if not gens:
        return []
    field, modulus = gens[0].field, gens[0].modulus
    out = []
    for i, A in enumerate(gens):
        B = (A * random_relem(field, rng, unit=True)).shift(int(rng.integers(0, modulus.n)))
        for later in gens[i + 1:]:
            B = B + later * random_rpoly(field, modulus, rng)
        out.append(B)
    for _ in range(extra):
        comb = RPoly.zero(field, modulus)
        for A in gens:
            comb = comb + A * random_rpoly(field, modulus, rng)
        out.append(comb)
    order = rng.permutation(len(out))
    return [out[int(k)] for k in order]


def random_code(p: int, n: int, rng, negacyclic: bool = True, max_dim: int | None = None,
                min_dim: int = 1) -> tuple[IdealCode, list[RPoly]]:
    """A random nonzero code and the presentation it was built from.

    The torsion is drawn from divisor chains and the lower-layer entries
    uniformly; the generating set handed back is a scrambled presentation,
    not the canonical quadruple.
    """
    rng = rng_from(rng)
    field = PrimeField(p)
    sign = NEGACYCLIC if negacyclic else CYCLIC
    modulus = ModulusKind(sign, n)
    while True:
        g = random_torsion(p, n, sign, rng)
        dim = sum(n - (f.degree or 0) for f in g)
        if dim < min_dim or (max_dim is not None and dim > max_dim):
            continue
        gens = random_presentation(generators_from_torsion(g, field, modulus, rng), rng)
        code = from_generators(gens, field, modulus)
        if code.dim_fp >= min_dim and (max_dim is None or code.dim_fp <= max_dim):
            return code, gens
