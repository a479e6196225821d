"""Randomized invariant checks shared by the ``verify`` command and the tests."""

from __future__ import annotations

from collections import defaultdict

import numpy as np

from .codes import (
    IdealCode,
    counterpart_code,
    from_generators,
    spanning_set_spans,
    verify_structure,
)
from .distance import DEFAULT_ENUM_BUDGET, hamming_weight, min_distance_enum, min_distance_support
from .fieldpoly import PrimeField
from .ring import NEGACYCLIC, ModulusKind, RPoly, phi
from .sampling import random_code, random_presentation, random_rpoly, rng_from


def isomorphism_checks(f: RPoly, g: RPoly) -> dict[str, bool]:
    """x -> -x against addition, multiplication, its own inverse and weight."""
    return {
        "phi_additive": phi(f + g) == phi(f) + phi(g),
        "phi_multiplicative": phi(f * g) == phi(f) * phi(g),
        "phi_involution": phi(phi(f)) == f,
        "phi_weight": hamming_weight(f) == hamming_weight(phi(f)),
    }


def random_pair(p: int, n: int, rng) -> tuple[RPoly, RPoly]:
    field = PrimeField(p)
    modulus = ModulusKind(NEGACYCLIC, n)
    return random_rpoly(field, modulus, rng), random_rpoly(field, modulus, rng)


def structure_checks(code: IdealCode, gens: list[RPoly], rng) -> dict[str, bool]:
    props = verify_structure(code)
    out = {f"property_{k}": bool(props.verdicts.get(k, False)) for k in range(1, 8)}
    g1, g2, g3, g4 = code.torsion
    out["chains"] = g4.divides(g2) and g4.divides(g3) and g2.divides(g1) and g3.divides(g1)
    out["dim_formula"] = code.dim_fp == 4 * code.n - sum(code.degrees)
    out["spanning_set"] = spanning_set_spans(code)
    again = from_generators(code.present_generators(), code.field, code.modulus)
    out["idempotent"] = again == code and again.key == code.key
    other = from_generators(random_presentation(code.present_generators(), rng), code.field, code.modulus)
    out["presentation_invariant"] = other == code
    return out


def distance_checks(code: IdealCode, enum_budget: int = DEFAULT_ENUM_BUDGET) -> dict[str, bool]:
    d = min_distance_support(code)
    out = {"distance_transfer": d == min_distance_support(counterpart_code(code))}
    if code.p**code.dim_fp <= enum_budget:
        out["oracle_agreement"] = d == min_distance_enum(code, enum_budget)
    return out


def run_invariant_suite(p_values=(3, 5), n_values=(3, 5, 9), count: int = 20, seed=0,
                        max_dim: int = 12, enum_budget: int = 10**6) -> dict[str, list[int]]:
    """Pass counts ``[passed, total]`` per property over random codes and pairs."""
    rng = rng_from(seed)
    tally: dict[str, list[int]] = defaultdict(lambda: [0, 0])

    def record(results):
        for name, ok in results.items():
            tally[name][0] += int(ok)
            tally[name][1] += 1

    combos = [(p, n) for p in p_values for n in n_values]
    for i in range(count):
        p, n = combos[i % len(combos)]
        record(isomorphism_checks(*random_pair(p, n, rng)))
        code, gens = random_code(p, n, rng, max_dim=max_dim)
        record(structure_checks(code, gens, rng))
        record(distance_checks(code, enum_budget))
    return dict(sorted(tally.items()))


def suite_passed(tally: dict[str, list[int]]) -> bool:
    return all(passed == total for passed, total in tally.values())
