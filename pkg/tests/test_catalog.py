import itertools

import numpy as np
import pytest

from negacyclic.catalog import (
    CSV_FIELDS,
    TABLE_ROWS,
    catalog_codes,
    check_row,
    coefficient_choices,
    enumerate_skeletons,
    family_codes,
    instantiate,
    reproduce_tables,
)
from negacyclic.codes import fp_basis, rank, verify_structure
from negacyclic.distance import min_distance_support
from negacyclic.sampling import rng_from


def _row(table, row):
    return next(r for r in TABLE_ROWS if (r.table, r.row) == (table, row))


def _chain_count(n):
    return sum(1 for t1, t2, t3, t4 in itertools.product(range(n + 1), repeat=4)
               if t4 <= t2 <= t1 and t4 <= t3 <= t1)


@pytest.mark.parametrize("p,n", [(5, 5), (3, 3), (3, 9), (3, 1)])
def test_skeletons_prime_power(p, n):
    sks = enumerate_skeletons(p, n)
    ts = {s.t for s in sks}
    assert (n, n, n, n) in ts and (0, 0, 0, 0) in ts
    assert len(sks) == len(ts) == _chain_count(n)


def test_skeletons_general_length():
    sks = enumerate_skeletons(5, 3)
    assert all(s.is_valid(s.g[0].field.poly([1, 0, 0, 1])) for s in sks)
    assert any(s.t == (3, 3, 1, 1) for s in enumerate_skeletons(3, 3))


def test_table_counts():
    assert [sum(1 for r in TABLE_ROWS if r.table == t) for t in (1, 2, 3)] == [5, 15, 20]


def test_coefficient_choices_respect_conditions():
    rng = rng_from(0)
    row = _row(1, 1)
    choices = coefficient_choices(row, rng)
    assert (0, 0, 0) in choices and (1, 1, 1) not in choices
    assert len(choices) == 6
    assert all(c[0] * c[1] % 5 == 0 for c in choices)
    assert coefficient_choices(_row(1, 5), rng) == [()]


@pytest.mark.parametrize("table,row,rk,d", [(1, 1, 1, 5), (2, 12, 4, 2), (3, 12, 7, 2)])
def test_row_examples_at_zero(table, row, rk, d):
    r = _row(table, row)
    code = instantiate(r, (0,) * r.n_params)
    assert rank(code) == rk
    assert min_distance_support(code) == d


def test_reproduce_tables_verdicts():
    verdicts = reproduce_tables(seed=0)
    assert len(verdicts) == 40
    bad = {(v.table, v.row) for v in verdicts if v.verdict != "match"}
    assert {(v.table, v.row) for v in verdicts if v.table < 3}.isdisjoint(bad)
    assert bad <= {(3, 3), (3, 4), (3, 8), (3, 12)}
    for v in verdicts:
        for info in v.details:
            if info["d_oracle"] != v.expected_d:
                assert "witness" in info


def test_row_twelve_contains_uv():
    code = instantiate(_row(3, 12), (1, 0, 0))
    assert code.degrees == (5, 2, 2, 0)
    assert min_distance_support(code) == 1


def test_verdict_dict_shape():
    v = check_row(_row(2, 3), rng_from(0)).as_dict()
    assert {"table", "row", "expected_rank", "got_rank", "expected_d", "got_d", "verdict"} <= set(v)
    assert v["got_rank"] == 1 and v["got_d"] == 5 and v["verdict"] == "match"


def test_free_family_small():
    entries = catalog_codes(3, 3, "free")
    assert all(e.as_row()["is_free"] for e in entries)
    assert any(e.code.degrees[0] == 1 and e.rank == 2 for e in entries)


def test_single_nonfree_covers_table_two():
    codes = family_codes(5, 5, "single-nonfree", coeff_budget=10)
    families = set()
    for c in codes:
        lead = next(i for i in range(4) if c.torsion[i] != c.modulus_poly)
        families.add((lead, c.degrees[lead]))
    assert {(lead, t) for lead in (1, 2, 3) for t in range(5)} <= families


def test_uv_only_family():
    entries = catalog_codes(3, 9, "uv-only")
    assert [e.code.degrees[3] for e in entries] == list(range(1, 9))
    assert all(isinstance(e.distance.d_formula, int) for e in entries)


def test_catalog_rows_and_dedup():
    entries = catalog_codes(3, 3, "all", coeff_budget=9)
    assert len({e.code.key for e in entries}) == len(entries)
    for e in entries:
        assert tuple(e.as_row()) == CSV_FIELDS
        assert verify_structure(e.code).all_hold
    bases = [fp_basis(e.code).rows for e in entries]
    for i, j in itertools.combinations(range(len(bases)), 2):
        same = bases[i].shape == bases[j].shape and np.array_equal(bases[i], bases[j])
        assert not same


def test_catalog_deterministic():
    a = [e.as_row() for e in catalog_codes(3, 5, "all", coeff_budget=5, seed=4)]
    b = [e.as_row() for e in catalog_codes(3, 5, "all", coeff_budget=5, seed=4)]
    assert a == b


def test_unknown_family():
    with pytest.raises(ValueError):
        family_codes(3, 3, "nope")
