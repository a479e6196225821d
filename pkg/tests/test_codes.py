import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from negacyclic.codes import (
    check_structure,
    closure_rows,
    coprime_form,
    counterpart_code,
    cyclic_counterpart,
    divides_modulus,
    fp_basis,
    free_generator,
    free_rank,
    from_generators,
    is_free,
    minimal_generator_count,
    parse_code,
    rank,
    rank_formula_proven,
    report,
    same_ideal,
    spanning_set,
    spanning_set_spans,
    torsion_ideals,
    verify_structure,
    zero_code,
)
from negacyclic.catalog import family_codes
from negacyclic.errors import NoCoprimeForm, NotCoprime, NotFree
from negacyclic.expr import parse_poly
from negacyclic.fieldpoly import PrimeField
from negacyclic.linalg import rank as fp_rank
from negacyclic.ring import ModulusKind, RPoly, phi
from negacyclic.sampling import random_code, random_presentation, rng_from


def P(text, p=5):
    return parse_poly(text, p)


def test_u_v_canonical_form():
    code = parse_code(["0;1", "0;0;1"], 5, 5)
    assert [str(g) for g in code.torsion] == ["x^5+1", "1", "1", "1"]
    assert all(getattr(code, k).is_zero() for k in ("g11", "g12", "g13", "g22", "g23", "g33"))
    assert [None if A is None else A.to_text() for A in code.generators] == [None, "0;1;0;0", "0;0;1;0", "0;0;0;1"]


def test_zero_code():
    code = zero_code(5, 5)
    assert code.is_zero_code() and code.dim_fp == 0
    assert fp_basis(code).dim == 0
    assert code.present_generators() == []


def test_unit_code():
    code = parse_code(["1"], 5, 5)
    assert code.degrees == (0, 0, 0, 0)
    assert is_free(code) and free_generator(code) == RPoly.parse("1", 5, code.modulus)
    assert rank(code) == 5


def test_presentation_perturbations():
    base = "(x+1)^4;0;0;3(x+1)^3"
    code = parse_code([base], 5, 5)
    g = RPoly.parse(base, 5, code.modulus)
    other = from_generators([g.shift(1), g.times_u(), g * 3 + g.shift(2), g.times_v()], code.field, code.modulus)
    assert other.dim_fp < code.dim_fp or other == code
    assert from_generators([g, g.shift(1), g.times_u(), g.times_uv()]) == code


@pytest.mark.parametrize("gens,dim", [(["0;0;0;(x+1)^4"], 1), (["0;1", "0;0;1"], 15)])
def test_fp_basis_dim(gens, dim):
    code = parse_code(gens, 5, 5)
    basis = fp_basis(code)
    assert basis.dim == dim == code.dim_fp
    assert fp_rank(closure_rows(code.present_generators()), 5) == dim


def test_torsion_examples():
    free = parse_code(["(x+1)^4;0;3(x+1)^3;(x+1)^3"], 5, 5)
    g = torsion_ideals(free)
    assert g[0] == g[1] == g[2] == g[3] == P("(x+1)^4")
    code = parse_code(["0;0;(x+1)^4;2(x+1)^3"], 5, 5)
    assert code.torsion == (P("x^5+1"), P("x^5+1"), P("(x+1)^4"), P("(x+1)^4"))
    uv = parse_code(["0;0;0;1"], 5, 5)
    assert uv.torsion == (P("x^5+1"), P("x^5+1"), P("x^5+1"), P("1"))


def test_structure_negative_control():
    field = PrimeField(5)
    modulus = ModulusKind.negacyclic(5)
    g = (P("(x+1)^4"), P("(x+1)^3"), P("(x+1)^3"), P("(x+1)^3"))
    rep = check_structure(field, modulus, g, {"g11": P("1")})
    assert rep.verdicts[2] is False
    assert rep.witnesses[2]
    assert not rep.all_hold


def test_free_property_five():
    codes = family_codes(5, 5, "free", coeff_budget=40)
    assert len(codes) > 5
    for code in codes:
        assert is_free(code)
        assert verify_structure(code).verdicts[5]


def test_free_examples():
    code = parse_code(["(x+1)^4;2(x+1)^3;0;3(x+1)^3"], 5, 5)
    assert is_free(code) and rank(code) == 1
    A1 = free_generator(code)
    assert divides_modulus(A1)
    not_free = parse_code(["0;1", "0;0;1"], 5, 5)
    assert not is_free(not_free)
    with pytest.raises(NotFree):
        free_generator(not_free)


def test_free_module_dimension():
    rng = rng_from(3)
    for _ in range(20):
        code, _ = random_code(5, 5, rng)
        if not is_free(code) or code.is_zero_code():
            continue
        A1 = free_generator(code)
        block = [A1.shift(i) for i in range(code.n - code.r1)]
        assert fp_rank(closure_rows(block, with_shifts=False), 5) == 4 * (code.n - code.r1)


@pytest.mark.parametrize("gens,expected", [
    (["0;1", "0;0;1"], 10),
    (["0;0;x+1", "0;0;0;1"], 5),
    (["0;x+1;3", "0;0;x+1", "0;0;0;1"], 9),
    (["0;x+1;0", "0;0;x+1", "0;0;0;1"], 9),
    (["0;(x+1)^2;0;0", "0;0;(x+1)^2;0", "0;0;0;x+1"], 7),
])
def test_rank_spot_values(gens, expected):
    code = parse_code(gens, 5, 5)
    assert rank(code) == expected
    assert spanning_set(code).rank == expected
    assert spanning_set_spans(code)


def test_rank_exceeds_minimal_generators():
    # u*(u(x+1) + 3v) = 3uv, so uv is redundant although the formula counts it
    code = parse_code(["0;x+1;3", "0;0;x+1", "0;0;0;1"], 5, 5)
    assert rank(code) == 9
    assert minimal_generator_count(code) == 8


def test_free_rank_and_flags():
    code = parse_code(["(x+1)^2;1"], 5, 5)
    assert free_rank(code) == 3
    assert rank_formula_proven(code)
    assert not rank_formula_proven(parse_code(["x+1"], 5, 3))
    assert spanning_set(parse_code(["x+1"], 5, 3)).formula_proven is False


def test_coprime_form():
    unit = parse_code(["1"], 5, 3)
    first, second = coprime_form(unit)
    assert same_ideal([first, second], unit.present_generators(), 5)
    v = parse_code(["0;0;1"], 5, 3)
    first, second = coprime_form(v)
    assert first.is_zero() and second == RPoly.parse("0;0;1;1", 5, v.modulus)
    assert same_ideal([second], v.present_generators(), 5)
    with pytest.raises(NotCoprime):
        coprime_form(parse_code(["1"], 5, 5))
    with pytest.raises(NoCoprimeForm):
        coprime_form(parse_code(["0;1;1"], 5, 3))


def test_coprime_form_random():
    rng = rng_from(7)
    checked = 0
    for _ in range(40):
        code, _ = random_code(5, 3, rng)
        try:
            first, second = coprime_form(code)
        except NoCoprimeForm:
            continue
        checked += 1
        assert from_generators([g for g in (first, second) if g], code.field, code.modulus) == code
    assert checked > 5


def test_cyclic_counterpart_examples():
    code = parse_code(["x+1"], 5, 5)
    cyc = counterpart_code(code)
    assert not cyc.is_negacyclic
    assert cyc.g1 == P("x+4")
    uv = parse_code(["0;0;0;1"], 5, 5)
    assert [g.to_text() for g in cyclic_counterpart(uv)] == ["0;0;0;1"]


def test_counterpart_round_trip():
    rng = rng_from(11)
    for _ in range(20):
        code, _ = random_code(3, 9, rng)
        back = counterpart_code(counterpart_code(code))
        assert back == code
        assert all(phi(A) in counterpart_code(code).present_generators() or
                   counterpart_code(code).contains(phi(A)) for A in code.present_generators())


def test_report_fields():
    rep = report(parse_code(["0;1", "0;0;1"], 5, 5))
    assert list(rep) == ["p", "n", "g1", "g2", "g3", "g4", "g11", "g12", "g13", "g22", "g23", "g33",
                         "r1", "r2", "r3", "r4", "rank", "free_rank", "is_free", "dim_fp"]
    assert rep["rank"] == 10 and rep["is_free"] is False and rep["dim_fp"] == 15


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([(3, 3), (3, 5), (5, 5), (3, 9), (7, 3), (5, 3)]))
def test_random_codes_canonical(seed, pn):
    p, n = pn
    rng = rng_from(seed)
    code, gens = random_code(p, n, rng)
    assert verify_structure(code).all_hold
    assert code.dim_fp == 4 * n - sum(code.degrees)
    assert spanning_set_spans(code)
    assert from_generators(code.present_generators()) == code
    assert from_generators(random_presentation(gens, rng)) == code
    basis = fp_basis(code)
    assert np.array_equal(basis.rows, fp_basis(from_generators(gens)).rows)
