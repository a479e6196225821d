import pytest
from hypothesis import given, settings, strategies as st

from negacyclic.distance import hamming_weight
from negacyclic.errors import FieldMismatch, ModulusMismatch, NotDivisibleSetup, NotInvertible, OddLengthRequired
from negacyclic.expr import parse_poly
from negacyclic.fieldpoly import PrimeField
from negacyclic.ring import (
    IdealTag,
    ModulusKind,
    RElem,
    RPoly,
    is_regular,
    phi,
    r_classify,
    r_mul,
    residue,
    rpoly_divmod_regular,
    rpoly_mul,
)


def E(a=0, b=0, c=0, d=0, p=5):
    return RElem.of(PrimeField(p), a, b, c, d)


def R(text, p=5, n=5, negacyclic=True):
    modulus = None if n is None else ModulusKind(-1 if negacyclic else 1, n)
    return RPoly.parse(text, p, modulus)


def test_r_mul_relations():
    u, v = E(b=1), E(c=1)
    assert r_mul(u, v) == E(d=1)
    assert r_mul(u, u) == E()
    assert r_mul(v, v) == E()
    assert r_mul(E(1, 1), E(1, 4)) == E(1)


def test_r_mul_field_mismatch():
    with pytest.raises(FieldMismatch):
        r_mul(E(1), E(1, p=3))


@pytest.mark.parametrize("x,tag,alpha", [
    (E(1, 1), IdealTag.UNIT, None),
    (E(0, 1, 2), IdealTag.U_PLUS_ALPHA_V, 2),
    (E(d=1), IdealTag.UV, None),
    (E(b=3), IdealTag.U, None),
    (E(c=4, d=1), IdealTag.V, None),
    (E(), IdealTag.ZERO, None),
])
def test_classify(x, tag, alpha):
    cls = r_classify(x)
    assert cls.tag is tag and cls.alpha == alpha


def test_classify_alpha_normalized():
    # <2u+4v> = <u+2v>
    assert r_classify(E(0, 2, 4)).alpha == 2


def test_inverse():
    x = E(3, 1, 2, 4)
    assert x * x.inverse() == E(1)
    with pytest.raises(NotInvertible):
        E(0, 1).inverse()


elems = st.tuples(*[st.integers(0, 4)] * 4).map(lambda t: E(*t))


@settings(max_examples=500, deadline=None)
@given(elems, elems, elems)
def test_ring_axioms(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x.is_unit() == (r_classify(x).tag is IdealTag.UNIT)
    if x.is_unit():
        assert x * x.inverse() == E(1)


def test_negacyclic_reduction():
    assert R("x") * R("x^4") == R("4")
    assert R("x", negacyclic=False) * R("x^4", negacyclic=False) == R("1", negacyclic=False)


def test_nilpotent_products():
    f = R("x^2+3;2x;1;x")
    assert f.times_u().times_v() == R("0;0;0;x^2+3")
    assert R("0;1") * (R("0;0;1") * f) == f.times_uv()


def test_product_example():
    assert R("x+1;1") * R("x+1;4") == R("(x+1)^2")


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        rpoly_mul(R("x"), R("x", negacyclic=False))
    with pytest.raises(ModulusMismatch):
        rpoly_mul(R("x"), R("x", n=3))


def test_even_length_rejected():
    with pytest.raises(OddLengthRequired):
        ModulusKind.negacyclic(4)


def test_residue_and_regular():
    assert residue(R("x+1;2;3;4")) == parse_poly("x+1", 5)
    assert residue(R("0;1")).is_zero()
    assert residue(R("3;0;0;x")) == parse_poly("3", 5)
    assert not is_regular(R("0;1;x"))
    assert is_regular(R("1;x"))
    assert is_regular(R("x+1;0;0;x^3"))


def test_phi_examples():
    f = R("x+1", negacyclic=False)
    g = phi(f)
    assert g.modulus == ModulusKind.negacyclic(5)
    assert g == R("4x+1")
    assert phi(R("x^2")) == R("x^2", negacyclic=False)


def test_degree_conventions():
    f = R("0;x^3;1")
    assert f.degree is None and f.max_degree == 3
    assert R("x^2+1;x^4").degree == 2


def test_divmod_regular_examples():
    field = PrimeField(5)
    f = R("(x+1)^2;x+1", n=None)
    g = R("x+1;1", n=None)
    q, r = rpoly_divmod_regular(f, g)
    assert q * g + r == f
    assert q == R("x+1", n=None) and r.is_zero()
    h = R("x^3+2x;x^2;1", n=None)
    assert rpoly_divmod_regular(h, R("1", n=None)) == (h, RPoly.zero(field, None))


def test_divmod_regular_rejects():
    with pytest.raises(NotDivisibleSetup):
        rpoly_divmod_regular(R("x^2", n=None), R("0;x", n=None))
    with pytest.raises(NotDivisibleSetup):
        rpoly_divmod_regular(R("x^2", n=None), R("x+1;x^2", n=None))


def test_text_round_trip():
    f = R("(x+1)^4;(x+1)^3;0;2")
    assert R(f.to_text()) == f
    assert f.to_text() == "x^4+4x^3+x^2+4x+1;x^3+3x^2+3x+1;0;2"


polys = st.lists(st.lists(st.integers(0, 4), max_size=5), min_size=4, max_size=4)


def _rp(rows, n=None, p=5):
    field = PrimeField(p)
    modulus = None if n is None else ModulusKind.negacyclic(n)
    return RPoly([field.poly(r) for r in rows], modulus, field)


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_divmod_regular_identity(a, b):
    g = _rp(b)
    if not is_regular(g) or g.max_degree > g.degree:
        return
    f = _rp(a)
    q, r = rpoly_divmod_regular(f, g)
    assert q * g + r == f
    assert r.max_degree is None or r.max_degree < g.degree


@settings(max_examples=300, deadline=None)
@given(polys, polys, st.sampled_from([3, 5, 9]))
def test_phi_is_isomorphism(a, b, n):
    f, g = _rp(a, n), _rp(b, n)
    assert phi(f + g) == phi(f) + phi(g)
    assert phi(f * g) == phi(f) * phi(g)
    assert phi(phi(f)) == f
    assert hamming_weight(phi(f)) == hamming_weight(f)
