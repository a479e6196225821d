from negacyclic.codes import from_generators
from negacyclic.sampling import divisors_of_modulus, random_code, random_presentation, random_torsion, rng_from


def test_seeded_reproducible():
    a, _ = random_code(5, 5, 42)
    b, _ = random_code(5, 5, 42)
    assert a == b


def test_dimension_window():
    rng = rng_from(0)
    for _ in range(20):
        code, _ = random_code(3, 9, rng, max_dim=6, min_dim=3)
        assert 3 <= code.dim_fp <= 6


def test_torsion_chains():
    rng = rng_from(1)
    for _ in range(50):
        g1, g2, g3, g4 = random_torsion(5, 3, -1, rng)
        assert g4.divides(g2) and g2.divides(g1) and g4.divides(g3) and g3.divides(g1)
        assert g1 in divisors_of_modulus(5, 3, -1)


def test_presentation_keeps_ideal():
    rng = rng_from(2)
    for _ in range(20):
        code, gens = random_code(3, 5, rng)
        again = random_presentation(gens, rng, extra=3)
        assert len(again) == len(gens) + 3
        assert from_generators(again) == code
