import random

import pytest

from addmds import linalg
from addmds.errors import InvalidSubfield, NotInvertible
from addmds.linpoly import (
    LinearizedPoly,
    all_linearized,
    invertible_linearized,
    random_invertible,
)

import oracles

# |GL_h(F_q)| counts, frozen
INVERTIBLE_COUNTS = {(2, 1, 2): 6, (2, 1, 3): 168, (3, 1, 2): 48}


def test_evaluation_matches_naive_powering(f9):
    rng = random.Random(0)
    for _ in range(40):
        coeffs = tuple(rng.randrange(9) for _ in range(2))
        f = LinearizedPoly(f9, coeffs)
        for x in f9.elements():
            assert f(x) == oracles.lin_eval(f9, coeffs, x)


def test_evaluation_is_fq_linear(f9):
    f = LinearizedPoly(f9, (4, 7))
    for x in f9.elements():
        for y in f9.elements():
            assert f(f9.add(x, y)) == f9.add(f(x), f(y))
    for a in f9.fq_elements:
        for x in f9.elements():
            assert f(f9.mul(a, x)) == f9.mul(a, f(x))


def test_compose_matches_pointwise(f8):
    rng = random.Random(2)
    for _ in range(30):
        f = LinearizedPoly(f8, tuple(rng.randrange(8) for _ in range(3)))
        g = LinearizedPoly(f8, tuple(rng.randrange(8) for _ in range(3)))
        comp = f.compose(g)
        for x in f8.elements():
            assert comp(x) == f(g(x))


@pytest.mark.parametrize("key", sorted(INVERTIBLE_COUNTS))
def test_invertibility_three_ways_exhaustive(key):
    from conftest import tower
    t = tower(*key)
    count = 0
    for f in all_linearized(t):
        det = f.dickson_det()
        bij = oracles.is_bijective(t, f.coeffs)
        assert (det != 0) == bij
        if bij:
            count += 1
    assert count == INVERTIBLE_COUNTS[key]
    assert len(invertible_linearized(t)) == count


def test_inverse_composes_to_identity(f9):
    ident = LinearizedPoly.identity(f9)
    for f in invertible_linearized(f9):
        assert f.compose(f.inverse()) == ident
        assert f.inverse().compose(f) == ident


def test_inverse_raises_on_singular(f9):
    with pytest.raises(NotInvertible):
        LinearizedPoly(f9, (0, 0)).inverse()
    # X^q - X kills F_q, hence singular
    with pytest.raises(NotInvertible):
        LinearizedPoly(f9, (f9.neg(1), 1)).inverse()


def test_dickson_turns_composition_into_product(f8):
    rng = random.Random(3)
    for _ in range(100):
        f = LinearizedPoly(f8, tuple(rng.randrange(8) for _ in range(3)))
        g = LinearizedPoly(f8, tuple(rng.randrange(8) for _ in range(3)))
        lhs = f.compose(g).dickson()
        rhs = linalg.mat_mul(f8, f.dickson(), g.dickson())
        assert lhs == rhs


def test_from_values_interpolation(f9):
    rng = random.Random(4)
    for _ in range(25):
        f = LinearizedPoly(f9, tuple(rng.randrange(9) for _ in range(2)))
        values = [f(w) for w in f9.omega_powers]
        assert LinearizedPoly.from_values(f9, values) == f
    # arbitrary basis images always interpolate
    vals = [rng.randrange(9) for _ in range(2)]
    g = LinearizedPoly.from_values(f9, vals)
    assert [g(w) for w in f9.omega_powers] == vals


def test_conjugate_pointwise(f9):
    for f in invertible_linearized(f9)[:12]:
        finv = f.inverse()
        for a in f9.nonzero():
            c = f.conjugate(a)
            for x in f9.elements():
                assert c(x) == f(f9.mul(a, finv(x)))


def test_conjugate_rejects_zero(f9):
    with pytest.raises(ValueError):
        LinearizedPoly.identity(f9).conjugate(0)


def test_frobenius_twist(f8):
    rng = random.Random(5)
    for _ in range(20):
        f = LinearizedPoly(f8, tuple(rng.randrange(8) for _ in range(3)))
        for e in range(3):
            tw = f.frobenius_twist(e)
            for x in f8.elements():
                assert tw(x) == f(f8.frob(x, e))


def test_semilinear_support_test_matches_definition(f8):
    # brute: exists i with f(a x) = a^(q^i) f(x) for all a in F_q (s = 1)
    for f in invertible_linearized(f8):
        brute = False
        for i in range(3):
            if all(f(f8.mul(a, x)) == f8.mul(f8.frob(a, i), f(x))
                   for a in f8.fq_elements for x in f8.elements()):
                brute = True
                break
        assert f.is_semilinear(1) == brute
    with pytest.raises(InvalidSubfield):
        LinearizedPoly.identity(f8).is_semilinear(2)


def test_support_helpers(f9):
    f = LinearizedPoly(f9, (0, 5))
    assert f.support() == (1,)
    assert f.is_monomial() and not f.is_scalar()
    assert f.zero_coeff_count() == 1
    assert LinearizedPoly.scalar(f9, 3).is_scalar()
    assert LinearizedPoly.zero(f9).is_zero()
    assert LinearizedPoly.monomial(f9, 2, 5).coeffs == (0, 2)  # index mod h


def test_conjugation_subfield_degree(f27):
    assert LinearizedPoly(f27, (1, 0, 0)).conjugation_subfield_degree() == 3
    assert LinearizedPoly(f27, (0, 1, 0)).conjugation_subfield_degree() == 3
    assert LinearizedPoly(f27, (1, 1, 0)).conjugation_subfield_degree() == 1
    assert LinearizedPoly(f27, (1, 0, 1)).conjugation_subfield_degree() == 1
    with pytest.raises(ValueError):
        LinearizedPoly.zero(f27).conjugation_subfield_degree()


def test_json_roundtrip(f25):
    rng = random.Random(6)
    f = random_invertible(f25, rng)
    assert LinearizedPoly.from_json(f25, f.to_json()) == f


def test_algebra_ops(f9):
    f = LinearizedPoly(f9, (1, 2))
    g = LinearizedPoly(f9, (3, 0))
    assert (f + g).coeffs == (f9.add(1, 3), 2)
    assert (f - g).coeffs == (f9.sub(1, 3), 2)
    assert f.scale(2).coeffs == (f9.mul(2, 1), f9.mul(2, 2))
    with pytest.raises(ValueError):
        LinearizedPoly(f9, (1,))
