import random
from itertools import permutations, product

import pytest

from milnorkit.milnor import (
    NonIsolatedError,
    UnsupportedGermError,
    WeightInconsistencyError,
    brieskorn_milnor,
    brieskorn_polynomial,
    is_weighted_homogeneous,
    jacobian_ideal,
    milnor_number,
    milnor_number_hypersurface,
    weighted_homogeneous_milnor,
)
from milnorkit.parser import GermDefinition, parse_expression
from milnorkit.poly import Polynomial, Ring, partial_derivative, weighted_degree

from oracles import box_staircase_count, truncated_colength

R3 = Ring(["x", "y", "z"])
x, y, z = R3.gens


def P(text, ring=R3):
    return parse_expression(text, ring)


def test_jacobian_ideal_examples():
    assert jacobian_ideal(P("x^2+y^2+z^2")) == [2 * x, 2 * y, 2 * z]
    assert jacobian_ideal(P("x^3+y^3+z^3")) == [3 * x**2, 3 * y**2, 3 * z**2]
    R2 = Ring(["x", "y"])
    assert jacobian_ideal(P("x*y", R2)) == [R2.gen(1), R2.gen(0)]


def test_milnor_examples():
    assert milnor_number_hypersurface(P("x^2+y^2+z^2")).mu == 1
    cubic = milnor_number_hypersurface(P("x^3+y^3+z^3"))
    assert cubic.mu == 8 == box_staircase_count([(2, 0, 0), (0, 2, 0), (0, 0, 2)], 3)
    assert cubic.mu == brieskorn_milnor([3, 3, 3])
    with pytest.raises(NonIsolatedError):
        milnor_number_hypersurface(P("x^2*y"))


def test_smooth_point_has_mu_zero():
    res = milnor_number_hypersurface(P("x + y^2 + z^3"))
    assert res.mu == 0 and res.smooth and res.notice


def test_brieskorn_examples():
    assert brieskorn_milnor([2, 2, 2, 2]) == 1
    assert brieskorn_milnor([3, 4, 2]) == 6
    assert milnor_number_hypersurface(P("x^3 + y^4 + z^2")).mu == 6
    for k in range(1, 6):
        assert brieskorn_milnor([k + 1, 2, 2]) == k
        assert milnor_number_hypersurface(brieskorn_polynomial(R3, [k + 1, 2, 2])).mu == k
    with pytest.raises(ValueError):
        brieskorn_milnor([1, 3])


def test_weighted_homogeneity():
    R2 = Ring(["x", "y"])
    assert is_weighted_homogeneous(P("x^3+y^3+z^3"), (1, 1, 1)) == 3
    assert is_weighted_homogeneous(P("x^2+y^3", R2), (3, 2)) == 6
    assert is_weighted_homogeneous(P("x^2+y^3", R2), (1, 1)) is None


def test_weighted_milnor_formula():
    R2 = Ring(["x", "y"])
    assert weighted_homogeneous_milnor((1, 1, 1), 3) == 8 == milnor_number_hypersurface(P("x^3+y^3+z^3")).mu
    assert weighted_homogeneous_milnor((3, 2), 6) == 2 == milnor_number_hypersurface(P("x^2+y^3", R2)).mu
    assert weighted_homogeneous_milnor((1, 1, 1, 1), 2) == 1
    with pytest.raises(WeightInconsistencyError):
        weighted_homogeneous_milnor((2, 2), 5)
    with pytest.raises(WeightInconsistencyError):
        weighted_homogeneous_milnor((2, 3), 3)


def _random_weighted(rng, ring, weights, d, terms=4):
    mons = [
        m
        for m in product(*(range(d // w + 1) for w in weights))
        if weighted_degree(m, weights) == d
    ]
    chosen = rng.sample(mons, min(terms, len(mons)))
    return Polynomial(ring, {m: rng.choice([-3, -2, -1, 1, 2, 3]) for m in chosen})


def test_euler_identity_random():
    rng = random.Random(1)
    for _ in range(30):
        weights = tuple(rng.randint(1, 4) for _ in range(3))
        d = rng.randint(max(weights) + 1, 14)
        f = _random_weighted(rng, R3, weights, d)
        if f.is_zero():
            continue
        euler = sum((w * g * partial_derivative(f, i) for i, (w, g) in enumerate(zip(weights, R3.gens))), R3.zero())
        assert euler == d * f


def test_weighted_formula_matches_colength_on_random_germs():
    # generic weighted homogeneous germs with an isolated singularity
    rng = random.Random(4)
    checked = 0
    cases = [((1, 1, 1), 3), ((1, 1, 1), 4), ((2, 2, 3), 6), ((4, 3, 6), 12), ((3, 2, 3), 9), ((1, 1, 2), 4)]
    for weights, d in cases:
        for _ in range(3):
            f = _random_weighted(rng, R3, weights, d, terms=6)
            try:
                mu = milnor_number_hypersurface(f).mu
            except NonIsolatedError:
                continue
            assert mu == weighted_homogeneous_milnor(weights, d)
            checked += 1
    assert checked >= 10


def test_milnor_matches_linear_algebra_oracle():
    rng = random.Random(8)
    for _ in range(12):
        a = [rng.randint(2, 4) for _ in range(3)]
        f = brieskorn_polynomial(R3, a)
        for _ in range(2):
            m = tuple(rng.randint(0, 3) for _ in range(3))
            if sum(m) >= 2:
                f = f + Polynomial(R3, {m: rng.randint(-3, 3)})
        res = milnor_number_hypersurface(f)
        assert res.mu == truncated_colength(jacobian_ideal(f), max_degree=14)


def test_permutation_invariance():
    f = P("x^3 + x*y^3 + z^2 + x*y*z")
    base = milnor_number_hypersurface(f).mu
    for perm in permutations(range(3)):
        g = Polynomial(R3, {tuple(m[i] for i in perm): c for m, c in f.terms.items()})
        assert milnor_number_hypersurface(g).mu == base


def test_dispatcher():
    R4 = Ring(["z0", "z1", "z2", "z3"])
    quadric = GermDefinition(R4, [P("z0^2+z1^2+z2^2+z3^2", R4)])
    assert milnor_number(quadric).mu == 1
    icis = GermDefinition(R4, [P("z0 - z1^2", R4), P("z0^2 + z2^3 + z3^2", R4)], declared_milnor=5)
    res = milnor_number(icis)
    assert (res.mu, res.method) == (5, "declared")
    bare = GermDefinition(R4, [P("z0 - z1^2", R4), P("z0^2 + z2^3 + z3^2", R4)])
    with pytest.raises(UnsupportedGermError):
        milnor_number(bare)
