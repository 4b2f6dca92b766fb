# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

import random

import galois
import pytest

from qsc_toolkit.exceptions import ValidationError
from qsc_toolkit.qsc_toolkit.gf import (
    FieldSpec,
    build_tower,
    find_irreducible,
    multiplicative_order,
    primitive_nth_root,
    project_to_base,
    split_prime_power,
)


def test_find_irreducible_is_first_in_lexicographic_order():
    # x^2 + 1 splits over GF(5) (2^2 = -1); x^2 + 2 does not
    assert find_irreducible(5, 2) == galois.Poly([1, 0, 2], field=galois.GF(5))
    assert find_irreducible(3, 2) == galois.Poly([1, 0, 1], field=galois.GF(3))


def test_find_irreducible_seed_moves_the_start():
    poly = find_irreducible(5, 2, seed=3)
    assert poly.degree == 2 and poly.is_irreducible()
    assert poly == galois.Poly([1, 0, 3], field=galois.GF(5))


@pytest.mark.parametrize("q, expected", [(5, (5, 1)), (9, (3, 2)), (25, (5, 2)), (41, (41, 1)), (49, (7, 2))])
def test_split_prime_power(q, expected):
    assert split_prime_power(q) == expected


@pytest.mark.parametrize("q", [6, 8, 12, 1])
def test_split_prime_power_rejects(q):
    with pytest.raises(ValidationError):
        split_prime_power(q)


def test_multiplicative_order():
    assert multiplicative_order(5, 8) == 2
    assert multiplicative_order(41, 16) == 2
    assert multiplicative_order(17, 32) == 2
    assert multiplicative_order(5, 64) == 16
    assert multiplicative_order(17, 16) == 1


def test_reducible_modulus_is_rejected():
    with pytest.raises(ValidationError):
        FieldSpec(3, 2, (0, 0, 1))
    with pytest.raises(ValidationError):
        FieldSpec(4)


@pytest.mark.parametrize("p, a", [(3, 2), (5, 2), (7, 2), (41, 1)])
def test_field_axioms_on_random_triples(p, a):
    spec = FieldSpec.from_modulus(find_irreducible(p, a))
    rng = random.Random(p * 100 + a)
    for _ in range(50):
        x, y, z = (spec.random_element(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x - x == spec.zero
        if x:
            assert x * x.inverse() == spec.one
            assert x ** (spec.order - 1) == spec.one


def test_small_field_examples():
    assert FieldSpec(5).element(2).inverse() == FieldSpec(5).element(3)

    # GF(3^2) with y^2 + 1: y * y = -1 = 2, y is stored as 0 + 1*3
    spec = FieldSpec(3, 2, (1, 0, 1))
    y = spec.element((0, 1))
    assert int(y) == 3
    assert y * y == spec.element(2)
    assert y**4 == spec.one


def test_integer_representation():
    spec = FieldSpec.from_modulus(find_irreducible(5, 2))
    assert spec.element(7).coeffs == (2, 1)
    assert int(spec.element((2, 1))) == 7
    with pytest.raises(ValidationError):
        spec.element(25)


def test_zero_has_no_inverse():
    spec = FieldSpec(41)
    with pytest.raises(ValidationError):
        spec.zero.inverse()


def test_tower_for_prime_base():
    tower = build_tower(41, 16)
    assert tower.t == 2
    assert tower.top.order == 41**2

    alpha = primitive_nth_root(tower, 16)
    assert alpha**16 == tower.top.one
    assert alpha**8 != tower.top.one
    assert not tower.is_in_subfield(alpha)
    with pytest.raises(ValidationError):
        project_to_base(alpha, tower)


def test_tower_for_extension_base():
    tower = build_tower(9, 16)
    assert tower.base.label == "GF(3^2)"
    assert tower.t == 2
    assert tower.top.order == 3**4

    for c in tower.base.elements():
        image = tower.embed(c)
        assert tower.is_in_subfield(image)
        assert tower.project_to_base(image) == c


def test_tower_without_extension():
    tower = build_tower(17, 16)
    assert tower.t == 1
    assert tower.top == tower.base
    assert primitive_nth_root(tower, 16) ** 8 != tower.top.one


def test_primitive_root_needs_divisibility():
    tower = build_tower(41, 16)
    # 32 does not divide 41^2 - 1 = 1680
    with pytest.raises(ValidationError):
        primitive_nth_root(tower, 32)


def test_max_degree_limits_the_tower():
    with pytest.raises(ValidationError):
        build_tower(5, 64, max_degree=4)


@pytest.mark.parametrize("q, N", [(41, 16), (9, 16), (49, 32), (25, 16)])
def test_subfield_membership_matches_projection(q, N):
    tower = build_tower(q, N)
    rng = random.Random(q * N)
    fixed = 0
    for _ in range(1000):
        x = tower.top.random_element(rng)
        in_subfield = x**q == x
        assert tower.is_in_subfield(x) == in_subfield
        if in_subfield:
            fixed += 1
            assert tower.embed(project_to_base(x, tower)) == x
        else:
            with pytest.raises(ValidationError):
                project_to_base(x, tower)
    assert fixed > 0


@pytest.mark.parametrize("q, N", [(5, 8), (9, 16), (49, 32), (25, 32), (97, 64)])
def test_embedding_is_a_homomorphism(q, N):
    tower = build_tower(q, N)
    tower.spot_check(1000, random.Random(q + N))

    rng = random.Random(N)
    for _ in range(1000):
        x, y = tower.base.random_element(rng), tower.base.random_element(rng)
        assert tower.embed(x * y) == tower.embed(x) * tower.embed(y)
        assert tower.embed(x - y) == tower.embed(x) - tower.embed(y)
