# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

import random

import numpy as np
import pytest

from qsc_toolkit.exceptions import ValidationError
from qsc_toolkit.qsc_toolkit.cyclic import (
    CyclicCode,
    bch_bound,
    bch_runs,
    dual_code,
    generator_matrix,
    get_context,
    is_dual_containing,
    is_subcode,
    longest_root_run,
    min_distance,
    parity_check_matrix,
)
from qsc_toolkit.qsc_toolkit.gf import multiplicative_order
from qsc_toolkit.qsc_toolkit.polyring import Polynomial, reciprocal


def random_codes(ctx, count, seed):
    rng = random.Random(seed)
    reps = ctx.table.representatives
    for _ in range(count):
        chosen = [s for s in reps if rng.random() < 0.5]
        yield CyclicCode.from_cosets(ctx, chosen)


def test_factorization_of_x8_minus_1_over_gf5():
    ctx = get_context(5, 3)
    factors = ctx.factors()
    assert [poly.degree for _, poly in factors] == [1, 2, 1, 2, 1, 1]
    assert ctx.minimal_polynomial(0).to_ints() == [4, 1]
    assert ctx.minimal_polynomial(4).to_ints() == [1, 1]


@pytest.mark.parametrize("q, n", [(5, 3), (5, 4), (9, 4), (41, 4), (17, 5), (13, 5)])
def test_minimal_polynomials_multiply_to_x_n_minus_1(q, n):
    ctx = get_context(q, n)
    product = Polynomial.constant(ctx.field, 1)
    for members, poly in ctx.factors():
        assert poly.degree == len(members)
        assert poly.is_monic
        product = product * poly
    assert product == Polynomial.x_n_minus_1(ctx.field, ctx.N)


GRID_Q = (5, 9, 13, 17, 25, 41, 49, 73, 97)
GRID = [(q, n) for q in GRID_Q for n in range(3, 11) if multiplicative_order(q, 2**n) <= 16]


@pytest.mark.slow
@pytest.mark.parametrize("q, n", GRID)
def test_factorization_over_the_grid(q, n):
    ctx = get_context(q, n)
    factors = ctx.factors()
    assert sum(len(members) for members, _ in factors) == ctx.N

    product = Polynomial.constant(ctx.field, 1)
    for members, poly in factors:
        assert poly.spec == ctx.field
        assert poly.degree == len(members)
        product = product * poly
    assert product == Polynomial.x_n_minus_1(ctx.field, ctx.N)


@pytest.mark.parametrize("q, n", [(5, 4), (9, 4), (41, 4), (17, 5)])
def test_reciprocal_of_minimal_polynomial_is_the_negated_coset(q, n):
    ctx = get_context(q, n)
    for s in ctx.table.representatives:
        assert reciprocal(ctx.minimal_polynomial(s)) == ctx.minimal_polynomial(-s)


def test_minimal_polynomial_vanishes_on_its_coset():
    ctx = get_context(41, 4)
    M1 = ctx.minimal_polynomial(1)
    assert M1.degree == 2
    for i in range(ctx.N):
        vanishes = M1(ctx.alpha**i, embed=ctx.tower.embed).is_zero
        assert vanishes == (i in (1, 9))


def test_q5_n3_code_with_roots_1_2_5_and_dual():
    ctx = get_context(5, 3)
    C = CyclicCode.from_residues(ctx, [1, 5, 2])
    dual = dual_code(C)

    assert C.k == 5
    assert dual.k == 3
    assert dual.roots == frozenset({0, 1, 2, 4, 5})
    assert dual_code(dual) == C
    assert C.roots_by_evaluation() == C.roots
    assert is_dual_containing(C)
    assert is_subcode(dual, C)
    assert C.label(3) == "[8,5,3]_5"


def test_q5_n3_code_with_both_pair_members_is_not_dual_containing():
    ctx = get_context(5, 3)
    C = CyclicCode.from_residues(ctx, [1, 5, 3, 6, 7])
    certificate = is_dual_containing(C)

    assert C.k == 3
    assert not certificate
    assert certificate.violations[0]["reason"] == "both members of a ±pair"
    assert not is_dual_containing(dual_code(C))


def test_self_paired_coset_breaks_dual_containment():
    ctx = get_context(5, 3)
    certificate = is_dual_containing(CyclicCode.from_cosets(ctx, [0, 1]))
    assert not certificate.dual_containing
    assert {"coset": 0, "negated": 0, "reason": "self-paired"} in certificate.violations


def test_from_residues_requires_whole_cosets():
    ctx = get_context(5, 3)
    with pytest.raises(ValidationError):
        CyclicCode.from_residues(ctx, [1, 2])


def test_generator_must_divide_x_n_minus_1():
    ctx = get_context(5, 3)
    with pytest.raises(ValidationError):
        CyclicCode(ctx, Polynomial.from_ints(ctx.field, [1, 1, 1]))


@pytest.mark.parametrize("q, n", [(5, 3), (5, 4), (9, 4), (41, 4)])
def test_dual_containing_tests_agree_on_random_codes(q, n):
    ctx = get_context(q, n)
    for C in random_codes(ctx, 200, seed=q * 10 + n):
        certificate = is_dual_containing(C)
        assert certificate.by_divisibility == certificate.by_cosets
        assert dual_code(dual_code(C)) == C
        assert C.k + dual_code(C).k == C.N


@pytest.mark.slow
def test_dual_containing_tests_agree_for_q17_n5():
    ctx = get_context(17, 5)
    for C in random_codes(ctx, 200, seed=175):
        certificate = is_dual_containing(C)
        assert certificate.by_divisibility == certificate.by_cosets


def test_longest_root_run():
    assert longest_root_run({6, 7, 0, 1}, 8, wrap=True) == 4
    assert longest_root_run({6, 7, 0, 1}, 8, wrap=False) == 2
    assert longest_root_run(set(range(8)), 8) == 8
    assert longest_root_run(set(), 8) == 0


def test_bch_bound_for_q17_n5():
    ctx = get_context(17, 5)
    C = CyclicCode.from_residues(ctx, [1, 3, 5, 7, 17, 19, 21, 23, 2, 4, 6, 8])
    assert bch_bound(C) == 9
    assert bch_runs(C) == {"wraparound": 8, "linear": 8}


def test_bch_wraparound_setting():
    ctx = get_context(5, 3)
    # roots {0, 3, 4, 6, 7}: linear run 3..4, wrapped run 6..0
    C = CyclicCode.from_residues(ctx, [0, 3, 7, 4, 6])
    assert bch_bound(C, wrap=True) == 4
    assert bch_bound(C, wrap=False) == 3


def test_bch_bound_needs_a_nonzero_code():
    ctx = get_context(5, 3)
    with pytest.raises(ValidationError):
        bch_bound(CyclicCode(ctx, Polynomial.x_n_minus_1(ctx.field, 8)))


def test_generator_and_parity_check_matrices():
    ctx = get_context(5, 4)
    C = CyclicCode.from_cosets(ctx, [1, 4])
    G, H = generator_matrix(C), parity_check_matrix(C)
    assert G.shape == (11, 16)
    assert H.shape == (5, 16)
    assert not np.count_nonzero(G @ H.T)
    assert np.linalg.matrix_rank(G) == 11


def test_min_distance_of_q5_n3_code():
    ctx = get_context(5, 3)
    C = CyclicCode.from_residues(ctx, [1, 5, 2])
    result = min_distance(C)

    assert result.exact == 3
    assert result.lower_bound == 3
    assert result.oracle_checked
    assert result.method == "support-enumeration"
    witness = ctx.field.galois_field(list(result.witness))
    assert np.count_nonzero(witness) == 3
    assert not np.count_nonzero(parity_check_matrix(C) @ witness)


def test_min_distance_of_q5_n3_code_and_dual_with_paired_roots():
    ctx = get_context(5, 3)
    C = CyclicCode.from_residues(ctx, [1, 5, 3, 6, 7])
    assert min_distance(C).exact == 4
    assert min_distance(dual_code(C)).exact == 2


def test_min_distance_of_repetition_code():
    ctx = get_context(5, 3)
    C = CyclicCode.from_cosets(ctx, [1, 2, 3, 4, 6])
    assert C.k == 1
    assert min_distance(C).exact == 8


def test_random_codewords_respect_the_distance():
    ctx = get_context(5, 3)
    C = CyclicCode.from_residues(ctx, [1, 5, 2])
    G = generator_matrix(C)
    GF = ctx.field.galois_field
    rng = random.Random(3)
    for _ in range(100):
        message = GF([rng.randrange(5) for _ in range(C.k)])
        if np.count_nonzero(message):
            assert np.count_nonzero(message @ G) >= 3


def test_exhausted_budget_reports_bounds():
    ctx = get_context(5, 4)
    C = CyclicCode.from_cosets(ctx, [1, 4])
    result = min_distance(C, budget=0)

    assert not result.is_exact
    assert result.method == "bounds"
    assert result.lower_bound == 3
    assert result.value == 3
    assert result.upper_bound >= 3
    witness = ctx.field.galois_field(list(result.witness))
    assert np.count_nonzero(witness) == result.upper_bound
    assert not np.count_nonzero(parity_check_matrix(C) @ witness)


def test_exhausted_budget_falls_back_to_codeword_enumeration():
    ctx = get_context(5, 3)
    C = CyclicCode.from_residues(ctx, [1, 5, 2])
    result = min_distance(C, budget=0)
    assert result.exact == 3
    assert result.method == "codeword-enumeration"


def test_degenerate_codes_have_no_distance():
    ctx = get_context(5, 3)
    with pytest.raises(ValidationError):
        min_distance(CyclicCode(ctx, Polynomial.constant(ctx.field, 1)))
    with pytest.raises(ValidationError):
        min_distance(CyclicCode(ctx, Polynomial.x_n_minus_1(ctx.field, 8)))


@pytest.mark.slow
def test_min_distance_of_augmented_q41_code():
    ctx = get_context(41, 4)
    C = CyclicCode.from_residues(ctx, [1, 9, 3, 11, 2, 4, 6])
    assert C.k == 9
    assert bch_bound(C) == 5
    assert min_distance(C).exact == 6
