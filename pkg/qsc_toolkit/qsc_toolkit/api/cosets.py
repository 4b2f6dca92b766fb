# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
Cosets API - coset tables and the factorization of x^N - 1
"""

from qsc_toolkit.qsc_toolkit.api import make_document, make_meta, require_qn
from qsc_toolkit.qsc_toolkit.cyclic import get_context
from qsc_toolkit.qsc_toolkit.cyclotomy import coset_size, cosets_bruteforce, cosets_closed_form, z_decompose
from qsc_toolkit.qsc_toolkit.polyring import Polynomial, reciprocal
from qsc_toolkit.qsc_toolkit.qsc import certificate


def get_cosets(q=None, n=None, **kwargs):
    """
    Get the q-cyclotomic cosets modulo 2^n

    Args:
        q: Field size, q ≡ 1 (mod 4)
        n: Length exponent, N = 2^n

    Returns:
        dict: {meta, result, certificates} with one row per coset
    """
    q, n = require_qn(q, n)
    decomposition = z_decompose(q)
    table = cosets_closed_form(q, n)
    brute = cosets_bruteforce(q, n)
    matches_orbits = table == brute and table.pairing == brute.pairing

    size_mismatches = []
    for idx in range(len(table.cosets)):
        r = table.level(idx)
        expected = coset_size(n, decomposition.z, r) if r >= 2 else 1
        if table.size(idx) != expected:
            size_mismatches.append({"representative": table.coset(idx)[0], "size": table.size(idx), "expected": expected})

    rows = table.as_rows()
    odd = [
        {"label": row["label"], "seed": table.seeds[row["index"]], "orbit": row["orbit"]}
        for row in rows
        if row["representative"] % 2
    ]
    result = {
        "N": table.N,
        "count": len(rows),
        "cosets": rows,
        "odd_cosets": odd,
    }
    certificates = [
        certificate("closed_form_matches_orbits", matches_orbits, closed_form=n >= 3),
        certificate("coset_sizes", not size_mismatches, mismatches=size_mismatches),
    ]
    return make_document(make_meta(q, n), result, certificates)


def get_factorization(q=None, n=None, **kwargs):
    """
    Factor x^N - 1 over GF(q) into minimal polynomials, one per coset

    Returns:
        dict: {meta, result, certificates}; result.factors lists M_s per coset
    """
    q, n = require_qn(q, n)
    ctx = get_context(q, n)
    table, tower = ctx.table, ctx.tower
    factors = ctx.factors()

    product = Polynomial.constant(ctx.field, 1)
    for _, poly in factors:
        product = product * poly
    x_n_minus_1 = Polynomial.x_n_minus_1(ctx.field, ctx.N)

    rows = []
    reciprocal_failures = []
    for idx, (members, poly) in enumerate(factors):
        partner = table.negate(idx)
        if reciprocal(poly) != factors[partner][1]:
            reciprocal_failures.append(members[0])
        rows.append(
            {
                "representative": members[0],
                "coset": list(members),
                "degree": poly.degree,
                "polynomial": poly.to_text(),
                "reciprocal_representative": table.coset(partner)[0],
            }
        )

    result = {
        "N": ctx.N,
        "field": tower.base.label,
        "top_field": tower.top.label,
        "t": tower.t,
        "top_modulus": list(tower.top.modulus) or None,
        "base_modulus": list(tower.base.modulus) or None,
        "alpha": ctx.alpha.to_text(),
        "factors": rows,
    }
    certificates = [
        certificate("product_is_x^N-1", product == x_n_minus_1, factors=len(rows), product=product.to_text()),
        certificate("reciprocal_pairs", not reciprocal_failures, failures=reciprocal_failures),
    ]
    return make_document(make_meta(q, n), result, certificates)
