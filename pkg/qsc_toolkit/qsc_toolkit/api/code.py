# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
Code API - cyclic codes from coset selections, duals, distances and augmented pairs
"""

import numpy as np

from qsc_toolkit.exceptions import ValidationError
from qsc_toolkit.qsc_toolkit.api import as_int, make_document, make_meta, require_qn
from qsc_toolkit.qsc_toolkit.cyclic import (
    CyclicCode,
    bch_bound,
    bch_runs,
    dual_code,
    generator_matrix,
    get_context,
    is_dual_containing,
    is_subcode,
    min_distance,
    parity_check_matrix,
)
from qsc_toolkit.qsc_toolkit.qsc import SelectionVector, build_augmented_pair, certificate
from qsc_toolkit.qsc_toolkit.utils import parse_int_list


def _code_from(q, n, select):
    return CyclicCode.from_cosets(get_context(q, n), parse_int_list(select))


def _budget(budget):
    return as_int(budget, "budget")


def _describe(C):
    doc = C.as_dict()
    doc["bch_runs"] = bch_runs(C)
    if C.k >= 1:
        doc["bch_bound"] = bch_bound(C)
    return doc


def get_code(q=None, n=None, select=None, **kwargs):
    """
    Build the cyclic code generated by ∏ M_s over the selected coset representatives

    Args:
        q: Field size
        n: Length exponent
        select: Coset representatives ("1,2" or a list); empty gives the whole space

    Returns:
        dict: {meta, result, certificates}
    """
    q, n = require_qn(q, n)
    C = _code_from(q, n, select)
    dual = dual_code(C)
    dual_cert = is_dual_containing(C)

    G, H = generator_matrix(C), parity_check_matrix(C)
    orthogonal = not np.count_nonzero(G @ H.T)

    result = {
        "code": _describe(C),
        "dual": _describe(dual),
        "dual_containing": dual_cert.as_dict(),
        "self_orthogonal": is_subcode(C, dual),
    }
    certificates = [
        certificate("dimension_sum", C.k + dual.k == C.N, k=C.k, dual_k=dual.k),
        certificate("G_times_H_transpose_is_zero", orthogonal),
    ]
    return make_document(make_meta(q, n), result, certificates)


def get_dual(q=None, n=None, select=None, **kwargs):
    """
    Get the dual of the selected code, generated by the reciprocal of h

    Returns:
        dict: {meta, result, certificates}
    """
    q, n = require_qn(q, n)
    C = _code_from(q, n, select)
    dual = dual_code(C)

    result = {"code": _describe(C), "dual": _describe(dual)}
    certificates = [
        certificate("dimension_sum", C.k + dual.k == C.N, k=C.k, dual_k=dual.k),
        certificate("involution", dual_code(dual) == C),
    ]
    return make_document(make_meta(q, n), result, certificates)


def get_min_distance(q=None, n=None, select=None, budget=None, **kwargs):
    """
    Get the exact minimum distance of the selected code, or bounds when the budget runs out

    Args:
        budget: Rank tests allowed, defaults to the Distance Budget setting

    Returns:
        dict: {meta, result, certificates}
    """
    q, n = require_qn(q, n)
    C = _code_from(q, n, select)
    distance = min_distance(C, _budget(budget))

    result = {
        "code": _describe(C),
        "label": C.label(distance.exact),
        "distance": distance.as_dict(),
    }
    certificates = [
        certificate(
            "bch_le_distance",
            distance.lower_bound <= (distance.exact if distance.is_exact else distance.upper_bound),
            lower_bound=distance.lower_bound,
            exact=distance.exact,
        )
    ]
    if distance.oracle_checked:
        certificates.append(certificate("codeword_enumeration_agrees", distance.oracle_checked, codewords=q**C.k))
    return make_document(make_meta(q, n), result, certificates)


def get_augmented_pair(q=None, n=None, select=None, select_b=None, budget=None, **kwargs):
    """
    Build C_a ⊆ C_b from two selections; C_b keeps a subset of C_a's cosets

    Args:
        select: C_a coset representatives (pair rule enforced)
        select_b: C_b coset representatives, a strict subset of C_a's cosets

    Returns:
        dict: {meta, result, certificates}
    """
    q, n = require_qn(q, n)
    if select in (None, ""):
        raise ValidationError("augment needs --select for C_a")

    ctx = get_context(q, n)
    sel_a = SelectionVector.from_representatives(ctx.table, parse_int_list(select))
    sel_b = SelectionVector.from_representatives(ctx.table, parse_int_list(select_b))
    Ca, Cb = build_augmented_pair(sel_a, sel_b, ctx)

    dual_a = is_dual_containing(Ca)
    budget = _budget(budget)
    da, db = min_distance(Ca, budget), min_distance(Cb, budget)

    result = {
        "code_a": dict(_describe(Ca), label=Ca.label(da.exact), distance=da.as_dict()),
        "code_b": dict(_describe(Cb), label=Cb.label(db.exact), distance=db.as_dict()),
        "f": Ca.g.exact_div(Cb.g).to_text(),
    }
    certificates = [
        certificate("dual_containing_a", dual_a.dual_containing, **dual_a.as_dict()),
        certificate("nesting", is_subcode(Ca, Cb) and Ca.k < Cb.k, k_a=Ca.k, k_b=Cb.k),
    ]
    return make_document(make_meta(q, n), result, certificates)
