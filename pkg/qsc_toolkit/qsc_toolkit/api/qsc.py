# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
QSC API - hat-M_S pairs and QSC parameter reports
"""

from qsc_toolkit.qsc_toolkit.api import as_int, make_document, make_meta, require_qn
from qsc_toolkit.qsc_toolkit.cyclic import get_context, is_dual_containing, is_subcode
from qsc_toolkit.qsc_toolkit.qsc import (
    HatPairConfig,
    SelectionVector,
    build_augmented_pair,
    certificate,
    eligible_extra_cosets,
    hat_MS,
    hat_ms_pair,
    overline_hat_MS,
    qsc_params,
)
from qsc_toolkit.qsc_toolkit.utils import parse_int_list


def get_qsc_report(
    q=None, n=None, delta1=None, extra=None, eps=None, cl=0, cr=0, select=None, select_b=None, budget=None, **kwargs
):
    """
    Get the QSC parameter report for a hat-M_S configuration or an explicit augmented pair

    Args:
        q: Field size with z = n - 1 for hat-M_S configurations
        n: Length exponent
        delta1: Number of extra cosets, defaults to the number given in extra
        extra: Extra even coset representatives
        eps: One 0/1 flag per extra coset; 1 keeps it in g_2
        cl, cr: Misalignment padding, c_l + c_r < ord(f)
        select, select_b: C_a and C_b coset selections; when given they replace the hat-M_S pipeline

    Returns:
        dict: {meta, result, certificates}
    """
    q, n = require_qn(q, n)
    ctx = get_context(q, n)
    cl, cr = as_int(cl, "cl", 0), as_int(cr, "cr", 0)
    budget = as_int(budget, "budget")

    if select not in (None, ""):
        sel_a = SelectionVector.from_representatives(ctx.table, parse_int_list(select))
        sel_b = SelectionVector.from_representatives(ctx.table, parse_int_list(select_b))
        Ca, Cb = build_augmented_pair(sel_a, sel_b, ctx)
        report = qsc_params(Ca, Cb, cl, cr, budget=budget)
        result = {"construction": "augmented", "report": report.as_dict()}
        dual_a = is_dual_containing(Ca)
        chain = dual_a.dual_containing and is_subcode(Ca, Cb) and Ca.k < Cb.k
        certificates = [certificate("chain", chain, dual_containing_a=dual_a.dual_containing, k_a=Ca.k, k_b=Cb.k)]
        return make_document(make_meta(q, n), result, certificates)

    extra = parse_int_list(extra)
    delta1 = as_int(delta1, "delta1", len(extra))
    cfg = HatPairConfig(n, q, delta1, extra, parse_int_list(eps))
    pair = hat_ms_pair(cfg, ctx, cl, cr, budget=budget)

    result = dict(
        pair.as_dict(),
        construction="hat_ms",
        hat_ms=hat_MS(ctx).as_dict(),
        overline_hat_ms=overline_hat_MS(ctx).as_dict(),
        eligible_extra=eligible_extra_cosets(ctx),
    )
    return make_document(make_meta(q, n), result, pair.certificates)
