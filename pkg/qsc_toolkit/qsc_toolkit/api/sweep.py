# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
Sweep API - run the hat-M_S pipeline over every valid configuration of a (q, n) grid
"""

import logging
from concurrent.futures import ProcessPoolExecutor

from qsc_toolkit.exceptions import QscError, ValidationError
from qsc_toolkit.qsc_toolkit.api import as_int, make_document, make_meta
from qsc_toolkit.qsc_toolkit.cyclic import get_context
from qsc_toolkit.qsc_toolkit.qsc import (
    HatPairConfig,
    certificate,
    empty_delta1_values,
    enumerate_hat_configs,
    hat_ms_pair,
)
from qsc_toolkit.qsc_toolkit.settings import get_settings

log = logging.getLogger(__name__)

DEFAULT_MAX_DELTA1 = 2


def parse_grid(grid):
    """Parse "41:4,17:5" or [[41, 4], ...] into [(q, n), ...]"""
    if grid in (None, ""):
        return []
    if isinstance(grid, str):
        points = []
        for part in grid.split(","):
            part = part.strip()
            if not part:
                continue
            if ":" not in part:
                raise ValidationError(f"Grid entry {part!r} must look like q:n")
            q, n = part.split(":", 1)
            points.append((as_int(q, "q"), as_int(n, "n")))
        return points
    return [(as_int(q, "q"), as_int(n, "n")) for q, n in grid]


def run_config(q, n, config, budget, cl=0, cr=0):
    """One sweep row; top level so worker processes can run it"""
    ctx = get_context(q, n)
    cfg = HatPairConfig(**config)
    pair = hat_ms_pair(cfg, ctx, cl, cr, budget=budget)

    row = {
        "q": q,
        "n": n,
        "delta1": cfg.delta1,
        "extra": list(cfg.extra),
        "eps": list(cfg.eps),
        "k_a": pair.Ca.k,
        "k_b": pair.Cb.k,
        "verified": pair.verified,
        "failed_certificates": [c["name"] for c in pair.certificates if not c["passed"]],
    }
    if pair.report is not None:
        report = pair.report
        row.update(
            d_a=report.distance_a.value,
            d_a_exact=report.distance_a.is_exact,
            d_b=report.distance_b.value,
            d_b_exact=report.distance_b.is_exact,
            f=report.f.to_text(),
            ord_f=report.sync.ord_f,
            max_tolerance=report.sync.maximal,
            k_q=report.k_q,
            bit_floor=report.bit_floor,
            phase_floor=report.phase_floor,
            qsc=report.label,
        )
    return row


def _run_star(args):
    return run_config(*args)


def sweep(grid=None, max_delta1=None, workers=None, budget=None, cl=0, cr=0, **kwargs):
    """
    Run the hat-M_S pipeline for every valid (δ1, extra, ε) at each grid point

    Args:
        grid: "q:n,..." or a list of [q, n] pairs
        max_delta1: Largest δ1 to enumerate (capped at 2^(n-2) - 2)
        workers: Process count, defaults to the Sweep Workers setting
        budget: Rank tests per code, defaults to the Sweep Distance Budget setting

    Returns:
        dict: {meta, result, certificates}; result.reports keeps enumeration order
    """
    settings = get_settings()
    max_delta1 = as_int(max_delta1, "max_delta1", DEFAULT_MAX_DELTA1)
    workers = as_int(workers, "workers", settings.workers)
    budget = as_int(budget, "budget", settings.sweep_distance_budget)
    cl, cr = as_int(cl, "cl", 0), as_int(cr, "cr", 0)
    if workers < 1:
        raise ValidationError("workers must be at least 1")

    points = parse_grid(grid)
    jobs, invalid, empty = [], [], {}
    for q, n in points:
        try:
            ctx = get_context(q, n)
            configs = enumerate_hat_configs(ctx, max_delta1)
            empty[f"{q}:{n}"] = empty_delta1_values(ctx, max_delta1)
        except QscError as e:
            invalid.append({"q": q, "n": n, "error": str(e)})
            continue
        jobs.extend((q, n, cfg.as_dict(), budget, cl, cr) for cfg in configs)

    log.info("sweep: %s configurations over %s grid points with %s workers", len(jobs), len(points), workers)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            reports = list(executor.map(_run_star, jobs))
    else:
        reports = [_run_star(job) for job in jobs]

    summary = {
        "grid_points": len(points),
        "configurations": len(reports),
        "verified": sum(1 for r in reports if r["verified"]),
        "maximal_tolerance": sum(1 for r in reports if r.get("max_tolerance")),
        "empty_delta1": empty,
        "invalid": invalid,
    }
    result = {"reports": reports, "summary": summary}
    certificates = [
        certificate(
            "all_configurations_verified",
            summary["verified"] == len(reports),
            configurations=len(reports),
            verified=summary["verified"],
        )
    ]
    meta = make_meta(grid=[f"{q}:{n}" for q, n in points], max_delta1=max_delta1)
    return make_document(meta, result, certificates)
