# Copyright (c) 2026, Ahmad and contributors
# QSC Toolkit API Module

from qsc_toolkit.exceptions import QscError, ValidationError
from qsc_toolkit.qsc_toolkit.cyclotomy import z_decompose


def as_int(value, name, default=None):
    """Integer parameter, or `default` when it is missing"""
    if value is None or value == "":
        return default
    if isinstance(value, bool):
        raise ValidationError(f"{name} must be an integer, got {value!r}")
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be an integer, got {value!r}")


def make_meta(q=None, n=None, **extra):
    """{q, n, z, c} for a document; z and c stay None when q has no valid decomposition"""
    meta = {"q": q, "n": n, "z": None, "c": None}
    try:
        meta.update(q=as_int(q, "q"), n=as_int(n, "n"))
    except ValidationError:
        pass
    if isinstance(meta["q"], int):
        try:
            decomposition = z_decompose(meta["q"])
            meta.update(z=decomposition.z, c=decomposition.c)
        except QscError:
            pass
    meta.update(extra)
    return meta


def make_document(meta, result, certificates=()):
    return {"meta": meta, "result": result, "certificates": list(certificates)}


def require_qn(q, n, min_n=1):
    """Cast q and n, rejecting missing values and n below `min_n`"""
    if q in (None, "") or n in (None, ""):
        raise ValidationError("Both --q and --n are required")
    q, n = as_int(q, "q"), as_int(n, "n")
    if n < min_n:
        raise ValidationError(f"n must be at least {min_n}, got {n}")
    return q, n
