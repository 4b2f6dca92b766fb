# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
Quantum synchronizable codes from dual-containing cyclic codes of length 2^n

Builds dual-containing generators from coset selections, augmented pairs
C_a ⊆ C_b, the hat-M_S pair with extra even cosets, and derives the QSC
parameters with a certificate that f = g_a / g_b has maximal order.
"""

import itertools
import logging
from dataclasses import dataclass, field

from qsc_toolkit.exceptions import ValidationError, VerificationError
from qsc_toolkit.qsc_toolkit.cyclic import (
    CyclicCode,
    bch_bound,
    bch_runs,
    is_dual_containing,
    is_subcode,
    min_distance,
)
from qsc_toolkit.qsc_toolkit.polyring import Polynomial, order_of

__all__ = [
    "SelectionVector",
    "HatMS",
    "HatPairConfig",
    "HatPairResult",
    "SyncCertificate",
    "QscReport",
    "build_dual_containing",
    "build_augmented_pair",
    "hat_MS",
    "overline_hat_MS",
    "eligible_extra_cosets",
    "enumerate_hat_configs",
    "empty_delta1_values",
    "hat_ms_pair",
    "theorem1_pair",
    "Theorem1Config",
    "sync_certificate",
    "qsc_params",
    "certificate",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelectionVector:
    """Chosen cosets for a generator; at most one member of every ±pair, never a self-paired coset"""

    table: object = field(compare=False, repr=False)
    chosen: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "chosen", frozenset(self.chosen))
        self.validate()

    def validate(self):
        for idx in sorted(self.chosen):
            rep = self.table.coset(idx)[0]
            if self.table.is_self_paired(idx):
                raise ValidationError(f"Coset C_{rep} is self-paired and cannot be selected")
            partner = self.table.negate(idx)
            if partner in self.chosen and idx < partner:
                raise ValidationError(f"Selection holds both C_{rep} and C_{self.table.coset(partner)[0]} = C_-{rep}")

    @classmethod
    def from_representatives(cls, table, residues):
        return cls(table, frozenset(table.index_of(s) for s in residues))

    @classmethod
    def from_flags(cls, table, eps, eps_bar):
        """ε_i selects the first member of the i-th ±pair, ϵ_i the second"""
        pairs = table.pair_indices()
        if len(eps) != len(pairs) or len(eps_bar) != len(pairs):
            raise ValidationError(f"Expected {len(pairs)} flags per vector, got {len(eps)} and {len(eps_bar)}")

        chosen = set()
        for (first, second), e, e_bar in zip(pairs, eps, eps_bar):
            if e not in (0, 1) or e_bar not in (0, 1):
                raise ValidationError("Selection flags must be 0 or 1")
            if e + e_bar > 1:
                raise ValidationError(f"ε + ϵ ≤ 1 is violated at the pair C_{table.coset(first)[0]}, C_{table.coset(second)[0]}")
            if e:
                chosen.add(first)
            if e_bar:
                chosen.add(second)
        return cls(table, frozenset(chosen))

    @property
    def representatives(self):
        return sorted(self.table.coset(idx)[0] for idx in self.chosen)

    def negated(self):
        """Swap ε ↔ ϵ: every chosen coset replaced by its negation"""
        return SelectionVector(self.table, frozenset(self.table.negate(idx) for idx in self.chosen))

    def dominates(self, other):
        return other.chosen <= self.chosen

    def as_dict(self):
        return {"cosets": self.representatives}


def build_dual_containing(sel, ctx):
    """C = ⟨∏ M_s⟩ over the selected cosets; C^⊥ ⊆ C"""
    code = CyclicCode.from_cosets(ctx, sel.representatives)
    if not is_dual_containing(code):
        raise VerificationError(f"Selection {sel.representatives} produced a code that does not contain its dual")
    return code


def build_augmented_pair(sel_a, sel_b, ctx):
    """(C_a, C_b) with C_a^⊥ ⊆ C_a ⊊ C_b; sel_b drops whole cosets from sel_a"""
    if not sel_a.dominates(sel_b):
        extra = sorted(ctx.table.coset(idx)[0] for idx in sel_b.chosen - sel_a.chosen)
        raise ValidationError(f"C_b selection adds cosets {extra} that C_a does not hold")
    if sel_a.chosen == sel_b.chosen:
        raise ValidationError("C_b selection must drop at least one coset so that k_a < k_b")

    Ca = build_dual_containing(sel_a, ctx)
    Cb = CyclicCode.from_cosets(ctx, sel_b.representatives)
    if not is_subcode(Ca, Cb) or Ca.k >= Cb.k:
        raise VerificationError(f"{Ca.label()} is not strictly contained in {Cb.label()}")
    return Ca, Cb


@dataclass(frozen=True)
class HatMS:
    n: int
    q: int
    # (2k-1, e_k) for each chosen coset
    cosets: tuple
    polynomial: Polynomial
    overline: bool = False

    @property
    def roots(self):
        return frozenset(s for pair in self.cosets for s in pair)

    def as_dict(self):
        return {
            "n": self.n,
            "q": self.q,
            "cosets": [list(pair) for pair in self.cosets],
            "roots": sorted(self.roots),
            "polynomial": self.polynomial.to_text(),
            "degree": self.polynomial.degree,
            "overline": self.overline,
        }


def _require_hat_field(ctx):
    if ctx.n < 3:
        raise ValidationError(f"The hat-M_S construction needs n ≥ 3, got n={ctx.n}")
    if ctx.decomposition.z != ctx.n - 1:
        raise ValidationError(f"q = {ctx.q} has z = {ctx.decomposition.z}; this construction needs z = n - 1 = {ctx.n - 1}")


def hat_MS(ctx):
    """∏_{k=1}^{2^{n-3}} (x - α^{2k-1})(x - α^{e_k}) with e_k = (2k-1)q mod 2^n"""
    _require_hat_field(ctx)
    table, N = ctx.table, ctx.N

    pairs = []
    for k in range(1, 2 ** (ctx.n - 3) + 1):
        s = 2 * k - 1
        e = s * ctx.q % N
        if table.coset_of(s) != tuple(sorted((s, e))):
            raise VerificationError(f"Coset of {s} is {table.coset_of(s)}, expected {{{s}, {e}}}")
        pairs.append((s, e))

    indices = [table.index_of(s) for s, _ in pairs]
    if len(set(indices)) != len(indices) or any(table.negate(idx) in indices for idx in indices):
        raise VerificationError("hat-M_S cosets are not one per ±pair")

    return HatMS(ctx.n, ctx.q, tuple(pairs), ctx.product(s for s, _ in pairs))


def overline_hat_MS(ctx):
    """hat-M_S with the coset {1, q mod 2^n} removed"""
    hat = hat_MS(ctx)
    rest = hat.cosets[1:]
    return HatMS(ctx.n, ctx.q, rest, ctx.product(s for s, _ in rest), overline=True)


def _low_evens(n):
    return [2 * j for j in range(1, 2 ** (n - 3) + 1)]


def eligible_extra_cosets(ctx):
    """Even cosets outside C_0, C_{2^{n-1}}, every C_{2j} and C_{2^n-2j} for j ≤ 2^{n-3}"""
    _require_hat_field(ctx)
    N = ctx.N
    excluded = {0, N // 2}
    for s in _low_evens(ctx.n):
        excluded.update((s, N - s))

    return [rep for rep in ctx.table.representatives if rep % 2 == 0 and rep not in excluded]


def _max_delta1(n):
    return 2 ** (n - 2) - 2


@dataclass(frozen=True)
class HatPairConfig:
    n: int
    q: int
    delta1: int = 0
    extra: tuple = ()
    # 1 keeps the extra coset in g_2
    eps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "extra", tuple(self.extra))
        object.__setattr__(self, "eps", tuple(self.eps) if self.eps else (0,) * len(self.extra))
        self.validate()

    def validate(self):
        if self.delta1 < 0:
            raise ValidationError(f"δ1 must be non-negative, got {self.delta1}")
        if self.delta1 > _max_delta1(self.n):
            raise ValidationError(f"δ1 = {self.delta1} exceeds 2^(n-2) - 2 = {_max_delta1(self.n)}")
        if len(self.extra) != self.delta1:
            raise ValidationError(f"δ1 = {self.delta1} but {len(self.extra)} extra cosets were given")
        if len(set(self.extra)) != len(self.extra):
            raise ValidationError(f"Extra cosets {list(self.extra)} repeat a coset")
        if len(self.eps) != len(self.extra):
            raise ValidationError(f"Expected {len(self.extra)} ε flags, got {len(self.eps)}")
        if any(e not in (0, 1) for e in self.eps):
            raise ValidationError("ε flags must be 0 or 1")

    def check_against(self, ctx):
        if (self.n, self.q) != (ctx.n, ctx.q):
            raise ValidationError(f"Config for q={self.q}, n={self.n} used with q={ctx.q}, n={ctx.n}")
        eligible = eligible_extra_cosets(ctx)
        for s in self.extra:
            if ctx.table.coset_of(s)[0] not in eligible:
                raise ValidationError(f"C_{s} is not an eligible extra coset; eligible: {eligible}")

    def as_dict(self):
        return {"n": self.n, "q": self.q, "delta1": self.delta1, "extra": list(self.extra), "eps": list(self.eps)}


def _has_pair(ctx, extra):
    indices = {ctx.table.index_of(s) for s in extra}
    return any(ctx.table.negate(idx) in indices for idx in indices)


def enumerate_hat_configs(ctx, max_delta1=None):
    """Every (δ1, extra, ε) whose extra cosets keep g_1 dual-containing, in a fixed order"""
    eligible = eligible_extra_cosets(ctx)
    cap = _max_delta1(ctx.n) if max_delta1 is None else min(max_delta1, _max_delta1(ctx.n))

    configs = []
    for delta1 in range(cap + 1):
        for extra in itertools.combinations(eligible, delta1):
            if _has_pair(ctx, extra):
                continue
            for eps in itertools.product((0, 1), repeat=delta1):
                configs.append(HatPairConfig(ctx.n, ctx.q, delta1, extra, eps))
    return configs


def empty_delta1_values(ctx, max_delta1=None):
    """δ1 values within the bound for which every choice of extra cosets contains a ±pair"""
    eligible = eligible_extra_cosets(ctx)
    cap = _max_delta1(ctx.n) if max_delta1 is None else min(max_delta1, _max_delta1(ctx.n))
    return [
        delta1
        for delta1 in range(cap + 1)
        if all(_has_pair(ctx, extra) for extra in itertools.combinations(eligible, delta1))
    ]


@dataclass(frozen=True)
class SyncCertificate:
    ord_f: int
    maximal: bool
    # least odd root exponent of f, None without one
    witness: int = None
    roots: tuple = ()

    def as_dict(self):
        return {"ord_f": self.ord_f, "maximal": self.maximal, "witness": self.witness, "roots": list(self.roots)}


def sync_certificate(f, ctx):
    """ord(f) by search and by the odd-root criterion; the two must agree"""
    N = ctx.N
    if f.is_zero or not f.divides(Polynomial.x_n_minus_1(ctx.field, N)):
        raise ValidationError(f"f = {f.to_text()} does not divide x^{N} - 1")

    table = ctx.table
    indices = [
        idx for idx in range(len(table.cosets)) if ctx.minimal_polynomial(table.coset(idx)[0]).divides(f)
    ]
    roots = tuple(sorted(table.union(indices)))
    if len(roots) != f.degree:
        raise VerificationError(f"f = {f.to_text()} has {len(roots)} roots but degree {f.degree}")

    witness = next((i for i in roots if i % 2), None)
    ord_f = order_of(f, N)
    maximal = witness is not None
    if (ord_f == N) != maximal:
        raise VerificationError(f"ord(f) = {ord_f} disagrees with the odd-root criterion (witness {witness})")
    return SyncCertificate(ord_f, maximal, witness, roots)


@dataclass(frozen=True)
class QscReport:
    q: int
    N: int
    code_a: dict
    code_b: dict
    distance_a: object
    distance_b: object
    f: Polynomial
    sync: SyncCertificate
    c_l: int
    c_r: int

    @property
    def k_a(self):
        return self.code_a["k"]

    @property
    def k_q(self):
        return 2 * self.k_a - self.N

    @property
    def N_total(self):
        return self.N + self.c_l + self.c_r

    @property
    def bit_floor(self):
        return (self.distance_b.value - 1) // 2

    @property
    def phase_floor(self):
        return (self.distance_a.value - 1) // 2

    @property
    def label(self):
        return f"({self.c_l},{self.c_r})-[[{self.N_total},{self.k_q}]]_{self.q}"

    def as_dict(self):
        def relation(distance):
            return "=" if distance.is_exact else "≥"

        return {
            "code_a": dict(self.code_a, distance=self.distance_a.as_dict(), d=self.distance_a.value),
            "code_b": dict(self.code_b, distance=self.distance_b.as_dict(), d=self.distance_b.value),
            "f": self.f.to_text(),
            "f_roots": list(self.sync.roots),
            "ord_f": self.sync.ord_f,
            "max_tolerance": self.sync.maximal,
            "sync": self.sync.as_dict(),
            "qsc": {
                "label": self.label,
                "c_l": self.c_l,
                "c_r": self.c_r,
                "N_total": self.N_total,
                "k_q": self.k_q,
                "bit_floor": self.bit_floor,
                "phase_floor": self.phase_floor,
                # floors computed from bounds are only lower bounds on the guarantee
                "bit_floor_relation": relation(self.distance_b),
                "phase_floor_relation": relation(self.distance_a),
                "tolerance_limit": self.sync.ord_f - 1,
            },
        }


def qsc_params(Ca, Cb, c_l=0, c_r=0, distances=None, budget=None):
    """(c_l,c_r)-[[N+c_l+c_r, 2k_a-N]] parameters for the chain C_a^⊥ ⊆ C_a ⊊ C_b"""
    if not is_dual_containing(Ca):
        raise ValidationError(f"{Ca.label()} does not contain its dual")
    if not is_subcode(Ca, Cb):
        raise ValidationError(f"{Ca.label()} is not contained in {Cb.label()}")
    if Ca.k >= Cb.k:
        raise ValidationError(f"Need k_a < k_b, got {Ca.k} and {Cb.k}")
    if c_l < 0 or c_r < 0:
        raise ValidationError("c_l and c_r must be non-negative")

    f = Ca.g.exact_div(Cb.g)
    sync = sync_certificate(f, Ca.ctx)
    if c_l + c_r >= sync.ord_f:
        raise ValidationError(f"c_l + c_r = {c_l + c_r} must stay below ord(f) = {sync.ord_f}")

    if distances is None:
        distances = (min_distance(Ca, budget), min_distance(Cb, budget))

    report = QscReport(Ca.ctx.q, Ca.N, Ca.as_dict(), Cb.as_dict(), distances[0], distances[1], f, sync, c_l, c_r)
    if report.k_q < 0:
        raise VerificationError(f"k_q = {report.k_q} is negative")
    return report


@dataclass(frozen=True)
class HatPairResult:
    config: HatPairConfig
    Ca: CyclicCode
    Cb: CyclicCode
    f: Polynomial
    # [{"name", "passed", "detail"}]
    certificates: tuple
    report: QscReport = None

    @property
    def verified(self):
        return all(c["passed"] for c in self.certificates)

    def as_dict(self):
        return {
            "config": self.config.as_dict(),
            "verified": self.verified,
            "report": self.report.as_dict() if self.report else None,
            "code_a": self.Ca.as_dict(),
            "code_b": self.Cb.as_dict(),
            "f": self.f.to_text(),
        }


def certificate(name, passed, **detail):
    return {"name": name, "passed": bool(passed), "detail": detail}


def hat_ms_pair(cfg, ctx, c_l=0, c_r=0, budget=None):
    """Build g_1, g_2 from hat-M_S, the low even roots and the extra cosets, and verify every claim

    Verification failures land in the certificates; the QSC report is only
    derived when the whole chain holds.
    """
    cfg.check_against(ctx)
    n, N = ctx.n, ctx.N
    quarter = 2 ** (n - 2)

    hat = hat_MS(ctx)
    bar = overline_hat_MS(ctx)
    evens = _low_evens(n)
    kept = [s for s, e in zip(cfg.extra, cfg.eps) if e]

    Ca = CyclicCode.from_cosets(ctx, [s for s, _ in hat.cosets] + evens + list(cfg.extra))
    Cb = CyclicCode.from_cosets(ctx, [s for s, _ in bar.cosets] + evens + kept)

    certificates = []
    dual = is_dual_containing(Ca)
    certificates.append(certificate("dual_containing", dual, violations=list(dual.violations)))

    nested = is_subcode(Ca, Cb)
    certificates.append(certificate("nesting", nested and Ca.k < Cb.k, k_a=Ca.k, k_b=Cb.k))

    expected_degree = quarter + quarter // 2 + cfg.delta1
    certificates.append(
        certificate("degree_g1", Ca.g.degree == expected_degree, degree=Ca.g.degree, expected=expected_degree)
    )

    run_a = set(range(1, quarter + 1))
    run_b = set(range(2, quarter + 1))
    certificates.append(certificate("roots_g1_run", run_a <= Ca.roots, missing=sorted(run_a - Ca.roots)))
    certificates.append(certificate("roots_g2_run", run_b <= Cb.roots, missing=sorted(run_b - Cb.roots)))

    bch_a, bch_b = bch_bound(Ca), bch_bound(Cb)
    certificates.append(certificate("bch_d1", bch_a >= quarter + 1, bound=bch_a, runs=bch_runs(Ca), claim=quarter + 1))
    certificates.append(certificate("bch_d2", bch_b >= quarter, bound=bch_b, runs=bch_runs(Cb), claim=quarter))

    f, remainder = divmod(Ca.g, Cb.g) if nested else (Polynomial(ctx.field), Ca.g)
    certificates.append(certificate("f_exact", remainder.is_zero, remainder=remainder.to_text()))

    sync = None
    if remainder.is_zero:
        sync = sync_certificate(f, ctx)
        certificates.append(certificate("ord_f_maximal", sync.ord_f == N, **sync.as_dict()))

    k_q = 2 * Ca.k - N
    certificates.append(
        certificate("k_q", k_q == quarter - 2 * cfg.delta1, k_q=k_q, expected=quarter - 2 * cfg.delta1)
    )

    report = None
    if all(c["passed"] for c in certificates):
        report = qsc_params(Ca, Cb, c_l, c_r, budget=budget)
    else:
        failed = [c["name"] for c in certificates if not c["passed"]]
        log.warning("hat-M_S pair for %s failed: %s", cfg.as_dict(), ", ".join(failed))

    return HatPairResult(cfg, Ca, Cb, f, tuple(certificates), report)


theorem1_pair = hat_ms_pair
Theorem1Config = HatPairConfig
