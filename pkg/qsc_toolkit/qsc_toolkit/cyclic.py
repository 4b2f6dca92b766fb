# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
Cyclic codes of length 2^n over GF(q)

Generators are products of minimal polynomials M_s, each computed as
∏_{i∈C_s}(x - α^i) in the top field of the tower and projected to GF(q).
"""

import functools
import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from qsc_toolkit.exceptions import ValidationError, VerificationError
from qsc_toolkit.qsc_toolkit.cyclotomy import cross_check, z_decompose
from qsc_toolkit.qsc_toolkit.gf import build_tower, primitive_nth_root
from qsc_toolkit.qsc_toolkit.polyring import Polynomial, reciprocal
from qsc_toolkit.qsc_toolkit.settings import get_settings

__all__ = [
    "CodeContext",
    "CyclicCode",
    "DistanceResult",
    "DualContainingCertificate",
    "get_context",
    "minimal_polynomial",
    "factorize_xN_minus_1",
    "dual_code",
    "is_dual_containing",
    "is_subcode",
    "longest_root_run",
    "bch_bound",
    "bch_runs",
    "generator_matrix",
    "parity_check_matrix",
    "min_distance",
]

log = logging.getLogger(__name__)


def minimal_polynomial(table, tower, s, alpha=None):
    """M_s(x) over GF(q), expanded in the top field and projected coefficientwise"""
    alpha = alpha if alpha is not None else primitive_nth_root(tower, table.N)
    members = table.coset_of(s)

    product = Polynomial.from_roots(tower.top, [alpha**i for i in members])
    coeffs = []
    for value in product.to_ints():
        c = tower.top.element(value)
        if not tower.is_in_subfield(c):
            raise VerificationError(f"Coefficient {c!r} of M_{s} lies outside {tower.base.label}")
        try:
            coeffs.append(tower.project_to_base(c))
        except ValidationError as e:
            raise VerificationError(f"Cannot project M_{s}: {e}")

    poly = Polynomial.from_ints(tower.base, [c.value for c in coeffs])
    if poly.degree != len(members):
        raise VerificationError(f"M_{s} has degree {poly.degree}, expected |C_{s}| = {len(members)}")
    return poly


def factorize_xN_minus_1(table, tower, alpha=None):
    """[(coset, M_s)] for every coset, checked to multiply back to x^N - 1"""
    alpha = alpha if alpha is not None else primitive_nth_root(tower, table.N)
    factors = [(members, minimal_polynomial(table, tower, members[0], alpha)) for members in table.cosets]

    product = Polynomial.constant(tower.base, 1)
    for _, poly in factors:
        product = product * poly
    if product != Polynomial.x_n_minus_1(tower.base, table.N):
        raise VerificationError(f"Minimal polynomials do not multiply to x^{table.N} - 1 over {tower.base.label}")
    return factors


@dataclass(eq=False)
class CodeContext:
    """Everything fixed by (q, n): cosets, tower, α and the minimal polynomials"""

    decomposition: object
    table: object
    tower: object
    alpha: object
    _minimal: dict = field(default_factory=dict, repr=False)

    @property
    def q(self):
        return self.table.q

    @property
    def N(self):
        return self.table.N

    @property
    def n(self):
        return self.table.n

    @property
    def field(self):
        return self.tower.base

    def meta(self):
        return {"q": self.q, "n": self.n, "z": self.decomposition.z, "c": self.decomposition.c}

    def minimal_polynomial(self, s):
        idx = self.table.index_of(s)
        if idx not in self._minimal:
            self._minimal[idx] = minimal_polynomial(self.table, self.tower, self.table.coset(idx)[0], self.alpha)
        return self._minimal[idx]

    def factors(self):
        """Checked factorization of x^N - 1, filling the minimal-polynomial cache"""
        factors = factorize_xN_minus_1(self.table, self.tower, self.alpha)
        for idx, (_, poly) in enumerate(factors):
            self._minimal[idx] = poly
        return factors

    def product(self, residues):
        """∏ M_s over the cosets of the given representatives"""
        result = Polynomial.constant(self.field, 1)
        for idx in sorted({self.table.index_of(s) for s in residues}):
            result = result * self.minimal_polynomial(self.table.coset(idx)[0])
        return result


def get_context(q, n):
    """Cached CodeContext for (q, n) under the current settings"""
    settings = get_settings()
    return _load_context(q, n, settings.irreducible_seed, settings.max_top_degree, settings.embed_spot_checks)


@functools.lru_cache(maxsize=16)
def _load_context(q, n, seed, max_degree, spot_checks):
    if n < 1:
        raise ValidationError(f"n must be at least 1, got {n}")

    decomposition = z_decompose(q)
    table = cross_check(q, n)
    tower = build_tower(q, 2**n, seed=seed, max_degree=max_degree, spot_checks=spot_checks)
    alpha = primitive_nth_root(tower, 2**n)
    log.debug("context q=%s n=%s: %s cosets, α=%r", q, n, len(table.cosets), alpha)
    return CodeContext(decomposition, table, tower, alpha)


@dataclass(frozen=True)
class CyclicCode:
    ctx: CodeContext = field(compare=False, repr=False)
    g: Polynomial

    def __post_init__(self):
        if self.g.is_zero:
            raise ValidationError("The generator of a cyclic code cannot be zero")
        object.__setattr__(self, "g", self.g.monic())
        if not self.g.divides(Polynomial.x_n_minus_1(self.field, self.N)):
            raise ValidationError(f"{self.g.to_text()} does not divide x^{self.N} - 1")

    @classmethod
    def from_cosets(cls, ctx, representatives):
        """Code whose generator is the product of M_s over the given coset representatives"""
        return cls(ctx, ctx.product(representatives))

    @classmethod
    def from_residues(cls, ctx, residues):
        """Code with exactly the given root exponents; they must form a union of cosets"""
        indices = ctx.table.indices_covering(residues)
        if indices is None:
            raise ValidationError(f"Root set {sorted(set(residues))} is not a union of {ctx.q}-cyclotomic cosets mod {ctx.N}")
        return cls.from_cosets(ctx, [ctx.table.coset(idx)[0] for idx in indices])

    @property
    def field(self):
        return self.ctx.field

    @property
    def N(self):
        return self.ctx.N

    @property
    def k(self):
        return self.N - self.g.degree

    @cached_property
    def h(self):
        return Polynomial.x_n_minus_1(self.field, self.N).exact_div(self.g)

    @cached_property
    def root_cosets(self):
        """Indices of the cosets whose minimal polynomial divides g"""
        table = self.ctx.table
        return tuple(
            idx
            for idx in range(len(table.cosets))
            if self.ctx.minimal_polynomial(table.coset(idx)[0]).divides(self.g)
        )

    @cached_property
    def roots(self):
        roots = self.ctx.table.union(self.root_cosets)
        if len(roots) != self.g.degree:
            raise VerificationError(f"Root count {len(roots)} differs from deg g = {self.g.degree}")
        return roots

    def roots_by_evaluation(self):
        """{i : g(α^i) = 0}, evaluated in the top field"""
        tower, alpha = self.ctx.tower, self.ctx.alpha
        lifted = self.g.lift(tower.top, tower.embed)
        return frozenset(i for i in range(self.N) if lifted(alpha**i).is_zero)

    def label(self, d=None):
        inner = f"{self.N},{self.k}" if d is None else f"{self.N},{self.k},{d}"
        return f"[{inner}]_{self.ctx.q}"

    def as_dict(self):
        table = self.ctx.table
        return {
            "N": self.N,
            "k": self.k,
            "q": self.ctx.q,
            "generator": self.g.to_text(),
            "generator_degree": self.g.degree,
            "parity_check": self.h.to_text(),
            "roots": sorted(self.roots),
            "root_cosets": [table.coset(idx)[0] for idx in self.root_cosets],
        }


def dual_code(C):
    """C^⊥, generated by the reciprocal of h"""
    return CyclicCode(C.ctx, reciprocal(C.h))


@dataclass(frozen=True)
class DualContainingCertificate:
    dual_containing: bool
    by_divisibility: bool
    by_cosets: bool
    # [{"coset": rep, "negated": rep, "reason": ...}]
    violations: tuple = ()

    def __bool__(self):
        return self.dual_containing

    def as_dict(self):
        return {
            "dual_containing": self.dual_containing,
            "by_divisibility": self.by_divisibility,
            "by_cosets": self.by_cosets,
            "violations": list(self.violations),
        }


def is_dual_containing(C):
    """C^⊥ ⊆ C by g | reciprocal(h) and by the ±coset pair rule; the two must agree"""
    by_divisibility = C.g.divides(reciprocal(C.h))

    table = C.ctx.table
    chosen = set(C.root_cosets)
    violations = []
    for idx in sorted(chosen):
        partner = table.negate(idx)
        rep = table.coset(idx)[0]
        if partner == idx:
            violations.append({"coset": rep, "negated": rep, "reason": "self-paired"})
        elif partner in chosen and idx < partner:
            violations.append({"coset": rep, "negated": table.coset(partner)[0], "reason": "both members of a ±pair"})
    by_cosets = not violations

    if by_divisibility != by_cosets:
        raise VerificationError(
            f"Dual-containing tests disagree for g = {C.g.to_text()}: "
            f"divisibility says {by_divisibility}, coset rule says {by_cosets}",
        )
    return DualContainingCertificate(by_cosets, by_divisibility, by_cosets, tuple(violations))


def is_subcode(Ca, Cb):
    """Ca ⊆ Cb, i.e. g_b | g_a"""
    if Ca.N != Cb.N or Ca.field != Cb.field:
        raise ValidationError(f"Cannot compare {Ca.label()} with {Cb.label()}: lengths or fields differ")
    return Cb.g.divides(Ca.g)


def longest_root_run(roots, N, wrap=True):
    """Longest run of consecutive exponents in roots, optionally wrapping mod N"""
    roots = {r % N for r in roots}
    if len(roots) == N:
        return N

    best = current = 0
    sequence = range(2 * N) if wrap else range(N)
    for i in sequence:
        if i % N in roots:
            current += 1
            best = max(best, current)
        else:
            current = 0
    return min(best, N)


def bch_runs(C):
    return {
        "wraparound": longest_root_run(C.roots, C.N, wrap=True),
        "linear": longest_root_run(C.roots, C.N, wrap=False),
    }


def bch_bound(C, wrap=None):
    """1 + the longest run of consecutive root exponents"""
    if C.k < 1:
        raise ValidationError("The BCH bound needs a code of dimension at least 1")
    if wrap is None:
        wrap = bool(get_settings().bch_wraparound)
    return 1 + longest_root_run(C.roots, C.N, wrap=wrap)


def _shift_rows(poly, count, N):
    coeffs = poly.ascending()
    rows = poly.spec.galois_field.Zeros((count, N))
    for i in range(count):
        rows[i, i : i + coeffs.size] = coeffs
    return rows


def generator_matrix(C):
    """k x N galois array whose rows are the shifts x^i g(x)"""
    GF = C.field.galois_field
    if C.k == 0:
        return GF.Zeros((0, C.N))
    return _shift_rows(C.g, C.k, C.N)


def parity_check_matrix(C):
    """(N-k) x N galois array whose rows are the shifts of reciprocal(h)"""
    GF = C.field.galois_field
    if C.k == C.N:
        return GF.Zeros((0, C.N))
    return _shift_rows(reciprocal(C.h), C.N - C.k, C.N)


@dataclass(frozen=True)
class DistanceResult:
    lower_bound: int
    exact: int = None
    upper_bound: int = None
    # codeword of weight upper_bound, as integer field representations
    witness: tuple = None
    method: str = "support-enumeration"
    rank_tests: int = 0
    oracle_checked: bool = False

    @property
    def is_exact(self):
        return self.exact is not None

    @property
    def value(self):
        """Exact distance when known, the lower bound otherwise"""
        return self.exact if self.exact is not None else self.lower_bound

    def as_dict(self):
        return {
            "exact": self.exact,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "witness": list(self.witness) if self.witness is not None else None,
            "witness_weight": sum(1 for x in self.witness if x) if self.witness is not None else None,
            "method": self.method,
            "rank_tests": self.rank_tests,
            "oracle_checked": self.oracle_checked,
        }


def _first_dependent_support(H, N, start, budget):
    """Least w ≥ start with w dependent columns of H, lexicographically first support

    Returns (support or None, rank tests used, largest w fully cleared).
    """
    rank_tests = 0
    cleared = start - 1
    for w in range(start, N + 1):
        for support in itertools.combinations(range(N), w):
            if rank_tests >= budget:
                return None, rank_tests, cleared
            rank_tests += 1
            if np.linalg.matrix_rank(H[:, list(support)]) < w:
                return support, rank_tests, cleared
        cleared = w
    return None, rank_tests, cleared


def _enumeration_distance(C, G, chunk=1 << 16):
    """Minimum nonzero weight over all q^k codewords"""
    GF = C.field.galois_field
    q, k = C.ctx.q, C.k
    place = q ** np.arange(k, dtype=np.int64)

    best = C.N
    total = q**k
    for start in range(1, total, chunk):
        indices = np.arange(start, min(start + chunk, total), dtype=np.int64)
        messages = GF((indices[:, None] // place) % q)
        weights = np.count_nonzero((messages @ G).view(np.ndarray), axis=1)
        best = min(best, int(weights.min()))
    return best


def _least_weight_row(G):
    reduced = G.row_reduce()
    weights = np.count_nonzero(reduced.view(np.ndarray), axis=1)
    row = int(np.argmin(np.where(weights > 0, weights, G.shape[1] + 1)))
    return reduced[row]


def min_distance(C, budget=None):
    """Exact minimum distance from column dependencies of H, with a codeword-enumeration oracle

    Supports are visited by increasing size and lexicographically within a
    size, starting at the BCH bound. The first dependent support carries a
    minimum-weight codeword. When the rank-test budget runs out, the result
    keeps the bounds and a least-weight row of the reduced generator matrix.
    """
    if C.k == 0 or C.k == C.N:
        raise ValidationError(f"Minimum distance is undefined for the degenerate code {C.label()}")

    settings = get_settings()
    budget = settings.distance_budget if budget is None else budget
    oracle_feasible = C.ctx.q**C.k <= settings.oracle_limit

    H = parity_check_matrix(C)
    G = generator_matrix(C)
    bch = bch_bound(C)

    support, rank_tests, cleared = _first_dependent_support(H, C.N, bch, budget)

    if support is None:
        log.info("distance budget of %s rank tests exhausted for %s at weight %s", budget, C.label(), cleared + 1)
        lower = max(bch, cleared + 1)
        witness = _least_weight_row(G)
        weight = int(np.count_nonzero(witness))

        if oracle_feasible:
            exact = _enumeration_distance(C, G)
            return DistanceResult(
                lower,
                exact,
                exact,
                tuple(int(x) for x in witness) if weight == exact else None,
                "codeword-enumeration",
                rank_tests,
                oracle_checked=True,
            )

        return DistanceResult(lower, None, weight, tuple(int(x) for x in witness), "bounds", rank_tests)

    w = len(support)
    null = H[:, list(support)].null_space()
    codeword = C.field.galois_field.Zeros(C.N)
    codeword[list(support)] = null[0]
    if np.count_nonzero(H @ codeword) or np.count_nonzero(codeword) != w:
        raise VerificationError(f"Witness for {C.label()} is not a weight-{w} codeword")

    oracle_checked = False
    if oracle_feasible:
        oracle = _enumeration_distance(C, G)
        if oracle != w:
            raise VerificationError(f"Support enumeration gives d={w} for {C.label()} but codeword enumeration gives {oracle}")
        oracle_checked = True

    return DistanceResult(bch, w, w, tuple(int(x) for x in codeword), "support-enumeration", rank_tests, oracle_checked)
