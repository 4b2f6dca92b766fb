# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
q-cyclotomic cosets modulo 2^n

Two constructions of the same table: orbit enumeration, and the closed form
that lists C_0, C_{2^{n-1}} and C_{S·2^{n-r}} for S in S_r, 2 ≤ r ≤ n, with
coset sizes taken from the order formula instead of orbit closure.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property

from qsc_toolkit.exceptions import ValidationError, VerificationError
from qsc_toolkit.qsc_toolkit.gf import split_prime_power

__all__ = [
    "ZDecomposition",
    "SrSet",
    "CosetTable",
    "z_decompose",
    "sr_set",
    "orbit",
    "cosets_bruteforce",
    "cosets_closed_form",
    "coset_size",
    "negate",
    "cross_check",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZDecomposition:
    q: int
    z: int
    c: int

    def as_dict(self):
        return {"q": self.q, "z": self.z, "c": self.c}


def z_decompose(q):
    """q = 1 + 2^z·c with c odd; the construction needs z ≥ 2"""
    split_prime_power(q)
    if q % 4 != 1:
        raise ValidationError(f"q = {q} is not ≡ 1 (mod 4); the construction needs q = 1 + 2^z·c with z ≥ 2")

    z, c = 0, q - 1
    while c % 2 == 0:
        c //= 2
        z += 1
    return ZDecomposition(q, z, c)


@dataclass(frozen=True)
class SrSet:
    r: int
    # signed representatives +3^j, -3^j in order of j
    members: tuple

    def residues(self, n):
        """Members reduced mod 2^n and scaled to level r"""
        N = 2**n
        return tuple((S % N) * 2 ** (n - self.r) % N for S in self.members)


def sr_set(z, r):
    """S_r = {±3^j : 0 ≤ j < 2^{min(r,z)-2}}"""
    if r < 2 or z < 2:
        raise ValidationError(f"S_r needs r ≥ 2 and z ≥ 2, got r={r}, z={z}")

    members = []
    for j in range(2 ** (min(r, z) - 2)):
        members.extend((3**j, -(3**j)))
    return SrSet(r, tuple(members))


def coset_size(n, z, r):
    """Size of C_{S·2^{n-r}}: the order of q modulo 2^r"""
    if not 0 <= r <= n:
        raise ValidationError(f"Level r={r} is outside [0, {n}]")
    return 2 ** (r - z) if r >= z + 1 else 1


def orbit(s, q, N):
    """(s, sq, sq^2, ...) modulo N, in orbit order"""
    s %= N
    members = [s]
    value = s * q % N
    while value != s:
        members.append(value)
        value = value * q % N
    return tuple(members)


@dataclass(frozen=True)
class CosetTable:
    N: int
    q: int
    # sorted member tuples, ordered by their least element (the representative)
    cosets: tuple
    # closed-form labels like "-3^1·2^2"; empty strings for brute-force tables
    labels: tuple = field(default=(), compare=False)
    # residue each coset was generated from (orbit start for listings)
    seeds: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", ("",) * len(self.cosets))
        if not self.seeds:
            object.__setattr__(self, "seeds", tuple(c[0] for c in self.cosets))

    @property
    def n(self):
        return self.N.bit_length() - 1

    @property
    def representatives(self):
        return tuple(c[0] for c in self.cosets)

    @cached_property
    def rep_of(self):
        return {s: idx for idx, members in enumerate(self.cosets) for s in members}

    @cached_property
    def pairing(self):
        return tuple(self.rep_of[(-members[0]) % self.N] for members in self.cosets)

    def index_of(self, s):
        try:
            return self.rep_of[s % self.N]
        except KeyError:
            raise ValidationError(f"Residue {s} is not covered by the coset table")

    def coset(self, idx):
        return self.cosets[idx]

    def coset_of(self, s):
        return self.cosets[self.index_of(s)]

    def size(self, idx):
        return len(self.cosets[idx])

    def negate(self, idx):
        return self.pairing[idx]

    def is_self_paired(self, idx):
        return self.pairing[idx] == idx

    def level(self, idx):
        """r with rep = odd·2^{n-r}; 0 for C_0"""
        rep = self.cosets[idx][0]
        if rep == 0:
            return 0
        return self.n - ((rep & -rep).bit_length() - 1)

    def orbit(self, idx):
        return orbit(self.seeds[idx], self.q, self.N)

    def odd_indices(self):
        return [idx for idx, members in enumerate(self.cosets) if members[0] % 2]

    def pair_indices(self):
        """(i, -i) for every non-self-paired pair, smaller index first"""
        return [(idx, self.pairing[idx]) for idx in range(len(self.cosets)) if idx < self.pairing[idx]]

    def union(self, indices):
        return frozenset(s for idx in indices for s in self.cosets[idx])

    def indices_covering(self, residues):
        """Coset indices whose union is exactly `residues`, or None when it is not coset-closed"""
        residues = frozenset(r % self.N for r in residues)
        indices = sorted({self.index_of(s) for s in residues})
        if self.union(indices) != residues:
            return None
        return indices

    def as_rows(self):
        rows = []
        for idx, members in enumerate(self.cosets):
            rows.append(
                {
                    "index": idx,
                    "representative": members[0],
                    "members": list(members),
                    "orbit": list(self.orbit(idx)),
                    "size": len(members),
                    "level": self.level(idx),
                    "negated_index": self.pairing[idx],
                    "negated_representative": self.cosets[self.pairing[idx]][0],
                    "self_paired": self.is_self_paired(idx),
                    "label": self.labels[idx],
                }
            )
        return rows


def cosets_bruteforce(q, n):
    """Orbits of multiplication by q on Z_{2^n}"""
    if q % 2 == 0:
        raise ValidationError(f"q = {q} must be odd")

    N = 2**n
    seen = set()
    cosets = []
    for s in range(N):
        if s in seen:
            continue
        members = orbit(s, q, N)
        seen.update(members)
        cosets.append(tuple(sorted(members)))
    return CosetTable(N, q, tuple(cosets))


def cosets_closed_form(q, n):
    """Coset table from the S_r representatives and the coset-size formula"""
    if n < 3:
        log.info("closed form needs n ≥ 3; using orbit enumeration for q=%s, n=%s", q, n)
        return cosets_bruteforce(q, n)

    decomposition = z_decompose(q)
    N = 2**n
    entries = [((0,), "0", 0), ((N // 2,), f"2^{n - 1}", N // 2)]

    for r in range(2, n + 1):
        size = coset_size(n, decomposition.z, r)
        sr = sr_set(decomposition.z, r)
        for position, (S, s) in enumerate(zip(sr.members, sr.residues(n))):
            members = tuple(sorted({s * pow(q, i, N) % N for i in range(size)}))
            sign = "-" if S < 0 else ""
            entries.append((members, f"{sign}3^{position // 2}·2^{n - r}", s))

    entries.sort(key=lambda entry: entry[0][0])
    covered = [s for members, _, _ in entries for s in members]
    if sorted(covered) != list(range(N)):
        raise VerificationError(f"Closed-form cosets for q={q}, n={n} do not partition Z_{N}")

    return CosetTable(
        N,
        q,
        tuple(members for members, _, _ in entries),
        labels=tuple(label for _, label, _ in entries),
        seeds=tuple(seed for _, _, seed in entries),
    )


def negate(table, idx):
    """Index of C_{-s} for the coset C_s at idx"""
    return table.negate(idx)


def cross_check(q, n):
    """Closed form against orbit enumeration; returns the closed-form table"""
    closed = cosets_closed_form(q, n)
    brute = cosets_bruteforce(q, n)
    if closed != brute or closed.pairing != brute.pairing:
        raise VerificationError(f"Closed-form cosets differ from orbit enumeration for q={q}, n={n}")
    return closed
