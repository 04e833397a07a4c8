"""Certificates and verdicts built from the handlebody and knot invariants.

Every certificate carries the integers of the inequality it rests on and can
re-check itself with ``verify()``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .codec import KnotDiagram, connected_sum, parse_pd
from .errors import InputError, PreconditionError
from .fourmanifold import (
    FramedLink,
    HandlebodySummary,
    MeridianClass,
    linking_matrix,
    meridian_class,
    summarize,
)
from .invariants import UnitComplexSample
from .linalg import quadratic

__all__ = [
    "RohlinCertificate",
    "DeepSliceCertificate",
    "MTVerdict",
    "RefutationWitness",
    "FamilyVerdict",
    "rohlin_bound",
    "find_nonsphere_class",
    "deep_slice_certificate",
    "mt_obstruct",
    "universal_refute",
    "family_rules",
    "witness_diagram",
    "WALL_MERIDIAN",
    "ROHLIN_CONDITIONAL",
    "FAMILY_RULE_NONE",
    "INDETERMINATE",
]

WALL_MERIDIAN = "WALL_MERIDIAN"
ROHLIN_CONDITIONAL = "ROHLIN_CONDITIONAL"
FAMILY_RULE_NONE = "FAMILY_RULE_NONE"
INDETERMINATE = "INDETERMINATE"

CONDITIONAL_NOTE = "conditional on the boundary of X being the 3-sphere (only H_1 = 0 is certified)"


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _genus_floor(psi_sq: int, sigma: int, b2: int) -> int:
    return max(0, _ceil_div(abs(psi_sq - 2 * sigma) - 2 * b2, 4))


# ---------------------------------------------------------------------------
# Rohlin


@dataclass(frozen=True)
class RohlinCertificate:
    q: tuple[tuple[int, ...], ...]
    psi: tuple[int, ...]
    psi_sq: int
    sigma: int
    b2: int
    g_min: int

    @property
    def excess(self) -> int:
        """|psi.psi - 2 sigma| - 2 b2, the quantity bounded by 4g."""
        return abs(self.psi_sq - 2 * self.sigma) - 2 * self.b2

    def verify(self) -> bool:
        s = summarize(self.q)
        return (
            all(x % 2 == 0 for x in self.psi)
            and any(self.psi)
            and abs(s.det) == 1
            and quadratic(self.q, self.psi) == self.psi_sq
            and s.signature == self.sigma
            and s.b2_closed == self.b2
            and 4 * self.g_min >= self.excess
            and (self.g_min == 0 or self.excess > 4 * (self.g_min - 1))
        )

    def record(self) -> dict:
        return {
            "Q": [list(r) for r in self.q],
            "psi": list(self.psi),
            "psi_sq": self.psi_sq,
            "sigma": self.sigma,
            "b2": self.b2,
            "g_min": self.g_min,
            "inequality": f"4*g >= |{self.psi_sq} - 2*({self.sigma})| - 2*{self.b2} = {self.excess}",
        }


def rohlin_bound(q: Sequence[Sequence[int]], psi: Sequence[int]) -> RohlinCertificate:
    s = summarize(q)
    psi = tuple(int(x) for x in psi)
    if len(psi) != s.n:
        raise InputError(f"class has {len(psi)} coordinates, expected {s.n}")
    if not any(psi):
        raise PreconditionError("class must be nonzero")
    if any(x % 2 for x in psi):
        raise PreconditionError("class not divisible by 2")
    if abs(s.det) != 1:
        raise PreconditionError("linking matrix is not unimodular; the capped closure does not exist")
    psi_sq = quadratic(s.q, psi)
    return RohlinCertificate(s.q, psi, psi_sq, s.signature, s.b2_closed, _genus_floor(psi_sq, s.signature, s.b2_closed))


def _alpha_candidates(n: int):
    for i in range(n):
        yield tuple(int(k == i) for k in range(n))
    for i, j in itertools.combinations(range(n), 2):
        yield tuple(int(k in (i, j)) for k in range(n))
    bound = 2
    while True:
        for v in itertools.product(range(-bound, bound + 1), repeat=n):
            if max(map(abs, v)) == bound:
                yield v
        bound += 1


def find_nonsphere_class(q: Sequence[Sequence[int]]) -> RohlinCertificate:
    """Least k >= 1 with psi = 2k*alpha giving g_min >= 1, alpha the first class with alpha.alpha != 0."""
    s = summarize(q)
    if abs(s.det) != 1:
        raise PreconditionError("linking matrix is not unimodular; the capped closure does not exist")
    alpha = next(a for a in _alpha_candidates(s.n) if quadratic(s.q, a) != 0)
    k = 1
    while True:
        cert = rohlin_bound(s.q, tuple(2 * k * x for x in alpha))
        if cert.g_min >= 1:
            return cert
        k += 1


# ---------------------------------------------------------------------------
# deep slice certificates


@dataclass(frozen=True)
class DeepSliceCertificate:
    case: str
    summary: HandlebodySummary
    meridian: MeridianClass | None = None
    rohlin: RohlinCertificate | None = None
    knot: str = ""
    notes: tuple[str, ...] = ()

    def verify(self) -> bool:
        if self.case == WALL_MERIDIAN:
            m = self.meridian
            return m is not None and m.nontrivial and meridian_class(self.summary.q, m.index) == m
        if self.case == ROHLIN_CONDITIONAL:
            r = self.rohlin
            return self.summary.cappable and r is not None and r.g_min >= 1 and r.verify()
        return False

    def record(self) -> dict:
        rec = {"case": self.case, "handlebody": self.summary.record(), "knot": self.knot}
        if self.meridian is not None:
            rec["meridian"] = self.meridian.record()
        if self.rohlin is not None:
            rec["rohlin"] = self.rohlin.record()
        rec["notes"] = list(self.notes)
        return rec


def deep_slice_certificate(link: FramedLink | Sequence[Sequence[int]]) -> DeepSliceCertificate:
    q = linking_matrix(link) if isinstance(link, FramedLink) else link
    if len(q) == 0:
        raise InputError("a 2-handlebody needs at least one 2-handle")
    s = summarize(q)
    for i in range(1, s.n + 1):
        m = meridian_class(s.q, i)
        if m.nontrivial:
            return DeepSliceCertificate(
                WALL_MERIDIAN,
                s,
                meridian=m,
                knot=f"Whitehead double of meridian {i}",
                notes=(f"mu = [meridian {i}] is nonzero in the quotient group ring; its H_1 class is nontrivial",),
            )
    if s.cappable:
        r = find_nonsphere_class(s.q)
        return DeepSliceCertificate(
            ROHLIN_CONDITIONAL,
            s,
            rohlin=r,
            knot=f"boundary of the 2-handle part of a surface representing psi = {list(r.psi)}",
            notes=(CONDITIONAL_NOTE,),
        )
    # unreachable: |det Q| != 1 forces a nontrivial cokernel and then some e_i survives
    return DeepSliceCertificate(INDETERMINATE, s, notes=("homology sphere boundary, fundamental group unknown",))


# ---------------------------------------------------------------------------
# MT obstruction


@dataclass(frozen=True)
class MTVerdict:
    sigma: int
    omega: str
    certified: bool
    sign: int
    chi: int
    slack: int
    obstructed: bool

    def verify(self) -> bool:
        slack = abs(self.sigma + self.sign) - self.chi + 2
        return self.certified and slack == self.slack and self.obstructed == (slack > 0)

    def record(self) -> dict:
        return {
            "sigma_K": self.sigma,
            "omega": self.omega,
            "omega_certified": self.certified,
            "sign_X": self.sign,
            "chi_X": self.chi,
            "slack": self.slack,
            "obstructed": self.obstructed,
            "inequality": f"|{self.sigma} + ({self.sign})| - {self.chi} + 2 = {self.slack} {'>' if self.obstructed else '<='} 0",
        }


def mt_obstruct(
    sigma: int,
    omega: UnitComplexSample,
    closed: HandlebodySummary | Sequence[Sequence[int]] | tuple[int, int],
    h1_trivial: bool = True,
) -> MTVerdict:
    """Check |sigma + sign(X)| - chi(X) + 2 <= 0 for a closed X with H_1 = 0.

    ``closed`` is a capped handlebody (summary or linking matrix) or a raw
    (sign, chi) pair, in which case ``h1_trivial`` must be asserted by the caller.
    """
    if not omega.exceptional_ok:
        raise PreconditionError(f"omega = {omega} is not certified (order {omega.m} is not a prime power)")
    if isinstance(closed, tuple) and len(closed) == 2 and all(isinstance(x, int) for x in closed):
        sign, chi = closed
        if not h1_trivial:
            raise PreconditionError("H_1(X) must vanish")
    else:
        s = closed if isinstance(closed, HandlebodySummary) else summarize(closed)
        if not s.cappable:
            raise PreconditionError("linking matrix is not unimodular; the capped closure does not exist")
        sign, chi = s.signature, s.chi_closed
    slack = abs(sigma + sign) - chi + 2
    return MTVerdict(sigma, str(omega), True, sign, chi, slack, slack > 0)


# ---------------------------------------------------------------------------
# universal slicing refutation


@dataclass(frozen=True)
class RefutationWitness:
    sign_v: int
    chi_v: int
    l: int
    bound: int
    n: int
    knot: str
    sigma: int
    sign_closed: int
    chi_closed: int
    slack: int
    notes: tuple[str, ...] = field(default=())

    def verify(self) -> bool:
        b = abs(self.sign_v) + abs(self.chi_v) + 2 * self.l
        return (
            b == self.bound
            and 2 * self.n >= b
            and self.sigma == 2 * self.n
            and self.slack == abs(self.sigma + self.sign_closed) - self.chi_closed + 2
            and self.slack > 0
        )

    def record(self) -> dict:
        return {
            "sign_V": self.sign_v,
            "chi_V": self.chi_v,
            "l": self.l,
            "B": self.bound,
            "n": self.n,
            "witness_knot": self.knot,
            "sigma_witness": self.sigma,
            "sign_closed": self.sign_closed,
            "chi_closed": self.chi_closed,
            "slack": self.slack,
            "inequality": f"|{self.sigma} + ({self.sign_closed})| - {self.chi_closed} + 2 = {self.slack} > 0",
            "notes": list(self.notes),
        }


LEFT_TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def witness_diagram(n: int) -> KnotDiagram:
    """PD diagram of the connected sum of n left-handed trefoils."""
    if n < 1:
        raise InputError("need at least one summand")
    d = parse_pd(LEFT_TREFOIL)
    out = d
    for _ in range(n - 1):
        out = connected_sum(out, d)
    return out


def universal_refute(sign_v: int, chi_v: int, l: int) -> RefutationWitness:
    if l < 0:
        raise InputError("number of H_1 generators must be nonnegative")
    bound = abs(sign_v) + abs(chi_v) + 2 * l
    n = max(1, _ceil_div(bound, 2))
    notes = ("bound is vacuous (B = 0); n floored at 1",) if bound == 0 else ()
    sigma = 2 * n
    chi_closed = abs(chi_v) + 2 * l
    slack = abs(sigma + sign_v) - chi_closed + 2
    knot = "left-handed trefoil" if n == 1 else f"connected sum of {n} left-handed trefoils"
    return RefutationWitness(sign_v, chi_v, l, bound, n, knot, sigma, sign_v, chi_closed, slack, notes)


# ---------------------------------------------------------------------------
# static family rules


@dataclass(frozen=True)
class FamilyVerdict:
    family: str
    k: int
    deep_slice_exists: bool
    local_deep_slice_exists: bool
    statement: str

    def record(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "deep_slice_exists": self.deep_slice_exists,
            "local_deep_slice_exists": self.local_deep_slice_exists,
            "statement": self.statement,
        }


_FAMILY_ALIASES = {
    "ONE_HANDLEBODY": "ONE_HANDLEBODY",
    "1-HANDLEBODY": "ONE_HANDLEBODY",
    "S2XD2_SUM": "S2xD2_SUM",
}


def family_rules(family: str, k: int) -> FamilyVerdict:
    key = _FAMILY_ALIASES.get(family.strip().upper())
    if key is None:
        raise InputError(f"unrecognized family {family!r}; known: ONE_HANDLEBODY, S2xD2_SUM")
    if k < 0:
        raise InputError("family parameter must be nonnegative")
    if key == "ONE_HANDLEBODY" or k == 0:
        if k == 0:
            what = "the 4-ball"
        else:
            what = f"boundary sum of {k} {'copy' if k == 1 else 'copies'} of {'S^1 x D^3' if key == 'ONE_HANDLEBODY' else 'S^2 x D^2'}"
        return FamilyVerdict(key, k, False, False, f"no deep slice knots in {what}")
    return FamilyVerdict(
        key,
        k,
        True,
        False,
        f"boundary sum of {k} {'copy' if k == 1 else 'copies'} of S^2 x D^2: no deep slice local knots; "
        "non-local deep slice knots exist (see the deep-slice certificate for Q = 0)",
    )
