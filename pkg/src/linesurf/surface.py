"""Global invariants of the compactified Milnor fiber and its resolution.

Everything aggregates the per-singularity quadruples over the profile:

    K^2  = d(d-4)^2                                   (singular model)
    chi  = d(d^2-4d+6) - (d-1) sum t_r (r-1)^2
    c1^2 = K^2 + sum t_r DCI_{r,d}                    (minimal resolution)
    c2   = chi + sum t_r DCII_{r,d}
    MY   = 3 c2 - c1^2 = sum t_r E_{r,d}

plus the sign trichotomy (pencil / near-pencil / the rest), the general-type
criteria (c1^2 > 9, or d >= 7 with only nodes and triple points), and the
Hodge numbers from Noether's formula once the irregularity q is supplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arrangement import Profile, is_pencil
from .errors import (
    NegativeHodgeNumber,
    NoetherDivisibilityFailure,
    UnbalancedProfile,
    ZeroSecondChern,
)
from .local import local_invariants


@dataclass(frozen=True)
class GlobalInvariants:
    k2_bar: int
    chi_bar: int
    my_bar: int
    c1sq: int
    c2: int
    my_tilde: int
    chern_ratio: Optional[Fraction]  # None when c2 = 0


@dataclass(frozen=True)
class Verdict:
    pencil: bool
    my_sign: int                 # sign of MY of the resolution
    ball_quotient_possible: bool
    general_type: str            # "Yes" | "No" | "Unknown"
    reason: str


@dataclass(frozen=True)
class HodgeDiamond:
    q: int
    pg: int
    h11: int

    @property
    def c2(self) -> int:
        return 2 - 4 * self.q + 2 * self.pg + self.h11


def _require_balanced(p: Profile) -> None:
    if not p.balanced:
        raise UnbalancedProfile("operation requires a balanced profile")


def base_invariants(p: Profile) -> tuple[int, int, int]:
    """(K^2, chi, MY) of the singular compactification."""
    _require_balanced(p)
    d = p.d
    k2_bar = d * (d - 4) ** 2
    chi_bar = d * (d * d - 4 * d + 6) - (d - 1) * sum(c * (r - 1) ** 2 for r, c in p.t)
    my_bar = 3 * chi_bar - k2_bar
    assert my_bar == (d - 1) * sum(c * (r - 1) * (3 - r) for r, c in p.t)
    return k2_bar, chi_bar, my_bar


def chern_numbers(p: Profile) -> tuple[int, int]:
    """(c1^2, c2) of the minimal resolution."""
    k2_bar, chi_bar, _ = base_invariants(p)
    c1sq = k2_bar + sum(c * local_invariants(r, p.d).dci for r, c in p.t)
    c2 = chi_bar + sum(c * local_invariants(r, p.d).dcii for r, c in p.t)
    return c1sq, c2


def my_tilde(p: Profile) -> int:
    """Miyaoka-Yau number of the resolution, as the sum of per-point terms."""
    _require_balanced(p)
    return sum(c * local_invariants(r, p.d).e for r, c in p.t)


def global_invariants(p: Profile) -> GlobalInvariants:
    k2_bar, chi_bar, my_bar = base_invariants(p)
    c1sq, c2 = chern_numbers(p)
    my = my_tilde(p)
    assert my == 3 * c2 - c1sq
    ratio = Fraction(c1sq, c2) if c2 != 0 else None
    return GlobalInvariants(k2_bar, chi_bar, my_bar, c1sq, c2, my, ratio)


def verdict(p: Profile) -> Verdict:
    _require_balanced(p)
    pencil = is_pencil(p)
    c1sq, _ = chern_numbers(p)
    my = my_tilde(p)
    my_sign = (my > 0) - (my < 0)

    if pencil and p.d == 3:
        general, reason = "No", "d3-pencil-has-c2-zero"
    elif c1sq > 9:
        general, reason = "Yes", "c1sq-exceeds-9"
    elif p.d >= 7 and set(p.multiplicities) <= {2, 3}:
        general, reason = "Yes", "only-nodes-and-triples"
    else:
        general, reason = "Unknown", "beyond-known-criteria"

    # MY = 0 with general type would characterize a ball quotient; the only
    # MY = 0 case is the d = 3 pencil, which is not of general type
    ball = my_sign == 0 and general == "Yes"
    return Verdict(pencil, my_sign, ball, general, reason)


def hodge_diamond(p: Profile, q: int) -> HodgeDiamond:
    """Hodge numbers from (c1^2, c2, q) via Noether's formula."""
    _require_balanced(p)
    if q < 0:
        raise NegativeHodgeNumber(f"irregularity q must be nonnegative, got {q}")
    c1sq, c2 = chern_numbers(p)
    noether = c1sq + c2 + 12 * (q - 1)
    if noether % 12 != 0:
        raise NoetherDivisibilityFailure(
            f"12 does not divide c1^2 + c2 + 12(q-1) = {noether}")
    pg = (c1sq + c2) // 12 - (1 - q)
    h11 = (5 * c2 - c1sq) // 6 + 2 * q
    if pg < 0 or h11 < 0:
        raise NegativeHodgeNumber(
            f"(profile, q) pair is unrealizable: pg={pg}, h11={h11}")
    assert 2 - 4 * q + 2 * pg + h11 == c2
    return HodgeDiamond(q, pg, h11)


def chern_ratio_analysis(p: Profile) -> dict:
    """Exact ratio c1^2/c2, with the nodes-and-triples decomposition when
    only t_2, t_3 are nonzero: ratio = (1/3)(1 + 2 * numer / denom)."""
    c1sq, c2 = chern_numbers(p)
    if c2 == 0:
        raise ZeroSecondChern("c2 = 0, the Chern ratio is undefined")
    ratio = Fraction(c1sq, c2)
    result: dict = {"ratio": ratio, "nodes_triples_form": None}
    if set(p.multiplicities) <= {2, 3}:
        d, t3 = p.d, p.t_r(3)
        if d % 3 == 0:
            numer = (d - 3) * (d - 7)
            denom = d * d - 4 * d + 6 - 3 * t3
        elif d % 3 == 1:
            numer = d * (d - 3) * (d - 7)
            denom = d * (d * d - 4 * d + 6) - 3 * (d - 1) * t3
        else:
            numer = d * (d - 3) * (d - 7)
            denom = d * (d * d - 4 * d + 6) - 3 * (d - 2) * t3
        assert ratio == Fraction(1, 3) * (1 + 2 * Fraction(numer, denom))
        result["nodes_triples_form"] = {"numer": numer, "denom": denom}
    return result
