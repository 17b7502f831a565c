"""Closed-form local invariants of a single singularity G_r(u, v) + t^d = 0.

Three branches, mirroring the resolution shapes:

  r = 2              A_{d-1}; the resolution is crepant, everything from d.
  d = 1 (mod r)      blown-down star; discrepancies are the arithmetic
                     progression a_k = -(r-2)(lambda+1-k).
  otherwise          star; a_0, a_1 and a_lambda have closed forms and the
                     interior entries follow the three-term recurrence of the
                     adjunction system, which is re-verified before returning.

The quadruple (DCI, DCII, DMY, E) records the changes in c_1^2, the Euler
number, the Miyaoka-Yau number, and the per-point Miyaoka-Yau contribution
E = DMY + (d-1)(r-1)(3-r).
"""

from __future__ import annotations

from dataclasses import dataclass

from .hjcf import hj_expand
from .resolution import BLOWN_DOWN_STAR, CHAIN, STAR, weight_data


@dataclass(frozen=True)
class CanonicalCoefficients:
    """Exceptional-curve coefficients of the canonical divisor, one per depth.

    Star: (a_0, a_1, ..., a_lambda) with a_0 on the central curve.
    Blown-down star: (a_1, ..., a_lambda).
    Chain (r = 2): one zero per vertex.
    """

    r: int
    d: int
    shape: str
    values: tuple[int, ...]


@dataclass(frozen=True)
class LocalInvariants:
    r: int
    d: int
    dci: int
    dcii: int
    dmy: int
    e: int


def canonical_coefficients(r: int, d: int) -> CanonicalCoefficients:
    wd = weight_data(r, d)
    if r == 2:
        return CanonicalCoefficients(r, d, CHAIN, (0,) * (d - 1))
    if d % r == 1:
        lam = (d - 1) // r
        values = tuple(-(r - 2) * (lam + 1 - k) for k in range(1, lam + 1))
        _check_blown_down_system(r, lam, values)
        return CanonicalCoefficients(r, d, BLOWN_DOWN_STAR, values)
    exp = hj_expand(wd.alpha, wd.beta)
    lam = exp.length
    num = 1 + wd.bprime * wd.beta
    if num % wd.alpha != 0:
        raise AssertionError(f"alpha does not divide 1 + b'*beta for (r, d)=({r}, {d})")
    a0 = (2 - r) * wd.alpha + wd.bprime - 1
    vals = [a0]
    if lam >= 1:
        vals.append((2 - r) * wd.beta + num // wd.alpha - 1)
        for k in range(1, lam):
            n_k = exp.terms[k - 1]
            vals.append(n_k * vals[k] - vals[k - 1] + n_k - 2)
        assert vals[-1] == -(r - 2)
    _check_star_system(wd, exp.terms, vals)
    return CanonicalCoefficients(r, d, STAR, tuple(vals))


def local_invariants(r: int, d: int) -> LocalInvariants:
    wd = weight_data(r, d)
    if r == 2:
        dci, dcii = 0, d - 1
    elif d % r == 1:
        dci = -(d - 1) * (r - 2) ** 2
        dcii = d - 1
    else:
        exp = hj_expand(wd.alpha, wd.beta)
        dci = (-d * (r - 2) ** 2
               - r * sum(n - 2 for n in exp.terms)
               + 2 * (r - 2) * (r - wd.g)
               + (r - wd.b))
        dcii = 1 + r * exp.length - (r - 2) * (wd.g - 1)
    dmy = 3 * dcii - dci
    return LocalInvariants(r, d, dci, dcii, dmy, dmy + (d - 1) * (r - 1) * (3 - r))


def _check_star_system(wd, terms, vals) -> None:
    """Residual check of the adjunction system for the star shape."""
    r, lam = wd.r, len(terms)
    a = list(vals) + [0]  # a_{lambda+1} = 0
    first = -wd.b * a[0] + (r * a[1] if lam >= 1 else 0)
    assert first == (r - 2) * (wd.g - 1) - 2 + wd.b, (wd.r, wd.d)
    for k in range(1, lam + 1):
        n_k = terms[k - 1]
        assert -n_k * a[k] + a[k - 1] + a[k + 1] == n_k - 2, (wd.r, wd.d, k)


def _check_blown_down_system(r, lam, values) -> None:
    """Residual check after blowing the central curve down; the root equation
    picks up (r-1) copies of a_1 from the pairwise-adjacent roots."""
    a = list(values) + [0]
    assert -r * a[0] + (a[1] if lam >= 2 else 0) + (r - 1) * a[0] == r - 2
    for k in range(2, lam + 1):
        assert -2 * a[k - 1] + a[k - 2] + a[k] == 0
