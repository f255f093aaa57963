"""Vanishing certificates from the corner sums C_i^eps.

For a divisor D = sum a_i Z_i in the upper-ray basis, each index i yields
the finite value set {C_i^eps} over all sign suffixes. Two one-sided
conditions per index follow:

  * plus_ok(i):  every C_i^eps >= -1,
  * minus_ok(i): every C_i^eps <= -1.

A certificate is a vector eta in {+, -, 0}^N whose nonzero entries only sit
at indices satisfying the matching condition. Each admissible eta forces

    H^i(D) = 0  for  i < #{eta_i = -}  and  i > N - #{eta_i = +}

on the Bott-Samelson variety and on its toric degeneration alike. The
report aggregates the two extreme certificates (all allowed minus signs,
all allowed plus signs); indices where both conditions hold (C_i^eps
identically -1) make both windows bite and can empty the set of possibly
nonzero degrees entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence, Tuple

from .bott import BottData, all_sign_vectors, big_c, _check_coeffs
from .errors import NotInPicardBasis
from .toric import CohomologyTable, DEFAULT_BOX_CAP, ToricDivisor, cohomology_table

Eta = Tuple[int, ...]


def _upper_coeffs(bott: BottData, divisor) -> Tuple[int, ...]:
    """Extract the a-vector, refusing divisors outside the upper-ray basis."""
    if isinstance(divisor, ToricDivisor):
        if any(divisor.b):
            raise NotInPicardBasis()
        return _check_coeffs(bott, divisor.a)
    return _check_coeffs(bott, divisor)


@dataclass(frozen=True)
class ConditionProfile:
    """Exact min and max of {C_i^eps} per index, with the two flags."""

    c_min: Tuple[int, ...]
    c_max: Tuple[int, ...]
    plus_ok: Tuple[bool, ...]
    minus_ok: Tuple[bool, ...]

    def __post_init__(self):
        for i, (lo, hi, p, m) in enumerate(
            zip(self.c_min, self.c_max, self.plus_ok, self.minus_ok), start=1
        ):
            if lo > hi:
                raise ValueError(f"inverted value range at index {i}")
            if p != (lo >= -1) or m != (hi <= -1):
                raise ValueError(f"flags inconsistent with bounds at index {i}")
            if p and m and not (lo == hi == -1):
                raise ValueError(f"both flags at index {i} need all values equal -1")


def condition_profile(bott: BottData, a: Sequence[int]) -> ConditionProfile:
    """Enumerate C_i^eps over all suffixes and aggregate min, max and flags.

    The suffix enumeration is exhaustive (2^(N-i) sign choices at index i),
    so the flags are exact, not sampled.
    """
    coeffs = _check_coeffs(bott, a)
    n = bott.length
    c_min, c_max = [], []
    for i in range(1, n + 1):
        values = []
        for suffix in all_sign_vectors(n - i):
            eps = (1,) * i + suffix
            values.append(big_c(bott, coeffs, i, eps))
        c_min.append(min(values))
        c_max.append(max(values))
    return ConditionProfile(
        c_min=tuple(c_min),
        c_max=tuple(c_max),
        plus_ok=tuple(v >= -1 for v in c_min),
        minus_ok=tuple(v <= -1 for v in c_max),
    )


@dataclass(frozen=True)
class VanishingCertificate:
    """An admissible sign assignment eta in {+1, 0, -1}^N."""

    eta: Eta

    @property
    def minus_count(self) -> int:
        return sum(1 for s in self.eta if s == -1)

    @property
    def plus_count(self) -> int:
        return sum(1 for s in self.eta if s == 1)

    def vanished_degrees(self) -> Tuple[int, ...]:
        n = len(self.eta)
        low = range(0, self.minus_count)
        high = range(n - self.plus_count + 1, n + 1)
        return tuple(list(low) + list(high))

    def eta_string(self) -> str:
        return "".join({1: "+", 0: "0", -1: "-"}[s] for s in self.eta)


def best_certificates(profile: ConditionProfile) -> Tuple[VanishingCertificate, VanishingCertificate]:
    """The two extreme certificates: all allowed minus, all allowed plus."""
    minus = VanishingCertificate(
        eta=tuple(-1 if ok else 0 for ok in profile.minus_ok)
    )
    plus = VanishingCertificate(
        eta=tuple(1 if ok else 0 for ok in profile.plus_ok)
    )
    return minus, plus


def admissible_etas(profile: ConditionProfile) -> Iterator[Eta]:
    """All sign assignments whose nonzero entries respect the flags."""
    options = []
    for p, m in zip(profile.plus_ok, profile.minus_ok):
        opts = [0]
        if p:
            opts.append(1)
        if m:
            opts.append(-1)
        options.append(opts)
    return product(*options)


def is_admissible(profile: ConditionProfile, eta: Sequence[int]) -> bool:
    if len(eta) != len(profile.plus_ok):
        return False
    for s, p, m in zip(eta, profile.plus_ok, profile.minus_ok):
        if s == 1 and not p:
            return False
        if s == -1 and not m:
            return False
        if s not in (-1, 0, 1):
            return False
    return True


@dataclass(frozen=True)
class VanishingReport:
    """Aggregated vanishing conclusions for one upper-ray divisor."""

    profile: ConditionProfile
    certificate_minus: VanishingCertificate
    certificate_plus: VanishingCertificate
    vanished: Tuple[int, ...]
    possible_window: Tuple[int, ...]
    single_degree: Optional[int]
    everything_vanishes: bool
    toric: Optional[CohomologyTable] = None


def vanishing_report(
    bott: BottData,
    divisor,
    with_toric: bool = True,
    cap: int = DEFAULT_BOX_CAP,
) -> VanishingReport:
    """Full vanishing analysis of a divisor in the upper-ray basis.

    divisor is either a coefficient sequence or a ToricDivisor with b = 0
    (anything else raises NotInPicardBasis). The vanished set is the union
    over both extreme certificates; it is never empty because the last
    index always satisfies at least one condition (C_N^eps = a_N for every
    suffix). single_degree is reported only when every index carries a
    flag and exactly one degree survives. With with_toric the exact toric
    table is attached and checked to vanish in every claimed degree.
    """
    a = _upper_coeffs(bott, divisor)
    n = bott.length
    profile = condition_profile(bott, a)
    cert_minus, cert_plus = best_certificates(profile)
    vanished = sorted(set(cert_minus.vanished_degrees()) | set(cert_plus.vanished_degrees()))
    possible = tuple(i for i in range(n + 1) if i not in vanished)
    coverage = all(p or m for p, m in zip(profile.plus_ok, profile.minus_ok))
    single = possible[0] if coverage and len(possible) == 1 else None

    toric = None
    if with_toric:
        toric = cohomology_table(bott, ToricDivisor.upper(a), cap=cap)
        for i in vanished:
            if toric.dims[i] != 0:
                raise AssertionError(
                    f"claimed vanishing in degree {i} contradicts the toric table"
                )

    return VanishingReport(
        profile=profile,
        certificate_minus=cert_minus,
        certificate_plus=cert_plus,
        vanished=tuple(vanished),
        possible_window=possible,
        single_degree=single,
        everything_vanishes=not possible,
        toric=toric,
    )


def check_toric_vanishing(
    bott: BottData,
    divisor,
    eta: Sequence[int],
    cap: int = DEFAULT_BOX_CAP,
) -> bool:
    """Verify one certificate against the exact toric table.

    eta must be admissible for the divisor's condition profile; the return
    value says whether the toric table vanishes in every degree the
    certificate claims.
    """
    a = _upper_coeffs(bott, divisor)
    profile = condition_profile(bott, a)
    e = tuple(int(s) for s in eta)
    if not is_admissible(profile, e):
        raise ValueError(f"certificate {e} is not admissible for this divisor")
    cert = VanishingCertificate(eta=e)
    table = cohomology_table(bott, ToricDivisor.upper(a), cap=cap)
    return all(table.dims[i] == 0 for i in cert.vanished_degrees())
