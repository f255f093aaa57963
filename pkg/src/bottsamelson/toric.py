"""Line bundle cohomology on the Bott tower, weight by weight.

A torus-invariant divisor D = sum a_i Z_i + sum b_i Z_i' (upper and lower
ray families) has cohomology graded by lattice weights m. The sign pattern
of the 2N support numbers phi_m(e_i^{+/-}) decides everything:

  * mixed signs at some index (one value >= 0, the other < 0) kill the
    weight entirely;
  * matched signs at every index concentrate the weight in the single
    degree j_m = #{i : phi_m(e_i^+) < 0}, with multiplicity one.

weight_box returns a finite box of weights guaranteed to contain every
weight with nonzero cohomology (and, when b = 0, every corner weight
x^eps), so summing the classification over the box gives the full
cohomology table. demazure_table recomputes the same table through the
simplicial complexes Sigma_m as an internal cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence, Tuple

from .bott import BottData, Weight, _check_coeffs, phi
from .errors import BoxTooLarge
from .simplicial import CohomologyDims, demazure_weight

ALL_ZERO = "all_zero"
CONCENTRATED = "concentrated"


@dataclass(frozen=True)
class ToricDivisor:
    """Coefficients of a torus-invariant divisor on the tower.

    a sits on the upper rays e_i^+ (the Picard basis Z_1, ..., Z_N used by
    the vanishing analysis), b on the lower rays e_i^-.
    """

    a: Tuple[int, ...]
    b: Tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(v) for v in self.a)
        b = tuple(int(v) for v in self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b):
            raise ValueError(
                f"coefficient vectors differ in length: {len(a)} vs {len(b)}"
            )

    @classmethod
    def upper(cls, a: Sequence[int]) -> "ToricDivisor":
        """Divisor sum a_i Z_i supported on the upper rays only (b = 0)."""
        a = tuple(int(v) for v in a)
        return cls(a=a, b=(0,) * len(a))

    def serre_dual(self) -> "ToricDivisor":
        """K - D where K has every coefficient equal to -1."""
        return ToricDivisor(
            a=tuple(-1 - v for v in self.a),
            b=tuple(-1 - v for v in self.b),
        )


@dataclass(frozen=True)
class WeightClassification:
    """Outcome for one weight: all degrees zero, or one degree of dim 1."""

    kind: str
    degree: Optional[int] = None

    @property
    def is_zero(self) -> bool:
        return self.kind == ALL_ZERO

    def dims(self) -> CohomologyDims:
        return {} if self.is_zero else {self.degree: 1}


def classify_weight(bott: BottData, divisor: ToricDivisor, m: Sequence[int]) -> WeightClassification:
    """Closed-form classification of one weight from its 2N support signs."""
    w = _check_coeffs(bott, m, "weight")
    degree = 0
    for i in range(1, bott.length + 1):
        up = phi(bott, divisor, w, (i, 1))
        down = phi(bott, divisor, w, (i, -1))
        if (up < 0) != (down < 0):
            return WeightClassification(kind=ALL_ZERO)
        if up < 0:
            degree += 1
    return WeightClassification(kind=CONCENTRATED, degree=degree)


@dataclass(frozen=True)
class WeightBox:
    """Axis-aligned integer box lo_i <= m_i <= hi_i."""

    lo: Tuple[int, ...]
    hi: Tuple[int, ...]

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise ValueError("box bounds differ in length")
        for l, h in zip(self.lo, self.hi):
            if l > h:
                raise ValueError(f"inverted interval [{l}, {h}]")

    @property
    def num_points(self) -> int:
        total = 1
        for l, h in zip(self.lo, self.hi):
            total *= h - l + 1
        return total

    def contains(self, m: Sequence[int]) -> bool:
        return all(l <= v <= h for l, v, h in zip(self.lo, m, self.hi))

    def points(self) -> Iterator[Weight]:
        """All lattice points in lexicographic order."""
        return product(*(range(l, h + 1) for l, h in zip(self.lo, self.hi)))

    def enlarged(self, margin: int = 1) -> "WeightBox":
        return WeightBox(
            lo=tuple(l - margin for l in self.lo),
            hi=tuple(h + margin for h in self.hi),
        )

    def shell_points(self, margin: int = 1) -> Iterator[Weight]:
        """Lattice points of the enlarged box lying outside this box."""
        for m in self.enlarged(margin).points():
            if not self.contains(m):
                yield m


def weight_box(bott: BottData, divisor: ToricDivisor) -> WeightBox:
    """A box containing every weight with nonzero cohomology.

    Working downward from index N, the interval for m_i is the hull of
    -a_i and the interval-arithmetic range of S_i = b_i - sum_{j>i}
    beta_ij m_j over the boxes already found. Matched signs at index i
    force m_i into [-a_i, S_i] or [S_i + 1, -a_i - 1], both inside that
    hull, and the corner weights x^eps (for b = 0) land on its endpoints,
    so the hull contains all of them.
    """
    n = bott.length
    a, b = divisor.a, divisor.b
    beta = bott.beta
    lo = [0] * n
    hi = [0] * n
    for i in range(n, 0, -1):
        s_lo = s_hi = b[i - 1]
        for j in range(i + 1, n + 1):
            c = -beta[i - 1][j - 1]
            if c >= 0:
                s_lo += c * lo[j - 1]
                s_hi += c * hi[j - 1]
            else:
                s_lo += c * hi[j - 1]
                s_hi += c * lo[j - 1]
        lo[i - 1] = min(-a[i - 1], s_lo)
        hi[i - 1] = max(-a[i - 1], s_hi)
    return WeightBox(lo=tuple(lo), hi=tuple(hi))


@dataclass(frozen=True)
class CohomologyTable:
    """Cohomology dimensions h^0..h^N with optional concentrated witnesses."""

    dims: Tuple[int, ...]
    euler: int
    witnesses: Optional[Tuple[Tuple[Weight, int], ...]] = None
    witnesses_truncated: bool = False

    def __post_init__(self):
        alt = sum(h if i % 2 == 0 else -h for i, h in enumerate(self.dims))
        if alt != self.euler:
            raise ValueError("Euler characteristic does not match dimensions")


DEFAULT_BOX_CAP = 10**8
DEFAULT_WITNESS_CAP = 10**4


def _checked_box(bott: BottData, divisor: ToricDivisor, cap: int) -> WeightBox:
    box = weight_box(bott, divisor)
    volume = box.num_points
    if volume > cap:
        raise BoxTooLarge(volume, cap)
    return box


def cohomology_table(
    bott: BottData,
    divisor: ToricDivisor,
    collect_witnesses: bool = False,
    cap: int = DEFAULT_BOX_CAP,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> CohomologyTable:
    """Exact table h^0..h^N by classifying every weight in the box.

    Witness collection stores (weight, degree) pairs for concentrated
    weights in lexicographic order, truncating at witness_cap.
    """
    box = _checked_box(bott, divisor, cap)
    n = bott.length
    dims = [0] * (n + 1)
    witnesses = [] if collect_witnesses else None
    truncated = False
    for m in box.points():
        cls = classify_weight(bott, divisor, m)
        if cls.is_zero:
            continue
        dims[cls.degree] += 1
        if witnesses is not None:
            if len(witnesses) < witness_cap:
                witnesses.append((m, cls.degree))
            else:
                truncated = True
    euler = sum(h if i % 2 == 0 else -h for i, h in enumerate(dims))
    return CohomologyTable(
        dims=tuple(dims),
        euler=euler,
        witnesses=None if witnesses is None else tuple(witnesses),
        witnesses_truncated=truncated,
    )


def demazure_table(
    bott: BottData,
    divisor: ToricDivisor,
    cap: int = DEFAULT_BOX_CAP,
) -> CohomologyTable:
    """The same table as cohomology_table, but summing per-weight
    simplicial cohomology of Sigma_m instead of the sign classification."""
    box = _checked_box(bott, divisor, cap)
    n = bott.length
    dims = [0] * (n + 1)
    for m in box.points():
        for degree, h in demazure_weight(bott, divisor, m).items():
            dims[degree] += h
    euler = sum(h if i % 2 == 0 else -h for i, h in enumerate(dims))
    return CohomologyTable(dims=tuple(dims), euler=euler)
