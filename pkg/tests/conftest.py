"""Shared helpers: seeded random generators for matrices, words, divisors.

Every randomized test seeds its own Random instance, so the suite is fully
deterministic run to run.
"""

from __future__ import annotations

import random
from typing import Tuple

import pytest

from bottsamelson import (
    BottData,
    GeneralizedCartanMatrix,
    ToricDivisor,
    Word,
    build_bott_data,
    cartan_of_type,
    weight_box,
)


def random_gcm(rng: random.Random, n: int, low: int = -3, zero_chance: float = 0.4
               ) -> GeneralizedCartanMatrix:
    """Random generalized Cartan matrix: 2 on the diagonal, off-diagonal
    entries nonpositive with zeros placed symmetrically."""
    entries = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < zero_chance:
                continue
            entries[i][j] = rng.randint(low, -1)
            entries[j][i] = rng.randint(low, -1)
    return GeneralizedCartanMatrix(n=n, entries=tuple(tuple(r) for r in entries))


def random_word(rng: random.Random, n: int, length: int) -> Word:
    return Word(tuple(rng.randint(1, n) for _ in range(length)))


def random_coeffs(rng: random.Random, length: int, bound: int) -> Tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(length))


def random_instance(
    rng: random.Random,
    max_rank: int = 4,
    max_length: int = 6,
    coeff_bound: int = 4,
    box_limit: int | None = None,
    low: int = -3,
):
    """One random (bott, a). With box_limit set, resample until the weight
    box of the divisor stays below that many lattice points, so exhaustive
    scans stay affordable; the limit only conditions the distribution, it
    never alters any computed value."""
    while True:
        n = rng.randint(1, max_rank)
        length = rng.randint(1, max_length)
        gcm = random_gcm(rng, n, low=low)
        bott = build_bott_data(gcm, random_word(rng, n, length))
        a = random_coeffs(rng, length, coeff_bound)
        if box_limit is not None:
            box = weight_box(bott, ToricDivisor.upper(a))
            if box.num_points > box_limit:
                continue
        return bott, a


@pytest.fixture(scope="session")
def rank3_tower() -> BottData:
    """The rank-3 type A tower on the word (2, 1, 3, 2) used throughout."""
    return build_bott_data(cartan_of_type("A", 3), Word((2, 1, 3, 2)))
