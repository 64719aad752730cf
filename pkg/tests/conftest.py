"""Shared fixtures: real small-conductor curves and synthetic twist
families with controllable structure."""

from __future__ import annotations

import math

import numpy as np
import pytest

from twistbench.curves import CurveRecord, TraceTable, discriminant
from twistbench.primes import primes_below, primes_in

# Twenty small-conductor Weierstrass equations (general and short form,
# all reduction behaviors represented).  The conductor field is the
# radical of the discriminant: for these minimal models it has the same
# prime support as the true conductor, which is the only thing any
# consumer of the field reads.
FIXTURE_AINVS = [
    (0, -1, 1, -10, -20),
    (0, 0, 1, -1, 0),
    (0, 1, 1, -2, 0),
    (0, 0, 1, -7, 6),
    (0, 0, 0, -1, 0),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 4, 0),
    (0, 0, 0, -2, 0),
    (0, 0, 0, 0, 1),
    (0, 0, 0, 0, -1),
    (0, 0, 0, 0, 2),
    (0, 0, 0, 0, -4),
    (1, 0, 0, 0, -1),
    (1, 1, 1, -10, -10),
    (1, -1, 1, -1, 0),
    (1, 0, 1, -1, 0),
    (0, 1, 0, -1, 0),
    (1, 1, 0, 0, 1),
    (0, -1, 1, 0, 0),
    (1, 0, 1, 4, -6),
]


def radical(n: int) -> int:
    n = abs(n)
    r = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            r *= d
            while n % d == 0:
                n //= d
        d += 1
    return r * n if n > 1 else r


def fixture_curves() -> list[CurveRecord]:
    curves = []
    for i, ainvs in enumerate(FIXTURE_AINVS):
        disc = discriminant(ainvs)
        assert disc != 0
        curves.append(
            CurveRecord(conductor=radical(disc), label=f"fix{i:02d}", ainvs=ainvs)
        )
    return curves


def prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@pytest.fixture(scope="session")
def small_curves() -> list[CurveRecord]:
    return fixture_curves()


def hasse_floor(p: int) -> int:
    return math.isqrt(4 * p)


def synthetic_families(
    seed: int,
    family_sizes: list[int],
    bound: int = 8192,
    global_flip: bool = False,
    no_zeros: bool = False,
    noise_flips: int = 0,
) -> list[CurveRecord]:
    """Synthetic twist families: members of one family share all trace
    magnitudes and differ only in signs.

    ``global_flip`` restricts members to a single overall sign flip (the
    structure of a real twist pair away from bad primes), which makes
    majority voting on any family partner provably unambiguous;
    otherwise each member flips signs independently per prime.  With
    ``noise_flips`` > 0, up to that many additional per-member sign
    flips are planted at random positions, so relative patterns mostly
    repeat but occasionally collide inconsistently (exercising votes,
    ties, and empty-lookup fallbacks together).  Conductors are distinct
    ascending primes above the hash range, so every record has good
    reduction at every tabulated prime.
    """
    rng = np.random.default_rng(seed)
    plist = primes_below(bound)
    conductors = iter(primes_in(bound, bound + 16 * (sum(family_sizes) + 16)))
    records = []
    magnitude_profiles = set()
    for fam, size in enumerate(family_sizes):
        lo = 1 if no_zeros else 0
        mags = tuple(int(rng.integers(lo, hasse_floor(q) + 1)) for q in plist)
        base_signs = tuple(int(s) for s in rng.choice((-1, 1), size=len(plist)))
        magnitude_profiles.add(mags)
        for m in range(size):
            if global_flip:
                flip = int(rng.choice((-1, 1)))
                values = [flip * s * v for s, v in zip(base_signs, mags)]
            else:
                flips = rng.choice((-1, 1), size=len(plist))
                values = [int(f) * s * v for f, s, v in zip(flips, base_signs, mags)]
            if noise_flips:
                for pos in rng.integers(0, len(values), size=int(rng.integers(0, noise_flips + 1))):
                    values[pos] = -values[pos]
            records.append(
                CurveRecord(
                    conductor=next(conductors),
                    label=f"syn{fam:03d}.{m}",
                    ainvs=None,
                    traces=TraceTable(bound=bound, values=tuple(values)),
                )
            )
    # distinct families must be distinguishable by magnitudes (and hence
    # by twist hash); regenerate with another seed if this ever trips
    assert len(magnitude_profiles) == len(family_sizes)
    for rec in records:
        rec.validate()
    return records
