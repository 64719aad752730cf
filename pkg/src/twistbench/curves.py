"""Traces of Frobenius a_p(E) from Weierstrass equations.

A curve is given by long Weierstrass coefficients (a1, a2, a3, a4, a6):

    y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6

At a good prime, a_p = p + 1 - |E(F_p)|.  Point counts use a
character-sum table: for odd p > 3, completing the square turns the
count into 1 + sum_x #{Y : Y^2 = g(x) mod p} with
g(x) = 4x^3 + b2*x^2 + 2*b4*x + b6, and the per-prime table of square
counts is cached so that building trace tables for many curves costs
O(p) per prime after a shared O(p) setup.  p = 2 and p = 3 are
enumerated directly from the long form.

At bad primes the model is classified at its singular point: a cusp
gives additive reduction (a_p = 0); a node gives multiplicative
reduction, split (+1) or nonsplit (-1) according to whether the
tangent slopes at the node lie in F_p.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

import numpy as np

from .errors import BadReduction, MissingData, NonMinimalModel, NonSquarefree, UnsupportedForm
from .primes import legendre, prime_index, primes_below


class ReductionType(Enum):
    GOOD = "good"
    SPLIT_MULTIPLICATIVE = "split_multiplicative"
    NONSPLIT_MULTIPLICATIVE = "nonsplit_multiplicative"
    ADDITIVE = "additive"


@dataclass(frozen=True)
class TraceTable:
    """a_p values aligned to the ascending primes below ``bound``."""

    bound: int
    values: tuple[int, ...]

    def primes(self) -> tuple[int, ...]:
        return primes_below(self.bound)

    def ap(self, p: int) -> int:
        idx = prime_index(self.bound).get(p)
        if idx is None:
            raise KeyError(f"prime {p} not covered by table with bound {self.bound}")
        return self.values[idx]

    def __len__(self) -> int:
        return len(self.values)


@dataclass
class CurveRecord:
    """One elliptic curve (or isogeny-class representative).

    At least one of ``ainvs``/``traces`` must be present for the record
    to be usable; ``validate`` enforces that together with the Hasse
    bound at good primes and the {-1, 0, 1} convention at bad primes.
    """

    conductor: int
    label: Optional[str] = None
    ainvs: Optional[tuple[int, int, int, int, int]] = None
    traces: Optional[TraceTable] = None

    def validate(self) -> None:
        if not isinstance(self.conductor, int) or self.conductor < 1:
            raise ValueError(f"conductor must be a positive integer, got {self.conductor!r}")
        if self.ainvs is None and self.traces is None:
            raise ValueError("record needs ainvs or a trace table")
        if self.ainvs is not None:
            if len(self.ainvs) != 5 or not all(isinstance(a, int) for a in self.ainvs):
                raise ValueError(f"ainvs must be 5 integers, got {self.ainvs!r}")
            if discriminant(self.ainvs) == 0:
                raise ValueError("singular Weierstrass equation (discriminant is zero)")
        if self.traces is not None:
            plist = self.traces.primes()
            if len(self.traces.values) != len(plist):
                raise ValueError(
                    f"trace table has {len(self.traces.values)} values but "
                    f"{len(plist)} primes lie below {self.traces.bound}"
                )
            for p, a in zip(plist, self.traces.values):
                if self.conductor % p != 0:
                    if a * a > 4 * p:
                        raise ValueError(f"Hasse bound violated at good prime {p}: a_p = {a}")
                elif a not in (-1, 0, 1):
                    raise ValueError(f"bad-prime trace at {p} must be in {{-1,0,1}}, got {a}")


AinvsLike = Union[CurveRecord, Sequence[int]]


def _ainvs_of(curve: AinvsLike) -> tuple[int, int, int, int, int]:
    if isinstance(curve, CurveRecord):
        if curve.ainvs is None:
            raise MissingData("curve record has no Weierstrass coefficients")
        return tuple(curve.ainvs)
    a = tuple(curve)
    if len(a) != 5:
        raise ValueError(f"expected 5 Weierstrass coefficients, got {len(a)}")
    return a


def _conductor_of(curve: AinvsLike, conductor: Optional[int]) -> Optional[int]:
    if conductor is not None:
        return conductor
    if isinstance(curve, CurveRecord):
        return curve.conductor
    return None


def b_invariants(ainvs: Sequence[int]) -> tuple[int, int, int, int]:
    """The standard quantities (b2, b4, b6, b8) of a long Weierstrass equation."""
    a1, a2, a3, a4, a6 = ainvs
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def discriminant(ainvs: Sequence[int]) -> int:
    b2, b4, b6, b8 = b_invariants(ainvs)
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def c_invariants(ainvs: Sequence[int]) -> tuple[int, int]:
    b2, b4, b6, _ = b_invariants(ainvs)
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    return c4, c6


@functools.lru_cache(maxsize=None)
def _square_counts(p: int) -> np.ndarray:
    """counts[v] = #{Y in F_p : Y^2 = v}; shared across curves."""
    y = np.arange(p, dtype=np.int64)
    counts = np.bincount((y * y) % p, minlength=p)
    counts.setflags(write=False)
    return counts


def _enumerate_points(ainvs: Sequence[int], p: int) -> int:
    # direct scan of the long form; only used for p in {2, 3}
    a1, a2, a3, a4, a6 = (a % p for a in ainvs)
    count = 1  # point at infinity
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y) % p == rhs:
                count += 1
    return count


def count_points(curve: AinvsLike, p: int) -> int:
    """|E(F_p)| including the point at infinity.

    Raises BadReduction when the reduced equation is singular mod p.
    """
    a = _ainvs_of(curve)
    if discriminant(a) % p == 0:
        raise BadReduction(f"equation is singular mod {p}")
    if p <= 3:
        return _enumerate_points(a, p)
    b2, b4, b6, _ = b_invariants(a)
    x = np.arange(p, dtype=np.int64)
    g = (((4 * x + b2 % p) * x + (2 * b4) % p) * x + b6 % p) % p
    return 1 + int(_square_counts(p)[g].sum())


def _singular_point_x(ainvs: Sequence[int], p: int) -> int:
    # odd p: (x, y) -> (x, 2y + a1 x + a3) maps the curve to Y^2 = g(x)
    # with g = 4x^3 + b2 x^2 + 2 b4 x + b6; the unique singular point
    # sits at the repeated root of g, i.e. where g and g' both vanish.
    b2, b4, b6, _ = b_invariants(ainvs)
    c2, c1, c0 = b2 % p, (2 * b4) % p, b6 % p
    for x in range(p):
        g = ((4 * x + c2) * x + c1) * x + c0
        gp = (12 * x + 2 * c2) * x + c1
        if g % p == 0 and gp % p == 0:
            return x
    raise AssertionError(f"singular equation mod {p} has no repeated root")


def _classify_singular(ainvs: Sequence[int], p: int) -> ReductionType:
    a1, a2, a3, a4, a6 = (a % p for a in ainvs)
    if p == 2:
        # locate the singular point among the 4 affine candidates
        for x in (0, 1):
            for y in (0, 1):
                on = (y * y + a1 * x * y + a3 * y + x * x * x + a2 * x * x + a4 * x + a6) % 2 == 0
                fx = (a1 * y + 3 * x * x + 2 * a2 * x + a4) % 2 == 0
                fy = (a1 * x + a3) % 2 == 0
                if on and fx and fy:
                    # tangent cone y^2 + a1*x*y - (a2 + 3x)*x^2; slopes solve
                    # t^2 + a1*t + (a2 + x) = 0 over F_2
                    if a1 % 2 == 0:
                        return ReductionType.ADDITIVE
                    if (a2 + x) % 2 == 0:
                        return ReductionType.SPLIT_MULTIPLICATIVE
                    return ReductionType.NONSPLIT_MULTIPLICATIVE
        raise AssertionError("singular equation mod 2 has no singular point")
    x0 = _singular_point_x(ainvs, p)
    b2 = b_invariants(ainvs)[0]
    # tangent-slope quadratic has discriminant b2 + 12*x0 at the node
    disc = (b2 + 12 * x0) % p
    if disc == 0:
        return ReductionType.ADDITIVE
    if legendre(disc, p) == 1:
        return ReductionType.SPLIT_MULTIPLICATIVE
    return ReductionType.NONSPLIT_MULTIPLICATIVE


def reduction_type(curve: AinvsLike, p: int, conductor: Optional[int] = None) -> ReductionType:
    """Classify the reduction of the supplied model at p.

    A nonsingular reduction certifies good reduction outright.  If the
    equation is singular mod p but the record's conductor is not
    divisible by p, the model is non-minimal at p and the conductor is
    trusted: the curve is reported as good.
    """
    a = _ainvs_of(curve)
    if discriminant(a) % p != 0:
        return ReductionType.GOOD
    n = _conductor_of(curve, conductor)
    if n is not None and n % p != 0:
        return ReductionType.GOOD
    return _classify_singular(a, p)


def trace_of_frobenius(curve: AinvsLike, p: int, conductor: Optional[int] = None) -> int:
    """a_p of the supplied model: p + 1 - |E(F_p)| at good primes, and the
    {+1, -1, 0} convention at split/nonsplit/additive bad primes.

    Raises NonMinimalModel when the conductor certifies good reduction
    at p but the equation is singular there (the value is not
    recoverable from a non-minimal model; see reduction_type).
    """
    a = _ainvs_of(curve)
    rt = reduction_type(a, p, conductor=_conductor_of(curve, conductor))
    if rt is ReductionType.GOOD:
        if discriminant(a) % p == 0:
            raise NonMinimalModel(
                f"conductor says good reduction at {p} but the model is singular there"
            )
        return p + 1 - count_points(a, p)
    if rt is ReductionType.SPLIT_MULTIPLICATIVE:
        return 1
    if rt is ReductionType.NONSPLIT_MULTIPLICATIVE:
        return -1
    return 0


def build_trace_table(curve: AinvsLike, bound: int, conductor: Optional[int] = None) -> TraceTable:
    """Trace table for all primes below ``bound`` (empty when bound <= 2)."""
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    a = _ainvs_of(curve)
    n = _conductor_of(curve, conductor)
    values = tuple(trace_of_frobenius(a, p, conductor=n) for p in primes_below(bound))
    return TraceTable(bound=bound, values=values)


def short_weierstrass(ainvs: Sequence[int]) -> tuple[int, int]:
    """Integral short form y^2 = x^3 + A*x + B isomorphic to the input
    away from 2 and 3 (the direct (a4, a6) when a1 = a2 = a3 = 0,
    otherwise (-27*c4, -54*c6))."""
    a1, a2, a3, a4, a6 = ainvs
    if a1 == 0 and a2 == 0 and a3 == 0:
        return a4, a6
    c4, c6 = c_invariants(ainvs)
    return -27 * c4, -54 * c6


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1
    return True


def quadratic_twist(curve: CurveRecord, d: int) -> CurveRecord:
    """The quadratic twist by a squarefree integer d, built for test use.

    The input is converted to short form y^2 = x^3 + Ax + B and twisted
    to y^2 = x^3 + A*d^2*x + B*d^3, so for odd primes p not dividing
    6*d*N(E) the twist's trace is the Legendre symbol (d|p) times the
    original's.  The returned record's conductor field is set to the
    absolute discriminant of the twisted model: it has the same prime
    support as the model's bad reduction, which is all any consumer in
    this package reads from it, but it is not the true conductor.
    """
    if d == 0 or not is_squarefree(d):
        raise NonSquarefree(f"twisting discriminant must be squarefree and nonzero, got {d}")
    a = _ainvs_of(curve)
    if discriminant(a) == 0:
        raise UnsupportedForm("cannot twist a singular equation")
    if d == 1:
        return CurveRecord(
            conductor=curve.conductor, label=curve.label, ainvs=tuple(curve.ainvs),
            traces=curve.traces,
        )
    A, B = short_weierstrass(a)
    twisted = (0, 0, 0, A * d * d, B * d**3)
    label = f"{curve.label}*{d}" if curve.label else None
    return CurveRecord(conductor=abs(discriminant(twisted)), label=label, ainvs=twisted)
