"""Twist hashes: 61-bit residues constant on quadratic twist classes.

The hash of a curve is

    h(E) = sum over primes 4096 < p < 8192 of  c_p * |a_p(E)|   (mod P)

with P = 2^61 - 1 and c_p the e_p-th base-P digit of the fractional
part of pi, where e_p is the 1-based rank of p among the primes in the
interval.  Because only |a_p| enters, two quadratic twists hash
identically whenever no hash-range prime divides the twisting
discriminant times the conductor, and isogenous curves (identical
trace tables) always hash identically.

Digits of pi are extracted from an embedded 16,000-digit decimal
constant with interval certification: the expansion is run from both
ends of the bracket [S/10^m, (S+1)/10^m] enclosing pi, and a digit is
only accepted when both ends agree.  An independent Machin-series
recomputation with a proven error bound is provided for
cross-validation.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from ._pidata import PI_FRACTIONAL_DIGITS
from .curves import CurveRecord, TraceTable, build_trace_table
from .errors import IncompleteTable, InsufficientPrecision, MissingData
from .primes import prime_index, primes_in

MODULUS = (1 << 61) - 1  # Mersenne prime 2^61 - 1
HASH_RANGE = (4096, 8192)  # open interval (2^12, 2^13)

# decimal digits needed per certified base-P digit, with slack
_DIGITS_PER_LIMB = 18.4


def hash_primes() -> tuple[int, ...]:
    """Primes in the open interval (4096, 8192), ascending."""
    return primes_in(*HASH_RANGE)


def _mod_mersenne(x: int) -> int:
    # 2^61 = 1 (mod P), so fold the high bits down until one word remains
    while x >> 61:
        x = (x & MODULUS) + (x >> 61)
    return x - MODULUS if x >= MODULUS else x


@functools.lru_cache(maxsize=4)
def _int_from_decimal(digits: str) -> int:
    # chunked parse; CPython caps single str->int conversions at 4300 digits
    value = 0
    for i in range(0, len(digits), 4000):
        chunk = digits[i : i + 4000]
        value = value * 10 ** len(chunk) + int(chunk)
    return value


def _expand_base_p(numerator: int, denominator: int, n: int) -> list[int]:
    # base-P digits of numerator/denominator in [0, 1)
    digits = []
    r = numerator
    for _ in range(n):
        r *= MODULUS
        d, r = divmod(r, denominator)
        digits.append(d)
    return digits


def pi_digits_base_P(n: int, decimal_digits: str | None = None) -> tuple[int, ...]:
    """First n base-(2^61 - 1) digits of the fractional part of pi.

    Digit i equals floor(pi * P^i) mod P.  ``decimal_digits`` overrides
    the embedded constant (truncated fractional decimal digits); a
    constant shorter than ceil(18.4 * (n + 2)) digits, or one whose
    bracket fails to pin down every requested digit, raises
    InsufficientPrecision.
    """
    cap = len(hash_primes()) + 8
    if not 1 <= n <= cap:
        raise ValueError(f"n must be in [1, {cap}], got {n}")
    frac = PI_FRACTIONAL_DIGITS if decimal_digits is None else decimal_digits
    m = len(frac)
    if m < math.ceil(_DIGITS_PER_LIMB * (n + 2)):
        raise InsufficientPrecision(
            f"{m} decimal digits cannot certify {n} base-P digits"
        )
    s = _int_from_decimal(frac)
    scale = 10**m
    lo = _expand_base_p(s, scale, n)
    hi = _expand_base_p(s + 1, scale, n)
    if lo != hi:
        raise InsufficientPrecision(
            f"digit bracket did not converge within {m} decimal digits"
        )
    return tuple(lo)


def _machin_pi_bounds(decimal_digits: int) -> tuple[int, int, int]:
    """Rigorous integer bracket lo/scale <= pi <= hi/scale.

    Machin: pi = 16*atan(1/5) - 4*atan(1/239).  Each arctangent is an
    alternating series summed with floor division, so each computed
    term is at most 1 ulp low and the dropped tail is below the first
    omitted term; the accumulated slack widens the bracket accordingly.
    """
    scale = 10**decimal_digits

    def atan_inv(x: int) -> tuple[int, int]:
        total, k, xpow, terms = 0, 0, x, 0
        while True:
            term = scale // ((2 * k + 1) * xpow)
            if term == 0:
                break
            total += -term if k & 1 else term
            xpow *= x * x
            k += 1
            terms += 1
        return total, terms

    a5, t5 = atan_inv(5)
    a239, t239 = atan_inv(239)
    value = 16 * a5 - 4 * a239
    slack = 16 * (t5 + 1) + 4 * (t239 + 1)
    return value - slack, value + slack, scale


def machin_pi_digits_base_P(n: int) -> tuple[int, ...]:
    """Base-P digits of frac(pi) recomputed independently of the embedded
    constant, with the same interval certification."""
    m = math.ceil(_DIGITS_PER_LIMB * (n + 2)) + 10
    lo, hi, scale = _machin_pi_bounds(m)
    lo_digits = _expand_base_p(lo - 3 * scale, scale, n)
    hi_digits = _expand_base_p(hi - 3 * scale, scale, n)
    if lo_digits != hi_digits:
        raise InsufficientPrecision(
            f"Machin bracket did not converge at {m} decimal digits"
        )
    return tuple(lo_digits)


@dataclass(frozen=True)
class HashCoefficients:
    """Per-prime hash coefficients c_p = floor(pi * P^{e_p}) mod P."""

    modulus: int
    primes: tuple[int, ...]
    coeffs: dict[int, int]


@functools.lru_cache(maxsize=1)
def hash_coefficients() -> HashCoefficients:
    primes = hash_primes()
    digits = pi_digits_base_P(len(primes))
    return HashCoefficients(
        modulus=MODULUS,
        primes=primes,
        coeffs={p: d for p, d in zip(primes, digits)},
    )


@functools.lru_cache(maxsize=None)
def _hash_positions(bound: int) -> tuple[int, ...]:
    idx = prime_index(bound)
    return tuple(idx[p] for p in hash_primes())


def twist_hash(traces: TraceTable) -> int:
    """h = sum c_p * |a_p| mod (2^61 - 1) over the hash prime range.

    Depends only on the trace magnitudes; raises IncompleteTable when
    the table does not cover every prime below 8192.
    """
    if traces.bound < HASH_RANGE[1]:
        raise IncompleteTable(
            f"twist hash needs traces up to {HASH_RANGE[1]}, table bound is {traces.bound}"
        )
    coeffs = hash_coefficients().coeffs
    values = traces.values
    h = 0
    for p, pos in zip(hash_primes(), _hash_positions(traces.bound)):
        a = values[pos]
        if a:
            h = _mod_mersenne(h + _mod_mersenne(coeffs[p] * abs(a)))
    return h


def twist_hash_of_curve(curve: CurveRecord) -> int:
    """Hash from the stored trace table when it reaches 8192, otherwise
    from a table built out of the Weierstrass coefficients."""
    if curve.traces is not None and curve.traces.bound >= HASH_RANGE[1]:
        return twist_hash(curve.traces)
    if curve.ainvs is not None:
        return twist_hash(build_trace_table(curve, HASH_RANGE[1]))
    raise MissingData(
        "twist hash needs a trace table reaching 8192 or Weierstrass coefficients"
    )
