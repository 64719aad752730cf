import numpy as np
import pytest

from twistbench.curves import CurveRecord, TraceTable, build_trace_table, quadratic_twist
from twistbench.errors import IncompleteTable, InsufficientPrecision, MissingData
from twistbench.primes import primes_below
from twistbench.twisthash import (
    HASH_RANGE,
    MODULUS,
    _int_from_decimal,
    _mod_mersenne,
    hash_coefficients,
    hash_primes,
    machin_pi_digits_base_P,
    pi_digits_base_P,
    twist_hash,
    twist_hash_of_curve,
)

from conftest import fixture_curves, prime_factors, synthetic_families


def test_hash_prime_range_endpoints():
    primes = hash_primes()
    assert primes[0] == 4099  # first prime above 2^12
    assert primes[-1] == 8191  # 2^13 - 1, itself prime
    assert all(4096 < p < 8192 for p in primes)
    assert list(primes) == sorted(primes)


def test_mersenne_reduction_matches_mod():
    rng = np.random.default_rng(0)
    for _ in range(500):
        x = int(rng.integers(0, 1 << 62)) * int(rng.integers(0, 1 << 61))
        assert _mod_mersenne(x) == x % MODULUS
    assert _mod_mersenne(MODULUS) == 0
    assert _mod_mersenne(0) == 0


def test_chunked_decimal_parse():
    assert _int_from_decimal("00123") == 123
    digits = "".join(str(i % 10) for i in range(9000))
    import sys

    old = sys.get_int_max_str_digits()
    try:
        sys.set_int_max_str_digits(20000)
        assert _int_from_decimal(digits) == int(digits)
    finally:
        sys.set_int_max_str_digits(old)


def test_pi_digits_deterministic_and_in_range():
    a = pi_digits_base_P(40)
    b = pi_digits_base_P(40)
    assert a == b
    assert all(0 <= d < MODULUS for d in a)


def test_pi_digits_prefix_stability():
    assert pi_digits_base_P(50)[:10] == pi_digits_base_P(10)


def reconstruction_gap_bound(n: int) -> bool:
    """Exact check that 3 + sum_{i<=n} d_i P^-i sits in [pi - P^-n, pi]."""
    digits = pi_digits_base_P(n)
    recon_num = 3 * MODULUS**n + sum(
        d * MODULUS ** (n - 1 - i) for i, d in enumerate(digits)
    )
    from twistbench._pidata import PI_FRACTIONAL_DIGITS

    scale = 10 ** len(PI_FRACTIONAL_DIGITS)
    pi_lo = 3 * scale + _int_from_decimal(PI_FRACTIONAL_DIGITS)  # pi_lo/scale <= pi
    pi_hi = pi_lo + 1  # pi < pi_hi/scale
    below_pi = recon_num * scale <= pi_lo * MODULUS**n
    gap_small = pi_hi * MODULUS**n - recon_num * scale < scale  # pi - recon < P^-n
    return below_pi and gap_small


def test_pi_digit_reconstruction_bound():
    assert reconstruction_gap_bound(20)


def test_pi_digits_insufficient_precision():
    with pytest.raises(InsufficientPrecision):
        pi_digits_base_P(40, decimal_digits="1415926535")


def test_pi_digits_precondition_cap():
    cap = len(hash_primes()) + 8
    with pytest.raises(ValueError):
        pi_digits_base_P(cap + 1)
    with pytest.raises(ValueError):
        pi_digits_base_P(0)


def test_machin_agrees_with_embedded_constant():
    n = 48
    assert machin_pi_digits_base_P(n) == pi_digits_base_P(n)


def test_coefficient_assignment():
    coeffs = hash_coefficients()
    digits = pi_digits_base_P(len(coeffs.primes))
    assert coeffs.primes[0] == 4099 and coeffs.coeffs[4099] == digits[0]
    assert coeffs.primes[-1] == 8191 and coeffs.coeffs[8191] == digits[-1]
    assert all(0 <= c < MODULUS for c in coeffs.coeffs.values())


def _table_with(bound, pairs):
    plist = primes_below(bound)
    values = [0] * len(plist)
    idx = {p: i for i, p in enumerate(plist)}
    for p, v in pairs:
        values[idx[p]] = v
    return TraceTable(bound=bound, values=tuple(values))


def test_zero_table_hashes_to_zero():
    assert twist_hash(_table_with(8192, [])) == 0


def test_single_entry_hash_is_its_coefficient():
    t = _table_with(8192, [(4099, 1)])
    assert twist_hash(t) == hash_coefficients().coeffs[4099]
    t = _table_with(8192, [(4099, -1)])
    assert twist_hash(t) == hash_coefficients().coeffs[4099]


def test_incomplete_table_rejected():
    with pytest.raises(IncompleteTable):
        twist_hash(_table_with(8191, []))


def test_sign_flips_never_change_hash():
    rng = np.random.default_rng(3)
    recs = synthetic_families(seed=11, family_sizes=[1] * 6, bound=8192)
    for rec in recs:
        h = twist_hash(rec.traces)
        values = list(rec.traces.values)
        for _ in range(5):
            mask = rng.integers(0, 2, size=len(values)).astype(bool)
            flipped = tuple(-v if m else v for v, m in zip(values, mask))
            assert twist_hash(TraceTable(bound=8192, values=flipped)) == h


def test_hash_range_and_twist_invariance_on_equations():
    base = [
        rec
        for rec in fixture_curves()
        if not any(4096 < q < 8192 for q in prime_factors(rec.conductor))
    ][:6]
    for rec in base:
        h = twist_hash_of_curve(rec)
        assert 0 <= h < MODULUS
        for d in (-1, 3, 10):
            tw = quadratic_twist(rec, d)
            assert twist_hash_of_curve(tw) == h, (rec.label, d)


def test_curve_hash_prefers_stored_table():
    rec = CurveRecord(conductor=11, ainvs=(0, -1, 1, -10, -20))
    table = build_trace_table(rec, 8192)
    stored = CurveRecord(conductor=11, ainvs=rec.ainvs, traces=table)
    assert twist_hash_of_curve(stored) == twist_hash(table)
    # equation-only record must agree with the freshly built table
    assert twist_hash_of_curve(rec) == twist_hash(table)
    # isogeny-class mates share trace tables hence hashes
    mate = CurveRecord(conductor=11, label="mate", traces=table)
    assert twist_hash_of_curve(mate) == twist_hash(table)


def test_curve_hash_requires_data():
    with pytest.raises(MissingData):
        twist_hash_of_curve(CurveRecord(conductor=11, traces=_table_with(100, [])))
