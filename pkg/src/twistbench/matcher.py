"""Sign-based twist-class matching classifiers for predicting a_p(E).

Curves are grouped by a key that is blind to trace signs: either the
twist hash, or a proxy tuple of trace magnitudes at the k largest
primes below 100.  Within each key class, every unordered pair of
distinct training curves contributes (relative sign pattern at the 24
non-target primes, relative sign at the target prime) to a lookup
structure; a test curve matched against its key class retrieves those
histograms, converts relative signs into candidate trace values via
each matched curve's known a_p, and takes the majority vote.

The flat pair list is stored compressed as a pattern -> sign-histogram
map; the compression is lossless for everything the vote consumes, and
the test suite checks prediction-level equivalence against a naive
flat-list reference.

Fallbacks (all sampled from a per-curve random stream keyed by the run
seed and the curve's position, so serial and parallel runs agree):
an unseen key samples from the training marginal of a_p; a matched key
whose patterns never hit the lookup samples from the key class's own
a_p distribution; a tied vote samples from the tied candidates weighted
by the training marginal (uniformly if the marginal gives them all
zero mass).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .curves import CurveRecord, TraceTable
from .errors import DatasetTooSmall, EmptyTraining
from .metrics import mcc_from_labels
from .pipeline import good_reduction_filter, seeded_permutation
from .primes import primes_below
from .twisthash import twist_hash_of_curve

PRIMES_100 = primes_below(100)  # the 25 primes 2, 3, ..., 97

DETERMINISTIC_VOTE = "deterministic_vote"
TIE_SAMPLED = "tie_sampled"
CLASS_DISTRIBUTION_FALLBACK = "class_distribution_fallback"
GLOBAL_FALLBACK = "global_fallback"
PROVENANCES = (DETERMINISTIC_VOTE, TIE_SAMPLED, CLASS_DISTRIBUTION_FALLBACK, GLOBAL_FALLBACK)


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def sign_vector(traces: TraceTable, p: int) -> tuple[int, ...]:
    """Signs of a_q for the 24 primes q < 100, q != p, ascending in q."""
    if traces.bound < 100:
        raise ValueError(f"sign vector needs traces for all primes below 100, bound is {traces.bound}")
    if p not in PRIMES_100:
        raise ValueError(f"target must be a prime below 100, got {p}")
    return tuple(sgn(traces.ap(q)) for q in PRIMES_100 if q != p)


def relative_pattern(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """Pointwise product of two sign vectors."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class EmpiricalDistribution:
    """Observed frequencies of an integer quantity, sampled exactly by
    integer count (no floating-point normalization enters the draw)."""

    support: tuple[int, ...]
    counts: tuple[int, ...]

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "EmpiricalDistribution":
        if len(values) == 0:
            raise EmptyTraining("empirical distribution over zero values")
        c = Counter(values)
        support = tuple(sorted(c))
        return cls(support=support, counts=tuple(c[v] for v in support))

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def weights(self) -> tuple[float, ...]:
        t = self.total
        return tuple(c / t for c in self.counts)

    def count_of(self, value: int) -> int:
        try:
            return self.counts[self.support.index(value)]
        except ValueError:
            return 0

    def sample(self, rng: np.random.Generator) -> int:
        r = int(rng.integers(0, self.total))
        for v, c in zip(self.support, self.counts):
            r -= c
            if r < 0:
                return v
        raise AssertionError("unreachable")

    def sample_array(self, rng: np.random.Generator, size: int) -> np.ndarray:
        cum = np.cumsum(self.counts)
        r = rng.integers(0, self.total, size=size)
        idx = np.searchsorted(cum, r, side="right")
        return np.asarray(self.support, dtype=np.int64)[idx]


def empirical_distribution(training: Sequence[CurveRecord], p: int) -> EmpiricalDistribution:
    """Normalized frequency table of a_p over the training curves."""
    if len(training) == 0:
        raise EmptyTraining(f"no training curves for p = {p}")
    return EmpiricalDistribution.from_values([rec.traces.ap(p) for rec in training])


def proxy_key(traces: TraceTable, k: int, p: int) -> tuple[int, ...]:
    """Trace magnitudes at the k largest primes below 100, the target
    prime excluded (the next-largest prime is pulled in so the key keeps
    k entries), ascending in prime."""
    if not 1 <= k <= len(PRIMES_100) - 1:
        raise ValueError(f"k must be in [1, {len(PRIMES_100) - 1}], got {k}")
    chosen = [q for q in reversed(PRIMES_100) if q != p][:k]
    return tuple(abs(traces.ap(q)) for q in sorted(chosen))


def twist_hash_key(curve: CurveRecord) -> int:
    return twist_hash_of_curve(curve)


def make_key_fn(key_mode: str, k: int, p: int) -> Callable[[CurveRecord], object]:
    if key_mode == "twist-hash":
        return twist_hash_key
    if key_mode == "proxy":
        return lambda rec: proxy_key(rec.traces, k, p)
    raise ValueError(f"unknown key mode {key_mode!r} (expected 'twist-hash' or 'proxy')")


@dataclass
class TrainingIndex:
    """Training curves grouped by key, with sign vectors and target
    traces cached for pair enumeration and prediction."""

    target_prime: int
    records: list[CurveRecord]
    key_fn: Callable[[CurveRecord], object]
    keys: list
    sign_vectors: list[tuple[int, ...]]
    ap_values: list[int]
    groups: dict


def prepare_training(
    training: Sequence[CurveRecord],
    key_fn: Callable[[CurveRecord], object],
    p: int,
) -> TrainingIndex:
    records = list(training)
    keys = [key_fn(rec) for rec in records]
    groups: dict = {}
    for i, key in enumerate(keys):
        groups.setdefault(key, []).append(i)
    return TrainingIndex(
        target_prime=p,
        records=records,
        key_fn=key_fn,
        keys=keys,
        sign_vectors=[sign_vector(rec.traces, p) for rec in records],
        ap_values=[rec.traces.ap(p) for rec in records],
        groups=groups,
    )


@dataclass
class SignIndex:
    """Compressed lookup: relative sign pattern -> histogram of relative
    target signs over all same-key unordered training pairs."""

    target_prime: int
    table: dict[tuple[int, ...], dict[int, int]]
    pair_count: int


def build_index(
    training,
    key_fn: Optional[Callable[[CurveRecord], object]] = None,
    p: Optional[int] = None,
    max_pairs_per_class: Optional[int] = None,
) -> SignIndex:
    """Index every unordered pair of distinct training curves sharing a
    key.

    ``training`` is either the curve sequence (with ``key_fn`` and
    ``p``) or an already prepared TrainingIndex.  ``max_pairs_per_class``
    caps the pairs enumerated per key class (in deterministic order) as
    a safety valve for very large classes; leave None for exactness.
    """
    if isinstance(training, TrainingIndex):
        prep = training
    else:
        if key_fn is None or p is None:
            raise ValueError("key_fn and p are required when passing raw records")
        prep = prepare_training(training, key_fn, p)
    table: dict[tuple[int, ...], dict[int, int]] = {}
    pair_count = 0
    for members in prep.groups.values():
        if len(members) < 2:
            continue
        budget = max_pairs_per_class
        for a_pos in range(len(members) - 1):
            i = members[a_pos]
            sv_i = prep.sign_vectors[i]
            s_i = sgn(prep.ap_values[i])
            for b_pos in range(a_pos + 1, len(members)):
                if budget is not None:
                    if budget == 0:
                        break
                    budget -= 1
                j = members[b_pos]
                pattern = relative_pattern(sv_i, prep.sign_vectors[j])
                rel = s_i * sgn(prep.ap_values[j])
                hist = table.setdefault(pattern, {})
                hist[rel] = hist.get(rel, 0) + 1
                pair_count += 1
            if budget == 0:
                break
    return SignIndex(target_prime=prep.target_prime, table=table, pair_count=pair_count)


@dataclass
class PredictionRecord:
    label: Optional[str]
    prime: int
    predicted: int
    true: Optional[int]
    provenance: str


def _sample_tied(tied: list[int], dist: EmpiricalDistribution, rng: np.random.Generator) -> int:
    # renormalize the training marginal over the tied candidates; if it
    # gives them all zero mass, fall back to uniform
    weights = [dist.count_of(c) for c in tied]
    total = sum(weights)
    if total == 0:
        return tied[int(rng.integers(0, len(tied)))]
    r = int(rng.integers(0, total))
    for value, w in zip(tied, weights):
        r -= w
        if r < 0:
            return value
    raise AssertionError("unreachable")


def predict(
    test_curve: CurveRecord,
    training: TrainingIndex,
    index: SignIndex,
    dist: EmpiricalDistribution,
    rng_seed,
) -> PredictionRecord:
    """Predict a_p for one test curve.

    The random stream derived from ``rng_seed`` is touched only on the
    sampled paths, never on a deterministic vote.
    """
    p = training.target_prime
    true = None
    if test_curve.traces is not None and test_curve.traces.bound > p:
        true = test_curve.traces.ap(p)

    key = training.key_fn(test_curve)
    members = training.groups.get(key)
    if not members:
        rng = np.random.default_rng(rng_seed)
        return PredictionRecord(test_curve.label, p, dist.sample(rng), true, GLOBAL_FALLBACK)

    sv_test = sign_vector(test_curve.traces, p)
    votes: dict[int, int] = {}
    for i in members:
        hist = index.table.get(relative_pattern(sv_test, training.sign_vectors[i]))
        if hist:
            a_i = training.ap_values[i]
            for rel, count in hist.items():
                candidate = rel * a_i
                votes[candidate] = votes.get(candidate, 0) + count

    if not votes:
        rng = np.random.default_rng(rng_seed)
        class_dist = EmpiricalDistribution.from_values([training.ap_values[i] for i in members])
        return PredictionRecord(
            test_curve.label, p, class_dist.sample(rng), true, CLASS_DISTRIBUTION_FALLBACK
        )

    best = max(votes.values())
    tied = sorted(v for v, c in votes.items() if c == best)
    if len(tied) == 1:
        return PredictionRecord(test_curve.label, p, tied[0], true, DETERMINISTIC_VOTE)
    rng = np.random.default_rng(rng_seed)
    return PredictionRecord(test_curve.label, p, _sample_tied(tied, dist, rng), true, TIE_SAMPLED)


@dataclass
class ExperimentReport:
    """One summary row of a prediction experiment."""

    prime: int
    key_mode: str
    k: Optional[int]
    seed: int
    test_size: int
    good_count: int
    probabilistic_count: int
    correct_count: int
    deterministic_mcc: float
    overall_mcc: float


def evaluate_predictions(preds: Sequence[PredictionRecord]) -> tuple[int, int, float, float]:
    """(probabilistic count, correct count, deterministic-subset MCC,
    overall MCC) over predictions that carry true values.

    An empty deterministic subset scores 0 by the degenerate-MCC
    convention.
    """
    probabilistic = sum(1 for r in preds if r.provenance != DETERMINISTIC_VOTE)
    scored = [r for r in preds if r.true is not None]
    correct = sum(1 for r in scored if r.predicted == r.true)
    det = [r for r in scored if r.provenance == DETERMINISTIC_VOTE]
    det_mcc = mcc_from_labels([r.true for r in det], [r.predicted for r in det]) if det else 0.0
    overall_mcc = (
        mcc_from_labels([r.true for r in scored], [r.predicted for r in scored]) if scored else 0.0
    )
    return probabilistic, correct, det_mcc, overall_mcc


def run_experiment(
    dataset: Sequence[CurveRecord],
    p: int,
    key_mode: str,
    test_size: int,
    seed: int,
    k: int = 8,
    max_pairs_per_class: Optional[int] = None,
    key_fn: Optional[Callable[[CurveRecord], object]] = None,
) -> tuple[list[PredictionRecord], ExperimentReport]:
    """Filter to good reduction at p, shuffle deterministically from the
    seed, hold out the last ``test_size`` curves, train on the rest and
    predict every held-out curve.

    Each test curve draws from its own random stream keyed by
    (seed, position in the test set), so results do not depend on
    evaluation order.  ``key_fn`` overrides the keying implied by
    ``key_mode`` (e.g. a lookup of precomputed hashes on large runs);
    the report still records ``key_mode``.
    """
    good = good_reduction_filter(dataset, p)
    if len(good) < test_size + 2:
        raise DatasetTooSmall(
            f"{len(good)} curves of good reduction at {p} cannot support test_size {test_size}"
        )
    perm = seeded_permutation(len(good), seed)
    shuffled = [good[i] for i in perm]
    train, test = shuffled[:-test_size], shuffled[-test_size:]

    if key_fn is None:
        key_fn = make_key_fn(key_mode, k, p)
    dist = empirical_distribution(train, p)
    prep = prepare_training(train, key_fn, p)
    index = build_index(prep, max_pairs_per_class=max_pairs_per_class)

    preds = [predict(rec, prep, index, dist, rng_seed=[seed, i]) for i, rec in enumerate(test)]
    probabilistic, correct, det_mcc, overall_mcc = evaluate_predictions(preds)
    report = ExperimentReport(
        prime=p,
        key_mode=key_mode,
        k=k if key_mode == "proxy" else None,
        seed=seed,
        test_size=test_size,
        good_count=len(good),
        probabilistic_count=probabilistic,
        correct_count=correct,
        deterministic_mcc=det_mcc,
        overall_mcc=overall_mcc,
    )
    return preds, report
