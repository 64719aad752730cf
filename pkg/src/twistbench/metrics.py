"""Evaluation metrics: MCC (binary and multiclass), clustering agreement
(ARI, homogeneity, completeness, V-measure), error statistics, model
disagreement, modular-reduction scoring, and the training-marginal null
significance test.

Degenerate inputs take fixed conventions rather than returning NaN:
MCC is 0 whenever a marginal factor of its denominator vanishes, and
ARI on a pair of trivial partitions is 1 when they describe the same
grouping and 0 otherwise.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np


@dataclass(frozen=True)
class ConfusionMatrix:
    """counts[k][l] = number of items with true class k predicted as l,
    with classes listed in sorted order."""

    classes: tuple
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def confusion_matrix(y_true: Sequence, y_pred: Sequence) -> ConfusionMatrix:
    if len(y_true) != len(y_pred):
        raise ValueError(f"length mismatch: {len(y_true)} vs {len(y_pred)}")
    if len(y_true) == 0:
        raise ValueError("cannot build a confusion matrix from zero items")
    classes = tuple(sorted(set(y_true) | set(y_pred)))
    index = {c: i for i, c in enumerate(classes)}
    k = len(classes)
    ti = np.fromiter((index[v] for v in y_true), dtype=np.int64, count=len(y_true))
    pi = np.fromiter((index[v] for v in y_pred), dtype=np.int64, count=len(y_pred))
    counts = np.bincount(ti * k + pi, minlength=k * k).reshape(k, k)
    return ConfusionMatrix(classes=classes, counts=counts)


def mcc_binary(cm: ConfusionMatrix) -> float:
    """Matthews correlation coefficient of a 2x2 confusion matrix;
    0 when any marginal factor of the denominator vanishes."""
    if cm.counts.shape != (2, 2):
        raise ValueError(f"binary MCC needs a 2x2 matrix, got {cm.counts.shape}")
    tn, fp, fn, tp = (int(v) for v in cm.counts.ravel())
    denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn)
    if denom == 0:
        return 0.0
    return (tp * tn - fp * fn) / math.sqrt(denom)


def mcc_multiclass(cm: ConfusionMatrix) -> float:
    """Multiclass MCC (Gorodkin); 0 on a vanishing denominator.

    Evaluated through the equivalent covariance form
    (c*s - sum t_k p_k) / sqrt(s^2 - sum p_k^2) / sqrt(s^2 - sum t_k^2)
    with exact integer arithmetic before the final division.
    """
    counts = cm.counts
    s = int(counts.sum())
    c = int(np.trace(counts))
    t = counts.sum(axis=1)  # true-class totals
    p = counts.sum(axis=0)  # predicted-class totals
    num = c * s - int(t @ p)
    d1 = s * s - int(p @ p)
    d2 = s * s - int(t @ t)
    if d1 == 0 or d2 == 0:
        return 0.0
    if num == d1 == d2:  # all predictions correct: exactly 1
        return 1.0
    prod = d1 * d2
    if prod < 2**52:
        return num / math.sqrt(prod)
    return num / (math.sqrt(d1) * math.sqrt(d2))


def mcc_from_labels(y_true: Sequence, y_pred: Sequence) -> float:
    return mcc_multiclass(confusion_matrix(y_true, y_pred))


def _check_same_items(a: Mapping, b: Mapping) -> list:
    items = list(a.keys())
    if len(items) != len(b) or any(i not in b for i in items):
        raise ValueError("partitions must cover the same item set")
    return items


def _contingency(a: Mapping, b: Mapping) -> tuple[Counter, Counter, Counter, int]:
    items = _check_same_items(a, b)
    joint = Counter((a[i], b[i]) for i in items)
    rows = Counter(a[i] for i in items)
    cols = Counter(b[i] for i in items)
    return joint, rows, cols, len(items)


def _same_grouping(a: Mapping, b: Mapping) -> bool:
    groups_a: dict = {}
    groups_b: dict = {}
    for i in a:
        groups_a.setdefault(a[i], set()).add(i)
        groups_b.setdefault(b[i], set()).add(i)
    return set(map(frozenset, groups_a.values())) == set(map(frozenset, groups_b.values()))


def ari(a: Mapping, b: Mapping) -> float:
    """Adjusted Rand Index between two partitions (item -> label maps).

    Chance-corrected pairwise agreement via the contingency table; the
    arithmetic is exact until the final division.  When both partitions
    are trivial (all singletons or a single cluster) the denominator
    vanishes and the convention is 1 for identical groupings, else 0.
    """
    joint, rows, cols, n = _contingency(a, b)
    if n < 2:
        raise ValueError("ARI needs at least 2 items")

    def comb2(x: int) -> int:
        return x * (x - 1) // 2

    sum_joint = sum(comb2(v) for v in joint.values())
    sum_a = sum(comb2(v) for v in rows.values())
    sum_b = sum(comb2(v) for v in cols.values())
    total = comb2(n)
    # scale numerator and denominator by 2*total to stay in integers
    num = 2 * (sum_joint * total - sum_a * sum_b)
    den = total * (sum_a + sum_b) - 2 * sum_a * sum_b
    if den == 0:
        return 1.0 if _same_grouping(a, b) else 0.0
    return num / den


def entropy_scores(truth: Mapping, pred: Mapping) -> tuple[float, float, float]:
    """(homogeneity, completeness, V-measure), natural-log entropies.

    h = 1 when H(C) = 0 and c = 1 when H(K) = 0; V is the harmonic mean
    of h and c, taken as 0 when h + c = 0.
    """
    joint, rows, cols, n = _contingency(truth, pred)

    def entropy(marginal: Counter) -> float:
        return -sum((v / n) * math.log(v / n) for v in marginal.values() if v)

    h_c = entropy(rows)
    h_k = entropy(cols)
    h_c_given_k = -sum(
        (v / n) * math.log(v / cols[kl]) for (_, kl), v in joint.items() if v
    )
    h_k_given_c = -sum(
        (v / n) * math.log(v / rows[cl]) for (cl, _), v in joint.items() if v
    )
    h = 1.0 if h_c == 0.0 else 1.0 - h_c_given_k / h_c
    c = 1.0 if h_k == 0.0 else 1.0 - h_k_given_c / h_k
    h = min(1.0, max(0.0, h))
    c = min(1.0, max(0.0, c))
    v = 0.0 if h + c == 0.0 else 2.0 * h * c / (h + c)
    return h, c, v


@dataclass(frozen=True)
class ClusterScores:
    ari: float
    homogeneity: float
    completeness: float
    v_measure: float


def cluster_scores(truth: Mapping, pred: Mapping) -> ClusterScores:
    h, c, v = entropy_scores(truth, pred)
    return ClusterScores(ari=ari(truth, pred), homogeneity=h, completeness=c, v_measure=v)


def restrict_multi_instance(truth: Mapping, pred: Mapping) -> tuple[dict, dict]:
    """Both partitions restricted to items whose truth class has size >= 2
    (may be empty; the caller decides what to do then)."""
    _check_same_items(truth, pred)
    sizes = Counter(truth.values())
    keep = [i for i in truth if sizes[truth[i]] >= 2]
    return {i: truth[i] for i in keep}, {i: pred[i] for i in keep}


def error_stats(y_true: Sequence[float], y_pred: Sequence[float]) -> tuple[float, float]:
    """(MAE, RMSE) over aligned sequences."""
    if len(y_true) != len(y_pred) or len(y_true) == 0:
        raise ValueError("error_stats needs equal nonzero lengths")
    diff = np.asarray(y_pred, dtype=float) - np.asarray(y_true, dtype=float)
    return float(np.abs(diff).mean()), float(math.sqrt((diff * diff).mean()))


def disagreement(pred_a: Sequence, pred_b: Sequence) -> float:
    """Fraction of positions where the two prediction vectors differ."""
    if len(pred_a) != len(pred_b) or len(pred_a) == 0:
        raise ValueError("disagreement needs equal nonzero lengths")
    mismatched = sum(1 for x, y in zip(pred_a, pred_b) if x != y)
    return mismatched / len(pred_a)


def agreement_breakdown(
    pred_a: Sequence, pred_b: Sequence, y_true: Sequence
) -> tuple[int, int, int, int]:
    """(both correct, A-only correct, B-only correct, both wrong) counts."""
    if not (len(pred_a) == len(pred_b) == len(y_true)) or len(y_true) == 0:
        raise ValueError("agreement_breakdown needs equal nonzero lengths")
    both = a_only = b_only = neither = 0
    for x, y, t in zip(pred_a, pred_b, y_true):
        ok_a, ok_b = x == t, y == t
        if ok_a and ok_b:
            both += 1
        elif ok_a:
            a_only += 1
        elif ok_b:
            b_only += 1
        else:
            neither += 1
    return both, a_only, b_only, neither


def mod_reduce_eval(y_true: Sequence[int], y_pred: Sequence[int], m: int) -> float:
    """Multiclass MCC after reducing both sequences modulo m (nonnegative
    residues)."""
    if len(y_true) != len(y_pred):
        raise ValueError("length mismatch")
    return mcc_from_labels([t % m for t in y_true], [p % m for p in y_pred])


def null_significance(
    y_true: Sequence[int],
    observed_mcc: float,
    train_dist,
    draws: int,
    seed: int,
) -> tuple[float, float]:
    """Training-marginal null baseline for an observed MCC.

    Each of ``draws`` null prediction vectors is sampled i.i.d. from
    ``train_dist`` (anything with a ``sample_array(rng, size)`` method)
    on its own derived random stream, and scored against ``y_true``.
    Returns (null mean, p-value) with the add-one estimator
    p = (1 + #{null MCC >= observed}) / (draws + 1), which never
    reports an exact zero.
    """
    if draws < 1:
        raise ValueError("draws must be >= 1")
    y = list(y_true)
    null_mccs = np.empty(draws)
    for i in range(draws):
        rng = np.random.default_rng([seed, i])
        sample = train_dist.sample_array(rng, len(y))
        null_mccs[i] = mcc_from_labels(y, sample.tolist())
    exceed = int((null_mccs >= observed_mcc).sum())
    return float(null_mccs.mean()), (1 + exceed) / (draws + 1)
