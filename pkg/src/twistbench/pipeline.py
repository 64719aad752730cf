"""Dataset ingestion, filtering, deterministic splits, twist-class
deduplication, and the magnitude-partition sweep.

The on-disk record format is JSON Lines, one curve per line with fields
``label`` (optional string), ``conductor`` (integer), ``ainvs``
(optional array of 5 integers) and ``ap`` (optional array of traces
aligned to the ascending primes below the manifest's prime bound).  A
sidecar manifest carries the prime bound, the record count, the
ordering declaration and free-text provenance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .curves import CurveRecord, TraceTable, build_trace_table
from .errors import DatasetTooSmall, IngestError, MissingData, OrderingViolation
from .metrics import ari, entropy_scores, error_stats, restrict_multi_instance
from .primes import primes_below
from .twisthash import twist_hash_of_curve

ASCENDING_CONDUCTOR = "ascending_conductor"
PRIMES_100_DESC = tuple(reversed(primes_below(100)))


@dataclass
class DatasetManifest:
    prime_bound: Optional[int] = None
    record_count: Optional[int] = None
    ordering: str = ASCENDING_CONDUCTOR
    source: str = ""


def default_manifest_path(data_path) -> Path:
    return Path(str(data_path) + ".manifest.json")


def load_manifest(path) -> DatasetManifest:
    with open(path) as f:
        raw = json.load(f)
    return DatasetManifest(
        prime_bound=raw.get("prime_bound"),
        record_count=raw.get("record_count"),
        ordering=raw.get("ordering", ASCENDING_CONDUCTOR),
        source=raw.get("source", ""),
    )


def save_manifest(manifest: DatasetManifest, path) -> None:
    payload = {
        "prime_bound": manifest.prime_bound,
        "record_count": manifest.record_count,
        "ordering": manifest.ordering,
        "source": manifest.source,
    }
    with open(path, "w") as f:
        json.dump(payload, f, indent=2)
        f.write("\n")


def _record_from_json(raw: dict, prime_bound: Optional[int]) -> CurveRecord:
    label = raw.get("label")
    conductor = raw.get("conductor")
    ainvs = raw.get("ainvs")
    ap = raw.get("ap")
    if conductor is None:
        raise ValueError("missing conductor")
    traces = None
    if ap is not None:
        if prime_bound is None:
            raise ValueError("record carries traces but no prime bound is declared")
        traces = TraceTable(bound=prime_bound, values=tuple(ap))
    rec = CurveRecord(
        conductor=conductor,
        label=label,
        ainvs=tuple(ainvs) if ainvs is not None else None,
        traces=traces,
    )
    rec.validate()
    return rec


def ingest(path, manifest=None, check_ordering: bool = False) -> list[CurveRecord]:
    """Read and validate a JSONL curve file.

    ``manifest`` may be a DatasetManifest, a path to one, or None to
    look for the default sidecar.  Every parse or invariant failure
    raises IngestError pointing at the offending line.
    """
    if manifest is None:
        sidecar = default_manifest_path(path)
        manifest = load_manifest(sidecar) if sidecar.exists() else DatasetManifest()
    elif not isinstance(manifest, DatasetManifest):
        manifest = load_manifest(manifest)

    records: list[CurveRecord] = []
    with open(path) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            raw = None
            try:
                raw = json.loads(line)
                rec = _record_from_json(raw, manifest.prime_bound)
            except (ValueError, TypeError) as exc:
                label = f" (curve {raw['label']})" if isinstance(raw, dict) and raw.get("label") else ""
                raise IngestError(f"{path}, line {lineno}{label}: {exc}") from exc
            records.append(rec)

    if manifest.record_count is not None and manifest.record_count != len(records):
        raise IngestError(
            f"{path}: manifest declares {manifest.record_count} records, found {len(records)}"
        )
    if check_ordering:
        _check_ascending(records)
    return records


def _check_ascending(records: Sequence[CurveRecord]) -> None:
    for i in range(1, len(records)):
        if records[i].conductor < records[i - 1].conductor:
            raise OrderingViolation(
                f"conductor decreases at position {i}: "
                f"{records[i - 1].conductor} then {records[i].conductor}"
            )


def record_to_json(rec: CurveRecord) -> dict:
    raw: dict = {}
    if rec.label is not None:
        raw["label"] = rec.label
    raw["conductor"] = rec.conductor
    if rec.ainvs is not None:
        raw["ainvs"] = list(rec.ainvs)
    if rec.traces is not None:
        raw["ap"] = list(rec.traces.values)
    return raw


def export_jsonl(records: Sequence[CurveRecord], path, source: str = "") -> DatasetManifest:
    """Write records (and the sidecar manifest) so that a re-ingest
    reproduces every field exactly.  Trace-bearing records must share
    one bound."""
    bounds = {rec.traces.bound for rec in records if rec.traces is not None}
    if len(bounds) > 1:
        raise ValueError(f"records carry mixed trace bounds {sorted(bounds)}")
    with open(path, "w") as f:
        for rec in records:
            f.write(json.dumps(record_to_json(rec), separators=(",", ":")))
            f.write("\n")
    manifest = DatasetManifest(
        prime_bound=bounds.pop() if bounds else None,
        record_count=len(records),
        source=source,
    )
    save_manifest(manifest, default_manifest_path(path))
    return manifest


def good_reduction_filter(records: Iterable[CurveRecord], p: int) -> list[CurveRecord]:
    """Exactly the records whose conductor p does not divide."""
    return [rec for rec in records if rec.conductor % p != 0]


def ensure_traces(records: Sequence[CurveRecord], bound: int = 100) -> list[CurveRecord]:
    """Records guaranteed to carry trace tables reaching ``bound``,
    building them from Weierstrass coefficients where needed."""
    out = []
    for rec in records:
        if rec.traces is not None and rec.traces.bound >= bound:
            out.append(rec)
        elif rec.ainvs is not None:
            out.append(
                CurveRecord(
                    conductor=rec.conductor,
                    label=rec.label,
                    ainvs=rec.ainvs,
                    traces=build_trace_table(rec, bound),
                )
            )
        else:
            raise MissingData(
                f"curve {rec.label or '?'} has neither traces up to {bound} nor an equation"
            )
    return out


def seeded_permutation(n: int, seed: int) -> np.ndarray:
    """The deterministic shuffle used for every split in this package."""
    return np.random.default_rng(seed).permutation(n)


@dataclass
class SplitSpec:
    """Seeded split parameters plus the realized index lists, so any run
    can be replayed exactly without re-deriving the permutation."""

    seed: int
    test_size: int
    train_indices: Optional[list[int]] = None
    test_indices: Optional[list[int]] = None


def split(
    records: Sequence[CurveRecord], spec: SplitSpec, sidecar_path=None
) -> tuple[list[CurveRecord], list[CurveRecord]]:
    """Shuffle deterministically from the seed and reserve the last
    ``test_size`` records as the test set.

    When the spec already carries index lists they are replayed
    verbatim; otherwise the lists are generated and stored on the spec
    (and written to ``sidecar_path`` when given).
    """
    if len(records) <= spec.test_size:
        raise DatasetTooSmall(
            f"{len(records)} records cannot support test_size {spec.test_size}"
        )
    if spec.train_indices is None or spec.test_indices is None:
        perm = seeded_permutation(len(records), spec.seed)
        spec.train_indices = [int(i) for i in perm[: -spec.test_size]]
        spec.test_indices = [int(i) for i in perm[-spec.test_size :]]
    if sidecar_path is not None:
        save_split(spec, sidecar_path)
    train = [records[i] for i in spec.train_indices]
    test = [records[i] for i in spec.test_indices]
    return train, test


def save_split(spec: SplitSpec, path) -> None:
    with open(path, "w") as f:
        json.dump(
            {
                "seed": spec.seed,
                "test_size": spec.test_size,
                "train_indices": spec.train_indices,
                "test_indices": spec.test_indices,
            },
            f,
        )
        f.write("\n")


def load_split(path) -> SplitSpec:
    with open(path) as f:
        raw = json.load(f)
    return SplitSpec(
        seed=raw["seed"],
        test_size=raw["test_size"],
        train_indices=raw["train_indices"],
        test_indices=raw["test_indices"],
    )


@dataclass
class TwistClassRepresentative:
    """One kept record per twist hash: the first occurrence in
    ascending-conductor order."""

    label: Optional[str]
    conductor: int
    twist_hash: int
    traces: TraceTable


def dedup_by_hash(
    records: Sequence[CurveRecord], max_conductor: int, trace_bound: int = 8192
) -> list[TwistClassRepresentative]:
    """One representative per twist hash among records with conductor
    below ``max_conductor``.

    Records must arrive ascending by conductor (OrderingViolation
    otherwise); the first record of each hash is the one kept, so each
    representative has minimal conductor in its class.  Kept records
    carry trace tables reaching ``trace_bound`` (at least 8192 so the
    hash is always recomputable; 10^4 reproduces the published
    1229-trace shape), built from the equation where the stored table
    falls short.
    """
    if trace_bound < 8192:
        raise ValueError("trace_bound below 8192 would lose the hash range")
    seen: set[int] = set()
    kept: list[TwistClassRepresentative] = []
    previous = None
    for i, rec in enumerate(records):
        if previous is not None and rec.conductor < previous:
            raise OrderingViolation(
                f"conductor decreases at position {i}: {previous} then {rec.conductor}"
            )
        previous = rec.conductor
        if rec.conductor >= max_conductor:
            continue
        h = twist_hash_of_curve(rec)
        if h in seen:
            continue
        seen.add(h)
        if rec.traces is not None and rec.traces.bound >= trace_bound:
            traces = rec.traces
        else:
            traces = build_trace_table(rec, trace_bound)
        kept.append(
            TwistClassRepresentative(
                label=rec.label, conductor=rec.conductor, twist_hash=h, traces=traces
            )
        )
    return kept


def magnitude_key(traces: TraceTable, k: int, order: str) -> tuple[int, ...]:
    """|a_p| tuple at the k largest (or smallest) primes below 100,
    ascending in prime."""
    if order == "largest":
        chosen = PRIMES_100_DESC[:k]
    elif order == "smallest":
        chosen = primes_below(100)[:k]
    else:
        raise ValueError(f"order must be 'largest' or 'smallest', got {order!r}")
    return tuple(abs(traces.ap(q)) for q in sorted(chosen))


def twist_hash_partition(records: Sequence[CurveRecord]) -> dict[int, int]:
    """item index -> twist hash, the reference partition for the sweep."""
    return {i: twist_hash_of_curve(rec) for i, rec in enumerate(records)}


@dataclass
class SweepRow:
    k: int
    order: str
    ari: float
    homogeneity: float
    completeness: float
    v_measure: float
    multi_instance_ari: Optional[float]
    multi_instance_count: int


def sweep_k(
    records: Sequence[CurveRecord],
    truth: dict,
    k_values: Iterable[int],
    order: str = "largest",
) -> list[SweepRow]:
    """Score the magnitude-tuple partition against the twist-hash
    partition for each k, including the ARI restricted to items whose
    true class has at least two members (None when that subset has
    fewer than 2 items)."""
    rows = []
    for k in k_values:
        pred = {i: magnitude_key(rec.traces, k, order) for i, rec in enumerate(records)}
        h, c, v = entropy_scores(truth, pred)
        t_multi, p_multi = restrict_multi_instance(truth, pred)
        multi = ari(t_multi, p_multi) if len(t_multi) >= 2 else None
        rows.append(
            SweepRow(
                k=k,
                order=order,
                ari=ari(truth, pred),
                homogeneity=h,
                completeness=c,
                v_measure=v,
                multi_instance_ari=multi,
                multi_instance_count=len(t_multi),
            )
        )
    return rows


@dataclass(frozen=True)
class ProximityStats:
    """Closeness of two per-prime MCC profiles: MAE, RMSE, the largest
    magnitude among the signed differences (b - a), and their mean."""

    mae: float
    rmse: float
    max_diff: float
    mean_diff: float


def proxy_proximity_report(
    per_prime_mcc_twist: Sequence[float], per_prime_mcc_proxy: Sequence[float]
) -> ProximityStats:
    if len(per_prime_mcc_twist) != len(per_prime_mcc_proxy) or not per_prime_mcc_twist:
        raise ValueError("profiles must cover the same primes")
    mae, rmse = error_stats(per_prime_mcc_twist, per_prime_mcc_proxy)
    diffs = [b - a for a, b in zip(per_prime_mcc_twist, per_prime_mcc_proxy)]
    return ProximityStats(
        mae=mae,
        rmse=rmse,
        max_diff=max(abs(d) for d in diffs),
        mean_diff=sum(diffs) / len(diffs),
    )
