"""Command-line entry point.

Every subcommand writes CSV whose first lines are ``#`` comments
recording the tool version, the effective configuration, and a SHA-256
digest of each input file, so identical configuration plus identical
inputs reproduces byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import __version__, matcher, metrics, pipeline
from .curves import CurveRecord, build_trace_table, reduction_type, trace_of_frobenius
from .errors import TwistbenchError
from .matcher import DETERMINISTIC_VOTE
from .primes import primes_below
from .twisthash import twist_hash_of_curve

WORKERS_ENV = "TWISTBENCH_WORKERS"


def _sha256(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(1 << 16), b""):
            h.update(block)
    return h.hexdigest()


def _header_lines(config: str, inputs: Sequence[str]) -> list[str]:
    lines = [f"# twistbench {__version__}", f"# config: {config}"]
    lines += [f"# input {p} sha256={_sha256(p)}" for p in inputs]
    return lines


def _write_csv(path, header: Sequence[str], fieldnames: Sequence[str], rows) -> None:
    out = sys.stdout if path in (None, "-") else open(path, "w", newline="")
    try:
        for line in header:
            out.write(line + "\n")
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow(row)
    finally:
        if out is not sys.stdout:
            out.close()


def _read_pred_csv(path: str) -> tuple[dict, list[dict]]:
    """Prediction rows plus any ``key=value`` pairs found in the header
    comments."""
    meta: dict = {}
    rows: list[dict] = []
    with open(path) as f:
        data_lines = []
        for line in f:
            if line.startswith("#"):
                for token in line[1:].strip().split():
                    if "=" in token:
                        key, _, value = token.partition("=")
                        meta.setdefault(key, value)
                continue
            data_lines.append(line)
    for raw in csv.DictReader(data_lines):
        rows.append(
            {
                "label": raw["label"],
                "prime": int(raw["prime"]),
                "true": int(raw["true"]) if raw["true"] != "" else None,
                "predicted": int(raw["predicted"]),
                "provenance": raw["provenance"],
            }
        )
    return meta, rows


def _load_records(path: str, manifest: Optional[str]) -> list[CurveRecord]:
    return pipeline.ingest(path, manifest=manifest)


def _info(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _workers(args) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    return max(1, int(os.environ.get(WORKERS_ENV, "1")))


# ---------------------------------------------------------------- subcommands


def _cmd_ap(args) -> int:
    ainvs = tuple(int(t) for t in args.ainvs.split(","))
    config = (
        f"ap --ainvs {args.ainvs} --conductor {args.conductor} --bound {args.bound}"
    )
    rows = []
    for p in primes_below(args.bound):
        rt = reduction_type(ainvs, p, conductor=args.conductor)
        rows.append((p, trace_of_frobenius(ainvs, p, conductor=args.conductor), rt.value))
    _write_csv(args.out, _header_lines(config, []), ("prime", "ap", "reduction_type"), rows)
    return 0


def _hash_one(rec: CurveRecord) -> tuple[Optional[str], int, int]:
    return rec.label, rec.conductor, twist_hash_of_curve(rec)


def _cmd_hash(args) -> int:
    records = _load_records(args.input, args.manifest)
    workers = _workers(args)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_hash_one, records, chunksize=8))
    else:
        rows = [_hash_one(rec) for rec in records]
    config = f"hash --input {args.input}"
    _write_csv(
        args.output,
        _header_lines(config, [args.input]),
        ("label", "conductor", "hash"),
        [(label or "", conductor, h) for label, conductor, h in rows],
    )
    _info(args, f"hashed {len(rows)} curves")
    return 0


def _cmd_predict(args) -> int:
    train = pipeline.ensure_traces(_load_records(args.train, args.train_manifest))
    test = pipeline.ensure_traces(_load_records(args.test, args.test_manifest))
    p = args.prime
    train = pipeline.good_reduction_filter(train, p)
    test = pipeline.good_reduction_filter(test, p)
    key_fn = matcher.make_key_fn(args.key, args.k, p)
    dist = matcher.empirical_distribution(train, p)
    prep = matcher.prepare_training(train, key_fn, p)
    index = matcher.build_index(prep, max_pairs_per_class=args.max_pairs_per_class)
    preds = [
        matcher.predict(rec, prep, index, dist, rng_seed=[args.seed, i])
        for i, rec in enumerate(test)
    ]
    config = (
        f"predict --train {args.train} --test {args.test} --prime {p} "
        f"--key {args.key} --k {args.k} --seed {args.seed}"
    )
    header = _header_lines(config, [args.train, args.test])
    header.append(f"# good_count={len(train) + len(test)} train={len(train)} test={len(test)}")
    _write_csv(
        args.out,
        header,
        ("label", "prime", "true", "predicted", "provenance"),
        [
            (r.label or "", r.prime, "" if r.true is None else r.true, r.predicted, r.provenance)
            for r in preds
        ],
    )
    _info(args, f"predicted {len(preds)} curves at p={p}")
    return 0


def _metric_rows(args, rows_a, rows_b) -> list[tuple]:
    y_true = [r["true"] for r in rows_a]
    y_a = [r["predicted"] for r in rows_a]
    out: list[tuple] = []
    for name in args.metrics.split(","):
        name = name.strip()
        if name == "mcc":
            out.append(("mcc_overall", metrics.mcc_from_labels(y_true, y_a), ""))
            det = [r for r in rows_a if r["provenance"] == DETERMINISTIC_VOTE]
            if det:
                out.append(
                    (
                        "mcc_deterministic",
                        metrics.mcc_from_labels([r["true"] for r in det], [r["predicted"] for r in det]),
                        f"n={len(det)}",
                    )
                )
        elif name in ("mae", "rmse"):
            mae, rmse = metrics.error_stats(y_true, y_a)
            out.append((name, mae if name == "mae" else rmse, ""))
        elif name == "disagreement":
            if rows_b is None:
                raise TwistbenchError("disagreement needs --pred-b")
            y_b = [r["predicted"] for r in rows_b]
            out.append(("disagreement", metrics.disagreement(y_a, y_b), ""))
            both, a_only, b_only, neither = metrics.agreement_breakdown(y_a, y_b, y_true)
            out.append(
                (
                    "agreement_breakdown",
                    "",
                    f"both_correct={both} a_only={a_only} b_only={b_only} both_wrong={neither}",
                )
            )
        elif name in ("mod2", "mod3", "mod4"):
            m = int(name[3:])
            out.append((name, metrics.mod_reduce_eval(y_true, y_a, m), ""))
        elif name == "null":
            marginal = _train_marginal_values(args) or y_true
            # one row pair per task: the exact values plus any modular
            # reductions requested alongside
            tasks = [("exact", None)] + [
                (f"mod{m}", m)
                for m in (2, 3, 4)
                if f"mod{m}" in args.metrics
            ]
            for task, m in tasks:
                if m is None:
                    truth, pred, values = y_true, y_a, marginal
                else:
                    truth = [t % m for t in y_true]
                    pred = [v % m for v in y_a]
                    values = [v % m for v in marginal]
                dist = matcher.EmpiricalDistribution.from_values(values)
                observed = metrics.mcc_from_labels(truth, pred)
                null_mean, p_value = metrics.null_significance(
                    truth, observed, dist, draws=args.draws, seed=args.seed
                )
                out.append((f"null_{task}_mean", null_mean, f"draws={args.draws}"))
                out.append((f"null_{task}_p_value", p_value, f"observed_mcc={observed}"))
        else:
            raise TwistbenchError(f"unknown metric {name!r}")
    return out


def _train_marginal_values(args) -> Optional[list[int]]:
    if args.train is None:
        return None
    if args.prime is None:
        raise TwistbenchError("--train needs --prime to build the null marginal")
    train = pipeline.ensure_traces(_load_records(args.train, None))
    train = pipeline.good_reduction_filter(train, args.prime)
    return [rec.traces.ap(args.prime) for rec in train]


def _cmd_eval(args) -> int:
    _, rows_a = _read_pred_csv(args.pred)
    rows_b = None
    inputs = [args.pred]
    if args.pred_b:
        _, rows_b = _read_pred_csv(args.pred_b)
        if len(rows_b) != len(rows_a):
            raise TwistbenchError("prediction files cover different test sets")
        inputs.append(args.pred_b)
    rows = _metric_rows(args, rows_a, rows_b)
    config = f"eval --pred {args.pred}" + (f" --pred-b {args.pred_b}" if args.pred_b else "")
    config += f" --metrics {args.metrics} --draws {args.draws} --seed {args.seed}"
    if args.format == "markdown":
        out = sys.stdout if args.out in (None, "-") else open(args.out, "w")
        try:
            for line in _header_lines(config, inputs):
                out.write(line + "\n")
            out.write("| metric | value | detail |\n|---|---|---|\n")
            for name, value, detail in rows:
                out.write(f"| {name} | {value} | {detail} |\n")
        finally:
            if out is not sys.stdout:
                out.close()
    else:
        _write_csv(args.out, _header_lines(config, inputs), ("metric", "value", "detail"), rows)
    return 0


def _cmd_sweep_k(args) -> int:
    records = pipeline.ensure_traces(_load_records(args.input, args.manifest))
    truth = pipeline.twist_hash_partition(records)
    ks = list(range(args.k_min, args.k_max + 1))
    workers = _workers(args)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows_nested = list(
                pool.map(_sweep_worker, [(records, truth, k, args.order) for k in ks])
            )
        rows = [row for rows_k in rows_nested for row in rows_k]
    else:
        rows = pipeline.sweep_k(records, truth, ks, order=args.order)
    config = (
        f"sweep-k --input {args.input} --k-min {args.k_min} --k-max {args.k_max} "
        f"--order {args.order}"
    )
    _write_csv(
        args.out,
        _header_lines(config, [args.input]),
        (
            "k",
            "order",
            "ari",
            "homogeneity",
            "completeness",
            "v_measure",
            "multi_instance_ari",
            "multi_instance_count",
        ),
        [
            (
                r.k,
                r.order,
                r.ari,
                r.homogeneity,
                r.completeness,
                r.v_measure,
                "" if r.multi_instance_ari is None else r.multi_instance_ari,
                r.multi_instance_count,
            )
            for r in rows
        ],
    )
    return 0


def _sweep_worker(task) -> list:
    records, truth, k, order = task
    return pipeline.sweep_k(records, truth, [k], order=order)


def _cmd_dedup(args) -> int:
    records = _load_records(args.input, args.manifest)
    reps = pipeline.dedup_by_hash(
        records, max_conductor=args.max_conductor, trace_bound=args.trace_bound
    )
    config = (
        f"dedup --input {args.input} --max-conductor {args.max_conductor} "
        f"--trace-bound {args.trace_bound}"
    )
    _write_csv(
        args.output,
        _header_lines(config, [args.input]),
        ("label", "conductor", "hash", "ap"),
        [
            (r.label or "", r.conductor, r.twist_hash, " ".join(str(v) for v in r.traces.values))
            for r in reps
        ],
    )
    _info(args, f"kept {len(reps)} of {len(records)} records")
    return 0


def _cmd_split(args) -> int:
    records = _load_records(args.input, args.manifest)
    spec = pipeline.SplitSpec(seed=args.seed, test_size=args.test_size)
    train, test = pipeline.split(records, spec, sidecar_path=args.sidecar)
    pipeline.export_jsonl(train, args.out_train, source=f"split train of {args.input}")
    pipeline.export_jsonl(test, args.out_test, source=f"split test of {args.input}")
    _info(args, f"split {len(records)} records into {len(train)} train / {len(test)} test")
    return 0


def _cmd_ingest(args) -> int:
    records = _load_records(args.input, args.manifest)
    if args.check_ordering:
        pipeline.ingest(args.input, manifest=args.manifest, check_ordering=True)
    with_traces = sum(1 for r in records if r.traces is not None)
    with_ainvs = sum(1 for r in records if r.ainvs is not None)
    print(
        f"{args.input}: {len(records)} records "
        f"({with_traces} with traces, {with_ainvs} with equations)"
    )
    return 0


def _summary_row(prime: int, meta: dict, rows: list[dict]) -> tuple:
    det = [r for r in rows if r["provenance"] == DETERMINISTIC_VOTE]
    probabilistic = len(rows) - len(det)
    correct = sum(1 for r in rows if r["predicted"] == r["true"])
    det_mcc = (
        metrics.mcc_from_labels([r["true"] for r in det], [r["predicted"] for r in det])
        if det
        else 0.0
    )
    overall = metrics.mcc_from_labels(
        [r["true"] for r in rows], [r["predicted"] for r in rows]
    )
    return (
        prime,
        meta.get("good_count", ""),
        probabilistic,
        correct,
        det_mcc,
        overall,
    )


def _cmd_report(args) -> int:
    per_prime: dict[int, tuple[dict, list[dict]]] = {}
    for path in args.preds:
        meta, rows = _read_pred_csv(path)
        if not rows:
            raise TwistbenchError(f"{path}: no prediction rows")
        primes = {r["prime"] for r in rows}
        if len(primes) != 1:
            raise TwistbenchError(f"{path}: expected one prime per file, got {sorted(primes)}")
        per_prime[primes.pop()] = (meta, rows)

    config = "report --preds " + " ".join(args.preds)
    header = _header_lines(config, list(args.preds))
    summary_rows = [
        _summary_row(p, meta, rows) for p, (meta, rows) in sorted(per_prime.items())
    ]
    if args.out_summary:
        _write_csv(
            args.out_summary,
            header,
            (
                "prime",
                "good_count",
                "probabilistic_count",
                "correct_count",
                "deterministic_mcc",
                "overall_mcc",
            ),
            summary_rows,
        )
    if args.out_mcc:
        _write_csv(
            args.out_mcc,
            header,
            ("prime", "overall_mcc"),
            [(row[0], row[5]) for row in summary_rows],
        )
    if args.preds_b:
        other: dict[int, list[dict]] = {}
        for path in args.preds_b:
            _, rows = _read_pred_csv(path)
            other[rows[0]["prime"]] = rows
        disagreement_rows = []
        for p in sorted(per_prime):
            if p not in other:
                raise TwistbenchError(f"no --preds-b file for prime {p}")
            rows_a = per_prime[p][1]
            rows_b = other[p]
            y_true = [r["true"] for r in rows_a]
            y_a = [r["predicted"] for r in rows_a]
            y_b = [r["predicted"] for r in rows_b]
            both, a_only, b_only, neither = metrics.agreement_breakdown(y_a, y_b, y_true)
            disagreement_rows.append(
                (p, both, a_only, b_only, neither, 100.0 * metrics.disagreement(y_a, y_b))
            )
        if args.out_disagreement:
            _write_csv(
                args.out_disagreement,
                _header_lines(config + " --preds-b " + " ".join(args.preds_b), list(args.preds) + list(args.preds_b)),
                (
                    "prime",
                    "both_correct",
                    "a_correct_b_wrong",
                    "b_correct_a_wrong",
                    "both_wrong",
                    "disagreement_pct",
                ),
                disagreement_rows,
            )
    return 0


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistbench",
        description="Twist-class matching baselines and dataset tools for elliptic curve traces.",
    )
    parser.add_argument("--version", action="version", version=f"twistbench {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="suppress progress messages")
    common.add_argument(
        "--workers",
        type=int,
        default=None,
        help=f"worker processes (default: ${WORKERS_ENV} or 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ap", parents=[common], help="trace table of one curve as CSV")
    p.add_argument("--ainvs", required=True, help="a1,a2,a3,a4,a6")
    p.add_argument("--conductor", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_ap)

    p = sub.add_parser("hash", parents=[common], help="twist hashes of a curve file")
    p.add_argument("--input", required=True)
    p.add_argument("--manifest", default=None)
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_hash)

    p = sub.add_parser("predict", parents=[common], help="sign-matching predictions")
    p.add_argument("--train", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--train-manifest", default=None)
    p.add_argument("--test-manifest", default=None)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--key", choices=("twist-hash", "proxy"), default="twist-hash")
    p.add_argument("--k", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-pairs-per-class", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("eval", parents=[common], help="score prediction CSVs")
    p.add_argument("--pred", required=True)
    p.add_argument("--pred-b", default=None)
    p.add_argument("--metrics", default="mcc,mae,rmse")
    p.add_argument("--draws", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--train", default=None, help="training curves for the null marginal")
    p.add_argument("--prime", type=int, default=None)
    p.add_argument("--format", choices=("csv", "markdown"), default="csv")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser(
        "sweep-k", parents=[common], help="magnitude-partition agreement as a function of k"
    )
    p.add_argument("--input", required=True)
    p.add_argument("--manifest", default=None)
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=25)
    p.add_argument("--order", choices=("largest", "smallest"), default="largest")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sweep_k)

    p = sub.add_parser("dedup", parents=[common], help="one representative per twist class")
    p.add_argument("--input", required=True)
    p.add_argument("--manifest", default=None)
    p.add_argument("--max-conductor", type=int, required=True)
    p.add_argument(
        "--trace-bound", type=int, default=8192,
        help="trace table length of the kept records (10000 gives the 1229-trace shape)",
    )
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_dedup)

    p = sub.add_parser("split", parents=[common], help="seeded shuffle split with sidecar")
    p.add_argument("--input", required=True)
    p.add_argument("--manifest", default=None)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--test-size", type=int, required=True)
    p.add_argument("--out-train", required=True)
    p.add_argument("--out-test", required=True)
    p.add_argument("--sidecar", default=None)
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("ingest", parents=[common], help="validate a curve file")
    p.add_argument("--input", required=True)
    p.add_argument("--manifest", default=None)
    p.add_argument("--check-ordering", action="store_true")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("report", parents=[common], help="aggregate prediction CSVs")
    p.add_argument("--preds", nargs="+", required=True)
    p.add_argument("--preds-b", nargs="+", default=None)
    p.add_argument("--out-summary", default=None)
    p.add_argument("--out-mcc", default=None)
    p.add_argument("--out-disagreement", default=None)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TwistbenchError as exc:
        print(f"twistbench: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"twistbench: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
