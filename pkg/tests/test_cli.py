import csv

import pytest

from twistbench.cli import main
from twistbench.pipeline import export_jsonl

from conftest import fixture_curves, synthetic_families


def run_cli(args):
    return main([str(a) for a in args])


def read_csv(path):
    with open(path) as f:
        lines = [ln for ln in f if not ln.startswith("#")]
    return list(csv.DictReader(lines))


def header_lines(path):
    with open(path) as f:
        return [ln.rstrip("\n") for ln in f if ln.startswith("#")]


def test_ap_subcommand(tmp_path, capsys):
    out = tmp_path / "ap.csv"
    assert run_cli(["ap", "--ainvs", "0,-1,1,-10,-20", "--conductor", 11, "--bound", 20, "--out", out]) == 0
    rows = read_csv(out)
    assert [r["prime"] for r in rows] == ["2", "3", "5", "7", "11", "13", "17", "19"]
    assert rows[4]["ap"] == "1" and rows[4]["reduction_type"] == "split_multiplicative"
    assert header_lines(out)[0].startswith("# twistbench ")


def test_unknown_flag_exits_nonzero():
    with pytest.raises(SystemExit) as exc:
        run_cli(["ap", "--no-such-flag", "1"])
    assert exc.value.code != 0


def test_unknown_subcommand_exits_nonzero():
    with pytest.raises(SystemExit) as exc:
        run_cli(["frobnicate"])
    assert exc.value.code != 0


def test_hash_subcommand_and_byte_identical_reruns(tmp_path):
    curves = tmp_path / "curves.jsonl"
    export_jsonl([rec for rec in fixture_curves()[:4]], curves)
    out1 = tmp_path / "h1.csv"
    out2 = tmp_path / "h2.csv"
    assert run_cli(["hash", "--input", curves, "--output", out1, "--quiet"]) == 0
    assert run_cli(["hash", "--input", curves, "--output", out2, "--quiet"]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    rows = read_csv(out1)
    assert len(rows) == 4
    assert all(0 <= int(r["hash"]) < (1 << 61) - 1 for r in rows)


def test_hash_parallel_matches_serial(tmp_path):
    curves = tmp_path / "curves.jsonl"
    export_jsonl(synthetic_families(seed=41, family_sizes=[2, 2, 2], bound=8192), curves)
    serial = tmp_path / "serial.csv"
    parallel = tmp_path / "parallel.csv"
    assert run_cli(["hash", "--input", curves, "--output", serial, "--quiet"]) == 0
    assert run_cli(["hash", "--input", curves, "--output", parallel, "--quiet", "--workers", 2]) == 0
    assert serial.read_bytes() == parallel.read_bytes()


def _write_split_dataset(tmp_path, seed=51):
    records = synthetic_families(seed=seed, family_sizes=[4] * 8 + [1] * 4, bound=8192)
    data = tmp_path / "all.jsonl"
    export_jsonl(records, data)
    return data


def test_split_predict_eval_report_roundtrip(tmp_path):
    data = _write_split_dataset(tmp_path)
    train = tmp_path / "train.jsonl"
    test = tmp_path / "test.jsonl"
    assert run_cli([
        "split", "--input", data, "--seed", 3, "--test-size", 8,
        "--out-train", train, "--out-test", test,
        "--sidecar", tmp_path / "split.json", "--quiet",
    ]) == 0

    preds_twist = tmp_path / "preds_twist.csv"
    preds_proxy = tmp_path / "preds_proxy.csv"
    for key, out in (("twist-hash", preds_twist), ("proxy", preds_proxy)):
        assert run_cli([
            "predict", "--train", train, "--test", test, "--prime", 5,
            "--key", key, "--k", 8, "--seed", 0, "--out", out, "--quiet",
        ]) == 0
    rows = read_csv(preds_twist)
    assert len(rows) == 8
    assert set(r["prime"] for r in rows) == {"5"}
    assert all(r["provenance"] for r in rows)

    # eval: self-comparison has disagreement exactly 0
    report = tmp_path / "eval.csv"
    assert run_cli([
        "eval", "--pred", preds_twist, "--pred-b", preds_twist,
        "--metrics", "mcc,mae,rmse,disagreement,mod2,mod3,mod4",
        "--out", report, "--quiet",
    ]) == 0
    metrics = {r["metric"]: r["value"] for r in read_csv(report)}
    assert float(metrics["disagreement"]) == 0.0
    assert "mcc_overall" in metrics and "mod2" in metrics

    # report aggregation over one prime, both models
    summary = tmp_path / "summary.csv"
    mcc_csv = tmp_path / "mcc.csv"
    dis = tmp_path / "dis.csv"
    assert run_cli([
        "report", "--preds", preds_twist, "--preds-b", preds_proxy,
        "--out-summary", summary, "--out-mcc", mcc_csv, "--out-disagreement", dis,
        "--quiet",
    ]) == 0
    srows = read_csv(summary)
    assert len(srows) == 1 and srows[0]["prime"] == "5"
    assert srows[0]["good_count"] == str(4 * 8 + 4)
    drows = read_csv(dis)
    parts = [int(drows[0][c]) for c in ("both_correct", "a_correct_b_wrong", "b_correct_a_wrong", "both_wrong")]
    assert sum(parts) == 8


def test_eval_null_metric(tmp_path):
    data = _write_split_dataset(tmp_path, seed=52)
    train = tmp_path / "train.jsonl"
    test = tmp_path / "test.jsonl"
    run_cli(["split", "--input", data, "--seed", 1, "--test-size", 6,
             "--out-train", train, "--out-test", test, "--quiet"])
    preds = tmp_path / "p.csv"
    run_cli(["predict", "--train", train, "--test", test, "--prime", 7,
             "--key", "proxy", "--seed", 0, "--out", preds, "--quiet"])
    report = tmp_path / "null.csv"
    assert run_cli([
        "eval", "--pred", preds, "--metrics", "null", "--draws", 100, "--seed", 2,
        "--train", train, "--prime", 7, "--out", report, "--quiet",
    ]) == 0
    rows = {r["metric"]: r["value"] for r in read_csv(report)}
    assert 0.0 < float(rows["null_p_value"]) <= 1.0


def test_dedup_subcommand(tmp_path):
    from twistbench.primes import primes_in

    records = synthetic_families(seed=53, family_sizes=[3, 2], bound=8192)
    order = [0, 3, 1, 4, 2]
    shuffled = [records[i] for i in order]
    for rec, n in zip(shuffled, primes_in(9000, 9400)):
        rec.conductor = n
    data = tmp_path / "dups.jsonl"
    export_jsonl(shuffled, data)
    out = tmp_path / "unique.csv"
    assert run_cli(["dedup", "--input", data, "--max-conductor", 10**8, "--output", out, "--quiet"]) == 0
    rows = read_csv(out)
    assert len(rows) == 2
    assert len({r["hash"] for r in rows}) == 2
    assert len(rows[0]["ap"].split()) == 1028


def test_sweep_k_subcommand(tmp_path):
    records = synthetic_families(seed=54, family_sizes=[3, 3, 2], bound=8192)
    data = tmp_path / "sweep.jsonl"
    export_jsonl(records, data)
    out = tmp_path / "sweep.csv"
    assert run_cli(["sweep-k", "--input", data, "--k-min", 1, "--k-max", 4,
                    "--order", "largest", "--out", out, "--quiet"]) == 0
    rows = read_csv(out)
    assert [r["k"] for r in rows] == ["1", "2", "3", "4"]
    for r in rows:
        assert 0.0 <= float(r["homogeneity"]) <= 1.0


def test_ingest_subcommand(tmp_path, capsys):
    data = tmp_path / "ok.jsonl"
    export_jsonl(fixture_curves()[:3], data)
    assert run_cli(["ingest", "--input", data]) == 0
    assert "3 records" in capsys.readouterr().out


def test_data_error_returns_one(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"conductor": 0, "ainvs": [0,-1,1,-10,-20]}\n')
    assert run_cli(["ingest", "--input", bad]) == 1
    assert "line 1" in capsys.readouterr().err
