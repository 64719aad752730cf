"""Twist-class matching baselines for elliptic curve trace prediction:
trace tables from Weierstrass equations, 61-bit twist hashes, sign-based
matching classifiers, their evaluation metrics, and dataset curation."""

from .curves import (
    CurveRecord,
    ReductionType,
    TraceTable,
    build_trace_table,
    count_points,
    discriminant,
    quadratic_twist,
    reduction_type,
    trace_of_frobenius,
)
from .matcher import (
    EmpiricalDistribution,
    ExperimentReport,
    PredictionRecord,
    SignIndex,
    TrainingIndex,
    build_index,
    empirical_distribution,
    evaluate_predictions,
    predict,
    prepare_training,
    proxy_key,
    relative_pattern,
    run_experiment,
    sign_vector,
)
from .metrics import (
    ClusterScores,
    ConfusionMatrix,
    agreement_breakdown,
    ari,
    cluster_scores,
    confusion_matrix,
    disagreement,
    entropy_scores,
    error_stats,
    mcc_binary,
    mcc_from_labels,
    mcc_multiclass,
    mod_reduce_eval,
    null_significance,
    restrict_multi_instance,
)
from .pipeline import (
    DatasetManifest,
    ProximityStats,
    SplitSpec,
    SweepRow,
    TwistClassRepresentative,
    dedup_by_hash,
    ensure_traces,
    export_jsonl,
    good_reduction_filter,
    ingest,
    proxy_proximity_report,
    split,
    sweep_k,
    twist_hash_partition,
)
from .twisthash import (
    HashCoefficients,
    MODULUS,
    hash_coefficients,
    machin_pi_digits_base_P,
    pi_digits_base_P,
    twist_hash,
    twist_hash_of_curve,
)

__version__ = "0.1.0"
