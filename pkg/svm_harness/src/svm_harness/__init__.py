"""SVM cross-validation harness for exported graph feature vectors."""

from .cv import CvReport, DEFAULT_C_GRID, balanced_accuracy, default_bandwidth, nested_cv
from .io import FeatureTable, GramTable, detect_kind, read_features_csv, read_gram_csv
from .report import read_reports_csv, table_report, write_reports_csv

__version__ = "0.1.0"

__all__ = [
    "CvReport",
    "DEFAULT_C_GRID",
    "FeatureTable",
    "GramTable",
    "balanced_accuracy",
    "default_bandwidth",
    "detect_kind",
    "nested_cv",
    "read_features_csv",
    "read_gram_csv",
    "read_reports_csv",
    "table_report",
    "write_reports_csv",
]
