"""Convenience imports."""

from .label_matrix import CountHistogram, LabelMatrix
from .reports import (AlphaPmf, AnalyticsReport, ComparisonReport,
                      EnumerationReport, MethodCheck, PairedReport,
                      SimulationReport)
