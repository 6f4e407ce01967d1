"""
Data models for the association scheme toolkit.
"""

from .matrix import RationalMatrix, IntPolynomial
from .scheme import RelationPartition, SchemeCertificate, PointPartition
from .spectrum import Spectrum, DualityReport, CellViolation
from .cover import QuotientStructure, CoverProfile, AntipodalReport, CoverTemplateReport
from .fission import (
    CliquePartition,
    TightRegularity,
    FissionScheme,
    CellDiff,
    TemplateComparison,
    ReconciliationReport,
)
from .weighing import GramBlocks, WeighingFamily, MuwmBoundReport, UnbiasedCertificate
from .code import GoldCode, OrthogonalArrayReport
from .manifest import RunManifest, Artifact

__all__ = [
    "RationalMatrix",
    "IntPolynomial",
    "RelationPartition",
    "SchemeCertificate",
    "PointPartition",
    "Spectrum",
    "DualityReport",
    "CellViolation",
    "QuotientStructure",
    "CoverProfile",
    "AntipodalReport",
    "CoverTemplateReport",
    "CliquePartition",
    "TightRegularity",
    "FissionScheme",
    "CellDiff",
    "TemplateComparison",
    "ReconciliationReport",
    "GramBlocks",
    "WeighingFamily",
    "MuwmBoundReport",
    "UnbiasedCertificate",
    "GoldCode",
    "OrthogonalArrayReport",
    "RunManifest",
    "Artifact",
]
