"""
Service module initialization.
"""

from app.service.analysis_service import AnalysisService, resolve_groups
from app.service.check_service import CheckService
from app.service.holonomy_service import HolonomyService
from app.service.models import CHECK_GROUPS, AnalysisRun, CheckOutcome, HolonomyRun

__all__ = [
    "CHECK_GROUPS",
    "AnalysisRun",
    "AnalysisService",
    "CheckOutcome",
    "CheckService",
    "HolonomyRun",
    "HolonomyService",
    "resolve_groups",
]
