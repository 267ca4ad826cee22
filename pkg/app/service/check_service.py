"""
Check service implementation.
"""

import logging
from typing import Iterable, List, Optional, Tuple

from app.config import Config, default_config
from app.presets import load_preset, preset_names
from app.service.analysis_service import AnalysisService, resolve_groups
from app.service.holonomy_service import HolonomyService
from app.service.models import HOLONOMY, CheckOutcome

logger = logging.getLogger(__name__)


class CheckService:
    """Runs the invariant suite over every preset."""

    def __init__(self, cfg: Optional[Config] = None):
        self.cfg = cfg or default_config()
        self.analysis_service = AnalysisService(self.cfg)
        self.holonomy_service = HolonomyService(self.cfg)

    def run(self, only: Optional[Iterable[str]] = None) -> Tuple[List[CheckOutcome], bool]:
        """Return every check outcome and whether all of them passed."""
        groups = resolve_groups(only)
        outcomes: List[CheckOutcome] = []
        for name in preset_names():
            logger.info(f"Checking preset {name}...")
            model = load_preset(name, cfg=self.cfg)
            run = self.analysis_service.run(model, groups=groups)
            outcomes.extend(run.checks)
            if HOLONOMY in groups:
                for outcome in self.holonomy_service.standard_suite(model, run.analysis):
                    outcome.model = name
                    outcomes.append(outcome)

        passed = all(o.passed for o in outcomes)
        failed = [o for o in outcomes if not o.passed]
        for outcome in failed:
            logger.error(f"Check failed: {outcome.model}: {outcome.name} (value {outcome.value})")
        logger.info(f"Invariant suite: {len(outcomes) - len(failed)}/{len(outcomes)} checks passed")
        return outcomes, passed
