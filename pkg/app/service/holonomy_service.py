"""
Holonomy service implementation.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np

from app.breaking.models import VacuumAnalysis
from app.config import Config, default_config
from app.errors import InputError
from app.holonomy import (
    CYCLE,
    PATH,
    DiscreteConnection,
    DiscreteSpacetime,
    ResidualGroup,
    apply_gauge,
    build_spacetime,
    classify,
    connection_from_matrices,
    connection_from_parameters,
    find_equivalence,
    holonomy,
    random_connection,
    random_gauge,
    spectral_mismatch,
)
from app.presets.models import ModelPreset
from app.service.models import HOLONOMY, CheckOutcome, HolonomyRun
from app.sweeps import sweep, trial_seeds

logger = logging.getLogger(__name__)

SO2 = "so2"
STABILIZER = "stabilizer"


class HolonomyService:
    """Discrete vacuum-pair classification."""

    def __init__(self, cfg: Optional[Config] = None):
        self.cfg = cfg or default_config()

    def residual_group(
        self,
        group: str,
        model: Optional[ModelPreset] = None,
        analysis: Optional[VacuumAnalysis] = None,
    ) -> ResidualGroup:
        """SO(2) or the stabilizer of an analyzed vacuum."""
        if group == SO2:
            return ResidualGroup.circle()
        if group == STABILIZER:
            if model is None or analysis is None:
                raise InputError("holonomy.group = 'stabilizer' requires an analyzed model")
            return ResidualGroup.from_stabilizer(model.representation, analysis.lie_h, name=f"H({model.name})")
        raise InputError(f"holonomy.group must be '{SO2}' or '{STABILIZER}', got {group!r}")

    def connections(
        self,
        spacetime: DiscreteSpacetime,
        group: ResidualGroup,
        parameters: Sequence = (),
        matrices: Sequence = (),
        random: int = 0,
    ) -> List[DiscreteConnection]:
        """Connections from edge parameters, explicit matrices and random draws, in that order."""
        result = [connection_from_parameters(spacetime, group, p) for p in parameters]
        for position, mats in enumerate(matrices):
            connection = connection_from_matrices(spacetime, mats, self.cfg)
            if connection.n and connection.n != group.n:
                raise InputError(f"holonomy.matrices[{position}] acts on R^{connection.n}, group on R^{group.n}")
            result.append(connection)
        result.extend(random_connection(spacetime, group, s) for s in trial_seeds(self.cfg.seed, random))
        if not result:
            raise InputError("holonomy.connections is required")
        return result

    def classify(
        self,
        spacetime: DiscreteSpacetime,
        group: ResidualGroup,
        connections: List[DiscreteConnection],
        expect_classes: Optional[int] = None,
    ) -> HolonomyRun:
        """Classify connections and verify every gauge certificate."""
        cfg = self.cfg
        logger.info(f"Classifying {len(connections)} connections on a {spacetime.kind} of length {spacetime.vertices}")
        classification = classify(spacetime, connections, group, cfg)

        verified = True
        for members in classification.classes:
            representative = connections[members[0]]
            for index in members[1:]:
                equivalence = find_equivalence(spacetime, representative, connections[index], group, cfg=cfg)
                verified = verified and equivalence.equivalent and equivalence.gauge is not None

        holonomies = [[h.matrix.tolist() for h in holonomy(spacetime, c, cfg)] for c in connections]
        run = HolonomyRun(
            spacetime=spacetime.to_dict(),
            group=group.to_dict(),
            holonomies=[h[0] if h else [] for h in holonomies],
            classification=classification.to_dict(),
            certificates_verified=verified,
        )

        run.checks.append(
            CheckOutcome(name="gauge certificates verify", group=HOLONOMY, passed=verified)
        )
        if spacetime.kind == PATH:
            run.checks.append(
                CheckOutcome(
                    name="path graph has one class",
                    group=HOLONOMY,
                    passed=classification.count == 1,
                    value=float(classification.count),
                )
            )
        if expect_classes is not None:
            run.checks.append(
                CheckOutcome(
                    name="expected number of classes",
                    group=HOLONOMY,
                    passed=classification.count == expect_classes,
                    value=float(classification.count),
                    detail=f"expected {expect_classes}",
                )
            )
        run.checks.append(self.gauge_invariance(spacetime, group, connections))
        return run

    def gauge_invariance(
        self,
        spacetime: DiscreteSpacetime,
        group: ResidualGroup,
        connections: List[DiscreteConnection],
    ) -> CheckOutcome:
        """Holonomy eigenvalue multisets are unchanged by random gauge transformations."""
        cfg = self.cfg
        if spacetime.kind != CYCLE or group.dim == 0:
            return CheckOutcome(name="holonomy spectrum gauge invariant", group=HOLONOMY, passed=True, value=0.0)

        def trial(trial_seed: int) -> float:
            connection = connections[trial_seed % len(connections)]
            gauge = random_gauge(spacetime, group, trial_seed)
            before = holonomy(spacetime, connection, cfg)[0].matrix
            after = holonomy(spacetime, apply_gauge(spacetime, connection, gauge, cfg), cfg)[0].matrix
            return spectral_mismatch(before, after)

        mismatch = max(sweep(trial, cfg.seed, cfg.trials, cfg.parallel), default=0.0)
        tolerance = cfg.tol_orth * (1 + len(spacetime.edges))
        return CheckOutcome(
            name="holonomy spectrum gauge invariant",
            group=HOLONOMY,
            passed=mismatch <= tolerance,
            value=mismatch,
            tolerance=tolerance,
        )

    def standard_suite(self, model: ModelPreset, analysis: Optional[VacuumAnalysis]) -> List[CheckOutcome]:
        """Fixed scenarios: trees are gauge trivial, circle holonomies separate classes, gauge copies merge."""
        outcomes = []

        group = self.residual_group(STABILIZER, model, analysis) if analysis is not None else ResidualGroup.circle()
        if group.dim == 0:
            group = ResidualGroup.circle()
        path = build_spacetime(PATH, 5)
        run = self.classify(path, group, self.connections(path, group, random=5))
        outcomes.extend(run.checks)

        cycle = build_spacetime(CYCLE, 4)
        circle = ResidualGroup.circle()
        angles = [[0.0, 0.0, 0.0, 0.0], [np.pi / 4] * 4, [np.pi / 2, np.pi / 2, 0.0, 0.0]]
        run = self.classify(cycle, circle, self.connections(cycle, circle, parameters=angles), expect_classes=2)
        outcomes.extend(c for c in run.checks if c.name == "expected number of classes")

        sample = self.connections(cycle, group, random=2)
        copy = apply_gauge(cycle, sample[0], random_gauge(cycle, group, self.cfg.seed + 1), self.cfg)
        merged = classify(cycle, sample + [copy], group, self.cfg)
        outcomes.append(
            CheckOutcome(
                name="gauge-transformed connection joins its class",
                group=HOLONOMY,
                passed=any(0 in members and len(sample) in members for members in merged.classes),
                value=float(merged.count),
            )
        )
        return outcomes
