"""
Analysis service implementation.
"""

import logging
from typing import Iterable, Optional

import numpy as np

from app.breaking import (
    analyze_vacuum,
    find_unitary_gauge_element,
    fluctuation_mass_check,
    normal_gradient_checks,
    physical_higgs_mass,
    rank_identities,
    residual_invariance,
    spectrum_gauge_invariance,
    unitary_gauge_consistency,
    unitary_gauge_rotsym,
)
from app.breaking.models import GroupedSpectrum
from app.config import Config, default_config
from app.errors import InputError
from app.liealg import validate_algebra
from app.potential import check_bounded_below, check_invariance, minimize
from app.presets.models import ModelPreset
from app.rep import check_representation
from app.service.models import (
    ALGEBRA,
    CHECK_GROUPS,
    FLUCTUATION,
    GOLDSTONE,
    NORMAL,
    POTENTIAL,
    REPRESENTATION,
    SPECTRUM,
    UNITARY,
    VACUUM_GROUPS,
    AnalysisRun,
    CheckOutcome,
)
from app.sweeps import trial_seeds

logger = logging.getLogger(__name__)


def resolve_groups(only: Optional[Iterable[str]]) -> list:
    """Validate a --only selection; None selects every group."""
    if not only:
        return list(CHECK_GROUPS)
    groups = []
    for name in only:
        if name not in CHECK_GROUPS:
            raise InputError(f"unknown check group: {name}; available: {', '.join(CHECK_GROUPS)}")
        if name not in groups:
            groups.append(name)
    return [g for g in CHECK_GROUPS if g in groups]


def spectrum_matches(spectrum: GroupedSpectrum, expected, rel: float) -> bool:
    """Same multiplicities and values within rel * (1 + |value|)."""
    if len(spectrum.groups) != len(expected):
        return False
    return all(
        group.multiplicity == multiplicity and abs(group.eigenvalue - value) <= rel * (1.0 + abs(value))
        for group, (value, multiplicity) in zip(spectrum.groups, expected)
    )


class AnalysisService:
    """Runs minimization, the breaking pipeline and the invariant checks for one model."""

    def __init__(self, cfg: Optional[Config] = None):
        self.cfg = cfg or default_config()

    def run(
        self,
        model: ModelPreset,
        init=None,
        groups: Optional[Iterable[str]] = None,
        unitary_states: int = 50,
    ) -> AnalysisRun:
        """Compute the vacuum structure and every requested check group."""
        if model is None:
            raise InputError("model is required")
        cfg = self.cfg
        run = AnalysisRun(model=model, groups=resolve_groups(groups))
        init = model.initial_point if init is None else np.asarray(init, dtype=float)

        if ALGEBRA in run.groups:
            self._check_algebra(run)
        if REPRESENTATION in run.groups:
            self._check_representation(run)
        if POTENTIAL in run.groups:
            self._check_potential(run)

        if VACUUM_GROUPS.intersection(run.groups):
            logger.info(f"Minimizing potential of {model.name}...")
            run.minimum = minimize(model.potential, model.representation, init, cfg)
            logger.info("Analyzing vacuum...")
            run.analysis = analyze_vacuum(model.representation, model.potential, run.minimum.z0, model.beta, cfg)

        if GOLDSTONE in run.groups:
            self._check_goldstone(run)
        if SPECTRUM in run.groups:
            self._check_spectrum(run)
        if UNITARY in run.groups:
            self._check_unitary(run, unitary_states)
        if FLUCTUATION in run.groups:
            self._check_fluctuation(run)
        if NORMAL in run.groups:
            self._check_normal(run)

        logger.info(f"Analysis of {model.name} completed: {'overall pass' if run.passed else 'FAILED'}")
        return run

    def _check_algebra(self, run: AnalysisRun) -> None:
        cfg = self.cfg
        validation = validate_algebra(run.model.algebra, cfg)
        run.sections["algebra"] = validation.to_dict()
        run.add(
            CheckOutcome(
                name="algebra antisymmetry and Jacobi",
                group=ALGEBRA,
                passed=validation.passed,
                value=max(validation.antisymmetry_residual, validation.jacobi_residual, validation.block_residual),
                tolerance=cfg.tol_alg,
                detail="; ".join(validation.problems),
            )
        )
        beta = run.model.beta
        run.add(
            CheckOutcome(
                name="invariant form ad-invariant",
                group=ALGEBRA,
                passed=beta.ad_residual <= cfg.tol_alg,
                value=beta.ad_residual,
                tolerance=cfg.tol_alg,
            )
        )

    def _check_representation(self, run: AnalysisRun) -> None:
        cfg = self.cfg
        validation = check_representation(run.model.representation, cfg)
        run.sections["representation"] = validation.to_dict()
        run.add(
            CheckOutcome(
                name="generators antisymmetric and equivariant",
                group=REPRESENTATION,
                passed=max(validation.antisymmetry_residual, validation.equivariance_residual) <= cfg.tol_alg,
                value=max(validation.antisymmetry_residual, validation.equivariance_residual),
                tolerance=cfg.tol_alg,
            )
        )
        run.add(
            CheckOutcome(
                name="representation faithful",
                group=REPRESENTATION,
                passed=validation.faithful,
                value=float(validation.rank),
                detail=f"rank {validation.rank} of {validation.dim}",
            )
        )

    def _check_potential(self, run: AnalysisRun) -> None:
        cfg = self.cfg
        invariance = check_invariance(run.model.potential, run.model.representation, cfg.trials, cfg.seed, cfg)
        bounded = check_bounded_below(run.model.potential, seed=cfg.seed)
        run.sections["potential"] = {"invariance": invariance.to_dict(), "bounded_below": bounded}
        run.add(
            CheckOutcome(
                name="potential G-invariant",
                group=POTENTIAL,
                passed=invariance.passed,
                value=invariance.max_residual,
                tolerance=cfg.tol_inv,
            )
        )

    def _check_goldstone(self, run: AnalysisRun) -> None:
        report = rank_identities(run.analysis, self.cfg)
        run.sections["rank_identities"] = report.to_dict()
        for check in report.checks:
            run.add(
                CheckOutcome(
                    name=check.name,
                    group=GOLDSTONE,
                    passed=check.passed,
                    value=check.got,
                    detail=f"expected {check.expected:g}",
                )
            )

    def _check_spectrum(self, run: AnalysisRun) -> None:
        cfg = self.cfg
        model, analysis = run.model, run.analysis
        gauge = spectrum_gauge_invariance(
            model.representation, model.potential, analysis.z0, model.beta, cfg.trials, cfg.seed, cfg
        )
        run.sections["gauge_invariance"] = gauge.to_dict()
        run.add(
            CheckOutcome(
                name="spectra constant on the orbit",
                group=SPECTRUM,
                passed=gauge.max_spectral_deviation <= cfg.tol_spec,
                value=gauge.max_spectral_deviation,
                tolerance=cfg.tol_spec,
            )
        )
        run.add(
            CheckOutcome(
                name="mass matrices gauge covariant",
                group=SPECTRUM,
                passed=max(gauge.higgs_covariance_residual, gauge.ym_covariance_residual) <= cfg.tol_spec,
                value=max(gauge.higgs_covariance_residual, gauge.ym_covariance_residual),
                tolerance=cfg.tol_spec,
            )
        )

        symmetry = residual_invariance(model.representation, analysis, cfg)
        run.sections["residual_symmetry"] = symmetry.to_dict()
        run.add(
            CheckOutcome(
                name="residual symmetry preserves W_G, W_phys and both mass matrices",
                group=SPECTRUM,
                passed=symmetry.passed,
                value=max(
                    symmetry.goldstone_residual,
                    symmetry.phys_residual,
                    symmetry.higgs_commutator,
                    symmetry.ym_commutator,
                ),
                tolerance=cfg.tol_spec,
                detail="" if symmetry.grading_ok else "grading condition N + h - d >= 0 fails",
            )
        )

        if model.potential.is_rotsym and analysis.broken:
            higgs_mass = physical_higgs_mass(model.potential, analysis, cfg)
            run.sections["physical_higgs_mass"] = higgs_mass.to_dict()
            run.add(
                CheckOutcome(
                    name="physical Higgs mass f''(r0)",
                    group=SPECTRUM,
                    passed=higgs_mass.passed,
                    value=higgs_mass.residual,
                    tolerance=cfg.tol_eig,
                    detail=f"f''(r0) = {higgs_mass.expected:.12g}",
                )
            )

        expected = model.expected
        if expected is not None:
            run.add(
                CheckOutcome(
                    name="Yang-Mills spectrum matches preset",
                    group=SPECTRUM,
                    passed=spectrum_matches(analysis.ym_spectrum, expected.ym_spectrum, cfg.tol_spec),
                    tolerance=cfg.tol_spec,
                )
            )
            run.add(
                CheckOutcome(
                    name="Higgs spectrum matches preset",
                    group=SPECTRUM,
                    passed=spectrum_matches(analysis.higgs_spectrum, expected.higgs_spectrum, cfg.tol_fluct),
                    tolerance=cfg.tol_fluct,
                )
            )
            run.add(
                CheckOutcome(
                    name="stabilizer dimension matches preset",
                    group=SPECTRUM,
                    passed=analysis.dim_h == expected.dim_h,
                    value=float(analysis.dim_h),
                    detail=f"expected {expected.dim_h}",
                )
            )

    def _check_unitary(self, run: AnalysisRun, states: int) -> None:
        cfg = self.cfg
        model, analysis = run.model, run.analysis
        z0 = analysis.z0
        if np.linalg.norm(z0) <= cfg.tol_zero or states == 0:
            run.sections["unitary_gauge"] = {"states": 0, "skipped": "vanishing vacuum or no states"}
            return

        sphere_orbit = analysis.dim_goldstone == analysis.n - 1
        complement_residual = closed_form_residual = consistency = 0.0
        restarts = 0
        for seed in trial_seeds(cfg.seed, states):
            phi = np.random.default_rng(seed).standard_normal(analysis.n)
            element = find_unitary_gauge_element(model.representation, z0, phi, analysis.lie_h_perp, seed, cfg)
            complement_residual = max(complement_residual, element.residual)
            restarts = max(restarts, element.restarts)
            if model.potential.is_rotsym:
                vacuum = unitary_gauge_rotsym(model.representation, z0, phi, model.beta.block_form, cfg)
                closed_form_residual = max(closed_form_residual, vacuum.goldstone_residual)
            if sphere_orbit:
                consistency = max(consistency, unitary_gauge_consistency(element, z0, phi))

        run.sections["unitary_gauge"] = {
            "states": states,
            "complement_residual": complement_residual,
            "closed_form_residual": closed_form_residual,
            "consistency_residual": consistency if sphere_orbit else None,
            "max_restarts": restarts,
        }
        run.add(
            CheckOutcome(
                name="unitary gauge removes Goldstone components",
                group=UNITARY,
                passed=complement_residual <= 10 * cfg.tol_crit,
                value=complement_residual,
                tolerance=10 * cfg.tol_crit,
            )
        )
        if model.potential.is_rotsym:
            run.add(
                CheckOutcome(
                    name="closed-form unitary vacuum orthogonal to W_G",
                    group=UNITARY,
                    passed=closed_form_residual <= cfg.tol_rank,
                    value=closed_form_residual,
                    tolerance=cfg.tol_rank,
                )
            )
        if sphere_orbit:
            run.add(
                CheckOutcome(
                    name="unitary gauge aligns the state with z0",
                    group=UNITARY,
                    passed=consistency <= 1e-7,
                    value=consistency,
                    tolerance=1e-7,
                )
            )

    def _check_fluctuation(self, run: AnalysisRun) -> None:
        cfg = self.cfg
        model, analysis = run.model, run.analysis
        phi = analysis.w_phys.sum(axis=1)
        a_vec = analysis.lie_h.sum(axis=1) + analysis.lie_h_perp.sum(axis=1)
        check = fluctuation_mass_check(model.potential, model.representation, analysis, phi, a_vec, cfg)

        stabilizer_terms = 0.0
        for tau in analysis.lie_h.T:
            along = fluctuation_mass_check(model.potential, model.representation, analysis, np.zeros(analysis.n), tau, cfg)
            stabilizer_terms = max(stabilizer_terms, abs(along.gauge_lhs), abs(along.gauge_rhs))

        run.sections["fluctuation_checks"] = {**check.to_dict(), "stabilizer_mass_terms": stabilizer_terms}
        run.add(
            CheckOutcome(
                name="Higgs fluctuation mass term",
                group=FLUCTUATION,
                passed=check.higgs_residual <= cfg.tol_fluct,
                value=check.higgs_residual,
                tolerance=cfg.tol_fluct,
            )
        )
        run.add(
            CheckOutcome(
                name="gauge fluctuation mass term",
                group=FLUCTUATION,
                passed=check.gauge_residual <= cfg.tol_eig,
                value=check.gauge_residual,
                tolerance=cfg.tol_eig,
            )
        )
        run.add(
            CheckOutcome(
                name="stabilizer directions stay massless",
                group=FLUCTUATION,
                passed=stabilizer_terms <= cfg.tol_eig,
                value=stabilizer_terms,
                tolerance=cfg.tol_eig,
            )
        )

    def _check_normal(self, run: AnalysisRun) -> None:
        cfg = self.cfg
        model, analysis = run.model, run.analysis
        report = normal_gradient_checks(model.potential, model.representation, analysis, seed=cfg.seed, cfg=cfg)
        run.sections["normal_gradient_checks"] = report.to_dict()
        if report.higgs_applicable:
            run.add(
                CheckOutcome(
                    name="grad F_H = M2_H e",
                    group=NORMAL,
                    passed=report.higgs_residual <= cfg.tol_fluct,
                    value=report.higgs_residual,
                    tolerance=cfg.tol_fluct,
                )
            )
        run.add(
            CheckOutcome(
                name="gauge normal gradient = -1/2 beta(M2_YM ., .)",
                group=NORMAL,
                passed=report.ym_residual <= cfg.tol_fluct,
                value=report.ym_residual,
                tolerance=cfg.tol_fluct,
            )
        )
        worst = max((m.residual for m in report.masses), default=0.0)
        run.add(
            CheckOutcome(
                name="m^2 = 2 g_phys^2 |T_eta z0|^2",
                group=NORMAL,
                passed=worst <= cfg.tol_fluct,
                value=worst,
                tolerance=cfg.tol_fluct,
            )
        )
