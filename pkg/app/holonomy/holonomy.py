"""
Flat connections on graph spacetimes: holonomy, gauge action, equivalence and
classification.

Edges are oriented u -> v and transports act as h -> g_u h g_v^{-1}. The loop
holonomy of a cycle is the ordered product of its transports starting at the
base vertex. Path graphs are trees, so every connection on them is gauge
trivial; on a cycle two connections are equivalent iff their holonomies are
conjugate in the residual group.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from itertools import combinations
from typing import List, Optional, Sequence

import numpy as np
from scipy import linalg, optimize

from app.config import Config, default_config
from app.errors import IdentityViolationError, InputError
from app.holonomy.models import (
    CYCLE,
    PATH,
    SPACETIME_KINDS,
    Classification,
    DiscreteConnection,
    DiscreteSpacetime,
    Equivalence,
    GaugeTransform,
    ResidualGroup,
)
from app.rep.models import GroupElement
from app.rep.representation import compose, identity_element, inverse, orthogonality_residual
from app.sweeps import trial_seeds

logger = logging.getLogger(__name__)

_CONJUGATOR_STARTS = 8


def build_spacetime(kind: str, length: int) -> DiscreteSpacetime:
    """Path on `length` vertices or cycle of `length` edges, based at vertex 0."""
    if kind not in SPACETIME_KINDS:
        raise InputError(f"spacetime kind must be one of {list(SPACETIME_KINDS)}, got {kind!r}")
    if length < 1:
        raise InputError("length must be positive")
    if kind == PATH:
        edges = tuple((i, i + 1) for i in range(length - 1))
    else:
        edges = tuple((i, (i + 1) % length) for i in range(length))
    return DiscreteSpacetime(vertices=length, edges=edges, kind=kind)


def holonomy_angle(g: GroupElement) -> float:
    """Rotation angle in [0, 2 pi) of an SO(2) element."""
    if g.n != 2:
        raise InputError("holonomy angle is defined for 2 x 2 rotations only")
    m = g.matrix
    return float(np.mod(np.arctan2(m[1, 0], m[0, 0]), 2.0 * np.pi))


def _check_connection(spacetime: DiscreteSpacetime, connection: DiscreteConnection, cfg: Config) -> None:
    if len(connection.transports) != len(spacetime.edges):
        raise InputError(
            f"connection has {len(connection.transports)} transports for {len(spacetime.edges)} edges"
        )
    sizes = {t.n for t in connection.transports}
    if len(sizes) > 1:
        raise InputError(f"transports have mixed dimensions {sorted(sizes)}")
    for i, t in enumerate(connection.transports):
        residual = orthogonality_residual(t)
        if residual > cfg.tol_orth:
            raise InputError(f"transport on edge {i} is not orthogonal: residual {residual:.3e}")


def connection_from_parameters(
    spacetime: DiscreteSpacetime,
    group: ResidualGroup,
    parameters: Sequence,
) -> DiscreteConnection:
    """Transport exp(theta_e . X) on each edge; a scalar theta is allowed for one-dimensional groups."""
    if len(parameters) != len(spacetime.edges):
        raise InputError(f"expected {len(spacetime.edges)} edge parameters, got {len(parameters)}")
    transports = []
    for theta in parameters:
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        if theta.shape != (group.dim,):
            raise InputError(f"edge parameter must have {group.dim} components")
        transports.append(group.element(theta))
    return DiscreteConnection(transports=tuple(transports))


def connection_from_matrices(spacetime: DiscreteSpacetime, matrices: Sequence, cfg: Optional[Config] = None) -> DiscreteConnection:
    """Connection from explicit transport matrices, validated for orthogonality."""
    cfg = cfg or default_config()
    connection = DiscreteConnection(transports=tuple(GroupElement(matrix=m) for m in matrices))
    _check_connection(spacetime, connection, cfg)
    return connection


def identity_connection(spacetime: DiscreteSpacetime, n: int) -> DiscreteConnection:
    return DiscreteConnection(transports=tuple(identity_element(n) for _ in spacetime.edges))


def random_connection(spacetime: DiscreteSpacetime, group: ResidualGroup, seed: int, scale: float = 1.0) -> DiscreteConnection:
    """Deterministic random transports in the residual group."""
    rng = np.random.default_rng(seed)
    parameters = [scale * rng.standard_normal(group.dim) for _ in spacetime.edges]
    return connection_from_parameters(spacetime, group, parameters)


def random_gauge(spacetime: DiscreteSpacetime, group: ResidualGroup, seed: int, scale: float = 1.0) -> GaugeTransform:
    """Deterministic random gauge transformation in the residual group."""
    rng = np.random.default_rng(seed)
    return GaugeTransform(
        elements=tuple(group.element(scale * rng.standard_normal(group.dim)) for _ in range(spacetime.vertices))
    )


def compose_gauges(g2: GaugeTransform, g1: GaugeTransform) -> GaugeTransform:
    """Vertexwise product g2 g1 (apply g1 first)."""
    return GaugeTransform(elements=tuple(compose(a, b) for a, b in zip(g2.elements, g1.elements)))


def holonomy(spacetime: DiscreteSpacetime, connection: DiscreteConnection, cfg: Optional[Config] = None) -> List[GroupElement]:
    """Loop holonomies from the base vertex; empty for a path."""
    cfg = cfg or default_config()
    _check_connection(spacetime, connection, cfg)
    if spacetime.kind == PATH:
        return []
    n = connection.n
    product = reduce(lambda acc, t: acc @ t.matrix, connection.transports, np.eye(n))
    return [GroupElement(matrix=product)]


def apply_gauge(
    spacetime: DiscreteSpacetime,
    connection: DiscreteConnection,
    gauge: GaugeTransform,
    cfg: Optional[Config] = None,
) -> DiscreteConnection:
    """Transport h on edge u -> v becomes g_u h g_v^{-1}."""
    cfg = cfg or default_config()
    _check_connection(spacetime, connection, cfg)
    if len(gauge.elements) != spacetime.vertices:
        raise InputError(f"gauge has {len(gauge.elements)} elements for {spacetime.vertices} vertices")
    if gauge.elements and connection.transports and gauge.elements[0].n != connection.n:
        raise InputError("gauge and connection act on different spaces")

    transports = tuple(
        GroupElement(matrix=gauge.elements[u].matrix @ h.matrix @ gauge.elements[v].matrix.T)
        for (u, v), h in zip(spacetime.edges, connection.transports)
    )
    result = DiscreteConnection(transports=transports)

    if spacetime.kind == CYCLE:
        g_base = gauge.elements[spacetime.base].matrix
        before = holonomy(spacetime, connection, cfg)[0].matrix
        after = holonomy(spacetime, result, cfg)[0].matrix
        residual = float(np.max(np.abs(after - g_base @ before @ g_base.T)))
        if residual > cfg.tol_orth * len(spacetime.edges):
            raise IdentityViolationError(
                f"holonomy did not transform by conjugation: residual {residual:.3e}",
                {"residual": residual},
            )
    return result


def trivializing_gauge(
    spacetime: DiscreteSpacetime,
    connection: DiscreteConnection,
    cfg: Optional[Config] = None,
    n: Optional[int] = None,
) -> GaugeTransform:
    """g_0 = 1, g_{i+1} = g_i h_i: all transports become the identity except the closing edge of a cycle.

    `n` sizes the identity on an edgeless spacetime, where the connection carries no dimension.
    """
    cfg = cfg or default_config()
    _check_connection(spacetime, connection, cfg)
    if connection.transports or n is None:
        n = connection.n
    elements = [identity_element(n)]
    for i in range(spacetime.vertices - 1):
        elements.append(compose(elements[i], connection.transports[i]))
    return GaugeTransform(elements=tuple(elements))


def connection_distance(c1: DiscreteConnection, c2: DiscreteConnection) -> float:
    """max entrywise distance between corresponding transports."""
    return max(
        (float(np.max(np.abs(a.matrix - b.matrix))) for a, b in zip(c1.transports, c2.transports)),
        default=0.0,
    )


def spectral_mismatch(a: np.ndarray, b: np.ndarray) -> float:
    """Largest eigenvalue distance under the best matching of the two multisets."""
    ea = linalg.eigvals(a)
    eb = linalg.eigvals(b)
    cost = np.abs(ea[:, None] - eb[None, :])
    rows, cols = optimize.linear_sum_assignment(cost)
    return float(np.max(cost[rows, cols], initial=0.0))


def _find_conjugator(group: ResidualGroup, a: np.ndarray, b: np.ndarray, seed: int, cfg: Config):
    """k in the group with k a k^{-1} = b, by least squares over exp(theta . X)."""

    def residual(theta: np.ndarray) -> np.ndarray:
        k = linalg.expm(group.algebra_element(theta))
        return (k @ a - b @ k).ravel()

    best = (np.inf, None)
    starts = [np.zeros(group.dim)] + [
        np.pi * np.random.default_rng(s).standard_normal(group.dim) for s in trial_seeds(seed, _CONJUGATOR_STARTS)
    ]
    for theta0 in starts:
        solution = optimize.least_squares(residual, theta0, xtol=1e-15, ftol=1e-15, gtol=1e-15)
        value = float(np.max(np.abs(residual(solution.x)), initial=0.0))
        if value < best[0]:
            best = (value, solution.x)
        if value <= cfg.tol_conj:
            break
    value, theta = best
    return value, group.element(theta)


def find_equivalence(
    spacetime: DiscreteSpacetime,
    c1: DiscreteConnection,
    c2: DiscreteConnection,
    group: ResidualGroup,
    seed: Optional[int] = None,
    cfg: Optional[Config] = None,
) -> Equivalence:
    """Decide gauge equivalence; on success the gauge maps c1 onto c2.

    Abelian groups compare holonomies directly. Nonabelian groups first compare
    eigenvalue multisets and then search for a conjugator numerically, which is
    sound within tol_conj but not a formal decision procedure.
    """
    cfg = cfg or default_config()
    seed = cfg.seed if seed is None else seed
    _check_connection(spacetime, c1, cfg)
    _check_connection(spacetime, c2, cfg)
    # a single-vertex path has no transports; its connections take the group's dimension
    if spacetime.edges:
        if c1.n != c2.n:
            raise InputError(f"connections act on different dimensions: {c1.n} and {c2.n}")
        if c1.n != group.n:
            raise InputError(f"connections act on R^{c1.n}, residual group on R^{group.n}")
    n = group.n

    g1 = trivializing_gauge(spacetime, c1, cfg, n)
    g2 = trivializing_gauge(spacetime, c2, cfg, n)

    if spacetime.kind == PATH:
        conjugator = identity_element(n)
        method = "tree"
    else:
        hol1 = holonomy(spacetime, c1, cfg)[0].matrix
        hol2 = holonomy(spacetime, c2, cfg)[0].matrix
        if group.is_abelian:
            method = "abelian"
            distance = float(np.max(np.abs(hol1 - hol2)))
            if distance > cfg.tol_conj:
                return Equivalence(equivalent=False, method=method, residual=distance)
            conjugator = identity_element(n)
        else:
            method = "conjugator-search"
            mismatch = spectral_mismatch(hol1, hol2)
            if mismatch > cfg.tol_conj:
                return Equivalence(equivalent=False, method="eigenvalues", residual=mismatch)
            value, conjugator = _find_conjugator(group, hol1, hol2, seed, cfg)
            if value > cfg.tol_conj:
                logger.debug(f"No conjugator found: residual {value:.3e}")
                return Equivalence(equivalent=False, method=method, residual=value)

    # k_v = g2_v^{-1} k g1_v maps c1 onto c2
    gauge = GaugeTransform(
        elements=tuple(compose(inverse(b), compose(conjugator, a)) for a, b in zip(g1.elements, g2.elements))
    )
    residual = connection_distance(apply_gauge(spacetime, c1, gauge, cfg), c2)
    tolerance = max(cfg.tol_conj, cfg.tol_orth) * (1 + len(spacetime.edges))
    return Equivalence(equivalent=residual <= tolerance, method=method, residual=residual, gauge=gauge)


def equivalent(
    spacetime: DiscreteSpacetime,
    c1: DiscreteConnection,
    c2: DiscreteConnection,
    group: ResidualGroup,
    cfg: Optional[Config] = None,
) -> bool:
    return find_equivalence(spacetime, c1, c2, group, cfg=cfg).equivalent


def classify(
    spacetime: DiscreteSpacetime,
    connections: Sequence[DiscreteConnection],
    group: ResidualGroup,
    cfg: Optional[Config] = None,
) -> Classification:
    """Union-find over pairwise equivalence; classes are listed by smallest member."""
    cfg = cfg or default_config()
    if not connections:
        raise InputError("at least one connection is required")

    pairs = list(combinations(range(len(connections)), 2))

    def check(pair) -> bool:
        i, j = pair
        return equivalent(spacetime, connections[i], connections[j], group, cfg)

    if cfg.parallel and len(pairs) > 1:
        with ThreadPoolExecutor() as pool:
            verdicts = list(pool.map(check, pairs))
    else:
        verdicts = [check(p) for p in pairs]

    parent = list(range(len(connections)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for (i, j), same in zip(pairs, verdicts):
        if same:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

    classes = {}
    for i in range(len(connections)):
        classes.setdefault(find(i), []).append(i)
    result = Classification(classes=[classes[root] for root in sorted(classes)])
    logger.info(f"Classified {len(connections)} connections into {result.count} classes")
    return result
