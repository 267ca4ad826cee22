"""
Tests for graph spacetimes, holonomies and the classification of vacuum pairs.
"""

import numpy as np
import pytest

from app.errors import InputError
from app.holonomy import (
    CYCLE,
    PATH,
    ResidualGroup,
    apply_gauge,
    build_spacetime,
    classify,
    compose_gauges,
    connection_distance,
    connection_from_matrices,
    connection_from_parameters,
    equivalent,
    find_equivalence,
    holonomy,
    holonomy_angle,
    identity_connection,
    random_connection,
    random_gauge,
    spectral_mismatch,
    trivializing_gauge,
)
from app.liealg import su2
from app.rep import build_representation

pytestmark = [pytest.mark.unit, pytest.mark.holonomy]


@pytest.fixture(scope="module")
def circle():
    return ResidualGroup.circle()


@pytest.fixture(scope="module")
def rotations():
    """SO(3) generated by the adjoint representation of su(2)."""
    algebra = su2()
    rep = build_representation(algebra, np.transpose(algebra.structure_constants, (0, 2, 1)))
    return ResidualGroup.from_stabilizer(rep, np.eye(3), name="SO(3)")


@pytest.fixture(scope="module")
def cycle():
    return build_spacetime(CYCLE, 4)


def test_build_spacetime():
    """Test a path on n vertices has n - 1 edges and a cycle of length n closes back to the base."""
    path = build_spacetime(PATH, 5)
    ring = build_spacetime(CYCLE, 3)

    assert path.edges == ((0, 1), (1, 2), (2, 3), (3, 4))
    assert path.loops == 0
    assert ring.edges == ((0, 1), (1, 2), (2, 0))
    assert ring.loops == 1


def test_build_spacetime_rejects_unknown_kind():
    """Test only paths and cycles are supported."""
    with pytest.raises(InputError, match="spacetime kind"):
        build_spacetime("torus", 3)
    with pytest.raises(InputError, match="positive"):
        build_spacetime(CYCLE, 0)


def test_circle_holonomy_angle_is_total_angle(cycle, circle):
    """Test the SO(2) holonomy rotates by the sum of the edge angles."""
    connection = connection_from_parameters(cycle, circle, [0.1, 0.2, 0.3, 0.4])
    (loop,) = holonomy(cycle, connection)

    assert holonomy_angle(loop) == pytest.approx(1.0)


def test_path_has_no_holonomy(circle):
    """Test a tree has no loops."""
    path = build_spacetime(PATH, 3)
    assert holonomy(path, connection_from_parameters(path, circle, [0.5, 0.7])) == []


def test_trivializing_gauge_clears_tree_edges(cycle, rotations):
    """Test the trivializing gauge moves the whole holonomy onto the closing edge."""
    connection = random_connection(cycle, rotations, seed=4)
    gauge = trivializing_gauge(cycle, connection)
    trivial = apply_gauge(cycle, connection, gauge)

    for transport in trivial.transports[:-1]:
        np.testing.assert_allclose(transport.matrix, np.eye(3), atol=1e-12)
    np.testing.assert_allclose(trivial.transports[-1].matrix, holonomy(cycle, connection)[0].matrix, atol=1e-12)


def test_gauge_conjugates_holonomy(cycle, rotations):
    """Test a gauge transformation conjugates the holonomy by the base element."""
    connection = random_connection(cycle, rotations, seed=1)
    gauge = random_gauge(cycle, rotations, seed=2)
    moved = apply_gauge(cycle, connection, gauge)

    g0 = gauge.elements[0].matrix
    np.testing.assert_allclose(
        holonomy(cycle, moved)[0].matrix,
        g0 @ holonomy(cycle, connection)[0].matrix @ g0.T,
        atol=1e-12,
    )
    assert spectral_mismatch(holonomy(cycle, moved)[0].matrix, holonomy(cycle, connection)[0].matrix) < 1e-12


def test_gauge_composition(cycle, rotations):
    """Test applying g1 then g2 equals applying g2 g1."""
    connection = random_connection(cycle, rotations, seed=5)
    g1 = random_gauge(cycle, rotations, seed=6)
    g2 = random_gauge(cycle, rotations, seed=7)

    stepwise = apply_gauge(cycle, apply_gauge(cycle, connection, g1), g2)
    combined = apply_gauge(cycle, connection, compose_gauges(g2, g1))
    assert connection_distance(stepwise, combined) < 1e-12


def test_abelian_equivalence_by_total_angle(cycle, circle):
    """Test SO(2) connections are equivalent iff their total angles agree mod 2 pi."""
    a = connection_from_parameters(cycle, circle, [1.0, 0.0, 0.0, 0.0])
    b = connection_from_parameters(cycle, circle, [0.25, 0.25, 0.25, 0.25])
    c = connection_from_parameters(cycle, circle, [1.0 + 2.0 * np.pi, 0.0, 0.0, 0.0])
    d = connection_from_parameters(cycle, circle, [0.5, 0.0, 0.0, 0.0])

    verdict = find_equivalence(cycle, a, b, circle)
    assert verdict.equivalent
    assert verdict.method == "abelian"
    assert connection_distance(apply_gauge(cycle, a, verdict.gauge), b) < 1e-10
    assert equivalent(cycle, a, c, circle)
    assert not equivalent(cycle, a, d, circle)


def test_nonabelian_equivalence_certificate(cycle, rotations):
    """Test a gauge copy is found equivalent with a certificate mapping one onto the other."""
    connection = random_connection(cycle, rotations, seed=8)
    copy = apply_gauge(cycle, connection, random_gauge(cycle, rotations, seed=9))
    verdict = find_equivalence(cycle, connection, copy, rotations, seed=0)

    assert verdict.equivalent
    assert verdict.method == "conjugator-search"
    assert connection_distance(apply_gauge(cycle, connection, verdict.gauge), copy) < 1e-7


def test_nonabelian_different_angles_are_inequivalent(cycle, rotations):
    """Test holonomies with different rotation angles are separated by their eigenvalues."""
    a = connection_from_parameters(cycle, rotations, [[0.2, 0.0, 0.0]] * 4)
    b = connection_from_parameters(cycle, rotations, [[0.0, 0.3, 0.0]] * 4)
    verdict = find_equivalence(cycle, a, b, rotations)

    assert not verdict.equivalent
    assert verdict.method == "eigenvalues"
    assert verdict.gauge is None


def test_path_connections_all_equivalent(circle):
    """Test every connection on a tree is gauge trivial."""
    path = build_spacetime(PATH, 6)
    connections = [random_connection(path, circle, seed) for seed in range(4)]
    connections.append(identity_connection(path, 2))
    result = classify(path, connections, circle)

    assert result.count == 1
    assert result.classes == [[0, 1, 2, 3, 4]]


def test_single_vertex_path_is_one_class(circle):
    """Test connections on an edgeless path are all equivalent with identity certificates."""
    point = build_spacetime(PATH, 1)
    connections = [connection_from_parameters(point, circle, []) for _ in range(3)]
    result = classify(point, connections, circle)

    assert result.count == 1
    assert result.classes == [[0, 1, 2]]

    verdict = find_equivalence(point, connections[0], connections[1], circle)
    assert verdict.equivalent
    assert verdict.method == "tree"
    assert len(verdict.gauge.elements) == 1
    np.testing.assert_allclose(verdict.gauge.elements[0].matrix, np.eye(2))


def test_classify_cycle_by_total_angle(cycle, circle):
    """Test classes of SO(2) connections on a cycle are labelled by the total angle."""
    angles = [
        [0.0, 0.0, 0.0, 0.0],
        [np.pi / 4] * 4,
        [1.0, -1.0, 2.0, -2.0],
        [np.pi, 0.0, 0.0, 0.0],
        [0.3, 0.0, 0.0, 0.0],
    ]
    connections = [connection_from_parameters(cycle, circle, a) for a in angles]
    result = classify(cycle, connections, circle)

    assert result.classes == [[0, 2], [1, 3], [4]]
    assert result.representatives == [0, 1, 4]
    assert result.to_dict()["count"] == 3


def test_classify_is_deterministic_in_parallel(cycle, circle, cfg):
    """Test the parallel sweep gives the same classes."""
    from dataclasses import replace

    connections = [connection_from_parameters(cycle, circle, [t, 0.0, 0.0, 0.0]) for t in (0.0, 1.0, 0.0, 1.0)]
    serial = classify(cycle, connections, circle, cfg)
    parallel = classify(cycle, connections, circle, replace(cfg, parallel=True))

    assert serial.classes == parallel.classes == [[0, 2], [1, 3]]


def test_connection_from_matrices_rejects_non_orthogonal(cycle):
    """Test transports must be orthogonal."""
    matrices = [np.eye(2)] * 3 + [np.array([[1.0, 0.5], [0.0, 1.0]])]
    with pytest.raises(InputError, match="orthogonal"):
        connection_from_matrices(cycle, matrices)


def test_connection_edge_count(cycle, circle):
    """Test one transport per edge is required."""
    with pytest.raises(InputError, match="4 edge parameters"):
        connection_from_parameters(cycle, circle, [0.1, 0.2])


def test_classify_requires_connections(cycle, circle):
    """Test an empty sample is rejected."""
    with pytest.raises(InputError, match="at least one"):
        classify(cycle, [], circle)


def test_residual_group_properties(circle, rotations, adjoint_model, adjoint_vacuum):
    """Test the circle and the adjoint stabilizer are abelian and SO(3) is not."""
    _, analysis = adjoint_vacuum
    unbroken = ResidualGroup.from_stabilizer(adjoint_model.representation, analysis.lie_h)

    assert circle.is_abelian and circle.dim == 1 and circle.n == 2
    assert unbroken.is_abelian and unbroken.dim == 1 and unbroken.n == 3
    assert not rotations.is_abelian
    np.testing.assert_allclose(unbroken.random_element(3).act(analysis.z0), analysis.z0, atol=1e-12)
    assert rotations.to_dict() == {"name": "SO(3)", "dim": 3, "n": 3, "abelian": False}
