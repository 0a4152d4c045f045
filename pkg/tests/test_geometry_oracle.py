import math
import random

import pytest

from amac.circle_group import TWO_PI, circular_distance, multiply, project
from amac.errors import DegenerateReference
from amac.geometry_oracle import (CirclePoint, angle_to_point, geometric_multiply,
                                  geometric_project)

PI = math.pi


@pytest.mark.parametrize("theta, xy", [
    (0.0, (0.0, 0.0)),
    (PI, (0.0, 2.0)),
    (PI / 2, (1.0, 1.0)),
])
def test_angle_to_point(theta, xy):
    p = angle_to_point(theta)
    assert (p.x, p.y) == pytest.approx(xy, abs=1e-15)
    assert p.on_circle()


def test_geometric_multiply_examples():
    assert geometric_multiply(2.5, 1.0, 1.0) == pytest.approx(2.5, abs=1e-12)
    assert circular_distance(geometric_multiply(1.0, 2.0, PI), multiply(1.0, 2.0, PI)) <= 1e-9
    # chord AB degenerates to the tangent at A = O; the parallel line touches at O
    assert geometric_multiply(0.7, 0.7, 0.7) == pytest.approx(0.7, abs=1e-12)


def test_geometric_project_examples():
    assert geometric_project(0.0, PI) == pytest.approx(0.0, abs=1e-15)
    assert geometric_project(2.0, PI) == pytest.approx(PI / 2, abs=1e-9)
    with pytest.raises(DegenerateReference):
        geometric_project(1.0, 0.0)


def test_tangent_chord_squares():
    # A * A is reached by the tangent direction at A
    rng = random.Random(5)
    for _ in range(200):
        a, o = rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI)
        assert circular_distance(geometric_multiply(a, a, o), multiply(a, a, o)) <= 1e-9


def test_constructed_points_lie_on_circle():
    rng = random.Random(11)
    for _ in range(1000):
        a, b, o = (rng.uniform(0, TWO_PI) for _ in range(3))
        assert angle_to_point(geometric_multiply(a, b, o)).on_circle()
        x, pole = rng.uniform(-50, 50), rng.uniform(0.01, TWO_PI - 0.01)
        assert angle_to_point(geometric_project(x, pole)).on_circle()


def test_oracle_agreement_sweep():
    rng = random.Random(7)
    for _ in range(2000):
        a, b, o = (rng.uniform(0, TWO_PI) for _ in range(3))
        if circular_distance(a, b) < 1e-6:
            continue
        assert circular_distance(multiply(a, b, o), geometric_multiply(a, b, o)) <= 1e-9
        x, pole = rng.uniform(-1e3, 1e3), rng.uniform(1e-3, TWO_PI - 1e-3)
        assert circular_distance(project(x, pole), geometric_project(x, pole)) <= 1e-9


def test_circle_point_angle_round_trip():
    assert CirclePoint(1.0, 1.0).angle() == pytest.approx(PI / 2)
    assert CirclePoint(-1.0, 1.0).angle() == pytest.approx(3 * PI / 2)
