"""Brute-force plane geometry used to cross-check :mod:`amac.circle_group`.

Nothing here uses the closed forms.  Points are built in Cartesian
coordinates, lines are intersected with the circle by solving the
quadratic, and the answer is converted back to an angle.
"""

import math
from dataclasses import dataclass

from .circle_group import EPS_POLE, circular_distance, normalize_angle
from .errors import DegenerateReference

CENTER = (0.0, 1.0)


@dataclass(frozen=True)
class CirclePoint:
    x: float
    y: float

    def on_circle(self, tol=1e-12):
        return abs(self.x ** 2 + (self.y - 1.0) ** 2 - 1.0) <= tol

    def angle(self):
        return normalize_angle(math.atan2(self.x, 1.0 - self.y))


def angle_to_point(theta):
    return CirclePoint(math.sin(theta), 1.0 - math.cos(theta))


def _line_circle(px, py, dx, dy):
    """Roots t of |(px, py) + t(dx, dy) - center|^2 = 1, ascending."""
    ex, ey = px - CENTER[0], py - CENTER[1]
    qa = dx * dx + dy * dy
    qb = 2.0 * (ex * dx + ey * dy)
    qc = ex * ex + ey * ey - 1.0
    disc = qb * qb - 4.0 * qa * qc
    root = math.sqrt(max(disc, 0.0))
    return sorted(((-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)))


def _second_intersection(p, dx, dy):
    """Intersection of the line through circle point ``p`` with direction
    (dx, dy) that is not ``p``; ``p`` itself when the line is tangent."""
    roots = _line_circle(p.x, p.y, dx, dy)
    # p sits at t = 0 up to rounding; take the root farther from it
    t = max(roots, key=abs)
    if abs(roots[0] - roots[1]) <= 1e-15 * (1.0 + abs(t)):
        t = 0.0
    return CirclePoint(p.x + t * dx, p.y + t * dy)


def geometric_multiply(a, b, o):
    """Parallel-chord product: draw chord AB (the tangent at A when A = B),
    translate it through O and return where it meets the circle again."""
    pa, pb, po = angle_to_point(a), angle_to_point(b), angle_to_point(o)
    if a == b:
        dx, dy = math.cos(a), math.sin(a)
    else:
        dx, dy = pb.x - pa.x, pb.y - pa.y
    q = _second_intersection(po, dx, dy)
    return q.angle()


def geometric_project(x, pole):
    """Join the pole point to ``(x, 0)`` and intersect that line with the circle."""
    pole = normalize_angle(pole)
    if circular_distance(pole, 0.0) < EPS_POLE:
        raise DegenerateReference(f"pole {pole!r} coincides with the tangent point")
    po = angle_to_point(pole)
    q = _second_intersection(po, x - po.x, -po.y)
    return q.angle()
