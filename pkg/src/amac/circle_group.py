"""Stereographic projection between a tangent line and a circle, plus the
parallel-chord group law on that circle.

The circle is the unit circle centred at (0, 1).  It touches the line
y = 0 at the origin, which is the point at angle 0.  An angle ``t``
names the circle point ``(sin t, 1 - cos t)``, so arc length equals angle
and ``pi`` is the point diametrically opposite the tangent point.
"""

import math

from .errors import DegenerateReference, InvalidAngle, PoleProjection

TWO_PI = 2.0 * math.pi

#: Angles closer than this (in radians) to a singular position are rejected.
EPS_POLE = 1e-12


def normalize_angle(t: float) -> float:
    """Reduce ``t`` modulo 2*pi into ``[0, 2*pi)``."""
    if not math.isfinite(t):
        raise InvalidAngle(f"angle must be finite, got {t!r}")
    r = t % TWO_PI
    # x % TWO_PI can round up to TWO_PI for tiny negative x
    if r >= TWO_PI:
        r = 0.0
    return r + 0.0


def circular_distance(a: float, b: float) -> float:
    """Shortest arc length between two angles."""
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def _near(t: float, target: float) -> bool:
    return circular_distance(t, target) < EPS_POLE


def multiply(a: float, b: float, o: float) -> float:
    """Product of circle points ``a`` and ``b`` with ``o`` as identity.

    The chord through ``o`` parallel to chord ``ab`` meets the circle again
    at ``a + b - o``.  The sum is evaluated exactly (``math.fsum``) before a
    single rounding, which makes the operation exactly commutative and
    ``multiply(a, o, o) == a`` exactly.
    """
    for v in (a, b, o):
        if not math.isfinite(v):
            raise InvalidAngle(f"angle must be finite, got {v!r}")
    q = math.fsum((a, b, -o))
    if q < 0.0:
        q = math.fsum((a, b, -o, TWO_PI))
    elif q >= TWO_PI:
        q = math.fsum((a, b, -o, -TWO_PI))
    return normalize_angle(q)


# Exact fixed-point scale: every finite double is an integer multiple of 2**-1074.
_FIX_BITS = 1074
_FIX_ONE = 1 << _FIX_BITS


def _to_fixed(v):
    n, d = v.as_integer_ratio()
    return n << (_FIX_BITS - d.bit_length() + 1)


_TWO_PI_FIXED = _to_fixed(TWO_PI)


def product(points, o: float) -> float:
    """Group product of all ``points`` with identity ``o``.

    Evaluated exactly and rounded once, so the result is bit-identical for
    every ordering of ``points``.  For two points it equals :func:`multiply`.
    """
    total = 0
    n = 0
    for p in points:
        if not math.isfinite(p):
            raise InvalidAngle(f"angle must be finite, got {p!r}")
        total += _to_fixed(p)
        n += 1
    if n == 0:
        return normalize_angle(o)
    total -= (n - 1) * _to_fixed(o)
    return normalize_angle((total % _TWO_PI_FIXED) / _FIX_ONE)


def inverse(a: float, o: float) -> float:
    """Group inverse of ``a`` when ``o`` is the identity."""
    return normalize_angle(math.fsum((o, o, -a)))


def check_pole(pole: float) -> float:
    pole = normalize_angle(pole)
    if _near(pole, 0.0):
        raise DegenerateReference(
            f"pole {pole!r} coincides with the tangent point; projection undefined")
    return pole


def project(x: float, pole: float) -> float:
    """Map line coordinate ``x`` to a circle angle, projecting from ``pole``.

    The line through the pole point and ``(x, 0)`` meets the circle in one
    further point; its angle is returned.  With ``pole == pi`` this is the
    classical ``2 * atan(x / 2)``.
    """
    if not math.isfinite(x):
        raise InvalidAngle(f"line coordinate must be finite, got {x!r}")
    pole = check_pole(pole)
    half = 0.5 * pole
    s = math.sin(half)
    c = math.cos(half) / s
    shift = x / (2.0 * s * s)
    # difference of two arccot values; x == 0 gives exactly 0
    theta = 2.0 * (math.atan2(1.0, c - shift) - math.atan2(1.0, c))
    return normalize_angle(theta)


def project_back(theta: float, pole: float) -> float:
    """Inverse of :func:`project`: the line coordinate whose image is ``theta``.

    The point ``-pole`` is where the line through the pole runs parallel to
    the tangent line; it has no finite preimage.  For ``pole == pi`` that
    point is the pole itself.
    """
    theta = normalize_angle(theta)
    pole = check_pole(pole)
    if _near(theta, normalize_angle(-pole)):
        raise PoleProjection(
            f"angle {theta!r} has no finite preimage for pole {pole!r}")
    if theta == 0.0:
        return 0.0
    half = 0.5 * pole
    s = math.sin(half)
    mid = 0.5 * (theta + pole)
    return 2.0 * s * (math.cos(half) - s * math.cos(mid) / math.sin(mid))
