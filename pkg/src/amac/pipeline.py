"""AMAC tag generation and verification."""

import logging
import math
from dataclasses import dataclass

from .block_heuristics import Block, BhfKind
from .circle_group import multiply, normalize_angle, project, project_back
from .errors import (AmacError, BlockOverflow, DegenerateReference, InvalidKey,
                     ParseError, PoleProjection)
from .ref_matcher import RefMatcher

log = logging.getLogger(__name__)

PI = math.pi
TAG_PREFIX = "AMAC1"


def _as_bytes(s):
    return s.encode("utf-8") if isinstance(s, str) else bytes(s)


@dataclass(frozen=True)
class KeyPair:
    """The shared secret: a primary key plus the identifier string."""

    primary_key: bytes
    identifier: bytes

    def __post_init__(self):
        object.__setattr__(self, "primary_key", _as_bytes(self.primary_key))
        object.__setattr__(self, "identifier", _as_bytes(self.identifier))
        if not self.primary_key:
            raise InvalidKey("primary key must not be empty")
        RefMatcher(self.identifier)  # validates


@dataclass(frozen=True)
class Tag:
    value: float
    kind: BhfKind = BhfKind()

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"tag value must be finite, got {self.value!r}")

    def display(self) -> str:
        return f"{self.value:.17g}"

    def __str__(self):
        return serialize_tag(self)


def serialize_tag(tag: Tag) -> str:
    return f"{TAG_PREFIX};{tag.kind.variant};{tag.kind.h2_base};{tag.value.hex()}"


def parse_tag(text: str) -> Tag:
    parts = text.strip().split(";")
    if len(parts) != 4 or parts[0] != TAG_PREFIX:
        raise ParseError(f"malformed tag: {text!r}")
    _, variant, base, value = parts
    try:
        kind = BhfKind(variant, int(base))
        return Tag(float.fromhex(value), kind)
    except ValueError as exc:
        raise ParseError(f"malformed tag: {text!r}: {exc}") from exc


def encode_key(s) -> float:
    """Numeric form of a key string: the sum of its byte values."""
    s = _as_bytes(s)
    if not s:
        raise InvalidKey("key must not be empty")
    return float(sum(s))


def _at(step, fn, *args):
    """Run ``fn`` and tag any pipeline error with the failing step."""
    try:
        return fn(*args)
    except (DegenerateReference, PoleProjection) as exc:
        raise type(exc)(f"{step}: {exc}", step=step) from exc


def amac_encode(msg, keys: KeyPair, kind: BhfKind = BhfKind(), literal=False) -> Tag:
    """Compute the AMAC tag of ``msg``.

    ``literal=True`` is the uncorrected algorithm: the reference point is
    not moved after the primary key is folded in, and bytes after the last
    identifier match are ignored.  The default mode
    chains the primary key into the reference point and flushes the
    trailing block, so every key and message byte reaches the tag.
    """
    msg = _as_bytes(msg)
    key_k = project(encode_key(keys.primary_key), PI)
    ckey = project(encode_key(keys.identifier), PI)
    matcher = RefMatcher(keys.identifier)

    tag = 0.0
    block = Block()
    cref = PI
    tag = multiply(tag, key_k, cref)
    if not literal:
        cref = normalize_angle(PI - tag)

    def flush(step):
        nonlocal tag, cref
        value = _at(step, kind.apply, block, cref)
        if not math.isfinite(value):
            raise BlockOverflow(
                f"{step}: {kind.variant} heuristic overflowed on a block of "
                f"{len(block.codes)} bytes", step=step)
        block.chain = _at(step, project, value, cref)
        tag = multiply(ckey, block.chain, cref)
        cref = normalize_angle(PI - tag)
        block.codes.clear()

    for i, c in enumerate(msg):
        if matcher.feed(c):
            flush(f"flush at byte {i}")
        else:
            block.codes.append(float(c))
    if block.codes and not literal:
        flush("trailing flush")

    tag = multiply(tag, ckey, cref)
    return Tag(_at("final back-projection", project_back, tag, PI), kind)


def verify(msg, keys: KeyPair, kind: BhfKind, expected: Tag, literal=False) -> bool:
    """Recompute the tag and compare serializations exactly.

    A recompute that hits a degenerate state counts as a failed
    verification and is logged.
    """
    try:
        actual = amac_encode(msg, keys, kind, literal=literal)
    except AmacError as exc:
        log.warning("verification recompute failed: %s", exc)
        return False
    return serialize_tag(actual) == serialize_tag(expected)
