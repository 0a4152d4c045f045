"""Algebraic message authentication codes built on a circle group law."""

from .block_heuristics import Block, BhfKind, bhf1, bhf2
from .circle_group import (TWO_PI, inverse, multiply, normalize_angle, product,
                           project, project_back)
from .errors import (AmacError, BlockOverflow, DegenerateReference, InvalidAngle,
                     InvalidIdentifier, InvalidKey, ParseError, PoleProjection)
from .pipeline import (KeyPair, Tag, amac_encode, encode_key, parse_tag,
                       serialize_tag, verify)
from .ref_matcher import RefMatcher, new_matcher

__all__ = [
    "AmacError", "Block", "BhfKind", "BlockOverflow", "DegenerateReference",
    "InvalidAngle", "InvalidIdentifier", "InvalidKey", "KeyPair", "ParseError",
    "PoleProjection", "RefMatcher", "TWO_PI", "Tag", "amac_encode", "bhf1",
    "bhf2", "encode_key", "inverse", "multiply", "new_matcher",
    "normalize_angle", "parse_tag", "product", "project", "project_back",
    "serialize_tag", "verify",
]
