"""Block heuristic functions: fold a block of message bytes into one real."""

from dataclasses import dataclass, field
from typing import List

from .circle_group import product, project


@dataclass
class Block:
    """``chain`` is the carried-over slot ``block[0]``; ``codes`` the bytes
    collected since the last reference match."""

    chain: float = 0.0
    codes: List[float] = field(default_factory=list)

    def values(self):
        yield self.chain
        yield from self.codes


@dataclass(frozen=True)
class BhfKind:
    variant: str = "h1"
    h2_base: int = 10

    def __post_init__(self):
        if self.variant not in HEURISTICS:
            raise ValueError(f"unknown heuristic {self.variant!r}")
        if int(self.h2_base) != self.h2_base or self.h2_base < 2:
            raise ValueError(f"h2_base must be an integer >= 2, got {self.h2_base!r}")

    def apply(self, block, cref):
        if self.variant == "h1":
            return bhf1(block, cref)
        return bhf2(block, self.h2_base)


def bhf1(block: Block, cref: float) -> float:
    """Project every value from ``cref`` and multiply the images together.

    The group is abelian, so the result does not depend on the order of
    ``block.codes``.
    """
    # same value as folding multiply(acc, point, cref) from acc = 0, but
    # rounded once so reordering codes cannot change a single bit
    return product([0.0, *(project(v, cref) for v in block.values())], cref)


def bhf2(block: Block, base: int = 10) -> float:
    """Horner-style fold with a multiplier that grows by one per value.

    Order sensitive.  Long blocks overflow to ``inf``; callers must check.
    """
    acc = 0.0
    mult = base
    for v in block.values():
        acc = acc * mult + v
        mult += 1
    return acc


HEURISTICS = ("h1", "h2")
