"""Ordered-subsequence matcher over the shared identifier string."""

from .errors import InvalidIdentifier


def _as_bytes(s):
    if isinstance(s, str):
        try:
            return s.encode("ascii")
        except UnicodeEncodeError as exc:
            raise InvalidIdentifier(f"identifier must be ASCII: {s!r}") from exc
    return bytes(s)


class RefMatcher:
    """Tracks how far into the identifier the message has progressed.

    ``feed`` answers whether a byte is the next expected identifier byte.
    After the last identifier byte is seen the cursor wraps back to the
    start, so the identifier is matched repeatedly across a long message.
    """

    __slots__ = ("ref_bytes", "cursor")

    def __init__(self, s):
        ref = _as_bytes(s)
        if not ref:
            raise InvalidIdentifier("identifier must not be empty")
        if any(b > 127 for b in ref):
            raise InvalidIdentifier(f"identifier must be ASCII: {ref!r}")
        self.ref_bytes = ref
        self.cursor = 0

    def feed(self, c: int) -> bool:
        if c != self.ref_bytes[self.cursor]:
            return False
        self.cursor += 1
        if self.cursor == len(self.ref_bytes):
            self.cursor = 0
        return True

    @property
    def pending(self) -> int:
        """The identifier byte the next match must equal."""
        return self.ref_bytes[self.cursor]

    def reset(self):
        self.cursor = 0
        return self

    def __repr__(self):
        return f"RefMatcher({self.ref_bytes!r}, cursor={self.cursor})"


def new_matcher(s) -> RefMatcher:
    return RefMatcher(s)


def split_blocks(msg, ident):
    """Run a fresh matcher over ``msg``.

    Returns ``(blocks, match_positions)`` where ``blocks[k]`` lists the
    message offsets of the non-matching bytes that precede the k-th match;
    the last entry holds the trailing bytes after the final match.
    """
    m = RefMatcher(ident)
    blocks, matches, cur = [], [], []
    for i, c in enumerate(msg):
        if m.feed(c):
            blocks.append(cur)
            matches.append(i)
            cur = []
        else:
            cur.append(i)
    blocks.append(cur)
    return blocks, matches
