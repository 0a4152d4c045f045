import pytest
from hypothesis import given, strategies as st

from amac.errors import InvalidIdentifier
from amac.ref_matcher import RefMatcher, new_matcher, split_blocks


@pytest.mark.parametrize("s", ["ALC", "theveninester", b"x"])
def test_new_matcher(s):
    assert new_matcher(s).cursor == 0


@pytest.mark.parametrize("s", ["", b"", "café", b"\xff"])
def test_invalid_identifier(s):
    with pytest.raises(InvalidIdentifier):
        RefMatcher(s)


def test_trace_with_wrap():
    m = RefMatcher("ALC")
    assert [m.feed(c) for c in b"APLCA"] == [True, False, True, True, True]
    assert m.cursor == 1


def test_out_of_order_char():
    assert RefMatcher("ALC").feed(ord("L")) is False


def test_case_sensitive():
    assert RefMatcher("ALC").feed(ord("a")) is False


@given(st.binary(min_size=1, max_size=30).map(lambda b: bytes(c & 0x7F for c in b)))
def test_own_bytes_all_match(s):
    m = RefMatcher(s)
    assert all(m.feed(c) for c in s)
    assert m.cursor == 0


def test_reset():
    m = RefMatcher("ALC")
    m.feed(ord("A"))
    m.reset()
    assert m.cursor == 0
    m.reset()
    assert m.cursor == 0
    assert m.feed(ord("A"))


@given(st.binary(max_size=200), st.text(alphabet="abcdefgh ", min_size=1, max_size=8))
def test_determinism_and_rejected_bytes(msg, ident):
    a, b = RefMatcher(ident), RefMatcher(ident)
    for c in msg:
        pending = a.pending
        hit = a.feed(c)
        assert hit == b.feed(c)
        if not hit:
            assert c != pending


def test_split_blocks():
    blocks, matches = split_blocks(b"xAyyLzC!", "ALC")
    assert matches == [1, 4, 6]
    assert blocks == [[0], [2, 3], [5], [7]]
