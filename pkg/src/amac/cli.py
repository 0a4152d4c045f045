"""Command line front end: ``amac sign | verify | forge-demo | bench``.

Exit codes: 0 success, 1 verification failed / no forgery block found,
2 usage or input error, 3 the pipeline reached a degenerate state.
"""

import argparse
import gc
import os
import random
import sys
import time

from .block_heuristics import BhfKind
from .errors import (BlockOverflow, DegenerateReference, InvalidIdentifier,
                     InvalidKey, ParseError, PoleProjection)
from .pipeline import KeyPair, amac_encode, parse_tag, serialize_tag, verify
from .ref_matcher import split_blocks

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3

BENCH_SIZES = (10_000, 20_000, 100_000, 200_000)

_PIPELINE_ERRORS = (DegenerateReference, PoleProjection, BlockOverflow)


class UsageError(Exception):
    pass


def _read_input(path):
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _keys(args):
    key = args.key if args.key is not None else os.environ.get("AMAC_KEY", "")
    ident = args.ident if args.ident is not None else os.environ.get("AMAC_IDENT", "")
    return KeyPair(key, ident)


def _kind(args, variant=None):
    try:
        return BhfKind(variant or args.heuristic, args.h2_base)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_sign(args, out):
    keys = _keys(args)
    msg = _read_input(args.input)
    tag = amac_encode(msg, keys, _kind(args), literal=args.compat_literal)
    print(serialize_tag(tag), file=out)
    print(tag.display(), file=out)
    return EXIT_OK


def cmd_verify(args, out):
    if not args.tag:
        raise UsageError("verify needs --tag")
    expected = parse_tag(args.tag)
    keys = _keys(args)
    msg = _read_input(args.input)
    ok = verify(msg, keys, expected.kind, expected, literal=args.compat_literal)
    print("OK" if ok else "FAILED", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def find_forgery(msg, ident):
    """Build a message with one block permuted, or return None.

    Picks the shortest block holding at least two distinct bytes and
    reverses it (or swaps its first distinct pair if it is a palindrome).
    """
    blocks, _ = split_blocks(msg, ident)
    candidates = [b for b in blocks if len({msg[i] for i in b}) >= 2]
    if not candidates:
        return None
    block = min(candidates, key=len)
    values = [msg[i] for i in block]
    permuted = values[::-1]
    if permuted == values:
        j = next(k for k in range(1, len(values)) if values[k] != values[0])
        permuted = list(values)
        permuted[0], permuted[j] = permuted[j], permuted[0]
    forged = bytearray(msg)
    for i, v in zip(block, permuted):
        forged[i] = v
    return bytes(forged), block


def cmd_forge_demo(args, out):
    keys = _keys(args)
    msg = _read_input(args.input)
    found = find_forgery(msg, keys.identifier)
    if found is None:
        print("no block with two distinct bytes; nothing to permute", file=out)
        return EXIT_FAIL
    forged, block = found
    print(f"permuted block: bytes {block[0]}..{block[-1]} ({len(block)} bytes)", file=out)
    print(f"original: {msg[block[0]:block[-1] + 1]!r}", file=out)
    print(f"permuted: {forged[block[0]:block[-1] + 1]!r}", file=out)
    for variant in ("h1", "h2"):
        kind = _kind(args, variant)
        a = amac_encode(msg, keys, kind, literal=args.compat_literal)
        b = amac_encode(forged, keys, kind, literal=args.compat_literal)
        verdict = "IDENTICAL" if serialize_tag(a) == serialize_tag(b) else "different"
        print(f"{variant}: {a.display()} vs {b.display()} -> {verdict}", file=out)
    return EXIT_OK


def synthetic_message(size, seed=0):
    rng = random.Random(seed)
    letters = b"abcdefghijklmnopqrstuvwxyz     "
    return bytes(rng.choice(letters) for _ in range(size))


def run_bench(keys, kind, sizes=BENCH_SIZES, repeats=3, literal=False):
    """Time ``amac_encode`` on synthetic text; returns (size, seconds) rows.

    Each row is the best of ``repeats`` runs.  Sizes are visited
    round-robin so a slow stretch on the host hits every size alike, and
    every size is encoded once untimed first; the garbage collector is
    paused while timing.
    """
    msgs = [synthetic_message(size) for size in sizes]
    for msg in msgs:
        amac_encode(msg, keys, kind, literal=literal)
    best = [float("inf")] * len(sizes)
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeats):
            for k, msg in enumerate(msgs):
                t0 = time.perf_counter()
                amac_encode(msg, keys, kind, literal=literal)
                best[k] = min(best[k], time.perf_counter() - t0)
    finally:
        if gc_was_enabled:
            gc.enable()
    return list(zip(sizes, best))


def cmd_bench(args, out):
    key = args.key or os.environ.get("AMAC_KEY") or "bench key"
    ident = args.ident or os.environ.get("AMAC_IDENT") or "the"
    rows = run_bench(KeyPair(key, ident), _kind(args), literal=args.compat_literal)
    print(f"{'bytes':>8} {'seconds':>10} {'ns/byte':>9}", file=out)
    for size, secs in rows:
        per = secs / size * 1e9 if size else float("nan")
        print(f"{size:>8} {secs:>10.4f} {per:>9.1f}", file=out)
    return EXIT_OK


COMMANDS = {
    "sign": cmd_sign,
    "verify": cmd_verify,
    "forge-demo": cmd_forge_demo,
    "bench": cmd_bench,
}


def build_parser():
    p = argparse.ArgumentParser(prog="amac", description="Algebraic message authentication codes")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--key", help="primary key (default: $AMAC_KEY)")
    p.add_argument("--ident", help="identifier string (default: $AMAC_IDENT)")
    p.add_argument("--heuristic", choices=("h1", "h2"), default="h1")
    p.add_argument("--h2-base", type=int, default=10)
    p.add_argument("--input", "-i", default="-", help="message file, '-' for stdin")
    p.add_argument("--tag", help="tag line to verify against")
    p.add_argument("--compat-literal", action="store_true",
                   help="skip the key chaining and trailing-block flush")
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, InvalidKey, InvalidIdentifier, ParseError) as exc:
        print(f"amac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _PIPELINE_ERRORS as exc:
        step = getattr(exc, "step", None) or "unknown step"
        print(f"amac: {type(exc).__name__} at {step}: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
