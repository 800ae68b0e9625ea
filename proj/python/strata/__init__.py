"""Filtered simplicial sets over finite posets."""

import json

from ._core import (
    Complex,
    StrataError,
    check_fibrant,
    example_names,
    is_admissible,
    load,
    parse,
    run,
    spi0_classes,
    subdivide,
)

__all__ = [
    "Complex",
    "StrataError",
    "check_fibrant",
    "example_names",
    "is_admissible",
    "load",
    "parse",
    "report",
    "run",
    "spi0_classes",
    "subdivide",
]


def report(*args):
    """Runs a command with --format json; returns (exit code, report or None, stderr)."""
    code, out, err = run([*map(str, args), "--format", "json"])
    return code, (json.loads(out) if out.strip() else None), err
