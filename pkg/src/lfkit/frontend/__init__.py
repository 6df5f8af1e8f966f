"""Concrete syntax: parser, pretty-printer, and the command-line driver.

The CLI lives in :mod:`lfkit.frontend.cli` and is not imported here, so
that the kernel-facing modules can use the parser and printer without
dragging in the driver.
"""

from lfkit.frontend.parser import (
    parse,
    parse_context,
    parse_family,
    parse_kind,
    parse_object,
    parse_qc,
    parse_signature,
)
from lfkit.frontend.printer import print_context, print_signature, print_term

__all__ = [
    "parse", "parse_signature", "parse_object", "parse_family", "parse_kind",
    "parse_qc", "parse_context",
    "print_term", "print_signature", "print_context",
]
