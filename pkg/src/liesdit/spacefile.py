"""JSON interchange format for matrix spaces.

Schema (format_version "1"):

    {
      "format_version": "1",
      "field": "Q" | "GF(p)",
      "n": <ambient size>,
      "basis": [ [[entry, ...], ...], ... ],
      "metadata": { ... }          # optional
    }

Entries are strings "a" or "a/b" with decimal integers and optional sign.
Strict parsing rejects non-canonical rationals ("2/4", "1/-2"); lenient
parsing normalizes them and records a warning.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .fields import GF, QQ
from .linalg import Matrix
from .liealg import MatrixSpace

FORMAT_VERSION = "1"

_ENTRY_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_FIELD_RE = re.compile(r"^GF\((\d+)\)$")


class SpaceFileError(ValueError):
    pass


def _parse_entry(s, where, lenient, warnings):
    if not isinstance(s, str):
        if isinstance(s, int):
            if lenient:
                warnings.append("%s: integer entry %r normalized to string form" % (where, s))
                return Fraction(s)
            raise SpaceFileError("%s: entries must be strings, got %r" % (where, s))
        raise SpaceFileError("%s: entries must be strings, got %r" % (where, s))
    if not _ENTRY_RE.match(s):
        raise SpaceFileError("%s: bad rational syntax %r" % (where, s))
    frac = Fraction(s)
    if format_entry(frac) != s.lstrip("+"):
        if not lenient:
            raise SpaceFileError("%s: non-canonical entry %r (expected %r)"
                                 % (where, s, format_entry(frac)))
        warnings.append("%s: normalized %r to %r" % (where, s, format_entry(frac)))
    return frac


def format_entry(x) -> str:
    frac = Fraction(str(x)) if not isinstance(x, Fraction) else x
    if frac.denominator == 1:
        return str(frac.numerator)
    return "%d/%d" % (frac.numerator, frac.denominator)


def parse_space(text: str, lenient: bool = False):
    """Parse a SpaceFile document.  Returns (MatrixSpace, metadata, warnings)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpaceFileError("malformed JSON: %s" % e) from None
    if not isinstance(doc, dict):
        raise SpaceFileError("top-level value must be an object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise SpaceFileError("unsupported format_version %r" % doc.get("format_version"))
    field_name = doc.get("field")
    if field_name == "Q":
        field = QQ
    elif isinstance(field_name, str) and _FIELD_RE.match(field_name):
        field = GF(int(_FIELD_RE.match(field_name).group(1)))
    else:
        raise SpaceFileError("bad field %r" % field_name)
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise SpaceFileError("bad ambient size %r" % n)
    basis = doc.get("basis")
    if not isinstance(basis, list) or not basis:
        raise SpaceFileError("basis must be a non-empty list of matrices")
    warnings: list[str] = []
    mats = []
    for bi, rows in enumerate(basis):
        if not isinstance(rows, list) or len(rows) != n:
            raise SpaceFileError("basis[%d]: expected %d rows" % (bi, n))
        grid = []
        for ri, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                raise SpaceFileError("basis[%d] row %d: expected %d entries" % (bi, ri, n))
            grid.append([field.coerce(_parse_entry(x, "basis[%d][%d][%d]" % (bi, ri, ci),
                                                   lenient, warnings))
                         for ci, x in enumerate(row)])
        mats.append(Matrix(field, grid))
    space = MatrixSpace(mats)
    if space.reduced_from is not None:
        warnings.append("basis reduced from %d to %d independent matrices"
                        % (space.reduced_from, space.dim))
    metadata = doc.get("metadata", {})
    return space, metadata, warnings


def write_space(S: MatrixSpace, metadata=None) -> str:
    doc = {
        "format_version": FORMAT_VERSION,
        "field": S.field.name,
        "n": S.n,
        "basis": [[[format_entry(x) for x in row] for row in B.entries]
                  for B in S.basis],
    }
    if metadata:
        doc["metadata"] = metadata
    return json.dumps(doc, indent=2) + "\n"
