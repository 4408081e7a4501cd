"""JSON documents for polynomials and multisets.

Polynomial document::

    {"n": 2, "coeffs": [[1.0, 0.0], [0.0, 0.0]]}      # z^2 + 1, a_0 first

Multiset document::

    {"elems": [[0.0, 1.0], [0.0, -1.0]]}

Floats are written with 17 significant digits so they read back bit-exact.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .core import MonicPolynomial, RootMultiset

__all__ = [
    "FormatError",
    "dumps",
    "parse_poly",
    "parse_multiset",
    "poly_document",
    "multiset_document",
]


class FormatError(ValueError):
    """Malformed input document; the message names the offending field."""


def _format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError("cannot serialize non-finite number")
    s = format(x, ".17g")
    if "e" not in s and "." not in s:
        s += ".0"
    return s


def dumps(obj, indent: int | None = 2) -> str:
    """Like ``json.dumps`` but with every float at 17 significant digits."""

    def enc(o, level):
        pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
        end = "" if indent is None else "\n" + " " * (indent * level)
        if isinstance(o, bool) or o is None:
            return json.dumps(o)
        if isinstance(o, (int, np.integer)):
            return str(int(o))
        if isinstance(o, (float, np.floating)):
            return _format_float(float(o))
        if isinstance(o, str):
            return json.dumps(o)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [pad + json.dumps(str(k)) + ": " + enc(v, level + 1) for k, v in o.items()]
            return "{" + ",".join(items) + end + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            # short numeric pairs stay on one line
            if all(isinstance(x, (int, float, np.integer, np.floating)) and not isinstance(x, bool) for x in o):
                return "[" + ", ".join(enc(x, level + 1) for x in o) + "]"
            return "[" + ",".join(pad + enc(x, level + 1) for x in o) + end + "]"
        raise TypeError(f"cannot serialize {type(o).__name__}")

    return enc(obj, 0)


def _pairs(values) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in np.asarray(values, dtype=np.complex128)]


def poly_document(p: MonicPolynomial) -> dict:
    return {"n": p.degree, "coeffs": _pairs(p.coeffs)}


def multiset_document(V: RootMultiset) -> dict:
    return {"elems": _pairs(V.elems)}


def _complex_list(doc: dict, field: str) -> list[complex]:
    if field not in doc:
        raise FormatError(f"missing field {field!r}")
    raw = doc[field]
    if not isinstance(raw, list):
        raise FormatError(f"field {field!r} must be an array")
    out = []
    for i, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise FormatError(f"field {field!r}[{i}] must be a [re, im] pair of numbers")
        try:
            re, im = float(pair[0]), float(pair[1])
        except OverflowError:
            re = im = math.inf
        if not (math.isfinite(re) and math.isfinite(im)):
            raise FormatError(f"field {field!r}[{i}] is not finite")
        out.append(complex(re, im))
    return out


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    return doc


def parse_poly(text: str) -> MonicPolynomial:
    doc = _load(text)
    if "n" not in doc:
        raise FormatError("missing field 'n'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise FormatError("field 'n' must be an integer >= 2")
    coeffs = _complex_list(doc, "coeffs")
    if len(coeffs) != n:
        raise FormatError(f"field 'coeffs' has {len(coeffs)} entries, expected n = {n}")
    return MonicPolynomial(coeffs)


def parse_multiset(text: str) -> RootMultiset:
    doc = _load(text)
    elems = _complex_list(doc, "elems")
    if len(elems) < 2:
        raise FormatError("field 'elems' needs at least 2 entries")
    return RootMultiset(elems)
