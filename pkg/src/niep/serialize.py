"""JSON wire formats.

Spectra travel as arrays whose elements are bare numbers (real values) or
two-element ``[re, im]`` arrays; matrices as row arrays; graphs as
``{"n": int, "edges": [[u, v], ...]}`` with 1-indexed vertices.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .errors import InvalidParameter
from .graphs import UndirectedGraph
from .spectrum import DEFAULT_TOL, Spectrum


class ParseError(InvalidParameter):
    """Input text does not satisfy a wire format; carries position info
    when it came from the JSON layer."""


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON at line {exc.lineno} column {exc.colno} (char {exc.pos}): {exc.msg}"
        ) from exc


def parse_complex_entry(entry) -> complex:
    if isinstance(entry, (int, float)) and not isinstance(entry, bool):
        return complex(float(entry), 0.0)
    if (
        isinstance(entry, list)
        and len(entry) == 2
        and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)
    ):
        return complex(float(entry[0]), float(entry[1]))
    raise ParseError(f"spectrum entries are numbers or [re, im] pairs, got {entry!r}")


def parse_spectrum_values(data) -> list[complex]:
    if not isinstance(data, list) or not data:
        raise ParseError(f"a spectrum is a nonempty array, got {data!r}")
    return [parse_complex_entry(x) for x in data]


def spectrum_to_json(sp: Spectrum, tol: float = DEFAULT_TOL) -> list:
    eps = tol * sp.scale
    return [
        v.real if abs(v.imag) <= eps else [v.real, v.imag]
        for v in sp.values
    ]


def parse_real_list(data) -> list[float]:
    if not isinstance(data, list) or not data:
        raise ParseError(f"expected a nonempty array of numbers, got {data!r}")
    out = []
    for x in data:
        if not isinstance(x, (int, float)) or isinstance(x, bool):
            raise ParseError(f"expected a real number, got {x!r}")
        out.append(float(x))
    return out


def parse_matrix(data) -> np.ndarray:
    if not isinstance(data, list) or not data:
        raise ParseError(f"a matrix is a nonempty array of row arrays, got {data!r}")
    rows = [parse_real_list(row) for row in data]
    if any(len(row) != len(rows) for row in rows):
        raise ParseError("matrix rows must all have length equal to the row count")
    return np.array(rows, dtype=float)


def matrix_to_json(a: np.ndarray) -> list[list[float]]:
    return [[float(x) for x in row] for row in np.asarray(a)]


def parse_graph(data) -> UndirectedGraph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError('a graph is {"n": int, "edges": [[u, v], ...]}')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f'"n" must be a positive integer, got {n!r}')
    edges = data["edges"]
    if not isinstance(edges, list):
        raise ParseError('"edges" must be an array of [u, v] pairs')
    pairs = []
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in e)
        ):
            raise ParseError(f"edge entries are [u, v] integer pairs, got {e!r}")
        pairs.append((e[0], e[1]))
    return UndirectedGraph(vertex_count=n, edges=tuple(pairs))


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)
