"""Rule documents (JSON and CSV) and sample/probe tables."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import numpy as np

from cubelattice.cubature import CubatureRule, Exactness

SCHEMA_VERSION = "1"


def _decimal(v: float) -> str:
    return format(float(v), ".17g")


def _rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _weight_text(w) -> str:
    return _rational(w) if isinstance(w, Fraction) else _decimal(w)


def _weight_value(text: str, weight_kind: str):
    return float(text) if weight_kind == "W1" else Fraction(text)


def rule_to_dict(rule: CubatureRule) -> dict:
    """Node coordinates and W1 weights are decimal strings with 17 significant digits."""
    return {
        "schema_version": SCHEMA_VERSION,
        "dim": rule.dim,
        "n": rule.n,
        "weight_kind": rule.weight_kind,
        "normalization": _rational(rule.normalization),
        "indices": [[int(v) for v in k] for k in rule.indices],
        "nodes": [[_decimal(v) for v in p] for p in rule.nodes],
        "weights": [_weight_text(w) for w in rule.weights],
        "exactness": rule.exactness.describe(),
    }


def rule_from_dict(doc: dict) -> CubatureRule:
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    kind = doc["weight_kind"]
    return CubatureRule(
        dim=int(doc["dim"]),
        n=int(doc["n"]),
        weight_kind=kind,
        indices=np.array(doc["indices"], dtype=np.int64).reshape(-1, int(doc["dim"])),
        nodes=np.array([[float(v) for v in p] for p in doc["nodes"]]).reshape(-1, int(doc["dim"])),
        weights=tuple(_weight_value(w, kind) for w in doc["weights"]),
        normalization=Fraction(doc["normalization"]),
        exactness=Exactness.parse(doc["exactness"]),
    )


def emit_json(rule: CubatureRule) -> str:
    return json.dumps(rule_to_dict(rule)) + "\n"


def parse_json(text: str) -> CubatureRule:
    return rule_from_dict(json.loads(text))


def csv_header(dim: int) -> list[str]:
    return [f"k{i + 1}" for i in range(dim)] + [f"node{i + 1}" for i in range(dim)] + ["weight"]


def emit_csv(rule: CubatureRule) -> str:
    """Header, then one row per node: integer index, coordinates, weight."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(csv_header(rule.dim))
    for k, p, w in zip(rule.indices, rule.nodes, rule.weights):
        writer.writerow([int(v) for v in k] + [_decimal(v) for v in p] + [_weight_text(w)])
    return buf.getvalue()


def parse_csv(text: str, weight_kind: str) -> tuple[np.ndarray, np.ndarray, tuple]:
    """Return ``(indices, nodes, weights)``; the CSV carries no normalization."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise ValueError("empty CSV")
    header, body = rows[0], rows[1:]
    dim = (len(header) - 1) // 2
    if header != csv_header(dim):
        raise ValueError(f"unexpected CSV header {header}")
    indices = np.array([[int(v) for v in r[:dim]] for r in body], dtype=np.int64).reshape(-1, dim)
    nodes = np.array([[float(v) for v in r[dim : 2 * dim]] for r in body]).reshape(-1, dim)
    weights = tuple(_weight_value(r[-1], weight_kind) for r in body)
    return indices, nodes, weights


def _numeric_rows(text: str) -> list[list[str]]:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if rows:
        try:
            [float(c) for c in rows[0]]
        except ValueError:
            rows = rows[1:]
    return rows


def read_samples(text: str, dim: int) -> dict[tuple[int, ...], float]:
    """Sample table: ``dim`` integer index columns then a value column; header optional."""
    samples = {}
    for row in _numeric_rows(text):
        if len(row) != dim + 1:
            raise ValueError(f"sample row {row} should have {dim + 1} columns")
        key = tuple(int(v) for v in row[:dim])
        if key in samples:
            raise ValueError(f"duplicate sample key {key}")
        samples[key] = float(row[dim])
    return samples


def read_probes(text: str, dim: int) -> np.ndarray:
    rows = _numeric_rows(text)
    for row in rows:
        if len(row) != dim:
            raise ValueError(f"probe row {row} should have {dim} columns")
    return np.array([[float(v) for v in r] for r in rows]).reshape(-1, dim)


def write_values(points: np.ndarray, values: np.ndarray) -> str:
    dim = points.shape[1] if points.ndim == 2 else 0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"t{i + 1}" for i in range(dim)] + ["value"])
    for p, v in zip(points, values):
        writer.writerow([_decimal(c) for c in p] + [_decimal(v)])
    return buf.getvalue()
