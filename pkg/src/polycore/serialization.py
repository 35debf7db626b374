"""
JSON encoding shared by polynomials, pencils and the CLI
"""
import json
from pathlib import Path
from typing import Any, Dict, List

import numpy as np

from src.errors import SchemaError
from src.polycore.basis import BasisDescriptor, BasisKind, NodeSet
from src.polycore.matrix_polynomial import MatrixPolynomial

WEIGHT_CHECK_TOL = 1e-12


def complex_to_json(z: complex) -> List[float]:
    return [float(np.real(z)), float(np.imag(z))]


def complex_from_json(pair: Any, where: str) -> complex:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise SchemaError(f"{where}: expected [re, im], got {pair!r}")
    try:
        return complex(float(pair[0]), float(pair[1]))
    except (TypeError, ValueError) as e:
        raise SchemaError(f"{where}: non-numeric entry {pair!r}") from e


def require_count(value: Any, where: str) -> int:
    """A non-negative JSON integer; booleans are not integers here"""
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise SchemaError(f"{where} must be a non-negative integer, got {value!r}")
    return value


def matrix_to_json(a: np.ndarray) -> List[List[List[float]]]:
    """Row-major list of [re, im] pairs"""
    return [[complex_to_json(z) for z in row] for row in np.atleast_2d(a)]


def matrix_from_json(data: Any, where: str = "matrix") -> np.ndarray:
    if not isinstance(data, list) or any(not isinstance(row, list) for row in data):
        raise SchemaError(f"{where}: expected a list of rows")
    widths = {len(row) for row in data}
    if len(widths) > 1:
        raise SchemaError(f"{where}: ragged rows")
    out = np.zeros((len(data), widths.pop() if widths else 0), dtype=complex)
    for i, row in enumerate(data):
        for j, pair in enumerate(row):
            out[i, j] = complex_from_json(pair, f"{where}[{i}][{j}]")
    return out


def vector_to_json(v: np.ndarray) -> List[List[float]]:
    return [complex_to_json(z) for z in np.ravel(v)]


def polynomial_to_dict(p: MatrixPolynomial) -> Dict[str, Any]:
    """
    Encode a matrix polynomial

    Args:
        p: Matrix polynomial

    Returns:
        JSON-ready dictionary
    """
    doc = {
        "basis": p.kind.value,
        "grade": p.grade,
        "size": [p.rows, p.cols],
        "coeffs": [matrix_to_json(c) for c in p.coeffs],
    }
    if p.nodes is not None:
        doc["nodes"] = p.nodes.to_list()
    if p.kind is BasisKind.LAGRANGE:
        doc["weights"] = [complex_to_json(w) for w in p.nodes.weights]
    return doc


def polynomial_from_dict(doc: Dict[str, Any]) -> MatrixPolynomial:
    """
    Decode and validate a matrix polynomial document

    Args:
        doc: Parsed JSON object

    Returns:
        MatrixPolynomial
    """
    if not isinstance(doc, dict):
        raise SchemaError("Polynomial document must be a JSON object")
    for key in ("basis", "grade", "size", "coeffs"):
        if key not in doc:
            raise SchemaError(f"Polynomial document is missing '{key}'")
    try:
        kind = BasisKind(doc["basis"])
    except ValueError as e:
        raise SchemaError(f"Unknown basis {doc['basis']!r}") from e

    grade = require_count(doc["grade"], "grade")
    size = doc["size"]
    if not isinstance(size, list) or len(size) != 2:
        raise SchemaError(f"size must be [m, n], got {size!r}")
    size = [require_count(s, f"size[{i}]") for i, s in enumerate(size)]
    if not isinstance(doc["coeffs"], list) or len(doc["coeffs"]) != grade + 1:
        raise SchemaError(f"Expected {grade + 1} coefficient matrices")

    coeffs = np.zeros((grade + 1, size[0], size[1]), dtype=complex)
    for i, c in enumerate(doc["coeffs"]):
        mat = matrix_from_json(c, f"coeffs[{i}]")
        if mat.shape != (size[0], size[1]):
            raise SchemaError(f"coeffs[{i}] has shape {mat.shape}, expected {tuple(size)}")
        coeffs[i] = mat

    nodes = None
    if kind.needs_nodes:
        if not isinstance(doc.get("nodes"), list):
            raise SchemaError(f"The {kind.value} basis needs a 'nodes' list")
        nodes = NodeSet([complex_from_json(z, f"nodes[{i}]") for i, z in enumerate(doc["nodes"])])
    elif doc.get("nodes"):
        raise SchemaError(f"The {kind.value} basis takes no nodes")

    p = MatrixPolynomial(BasisDescriptor(kind, nodes), coeffs)

    if kind is BasisKind.LAGRANGE and "weights" in doc:
        if not isinstance(doc["weights"], list):
            raise SchemaError("weights must be a list of [re, im] pairs")
        stored = np.array([complex_from_json(w, f"weights[{i}]") for i, w in enumerate(doc["weights"])])
        if stored.shape != nodes.weights.shape or np.max(np.abs(stored - nodes.weights)) > WEIGHT_CHECK_TOL * (
                1 + np.max(np.abs(nodes.weights))):
            raise SchemaError("Stored barycentric weights disagree with the nodes")
    return p


def read_json(path) -> Any:
    """
    Read a JSON file

    Args:
        path: File path

    Returns:
        Parsed document
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path} is not valid JSON: {str(e)}") from e
    except UnicodeDecodeError as e:
        raise SchemaError(f"{path} is not UTF-8 text: {str(e)}") from e


def load_polynomial(path) -> MatrixPolynomial:
    return polynomial_from_dict(read_json(path))
