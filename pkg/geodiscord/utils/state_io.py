"""
JSON state files

    {
      "schema_version": 1,
      "dims": [d1, d2],
      "metadata": {...},
      "matrix": [[[re, im], ...], ...]
    }

Matrix entries are written with 17 significant digits so that loading gives
back the identical doubles.
"""
import hashlib
import json
from typing import NamedTuple, Optional, Sequence

import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..entities.modelConstants import ModelConstants
from ..exceptions import DimensionMismatchError, InvalidStateError


class StateFile(NamedTuple):
    """
    Contents of a state file

    Attributes:

        state (DensityMatrix): the validated state

        metadata (dict): label, seed, generator and other free-form fields

        digest (str): sha256 of the canonical serialization of dims and matrix

    """

    state: DensityMatrix
    metadata: dict
    digest: str


def _number(x: float) -> str:
    text = format(float(x), ".17g")
    if text in ("nan", "inf", "-inf"):
        raise InvalidStateError(f"non-finite matrix entry {text}")
    return text


def _matrix_rows(matrix: np.ndarray) -> list:
    return [
        "[" + ", ".join(f"[{_number(z.real)}, {_number(z.imag)}]" for z in row) + "]"
        for row in matrix
    ]


def canonical_serialization(dims: Sequence[int], matrix: np.ndarray) -> str:
    """Compact, metadata-free text the digest is computed from."""
    return json.dumps([int(d) for d in dims]) + "|" + ",".join(_matrix_rows(matrix))


def state_digest(rho: DensityMatrix) -> str:
    text = canonical_serialization(rho.dims, rho.matrix)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def dumps_state(rho: DensityMatrix, metadata: Optional[dict] = None) -> str:
    """
    Function to serialize a state to the JSON state-file format

    Arguments:

        rho (DensityMatrix): state to write

        metadata (dict): optional label, seed and generator fields

    Returns:

        text (str): the JSON document

    """
    rows = ",\n    ".join(_matrix_rows(rho.matrix))
    return (
        "{\n"
        f'  "schema_version": {ModelConstants.STATE_SCHEMA_VERSION},\n'
        f'  "dims": {json.dumps([int(d) for d in rho.dims])},\n'
        f'  "metadata": {json.dumps(metadata or {}, sort_keys=True)},\n'
        f'  "matrix": [\n    {rows}\n  ]\n'
        "}\n"
    )


def save_state(path: str, rho: DensityMatrix, metadata: Optional[dict] = None) -> str:
    """
    Write ``rho`` to ``path`` and return its digest.
    """
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_state(rho, metadata))
    return state_digest(rho)


def loads_state(text: str) -> StateFile:
    """
    Function to parse and validate a JSON state file

    Arguments:

        text (str): the JSON document

    Returns:

        state_file (StateFile): validated state, metadata and digest

    """
    try:
        doc = json.loads(text)
        dims = [int(d) for d in doc["dims"]]
        entries = np.asarray(doc["matrix"], dtype=np.float64)
    except (ValueError, KeyError, TypeError) as e:
        raise InvalidStateError(f"malformed state file: {e}", [f"format: {e}"]) from e

    version = doc.get("schema_version", ModelConstants.STATE_SCHEMA_VERSION)
    if version != ModelConstants.STATE_SCHEMA_VERSION:
        raise InvalidStateError(f"unsupported state schema version {version}", [f"schema_version: {version}"])
    if len(dims) != 2:
        raise DimensionMismatchError(f"state files hold bipartite states, got dims {dims}")

    order = int(np.prod(dims))
    if entries.shape != (order, order, 2):
        raise DimensionMismatchError(
            f"matrix of shape {entries.shape[:2]} does not match dims {dims} (order {order})"
        )

    matrix = np.empty((order, order), dtype=np.complex128)
    matrix.real = entries[..., 0]
    matrix.imag = entries[..., 1]
    rho = DensityMatrix(matrix, dims)
    return StateFile(rho, dict(doc.get("metadata") or {}), state_digest(rho))


def load_state(path: str) -> StateFile:
    with open(path, "r", encoding="utf-8") as f:
        return loads_state(f.read())
