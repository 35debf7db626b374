"""
Block minimal basis pencils L(lam) = lam*L1 + L0
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.errors import DimensionMismatchError, ParameterRangeError, SchemaError
from src.polycore import arithmetic
from src.polycore.matrix_polynomial import MatrixPolynomial
from src.polycore.serialization import matrix_from_json, matrix_to_json, require_count

logger = logging.getLogger(__name__)

FAMILIES = ("newton", "lagrange", "cheb1", "cheb2", "generic")


@dataclass(frozen=True, eq=False)
class BlockPencil:
    """A pencil with its block partition and the location of its body M"""

    L0: np.ndarray
    L1: np.ndarray
    row_blocks: Tuple[int, ...]
    col_blocks: Tuple[int, ...]
    family: str = "generic"
    param: int = 0
    body_rows: Optional[int] = None
    body_cols: Optional[int] = None

    def __post_init__(self):
        L0 = np.array(self.L0, dtype=complex)
        L1 = np.array(self.L1, dtype=complex)
        if L0.ndim != 2 or L0.shape != L1.shape:
            raise DimensionMismatchError(f"L0 {L0.shape} and L1 {L1.shape} must be matrices of equal size")
        L0.setflags(write=False)
        L1.setflags(write=False)
        object.__setattr__(self, "L0", L0)
        object.__setattr__(self, "L1", L1)
        object.__setattr__(self, "row_blocks", tuple(int(b) for b in self.row_blocks))
        object.__setattr__(self, "col_blocks", tuple(int(b) for b in self.col_blocks))

        if sum(self.row_blocks) != L0.shape[0] or sum(self.col_blocks) != L0.shape[1]:
            raise DimensionMismatchError(
                f"Partitions {self.row_blocks} x {self.col_blocks} do not match pencil size {L0.shape}")
        if self.family not in FAMILIES:
            raise ParameterRangeError(f"Unknown family {self.family!r}")
        if self.body_rows is None:
            object.__setattr__(self, "body_rows", len(self.row_blocks))
        if self.body_cols is None:
            object.__setattr__(self, "body_cols", len(self.col_blocks))
        if not (0 <= self.body_rows <= len(self.row_blocks) and 0 <= self.body_cols <= len(self.col_blocks)):
            raise DimensionMismatchError("Body reference outside the block partition")

    @property
    def shape(self) -> Tuple[int, int]:
        return self.L0.shape

    @property
    def is_square(self) -> bool:
        return self.L0.shape[0] == self.L0.shape[1]

    def evaluate(self, lam: complex) -> np.ndarray:
        return lam * self.L1 + self.L0

    def as_polynomial(self) -> MatrixPolynomial:
        """The pencil as a grade-1 monomial matrix polynomial"""
        return MatrixPolynomial.monomial(np.stack([self.L0, self.L1]))

    def stack(self) -> np.ndarray:
        return np.stack([self.L0, self.L1])

    def block(self, i: int, j: int) -> np.ndarray:
        """
        Coefficient stack of block (i, j) of the partition

        Args:
            i: 0-based block row
            j: 0-based block column

        Returns:
            Array of shape (2, row_blocks[i], col_blocks[j])
        """
        if not (0 <= i < len(self.row_blocks) and 0 <= j < len(self.col_blocks)):
            raise ParameterRangeError(f"Block ({i},{j}) outside {len(self.row_blocks)}x{len(self.col_blocks)}")
        r0, c0 = sum(self.row_blocks[:i]), sum(self.col_blocks[:j])
        return self.stack()[:, r0: r0 + self.row_blocks[i], c0: c0 + self.col_blocks[j]]

    @property
    def body_size(self) -> Tuple[int, int]:
        return sum(self.row_blocks[: self.body_rows]), sum(self.col_blocks[: self.body_cols])

    def body(self) -> np.ndarray:
        """Coefficient stack of the (1,1) block M"""
        r, c = self.body_size
        return self.stack()[:, :r, :c]

    def k1_block(self) -> np.ndarray:
        """Coefficient stack of the (2,1) block K1"""
        r, c = self.body_size
        return self.stack()[:, r:, :c]

    def k2t_block(self) -> np.ndarray:
        """Coefficient stack of the (1,2) block K2^T"""
        r, c = self.body_size
        return self.stack()[:, :r, c:]

    def split_right(self, z: np.ndarray) -> List[np.ndarray]:
        """Split a right vector along the column blocks"""
        return _split(np.ravel(z), self.col_blocks)

    def split_left(self, w: np.ndarray) -> List[np.ndarray]:
        """Split a left vector along the row blocks"""
        return _split(np.ravel(w), self.row_blocks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "L0": matrix_to_json(self.L0),
            "L1": matrix_to_json(self.L1),
            "row_blocks": list(self.row_blocks),
            "col_blocks": list(self.col_blocks),
            "family": self.family,
            "param": int(self.param),
            "body_rows": int(self.body_rows),
            "body_cols": int(self.body_cols),
        }

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "BlockPencil":
        """
        Decode a pencil document

        Args:
            doc: Parsed JSON object

        Returns:
            BlockPencil
        """
        if not isinstance(doc, dict):
            raise SchemaError("Pencil document must be a JSON object")
        for key in ("L0", "L1", "row_blocks", "col_blocks", "family", "param"):
            if key not in doc:
                raise SchemaError(f"Pencil document is missing '{key}'")
        partitions = {}
        for key in ("row_blocks", "col_blocks"):
            if not isinstance(doc[key], list):
                raise SchemaError(f"{key} must be a list of block sizes")
            partitions[key] = tuple(require_count(b, f"{key}[{i}]") for i, b in enumerate(doc[key]))
        if not isinstance(doc["family"], str):
            raise SchemaError(f"family must be a string, got {doc['family']!r}")
        body = {key: None if doc.get(key) is None else require_count(doc[key], key)
                for key in ("body_rows", "body_cols")}
        return cls(
            L0=matrix_from_json(doc["L0"], "L0"),
            L1=matrix_from_json(doc["L1"], "L1"),
            family=doc["family"],
            param=require_count(doc["param"], "param"),
            **partitions,
            **body,
        )


def _split(vec: np.ndarray, sizes: Sequence[int]) -> List[np.ndarray]:
    return np.split(vec, np.cumsum(sizes)[:-1]) if sizes else []


def _pencil_stack(block, name: str) -> np.ndarray:
    stack = block.coeffs if isinstance(block, MatrixPolynomial) else arithmetic.as_stack(block)
    stack = arithmetic.pad_stack(stack, 2)
    if stack.shape[0] > 2 and np.any(stack[2:]):
        raise DimensionMismatchError(f"{name} must have degree at most 1")
    return stack[:2]


def _leading_blocks(sizes: Sequence[int], total: int, name: str) -> int:
    acc = 0
    for count, size in enumerate(sizes):
        if acc == total:
            return count
        acc += size
    if acc == total:
        return len(sizes)
    raise DimensionMismatchError(f"{name} of size {total} does not end on a block boundary of {tuple(sizes)}")


def assemble(M, K1, K2, row_blocks: Sequence[int], col_blocks: Sequence[int],
             family: str = "generic", param: int = 0) -> BlockPencil:
    """
    Assemble L(lam) = [[M, K2^T], [K1, 0]]

    Args:
        M: Body pencil (MatrixPolynomial or coefficient stack)
        K1: Lower-left pencil block, possibly with zero rows
        K2: Pencil whose transpose fills the upper-right block, possibly with zero rows
        row_blocks: Row partition of the whole pencil
        col_blocks: Column partition of the whole pencil
        family: Family tag
        param: Block parameter (mu or eps)

    Returns:
        BlockPencil with body metadata
    """
    M, K1, K2 = _pencil_stack(M, "M"), _pencil_stack(K1, "K1"), _pencil_stack(K2, "K2")
    rows, cols = M.shape[1:]
    if K1.shape[2] != cols:
        raise DimensionMismatchError(f"K1 has {K1.shape[2]} columns, body has {cols}")
    if K2.shape[2] != rows:
        raise DimensionMismatchError(f"K2 has {K2.shape[2]} columns, body has {rows} rows")

    total_rows, total_cols = rows + K1.shape[1], cols + K2.shape[1]
    if sum(row_blocks) != total_rows or sum(col_blocks) != total_cols:
        raise DimensionMismatchError(
            f"Partitions sum to {(sum(row_blocks), sum(col_blocks))}, pencil is {(total_rows, total_cols)}")

    stack = arithmetic.block_matrix(
        [[M, arithmetic.transpose(K2)], [K1, None]],
        [rows, K1.shape[1]], [cols, K2.shape[1]],
    )
    stack = arithmetic.pad_stack(stack, 2)
    pencil = BlockPencil(
        L0=stack[0], L1=stack[1],
        row_blocks=tuple(row_blocks), col_blocks=tuple(col_blocks),
        family=family, param=param,
        body_rows=_leading_blocks(row_blocks, rows, "Body rows"),
        body_cols=_leading_blocks(col_blocks, cols, "Body columns"),
    )
    logger.info(f"Assembled {family} pencil of size {pencil.shape} (param {param})")
    return pencil


def strict_equivalence(pencil: BlockPencil, A: np.ndarray, B: np.ndarray) -> BlockPencil:
    """
    Apply [I A; 0 I] * L * [I 0; B I] across the body boundaries

    Args:
        pencil: Block pencil
        A: Body-rows x K1-rows matrix
        B: K2-columns x body-columns matrix

    Returns:
        Strictly equivalent pencil with the same metadata
    """
    r, c = pencil.body_size
    R, Cn = pencil.shape
    A = np.asarray(A, dtype=complex).reshape(r, R - r)
    B = np.asarray(B, dtype=complex).reshape(Cn - c, c)
    left = np.eye(R, dtype=complex)
    left[:r, r:] = A
    right = np.eye(Cn, dtype=complex)
    right[c:, :c] = B
    return BlockPencil(
        L0=left @ pencil.L0 @ right, L1=left @ pencil.L1 @ right,
        row_blocks=pencil.row_blocks, col_blocks=pencil.col_blocks,
        family=pencil.family, param=pencil.param,
        body_rows=pencil.body_rows, body_cols=pencil.body_cols,
    )
