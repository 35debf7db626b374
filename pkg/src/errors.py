"""
Exception hierarchy with machine-readable codes
"""
from typing import Dict


class BlockPencilError(Exception):
    """Base error of the toolkit"""

    code = "ERROR"

    def to_dict(self) -> Dict[str, str]:
        return {"error": self.code, "message": str(self)}


class ParameterRangeError(BlockPencilError, ValueError):
    """A grade, block parameter or index is outside its admissible range"""

    code = "PARAM_RANGE"


class DuplicateNodesError(BlockPencilError, ValueError):
    """Interpolation nodes are not pairwise distinct"""

    code = "DUPLICATE_NODES"


class DimensionMismatchError(BlockPencilError, ValueError):
    """Blocks or coefficients are not conformable"""

    code = "DIMENSION_MISMATCH"


class SchemaError(BlockPencilError, ValueError):
    """A JSON document does not follow the expected layout"""

    code = "SCHEMA"


class RecoveryError(BlockPencilError, ValueError):
    """Recovered eigenvector or basis is zero or dependent"""

    code = "RECOVERY"


class BackwardErrorUndefinedError(BlockPencilError, ValueError):
    """All coefficients vanish, so the normwise backward error has no denominator"""

    code = "ZERO_DENOMINATOR"


class EigenSolverError(BlockPencilError, RuntimeError):
    """The generalized eigenvalue backend failed"""

    code = "SOLVER"


class SingularPolynomialError(BlockPencilError):
    """The polynomial looks singular; use the nullspace extraction instead"""

    code = "LIKELY_SINGULAR"


class RegularPolynomialError(BlockPencilError):
    """A nullspace was requested but the polynomial looks regular"""

    code = "APPEARS_REGULAR"


class RankAmbiguityWarning(UserWarning):
    """A singular value sits inside the tolerance band of a rank decision"""
