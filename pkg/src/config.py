"""
Configuration for the block pencil toolkit
"""
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Dict
from dotenv import load_dotenv

from src.errors import ParameterRangeError

# Load environment variables
load_dotenv()

# Base paths
BASE_DIR = Path(__file__).parent.parent
DATA_DIR = BASE_DIR / "data"
DEMO_DIR = DATA_DIR / "demos"

ENV_PREFIX = "BLOCKPENCILS_"


def _env_float(name: str, default: float) -> float:
    return float(os.getenv(ENV_PREFIX + name, default))


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(ENV_PREFIX + name, default))


# Rank decisions
RANK_RTOL = _env_float("RANK_RTOL", 1e-12)  # relative to sigma_max * max(dims)
CANDIDATE_RANK_RTOL = _env_float("CANDIDATE_RANK_RTOL", 1e-8)  # at computed rank-drop candidates
NULLSPACE_RTOL = _env_float("NULLSPACE_RTOL", 1e-10)  # convolution matrix SVD
AMBIGUITY_BAND = _env_float("AMBIGUITY_BAND", 100.0)  # factor around NULLSPACE_RTOL

# Identity checks
DUALITY_TOL = _env_float("DUALITY_TOL", 1e-12)  # scaled by 1 + |K||D|
IDENTITY_RTOL = _env_float("IDENTITY_RTOL", 1e-10)  # D2 M D1^T = P, one-sided factorizations

# Eigenvalues
INFINITY_TOL = _env_float("INFINITY_TOL", 1e-12)  # |beta| <= tol * hypot(alpha, beta)
EIG_MATCH_TOL = _env_float("EIG_MATCH_TOL", 1e-8)  # chordal distance

# Nodes
NODE_PROXIMITY_TOL = _env_float("NODE_PROXIMITY_TOL", 1e-14)  # barycentric warning
NODE_MATCH_TOL = _env_float("NODE_MATCH_TOL", 1e-8)  # eigenvalue sitting on a node
NODE_SEPARATION_TOL = _env_float("NODE_SEPARATION_TOL", 1e-13)  # relative, warning only

# Randomized probes
RANDOM_PROBES = _env_int("RANDOM_PROBES", 5)  # normal rank estimate
MINIMALITY_PROBES = _env_int("MINIMALITY_PROBES", 50)
DEFAULT_SEED = _env_int("SEED", 20240521)

# Logging
LOG_LEVEL = os.getenv(ENV_PREFIX + "LOG_LEVEL", "WARNING")


@dataclass(frozen=True)
class Tolerances:
    """Every numerical threshold used by the library, in one record"""

    rank_rtol: float = RANK_RTOL
    candidate_rank_rtol: float = CANDIDATE_RANK_RTOL
    nullspace_rtol: float = NULLSPACE_RTOL
    ambiguity_band: float = AMBIGUITY_BAND
    duality_tol: float = DUALITY_TOL
    identity_rtol: float = IDENTITY_RTOL
    infinity_tol: float = INFINITY_TOL
    eig_match_tol: float = EIG_MATCH_TOL
    node_proximity_tol: float = NODE_PROXIMITY_TOL
    node_match_tol: float = NODE_MATCH_TOL
    node_separation_tol: float = NODE_SEPARATION_TOL
    random_probes: int = RANDOM_PROBES
    minimality_probes: int = MINIMALITY_PROBES

    @classmethod
    def from_env(cls) -> "Tolerances":
        """Build the record from the module constants (already env-aware)"""
        return cls()

    def with_overrides(self, overrides: Dict[str, float]) -> "Tolerances":
        """
        Return a copy with some thresholds replaced

        Args:
            overrides: Mapping of field name to new value

        Returns:
            New Tolerances instance
        """
        known = {f.name: f.type for f in fields(self)}
        changes = {}
        for name, value in overrides.items():
            if name not in known:
                raise ParameterRangeError(f"Unknown tolerance '{name}'. Known: {', '.join(sorted(known))}")
            cast = int if name in ("random_probes", "minimality_probes") else float
            changes[name] = cast(value)
        return replace(self, **changes)


_DEFAULT_TOLERANCES = Tolerances.from_env()


def get_tolerances(tol: Tolerances = None) -> Tolerances:
    """Get the tolerance record to use (explicit argument wins over the default)"""
    return tol or _DEFAULT_TOLERANCES
