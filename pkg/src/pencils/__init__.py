"""
Block pencils package
"""
from .block_pencil import FAMILIES, BlockPencil, assemble, strict_equivalence
from .minimal_bases import (
    DualPair,
    MinimalityCertificate,
    body_product,
    check_duality,
    duality_defect,
    is_minimal_basis,
    sample_points,
)
from .recovery import RecoveredVector, combine_minimal, node_hits, select_block

__all__ = [
    'FAMILIES', 'BlockPencil', 'assemble', 'strict_equivalence',
    'DualPair', 'MinimalityCertificate', 'body_product', 'check_duality', 'duality_defect',
    'is_minimal_basis', 'sample_points',
    'RecoveredVector', 'combine_minimal', 'node_hits', 'select_block',
]
