"""
Tests for the tolerance record
"""
import pytest

from src.config import EIG_MATCH_TOL, Tolerances, get_tolerances
from src.errors import ParameterRangeError


def test_defaults_come_from_module_constants():
    assert get_tolerances().eig_match_tol == EIG_MATCH_TOL


def test_explicit_record_wins():
    tol = Tolerances(eig_match_tol=1e-3)
    assert get_tolerances(tol) is tol


def test_overrides_are_cast():
    tol = Tolerances().with_overrides({"eig_match_tol": "1e-6", "random_probes": "9"})
    assert tol.eig_match_tol == pytest.approx(1e-6)
    assert tol.random_probes == 9 and isinstance(tol.random_probes, int)


def test_unknown_override():
    with pytest.raises(ParameterRangeError):
        Tolerances().with_overrides({"speed": 1})
