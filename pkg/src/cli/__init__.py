"""
CLI package
"""
from .main import RunConfig, build_parser, main, write_json_atomic

__all__ = [
    'RunConfig', 'build_parser', 'main', 'write_json_atomic',
]
