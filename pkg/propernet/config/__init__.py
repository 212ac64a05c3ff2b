"""
Configuration package for propernet.

Provides environment-driven analysis defaults and the validated run model.
"""

from typing import Optional

from .settings import AnalysisConfig

_config: Optional[AnalysisConfig] = None


def get_config() -> AnalysisConfig:
    """Get or create the process-wide default configuration."""
    global _config
    if _config is None:
        _config = AnalysisConfig()
    return _config


def reset_config() -> None:
    """Forget the cached configuration so the environment is read again."""
    global _config
    _config = None


__all__ = ['AnalysisConfig', 'get_config', 'reset_config']
