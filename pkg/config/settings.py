"""
Posetkit - Configuration Settings

This module contains all configuration settings for the toolkit,
organized by environment (development, production, testing).
"""

import os
from pathlib import Path


def _env_int(name, default):
    """Read an integer environment variable, falling back on bad input."""
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        return default


class Config:
    """Base configuration class with common settings."""

    # Project paths
    BASE_DIR = Path(__file__).parent.parent
    DATA_DIR = BASE_DIR / 'data'
    FIXTURES_DIR = DATA_DIR / 'fixtures'
    MANIFEST_FILE = FIXTURES_DIR / 'manifest.yaml'

    # Search worker processes (0 = one per CPU)
    THREADS = _env_int('POSETKIT_THREADS', 0)

    # Exponential checks
    CONDITION_SUBSET_CAP = 12      # conditions (5)/(6) quantify over subset pairs
    CONV_STAR_CAP = 14             # 2^14 subsets filtered for convexity
    HULL_PAIR_CAP = 8              # exhaustive hull-orthogonality pairs
    SUBSET_ENUMERATION_CAP = 12    # sup/inf preservation over all subsets
    EXHAUSTIVE_CHECK_MAX_N = 8     # search samples exponential checks above this

    # Enumeration
    MIN_ENUMERATION_SIZE = 2
    MAX_ENUMERATION_SIZE = 12

    # Sampling
    DEFAULT_SEED = 0
    DEFAULT_SAMPLE = 200

    # Name clash marker for horizontal sums
    HORIZONTAL_SUM_SUFFIX = "'"

    LOG_LEVEL = 'INFO'
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class DevelopmentConfig(Config):
    """Development environment configuration."""

    DEBUG = True
    TESTING = False
    POSETKIT_ENV = 'development'
    LOG_LEVEL = 'DEBUG'


class ProductionConfig(Config):
    """Production environment configuration."""

    DEBUG = False
    TESTING = False
    POSETKIT_ENV = 'production'
    LOG_LEVEL = 'WARNING'


class TestingConfig(Config):
    """Testing environment configuration."""

    DEBUG = True
    TESTING = True
    POSETKIT_ENV = 'testing'
    LOG_LEVEL = 'DEBUG'

    # Single worker keeps test output reproducible in logs
    THREADS = 1
    DEFAULT_SAMPLE = 50


# Configuration dictionary for easy selection
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}


def get_config(config_name=None):
    """
    Get configuration class based on environment.

    Args:
        config_name (str): Configuration name ('development', 'production', 'testing')
                          If None, uses POSETKIT_ENV environment variable

    Returns:
        Config: Configuration class
    """
    if config_name is None:
        config_name = os.environ.get('POSETKIT_ENV', 'default')

    return config.get(config_name, config['default'])
