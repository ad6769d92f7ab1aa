"""
Shared fixtures and hypothesis profiles for the posetkit tests.
"""

import os

import pytest
from hypothesis import HealthCheck, settings

from config.settings import TestingConfig
from core.fixtures import FixtureCorpus

settings.register_profile('dev', max_examples=25, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile('ci', max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'dev'))


@pytest.fixture(scope='session')
def corpus():
    return FixtureCorpus(TestingConfig)


@pytest.fixture
def fixture(corpus):
    """Bounded fixture poset by name."""
    return corpus.bounded
