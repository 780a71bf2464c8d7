"""
Test configuration and fixtures for pytest.
"""

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from probcheck.cli.corpus import CORPUS_SOURCE, CORPUS_TEXT
from probcheck.core.models import CategoricalFamily, SampleSpace, VarRef, var
from probcheck.parsers.models import ProblemSet
from probcheck.parsers.parser import load_problem


settings.register_profile(
    "probcheck",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("quick", max_examples=25, deadline=None)
settings.load_profile("probcheck")

MAY = 5


@pytest.fixture
def birthday_space() -> SampleSpace:
    """Two people, twelve equally likely birth months."""
    return SampleSpace(families=(CategoricalFamily(name="person", count=2, cardinality=12),))


@pytest.fixture
def first() -> VarRef:
    """person[0]."""
    return var("person", 0)


@pytest.fixture
def second() -> VarRef:
    """person[1]."""
    return var("person", 1)


@pytest.fixture
def corpus_problem() -> ProblemSet:
    """The built-in corpus, parsed."""
    return load_problem(CORPUS_TEXT, CORPUS_SOURCE)


@pytest.fixture
def problem_file(tmp_path):
    """
    Factory fixture writing problem text to a temporary file.

    Returns:
        Callable[[str], str]: Takes the file contents and returns the file path.
    """

    def _write(text: str, name: str = "problem.prob") -> str:
        path = Path(tmp_path) / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def corpus_file(problem_file) -> str:
    """The corpus text written to a temporary file."""
    return problem_file(CORPUS_TEXT, "corpus.prob")
