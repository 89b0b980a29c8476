from pathlib import Path

import pytest

from metonym.caseframe import load_frames
from metonym.corpus import ingest, read_corpus
from metonym.interpreter import Resources
from metonym.lexicon import load_hierarchy, load_lexicon

FIXTURES = Path(__file__).parent / "fixtures"
ACCEPTANCE_LINES = []


def _lines(name):
    return (FIXTURES / name).read_text(encoding="utf-8").splitlines()


@pytest.fixture(scope="session")
def hierarchy():
    return load_hierarchy(_lines("hierarchy.tsv"))


@pytest.fixture(scope="session")
def lexicon(hierarchy):
    return load_lexicon(_lines("lexicon.tsv"), hierarchy)


@pytest.fixture(scope="session")
def frames(hierarchy):
    return load_frames(_lines("frames.tsv"), hierarchy)


@pytest.fixture(scope="session")
def indexes():
    return ingest(read_corpus(_lines("corpus.txt")))


@pytest.fixture(scope="session")
def resources(lexicon, hierarchy, frames, indexes):
    return Resources(lexicon, hierarchy, frames, *indexes)


@pytest.fixture
def fixture_args():
    return ["--frames", str(FIXTURES / "frames.tsv"), "--hierarchy", str(FIXTURES / "hierarchy.tsv"),
            "--lexicon", str(FIXTURES / "lexicon.tsv")]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
