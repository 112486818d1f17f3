from pathlib import Path

import pytest
from hypothesis import settings

from enact.parser import load

settings.register_profile("default", deadline=None)
settings.load_profile("default")

CORPUS = Path(__file__).resolve().parent.parent / "src" / "enact" / "corpus"


@pytest.fixture(scope="session")
def corpus():
    return {p.stem: load(p) for p in sorted(CORPUS.glob("*.aip"))}
