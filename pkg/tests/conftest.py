import time
from pathlib import Path

import pytest

from helpers import all_connected_graphs, random_graphs, sampled_connected_graphs
from tworoman import gamma_bruteforce, max_eccd

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def small_corpus():
    """All connected labeled graphs up to order 6 plus sampled order 7."""
    return list(all_connected_graphs(6)) + sampled_connected_graphs(7, 250, seed=701)


@pytest.fixture(scope="session")
def corpus_results(small_corpus):
    """Both solver routes over the exhaustive corpus and the random batch."""
    start = time.perf_counter()
    small = [(g, gamma_bruteforce(g).gamma, len(max_eccd(g))) for g in small_corpus]
    batch = random_graphs(200, seed=1202)
    randoms = [(g, gamma_bruteforce(g).gamma, len(max_eccd(g))) for g in batch]
    elapsed = time.perf_counter() - start
    return {"small": small, "random": randoms, "elapsed": elapsed}
