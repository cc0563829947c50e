import itertools
from pathlib import Path

import pytest

from clspaces.clspace import reisner_check
from clspaces.graph_core import make_graph

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield make_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def reisner_graphs(max_n):
    return [g for n in range(1, max_n + 1) for g in all_graphs(n) if reisner_check(g).passed]


@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS
