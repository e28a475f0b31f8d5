import pytest

from lattice_pick.corpus import polygon_corpus


@pytest.fixture(scope="session")
def corpus():
    """The standard 100-polygon verification corpus."""
    return polygon_corpus(100)


@pytest.fixture(scope="session")
def corpus_sample(corpus):
    """Every fourth corpus polygon plus all non-convex ones: enough shape
    variety for the slower oracle comparisons."""
    picked = [item for i, item in enumerate(corpus) if i % 4 == 0]
    picked += [item for item in corpus if item[0].startswith("nonconvex")]
    seen = set()
    out = []
    for pid, poly in picked:
        if pid not in seen:
            seen.add(pid)
            out.append((pid, poly))
    return out
