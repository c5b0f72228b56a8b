import random

import pytest

from support import constructed_fair, random_instance

CORPUS_SIZE = 2000


@pytest.fixture(scope="session")
def corpus():
    """Shared instance corpus: mixed random shapes plus known-fair plants.

    Entries are (graph, labels, cert_labels_or_None, constant_or_None); the
    last two are set only for instances constructed fair by a closed form.
    """
    rng = random.Random(20260814)
    entries = []
    for i in range(CORPUS_SIZE):
        if i % 3 == 0:
            graph, labels, cert, k = constructed_fair(rng)
            entries.append((graph, labels, cert, k))
        else:
            graph, labels = random_instance(rng)
            entries.append((graph, labels, None, None))
    return entries
