"""Shared fixtures: the verification corpus and cached pipeline results.

The corpus holds braid closures on at most 3 strands with up to 10
crossings (exhaustive for short words, a fixed seeded sample for longer
ones) plus the first four members of the curl-pair unknot family.
"""

import random

import pytest

from braidbracket.diagram import BraidWord, braid_closure
from braidbracket.bracket import bracket_br
from braidbracket.moves import figure4_family


def corpus_words():
    words = []
    for k, maxlen in ((2, 3), (3, 2)):
        letters = list(range(1, k)) + list(range(-k + 1, 0))

        def extend(prefix, depth):
            words.append((k, tuple(prefix)))
            if depth == 0:
                return
            for g in letters:
                extend(prefix + [g], depth - 1)

        extend([], maxlen)
    rnd = random.Random(20240214)
    for length in range(4, 11):
        for k in (2, 3):
            letters = list(range(1, k)) + list(range(-k + 1, 0))
            for _ in range(2 if length < 9 else 1):
                words.append(
                    (k, tuple(rnd.choice(letters) for _ in range(length)))
                )
    seen = set()
    out = []
    for k, w in words:
        if (k, w) not in seen:
            seen.add((k, w))
            out.append(BraidWord(k, w))
    return out


@pytest.fixture(scope="session")
def corpus():
    diagrams = [braid_closure(w) for w in corpus_words()]
    diagrams += [figure4_family(m) for m in range(4)]
    return diagrams


@pytest.fixture(scope="session")
def corpus_small(corpus):
    return [d for d in corpus if d.n <= 8]


@pytest.fixture(scope="session")
def corpus_brackets(corpus):
    return [(d, bracket_br(d)) for d in corpus]
