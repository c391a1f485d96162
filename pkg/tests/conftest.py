import random

import pytest
from hypothesis import strategies as st

from mzvkit.harmonic import AlgElem
from mzvkit.words import z


def concrete_words(max_weight=8, max_letter=4):
    """Strategy for concrete words of bounded weight (possibly empty)."""
    letters = st.integers(min_value=1, max_value=max_letter).map(z)

    def trim(ws):
        out, budget = [], max_weight
        for a in ws:
            if len(a) > budget:
                break
            out.append(a)
            budget -= len(a)
        return tuple(out)

    return st.lists(letters, max_size=max_weight).map(trim)


def free_words(max_weight=6):
    """Words over two free generators with multiset letters."""
    letters = st.lists(st.integers(min_value=0, max_value=1),
                       min_size=1, max_size=3).map(lambda g: tuple(sorted(g)))

    def trim(ws):
        out, budget = [], max_weight
        for a in ws:
            if len(a) > budget:
                break
            out.append(a)
            budget -= len(a)
        return tuple(out)

    return st.lists(letters, max_size=max_weight).map(trim)


def elems(word_strategy, max_terms=3):
    """Small random algebra elements with integer coefficients."""
    pairs = st.tuples(word_strategy,
                      st.integers(min_value=-3, max_value=3).filter(bool))

    def build(items):
        out = AlgElem.zero()
        for w, c in items:
            out = out + AlgElem.from_word(w, c)
        return out

    return st.lists(pairs, min_size=1, max_size=max_terms).map(build)


@pytest.fixture
def rng():
    return random.Random(987123)
