"""Letters, words and integer indices.

A letter is a nonempty multiset of generator ids, stored as a sorted tuple.
With the single generator 0 ("concrete mode") the letter (0,)*k plays the
role of the depth-one symbol of weight k, and a word is equivalent to an
index (k_1, ..., k_n).  The empty tuple is the empty word.
"""
from __future__ import annotations

import re

Letter = tuple  # sorted tuple of generator ids, nonempty
Word = tuple    # tuple of Letters
Index = tuple   # tuple of ints >= 1


def letter(*gens: int) -> Letter:
    if not gens:
        raise ValueError("a letter is a nonempty multiset")
    if any(g < 0 for g in gens):
        raise ValueError("generator ids are nonnegative")
    return tuple(sorted(gens))


def z(k: int) -> Letter:
    """The concrete letter of weight k >= 1."""
    if k < 1:
        raise ValueError("letter weight must be >= 1")
    return (0,) * k


def letter_weight(a: Letter) -> int:
    return len(a)


def word(*letters: Letter) -> Word:
    return tuple(letters)


def word_weight(w: Word) -> int:
    return sum(len(a) for a in w)


def is_concrete_word(w: Word) -> bool:
    return all(all(g == 0 for g in a) for a in w)


def word_of_index(idx: Index) -> Word:
    return tuple((0,) * k for k in idx)


def index_of_word(w: Word) -> Index:
    if not is_concrete_word(w):
        raise ValueError("only concrete words correspond to indices")
    return tuple(len(a) for a in w)


def word_key(w: Word):
    """Canonical word order: by weight, then depth, then letters."""
    return (word_weight(w), len(w), w)


def is_admissible(idx: Index) -> bool:
    return bool(idx) and idx[0] >= 2


def word_in_h0(w: Word) -> bool:
    """True for the empty word and words whose first letter has weight >= 2."""
    return not w or len(w[0]) >= 2


class IndexSyntaxError(ValueError):
    """Raised on malformed index text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


_INT = re.compile(r"\d+")


def parse_index(text: str) -> Index:
    """Parse index text like "3", "2,3" or "{2}^3,1" into an entry tuple.

    Grammar: index := item ("," item)* ; item := INT | "{" INT "}" "^" INT.
    Repeated items flatten, so "{2}^3,1" gives (2, 2, 2, 1).
    """
    entries: list[int] = []
    pos = 0
    n = len(text)

    def skip_ws(p):
        while p < n and text[p].isspace():
            p += 1
        return p

    def read_int(p, what):
        p = skip_ws(p)
        m = _INT.match(text, p)
        if not m:
            raise IndexSyntaxError(f"expected {what}", p)
        return int(m.group()), m.end()

    while True:
        pos = skip_ws(pos)
        if pos < n and text[pos] == "{":
            start = pos
            val, pos = read_int(pos + 1, "an integer entry")
            pos = skip_ws(pos)
            if pos >= n or text[pos] != "}":
                raise IndexSyntaxError("expected '}'", pos)
            pos = skip_ws(pos + 1)
            if pos >= n or text[pos] != "^":
                raise IndexSyntaxError("expected '^'", pos)
            rep, pos = read_int(pos + 1, "a repetition count")
            if rep < 1:
                raise IndexSyntaxError("repetition count must be >= 1", start)
            if val < 1:
                raise IndexSyntaxError("entry must be >= 1", start)
            entries.extend([val] * rep)
        else:
            start = pos
            val, pos = read_int(pos, "an integer entry")
            if val < 1:
                raise IndexSyntaxError("entry must be >= 1", start)
            entries.append(val)
        pos = skip_ws(pos)
        if pos >= n:
            break
        if text[pos] != ",":
            raise IndexSyntaxError("expected ','", pos)
        pos += 1

    if not entries:
        raise IndexSyntaxError("empty index", 0)
    return tuple(entries)
