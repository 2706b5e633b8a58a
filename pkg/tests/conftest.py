"""Shared fixtures: the two-symbol i/o world used across the suite."""

from __future__ import annotations

import itertools

import pytest

from hyperc.lang import (
    Alphabet,
    IoSignature,
    RegularLanguage,
    Word,
    concat_sigma_star,
    concat_symbol_class,
    from_words,
    sigma_star,
    star_of,
)


@pytest.fixture
def ab() -> Alphabet:
    return Alphabet(("i", "o"))


@pytest.fixture
def io_i(ab) -> IoSignature:
    return IoSignature(ab, frozenset({"i"}))


@pytest.fixture
def istar(ab) -> RegularLanguage:
    return star_of(ab, {"i"})


@pytest.fixture
def top(ab) -> RegularLanguage:
    return sigma_star(ab)


@pytest.fixture
def iostar(istar) -> RegularLanguage:
    """i* o Σ*: all words containing at least one 'o'."""
    return concat_sigma_star(concat_symbol_class(istar, {"o"}))


def all_words(alphabet: Alphabet, max_len: int) -> list[Word]:
    """Every word up to max_len in length-then-lexicographic order."""
    out: list[Word] = []
    for length in range(max_len + 1):
        out.extend(itertools.product(alphabet.symbols, repeat=length))
    return out


def words_of(alphabet: Alphabet, *texts: str) -> list[Word]:
    """Words given as plain strings of single-character symbols."""
    return [tuple(t) for t in texts]


def lang_of(alphabet: Alphabet, *texts: str) -> RegularLanguage:
    return from_words(alphabet, words_of(alphabet, *texts))
