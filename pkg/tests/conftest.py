"""Shared fixtures and frozen expected values.

Golden triple sets were derived by hand from the keyword lines of the
corpus poems (reading off the three keywords of each line) and frozen here;
the lex-least systems were derived independently by the forced first moves
of the smallest-uncovered-pair search.  Tests assert against these frozen
values rather than recomputing them through the code under test.
"""

from __future__ import annotations

import pytest

from steinerpoem import corpus_poem, validate_poem

# Karak, keyword order: Bird, Seeks, Home, Trees, Here, Food, Not
KARAK_KEYWORDS = ("Bird", "Seeks", "Home", "Trees", "Here", "Food", "Not")
KARAK_TRIPLES = {
    ("Bird", "Seeks", "Home"),
    ("Seeks", "Trees", "Here"),
    ("Bird", "Food", "Here"),
    ("Home", "Food", "Trees"),
    ("Bird", "Not", "Trees"),
    ("Seeks", "Not", "Food"),
    ("Here", "Not", "Home"),
}

# A Pause in the Rain, keyword order: Rain, Man, Coffee, Cold, Wet, Bird, Wonder
PAUSE_TRIPLES = {
    ("Rain", "Man", "Coffee"),
    ("Cold", "Rain", "Wet"),
    ("Cold", "Man", "Bird"),
    ("Wet", "Man", "Wonder"),
    ("Coffee", "Cold", "Wonder"),
    ("Bird", "Rain", "Wonder"),
    ("Wet", "Bird", "Coffee"),
}

# Footprints on a Snowy Evening, keyword order:
# Dark, Woods, Man, Lake, Footprints, Wind, Snow, Evening, Horse
FOOTPRINTS_TRIPLES = {
    ("Dark", "Woods", "Footprints"),
    ("Woods", "Lake", "Man"),
    ("Man", "Dark", "Wind"),
    ("Woods", "Snow", "Wind"),
    ("Footprints", "Lake", "Snow"),
    ("Evening", "Dark", "Lake"),
    ("Evening", "Snow", "Man"),
    ("Horse", "Evening", "Woods"),
    ("Horse", "Lake", "Wind"),
    ("Evening", "Footprints", "Wind"),
    ("Dark", "Horse", "Snow"),
    ("Man", "Horse", "Footprints"),
}

# Wordstorm, keyword order: Face, Look, Poem, Fix, Lines, Helpless, River, Warm, Call
WORDSTORM_TRIPLES = {
    ("Face", "Look", "Poem"),
    ("Poem", "Fix", "Lines"),
    ("Lines", "Look", "Helpless"),
    ("Helpless", "Poem", "River"),
    ("River", "Warm", "Lines"),
    ("Lines", "Call", "Face"),
    ("Face", "Warm", "Helpless"),
    ("Helpless", "Fix", "Call"),
    ("Call", "Look", "River"),
    ("River", "Fix", "Face"),
    ("Fix", "Look", "Warm"),
    ("Warm", "Call", "Poem"),
}

# Things We Cannot Keep, keyword order:
# Face, Look, Poem, Fix, Lines, Helpless, River, Call, Warm
THINGS_TRIPLES = {
    ("Helpless", "Warm", "Face"),
    ("Poem", "Fix", "Lines"),
    ("Call", "River", "Look"),
    ("Helpless", "Poem", "Call"),
    ("Warm", "Fix", "River"),
    ("Face", "Lines", "Look"),
    ("Helpless", "Fix", "Look"),
    ("Warm", "Lines", "Call"),
    ("Face", "Poem", "River"),
    ("Helpless", "Lines", "River"),
    ("Warm", "Poem", "Look"),
    ("Face", "Fix", "Call"),
}

# lex-least systems under the canonical ordering of sorted triple tuples;
# the u=7 value is forced move by move (the smallest uncovered pair always
# has a unique smallest completion) and the u=9 value was derived by the
# same independent search
LEX_LEAST_7 = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
)
LEX_LEAST_9 = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (0, 7, 8),
    (1, 3, 5),
    (1, 4, 7),
    (1, 6, 8),
    (2, 3, 8),
    (2, 4, 6),
    (2, 5, 7),
    (3, 6, 7),
    (4, 5, 8),
)

CORPUS_EXPECTED = {
    "karak": ("pure", 7, KARAK_TRIPLES),
    "a_pause_in_the_rain": ("relaxed", 7, PAUSE_TRIPLES),
    "footprints_on_a_snowy_evening": ("relaxed", 9, FOOTPRINTS_TRIPLES),
    "wordstorm": ("pure", 9, WORDSTORM_TRIPLES),
    "things_we_cannot_keep": ("resolvable-relaxed", 9, THINGS_TRIPLES),
}


def named_triples(report) -> set[tuple[str, ...]]:
    """Triples of a PoemReport as frozenset-comparable keyword name tuples."""
    words = report.keywords
    return {tuple(sorted(words[p] for p in t)) for t in report.derived_system.triples}


def normalize_names(triples) -> set[frozenset[str]]:
    return {frozenset(w.lower() for w in t) for t in triples}


@pytest.fixture(scope="session")
def corpus():
    return {name: corpus_poem(name) for name in CORPUS_EXPECTED}


@pytest.fixture(scope="session")
def corpus_reports(corpus):
    return {name: validate_poem(poem) for name, poem in corpus.items()}
