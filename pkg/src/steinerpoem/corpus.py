"""Access to the bundled corpus of five poems."""

from __future__ import annotations

from importlib import resources

from .poems import Poem, parse_poem

CORPUS_NAMES = (
    "karak",
    "a_pause_in_the_rain",
    "footprints_on_a_snowy_evening",
    "wordstorm",
    "things_we_cannot_keep",
)


def corpus_text(name: str) -> str:
    """Raw file content of a bundled poem; names are the CORPUS_NAMES slugs."""
    if name not in CORPUS_NAMES:
        raise KeyError(
            f"unknown corpus poem {name!r}: available poems are {', '.join(CORPUS_NAMES)}"
        )
    ref = resources.files("steinerpoem").joinpath("corpus", f"{name}.poem")
    return ref.read_text(encoding="utf-8")


def corpus_poem(name: str) -> Poem:
    return parse_poem(corpus_text(name))


def corpus_poems() -> dict[str, Poem]:
    return {name: corpus_poem(name) for name in CORPUS_NAMES}
