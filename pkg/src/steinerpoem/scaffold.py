"""Skeleton poems: one line of bare keywords per triple of a fresh system."""

from __future__ import annotations

from typing import Iterable, Optional, Tuple, Union

from .orders import InadmissibleOrderError, require_admissible
from .poems import KeywordMap, Poem, parse_poem
from .resolution import Resolution, find_resolution, search_resolvable_sts
from .systems import TripleSystem, construct_sts

_VARIANTS = ("pure", "relaxed", "resolvable-pure", "resolvable-relaxed")


def scaffold_with_design(
    keywords: Union[KeywordMap, Iterable[str]],
    variant: str = "pure",
    seed: int = 0,
    title: Optional[str] = None,
) -> Tuple[Poem, TripleSystem, Optional[Resolution]]:
    """Build a skeleton poem along with the system (and resolution) behind it.

    For resolvable variants each stanza is one parallel class; if the
    directly constructed system does not resolve, a seeded search over
    random systems finds one that does.  The poem always validates as pass
    for its variant (lines are bare keywords, so no filler is present).
    """
    if not isinstance(keywords, KeywordMap):
        keywords = KeywordMap.build(keywords)
    u = keywords.order
    require_admissible(u)
    if variant not in _VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    resolvable = variant.startswith("resolvable")
    if resolvable and u % 6 != 3:
        raise InadmissibleOrderError(
            f"resolvable variants need u ≡ 3 (mod 6); order {u} admits "
            f"no resolvable system"
        )

    resolution: Optional[Resolution] = None
    if resolvable:
        system = construct_sts(u, seed)
        outcome = find_resolution(system)
        if outcome.resolved:
            resolution = outcome.resolution
        else:
            system, resolution = search_resolvable_sts(u, seed)
        stanzas = [list(cl) for cl in resolution.classes]
    else:
        system = construct_sts(u, seed)
        stanzas = [list(system.triples)]

    words = keywords.words
    parts = []
    if title is not None:
        parts.append(f"#! title: {title}")
    parts.append(f"#! keywords: {', '.join(words)}")
    parts.append(f"#! variant: {variant}")
    for stanza in stanzas:
        parts.append("")
        for a, b, c in stanza:
            parts.append(f"{words[a]} {words[b]} {words[c]}")
    text = "\n".join(parts) + "\n"
    return parse_poem(text), system, resolution


def scaffold(
    keywords: Union[KeywordMap, Iterable[str]],
    variant: str = "pure",
    seed: int = 0,
    title: Optional[str] = None,
) -> Poem:
    """Build a poem skeleton whose lines are exactly the triples of an STS."""
    poem, _system, _resolution = scaffold_with_design(keywords, variant, seed, title)
    return poem
