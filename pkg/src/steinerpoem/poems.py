"""Poem files: header parsing, tokenization, and keyword binding.

File format (UTF-8 text):
  a header block of "#! key: value" lines (required keys: keywords, variant;
  optional: title, after, rules), then the poem body; stanzas are separated
  by one or more blank lines.

Tokens split on whitespace and hyphens; matching against keywords uses a
casefolded form with leading and trailing punctuation stripped, so markup
and punctuation never change which words bind to design points.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from typing import Iterable, Optional

from .orders import admissible_order

VARIANTS = ("pure", "relaxed", "resolvable-pure", "resolvable-relaxed")
RULE_FLAGS = ("chain_last_to_first",)

# hyphen, non-breaking hyphen, figure dash, en dash, em dash
_HYPHEN_SPLIT = re.compile("[-‐‑‒–—]")
_HEADER_LINE = re.compile(r"^#!\s*([A-Za-z][A-Za-z0-9_-]*)\s*:\s*(.*?)\s*$")


class PoemParseError(ValueError):
    """Parse failure with the 1-based source line it occurred on."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.reason = message


def normalize_word(text: str) -> str:
    """Casefold and strip leading/trailing punctuation (any Unicode P*).

    Internal punctuation survives, so contractions keep their apostrophe
    while quoted or ellipsis-trailed words still match their keyword.
    """
    t = text.casefold()
    start, end = 0, len(t)
    while start < end and unicodedata.category(t[start]).startswith("P"):
        start += 1
    while end > start and unicodedata.category(t[end - 1]).startswith("P"):
        end -= 1
    return t[start:end]


def split_tokens(line: str) -> list[str]:
    """Raw token texts: whitespace-separated chunks, split again on hyphens."""
    out = []
    for chunk in line.split():
        for piece in _HYPHEN_SPLIT.split(chunk):
            if piece:
                out.append(piece)
    return out


@dataclass(frozen=True)
class KeywordMap:
    """Ordered keyword list; the index of a word is its design point."""

    words: tuple[str, ...]
    normalized: tuple[str, ...]

    @classmethod
    def build(cls, words: Iterable[str]) -> "KeywordMap":
        cleaned = [str(w).strip() for w in words]
        if any(w == "" for w in cleaned):
            raise ValueError("keywords must be nonempty")
        normalized = tuple(normalize_word(w) for w in cleaned)
        if any(n == "" for n in normalized):
            raise ValueError("keywords must contain at least one non-punctuation character")
        seen: dict[str, str] = {}
        for w, n in zip(cleaned, normalized):
            if n in seen:
                raise ValueError(f"duplicate keyword: {w!r} collides with {seen[n]!r}")
            seen[n] = w
        return cls(tuple(cleaned), normalized)

    @property
    def order(self) -> int:
        return len(self.words)

    def point_of(self, token_text: str) -> Optional[int]:
        n = normalize_word(token_text)
        try:
            return self.normalized.index(n)
        except ValueError:
            return None


@dataclass(frozen=True)
class Token:
    text: str
    point: Optional[int]  # None marks a filler token

    @property
    def is_keyword(self) -> bool:
        return self.point is not None


@dataclass(frozen=True)
class PoemLine:
    """One body line with its tokens and 1-based addresses."""

    source_text: str
    tokens: tuple[Token, ...]
    stanza_no: int
    line_no: int
    poem_line_no: int
    source_line_no: int

    @property
    def keyword_points(self) -> tuple[int, ...]:
        return tuple(t.point for t in self.tokens if t.point is not None)

    @property
    def distinct_points(self) -> tuple[int, ...]:
        seen: list[int] = []
        for p in self.keyword_points:
            if p not in seen:
                seen.append(p)
        return tuple(seen)

    @property
    def fillers(self) -> tuple[Token, ...]:
        return tuple(t for t in self.tokens if t.point is None)


@dataclass(frozen=True)
class Poem:
    variant: str
    keywords: KeywordMap
    stanzas: tuple[tuple[PoemLine, ...], ...]
    rules: tuple[str, ...] = ()
    title: Optional[str] = None
    after: Optional[str] = None
    metadata: tuple[tuple[str, str], ...] = ()

    @property
    def order(self) -> int:
        return self.keywords.order

    @property
    def resolvable(self) -> bool:
        return self.variant.startswith("resolvable")

    @property
    def pure(self) -> bool:
        return self.variant in ("pure", "resolvable-pure")

    def lines(self) -> tuple[PoemLine, ...]:
        return tuple(line for stanza in self.stanzas for line in stanza)


def _tokenize(line_text: str, keywords: KeywordMap) -> tuple[Token, ...]:
    tokens = []
    for raw in split_tokens(line_text):
        if normalize_word(raw) == "":
            # punctuation-only chunk such as a bare ellipsis; not a word at all
            continue
        tokens.append(Token(text=raw, point=keywords.point_of(raw)))
    return tuple(tokens)


def parse_poem(text: str) -> Poem:
    """Parse a poem file into a Poem; all failures carry a line number."""
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and lines[idx].strip() == "":
        idx += 1
    header: dict[str, tuple[str, int]] = {}
    header_end = 1
    while idx < len(lines) and lines[idx].lstrip().startswith("#!"):
        m = _HEADER_LINE.match(lines[idx].lstrip())
        if not m:
            raise PoemParseError(idx + 1, f"malformed header line: {lines[idx]!r}")
        key = m.group(1).lower()
        if key in header:
            raise PoemParseError(idx + 1, f"duplicate header key: {key}")
        header[key] = (m.group(2), idx + 1)
        idx += 1
        header_end = idx
    if "keywords" not in header:
        raise PoemParseError(header_end, "missing required header key: keywords")
    if "variant" not in header:
        raise PoemParseError(header_end, "missing required header key: variant")

    kw_value, kw_line = header["keywords"]
    words = [w.strip() for w in kw_value.split(",") if w.strip() != ""]
    try:
        keywords = KeywordMap.build(words)
    except ValueError as exc:
        raise PoemParseError(kw_line, str(exc)) from None
    u = keywords.order
    if not admissible_order(u) or u < 3:
        raise PoemParseError(
            kw_line,
            f"order {u} inadmissible: the keyword count must be congruent "
            f"to 1 or 3 mod 6 (and at least 3)",
        )

    var_value, var_line = header["variant"]
    variant = var_value.strip().lower()
    if variant not in VARIANTS:
        raise PoemParseError(
            var_line,
            f"unknown variant {var_value.strip()!r}: expected one of {', '.join(VARIANTS)}",
        )

    rules: tuple[str, ...] = ()
    if "rules" in header:
        rules_value, rules_line = header["rules"]
        flags = [f.strip() for f in rules_value.split(",") if f.strip() != ""]
        for f in flags:
            if f not in RULE_FLAGS:
                raise PoemParseError(
                    rules_line,
                    f"unknown rule flag {f!r}: expected one of {', '.join(RULE_FLAGS)}",
                )
        rules = tuple(flags)

    title = header.get("title", (None, 0))[0]
    after = header.get("after", (None, 0))[0]
    known = {"keywords", "variant", "rules", "title", "after"}
    metadata = tuple(
        (k, v) for k, (v, _ln) in sorted(header.items()) if k not in known
    )

    stanzas: list[list[PoemLine]] = []
    current: list[PoemLine] = []
    poem_line_no = 0
    for offset, raw in enumerate(lines[idx:], start=idx):
        if raw.lstrip().startswith("#!"):
            raise PoemParseError(offset + 1, "header line after start of poem body")
        if raw.strip() == "":
            if current:
                stanzas.append(current)
                current = []
            continue
        poem_line_no += 1
        current.append(
            PoemLine(
                source_text=raw.rstrip("\n"),
                tokens=_tokenize(raw, keywords),
                stanza_no=len(stanzas) + 1,
                line_no=len(current) + 1,
                poem_line_no=poem_line_no,
                source_line_no=offset + 1,
            )
        )
    if current:
        stanzas.append(current)

    return Poem(
        variant=variant,
        keywords=keywords,
        stanzas=tuple(tuple(s) for s in stanzas),
        rules=rules,
        title=title,
        after=after,
        metadata=metadata,
    )


def poem_to_text(poem: Poem) -> str:
    """Serialize a Poem back to the file format (round-trips parse_poem)."""
    out = []
    if poem.title is not None:
        out.append(f"#! title: {poem.title}")
    if poem.after is not None:
        out.append(f"#! after: {poem.after}")
    out.append(f"#! keywords: {', '.join(poem.keywords.words)}")
    out.append(f"#! variant: {poem.variant}")
    if poem.rules:
        out.append(f"#! rules: {', '.join(poem.rules)}")
    for key, value in poem.metadata:
        out.append(f"#! {key}: {value}")
    for stanza in poem.stanzas:
        out.append("")
        for line in stanza:
            out.append(line.source_text)
    return "\n".join(out) + "\n"
