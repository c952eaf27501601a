"""Steiner triple systems, triangle decompositions, and triple poems.

The package builds and verifies Steiner triple systems, resolves them into
parallel classes, views them as triangle decompositions of complete graphs
with DOT/TikZ/JSON exports, and parses/validates/scaffolds poems whose
lines realize the triples of such a system.
"""

from .corpus import CORPUS_NAMES, corpus_poem, corpus_poems, corpus_text
from .graphs import (
    PALETTE,
    CompleteGraph,
    DecompositionError,
    TriangleDecomposition,
    export_graph,
    from_decomposition,
    to_decomposition,
)
from .interchange import InterchangeError, LoadedSystem, dump_system, load_document, system_to_doc
from .orders import InadmissibleOrderError, admissible_order, counts_for, require_admissible
from .poems import (
    KeywordMap,
    Poem,
    PoemLine,
    PoemParseError,
    Token,
    normalize_word,
    parse_poem,
    poem_to_text,
    split_tokens,
)
from .reports import Finding, Report
from .resolution import (
    Resolution,
    ResolutionOutcome,
    ResolvableSearchError,
    find_resolution,
    search_resolvable_sts,
)
from .scaffold import scaffold, scaffold_with_design
from .systems import (
    Triple,
    TripleSystem,
    brute_force_sts,
    construct_sts,
    is_fano,
    pair_count_matrix,
    random_sts,
    relabel_system,
    verify_sts,
)
from .validation import PoemReport, validate_poem

__version__ = "0.1.0"

__all__ = [
    "CORPUS_NAMES",
    "CompleteGraph",
    "DecompositionError",
    "Finding",
    "InadmissibleOrderError",
    "InterchangeError",
    "KeywordMap",
    "LoadedSystem",
    "PALETTE",
    "Poem",
    "PoemLine",
    "PoemParseError",
    "PoemReport",
    "Report",
    "Resolution",
    "ResolutionOutcome",
    "ResolvableSearchError",
    "Token",
    "Triple",
    "TriangleDecomposition",
    "TripleSystem",
    "admissible_order",
    "brute_force_sts",
    "construct_sts",
    "corpus_poem",
    "corpus_poems",
    "corpus_text",
    "counts_for",
    "dump_system",
    "export_graph",
    "find_resolution",
    "from_decomposition",
    "is_fano",
    "load_document",
    "normalize_word",
    "pair_count_matrix",
    "parse_poem",
    "poem_to_text",
    "random_sts",
    "relabel_system",
    "require_admissible",
    "scaffold",
    "scaffold_with_design",
    "search_resolvable_sts",
    "split_tokens",
    "system_to_doc",
    "to_decomposition",
    "validate_poem",
    "verify_sts",
]
