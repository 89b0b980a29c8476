"""Interpret metonymic clauses from corpus evidence.

A clause whose noun breaks its verb's selectional restriction is repaired by
finding nouns Y that the corpus pairs with it ("X no Y" or compound "X Y"),
keeping those the verb accepts, and scoring them by frequency plus the
frequency of their super-ordinate candidates.
"""
from .caseframe import CaseFrame, CaseSlot, InputClause, clause_from_tokens, load_frames
from .corpus import ingest, load_index, read_corpus, save_index
from .interpreter import Candidate, Interpretation, Resources, Status, interpret, parse_alpha
from .lexicon import IsAHierarchy, WordLexicon, load_hierarchy, load_lexicon

__version__ = "0.1.0"
__all__ = [
    "CaseFrame", "CaseSlot", "InputClause", "clause_from_tokens", "load_frames",
    "ingest", "load_index", "read_corpus", "save_index",
    "Candidate", "Interpretation", "Resources", "Status", "interpret", "parse_alpha",
    "IsAHierarchy", "WordLexicon", "load_hierarchy", "load_lexicon",
]
