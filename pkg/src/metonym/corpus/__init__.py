from .index import (HEADER, NounPairIndex, Pattern, VerbArgIndex, build, candidates_for, dumps,
                    encode, ingest, load_index, loads, save_index, scan, zset)
from .tokens import Token, parse_sentence, parse_token, read_corpus

__all__ = [
    "HEADER", "NounPairIndex", "Pattern", "Token", "VerbArgIndex", "build", "candidates_for",
    "dumps", "encode", "ingest", "load_index", "loads", "parse_sentence", "parse_token",
    "read_corpus", "save_index", "scan", "zset",
]
