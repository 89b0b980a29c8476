"""Counted noun-pair and verb-argument indexes, ingestion and persistence."""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ..errors import FormatVersionMismatch, IndexIOError
from . import _backend, _kernels
from .tokens import N, P, PARTICLES, V, Token

HEADER = "MNYM-IDX v1"


class Pattern(enum.Enum):
    NO = "NO"
    COMPOUND = "COMPOUND"

    @property
    def rank(self):
        return 0 if self is Pattern.NO else 1


_TAG_CODE = {N: _kernels.TAG_N, V: _kernels.TAG_V, P: _kernels.TAG_P}
_PATTERN_OF = {_kernels.PAT_NO: Pattern.NO, _kernels.PAT_COMPOUND: Pattern.COMPOUND}


@dataclass
class NounPairIndex:
    postings: dict = field(default_factory=dict)   # X -> {(Y, Pattern): count}

    def add(self, x, y, pattern, count=1):
        bucket = self.postings.setdefault(x, {})
        bucket[(y, pattern)] = bucket.get((y, pattern), 0) + count

    def merge(self, other: "NounPairIndex") -> "NounPairIndex":
        out = NounPairIndex()
        for idx in (self, other):
            for x, bucket in idx.postings.items():
                for (y, pat), n in bucket.items():
                    out.add(x, y, pat, n)
        return out

    def total(self):
        return sum(n for b in self.postings.values() for n in b.values())

    def __len__(self):
        return sum(len(b) for b in self.postings.values())


@dataclass
class VerbArgIndex:
    postings: dict = field(default_factory=dict)   # (W, particle) -> {Z: count}

    def add(self, z, particle, w, count=1):
        bucket = self.postings.setdefault((w, particle), {})
        bucket[z] = bucket.get(z, 0) + count

    def merge(self, other: "VerbArgIndex") -> "VerbArgIndex":
        out = VerbArgIndex()
        for idx in (self, other):
            for (w, p), bucket in idx.postings.items():
                for z, n in bucket.items():
                    out.add(z, p, w, n)
        return out

    def total(self):
        return sum(n for b in self.postings.values() for n in b.values())

    def __len__(self):
        return sum(len(b) for b in self.postings.values())


@dataclass
class EncodedCorpus:
    vocab: list
    surf: np.ndarray
    tag: np.ndarray
    part: np.ndarray
    sent: np.ndarray

    @property
    def n_sentences(self):
        return int(self.sent[-1]) + 1 if self.sent.size else 0


def encode(sentences: Iterable[list[Token]]) -> EncodedCorpus:
    ids: dict[str, int] = {}
    surf, tag, part, sent = [], [], [], []
    n_sent = 0
    for sentence in sentences:
        if not sentence:
            continue
        for tok in sentence:
            surf.append(ids.setdefault(tok.surface, len(ids)))
            tag.append(_TAG_CODE.get(tok.tag, _kernels.TAG_O))
            part.append(PARTICLES.index(tok.particle) if tok.particle else -1)
            sent.append(n_sent)
        n_sent += 1
    as_arr = lambda a: np.asarray(a, dtype=np.int64)  # noqa: E731
    return EncodedCorpus(list(ids), as_arr(surf), as_arr(tag), as_arr(part), as_arr(sent))


def scan(enc: EncodedCorpus, backend=None):
    which = _backend.choose(enc.surf.size, backend)
    kernel = _kernels.scan_numba if which == "numba" else _kernels.scan_numpy
    return kernel(enc.surf, enc.tag, enc.part, enc.sent)


def _count_rows(rows):
    if rows.shape[0] == 0:
        return []
    uniq, counts = np.unique(rows, axis=0, return_counts=True)
    return zip(uniq.tolist(), counts.tolist())


def ingest(sentences: Iterable[list[Token]], backend=None):
    """Build (NounPairIndex, VerbArgIndex) from tagged sentences."""
    return build(encode(sentences), backend)


def build(enc: EncodedCorpus, backend=None):
    no_pairs, compounds, verbargs = scan(enc, backend)
    vocab = enc.vocab
    pairs = NounPairIndex()
    for (x, y, pat), n in _count_rows(np.concatenate([no_pairs, compounds])):
        pairs.add(vocab[x], vocab[y], _PATTERN_OF[pat], n)
    args = VerbArgIndex()
    for (z, p, w), n in _count_rows(verbargs):
        args.add(vocab[z], PARTICLES[p], vocab[w], n)
    return pairs, args


def candidates_for(idx: NounPairIndex, x: str):
    """All (Y, pattern, count) under `x`: count desc, then Y, then NO before COMPOUND."""
    bucket = idx.postings.get(x, {})
    rows = [(y, pat, n) for (y, pat), n in bucket.items()]
    rows.sort(key=lambda r: (-r[2], r[0], r[1].rank))
    return rows


def zset(idx: VerbArgIndex, w: str, particle: str) -> dict:
    return dict(idx.postings.get((w, particle), {}))


# -- persistence -----------------------------------------------------------

def dumps(pairs: NounPairIndex, args: VerbArgIndex) -> str:
    lines = [HEADER]
    np_rows = sorted((x, y, pat.value, n) for x, b in pairs.postings.items()
                     for (y, pat), n in b.items())
    va_rows = sorted((w, p, z, n) for (w, p), b in args.postings.items() for z, n in b.items())
    lines.append(f"pairs\t{len(np_rows)}")
    lines += ["\t".join(map(str, r)) for r in np_rows]
    lines.append(f"verbargs\t{len(va_rows)}")
    lines += ["\t".join(map(str, r)) for r in va_rows]
    lines.append("end")
    return "\n".join(lines) + "\n"


def _section(lines, pos, name):
    try:
        label, count = lines[pos].split("\t")
        if label != name:
            raise ValueError
        count = int(count)
    except (IndexError, ValueError):
        raise IndexIOError(f"index truncated or corrupt near line {pos + 1}") from None
    rows = lines[pos + 1:pos + 1 + count]
    if len(rows) != count:
        raise IndexIOError(f"index truncated in section {name!r}")
    parsed = []
    for k, row in enumerate(rows):
        fields = row.split("\t")
        if len(fields) != 4 or not fields[3].isdigit() or int(fields[3]) < 1:
            raise IndexIOError(f"corrupt row at line {pos + 2 + k}")
        parsed.append(fields)
    return parsed, pos + 1 + count


def loads(text: str):
    lines = text.split("\n")
    if not lines or lines[0] != HEADER:
        raise FormatVersionMismatch(f"expected header {HEADER!r}, got {lines[0][:40]!r}")
    np_rows, pos = _section(lines, 1, "pairs")
    va_rows, pos = _section(lines, pos, "verbargs")
    if lines[pos:] != ["end", ""]:
        raise IndexIOError("index truncated: missing end marker")
    pairs, args = NounPairIndex(), VerbArgIndex()
    try:
        for x, y, pat, n in np_rows:
            pairs.add(x, y, Pattern(pat), int(n))
    except ValueError as exc:
        raise IndexIOError(str(exc)) from None
    for w, p, z, n in va_rows:
        if p not in PARTICLES:
            raise IndexIOError(f"unknown particle {p!r} in index")
        args.add(z, p, w, int(n))
    return pairs, args


def save_index(path, pairs: NounPairIndex, args: VerbArgIndex):
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(pairs, args))
    os.replace(tmp, path)


def load_index(path):
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            text = fh.read()
    except UnicodeDecodeError as exc:
        raise IndexIOError(str(exc)) from None
    return loads(text)

