"""Token model for the pre-tagged corpus and clause format (`surface/TAG`)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from ..errors import MalformedToken

N, V, P, OTHER = "N", "V", "P", "O"
PARTICLES = ("ga", "wo", "ni", "de", "to", "kara", "made", "he", "no")


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    tag: str
    particle: str | None = None

    def __post_init__(self):
        if not self.surface:
            raise ValueError("empty surface")
        if (self.tag == P) != (self.particle is not None):
            raise ValueError("particle subtype present iff tag is P")
        if self.tag not in (N, V, P, OTHER):
            raise ValueError(f"bad tag {self.tag!r}")

    def __str__(self):
        return f"{self.surface}/{self.tag}:{self.particle}" if self.tag == P else f"{self.surface}/{self.tag}"


def parse_token(text: str, line: int = 0, position: int = 0) -> Token:
    surface, sep, tag = text.rpartition("/")
    if not sep or not surface:
        raise MalformedToken(line, position, text)
    if tag in (N, V, OTHER):
        return Token(surface, tag)
    kind, _, particle = tag.partition(":")
    if kind == P and particle in PARTICLES:
        return Token(surface, P, particle)
    raise MalformedToken(line, position, text)


def parse_sentence(line: str, lineno: int = 0) -> list[Token]:
    return [parse_token(t, lineno, i) for i, t in enumerate(line.split())]


def read_corpus(source: Iterable[str]) -> Iterator[list[Token]]:
    """Yield one token list per non-blank line."""
    for lineno, line in enumerate(source, 1):
        if line.strip():
            yield parse_sentence(line, lineno)
