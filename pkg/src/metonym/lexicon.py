"""Semantic categories, the is-a hierarchy over them, and the word dictionary."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import CycleDetected, MalformedLine, UnknownCategory, UnknownWord


def _content_lines(source: Iterable[str]):
    for lineno, raw in enumerate(source, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line


@dataclass(frozen=True)
class IsAHierarchy:
    nodes: frozenset = frozenset()
    parents: Mapping[str, frozenset] = field(default_factory=dict)

    def __post_init__(self):
        for child, ps in self.parents.items():
            for name in (child, *ps):
                if name not in self.nodes:
                    raise UnknownCategory(name)
        object.__setattr__(self, "_closure", _closure(self.nodes, self.parents))

    def __contains__(self, name):
        return name in self.nodes

    def __eq__(self, other):
        if not isinstance(other, IsAHierarchy):
            return NotImplemented
        return self.nodes == other.nodes and self.edges() == other.edges()

    def __hash__(self):
        return hash((self.nodes, frozenset(self.edges())))

    def edges(self):
        return sorted((c, p) for c, ps in self.parents.items() for p in ps)

    def roots(self):
        return sorted(n for n in self.nodes if not self.parents.get(n))

    def ancestors(self, category: str) -> frozenset:
        try:
            return self._closure[category]
        except KeyError:
            raise UnknownCategory(category) from None

    def with_edge(self, child: str, parent: str) -> "IsAHierarchy":
        """Return a copy with one more edge (and its endpoints as nodes)."""
        parents = {c: set(ps) for c, ps in self.parents.items()}
        parents.setdefault(child, set()).add(parent)
        return IsAHierarchy(
            nodes=self.nodes | {child, parent},
            parents={c: frozenset(ps) for c, ps in parents.items()},
        )

    def dump(self) -> list[str]:
        """Canonical lines: sorted edges, then isolated nodes on their own."""
        lines = [f"{c}\t{p}" for c, p in self.edges()]
        linked = {n for e in self.edges() for n in e}
        lines.extend(sorted(self.nodes - linked))
        return lines


def _closure(nodes, parents):
    # iterative DFS with colouring; raises on the first back edge
    out: dict[str, frozenset] = {}
    state: dict[str, int] = {}
    for start in sorted(nodes):
        if start in out:
            continue
        stack = [(start, iter(sorted(parents.get(start, ()))))]
        state[start] = 1
        path = [start]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                acc = set()
                for p in parents.get(node, ()):
                    acc.add(p)
                    acc |= out[p]
                out[node] = frozenset(acc)
                state[node] = 2
                stack.pop()
                path.pop()
            elif state.get(nxt) == 1:
                cycle = path[path.index(nxt):] + [nxt]
                raise CycleDetected(cycle)
            elif state.get(nxt) != 2:
                state[nxt] = 1
                path.append(nxt)
                stack.append((nxt, iter(sorted(parents.get(nxt, ())))))
    return out


def load_hierarchy(source: Iterable[str]) -> IsAHierarchy:
    """Read `child<TAB>parent` lines. A line with a single name declares a bare node."""
    nodes: set[str] = set()
    parents: dict[str, set[str]] = {}
    for lineno, line in _content_lines(source):
        fields = [f.strip() for f in line.split("\t")]
        if len(fields) == 1 and fields[0]:
            nodes.add(fields[0])
            continue
        if len(fields) != 2 or not all(fields):
            raise MalformedLine(lineno, "expected child<TAB>parent")
        child, parent = fields
        if child == parent:
            raise CycleDetected([child, child])
        nodes.update(fields)
        parents.setdefault(child, set()).add(parent)
    return IsAHierarchy(frozenset(nodes), {c: frozenset(ps) for c, ps in parents.items()})


def ancestors(h: IsAHierarchy, c: str) -> frozenset:
    return h.ancestors(c)


@dataclass(frozen=True)
class WordLexicon:
    entries: Mapping[str, frozenset] = field(default_factory=dict)

    def __contains__(self, word):
        return word in self.entries

    def categories(self, word: str) -> frozenset:
        try:
            return self.entries[word]
        except KeyError:
            raise UnknownWord(word) from None

    def check(self, h: IsAHierarchy):
        for word, cats in self.entries.items():
            for c in cats:
                if c not in h:
                    raise UnknownCategory(c)
        return self

    def dump(self) -> list[str]:
        return [f"{w}\t{'|'.join(sorted(cs))}" for w, cs in sorted(self.entries.items())]


def load_lexicon(source: Iterable[str], h: IsAHierarchy | None = None) -> WordLexicon:
    entries: dict[str, frozenset] = {}
    for lineno, line in _content_lines(source):
        fields = line.split("\t")
        if len(fields) != 2:
            raise MalformedLine(lineno, "expected surface<TAB>cat1|cat2")
        word = fields[0].strip()
        cats = frozenset(c.strip() for c in fields[1].split("|") if c.strip())
        if not word or not cats:
            raise MalformedLine(lineno, "empty surface or category list")
        entries[word] = entries.get(word, frozenset()) | cats
    lex = WordLexicon(entries)
    if h is not None:
        lex.check(h)
    return lex


def satisfies(lex: WordLexicon, h: IsAHierarchy, word: str, allowed) -> bool:
    """True iff one of the word's categories is in `allowed` or sits below a member of it.

    Raises UnknownWord for words missing from the lexicon; that is not the
    same thing as failing the restriction.
    """
    if not allowed:
        raise ValueError("allowed category set must be non-empty")
    allowed = set(allowed)
    for cat in lex.categories(word):
        if cat in allowed or not allowed.isdisjoint(h.ancestors(cat)):
            return True
    return False


def is_superordinate(lex: WordLexicon, h: IsAHierarchy, upper: str, lower: str) -> bool:
    """Word-level is-a: some category of `upper` is a strict ancestor of some category of `lower`."""
    up = lex.categories(upper)
    return any(not up.isdisjoint(h.ancestors(c)) for c in lex.categories(lower))
