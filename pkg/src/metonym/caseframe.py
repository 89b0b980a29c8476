"""Case-frame dictionary, frame selection and source-word detection."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import MalformedLine, UnknownCategory, UnknownWord
from .lexicon import IsAHierarchy, WordLexicon, _content_lines, satisfies

CASE_PARTICLES = ("ga", "wo", "ni", "de", "to", "kara", "made", "he")


@dataclass(frozen=True)
class CaseSlot:
    particle: str
    allowed: frozenset

    def __post_init__(self):
        if self.particle not in CASE_PARTICLES:
            raise ValueError(f"unknown case particle {self.particle!r}")
        if not self.allowed:
            raise ValueError("slot needs at least one category")


@dataclass(frozen=True)
class CaseFrame:
    verb: str
    frame_index: int
    slots: tuple[CaseSlot, ...]

    def __post_init__(self):
        particles = [s.particle for s in self.slots]
        if len(set(particles)) != len(particles):
            raise ValueError(f"duplicate particle in frame for {self.verb!r}")

    def slot(self, particle: str) -> CaseSlot | None:
        for s in self.slots:
            if s.particle == particle:
                return s
        return None

    def widened(self, particle: str, extra) -> "CaseFrame":
        slots = tuple(
            CaseSlot(s.particle, s.allowed | frozenset(extra)) if s.particle == particle else s
            for s in self.slots
        )
        return CaseFrame(self.verb, self.frame_index, slots)


@dataclass(frozen=True)
class InputClause:
    """A clause reduced to its (noun, particle) arguments and its verb.

    `tokens` keeps the full surface sequence for rendering and `positions`
    the token index of each argument noun; both are optional.
    """

    arguments: tuple[tuple[str, str], ...]
    verb: str
    tokens: tuple[str, ...] = ()
    positions: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.arguments:
            raise ValueError("clause needs at least one argument")
        if not self.verb:
            raise ValueError("clause needs a verb")
        if not self.tokens:
            toks, pos = [], []
            for noun, particle in self.arguments:
                pos.append(len(toks))
                toks += [noun, particle]
            toks.append(self.verb)
            object.__setattr__(self, "tokens", tuple(toks))
            object.__setattr__(self, "positions", tuple(pos))


@dataclass(frozen=True)
class SourceReport:
    frame: CaseFrame
    violations: list = field(default_factory=list)       # (arg index, noun, particle)
    unknown_words: list = field(default_factory=list)    # (arg index, noun, particle)
    verdicts: list = field(default_factory=list)         # (arg index, noun, particle, True/False/None)


FrameDict = dict  # verb -> list[CaseFrame]


def load_frames(source: Iterable[str], h: IsAHierarchy | None = None) -> FrameDict:
    """Parse `verb<TAB>particle:catA|catB<TAB>...` lines, keeping file order per verb."""
    frames: dict[str, list[CaseFrame]] = {}
    for lineno, line in _content_lines(source):
        fields = [f.strip() for f in line.split("\t") if f.strip()]
        if len(fields) < 2:
            raise MalformedLine(lineno, "frame needs a verb and at least one slot")
        verb, slots, seen = fields[0], [], set()
        for spec in fields[1:]:
            particle, sep, cats = spec.partition(":")
            allowed = frozenset(c.strip() for c in cats.split("|") if c.strip())
            if not sep or particle not in CASE_PARTICLES or not allowed:
                raise MalformedLine(lineno, f"bad slot {spec!r}")
            if particle in seen:
                raise MalformedLine(lineno, f"duplicate particle {particle!r}")
            seen.add(particle)
            if h is not None:
                for c in allowed:
                    if c not in h:
                        raise UnknownCategory(c)
            slots.append(CaseSlot(particle, allowed))
        lst = frames.setdefault(verb, [])
        lst.append(CaseFrame(verb, len(lst), tuple(slots)))
    return frames


def dump_frames(frames: FrameDict) -> list[str]:
    out = []
    for verb in sorted(frames):
        for fr in frames[verb]:
            slots = "\t".join(f"{s.particle}:{'|'.join(sorted(s.allowed))}" for s in fr.slots)
            out.append(f"{verb}\t{slots}")
    return out


def _verdict(lex, h, noun, slot):
    try:
        return satisfies(lex, h, noun, slot.allowed)
    except UnknownWord:
        return None


def select_frame(frames, clause: InputClause, lex: WordLexicon, h: IsAHierarchy) -> CaseFrame:
    """Pick the frame satisfied by the most arguments; lowest frame_index on ties."""
    if not frames:
        raise ValueError("no frames to select from")
    best, best_n = None, -1
    for fr in frames:
        n = 0
        for noun, particle in clause.arguments:
            slot = fr.slot(particle)
            if slot is not None and _verdict(lex, h, noun, slot):
                n += 1
        if n > best_n or (n == best_n and fr.frame_index < best.frame_index):
            best, best_n = fr, n
    return best


def detect_source(clause: InputClause, frame: CaseFrame, lex: WordLexicon,
                  h: IsAHierarchy) -> SourceReport:
    report = SourceReport(frame)
    for i, (noun, particle) in enumerate(clause.arguments):
        slot = frame.slot(particle)
        if slot is None:
            continue
        ok = _verdict(lex, h, noun, slot)
        report.verdicts.append((i, noun, particle, ok))
        if ok is None:
            report.unknown_words.append((i, noun, particle))
        elif not ok:
            report.violations.append((i, noun, particle))
    return report


def clause_from_tokens(tokens) -> InputClause:
    """Build a clause from tagged tokens: each noun directly followed by a case
    particle is an argument, and the last verb is the predicate."""
    args, positions, verb = [], [], None
    for i, tok in enumerate(tokens):
        if tok.tag == "V":
            verb = tok.surface
        elif (tok.tag == "N" and i + 1 < len(tokens) and tokens[i + 1].tag == "P"
                and tokens[i + 1].particle in CASE_PARTICLES):
            args.append((tok.surface, tokens[i + 1].particle))
            positions.append(i)
    if verb is None:
        raise ValueError("clause has no verb token")
    if not args:
        raise ValueError("clause has no noun + case-particle argument")
    return InputClause(tuple(args), verb, tuple(t.surface for t in tokens), tuple(positions))
