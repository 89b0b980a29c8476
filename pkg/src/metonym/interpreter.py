"""Target-word selection: filter, score with super-ordinate frequency, rank, render."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .caseframe import CaseFrame, InputClause, detect_source, select_frame
from .corpus.index import NounPairIndex, Pattern, VerbArgIndex, candidates_for, zset
from .errors import UnknownWord
from .lexicon import IsAHierarchy, WordLexicon, is_superordinate, satisfies

DEFAULT_ALPHA = Fraction(3, 2)


class Status(enum.Enum):
    LITERAL = "LITERAL"
    STRONG = "STRONG"
    WEAK = "WEAK"
    NO_CANDIDATES = "NO_CANDIDATES"
    UNKNOWN_WORD = "UNKNOWN_WORD"
    UNKNOWN_VERB = "UNKNOWN_VERB"


def parse_alpha(text) -> Fraction:
    """Accept "p/q", a decimal string, or a number; must be positive."""
    try:
        value = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"alpha must be a rational like 3/2 or 1.5, not {text!r}") from None
    if value <= 0:
        raise ValueError(f"alpha must be positive, got {text!r}")
    return value


def format_score(score: Fraction) -> str:
    """Decimal when the value terminates (at least one fractional digit), else p/q."""
    den = score.denominator
    digits = 0
    while den % 10 == 0 or den % 2 == 0 or den % 5 == 0:
        if den % 10 == 0:
            den //= 10
        elif den % 2 == 0:
            den //= 2
        else:
            den //= 5
        digits += 1
    if den != 1:
        return f"{score.numerator}/{score.denominator}"
    digits = max(digits, 1)
    scaled = score * 10 ** digits
    whole, frac = divmod(int(scaled), 10 ** digits)
    text = f"{whole}.{frac:0{digits}d}"
    return text


@dataclass(frozen=True)
class Candidate:
    word: str
    freq_no: int = 0
    freq_compound: int = 0

    def __post_init__(self):
        if self.freq_total < 1:
            raise ValueError("candidate frequency must be at least 1")

    @property
    def freq_total(self):
        return self.freq_no + self.freq_compound

    @property
    def dominant_pattern(self):
        return Pattern.NO if self.freq_no >= self.freq_compound else Pattern.COMPOUND

    def scaled(self, k: int) -> "Candidate":
        return Candidate(self.word, self.freq_no * k, self.freq_compound * k)


@dataclass(frozen=True)
class ScoredCandidate:
    candidate: Candidate
    super_freq: int
    score: Fraction
    superordinates: tuple = ()

    @property
    def word(self):
        return self.candidate.word


@dataclass(frozen=True)
class Verdict:
    word: str
    known: bool
    frame_ok: bool | None
    zset_ok: bool | None     # None when the Z-set check was skipped

    @property
    def kept(self):
        return self.known and bool(self.frame_ok) and self.zset_ok is not False


@dataclass
class Interpretation:
    source: str | None
    verb: str
    particle: str | None
    status: Status
    ranked: list = field(default_factory=list)
    rendered: list | None = None
    source_index: int | None = None
    frame: CaseFrame | None = None
    verdicts: list = field(default_factory=list)
    raw: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)
    fallback_attempted: bool = False
    fallback_diagnostics: list = field(default_factory=list)
    alpha: Fraction = DEFAULT_ALPHA

    @property
    def winner(self) -> ScoredCandidate | None:
        if self.status in (Status.STRONG, Status.WEAK):
            return self.ranked[0]
        return None


@dataclass(frozen=True)
class Resources:
    lexicon: WordLexicon
    hierarchy: IsAHierarchy
    frames: dict
    pairs: NounPairIndex
    verbargs: VerbArgIndex
    alpha: Fraction = DEFAULT_ALPHA
    unknown_as_source: bool = False


def gather_candidates(idx: NounPairIndex, x: str) -> list[Candidate]:
    """Fold the NO and COMPOUND postings of `x` into one Candidate per Y."""
    counts: dict[str, list[int]] = {}
    for y, pat, n in candidates_for(idx, x):
        slot = counts.setdefault(y, [0, 0])
        slot[pat.rank] += n
    cands = [Candidate(y, a, b) for y, (a, b) in counts.items()]
    cands.sort(key=lambda c: (-c.freq_total, c.word))
    return cands


def filter_candidates(cands, slot_allowed, z, lex: WordLexicon, h: IsAHierarchy):
    """Keep candidates passing the slot restriction and present in the Z-set.

    Passing ``z=None`` skips the Z-set check. Words missing from the lexicon
    are dropped and reported through the verdict list.
    """
    kept, verdicts = [], []
    for c in cands:
        try:
            frame_ok = satisfies(lex, h, c.word, slot_allowed)
            known = True
        except UnknownWord:
            frame_ok, known = None, False
        zset_ok = None if z is None else c.word in z
        v = Verdict(c.word, known, frame_ok, zset_ok)
        verdicts.append(v)
        if v.kept:
            kept.append(c)
    return kept, verdicts


def _superordinates(kept, c, lex, h):
    return [o for o in kept if o.word != c.word and is_superordinate(lex, h, o.word, c.word)]


def superordinate_frequency(kept, c: Candidate, lex: WordLexicon, h: IsAHierarchy) -> int:
    return sum(o.freq_total for o in _superordinates(kept, c, lex, h))


def score_and_rank(kept, alpha, lex: WordLexicon, h: IsAHierarchy) -> list[ScoredCandidate]:
    """Score = alpha * own frequency + super-ordinate frequency, best first.

    Ordering compares q * score as integers (alpha = p/q), then frequency,
    then the word itself.
    """
    alpha = Fraction(alpha)
    p, q = alpha.numerator, alpha.denominator
    rows = []
    for c in kept:
        sups = _superordinates(kept, c, lex, h)
        sf = sum(o.freq_total for o in sups)
        key = p * c.freq_total + q * sf
        sc = ScoredCandidate(c, sf, alpha * c.freq_total + sf, tuple(o.word for o in sups))
        rows.append((-key, -c.freq_total, c.word, sc))
    rows.sort(key=lambda r: r[:3])
    return [r[3] for r in rows]


def render(clause: InputClause, source_index: int, winner: ScoredCandidate) -> list[str]:
    pos = clause.positions[source_index]
    source = clause.tokens[pos]
    cand = winner.candidate
    insert = [source, "no", cand.word] if cand.dominant_pattern is Pattern.NO else [source, cand.word]
    return list(clause.tokens[:pos]) + insert + list(clause.tokens[pos + 1:])


def _resolve(clause, res: Resources, frame, index, noun, particle, verdicts):
    out = Interpretation(noun, clause.verb, particle, Status.NO_CANDIDATES,
                         source_index=index, frame=frame, verdicts=verdicts, alpha=res.alpha)
    allowed = frame.slot(particle).allowed
    out.raw = gather_candidates(res.pairs, noun)
    z = zset(res.verbargs, clause.verb, particle)
    kept, out.diagnostics = filter_candidates(out.raw, allowed, z, res.lexicon, res.hierarchy)
    status = Status.STRONG
    if not kept:
        out.fallback_attempted = True
        kept, out.fallback_diagnostics = filter_candidates(
            out.raw, allowed, None, res.lexicon, res.hierarchy)
        status = Status.WEAK
    if not kept:
        return out
    out.ranked = score_and_rank(kept, res.alpha, res.lexicon, res.hierarchy)
    out.status = status
    out.rendered = render(clause, index, out.ranked[0])
    return out


def interpret(clause: InputClause, res: Resources) -> list[Interpretation]:
    """One Interpretation per violating argument, or a single status record."""
    frames = res.frames.get(clause.verb)
    if not frames:
        return [Interpretation(None, clause.verb, None, Status.UNKNOWN_VERB, alpha=res.alpha)]
    frame = select_frame(frames, clause, res.lexicon, res.hierarchy)
    report = detect_source(clause, frame, res.lexicon, res.hierarchy)
    verdicts = report.verdicts

    targets = [(i, n, p, False) for i, n, p in report.violations]
    targets += [(i, n, p, True) for i, n, p in report.unknown_words]
    targets.sort()
    if not targets:
        return [Interpretation(None, clause.verb, None, Status.LITERAL,
                               frame=frame, verdicts=verdicts, alpha=res.alpha)]
    results = []
    for i, noun, particle, unknown in targets:
        if unknown and not res.unknown_as_source:
            results.append(Interpretation(noun, clause.verb, particle, Status.UNKNOWN_WORD,
                                          source_index=i, frame=frame, verdicts=verdicts,
                                          alpha=res.alpha))
        else:
            results.append(_resolve(clause, res, frame, i, noun, particle, verdicts))
    return results
