"""Human-readable trace of one interpretation run."""
from .interpreter import Status, format_score, interpret


def _mark(flag):
    return {True: "pass", False: "fail", None: "-"}[flag]


def _tie_break(a, b):
    if a.score != b.score:
        return "score"
    if a.candidate.freq_total != b.candidate.freq_total:
        return "frequency"
    return "word order"


def explain(clause, res):
    lines = [f"clause: {' '.join(clause.tokens)}", f"verb: {clause.verb}",
             f"alpha: {res.alpha.numerator}/{res.alpha.denominator}"]
    results = interpret(clause, res)
    first = results[0]
    if first.status is Status.UNKNOWN_VERB:
        lines.append(f"frame: none ({clause.verb!r} not in case frame dictionary)")
        lines.append("status: UNKNOWN_VERB")
        return lines
    fr = first.frame
    slots = " ".join(f"{s.particle}:{'|'.join(sorted(s.allowed))}" for s in fr.slots)
    lines.append(f"frame: {fr.verb}#{fr.frame_index} {slots}")
    lines.append("arguments:")
    for i, noun, particle, ok in first.verdicts:
        verdict = {True: "satisfies", False: "VIOLATES", None: "UNKNOWN WORD"}[ok]
        lines.append(f"  [{i}] {noun} {particle}: {verdict}")
    for it in results:
        if it.status is Status.LITERAL:
            lines.append("status: LITERAL")
            continue
        lines.append(f"source: {it.source} ({it.particle})")
        if it.status is Status.UNKNOWN_WORD:
            lines.append("status: UNKNOWN_WORD")
            continue
        lines.append("candidates:")
        for c in it.raw:
            lines.append(f"  {c.word} no={c.freq_no} compound={c.freq_compound} total={c.freq_total}")
        lines.append("filter (case frame / Z-set):")
        for v in it.diagnostics:
            known = "" if v.known else " (not in lexicon)"
            lines.append(f"  {v.word}: frame={_mark(v.frame_ok)} zset={_mark(v.zset_ok)}"
                         f" -> {'kept' if v.kept else 'dropped'}{known}")
        if it.fallback_attempted:
            lines.append("fallback (case frame only):")
            for v in it.fallback_diagnostics:
                lines.append(f"  {v.word}: frame={_mark(v.frame_ok)} -> {'kept' if v.kept else 'dropped'}")
            if not it.fallback_diagnostics or not any(v.kept for v in it.fallback_diagnostics):
                lines.append("  nothing survived")
        if it.ranked:
            lines.append("scores:")
            for s in it.ranked:
                sup = ", ".join(s.superordinates) or "none"
                lines.append(f"  {s.word}: {format_score(res.alpha)}*{s.candidate.freq_total}"
                             f" + super_freq={s.super_freq} (from {sup}) = {format_score(s.score)}"
                             f" [exact {s.score.numerator}/{s.score.denominator}]")
            for a, b in zip(it.ranked, it.ranked[1:]):
                lines.append(f"  {a.word} > {b.word} by {_tie_break(a, b)}")
            lines.append(f"winner: {it.winner.word}")
            lines.append(f"rendered: {' '.join(it.rendered)}")
        lines.append(f"status: {it.status.value}")
    return lines
