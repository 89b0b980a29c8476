"""Command-line entry point: index, interpret, batch, explain.

Exit codes: 0 success (any interpretation status), 1 resource errors,
2 unparseable clause input.
"""
from __future__ import annotations

import argparse
import configparser
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .caseframe import clause_from_tokens, load_frames
from .corpus import index as cindex
from .corpus.tokens import parse_sentence, read_corpus
from .errors import MetonymError
from .interpreter import Resources, Status, format_score, interpret, parse_alpha
from .lexicon import load_hierarchy, load_lexicon

CONFIG_ENV = "METONYM_CONFIG"
PATH_KEYS = ("corpus", "index", "frames", "hierarchy", "lexicon")
RECORD_FIELDS = ("status", "source", "verb", "particle", "winner", "score", "rendered")


class ResourceError(Exception):
    pass


class ClauseError(Exception):
    pass


def read_config(path):
    """Read the [metonym] section; relative paths resolve against the file's directory."""
    parser = configparser.ConfigParser()
    if not parser.read(path, encoding="utf-8"):
        raise ResourceError(f"cannot read config file {path}")
    if "metonym" not in parser:
        return {}
    section = parser["metonym"]
    base = Path(path).resolve().parent
    out = {}
    for key in PATH_KEYS:
        if key in section:
            out[key] = str(base / section[key])
    if "alpha" in section:
        out["alpha"] = section["alpha"]
    if "unknown-as-source" in section:
        out["unknown_as_source"] = section.getboolean("unknown-as-source")
    return out


def effective_config(args):
    conf = {}
    env = os.environ.get(CONFIG_ENV)
    if env:
        conf.update(read_config(env))
    for key in PATH_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            conf[key] = value
    if args.alpha is not None:
        conf["alpha"] = args.alpha
    if args.unknown_as_source:
        conf["unknown_as_source"] = True
    conf.setdefault("alpha", "3/2")
    conf.setdefault("unknown_as_source", False)
    return conf


def _open(path):
    try:
        return open(path, encoding="utf-8")
    except OSError as exc:
        raise ResourceError(f"cannot open {path}: {exc.strerror}") from None


def load_resources(conf) -> Resources:
    for key in ("frames", "hierarchy", "lexicon"):
        if not conf.get(key):
            raise ResourceError(f"missing --{key}")
    try:
        alpha = parse_alpha(conf["alpha"])
        with _open(conf["hierarchy"]) as fh:
            h = load_hierarchy(fh)
        with _open(conf["lexicon"]) as fh:
            lex = load_lexicon(fh, h)
        with _open(conf["frames"]) as fh:
            frames = load_frames(fh, h)
        if conf.get("index"):
            try:
                pairs, verbargs = cindex.load_index(conf["index"])
            except OSError as exc:
                if isinstance(exc, MetonymError):
                    raise
                raise ResourceError(f"cannot read index {conf['index']}: {exc.strerror}") from None
        elif conf.get("corpus"):
            with _open(conf["corpus"]) as fh:
                pairs, verbargs = cindex.ingest(read_corpus(fh))
        else:
            raise ResourceError("need --index or --corpus")
    except (MetonymError, ValueError) as exc:
        raise ResourceError(str(exc)) from None
    return Resources(lex, h, frames, pairs, verbargs, alpha, conf["unknown_as_source"])


def parse_clause(text):
    try:
        return clause_from_tokens(parse_sentence(text))
    except (MetonymError, ValueError) as exc:
        raise ClauseError(str(exc)) from None


def record(it) -> dict:
    rec = {"status": it.status.value, "source": it.source, "verb": it.verb,
           "particle": it.particle}
    win = it.winner
    if win is not None:
        rec["winner"] = win.word
        rec["score"] = format_score(win.score)
        rec["rendered"] = " ".join(it.rendered)
    return {k: rec[k] for k in RECORD_FIELDS if k in rec}


def dump_record(rec) -> str:
    return json.dumps(rec, ensure_ascii=False, separators=(",", ":"))


def interpret_lines(text, res) -> list[str]:
    return [dump_record(record(it)) for it in interpret(parse_clause(text), res)]


# -- subcommands -------------------------------------------------------------

def cmd_index(args, out=sys.stdout, err=sys.stderr):
    conf = effective_config(args)
    corpus, dest = conf.get("corpus"), conf.get("index")
    if not corpus or not dest:
        print("error: index needs --corpus and --index", file=err)
        return 1
    try:
        with open(corpus, encoding="utf-8") as fh:
            enc = cindex.encode(read_corpus(fh))
    except OSError as exc:
        print(f"error: cannot read {corpus}: {exc.strerror}", file=err)
        return 1
    except MetonymError as exc:
        print(f"error: {corpus}: {exc}", file=err)
        return 1
    pairs, verbargs = cindex.build(enc, args.backend)
    try:
        cindex.save_index(dest, pairs, verbargs)
    except OSError as exc:
        print(f"error: cannot write {dest}: {exc.strerror}", file=err)
        return 1
    print(f"sentences={enc.n_sentences} noun_pairs={len(pairs)} noun_pair_total={pairs.total()} "
          f"verb_args={len(verbargs)} verb_arg_total={verbargs.total()}", file=out)
    return 0


def cmd_interpret(args, res, out=sys.stdout, err=sys.stderr):
    try:
        lines = interpret_lines(args.clause, res)
    except ClauseError as exc:
        print(f"error: {exc}", file=err)
        return 2
    for line in lines:
        print(line, file=out)
    return 0


def _batch_one(text, res):
    try:
        return interpret_lines(text, res)
    except ClauseError as exc:
        return [dump_record({"status": "ERROR", "input": text, "error": str(exc)})]


def cmd_batch(args, res, out=sys.stdout, err=sys.stderr):
    try:
        with open(args.clauses, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
    except OSError as exc:
        print(f"error: cannot read {args.clauses}: {exc.strerror}", file=err)
        return 1
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(lambda t: _batch_one(t, res), lines))
    counts = {s.value: 0 for s in Status}
    counts["ERROR"] = 0
    for recs in results:
        for line in recs:
            print(line, file=out)
            counts[json.loads(line)["status"]] += 1
    print(dump_record({"summary": counts, "clauses": len(lines)}), file=out)
    return 0


def cmd_explain(args, res, out=sys.stdout, err=sys.stderr):
    try:
        clause = parse_clause(args.clause)
    except ClauseError as exc:
        print(f"error: {exc}", file=err)
        return 2
    from .explain import explain
    for line in explain(clause, res):
        print(line, file=out)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    for key in PATH_KEYS:
        common.add_argument(f"--{key}", default=None)
    common.add_argument("--alpha", default=None, help="weighting factor, p/q or decimal (default 3/2)")
    common.add_argument("--unknown-as-source", action="store_true",
                        help="treat words missing from the lexicon as source words")

    parser = argparse.ArgumentParser(prog="metonym", description="Corpus-backed metonymy interpretation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", parents=[common], help="build the corpus indexes and write them to --index")
    p.add_argument("--backend", choices=("auto", "numba", "numpy"), default=None)

    p = sub.add_parser("interpret", parents=[common], help="interpret one tagged clause")
    p.add_argument("clause")

    p = sub.add_parser("batch", parents=[common], help="interpret one clause per line")
    p.add_argument("clauses")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("explain", parents=[common], help="print the full selection trace")
    p.add_argument("clause")
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "index":
        return cmd_index(args, out, err)
    try:
        res = load_resources(effective_config(args))
    except ResourceError as exc:
        print(f"error: {exc}", file=err)
        return 1
    handler = {"interpret": cmd_interpret, "batch": cmd_batch, "explain": cmd_explain}[args.command]
    return handler(args, res, out, err)


if __name__ == "__main__":
    sys.exit(main())
