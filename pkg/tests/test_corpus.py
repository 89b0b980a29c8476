import random

import numpy as np
import pytest

from metonym.corpus import (HEADER, Pattern, Token, build, candidates_for, dumps, encode, ingest,
                            load_index, loads, parse_sentence, parse_token, read_corpus, save_index,
                            scan, zset)
from metonym.corpus import _backend, _kernels
from metonym.errors import FormatVersionMismatch, IndexIOError, MalformedToken
from oracles import flatten, random_corpus, rescan

NO, COMPOUND = Pattern.NO, Pattern.COMPOUND


def sent(text):
    return parse_sentence(text)


def test_parse_token():
    assert parse_token("yomu/V") == Token("yomu", "V")
    assert parse_token("wo/P:wo") == Token("wo", "P", "wo")
    assert parse_token("a/b/N") == Token("a/b", "N")
    assert str(parse_token("no/P:no")) == "no/P:no"


@pytest.mark.parametrize("bad", ["yomu", "/N", "x/P", "x/P:zz", "x/Q", "x/"])
def test_malformed_token(bad):
    with pytest.raises(MalformedToken):
        parse_token(bad)


def test_malformed_token_position():
    with pytest.raises(MalformedToken) as exc:
        list(read_corpus(["a/N b/N", "", "a/N b/X"]))
    assert (exc.value.line, exc.value.position) == (3, 1)


def test_token_invariants():
    with pytest.raises(ValueError):
        Token("", "N")
    with pytest.raises(ValueError):
        Token("no", "P")
    with pytest.raises(ValueError):
        Token("x", "N", "no")


def test_ingest_no_pattern():
    pairs, args = ingest([sent("torusutoi/N no/P:no shousetsu/N wo/P:wo yomu/V")])
    assert pairs.postings == {"torusutoi": {("shousetsu", NO): 1}}
    assert args.postings == {("yomu", "wo"): {"shousetsu": 1}}


def test_ingest_compound_pattern():
    pairs, args = ingest([sent("nabe/N ryori/N wo/P:wo taberu/V")])
    assert pairs.postings == {"nabe": {("ryori", COMPOUND): 1}}
    assert args.postings == {("taberu", "wo"): {"ryori": 1}}


def test_ingest_empty():
    pairs, args = ingest([])
    assert pairs.postings == {} and args.postings == {}
    pairs, args = ingest([[], []])
    assert len(pairs) == 0 and len(args) == 0


def test_overlapping_matches():
    pairs, _ = ingest([sent("A/N no/P:no B/N C/N")])
    assert pairs.postings == {"A": {("B", NO): 1}, "B": {("C", COMPOUND): 1}}
    pairs, _ = ingest([sent("A/N no/P:no B/N no/P:no C/N")])
    assert pairs.postings == {"A": {("B", NO): 1}, "B": {("C", NO): 1}}


def test_verb_attachment_rules():
    _, args = ingest([sent("a/N ga/P:ga b/N wo/P:wo c/O v1/V d/N ni/P:ni v2/V e/N de/P:de")])
    assert args.postings == {("v1", "ga"): {"a": 1}, ("v1", "wo"): {"b": 1}, ("v2", "ni"): {"d": 1}}


def test_patterns_do_not_cross_sentences():
    pairs, args = ingest([sent("a/N"), sent("b/N"), sent("c/N ga/P:ga"), sent("v/V")])
    assert len(pairs) == 0 and len(args) == 0


def test_candidates_for_ordering():
    pairs, _ = ingest([sent(s) for s in
                       ["x/N no/P:no b/N"] * 2 + ["x/N b/N"] * 2 + ["x/N no/P:no a/N", "x/N c/N"] + ["x/N no/P:no z/N"] * 5])
    assert candidates_for(pairs, "x") == [("z", NO, 5), ("b", NO, 2), ("b", COMPOUND, 2),
                                          ("a", NO, 1), ("c", COMPOUND, 1)]
    assert candidates_for(pairs, "unseen") == []


def test_candidates_single_pair():
    pairs, _ = ingest([sent("a/N b/N")])
    assert candidates_for(pairs, "a") == [("b", COMPOUND, 1)]


def test_tolstoi_fixture_counts(indexes):
    pairs, args = indexes
    got = {(y, pat, n) for y, pat, n in candidates_for(pairs, "torusutoi")}
    assert got == {("shousetsu", NO, 11), ("sakuhin", NO, 3), ("izoku", NO, 1), ("eikyou", NO, 1)}
    z = zset(args, "yomu", "wo")
    assert {"hon", "shousetsu", "sakuhin"} <= z.keys()
    assert zset(args, "tobu", "wo") == {}
    _, one = ingest([sent("hon/N wo/P:wo yomu/V")])
    assert zset(one, "yomu", "wo") == {"hon": 1}


BACKENDS = ["numpy", "python"] + (["numba"] if _kernels.scan_numba is not None else [])


def run_kernel(enc, which):
    fn = {"numpy": _kernels.scan_numpy, "numba": _kernels.scan_numba, "python": _kernels.scan_python}[which]
    return fn(enc.surf, enc.tag, enc.part, enc.sent)


@pytest.mark.parametrize("seed", range(20))
def test_kernels_agree(seed):
    enc = encode(random_corpus(seed, max_sentences=60))
    ref = run_kernel(enc, "python")
    for which in BACKENDS:
        out = run_kernel(enc, which)
        for a, b in zip(out, ref):
            np.testing.assert_array_equal(a, b)


@pytest.mark.parametrize("seed", range(20))
def test_ingest_matches_rescan(seed):
    corpus = random_corpus(100 + seed)
    expected = rescan(corpus)
    for which in ("numpy", "numba") if _kernels.scan_numba else ("numpy",):
        assert flatten(*ingest(corpus, backend=which)) == expected


def test_order_insensitive_and_shard_merge():
    corpus = random_corpus(7)
    base = dumps(*ingest(corpus))
    shuffled = corpus[:]
    random.Random(1).shuffle(shuffled)
    assert dumps(*ingest(shuffled)) == base
    half = len(corpus) // 2
    p1, a1 = ingest(corpus[:half])
    p2, a2 = ingest(corpus[half:])
    assert dumps(p1.merge(p2), a1.merge(a2)) == base
    assert dumps(p2.merge(p1), a2.merge(a1)) == base


def test_backend_selection(monkeypatch):
    monkeypatch.setenv("METONYM_BACKEND", "numpy")
    assert _backend.choose(10**9) == "numpy"
    monkeypatch.setenv("METONYM_BACKEND", "auto")
    assert _backend.choose(10) == "numpy"
    if _backend.HAVE_NUMBA:
        assert _backend.choose(_backend.AUTO_MIN_TOKENS) == "numba"
        monkeypatch.setenv("METONYM_BACKEND", "numba")
        assert _backend.choose(10) == "numba"
    monkeypatch.setenv("METONYM_BACKEND", "gpu")
    with pytest.raises(ValueError):
        _backend.choose(10)


def test_scan_uses_env_backend(monkeypatch):
    enc = encode(random_corpus(3))
    monkeypatch.setenv("METONYM_BACKEND", "numpy")
    a = scan(enc)
    if _backend.HAVE_NUMBA:
        monkeypatch.setenv("METONYM_BACKEND", "numba")
        b = scan(enc)
        for x, y in zip(a, b):
            np.testing.assert_array_equal(x, y)


# -- persistence ----------------------------------------------------------------

def test_empty_round_trip(tmp_path):
    p = tmp_path / "e.idx"
    pairs, args = ingest([])
    save_index(p, pairs, args)
    assert p.read_text().startswith(HEADER + "\n")
    assert load_index(p) == (pairs, args)


def test_fixture_round_trip(tmp_path, indexes):
    p = tmp_path / "t.idx"
    save_index(p, *indexes)
    loaded = load_index(p)
    assert loaded[0].postings == indexes[0].postings
    assert loaded[1].postings == indexes[1].postings
    q = tmp_path / "t2.idx"
    save_index(q, *loaded)
    assert p.read_bytes() == q.read_bytes()


def test_truncated_index_never_partial(tmp_path, indexes):
    text = dumps(*indexes)
    for cut in range(0, len(text) - 1, 7):
        with pytest.raises((FormatVersionMismatch, IndexIOError)):
            loads(text[:cut])


def test_version_mismatch():
    with pytest.raises(FormatVersionMismatch):
        loads("MNYM-IDX v2\npairs\t0\nverbargs\t0\nend\n")


def test_corrupt_rows():
    with pytest.raises(IndexIOError):
        loads(f"{HEADER}\npairs\t1\na\tb\tSIDEWAYS\t1\nverbargs\t0\nend\n")
    with pytest.raises(IndexIOError):
        loads(f"{HEADER}\npairs\t1\na\tb\tNO\t0\nverbargs\t0\nend\n")


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_index(tmp_path / "nope.idx")


def test_build_matches_ingest():
    corpus = random_corpus(11)
    assert dumps(*build(encode(corpus))) == dumps(*ingest(corpus))


def test_backend_without_numba(monkeypatch):
    monkeypatch.setattr(_backend, "HAVE_NUMBA", False)
    monkeypatch.setenv("METONYM_BACKEND", "auto")
    assert _backend.choose(10**9) == "numpy"
    monkeypatch.setenv("METONYM_BACKEND", "numba")
    with pytest.raises(RuntimeError):
        _backend.choose(10)
