"""Pattern-scan kernels over an integer-encoded corpus.

Inputs are parallel int arrays, one entry per token:
    surf  surface id
    tag   TAG_N / TAG_V / TAG_P / TAG_O
    part  particle code (index into tokens.PARTICLES) or -1
    sent  sentence ordinal, non-decreasing

Each kernel returns three (k, 3) int64 arrays of matches:
    no_pairs  (x, y, 0)  for N(x) P(no) N(y)
    compounds (x, y, 1)  for N(x) N(y)
    verbargs  (z, p, w)  for N(z) P(p) ... V(w), nearest following verb
"""
import numpy as np

from .tokens import PARTICLES

TAG_N, TAG_V, TAG_P, TAG_O = 0, 1, 2, 3
PART_NO = PARTICLES.index("no")
PAT_NO, PAT_COMPOUND = 0, 1


def scan_numpy(surf, tag, part, sent):
    n = surf.shape[0]
    empty = np.empty((0, 3), dtype=np.int64)
    if n == 0:
        return empty, empty, empty
    isn = tag == TAG_N

    same1 = sent[:-1] == sent[1:]
    comp = np.flatnonzero(isn[:-1] & isn[1:] & same1)
    compounds = np.column_stack([surf[comp], surf[comp + 1], np.full(comp.size, PAT_COMPOUND)])

    if n >= 3:
        m = (isn[:-2] & (tag[1:-1] == TAG_P) & (part[1:-1] == PART_NO) & isn[2:]
             & same1[:-1] & same1[1:])
        nop = np.flatnonzero(m)
    else:
        nop = np.empty(0, dtype=np.int64)
    no_pairs = np.column_stack([surf[nop], surf[nop + 2], np.full(nop.size, PAT_NO)])

    # next verb at or after each position (n = none), via reversed running minimum
    pos = np.where(tag == TAG_V, np.arange(n), n)
    nextv = np.minimum.accumulate(pos[::-1])[::-1]
    nextv = np.append(nextv, n)
    sent_pad = np.append(sent, -1)
    cand = np.flatnonzero(isn[:-1] & (tag[1:] == TAG_P) & (part[1:] >= 0) & (part[1:] != PART_NO) & same1)
    v = nextv[cand + 2] if cand.size else cand
    keep = sent_pad[v] == sent[cand]
    cand, v = cand[keep], v[keep]
    verbargs = np.column_stack([surf[cand], part[cand + 1], surf[v]])

    return (no_pairs.astype(np.int64).reshape(-1, 3),
            compounds.astype(np.int64).reshape(-1, 3),
            verbargs.astype(np.int64).reshape(-1, 3))


def _scan_loop(surf, tag, part, sent):
    n = surf.shape[0]
    no_pairs = np.empty((n, 3), dtype=np.int64)
    compounds = np.empty((n, 3), dtype=np.int64)
    verbargs = np.empty((n, 3), dtype=np.int64)
    a = b = c = 0
    nextv = n
    nextv_sent = -1
    # walk right-to-left so the nearest following verb is always known
    for i in range(n - 1, -1, -1):
        if tag[i] != TAG_N or i + 1 >= n or sent[i + 1] != sent[i]:
            if tag[i] == TAG_V:
                nextv = i
                nextv_sent = sent[i]
            continue
        if tag[i + 1] == TAG_N:
            compounds[b, 0] = surf[i]
            compounds[b, 1] = surf[i + 1]
            compounds[b, 2] = PAT_COMPOUND
            b += 1
        elif tag[i + 1] == TAG_P:
            p = part[i + 1]
            if p == PART_NO:
                if i + 2 < n and tag[i + 2] == TAG_N and sent[i + 2] == sent[i]:
                    no_pairs[a, 0] = surf[i]
                    no_pairs[a, 1] = surf[i + 2]
                    no_pairs[a, 2] = PAT_NO
                    a += 1
            elif p >= 0 and nextv_sent == sent[i] and nextv > i + 1:
                verbargs[c, 0] = surf[i]
                verbargs[c, 1] = p
                verbargs[c, 2] = surf[nextv]
                c += 1
    return no_pairs[:a][::-1].copy(), compounds[:b][::-1].copy(), verbargs[:c][::-1].copy()


try:
    from numba import njit
    scan_numba = njit(cache=True, nogil=True)(_scan_loop)
except ImportError:  # pragma: no cover
    scan_numba = None

scan_python = _scan_loop
