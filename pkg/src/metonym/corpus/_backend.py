"""Backend selection for the pattern-scan kernels.

METONYM_BACKEND=numba|numpy|auto (default auto). In auto mode numba is used
only when it imports and the corpus is large enough to repay loading the
jitted kernel (see benchmarks/bench_scan.py).
"""
import os

try:
    import numba  # noqa: F401
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

AUTO_MIN_TOKENS = 20_000_000


def requested():
    value = os.environ.get("METONYM_BACKEND", "auto").strip().lower()
    if value not in ("auto", "numba", "numpy"):
        raise ValueError(f"METONYM_BACKEND must be auto, numba or numpy, not {value!r}")
    return value


def choose(n_tokens, backend=None):
    backend = backend or requested()
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("METONYM_BACKEND=numba but numba is not installed")
    if backend == "auto":
        return "numba" if HAVE_NUMBA and n_tokens >= AUTO_MIN_TOKENS else "numpy"
    return backend
