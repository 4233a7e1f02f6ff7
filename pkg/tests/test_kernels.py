import random

import pytest

from matkls import _kernels
from matkls._kernels import _pykernels
from matkls.named import build_named

try:
    from matkls._kernels import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="cython"))


def naive_rank(bases, mask):
    return max((b & mask).bit_count() for b in bases)


@pytest.mark.parametrize("impl", BACKENDS)
@pytest.mark.parametrize("spec", ["uniform:3,6", "fano", "graphic:K4", "sum:boolean:1+uniform:2,3", "pg:2,3"])
def test_rank_table_matches_naive(impl, spec):
    m = build_named(spec)
    table = impl.rank_table(m.n, m.bases)
    assert len(table) == 1 << m.n
    assert all(table[s] == naive_rank(m.bases, s) for s in range(1 << m.n))


@pytest.mark.parametrize("impl", BACKENDS)
def test_rank_table_with_loops(impl):
    # element 2 is a loop, 0 and 1 parallel
    bases = [0b001, 0b010]
    table = impl.rank_table(3, bases)
    assert list(table) == [naive_rank(bases, s) for s in range(8)]


@pytest.mark.parametrize("impl", BACKENDS)
def test_max_intersection(impl):
    m = build_named("uniform:2,4")
    assert impl.max_intersection(m.bases, 0b0111) == 2
    assert impl.max_intersection(m.bases, 0b1000) == 1
    assert impl.max_intersection(m.bases, 0) == 0


@pytest.mark.parametrize("impl", BACKENDS)
def test_tutte_counts_total(impl):
    m = build_named("graphic:K4")
    table = _pykernels.rank_table(m.n, m.bases)
    counts = impl.tutte_counts(table, m.n, m.r)
    assert sum(map(sum, counts)) == 1 << m.n
    assert counts[m.r][0] == 1  # only the empty set has rank 0


@pytest.mark.parametrize("impl", BACKENDS)
def test_containment_lists(impl):
    rng = random.Random(7)
    masks = [rng.getrandbits(6) for _ in range(25)]
    got = impl.containment_lists(masks)
    for i, a in enumerate(masks):
        assert got[i] == [j for j, b in enumerate(masks) if a | b == b]


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
def test_backends_agree_on_random_families():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 10)
        bases = sorted({rng.getrandbits(n) for _ in range(rng.randint(1, 12))})
        assert bytes(_ckernels.rank_table(n, bases)) == bytes(_pykernels.rank_table(n, bases))
        table = _pykernels.rank_table(n, bases)
        r = max(table)
        assert _ckernels.tutte_counts(table, n, r) == _pykernels.tutte_counts(table, n, r)


def test_backend_flag():
    assert _kernels.BACKEND in ("cython", "python")


def test_env_forces_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, MATKLS_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import matkls; print(matkls.BACKEND)"], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "python"
