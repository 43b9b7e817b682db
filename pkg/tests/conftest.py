import time

import numpy as np
import pytest

from ringforge import GF, RingSpec, classify_congruence, classify_subspaces


@pytest.fixture(scope="session")
def F2():
    return GF(2)


@pytest.fixture(scope="session")
def F3():
    return GF(3)


@pytest.fixture(scope="session")
def F4():
    return GF(2, 2)


@pytest.fixture(scope="session")
def F5():
    return GF(5)


@pytest.fixture(scope="session")
def classified():
    """Session-wide cache of classification runs.

    get(kind, p, r, s, t, **kw) -> (ClassReport, elapsed_seconds); the
    elapsed figure is from the one real run, so timing assertions stay
    meaningful no matter which test file triggers the computation first.
    """
    runs = {}

    def get(kind, p, r, s, t=None, **kw):
        key = (kind, p, r, s, t, tuple(sorted(kw.items())))
        if key not in runs:
            F = GF(p, r)
            t0 = time.perf_counter()
            if kind == "subspaces":
                rep = classify_subspaces(F, s, t, **kw)
            elif kind == "congruence":
                rep = classify_congruence(F, s, **kw)
            else:
                raise ValueError(kind)
            runs[key] = (rep, time.perf_counter() - t0)
        return runs[key]

    return get


def prime_spec(q, mats, lam=0, theta_tail=()):
    """RingSpec over a prime field with identity automorphisms."""
    mats = np.asarray(mats, dtype=np.int64)
    if mats.ndim == 2:
        mats = mats[None, :, :]
    t, s = mats.shape[0], mats.shape[1]
    tail = tuple(theta_tail) if theta_tail else (0,) * lam
    return RingSpec(GF(q), s, t, lam, mats, (0,) * s, (0,) * t + tail)
