"""Shared fixtures: reflection arrangements, random arrangements, and the
cached slice-family chamber lists (with their enumeration wall-clock time)."""

import random
import time
from itertools import combinations

import pytest

from chambergeo.arrangement import build_arrangement, chambers
from chambergeo.rootsys import CartanType, build_root_system


def reflection_arrangement(letter, rank):
    rs = build_root_system(CartanType(letter, rank))
    arr = build_arrangement(
        [rs.root_functional(b) for b in rs.positive_roots], (), rank)
    return rs, arr


def braid_arrangement(n):
    """The L_ij arrangement {s_i = s_j} on the sum-zero subspace of Q^n."""
    covs = []
    for i, j in combinations(range(n), 2):
        c = [0] * n
        c[i], c[j] = 1, -1
        covs.append(tuple(c))
    return build_arrangement(covs, [(1,) * n], n)


def random_arrangement(rng, max_dim=4, max_hyperplanes=8):
    dim = rng.randint(2, max_dim)
    count = rng.randint(1, max_hyperplanes)
    covs = []
    while len(covs) < count:
        c = tuple(rng.randint(-3, 3) for _ in range(dim))
        if any(c):
            covs.append(c)
    return build_arrangement(covs, (), dim)


@pytest.fixture(scope="session")
def slice_chambers():
    """(arrangements, chamber lists, enumeration seconds) for n = 2..6."""
    arrs, chs, t0 = {}, {}, time.monotonic()
    for n in range(2, 7):
        arrs[n] = braid_arrangement(n)
        chs[n] = chambers(arrs[n])
    return arrs, chs, time.monotonic() - t0


@pytest.fixture()
def rng():
    return random.Random(20230817)
