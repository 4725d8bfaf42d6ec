"""Shared fixtures: cached systems, foldings, and seeded random generators."""

import random

import pytest

from loopblocks import build_folding, build_root_system

ALL_FOLDINGS = [
    ("A2", 2), ("A3", 2), ("A4", 2), ("A5", 2), ("A6", 2), ("A7", 2),
    ("D4", 2), ("D5", 2), ("D6", 2), ("E6", 2), ("D4", 3),
]


@pytest.fixture(scope="session")
def rs_a2():
    return build_root_system("A2")


@pytest.fixture(scope="session")
def rs_a3():
    return build_root_system("A3")


@pytest.fixture(scope="session")
def rs_d4():
    return build_root_system("D4")


@pytest.fixture(scope="session")
def fs_a3():
    return build_folding("A3", 2)


@pytest.fixture(scope="session")
def fs_a4():
    return build_folding("A4", 2)


@pytest.fixture(scope="session")
def fs_d4_m3():
    return build_folding("D4", 3)


@pytest.fixture
def rng():
    return random.Random(20260815)


def random_poly(rng, fs, symbols="ab", max_coord=2, density=0.6):
    """A random polynomial over the ambient system of a folding."""
    from loopblocks import Coordinate, poly_from_pairs

    pairs = []
    for sym in symbols:
        for zeta in range(fs.m):
            if rng.random() < density:
                w = tuple(
                    rng.randint(0, max_coord) for _ in range(fs.ambient.rank)
                )
                pairs.append((w, Coordinate(sym, zeta)))
    return poly_from_pairs(pairs, m=fs.m)


def random_twisted(rng, fs, max_total=2, symbols="ab"):
    """A random twisted polynomial with folded weight <= max_total everywhere.

    Built as a product of generators over <= len(symbols) symbol-orbits at
    random zeta powers, spending a per-coordinate budget so the total folded
    weight stays within the bound (the glued middle node, which must carry
    even values, spends in steps of two).
    """
    from loopblocks import (Coordinate, TWISTED_EMPTY, twisted_multiply,
                            twisted_pi_lambda_a)

    k = fs.folded.rank
    middle = fs.middle if fs.is_A2n else None
    budget = [max_total] * k
    out = TWISTED_EMPTY
    for sym in symbols[: rng.randint(1, len(symbols))]:
        for zeta in range(fs.m):
            if rng.random() > 0.6:
                continue
            lam = []
            for a in range(k):
                if a == middle:
                    step = 2 * rng.randint(0, budget[a] // 2)
                else:
                    step = rng.randint(0, budget[a])
                lam.append(step)
                budget[a] -= step
            if any(lam):
                out = twisted_multiply(
                    out, twisted_pi_lambda_a(fs, tuple(lam), Coordinate(sym, zeta))
                )
    return out
