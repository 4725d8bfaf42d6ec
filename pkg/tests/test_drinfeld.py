"""Polynomial data: canonical form, monoid laws, duality, twist action."""

import random

import pytest

from loopblocks import (EMPTY, Coordinate, DrinfeldPoly, InvalidType,
                        NonDominant, char_of, dual, fold, is_asym, lambda_of,
                        multiply, normalize_poly, poly_from_pairs,
                        sigma_on_poly)
from loopblocks.spectral import sigma_conjugate_char
from tests.conftest import random_poly


def test_coordinates_sort_and_print():
    a0 = Coordinate("a", 0)
    a1 = Coordinate("a", 1)
    b0 = Coordinate("b", 0)
    assert a0 < a1 < b0
    assert str(a0) == "a" and str(a1) == "z^1*a"
    assert a1.shifted(1, 2) == a0


def test_standard_form_merges_and_drops():
    p = poly_from_pairs([
        ((1, 0, 0), Coordinate("a", 0)),
        ((0, 2, 0), Coordinate("a", 0)),
        ((0, 0, 0), Coordinate("b", 1)),
    ])
    assert p.support == ((Coordinate("a", 0), (1, 2, 0)),)
    assert p.weight_at(Coordinate("a", 0), 3) == (1, 2, 0)
    assert p.weight_at(Coordinate("b", 1), 3) == (0, 0, 0)
    assert p.symbols() == ["a"]


def test_zeta_reduction_mod_m():
    p = poly_from_pairs([((1, 0), Coordinate("a", 0)),
                         ((0, 1), Coordinate("a", 2))], m=2)
    assert p.support == ((Coordinate("a", 0), (1, 1)),)


def test_rejects_non_dominant_and_ragged():
    with pytest.raises(NonDominant):
        poly_from_pairs([((1, -1), Coordinate("a", 0))])
    with pytest.raises(InvalidType):
        poly_from_pairs([((1, 0), Coordinate("a", 0)),
                         ((1, 0, 0), Coordinate("a", 0))])
    with pytest.raises(InvalidType):
        poly_from_pairs([((1, 0), "a")])


def test_monoid_laws(fs_a3, rng):
    e = EMPTY
    for _ in range(200):
        p = random_poly(rng, fs_a3)
        q = random_poly(rng, fs_a3)
        r = random_poly(rng, fs_a3)
        assert multiply(p, q) == multiply(q, p)
        assert multiply(multiply(p, q), r) == multiply(p, multiply(q, r))
        assert multiply(p, e) == p


def test_lambda_is_additive(fs_a3, rng):
    rs = fs_a3.ambient
    for _ in range(200):
        p = random_poly(rng, fs_a3)
        q = random_poly(rng, fs_a3)
        lam = lambda_of(rs, multiply(p, q))
        assert lam == tuple(
            a + b for a, b in zip(lambda_of(rs, p), lambda_of(rs, q))
        )


def test_dual_involution(fs_a3, rng):
    rs = fs_a3.ambient
    omega1 = poly_from_pairs([((1, 0, 0), Coordinate("a", 0))])
    omega3 = poly_from_pairs([((0, 0, 1), Coordinate("a", 0))])
    assert dual(rs, omega1) == omega3
    for _ in range(100):
        p = random_poly(rng, fs_a3)
        q = random_poly(rng, fs_a3)
        assert dual(rs, dual(rs, p)) == p
        assert dual(rs, multiply(p, q)) == multiply(dual(rs, p), dual(rs, q))


def test_normalize_is_idempotent(fs_a4, rng):
    for _ in range(100):
        p = random_poly(rng, fs_a4)
        assert normalize_poly(fs_a4, p) == p  # canonical already
    q = DrinfeldPoly(((Coordinate("a", 3), (1, 0, 0, 0)),))
    assert normalize_poly(fs_a4, q).support == ((Coordinate("a", 1), (1, 0, 0, 0)),)


def test_asym_means_one_power_per_symbol(fs_a3):
    p = poly_from_pairs([((1, 0, 0), Coordinate("a", 0)),
                         ((0, 1, 0), Coordinate("b", 1))])
    q = poly_from_pairs([((1, 0, 0), Coordinate("a", 0)),
                         ((0, 1, 0), Coordinate("a", 1))])
    assert is_asym(fs_a3, p)
    assert not is_asym(fs_a3, q)
    assert is_asym(fs_a3, EMPTY)


@pytest.mark.parametrize("ambient,m", [("A3", 2), ("A4", 2), ("D4", 3), ("E6", 2)])
def test_twist_action_well_behaved(ambient, m, rng):
    from loopblocks import build_folding

    fs = build_folding(ambient, m)
    for _ in range(60):
        p = random_poly(rng, fs)
        q = sigma_on_poly(fs, p)
        # order m
        r = p
        for _ in range(fs.m):
            r = sigma_on_poly(fs, r)
        assert r == p
        # the fold map cannot see the twist
        assert fold(fs, q) == fold(fs, p)
        # matches the conjugation action on characters
        assert char_of(fs.ambient, q) == sigma_conjugate_char(
            fs, char_of(fs.ambient, p))
