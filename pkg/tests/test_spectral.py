"""Spectral characters, twist-symmetrization, and block labels."""

import random

import pytest

from loopblocks import (EMPTY_CHAR, Coordinate, add_chars, add_labels,
                        block_label, build_folding, canonical_preimage,
                        char_of, equiv_sigma, equiv_sigma_witness, fiber, fold,
                        multiply, normalize_char, poly_from_pairs,
                        project_mod_Q, same_block, sigma_conjugate_char,
                        sigma_on_poly, symmetrize, twisted_multiply)
from tests.conftest import random_poly, random_twisted


def _poly(pairs, m):
    return poly_from_pairs(
        [(w, Coordinate(sym, z)) for w, sym, z in pairs], m=m)


# ---------------------------------------------------------------------------
# plain characters
# ---------------------------------------------------------------------------

def test_char_records_cosets(fs_a3):
    rs = fs_a3.ambient
    p = _poly([((1, 0, 0), "a", 0), ((0, 0, 1), "b", 0)], 2)
    x = char_of(rs, p)
    assert x.value_at(Coordinate("a", 0), rs) == project_mod_Q(rs, (1, 0, 0))
    assert x.value_at(Coordinate("b", 0), rs) == project_mod_Q(rs, (0, 0, 1))


def test_char_drops_root_lattice_weights(fs_a3):
    rs = fs_a3.ambient
    theta = _poly([((1, 0, 1), "a", 0)], 2)  # adjoint weight lies in Q
    assert char_of(rs, theta) == EMPTY_CHAR


def test_char_is_additive(fs_a3, rng):
    rs = fs_a3.ambient
    for _ in range(150):
        p = random_poly(rng, fs_a3)
        q = random_poly(rng, fs_a3)
        assert char_of(rs, multiply(p, q)) == add_chars(
            char_of(rs, p), char_of(rs, q))


def test_normalize_char_idempotent(fs_a4, rng):
    for _ in range(60):
        x = char_of(fs_a4.ambient, random_poly(rng, fs_a4))
        assert normalize_char(fs_a4, x) == x


# ---------------------------------------------------------------------------
# the twist conjugation and symmetrization
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("ambient,m", [("A3", 2), ("A4", 2), ("D4", 3),
                                       ("E6", 2)])
def test_conjugation_has_order_m(ambient, m, rng):
    fs = build_folding(ambient, m)
    for _ in range(40):
        x = char_of(fs.ambient, random_poly(rng, fs))
        y = x
        for _ in range(fs.m):
            y = sigma_conjugate_char(fs, y)
        assert y == x


@pytest.mark.parametrize("ambient,m", [("A3", 2), ("A4", 2), ("D4", 3),
                                       ("E6", 2)])
def test_symmetrize_is_conjugation_invariant(ambient, m, rng):
    fs = build_folding(ambient, m)
    for _ in range(40):
        x = char_of(fs.ambient, random_poly(rng, fs))
        s = symmetrize(fs, x)
        assert sigma_conjugate_char(fs, s) == s
        # symmetrizing a normalized copy changes nothing
        assert symmetrize(fs, x) == symmetrize(fs, normalize_char(fs, x))


@pytest.mark.parametrize("ambient,m", [("A3", 2), ("A4", 2), ("D4", 3)])
def test_symmetrized_character_constant_on_fibers(ambient, m, rng):
    fs = build_folding(ambient, m)
    for _ in range(25):
        tp = random_twisted(rng, fs)
        chars = {
            symmetrize(fs, char_of(fs.ambient, q)) for q in fiber(fs, tp)
        }
        assert len(chars) == 1


@pytest.mark.parametrize("ambient,m", [("A3", 2), ("A4", 2), ("D4", 3),
                                       ("E6", 2)])
def test_twisted_polys_do_not_see_the_twist(ambient, m, rng):
    fs = build_folding(ambient, m)
    for _ in range(40):
        p = random_poly(rng, fs)
        x = char_of(fs.ambient, p)
        y = char_of(fs.ambient, sigma_on_poly(fs, p))
        assert symmetrize(fs, x) == symmetrize(fs, y)
        assert equiv_sigma(fs, x, y)


def test_worked_equivalence(fs_a3):
    rs = fs_a3.ambient
    x = char_of(rs, _poly([((1, 0, 0), "a", 0)], 2))
    y = char_of(rs, _poly([((0, 0, 1), "a", 1)], 2))  # its fiber partner
    z = char_of(rs, _poly([((1, 0, 0), "b", 0)], 2))  # different symbol
    w = char_of(rs, _poly([((0, 1, 0), "a", 0)], 2))  # different coset
    assert equiv_sigma(fs_a3, x, y)
    assert not equiv_sigma(fs_a3, x, z)
    assert not equiv_sigma(fs_a3, x, w)


@pytest.mark.parametrize("ambient,m", [("A3", 2), ("A4", 2), ("D4", 3),
                                       ("E6", 2)])
def test_witness_search_agrees_with_closed_form(ambient, m, rng):
    fs = build_folding(ambient, m)
    rs = fs.ambient
    hits = 0
    for _ in range(60):
        x = char_of(rs, random_poly(rng, fs, max_coord=1))
        y = char_of(rs, random_poly(rng, fs, max_coord=1))
        if rng.random() < 0.5:
            y = sigma_conjugate_char(fs, x)  # force equivalent pairs often
        eq = equiv_sigma(fs, x, y)
        wit = equiv_sigma_witness(fs, x, y)
        assert eq == (wit is not None)
        if wit is not None:
            hits += 1
            p1, p2 = wit
            assert char_of(rs, p1) == normalize_char(fs, x)
            assert char_of(rs, p2) == normalize_char(fs, y)
            assert fold(fs, p1) == fold(fs, p2)
    assert hits >= 15  # the sample genuinely exercises the equivalent branch


# ---------------------------------------------------------------------------
# block labels
# ---------------------------------------------------------------------------

def test_worked_block_equality(fs_a3):
    p = fold(fs_a3, _poly([((1, 0, 0), "a", 0)], 2))
    q = fold(fs_a3, _poly([((2, 0, 1), "a", 0)], 2))
    r = fold(fs_a3, _poly([((0, 1, 0), "a", 0)], 2))
    assert same_block(fs_a3, p, q)
    assert not same_block(fs_a3, p, r)
    assert block_label(fs_a3, p).folded == "C2"


@pytest.mark.parametrize("ambient,m", [("A3", 2), ("A4", 2), ("D4", 3)])
def test_labels_are_fiber_invariants(ambient, m, rng):
    fs = build_folding(ambient, m)
    for _ in range(30):
        p = random_poly(rng, fs)
        tp = fold(fs, p)
        assert block_label(fs, tp) == block_label(
            fs, fold(fs, sigma_on_poly(fs, p)))
        assert symmetrize(fs, char_of(fs.ambient, p)) == block_label(fs, tp).canon


@pytest.mark.parametrize("ambient,m", [("A3", 2), ("D4", 3), ("E6", 2)])
def test_label_addition_is_a_homomorphism(ambient, m, rng):
    fs = build_folding(ambient, m)
    for _ in range(40):
        p = fold(fs, random_poly(rng, fs))
        q = fold(fs, random_poly(rng, fs))
        assert block_label(fs, twisted_multiply(p, q)) == add_labels(
            block_label(fs, p), block_label(fs, q))


def test_same_block_is_an_equivalence(fs_a3, rng):
    sample = [fold(fs_a3, random_poly(rng, fs_a3, max_coord=1))
              for _ in range(25)]
    for p in sample:
        assert same_block(fs_a3, p, p)
    for p in sample[:10]:
        for q in sample[:10]:
            assert same_block(fs_a3, p, q) == same_block(fs_a3, q, p)
            assert same_block(fs_a3, p, q) == (
                block_label(fs_a3, p) == block_label(fs_a3, q))
