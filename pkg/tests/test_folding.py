"""Diagram automorphisms and folded systems."""

import random

import pytest

from loopblocks import (FixedNodeSupport, InvalidType, NoSuchAutomorphism,
                        ParityViolation, build_folding, build_root_system,
                        check_folded_weight, embed, in_P_sigma_plus,
                        is_dominant, lambda_component, project_mod_Q,
                        sigma_on_coset, sigma_on_weight, zero_coset)
from tests.conftest import ALL_FOLDINGS

FOLDED_LABELS = {
    ("A2", 2): "A1", ("A3", 2): "C2", ("A4", 2): "B2", ("A5", 2): "C3",
    ("A6", 2): "B3", ("A7", 2): "C4", ("A8", 2): "B4",
    ("D4", 2): "B3", ("D5", 2): "B4", ("D6", 2): "B5", ("D7", 2): "B6",
    ("E6", 2): "F4", ("D4", 3): "G2",
}

ORBIT_TABLES = {
    ("A3", 2): ((0, 2), (1,)),
    ("A4", 2): ((0, 3), (1, 2)),
    ("D4", 2): ((0,), (1,), (2, 3)),
    ("D4", 3): ((0, 2, 3), (1,)),
    ("D5", 2): ((0,), (1,), (2,), (3, 4)),
    ("E6", 2): ((0, 5), (1,), (2, 4), (3,)),
}


@pytest.mark.parametrize("ambient,m", sorted(FOLDED_LABELS))
def test_folded_labels(ambient, m):
    fs = build_folding(ambient, m)
    assert str(fs.folded.label) == FOLDED_LABELS[(ambient, m)]
    assert fs.m == m
    assert fs.is_A2n == (ambient in ("A2", "A4", "A6", "A8"))


@pytest.mark.parametrize("ambient,m", [
    ("A1", 2), ("B3", 2), ("C3", 2), ("F4", 2), ("G2", 2), ("E7", 2),
    ("E8", 2), ("A2", 3), ("A3", 3), ("A5", 3), ("E6", 3), ("D5", 3),
    ("D4", 4), ("D4", 1), ("A3", 0),
])
def test_unsupported_twists_refused(ambient, m):
    with pytest.raises(NoSuchAutomorphism):
        build_folding(ambient, m)


@pytest.mark.parametrize("ambient,m", sorted(ORBIT_TABLES))
def test_orbit_tables(ambient, m):
    fs = build_folding(ambient, m)
    assert fs.orbits == ORBIT_TABLES[(ambient, m)]
    assert fs.orbit_reps == tuple(o[0] for o in fs.orbits)
    assert len(fs.orbit_reps) == fs.folded.rank


@pytest.mark.parametrize("ambient,m", ALL_FOLDINGS)
def test_sigma_is_a_diagram_automorphism(ambient, m):
    fs = build_folding(ambient, m)
    n = fs.ambient.rank
    C = fs.ambient.cartan
    perm = fs.perm
    assert sorted(perm) == list(range(n))
    for i in range(n):
        for j in range(n):
            assert C[perm[i]][perm[j]] == C[i][j]
    for i in range(n):
        assert fs.sigma(i, m) == i
        assert fs.sigma(i, -1) == fs.sigma(i, m - 1)
    # orbits partition the nodes
    seen = [i for orbit in fs.orbits for i in orbit]
    assert sorted(seen) == list(range(n))


@pytest.mark.parametrize("ambient,m", ALL_FOLDINGS)
def test_component_embed_roundtrip(ambient, m):
    fs = build_folding(ambient, m)
    rng = random.Random(101)
    k = fs.folded.rank
    zero = (0,) * k
    for _ in range(30):
        lam_s = [rng.randint(0, 3) for _ in range(k)]
        if fs.is_A2n:
            lam_s[fs.middle] *= 2  # the glued node carries even values
        lam_s = tuple(lam_s)
        for eps in range(m):
            if eps > 0 and any(
                lam_s[a] for a, orbit in enumerate(fs.orbits) if len(orbit) == 1
            ):
                with pytest.raises(FixedNodeSupport):
                    embed(fs, lam_s, eps)
                continue
            w = embed(fs, lam_s, eps)
            assert is_dominant(fs.ambient, w)
            for delta in range(m):
                want = lam_s if delta == eps else zero
                assert lambda_component(fs, w, delta) == want


@pytest.mark.parametrize("ambient,m", ALL_FOLDINGS)
def test_components_reassemble_ambient_weight(ambient, m):
    fs = build_folding(ambient, m)
    rng = random.Random(5)
    for _ in range(30):
        lam = tuple(rng.randint(0, 3) for _ in range(fs.ambient.rank))
        total = [0] * fs.ambient.rank
        for eps in range(m):
            part = embed(fs, lambda_component(fs, lam, eps), eps)
            total = [a + b for a, b in zip(total, part)]
        assert tuple(total) == lam


def test_parity_gate_on_the_glued_node(fs_a4):
    assert in_P_sigma_plus(fs_a4, (1, 2))
    assert not in_P_sigma_plus(fs_a4, (1, 1))
    assert not in_P_sigma_plus(fs_a4, (-1, 2))
    with pytest.raises(ParityViolation):
        embed(fs_a4, (0, 1), 0)
    assert embed(fs_a4, (1, 2), 0) == (1, 1, 0, 0)
    assert embed(fs_a4, (1, 2), 1) == (0, 0, 1, 1)


def test_embed_fixed_node_support(fs_a3):
    # node 2 of A3 is fixed: weight there may only ride in slot 0
    assert embed(fs_a3, (0, 1), 0) == (0, 1, 0)
    with pytest.raises(FixedNodeSupport):
        embed(fs_a3, (0, 1), 1)
    assert embed(fs_a3, (1, 0), 1) == (0, 0, 1)


def test_check_folded_weight_validates(fs_a3):
    with pytest.raises(InvalidType):
        check_folded_weight(fs_a3, (1, 0, 0))  # folded rank is 2
    with pytest.raises(InvalidType):
        check_folded_weight(fs_a3, (1, "x"))


@pytest.mark.parametrize("ambient,m", ALL_FOLDINGS)
def test_sigma_on_weights_and_cosets(ambient, m):
    fs = build_folding(ambient, m)
    rs = fs.ambient
    rng = random.Random(23)
    for _ in range(25):
        w = tuple(rng.randint(-3, 3) for _ in range(rs.rank))
        out = w
        for _ in range(m):
            out = sigma_on_weight(fs, out)
        assert out == w
        x = project_mod_Q(rs, w)
        y = x
        for _ in range(m):
            y = sigma_on_coset(fs, y)
        assert y == x
        # compatible with projection
        assert sigma_on_coset(fs, x) == project_mod_Q(rs, sigma_on_weight(fs, w))
    assert sigma_on_coset(fs, zero_coset(rs)) == zero_coset(rs)


def test_sigma_shifts_embedding_slots(fs_a3):
    # support away from fixed nodes: sigma moves slot eps to slot eps+1
    lam_s = (2, 0)
    assert sigma_on_weight(fs_a3, embed(fs_a3, lam_s, 0)) == embed(fs_a3, lam_s, 1)
    assert sigma_on_weight(fs_a3, embed(fs_a3, lam_s, 1)) == embed(fs_a3, lam_s, 0)


def test_folded_cartan_of_the_triple_fold():
    fs = build_folding("D4", 3)
    assert fs.folded.cartan == ((2, -3), (-1, 2)) or fs.folded.cartan == ((2, -1), (-3, 2))
    assert str(fs.folded.label) == "G2"
