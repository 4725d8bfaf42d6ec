"""Independent oracles and a self-test battery.

Everything here recomputes results of the main modules by a different
method: fundamental groups via gcds of minors instead of the tracked Smith
reduction, fold fibers via exhaustive composition enumeration instead of the
box parametrisation, and adjoint tensor products via weight-system
multiplication instead of the reflection method.  The oracles are used by
the test suite and by the command-line self test; they deliberately share no
code path with what they check beyond the forward fold map and the weight
multiplicity tables.
"""

from __future__ import annotations

from itertools import combinations, product
from math import gcd

from .drinfeld import Coordinate, poly_from_pairs
from .errors import NonDominant
from .linkage import adjoint_tensor_decompose
from .rootsys import (all_roots, build_root_system, dominant_weights_below,
                      is_dominant, reflect_to_dominant, weight_multiplicities,
                      weyl_dim, weyl_orbit_size, _det_bareiss)
from .twisted import TwistedPoly, fiber, fold


# ---------------------------------------------------------------------------
# Fundamental group via minor gcds
# ---------------------------------------------------------------------------

def fund_group_minor_gcd(cartan):
    """Invariant factors (>1) of the Cartan matrix from k-minor gcds.

    d_k = g_k / g_{k-1} with g_k the gcd of all k x k minors; independent of
    any unimodular-transform bookkeeping.
    """
    n = len(cartan)
    g_prev = 1
    out = []
    for k in range(1, n + 1):
        g = 0
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                minor = [[cartan[r][c] for c in cols] for r in rows]
                g = gcd(g, abs(_det_bareiss(minor)))
        d = g // g_prev
        if d > 1:
            out.append(d)
        g_prev = g
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Brute-force fold fibers
# ---------------------------------------------------------------------------

def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _restrict_twisted(p, sym):
    comps = []
    for node, roots in p.comps:
        kept = tuple((r, mu) for r, mu in roots if r.sym == sym)
        if kept:
            comps.append((node, kept))
    return TwistedPoly(tuple(comps))


def _symbol_candidates(fs, sym, p):
    """Every slot assignment compatible with one symbol's root counts.

    Per node-orbit the slot values on the orbit form an m x m cell matrix
    whose anti-diagonal sums are the root multiplicities; each anti-diagonal
    splits independently, and fixed nodes split their single count over the
    m slots.  The resulting candidates form a finite superset of the fiber
    restricted to the symbol, which is then filtered by the forward map.
    """
    m = fs.m
    n = fs.ambient.rank
    target = _restrict_twisted(p, sym)
    counts = {}
    for node, roots in target.comps:
        for r, mu in roots:
            counts[(node, r.zeta % m)] = counts.get((node, r.zeta % m), 0) + mu

    per_orbit = []
    for a, i in enumerate(fs.orbit_reps):
        orbit = fs.orbits[a]
        if len(orbit) == 1:
            total = counts.get((i, 0), 0)
            choices = [
                {(eps, i): v for eps, v in enumerate(split) if v}
                for split in _compositions(total, m)
            ]
        else:
            diag_choices = []
            for delta in range(m):
                total = counts.get((i, delta), 0)
                cells = [(eps, fs.sigma(i, (delta - eps) % m)) for eps in range(m)]
                diag_choices.append([
                    {cell: v for cell, v in zip(cells, split) if v}
                    for split in _compositions(total, m)
                ])
            choices = []
            for combo in product(*diag_choices):
                merged = {}
                for part in combo:
                    merged.update(part)
                choices.append(merged)
        per_orbit.append(choices)

    out = []
    for combo in product(*per_orbit):
        slots = [[0] * n for _ in range(m)]
        for part in combo:
            for (eps, node), v in part.items():
                slots[eps][node] += v
        pairs = [
            (tuple(vec), Coordinate(sym, eps))
            for eps, vec in enumerate(slots)
            if any(vec)
        ]
        q = poly_from_pairs(pairs, m=m)
        if fold(fs, q) == target:
            out.append(q)
    return out


def brute_force_fiber(fs, p):
    """The fiber of p computed by exhaustive enumeration plus fold filtering."""
    syms = sorted({r.sym for _, roots in p.comps for r, _ in roots})
    per_symbol = [_symbol_candidates(fs, s, p) for s in syms]
    out = set()
    for combo in product(*per_symbol):
        pairs = [(w, c) for q in combo for c, w in q.support]
        out.add(poly_from_pairs(pairs, m=fs.m))
    return out


# ---------------------------------------------------------------------------
# Tensor decomposition by weight-system multiplication
# ---------------------------------------------------------------------------

_MULT_TABLES = {}


def _mult_table(rs, lam):
    key = (rs.label, lam)
    if key not in _MULT_TABLES:
        _MULT_TABLES[key] = weight_multiplicities(rs, lam)
    return _MULT_TABLES[key]


def tensor_decompose_by_characters(rs, mu):
    """Decompose (adjoint) tensor V(mu) by multiplying weight systems.

    Computes the product's multiplicity at every dominant weight under
    mu + theta and peels leading irreducibles; no reflection signs anywhere.
    """
    if not is_dominant(rs, mu):
        raise NonDominant(f"tensor oracle needs dominant input, got {mu}")
    adj = {w: 1 for w in all_roots(rs)}
    adj[(0,) * rs.rank] = rs.rank
    table_mu = _mult_table(rs, tuple(mu))

    def mult_at(table, nu):
        return table.get(reflect_to_dominant(rs, nu)[0], 0)

    top = tuple(a + b for a, b in zip(mu, rs.theta))
    doms = dominant_weights_below(rs, top)
    order = sorted(doms, key=lambda nu: (sum(doms[nu]), nu))
    remaining = {}
    for nu in order:
        remaining[nu] = sum(
            k * mult_at(table_mu, tuple(a - b for a, b in zip(nu, w)))
            for w, k in adj.items()
        )
    out = {}
    for nu in order:
        c = remaining[nu]
        if c == 0:
            continue
        assert c > 0, (mu, nu, c)
        out[nu] = c
        table_nu = _mult_table(rs, nu)
        for other in order:
            if remaining[other]:
                remaining[other] -= c * mult_at(table_nu, other)
        remaining[nu] = 0
    total = sum(c * weyl_dim(rs, nu) for nu, c in out.items())
    dim_g = len(adj) - 1 + rs.rank
    assert total == dim_g * weyl_dim(rs, mu), "dimension conservation failed"
    return out


# ---------------------------------------------------------------------------
# Self-test battery
# ---------------------------------------------------------------------------

def run_selftest(report=None):
    """Cross-check the main algorithms against the oracles; True iff all pass.

    ``report`` is called with (section name, passed) after each section;
    by default a one-line verdict is printed instead.
    """
    import itertools
    import random

    from . import folding, linkage, spectral
    from .errors import NotFoundWithinBound, NotInRootLattice

    ok = True

    def section(name, passed):
        nonlocal ok
        ok = ok and passed
        if report is None:
            print(f"{'ok  ' if passed else 'FAIL'} {name}")
        else:
            report(name, passed)

    # fundamental groups against the minor-gcd oracle
    expected = {"A1": (2,), "A4": (5,), "A8": (9,), "B4": (2,), "C3": (2,),
                "D4": (2, 2), "D5": (4,), "D6": (2, 2), "D7": (4,), "D8": (2, 2),
                "E6": (3,), "E7": (2,), "E8": (), "F4": (), "G2": ()}
    good = True
    for lbl, want in expected.items():
        rs = build_root_system(lbl)
        got = tuple(sorted(rs.invariant_factors))
        oracle = fund_group_minor_gcd(rs.cartan)
        good = good and got == oracle == want
    section("fundamental groups vs minor-gcd oracle", good)

    # fibers against brute force
    rng = random.Random(2024)
    good = True
    for lbl, m in [("A3", 2), ("A4", 2), ("D4", 2), ("D4", 3)]:
        fs = folding.build_folding(lbl, m)
        for _ in range(12):
            pairs = []
            for s in "ab"[: rng.randint(1, 2)]:
                for z in range(fs.m):
                    if rng.random() < 0.6:
                        w = tuple(rng.randint(0, 1) for _ in range(fs.ambient.rank))
                        pairs.append((w, Coordinate(s, z)))
            p = poly_from_pairs(pairs, m=fs.m)
            tp = fold(fs, p)
            bf = brute_force_fiber(fs, tp)
            if p not in bf or fiber(fs, tp) != bf:
                good = False
    section("fold fibers vs exhaustive enumeration", good)

    # symmetrized characters constant on fibers
    good = True
    for lbl, m in [("A3", 2), ("D4", 3)]:
        fs = folding.build_folding(lbl, m)
        for _ in range(20):
            pairs = []
            for z in range(fs.m):
                if rng.random() < 0.7:
                    w = tuple(rng.randint(0, 1) for _ in range(fs.ambient.rank))
                    pairs.append((w, Coordinate("a", z)))
            p = poly_from_pairs(pairs, m=fs.m)
            tp = fold(fs, p)
            chars = {
                spectral.symmetrize(fs, spectral.char_of(fs.ambient, q))
                for q in fiber(fs, tp)
            }
            good = good and len(chars) == 1
    section("block labels independent of fiber member", good)

    # adjoint tensor decomposition against weight-system multiplication
    good = True
    rs = build_root_system("A2")
    good = good and adjoint_tensor_decompose(rs, (1, 1)) == {
        (2, 2): 1, (3, 0): 1, (0, 3): 1, (1, 1): 2, (0, 0): 1}
    good = good and adjoint_tensor_decompose(rs, (1, 0)) == {
        (2, 1): 1, (0, 2): 1, (1, 0): 1}
    for lbl in ("A2", "A3"):
        rs = build_root_system(lbl)
        for lam in itertools.product(range(2), repeat=rs.rank):
            if adjoint_tensor_decompose(rs, lam) != tensor_decompose_by_characters(rs, lam):
                good = False
    section("adjoint tensor products vs character oracle", good)

    # linkage dichotomy on small weights
    good = True
    rs = build_root_system("A2")
    for lam in itertools.product(range(3), repeat=2):
        for mu in itertools.product(range(3), repeat=2):
            try:
                c = linkage.linkage_chain(rs, lam, mu)
                good = good and linkage.verify_chain(rs, c)
            except NotInRootLattice:
                diff = tuple(a - b for a, b in zip(lam, mu))
                from .rootsys import in_root_lattice
                good = good and not in_root_lattice(rs, diff)
            except NotFoundWithinBound:
                good = False
    section("linkage chains on small weights", good)

    # orbit-expanded multiplicities sum to the Weyl dimension
    good = True
    for lbl, lam in [("A2", (2, 1)), ("A3", (1, 1, 1)), ("D4", (1, 0, 1, 0)),
                     ("G2", (1, 1)), ("F4", (1, 0, 0, 1))]:
        rs = build_root_system(lbl)
        mults = weight_multiplicities(rs, lam)
        total = sum(c * weyl_orbit_size(rs, nu) for nu, c in mults.items())
        good = good and total == weyl_dim(rs, lam)
    section("weight multiplicities vs Weyl dimension", good)

    return ok
