"""Orbit-indexed polynomial data for a folding, and the fold map with its fibers.

The fold map sends an ambient coordinate-weight assignment to a tuple of root
multisets indexed by orbit representatives.  The cornerstone identity, used
throughout: an ambient weight u sitting at twist slot p (coordinate zeta^p a)
contributes u(sigma^{delta-p}(i)) to the root (sym, zeta^delta) at a non-fixed
representative i, and u(i) to the unique collapsed root at a fixed node.
This holds uniformly, including at the glued middle orbit of the even-rank A
fold, where the doubling of extracted components and the halving of stored
multiplicities cancel.

Fiber enumeration is exact: members of a fiber differ from the base member
(multiplicities placed at representatives, slot by slot) by one free integer
vector for order 2, or two for order 3, ranging over explicit boxes; the
parametrisation is a bijection onto the fiber, so soundness and completeness
need no search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .drinfeld import Coordinate, DrinfeldPoly, poly_from_pairs
from .errors import MalformedTwisted, NonDominant, ParityViolation
from .folding import (check_folded_weight, in_P_sigma_plus, lambda_component,
                      sigma_on_weight)


@dataclass(frozen=True, order=True)
class TwistedRoot:
    """A root of one component polynomial: zeta^zeta * sym, collapsed at fixed nodes."""

    sym: str
    zeta: int = 0


@dataclass(frozen=True)
class TwistedPoly:
    """Sorted tuple of (0-based representative node, ((root, mult), ...))."""

    comps: tuple

    def roots_at(self, node):
        for n, roots in self.comps:
            if n == node:
                return dict(roots)
        return {}

    def __str__(self):
        if not self.comps:
            return "1"
        bits = []
        for node, roots in self.comps:
            inner = ", ".join(
                f"({r.sym},{r.zeta})x{m}" for r, m in roots
            )
            bits.append(f"node{node + 1}:{{{inner}}}")
        return " ".join(bits)


TWISTED_EMPTY = TwistedPoly(())


def _make(entries):
    """entries: node -> {TwistedRoot: mult}; canonical sorted form, zeros dropped."""
    comps = []
    for node in sorted(entries):
        roots = tuple(
            (r, mu)
            for r, mu in sorted(entries[node].items())
            if mu != 0
        )
        assert all(mu > 0 for _, mu in roots)
        if roots:
            comps.append((node, roots))
    return TwistedPoly(tuple(comps))


def twisted_pi_lambda_a(fs, lam_s, coord: Coordinate) -> TwistedPoly:
    """Generator attached to a folded dominant weight at one coordinate.

    Representative i carries the root (sym, zeta) with multiplicity lam_s(i);
    at fixed nodes the root collapses to (sym, 0); at the glued middle node
    of the even-rank A fold the multiplicity is halved (whence the parity
    requirement on folded weights).
    """
    check_folded_weight(fs, lam_s)
    if any(x < 0 for x in lam_s):
        raise NonDominant(f"twisted factor needs a dominant folded weight, got {lam_s}")
    if not in_P_sigma_plus(fs, lam_s):
        raise ParityViolation(
            f"glued middle coordinate must be even, got {lam_s[fs.middle]}"
        )
    entries = {}
    for a, i in enumerate(fs.orbit_reps):
        mult = lam_s[a]
        if fs.is_A2n and a == fs.middle:
            mult //= 2
        if mult == 0:
            continue
        if len(fs.orbits[a]) == 1:
            root = TwistedRoot(coord.sym, 0)
        else:
            root = TwistedRoot(coord.sym, coord.zeta % fs.m)
        entries.setdefault(i, {})[root] = mult
    return _make(entries)


def twisted_multiply(p: TwistedPoly, q: TwistedPoly) -> TwistedPoly:
    entries = {node: dict(roots) for node, roots in p.comps}
    for node, roots in q.comps:
        tgt = entries.setdefault(node, {})
        for r, mu in roots:
            tgt[r] = tgt.get(r, 0) + mu
    return _make(entries)


def lambda_of_twisted(fs, p: TwistedPoly):
    """Total folded weight: per-node degree, doubled at the glued middle node."""
    out = [0] * len(fs.orbit_reps)
    rep_index = {i: a for a, i in enumerate(fs.orbit_reps)}
    for node, roots in p.comps:
        if node not in rep_index:
            raise MalformedTwisted(f"node {node + 1} is not an orbit representative")
        a = rep_index[node]
        deg = sum(mu for _, mu in roots)
        if fs.is_A2n and a == fs.middle:
            deg *= 2
        out[a] = deg
    return tuple(out)


def fold(fs, p: DrinfeldPoly) -> TwistedPoly:
    """The folding map: push every coordinate-weight pair through all twist slots."""
    from .drinfeld import normalize_poly
    out = TWISTED_EMPTY
    for c, w in normalize_poly(fs, p).support:
        for eps in range(fs.m):
            comp = lambda_component(fs, w, eps)
            out = twisted_multiply(
                out, twisted_pi_lambda_a(fs, comp, c.shifted(eps, fs.m))
            )
    return out


# ---------------------------------------------------------------------------
# Fibers of the fold map
# ---------------------------------------------------------------------------

def _symbol_slots(fs, p: TwistedPoly):
    """Per symbol, the m ambient vectors of slot multiplicities at representatives.

    Fixed-node mass sits in slot 0 (its zeta power is collapsed there anyway).
    Raises MalformedTwisted for data no fold can produce.
    """
    rep_index = {i: a for a, i in enumerate(fs.orbit_reps)}
    n = fs.ambient.rank
    data = {}
    for node, roots in p.comps:
        if node not in rep_index:
            raise MalformedTwisted(f"node {node + 1} is not an orbit representative")
        fixed = len(fs.orbits[rep_index[node]]) == 1
        for r, mu in roots:
            if mu <= 0:
                raise MalformedTwisted(f"multiplicity {mu} at node {node + 1}")
            if fixed and r.zeta % fs.m != 0:
                raise MalformedTwisted(
                    f"fixed node {node + 1} cannot carry a rotated root"
                )
            delta = 0 if fixed else r.zeta % fs.m
            slots = data.setdefault(r.sym, [[0] * n for _ in range(fs.m)])
            slots[delta][node] += mu
    return data


def _sigma_pow(fs, v, k):
    for _ in range(k % fs.m):
        v = sigma_on_weight(fs, v)
    return v


def canonical_preimage(fs, p: TwistedPoly) -> DrinfeldPoly:
    """The distinguished single-factor-per-symbol preimage of p under fold.

    For each symbol the slot vectors are pushed to their slot's node position
    and summed into one ambient dominant weight at the base coordinate
    (sym, 0).  The result folds back to p and has pairwise distinct symbols.
    """
    pairs = []
    for sym, slots in sorted(_symbol_slots(fs, p).items()):
        w = [0] * fs.ambient.rank
        for delta, vec in enumerate(slots):
            moved = _sigma_pow(fs, tuple(vec), delta)
            w = [a + b for a, b in zip(w, moved)]
        if any(w):
            pairs.append((tuple(w), Coordinate(sym, 0)))
    return poly_from_pairs(pairs, m=fs.m)


def asym_collapse(fs, p: DrinfeldPoly) -> DrinfeldPoly:
    """Merge each symbol's factors into one factor at the base coordinate.

    The factor at zeta^eps a moves to (sym, 0) with its weight pushed forward
    by sigma^eps; the fold is unchanged and the result has pairwise distinct
    symbols.
    """
    from .drinfeld import normalize_poly
    merged = {}
    for c, w in normalize_poly(fs, p).support:
        moved = _sigma_pow(fs, w, c.zeta)
        base = Coordinate(c.sym, 0)
        prev = merged.get(base)
        merged[base] = (
            moved if prev is None else tuple(a + b for a, b in zip(prev, moved))
        )
    return poly_from_pairs([(w, c) for c, w in merged.items()], m=fs.m)


def _box(lo, hi):
    """All integer vectors lo <= v <= hi (componentwise); empty if infeasible."""
    if any(a > b for a, b in zip(lo, hi)):
        return
    yield from product(*(range(a, b + 1) for a, b in zip(lo, hi)))


def _symbol_members(fs, sym, slots):
    """All preimages of one symbol's root data, as lists of (weight, coord)."""
    add = lambda u, v: tuple(a + b for a, b in zip(u, v))
    sub = lambda u, v: tuple(a - b for a, b in zip(u, v))
    neg = lambda u: tuple(-a for a in u)
    members = []
    if fs.m == 2:
        R0, R1 = (tuple(v) for v in slots)
        hi = _sigma_pow(fs, R1, 1)
        for eta in _box(neg(R0), hi):
            X0 = add(R0, eta)
            X1 = sub(R1, sigma_on_weight(fs, eta))
            members.append([(X0, Coordinate(sym, 0)), (X1, Coordinate(sym, 1))])
    else:
        R0, R1, R2 = (tuple(v) for v in slots)
        hi_eta = _sigma_pow(fs, R1, 1)
        hi_nu = _sigma_pow(fs, R2, 2)
        for eta in _box(sub(neg(R0), hi_nu), hi_eta):
            for nu in _box(sub(neg(R0), eta), hi_nu):
                X0 = add(add(R0, eta), nu)
                X1 = sub(R1, _sigma_pow(fs, eta, 2))
                X2 = sub(R2, _sigma_pow(fs, nu, 1))
                members.append([
                    (X0, Coordinate(sym, 0)),
                    (X1, Coordinate(sym, 1)),
                    (X2, Coordinate(sym, 2)),
                ])
    return members


def check_twisted(fs, p: TwistedPoly) -> TwistedPoly:
    """Validate p against the folding; raises MalformedTwisted if no fold
    can produce it (support off the representatives, nonpositive counts,
    rotated roots at a fixed node)."""
    _symbol_slots(fs, p)
    return p


def fiber(fs, p: TwistedPoly):
    """The complete preimage set of p under fold.

    Per symbol the members form a box-parametrised family (one free vector
    for order 2, two for order 3); symbols are independent, so the fiber is
    the product of the per-symbol families.  Emitted products are normalised
    to standard form, which also merges the occasional collision created by
    vanishing factors.
    """
    per_symbol = [
        _symbol_members(fs, sym, slots)
        for sym, slots in sorted(_symbol_slots(fs, p).items())
    ]
    out = set()
    for combo in product(*per_symbol):
        pairs = [pw for member in combo for pw in member]
        out.add(poly_from_pairs(pairs, m=fs.m))
    return out
