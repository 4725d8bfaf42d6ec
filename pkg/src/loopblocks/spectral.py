"""Characters with values in P/Q, their symmetrization, and block labels.

A character assigns an element of the ambient fundamental group P/Q to each
of finitely many coordinates (zero values are never stored).  Two characters
are identified when some pair of polynomials realizing them has equal fold;
per symbol-orbit the complete invariant for that identification is
F = sum_eps sigmabar^eps(value at zeta^eps a), and the canonical class
representative stores sigmabar^{-j}(F) at zeta^j a.  That representative is
itself a character, fixed by the twist action, and is what block labels
carry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drinfeld import Coordinate, DrinfeldPoly, poly_from_pairs
from .folding import sigma_on_coset, sigma_on_weight
from .rootsys import lift_coset, project_mod_Q, zero_coset
from .twisted import TwistedPoly, canonical_preimage, fold


@dataclass(frozen=True)
class SpectralCharacter:
    """Sorted tuple of (Coordinate, nonzero FundGroupElt)."""

    support: tuple

    def value_at(self, coord, rs):
        for c, v in self.support:
            if c == coord:
                return v
        return zero_coset(rs)

    def symbols(self):
        return sorted({c.sym for c, _ in self.support})

    def __str__(self):
        if not self.support:
            return "0"
        return " + ".join(
            f"[{','.join(map(str, v.residues))}]@{c}" for c, v in self.support
        )


EMPTY_CHAR = SpectralCharacter(())


def char_from_entries(entries):
    support = tuple(
        (c, v)
        for c, v in sorted(entries.items(), key=lambda cv: (cv[0].sym, cv[0].zeta))
        if not v.is_zero()
    )
    return SpectralCharacter(support)


def add_chars(x: SpectralCharacter, y: SpectralCharacter) -> SpectralCharacter:
    entries = {c: v for c, v in x.support}
    for c, v in y.support:
        entries[c] = entries[c] + v if c in entries else v
    return char_from_entries(entries)


def char_of(rs, p: DrinfeldPoly) -> SpectralCharacter:
    """Project every weight of p into P/Q, dropping zero cosets."""
    return char_from_entries({c: project_mod_Q(rs, w) for c, w in p.support})


def _slots(fs, x: SpectralCharacter):
    """Per symbol, the m-tuple of cosets at zeta^0 a .. zeta^{m-1} a."""
    out = {}
    zero = zero_coset(fs.ambient)
    for c, v in x.support:
        slots = out.setdefault(c.sym, [zero] * fs.m)
        slots[c.zeta % fs.m] = slots[c.zeta % fs.m] + v
    return out


def normalize_char(fs, x: SpectralCharacter) -> SpectralCharacter:
    """Reduce zeta powers mod m, merging cosets that land together."""
    entries = {}
    for sym, slots in _slots(fs, x).items():
        for z, v in enumerate(slots):
            entries[Coordinate(sym, z)] = v
    return char_from_entries(entries)


def _coset_pow(fs, v, k):
    for _ in range(k % fs.m):
        v = sigma_on_coset(fs, v)
    return v


def sigma_conjugate_char(fs, x: SpectralCharacter) -> SpectralCharacter:
    """The twist action on characters: value v at c becomes sigmabar^{-1}(v) at zeta*c."""
    entries = {}
    for c, v in x.support:
        entries[c.shifted(1, fs.m)] = _coset_pow(fs, v, fs.m - 1)
    return char_from_entries(entries)


def symmetrize(fs, x: SpectralCharacter) -> SpectralCharacter:
    """Canonical twist-invariant representative of the class of x.

    Per symbol the invariant F = sum_eps sigmabar^eps(x(zeta^eps a)) is
    computed once and redistributed as sigmabar^{-j}(F) at zeta^j a.  Two
    characters have equal symmetrization exactly when witnessing polynomial
    pairs with equal fold exist (see equiv_sigma_witness).
    """
    entries = {}
    for sym, slots in _slots(fs, x).items():
        F = zero_coset(fs.ambient)
        for eps, v in enumerate(slots):
            F = F + _coset_pow(fs, v, eps)
        for j in range(fs.m):
            entries[Coordinate(sym, j)] = _coset_pow(fs, F, (fs.m - j) % fs.m)
    return char_from_entries(entries)


def equiv_sigma(fs, x: SpectralCharacter, y: SpectralCharacter) -> bool:
    return symmetrize(fs, x) == symmetrize(fs, y)


def equiv_sigma_witness(fs, x, y):
    """Definitional test of equivalence: construct realizing polynomials.

    Returns a pair (p1, p2) with char_of(p1) = x, char_of(p2) = y and
    fold(p1) = fold(p2), or None when no such pair exists.  The fold of a
    per-symbol slot tuple (A_eps) depends only on sum_eps sigma^eps(A_eps),
    so slot difference vectors D_eps that telescope to zero under that sum
    leave the fold unchanged; padding by multiples of 2*rho (which lies in
    the root lattice) makes every slot dominant without moving any coset.
    """
    amb = fs.ambient
    rank = amb.rank
    xs, ys = _slots(fs, x), _slots(fs, y)
    pairs1, pairs2 = [], []
    for sym in sorted(set(xs) | set(ys)):
        zero = zero_coset(amb)
        xv = xs.get(sym, [zero] * fs.m)
        yv = ys.get(sym, [zero] * fs.m)
        d = [a - b for a, b in zip(xv, yv)]
        F = zero_coset(amb)
        for eps, v in enumerate(d):
            F = F + _coset_pow(fs, v, eps)
        if not F.is_zero():
            return None
        D = [None] * fs.m
        acc = (0,) * rank
        for eps in range(1, fs.m):
            D[eps] = lift_coset(amb, d[eps])
            moved = D[eps]
            for _ in range(eps):
                moved = sigma_on_weight(fs, moved)
            acc = tuple(a + b for a, b in zip(acc, moved))
        D[0] = tuple(-a for a in acc)
        for eps in range(fs.m):
            L = lift_coset(amb, yv[eps])
            pad = max(0, max(-min(L), -min(a + b for a, b in zip(L, D[eps]))))
            pad = (pad + 1) // 2 * 2  # even padding: pad*rho stays in 2*rho Z
            B = tuple(a + pad for a in L)
            A = tuple(a + b for a, b in zip(B, D[eps]))
            if any(B):
                pairs2.append((B, Coordinate(sym, eps)))
            if any(A):
                pairs1.append((A, Coordinate(sym, eps)))
    p1 = poly_from_pairs(pairs1, m=fs.m)
    p2 = poly_from_pairs(pairs2, m=fs.m)
    assert char_of(amb, p1) == normalize_char(fs, x)
    assert char_of(amb, p2) == normalize_char(fs, y)
    assert fold(fs, p1) == fold(fs, p2)
    return p1, p2


# ---------------------------------------------------------------------------
# Block labels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockLabel:
    """Folded-type tag plus the canonical twist-invariant character."""

    folded: str
    canon: SpectralCharacter

    def __str__(self):
        return f"{self.folded}:{self.canon}"


def block_label(fs, p: TwistedPoly) -> BlockLabel:
    """Label of the block containing the simple object attached to p."""
    pre = canonical_preimage(fs, p)
    return BlockLabel(str(fs.folded.label), symmetrize(fs, char_of(fs.ambient, pre)))


def same_block(fs, p: TwistedPoly, q: TwistedPoly) -> bool:
    return block_label(fs, p) == block_label(fs, q)


def add_labels(x: BlockLabel, y: BlockLabel) -> BlockLabel:
    assert x.folded == y.folded
    return BlockLabel(x.folded, add_chars(x.canon, y.canon))
