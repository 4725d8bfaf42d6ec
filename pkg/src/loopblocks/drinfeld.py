"""The commutative monoid of highest-weight data over symbolic coordinates.

An element assigns a dominant nonzero weight to each of finitely many
coordinates; multiplication adds weights pointwise.  A coordinate is a free
symbol times a power of the fixed primitive m-th root of unity zeta.
Distinct symbols stand for complex numbers with pairwise distinct m-th
powers; that convention is the only arithmetic fact the algorithms use, so
coordinates stay purely symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidType, NonDominant
from .rootsys import check_weight, minus_w0


@dataclass(frozen=True, order=True)
class Coordinate:
    """zeta^zeta * sym, with zeta a primitive m-th root of unity."""

    sym: str
    zeta: int = 0

    def shifted(self, k, m):
        return Coordinate(self.sym, (self.zeta + k) % m)

    def __str__(self):
        return self.sym if self.zeta == 0 else f"z^{self.zeta}*{self.sym}"


@dataclass(frozen=True)
class DrinfeldPoly:
    """Finitely many (coordinate, dominant nonzero weight) pairs, sorted."""

    support: tuple

    def items(self):
        return self.support

    def weight_at(self, coord, rank):
        for c, w in self.support:
            if c == coord:
                return w
        return (0,) * rank

    def symbols(self):
        return sorted({c.sym for c, _ in self.support})

    def __str__(self):
        if not self.support:
            return "1"
        return " * ".join(f"[{','.join(map(str, w))}]@{c}" for c, w in self.support)


def _build(entries):
    """entries: dict Coordinate -> weight list/tuple; drops zeros, sorts."""
    support = []
    for c, w in entries.items():
        w = tuple(w)
        if any(x < 0 for x in w):
            raise NonDominant(f"weight {w} at {c} is not dominant")
        if any(w):
            support.append((c, w))
    lengths = {len(w) for _, w in support}
    if len(lengths) > 1:
        raise InvalidType(f"mixed weight lengths {sorted(lengths)}")
    support.sort(key=lambda cw: (cw[0].sym, cw[0].zeta))
    return DrinfeldPoly(tuple(support))


def poly_from_pairs(pairs, m=None) -> DrinfeldPoly:
    """Standard form of a product of single-coordinate factors.

    pairs is a list of (weight, Coordinate); repeated coordinates merge by
    weight addition and zero weights vanish.  When m is given, zeta powers
    are first reduced mod m.
    """
    entries = {}
    for w, c in pairs:
        if not isinstance(c, Coordinate):
            raise InvalidType(f"expected a Coordinate, got {c!r}")
        if m is not None:
            c = Coordinate(c.sym, c.zeta % m)
        if c in entries:
            entries[c] = tuple(a + b for a, b in zip(entries[c], w))
            if len(w) != len(entries[c]):
                raise InvalidType("mixed weight lengths at one coordinate")
        else:
            entries[c] = tuple(w)
    return _build(entries)


EMPTY = DrinfeldPoly(())


def multiply(p: DrinfeldPoly, q: DrinfeldPoly) -> DrinfeldPoly:
    entries = {c: w for c, w in p.support}
    for c, w in q.support:
        if c in entries:
            entries[c] = tuple(a + b for a, b in zip(entries[c], w))
        else:
            entries[c] = w
    return _build(entries)


def lambda_of(rs, p: DrinfeldPoly):
    """Total highest weight: the sum of all stored weights."""
    out = [0] * rs.rank
    for _, w in p.support:
        check_weight(rs, w)
        for i, x in enumerate(w):
            out[i] += x
    return tuple(out)


def dual(rs, p: DrinfeldPoly) -> DrinfeldPoly:
    """Apply the duality involution -w0 to every weight; coordinates fixed."""
    for _, w in p.support:
        check_weight(rs, w)
    return _build({c: minus_w0(rs, w) for c, w in p.support})


def normalize_poly(fs, p: DrinfeldPoly) -> DrinfeldPoly:
    """Reduce zeta powers mod m and re-merge (identity on canonical input)."""
    entries = {}
    for c, w in p.support:
        c = Coordinate(c.sym, c.zeta % fs.m)
        if c in entries:
            entries[c] = tuple(a + b for a, b in zip(entries[c], w))
        else:
            entries[c] = w
    return _build(entries)


def is_asym(fs, p: DrinfeldPoly) -> bool:
    """True iff no two coordinates share a symbol (distinct m-th powers)."""
    syms = [c.sym for c, _ in normalize_poly(fs, p).support]
    return len(syms) == len(set(syms))


def sigma_on_poly(fs, p: DrinfeldPoly) -> DrinfeldPoly:
    """The twist action: rotate coordinates by zeta, pull weights back along
    the diagram map.  fold() and the symmetrized character are invariant."""
    return _build(
        {
            c.shifted(1, fs.m): tuple(w[fs.sigma(i)] for i in range(len(w)))
            for c, w in normalize_poly(fs, p).support
        }
    )
