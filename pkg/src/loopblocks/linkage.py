"""Adjoint tensor decomposition and explicit linkage chains between weights.

Two dominant weights are linked when one indexes a summand of the adjoint
representation tensored with the module of the other; chains of such links
certify that the corresponding simple modules interact homologically.  The
decomposition itself is computed by the reflection method over the adjoint
weight system (all roots, plus the zero weight with multiplicity equal to
the rank): each shifted weight is reflected into the dominant chamber with a
sign, wall hits are discarded, and the signed counts of the survivors are
the multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from .errors import InvalidType, NonDominant, NotFoundWithinBound, NotInRootLattice
from .rootsys import (all_roots, in_root_lattice, is_dominant, reflect_to_dominant,
                      root_coords, weyl_dim)


@dataclass(frozen=True)
class Chain:
    """A linkage certificate: dominant weights plus per-link Hom orientation.

    ``steps`` is the visited weight sequence (first entry the source, last
    the target); ``directions`` holds one flag per link, "up" when the later
    weight indexes a summand of adjoint-tensor of the earlier one, "down"
    for the reverse orientation.
    """

    steps: tuple
    directions: tuple

    def __len__(self):
        return len(self.steps)


def adjoint_tensor_decompose(rs, mu):
    """Decompose (adjoint module) tensor V(mu) into irreducibles.

    Parameters
    ----------
    rs : RootSystem
    mu : Weight
        Dominant highest weight.

    Returns
    -------
    dict
        Maps each dominant weight lam to the (positive) multiplicity of
        V(lam) in the tensor product.

    Notes
    -----
    Reflection method: for every adjoint weight w of multiplicity k, reflect
    mu + rho + w into the dominant chamber tracking the sign of the Weyl
    element used; points landing on a chamber wall contribute nothing, the
    rest contribute sign * k to the summand at (reflected point) - rho.
    """
    if not is_dominant(rs, mu):
        raise NonDominant(f"adjoint_tensor_decompose needs dominant input, got {mu}")
    mu = tuple(mu)
    cached = rs._decomp_cache.get(mu)
    if cached is None:
        shifted = tuple(x + 1 for x in mu)
        acc = {}
        weights = [(beta, 1) for beta in all_roots(rs)]
        weights.append(((0,) * rs.rank, rs.rank))
        for w, k in weights:
            x = tuple(a + b for a, b in zip(shifted, w))
            dom, sign = reflect_to_dominant(rs, x)
            if 0 in dom:
                continue
            tgt = tuple(d - 1 for d in dom)
            acc[tgt] = acc.get(tgt, 0) + sign * k
        cached = {t: c for t, c in sorted(acc.items()) if c}
        assert all(c > 0 for c in cached.values()), (mu, cached)
        rs._decomp_cache[mu] = cached
    return dict(cached)


def hom_nonzero(rs, mu, lam) -> bool:
    """Whether V(lam) is a summand of (adjoint) tensor V(mu).

    The relation is symmetric in (mu, lam) because the adjoint module is
    self-dual; both orientations are exposed for chain certificates.
    """
    if not is_dominant(rs, lam):
        raise NonDominant(f"hom_nonzero needs dominant weights, got {lam}")
    return tuple(lam) in adjoint_tensor_decompose(rs, mu)


def _neighbors(rs, v, box):
    out = []
    for u in adjoint_tensor_decompose(rs, v):
        if u != v and all(0 <= x <= b for x, b in zip(u, box)):
            out.append(u)
    return out


def linkage_chain(rs, lam, mu, bound=None) -> Chain:
    """Shortest chain of linked dominant weights from mu to lam.

    Parameters
    ----------
    rs : RootSystem
    lam, mu : Weight
        Dominant endpoints.
    bound : int, optional
        Slack added to the componentwise maximum of the endpoints to form
        the search box.  Defaults to 2 plus the height of lam - mu in the
        root basis (absolute coefficient sum).

    Returns
    -------
    Chain
        steps[0] == mu, steps[-1] == lam, every link Hom-nonvanishing.

    Raises
    ------
    NotInRootLattice
        If lam - mu is not in the root lattice; no chain can exist.
    NotFoundWithinBound
        If no chain exists inside the search box.  This is a statement
        about the box, not about existence at large.
    """
    if not is_dominant(rs, lam):
        raise NonDominant(f"linkage_chain needs dominant weights, got {lam}")
    if not is_dominant(rs, mu):
        raise NonDominant(f"linkage_chain needs dominant weights, got {mu}")
    lam, mu = tuple(lam), tuple(mu)
    rc = root_coords(rs, tuple(a - b for a, b in zip(lam, mu)))
    if rc is None:
        raise NotInRootLattice(
            f"{lam} - {mu} is not in the root lattice; the weights are unlinked"
        )
    if bound is not None and bound < 0:
        raise InvalidType(f"bound must be nonnegative, got {bound}")
    slack = bound if bound is not None else 2 + sum(abs(c) for c in rc)
    box = tuple(max(a, b) + slack for a, b in zip(lam, mu))

    dist = {lam: 0}
    queue = deque([lam])
    while queue:
        v = queue.popleft()
        if v == mu:
            break
        for u in _neighbors(rs, v, box):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    if mu not in dist:
        raise NotFoundWithinBound(
            f"no chain from {mu} to {lam} within search box {box}"
        )

    steps = [mu]
    cur, d = mu, dist[mu]
    while cur != lam:
        cur = min(u for u in _neighbors(rs, cur, box) if dist.get(u) == d - 1)
        steps.append(cur)
        d -= 1
    directions = tuple(
        "up" if hom_nonzero(rs, steps[i], steps[i + 1]) else "down"
        for i in range(len(steps) - 1)
    )
    return Chain(tuple(steps), directions)


def verify_chain(rs, c: Chain) -> bool:
    """Re-check a chain certificate; malformed input returns False.

    Every step must be a dominant weight of the right rank, the endpoint
    difference must lie in the root lattice, and each link must satisfy the
    Hom-nonvanishing test in its recorded orientation.
    """
    try:
        steps = [tuple(int(x) for x in s) for s in c.steps]
        directions = list(c.directions)
    except (TypeError, ValueError):
        return False
    if not steps or len(directions) != len(steps) - 1:
        return False
    for s in steps:
        if len(s) != rs.rank or any(x < 0 for x in s):
            return False
    if not in_root_lattice(rs, tuple(a - b for a, b in zip(steps[-1], steps[0]))):
        return False
    for i, d in enumerate(directions):
        if d == "up":
            src, tgt = steps[i], steps[i + 1]
        elif d == "down":
            src, tgt = steps[i + 1], steps[i]
        else:
            return False
        if not hom_nonzero(rs, src, tgt):
            return False
    return True
