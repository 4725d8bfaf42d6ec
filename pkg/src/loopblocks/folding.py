"""Diagram automorphisms of simply-laced types and the folded root data.

A folding is a pair (ambient simply-laced type, diagram automorphism sigma of
order m).  The supported pairs and their folded types:

    A_{2n-1}, m=2  ->  C_n          (nodes i and 2n-i swapped)
    A_{2n},   m=2  ->  B_n          (middle pair n, n+1 swapped; special
                                     arithmetic at the glued middle node)
    D_n,      m=2  ->  B_{n-1}      (the two fork nodes swapped; n >= 4)
    D_4,      m=3  ->  G_2          (fork nodes cycled 1 -> 3 -> 4 -> 1)
    E_6,      m=2  ->  F_4          (1 <-> 6, 3 <-> 5)

Everything else raises NoSuchAutomorphism.  Orbit representatives are the
smallest node of each sigma-orbit (Bourbaki numbers).  The folded Cartan
matrix is assembled from orbit row sums; for the glued middle node of A_{2n}
the coroot is doubled, which is what makes its row sum come out to a valid
Cartan matrix row and forces the evenness constraint on middle coordinates
of symmetric weights.

Weights of the folded (orbit) system are tuples indexed by orbit
representatives, in the order of ``orbit_reps``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (FixedNodeSupport, InvalidType, NoSuchAutomorphism,
                     NonDominant, ParityViolation)
from .rootsys import CartanLabel, build_root_system, check_weight, project_mod_Q


@dataclass(frozen=True)
class FoldedSystem:
    """A simply-laced root system together with a diagram automorphism.

    ambient        RootSystem being folded
    m              order of the automorphism (2 or 3)
    perm           sigma as a permutation of 0-based node indices
    orbit_reps     smallest node of each orbit, ascending (0-based)
    orbits         tuple of orbits, each a tuple of 0-based nodes, aligned
                   with orbit_reps
    folded         RootSystem of the folded type
    is_A2n         True for the A_{2n} fold, whose glued middle node carries
                   the doubled coroot
    """

    ambient: object
    m: int
    perm: tuple
    orbit_reps: tuple
    orbits: tuple
    folded: object
    is_A2n: bool

    def sigma(self, i, power=1):
        """Image of 0-based node i under sigma^power (power may be negative)."""
        for _ in range(power % self.m):
            i = self.perm[i]
        return i

    def rep_of(self, i):
        """Orbit representative of 0-based node i."""
        j = i
        for _ in range(self.m):
            j = min(j, self.perm[j])
            i = self.perm[i]
        return j

    @property
    def middle(self):
        """0-based index (into orbit_reps) of the glued A_{2n} middle node."""
        assert self.is_A2n
        return len(self.orbit_reps) - 1

    def __repr__(self):
        return (f"FoldedSystem({self.ambient.label} / m={self.m} "
                f"-> {self.folded.label})")


def _automorphism(label, m):
    """sigma as a 0-based node permutation, or None if unsupported."""
    fam, n = label.family, label.rank
    if m == 2:
        if fam == "A" and n >= 2:
            return tuple(n - 1 - i for i in range(n))
        if fam == "D" and n >= 4:
            perm = list(range(n))
            perm[n - 2], perm[n - 1] = n - 1, n - 2
            return tuple(perm)
        if fam == "E" and n == 6:
            return (5, 1, 4, 3, 2, 0)
    if m == 3 and fam == "D" and n == 4:
        # 1 -> 3 -> 4 -> 1 in Bourbaki numbers, node 2 fixed
        return (2, 1, 3, 0)
    return None


def _folded_label(label, m):
    fam, n = label.family, label.rank
    if m == 2 and fam == "A":
        if n == 2:  # the rank-1 fold; B1 and A1 coincide
            return CartanLabel("A", 1)
        return CartanLabel("C", (n + 1) // 2) if n % 2 else CartanLabel("B", n // 2)
    if m == 2 and fam == "D":
        return CartanLabel("B", n - 1)
    if m == 2 and fam == "E":
        return CartanLabel("F", 4)
    return CartanLabel("G", 2)


def build_folding(label, m) -> FoldedSystem:
    """Construct the folding of the given simply-laced type by sigma of order m."""
    if isinstance(label, str):
        label = CartanLabel.parse(label)
    if m not in (2, 3):
        raise NoSuchAutomorphism(f"automorphism order must be 2 or 3, got {m}")
    perm = _automorphism(label, m)
    if perm is None:
        raise NoSuchAutomorphism(f"{label} has no diagram automorphism of order {m}")
    amb = build_root_system(label)
    n = label.rank

    orbits = []
    seen = set()
    for i in range(n):
        if i in seen:
            continue
        orb = [i]
        j = perm[i]
        while j != i:
            orb.append(j)
            j = perm[j]
        seen.update(orb)
        orbits.append(tuple(sorted(orb)))
    orbits.sort()
    reps = tuple(o[0] for o in orbits)

    is_A2n = label.family == "A" and label.rank % 2 == 0
    fl = _folded_label(label, m)
    folded = build_root_system(fl)

    # sanity: orbit row sums reproduce the folded Cartan matrix (the glued
    # A_{2n} middle pair contributes a doubled coroot)
    k = len(reps)
    check = [[0] * k for _ in range(k)]
    for a, i in enumerate(reps):
        scale = 2 if (is_A2n and len(orbits[a]) == 2 and perm[i] != i and
                      abs(i - perm[i]) == 1) else 1
        for b, _ in enumerate(reps):
            s = 0
            for u in orbits[a]:
                s += amb.cartan[u][reps[b]]
            check[a][b] = scale * s
    expected = _expected_folded_cartan(fl, label, m)
    assert check == expected, (label, m, check, expected)

    return FoldedSystem(amb, m, perm, reps, tuple(orbits), folded, is_A2n)


def _expected_folded_cartan(fl, label, m):
    """Folded Cartan matrix in orbit-representative order."""
    from .rootsys import _cartan_matrix
    C = _cartan_matrix(fl)
    if label.family == "E":
        # orbit reps 1,2,3,4 (Bourbaki) land on F4 nodes 4,1,3,2
        order = [3, 0, 2, 1]  # 0-based F4 node for each rep position
        return [[C[a][b] for b in order] for a in order]
    return [list(r) for r in C]


# ---------------------------------------------------------------------------
# Weights of the folded system vs. weights of the ambient system
# ---------------------------------------------------------------------------

def check_folded_weight(fs, lam_s):
    if len(lam_s) != len(fs.orbit_reps):
        raise InvalidType(
            f"folded weight length {len(lam_s)} does not match "
            f"{len(fs.orbit_reps)} orbits of {fs.ambient.label}"
        )
    if not all(isinstance(c, int) for c in lam_s):
        raise InvalidType(f"folded weight entries must be integers, got {lam_s}")


def in_P_sigma_plus(fs, lam_s) -> bool:
    """Dominance for folded weights; the glued middle coordinate must be even."""
    check_folded_weight(fs, lam_s)
    if any(x < 0 for x in lam_s):
        return False
    if fs.is_A2n and lam_s[fs.middle] % 2:
        return False
    return True


def lambda_component(fs, lam, eps):
    """Component of an ambient dominant weight at twist index eps.

    For a sigma-orbit {i, sigma(i), ...} the ambient coordinates are
    redistributed over twist indices: the component at eps reads coordinate
    sigma^eps(i) at representative i.  Fixed nodes contribute only at eps=0.
    The glued A_{2n} middle orbit contributes its doubled coordinate at every
    twist index.
    """
    check_weight(fs.ambient, lam)
    if any(x < 0 for x in lam):
        raise NonDominant(f"lambda_component needs a dominant weight, got {lam}")
    eps %= fs.m
    out = []
    for a, i in enumerate(fs.orbit_reps):
        if len(fs.orbits[a]) == 1:
            out.append(lam[i] if eps == 0 else 0)
        else:
            v = lam[fs.sigma(i, eps)]
            if fs.is_A2n and a == fs.middle:
                v *= 2
            out.append(v)
    return tuple(out)


def embed(fs, lam_s, eps):
    """Ambient dominant weight placing folded coordinates at twist index eps.

    Inverse to :func:`lambda_component` on single-component weights: node
    sigma^eps(i) receives lam_s(i) for each representative i.  Fixed nodes
    only carry weight at eps = 0; the glued middle coordinate is halved
    (hence must be even).
    """
    check_folded_weight(fs, lam_s)
    if any(x < 0 for x in lam_s):
        raise NonDominant(f"embed needs a dominant folded weight, got {lam_s}")
    eps %= fs.m
    out = [0] * fs.ambient.rank
    for a, i in enumerate(fs.orbit_reps):
        v = lam_s[a]
        if len(fs.orbits[a]) == 1:
            if eps != 0:
                if v != 0:
                    raise FixedNodeSupport(
                        f"fixed node {i + 1} cannot carry weight at twist index {eps}"
                    )
                continue
        if fs.is_A2n and a == fs.middle:
            if v % 2:
                raise ParityViolation(
                    f"glued middle coordinate must be even, got {v}"
                )
            v //= 2
        out[fs.sigma(i, eps)] = v
    return tuple(out)


def sigma_on_weight(fs, lam):
    """Push an ambient weight forward along sigma: new[sigma(i)] = old[i]."""
    check_weight(fs.ambient, lam)
    out = [0] * fs.ambient.rank
    for i in range(fs.ambient.rank):
        out[fs.perm[i]] = lam[i]
    return tuple(out)


def sigma_on_coset(fs, x):
    """Induced action of sigma on P/Q of the ambient system."""
    from .rootsys import lift_coset
    assert x.factors == fs.ambient.invariant_factors
    return project_mod_Q(fs.ambient, sigma_on_weight(fs, lift_coset(fs.ambient, x)))
