"""Exact arithmetic for root and weight lattices of the simple Lie types.

Weights live in fundamental-weight coordinates ("omega coordinates"): entry i
of a weight vector is lambda(h_i).  In these coordinates the j-th simple root
is the j-th column of the Cartan matrix, dominance of a weight is a sign
check, root-lattice membership is an exact integer linear solve, and the
quotient P/Q is read off a Smith normal form of the Cartan matrix.  No
floating point is used anywhere.

Node numbering follows Bourbaki: chains run 1..n left to right, the D_n fork
is {n-1, n}, the E-series branch node 2 hangs off node 4, B_n has its short
root at node n, C_n its long root at node n, F4 is long-long-short-short and
G2 has the short root at node 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidType, NonDominant

# A Weight is a plain tuple of ints (length == rank), hashable and cheap.


# ---------------------------------------------------------------------------
# Cartan labels
# ---------------------------------------------------------------------------

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}


@dataclass(frozen=True, order=True)
class CartanLabel:
    """A simple type such as A3 or E6: a family letter plus a rank."""

    family: str
    rank: int

    def __post_init__(self):
        fam, rank = self.family, self.rank
        if fam not in _MIN_RANK or rank < _MIN_RANK[fam]:
            raise InvalidType(f"not a simple type: {fam}{rank}")
        if fam == "E" and rank not in (6, 7, 8):
            raise InvalidType(f"E requires rank in 6..8, got {rank}")
        if fam == "F" and rank != 4:
            raise InvalidType("F requires rank 4")
        if fam == "G" and rank != 2:
            raise InvalidType("G requires rank 2")

    @staticmethod
    def parse(text):
        """Parse a label string like "A3" or "D10"."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidType(f"cannot parse Cartan label {text!r}")
        return CartanLabel(text[0].upper(), int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _cartan_matrix(label):
    """Cartan matrix as a list of rows; entry [i][j] is alpha_j(h_i)."""
    n = label.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def join(i, j, a=-1, b=-1):
        C[i][j] = a
        C[j][i] = b

    fam = label.family
    if fam in ("A", "B", "C"):
        for i in range(n - 2):
            join(i, i + 1)
        if n >= 2:
            if fam == "A":
                join(n - 2, n - 1)
            elif fam == "B":
                join(n - 2, n - 1, -1, -2)
            else:
                join(n - 2, n - 1, -2, -1)
    elif fam == "D":
        for i in range(n - 3):
            join(i, i + 1)
        join(n - 3, n - 2)
        join(n - 3, n - 1)
    elif fam == "E":
        join(0, 2)
        join(2, 3)
        join(3, 4)
        join(4, 5)
        join(1, 3)
        if n >= 7:
            join(5, 6)
        if n == 8:
            join(6, 7)
    elif fam == "F":
        join(0, 1)
        join(1, 2, -1, -2)
        join(2, 3)
    elif fam == "G":
        join(0, 1, -3, -1)
    return C


# ---------------------------------------------------------------------------
# Integer matrix helpers (rank <= 8 throughout; exact arithmetic only)
# ---------------------------------------------------------------------------

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _mat_vec(M, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in M)


def _det_bareiss(M):
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [list(r) for r in M]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def _adjugate(M):
    """Adjugate matrix, so that M . adj(M) = det(M) . I."""
    n = len(M)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[M[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
            adj[i][j] = (-1) ** (i + j) * _det_bareiss(minor)
    return adj


def smith_normal_form(M):
    """Smith normal form with transforms: returns (U, D, V) with U*M*V = D.

    U and V are unimodular integer matrices; D is diagonal with
    d_1 | d_2 | ... | d_r followed by zeros.  Straightforward textbook
    algorithm, adequate for the rank <= 8 matrices that arise here.
    """
    a = [list(r) for r in M]
    n, m = len(a), len(a[0])
    U, V = _identity(n), _identity(m)

    def row_op(i, j, c):  # row_i -= c * row_j
        a[i] = [x - c * y for x, y in zip(a[i], a[j])]
        U[i] = [x - c * y for x, y in zip(U[i], U[j])]

    def col_op(i, j, c):  # col_i -= c * col_j
        for r in a:
            r[i] -= c * r[j]
        for r in V:
            r[i] -= c * r[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(n, m):
        # move a minimal nonzero entry of the trailing block into the pivot
        piv, best = None, None
        for i in range(t, n):
            for j in range(t, m):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    piv, best = (i, j), v
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            # clear column t
            redo = False
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t]:  # remainder smaller than pivot: promote it
                        row_swap(t, i)
                        redo = True
            if redo:
                continue
            # clear row t
            for j in range(t + 1, m):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j]:
                        col_swap(t, j)
                        redo = True
            if redo:
                continue
            # pivot must divide the rest of the block
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, m):
                    if a[i][j] % a[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_op(t, bad, -1)  # pulls the offending row up; loop again
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, a, V


# ---------------------------------------------------------------------------
# Root systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FundGroupElt:
    """An element of P/Q in canonical residues (one per invariant factor >1)."""

    residues: tuple
    factors: tuple

    def __post_init__(self):
        assert len(self.residues) == len(self.factors)

    def __add__(self, other):
        assert self.factors == other.factors
        return FundGroupElt(
            tuple((a + b) % f for a, b, f in zip(self.residues, other.residues, self.factors)),
            self.factors,
        )

    def __sub__(self, other):
        assert self.factors == other.factors
        return FundGroupElt(
            tuple((a - b) % f for a, b, f in zip(self.residues, other.residues, self.factors)),
            self.factors,
        )

    def __neg__(self):
        return FundGroupElt(
            tuple((-a) % f for a, f in zip(self.residues, self.factors)), self.factors
        )

    def scale(self, k):
        return FundGroupElt(
            tuple((a * k) % f for a, f in zip(self.residues, self.factors)), self.factors
        )

    def is_zero(self):
        return all(a == 0 for a in self.residues)


class _PosRoot:
    """A positive root with every precomputed datum the algorithms need."""

    __slots__ = ("omega", "rc", "dw", "norm")

    def __init__(self, omega, rc, d):
        self.omega = omega  # omega-coordinates
        self.rc = rc        # root-basis coordinates (all >= 0)
        self.dw = tuple(d[j] * rc[j] for j in range(len(rc)))  # pairing vector
        # (beta, beta) = sum_j d_j c_j * omega_j
        self.norm = sum(self.dw[j] * omega[j] for j in range(len(omega)))


class RootSystem:
    """Immutable bundle of exact data for one simple type.

    Fields of interest: ``label``, ``rank``, ``cartan`` (tuple of rows),
    ``symmetrizers`` (d_i with D*C symmetric), ``invariant_factors`` (of
    P/Q, entries > 1 only), ``rho`` and ``theta`` (highest root).
    """

    def __init__(self, label):
        self.label = label
        self.rank = label.rank
        C = _cartan_matrix(label)
        self.cartan = tuple(tuple(r) for r in C)
        self.simple_roots = tuple(
            tuple(C[i][j] for i in range(self.rank)) for j in range(self.rank)
        )  # columns: alpha_j in omega-coordinates
        self.det = _det_bareiss(C)
        self._adj = _adjugate(C)  # C^{-1} = adj / det
        self.symmetrizers = self._compute_symmetrizers(C)
        self.rho = (1,) * self.rank

        U, D, _V = smith_normal_form(C)
        Uinv = _adjugate(U)
        du = _det_bareiss(U)
        assert du in (1, -1)
        if du == -1:
            Uinv = [[-x for x in row] for row in Uinv]
        positions = [j for j in range(self.rank) if D[j][j] > 1]
        self.invariant_factors = tuple(D[j][j] for j in positions)
        self._proj_rows = tuple(tuple(U[j]) for j in positions)
        self._lift_cols = tuple(
            tuple(Uinv[i][j] for i in range(self.rank)) for j in positions
        )
        self._pos_roots = None
        self._theta = None
        self._mw0_perm = self._minus_w0_permutation()
        self._decomp_cache = {}

    @property
    def fund_group(self):
        """Invariant factors of P/Q (entries > 1 only), e.g. (2, 2) for D4."""
        return self.invariant_factors

    # -- construction helpers ------------------------------------------------

    def _compute_symmetrizers(self, C):
        """Minimal positive integers d with d_i C_ij = d_j C_ji."""
        from fractions import Fraction
        from math import gcd, lcm

        n = self.rank
        d = [None] * n
        d[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and C[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * C[i][j] / C[j][i]
                    stack.append(j)
        assert all(x is not None for x in d), "Dynkin diagram must be connected"
        mult = lcm(*[x.denominator for x in d])
        ints = [int(x * mult) for x in d]
        g = gcd(*ints)
        return tuple(x // g for x in ints)

    def _minus_w0_permutation(self):
        """-w0 as a permutation of node indices (0-based)."""
        n, fam = self.rank, self.label.family
        perm = list(range(n))
        if fam == "A":
            perm = [n - 1 - i for i in range(n)]
        elif fam == "D" and n % 2 == 1:
            perm[n - 2], perm[n - 1] = n - 1, n - 2
        elif fam == "E" and n == 6:
            perm = [5, 1, 4, 3, 2, 0]
        return tuple(perm)

    # -- roots ----------------------------------------------------------------

    def positive_roots(self):
        """All positive roots, with root-basis coordinates and pairings."""
        if self._pos_roots is None:
            n = self.rank
            seen = {}
            frontier = []
            for j in range(n):
                rc = tuple(int(k == j) for k in range(n))
                seen[rc] = self.simple_roots[j]
                frontier.append((rc, self.simple_roots[j]))
            while frontier:
                rc, om = frontier.pop()
                for i in range(n):
                    # s_i in root coordinates: subtract om_i at slot i
                    c = om[i]
                    if c == 0:
                        continue
                    rc2 = list(rc)
                    rc2[i] -= c
                    rc2 = tuple(rc2)
                    if rc2 in seen:
                        continue
                    om2 = tuple(
                        om[k] - c * self.cartan[k][i] for k in range(n)
                    )
                    seen[rc2] = om2
                    frontier.append((rc2, om2))
            pos = [
                _PosRoot(om, rc, self.symmetrizers)
                for rc, om in sorted(seen.items())
                if all(x >= 0 for x in rc)
            ]
            self._pos_roots = tuple(pos)
        return self._pos_roots

    @property
    def theta(self):
        """Highest root, in omega-coordinates."""
        if self._theta is None:
            dominant = [
                b.omega for b in self.positive_roots() if all(x >= 0 for x in b.omega)
            ]
            for cand in dominant:
                if all(
                    dominance_geq(self, cand, other)
                    for other in dominant
                ):
                    self._theta = cand
                    break
            assert self._theta is not None
        return self._theta

    def __repr__(self):
        return f"RootSystem({self.label})"


_ROOT_SYSTEM_CACHE = {}


def build_root_system(label) -> RootSystem:
    """Construct (and cache) the full root-system bundle for a label."""
    if isinstance(label, str):
        label = CartanLabel.parse(label)
    if label not in _ROOT_SYSTEM_CACHE:
        _ROOT_SYSTEM_CACHE[label] = RootSystem(label)
    return _ROOT_SYSTEM_CACHE[label]


# ---------------------------------------------------------------------------
# Elementary predicates and maps
# ---------------------------------------------------------------------------

def check_weight(rs, w):
    if len(w) != rs.rank:
        raise InvalidType(
            f"weight length {len(w)} does not match rank {rs.rank} of {rs.label}"
        )


def is_dominant(rs, w):
    check_weight(rs, w)
    return all(x >= 0 for x in w)


def root_coords(rs, w):
    """Coordinates of w in the simple-root basis, or None if not in Q."""
    check_weight(rs, w)
    num = _mat_vec(rs._adj, w)
    if any(x % rs.det for x in num):
        return None
    return tuple(x // rs.det for x in num)


def in_root_lattice(rs, w) -> bool:
    """True iff w is an integer combination of simple roots."""
    return root_coords(rs, w) is not None


def dominance_geq(rs, lam, mu) -> bool:
    """True iff lam - mu is a *nonnegative* integer combination of simple roots."""
    diff = tuple(a - b for a, b in zip(lam, mu))
    rc = root_coords(rs, diff)
    return rc is not None and all(c >= 0 for c in rc)


def project_mod_Q(rs, lam) -> FundGroupElt:
    """Canonical image of lam in P/Q (residues along the SNF transform)."""
    check_weight(rs, lam)
    residues = tuple(
        sum(row[j] * lam[j] for j in range(rs.rank)) % f
        for row, f in zip(rs._proj_rows, rs.invariant_factors)
    )
    return FundGroupElt(residues, rs.invariant_factors)


def zero_coset(rs) -> FundGroupElt:
    return FundGroupElt((0,) * len(rs.invariant_factors), rs.invariant_factors)


def lift_coset(rs, x: FundGroupElt):
    """Some weight whose projection is x (inverse SNF transform)."""
    assert x.factors == rs.invariant_factors
    w = [0] * rs.rank
    for r, col in zip(x.residues, rs._lift_cols):
        for i in range(rs.rank):
            w[i] += r * col[i]
    return tuple(w)


def minus_w0(rs, lam):
    """-w0(lam): the duality involution on dominant weights."""
    if not is_dominant(rs, lam):
        raise NonDominant(f"minus_w0 needs a dominant weight, got {lam}")
    perm = rs._mw0_perm
    out = [0] * rs.rank
    for i in range(rs.rank):
        out[perm[i]] = lam[i]
    return tuple(out)


def reflect_to_dominant(rs, w):
    """Reflect w into the dominant chamber; returns (dominant, sign).

    sign is the determinant (-1)^{number of simple reflections used}; a weight
    on a chamber wall (some coordinate 0) still returns normally, callers that
    care about walls inspect the zeros themselves.
    """
    v = list(w)
    n = rs.rank
    C = rs.cartan
    sign = 1
    while True:
        for i in range(n):
            c = v[i]
            if c < 0:
                for k in range(n):
                    v[k] -= c * C[k][i]
                sign = -sign
                break
        else:
            return tuple(v), sign


# ---------------------------------------------------------------------------
# Dimensions and multiplicities
# ---------------------------------------------------------------------------

def weyl_dim(rs, lam) -> int:
    """dim V(lam) by the Weyl dimension formula, in exact arithmetic."""
    if not is_dominant(rs, lam):
        raise NonDominant(f"weyl_dim needs a dominant weight, got {lam}")
    num = 1
    den = 1
    lr = tuple(x + 1 for x in lam)
    for beta in rs.positive_roots():
        num *= sum(beta.dw[j] * lr[j] for j in range(rs.rank))
        den *= sum(beta.dw)
    assert num % den == 0
    return num // den


def dominant_weights_below(rs, lam):
    """All dominant mu with lam - mu in Q+; maps mu -> root coords of lam - mu.

    Uses the classical closure: every dominant mu < lam is reachable from a
    dominant weight above it by subtracting a single positive root (the
    staircase argument), so closing {lam} under "subtract a positive root,
    keep dominant results" is exhaustive.
    """
    if not is_dominant(rs, lam):
        raise NonDominant(f"dominant_weights_below needs dominant input, got {lam}")
    pos = rs.positive_roots()
    out = {lam: (0,) * rs.rank}
    queue = [lam]
    while queue:
        mu = queue.pop()
        rc = out[mu]
        for beta in pos:
            nu = tuple(a - b for a, b in zip(mu, beta.omega))
            if nu not in out and all(x >= 0 for x in nu):
                out[nu] = tuple(a + b for a, b in zip(rc, beta.rc))
                queue.append(nu)
    return out


def _freudenthal_python(rs, lam, doms, order):
    d = rs.symmetrizers
    n = rs.rank
    pos = rs.positive_roots()
    mult = {}
    domcache = {}
    for mu in order:
        rcvec = doms[mu]
        if not any(rcvec):
            mult[mu] = 1
            continue
        total = 0
        for beta in pos:
            kmax = min(
                rcvec[j] // beta.rc[j] for j in range(n) if beta.rc[j]
            )
            if kmax <= 0:
                continue
            pair = sum(beta.dw[j] * mu[j] for j in range(n))
            nu = mu
            for k in range(1, kmax + 1):
                nu = tuple(a + b for a, b in zip(nu, beta.omega))
                pair += beta.norm
                dom = domcache.get(nu)
                if dom is None:
                    dom = reflect_to_dominant(rs, nu)[0]
                    domcache[nu] = dom
                m = mult.get(dom, 0)
                if m == 0:
                    break  # root strings through a weight are unbroken
                total += pair * m
        den = sum(
            d[j] * rcvec[j] * (lam[j] + mu[j] + 2) for j in range(n)
        )
        q, r = divmod(2 * total, den)
        assert r == 0, "Freudenthal recursion must divide exactly"
        mult[mu] = q
    return mult


def weight_multiplicities(rs, lam):
    """Multiplicity of every dominant weight of V(lam) (Freudenthal).

    The full weight system is the union of Weyl orbits of the keys; orbit
    sizes come from :func:`weyl_orbit_size`.
    """
    if not is_dominant(rs, lam):
        raise NonDominant(f"weight_multiplicities needs dominant input, got {lam}")
    doms = dominant_weights_below(rs, lam)
    order = sorted(doms, key=lambda mu: (sum(doms[mu]), mu))
    kernel = _freudenthal_kernel()
    if kernel is not None and len(doms) > 64:
        return kernel(rs, lam, doms, order)
    return _freudenthal_python(rs, lam, doms, order)


_NUMBA_KERNEL = None
_NUMBA_FAILED = False


def _freudenthal_kernel():
    """Optional compiled Freudenthal core; None when numba is unavailable."""
    global _NUMBA_KERNEL, _NUMBA_FAILED
    if _NUMBA_KERNEL is not None or _NUMBA_FAILED:
        return _NUMBA_KERNEL
    try:
        from . import _freudenthal_numba
        _NUMBA_KERNEL = _freudenthal_numba.run
    except Exception:
        _NUMBA_FAILED = True
        _NUMBA_KERNEL = None
    return _NUMBA_KERNEL


# ---------------------------------------------------------------------------
# Weyl group bookkeeping (orders and orbit sizes only; no element enumeration)
# ---------------------------------------------------------------------------

def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


_EXCEPTIONAL_ORDER = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                      ("F", 4): 1152, ("G", 2): 12}


def weyl_group_order(label) -> int:
    if isinstance(label, str):
        label = CartanLabel.parse(label)
    fam, n = label.family, label.rank
    if fam == "A":
        return _factorial(n + 1)
    if fam in ("B", "C"):
        return (1 << n) * _factorial(n)
    if fam == "D":
        return (1 << (n - 1)) * _factorial(n)
    return _EXCEPTIONAL_ORDER[(fam, n)]


def _classify_component(rs, nodes):
    """Simple type (family, rank) of a connected Dynkin subdiagram."""
    C = rs.cartan
    k = len(nodes)
    if k == 1:
        return ("A", 1)
    pairs = [(i, j) for i, j in combinations(nodes, 2) if C[i][j]]
    maxmult = max(C[i][j] * C[j][i] for i, j in pairs)
    degree = {i: sum(1 for j in nodes if j != i and C[i][j]) for i in nodes}
    if maxmult == 3:
        return ("G", 2)
    if maxmult == 2:
        if k == 4:
            i, j = next((i, j) for i, j in pairs if C[i][j] * C[j][i] == 2)
            if degree[i] == 2 and degree[j] == 2:
                return ("F", 4)
        return ("B", k)  # B_k and C_k share a Weyl group order
    # simply laced
    if max(degree.values()) <= 2:
        return ("A", k)
    branch = next(i for i in nodes if degree[i] == 3)
    arms = []
    for start in (j for j in nodes if j != branch and C[branch][j]):
        length = 1
        prev, cur = branch, start
        while True:
            nxt = [j for j in nodes if j != prev and j != cur and C[cur][j]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", k)
    return ("E", k)


def stabilizer_order(rs, lam) -> int:
    """Order of the stabilizer of a dominant weight in the Weyl group."""
    if not is_dominant(rs, lam):
        raise NonDominant(f"stabilizer_order needs dominant input, got {lam}")
    zero = [i for i in range(rs.rank) if lam[i] == 0]
    if not zero:
        return 1
    remaining = set(zero)
    order = 1
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        stack = [seed]
        while stack:
            i = stack.pop()
            for j in list(remaining):
                if rs.cartan[i][j]:
                    remaining.remove(j)
                    comp.add(j)
                    stack.append(j)
        fam, k = _classify_component(rs, sorted(comp))
        if fam == "A":
            order *= _factorial(k + 1)
        elif fam in ("B", "C"):
            order *= (1 << k) * _factorial(k)
        elif fam == "D":
            order *= (1 << (k - 1)) * _factorial(k)
        else:
            order *= _EXCEPTIONAL_ORDER[(fam, k)]
    return order


def weyl_orbit_size(rs, lam) -> int:
    return weyl_group_order(rs.label) // stabilizer_order(rs, lam)


def all_roots(rs):
    """The full set of roots R, in omega-coordinates."""
    pos = rs.positive_roots()
    out = set()
    for beta in pos:
        out.add(beta.omega)
        out.add(tuple(-x for x in beta.omega))
    return frozenset(out)
