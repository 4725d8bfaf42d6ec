# Root-system basics: Cartan matrices, weight lattices, and the
# finite abelian quotient P/Q that later indexes spectral data.

from loopblocks import (build_root_system, project_mod_Q, in_root_lattice,
                        weyl_dim, weight_multiplicities, weyl_orbit_size)

for label in ("A2", "A3", "D4", "E6"):
    rs = build_root_system(label)
    print(f"{label}: rank {rs.rank}, {len(rs.positive_roots())} positive"
          f" roots, P/Q invariant factors {rs.invariant_factors}")

# The highest root theta, in fundamental-weight coordinates.
rs = build_root_system("D4")
print("\nD4 highest root:", rs.theta)

# Coset of a weight modulo the root lattice.  Roots land in the zero coset.
print("coset of (1,0,0,0):", list(project_mod_Q(rs, (1, 0, 0, 0)).residues))
print("coset of theta:    ", list(project_mod_Q(rs, rs.theta).residues))
print("theta in Q:", in_root_lattice(rs, rs.theta))
print("omega1 in Q:", in_root_lattice(rs, (1, 0, 0, 0)))

# Weyl dimension formula and Freudenthal weight multiplicities agree:
# summing orbit sizes over dominant weights recovers the dimension.
lam = (1, 0, 0, 1)
mults = weight_multiplicities(rs, lam)
total = sum(k * weyl_orbit_size(rs, mu) for mu, k in mults.items())
print(f"\ndim V({lam}) = {weyl_dim(rs, lam)}")
print(f"sum over {len(mults)} dominant weights with multiplicity = {total}")
