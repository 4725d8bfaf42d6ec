# Linkage: two dominant weights are linked when one can walk between
# them through nonzero adjoint-tensor hom spaces.  The walk exists iff
# the difference lies in the root lattice, and every returned chain
# carries a certificate that is re-checked step by step.

from loopblocks import (NotInRootLattice, adjoint_tensor_decompose,
                        build_root_system, hom_nonzero, in_root_lattice,
                        linkage_chain, verify_chain, weyl_dim)

rs = build_root_system("A2")

# Tensoring with the adjoint: the classical 8 x 8 table.
print("adjoint x adjoint in A2:")
for nu, k in sorted(adjoint_tensor_decompose(rs, (1, 1)).items()):
    print(f"  {nu}: multiplicity {k}  (dim {weyl_dim(rs, nu)})")

# Hom spaces drive single linkage steps.
print("\nhom_nonzero (1,1) -> (3,0):", hom_nonzero(rs, (1, 1), (3, 0)))
print("hom_nonzero (1,0) -> (0,1):", hom_nonzero(rs, (1, 0), (0, 1)))

# A verified chain between weights in the same root-lattice coset.
c = linkage_chain(rs, (3, 0), (0, 0))
print("\nchain from (0,0) to (3,0):")
for step, d in zip(c.steps, [""] + list(c.directions)):
    print(f"  {d:>4} {step}")
print("verify_chain:", verify_chain(rs, c))

# Different coset: the honest refusal.
print("\n(1,0) vs (0,1) in the same coset:",
      in_root_lattice(rs, (1, -1)))
try:
    linkage_chain(rs, (1, 0), (0, 1))
except NotInRootLattice as exc:
    print("linkage_chain refuses:", exc)

# Works in folded target types too.
rs_g2 = build_root_system("G2")
c2 = linkage_chain(rs_g2, (1, 1), (0, 0))
print(f"\nG2 chain (0,0) -> (1,1): {len(c2.steps)} steps,",
      "verified" if verify_chain(rs_g2, c2) else "BROKEN")
