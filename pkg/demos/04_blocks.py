# Block classification: each folded object gets a label (folded type +
# symmetrized spectral character), constant on fibers, additive under
# products.  Two objects lie in the same block exactly when labels match.

from loopblocks import (Coordinate, build_folding, poly_from_pairs, multiply,
                        fold, fiber, char_of, block_label, same_block,
                        add_labels)
from loopblocks.spectral import symmetrize


def pi(w, sym, zeta, m):
    return poly_from_pairs([(w, Coordinate(sym, zeta))], m=m)


fs = build_folding("A3", 2)
rs = fs.ambient

p = pi((1, 0, 0), "a", 0, 2)
print("character of", p)
for coord, coset in char_of(rs, p).support:
    print(f"  {coord}: coset {list(coset.residues)}")

# All fiber members share one symmetrized character.
tp = fold(fs, p)
labels = {symmetrize(fs, char_of(rs, q)) for q in fiber(fs, tp)}
print("\ndistinct symmetrized characters across the fiber:", len(labels))

# Worked block test: (1,0,0) at a and (2,0,1) at a carry the same
# spectral data modulo the twist; (0,1,0) at a does not.
t1 = fold(fs, pi((1, 0, 0), "a", 0, 2))
t2 = fold(fs, pi((2, 0, 1), "a", 0, 2))
t3 = fold(fs, pi((0, 1, 0), "a", 0, 2))
print("\nsame block, (1,0,0)@a vs (2,0,1)@a:", same_block(fs, t1, t2))
print("same block, (1,0,0)@a vs (0,1,0)@a:", same_block(fs, t1, t3))

lab = block_label(fs, t1)
print("\nblock label of the first object:")
print("  folded type:", lab.folded)
for coord, coset in lab.canon.support:
    print(f"  {coord}: coset {list(coset.residues)}")

# Labels add when the underlying objects multiply.
t12 = fold(fs, multiply(pi((1, 0, 0), "a", 0, 2), pi((2, 0, 1), "a", 0, 2)))
print("\nlabel of product == sum of labels:",
      block_label(fs, t12) == add_labels(block_label(fs, t1),
                                         block_label(fs, t2)))
