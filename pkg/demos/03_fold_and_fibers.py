# Folding highest-weight data for loop algebras: a polynomial-type
# object (dominant weights attached to scaled spectral points) folds
# onto the twisted diagram, and each folded object has a finite,
# enumerable fiber of unfolded preimages.

from loopblocks import (Coordinate, build_folding, poly_from_pairs, multiply,
                        fold, fiber, canonical_preimage)


def pi(w, sym, zeta, m):
    return poly_from_pairs([(w, Coordinate(sym, zeta))], m=m)


fs = build_folding("A3", 2)

p = pi((1, 0, 0), "a", 0, 2)
print("ambient object:", p)
tp = fold(fs, p)
print("folds to:      ", tp)

print("\nfull fiber over that image:")
for q in sorted(fiber(fs, tp), key=lambda q: q.support):
    print("  ", q)

# Products fold multiplicatively, so fibers of composite objects are
# assembled from the single-symbol pieces.
q = multiply(pi((0, 1, 0), "a", 0, 2), pi((1, 0, 0), "b", 0, 2))
tq = fold(fs, q)
members = fiber(fs, tq)
print(f"\ntwo-symbol example: fiber has {len(members)} members")
for r in sorted(members, key=lambda r: r.support):
    print("  ", r)

# Every folded object has a canonical preimage supported on slot 0.
print("\ncanonical preimage:", canonical_preimage(fs, tq))

# The order-3 fold of D4 has three-element fibers for the vector weight.
fs3 = build_folding("D4", 3)
p3 = pi((1, 0, 0, 0), "a", 0, 3)
print(f"\nD4 order-3 fiber of fold({p3}):")
for r in sorted(fiber(fs3, fold(fs3, p3)), key=lambda r: r.support):
    print("  ", r)
