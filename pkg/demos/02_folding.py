# Diagram foldings: an order-m symmetry of a simply-laced diagram
# produces a smaller non-simply-laced diagram whose nodes are the
# symmetry orbits.  Weights move back and forth along the fold.

from loopblocks import build_folding, lambda_component, embed

for ambient, m in (("A3", 2), ("A4", 2), ("A5", 2), ("D4", 2),
                   ("D4", 3), ("D5", 2), ("E6", 2)):
    fs = build_folding(ambient, m)
    orbs = " ".join("{" + ",".join(str(i + 1) for i in o) + "}"
                    for o in fs.orbits)
    print(f"{ambient} / order {m}  ->  {fs.folded.label}   orbits: {orbs}")

# An ambient dominant weight decomposes into one folded component per
# slot, and embedding puts the components back where they came from.
fs = build_folding("D4", 3)
lam = (1, 0, 2, 0)
comps = [lambda_component(fs, lam, eps) for eps in range(fs.m)]
print(f"\nD4 weight {lam} has {fs.folded.label} slot components {comps}")
rebuilt = tuple(
    sum(embed(fs, comps[eps], eps)[i] for eps in range(fs.m))
    for i in range(fs.ambient.rank)
)
print("re-embedding and summing the slots recovers it:", rebuilt)

# Embedding a folded weight in a single nonzero slot gives the
# asymmetric representative used for canonical preimages.  Only
# weights supported away from fixed nodes may occupy such a slot.
for eps in range(fs.m):
    print(f"embed (1,0) in slot {eps}:", embed(fs, (1, 0), eps))

# A4 with the order-2 flip glues the two middle nodes: a symmetric
# ambient weight must be even there, and the embedding splits the
# folded coordinate across the pair.
fs = build_folding("A4", 2)
print("\nA4 glued-node embedding of (1, 2):")
for eps in range(2):
    print(f"  slot {eps}:", embed(fs, (1, 2), eps))
