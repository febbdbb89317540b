"""Pattern containment in canonical cliques, and the canonical orders of K_(3x3)."""
from eog.canonical import CLIQUE_KINDS, canonical_clique, count_canonical
from eog.containment import contains
from eog.core import path_pattern

pattern = path_pattern([1, 4, 2, 3])
for kind in CLIQUE_KINDS:
    emb = contains(canonical_clique(5, kind), pattern)
    where = f"edge ranks {emb.edge_map}" if emb else "avoided"
    print(f"{kind:8s} K5 vs path 1423: {where}")

counts = count_canonical(3, 3)
print(f"K_(3x3): {counts['total']} canonical orders "
      f"({counts['non_interleaved']} plain, {counts['interleaved']} interleaved), "
      f"{counts['iso']} up to isomorphism")
