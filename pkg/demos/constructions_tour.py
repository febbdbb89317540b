"""The explicit constructions and the avoidance each one promises."""
from eog.constructions import (d_graph, disjoint_k4, explower_order, k9_labeling, recursive_g,
                               recursive_g_prime, rightright, star_plus_matching)
from eog.containment import avoids, right_avoids
from eog.core import path_pattern, path_rooted
from eog.orderchrom import dialemma_check

checks = [
    ("star + matching, n=9", star_plus_matching(9), path_pattern([1, 3, 2])),
    ("3 disjoint K4", disjoint_k4(3), path_pattern([1, 2, 3])),
    ("recursive G_5", recursive_g(5), path_pattern([1, 3, 4, 2])),
    ("recursive G'_5", recursive_g_prime(5), path_pattern([2, 1, 4, 3])),
]
for name, g, h in checks:
    print(f"{name:22s} n={g.n:3d} m={g.m:3d} avoids={avoids(g, h)}")

rr = rightright(5)
print(f"rightright(5): m={rr.graph.m}, right-avoids 132: {right_avoids(rr, path_rooted([1, 3, 2]))}")
print("K9 certificate for D4:", dialemma_check(k9_labeling(), 4))
print("K8 certificate for D5:", dialemma_check(explower_order(5), 5))
print("D4 edges:", d_graph(4).edges)
