"""Word encodings of star forests and the 0-1 matrix view of bipartite patterns."""
from eog.containment import avoids
from eog.core import path_pattern
from eog.dsword import ds_bruteforce, ds_lower_forest, format_word, w_of, w_prime_of
from eog.matrix import ZeroOnePattern, contains_pattern, graph_from_matrix_rowcol, patterns_for

f = ds_lower_forest()
print("w(F) =", format_word(w_of(f)), "  |w'(F)| =", len(w_prime_of(f)))
for n in range(1, 5):
    print(f"longest 2-regular word on {n} letters avoiding abab: {ds_bruteforce(n, 'abab')}")

p = path_pattern([1, 4, 3, 2])
(mat,) = patterns_for(p)
print("matrix of path 1432:")
print(mat)

host = ZeroOnePattern.from_rows(["11100", "10010", "10001", "01000", "00100"])
hit = contains_pattern(host, mat)
print("host contains it:", hit, "  graph avoids the path:", avoids(graph_from_matrix_rowcol(host).graph, p))
