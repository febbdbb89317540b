"""Exact lex(n, H) values with witnesses, compared to the closed forms."""
from eog.containment import avoids
from eog.core import path_pattern
from eog.formats import serialize_eog
from eog.search import Budget, lex_exact

for name, perm, formula in [("132", [1, 3, 2], lambda n: 3 * (n - 1) // 2),
                            ("123", [1, 2, 3], None)]:
    h = path_pattern(perm)
    for n in range(2, 8):
        res = lex_exact(n, [h], Budget(seconds=30))
        note = f" (closed form {formula(n)})" if formula else ""
        print(f"lex({n}, path {name}) = {res.value} [{res.status}]{note}")
    assert avoids(res.witness, h)

print("witness for n=7, path 123:")
print(serialize_eog(res.witness), end="")
