"""Order chromatic numbers of a few small families."""
from eog.core import cycle_pattern, path_pattern
from eog.orderchrom import find_avoiding_canonical, order_chromatic

families = {
    "path 1423": [path_pattern([1, 4, 2, 3])],
    "paths 1423 + 2314": [path_pattern([1, 4, 2, 3]), path_pattern([2, 3, 1, 4])],
    "path 14325": [path_pattern([1, 4, 3, 2, 5])],
    "path 123": [path_pattern([1, 2, 3])],
    "cycle 1234": [cycle_pattern([1, 2, 3, 4])],
}
for name, fam in families.items():
    print(f"{name:18s} {order_chromatic(fam, 3)}")

spec = find_avoiding_canonical(families["path 14325"], 2)
print("an avoiding order of K_(2x6):", spec.to_text())
