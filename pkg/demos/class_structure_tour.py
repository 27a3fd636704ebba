"""Conjugacy class structure of the two p-group platforms.

Shows the class-size histogram (only sizes 1 and p ever appear), the
center order p^(m+n-2) against the key-space the construction advertises,
and the orbit a key actually lives in.

Run:  python3 demos/class_structure_tour.py
"""

from conjkex import heisenberg_group, metacyclic_group, orbit_stats

print("class equation: |G| = sum(size * count); central elements give")
print("singleton classes, every other class has exactly p elements\n")

for group in (
    metacyclic_group(3, 2, 1),
    metacyclic_group(5, 2, 1),
    metacyclic_group(3, 2, 2),
    heisenberg_group(3, 1, 1),
    heisenberg_group(5, 1, 1),
):
    histogram = orbit_stats(group)
    total = sum(size * count for size, count in histogram.items())
    print(f"{group!r}: |G|={group.order}")
    print(f"  class sizes {dict(sorted(histogram.items()))}  (sum {total})")
    print(f"  center order: {group.center_order()}")
    base = group.default_base()
    orbit = group.conjugacy_class(base)
    print(f"  orbit of the default base {base.canonical()}: {len(orbit)} elements")
    print(f"  -> a derived key takes one of {len(orbit)} values, even though")
    print(f"     the center-sized 'key space' has {group.center_order()} elements\n")
