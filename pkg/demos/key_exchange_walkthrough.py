"""Walk through one conjugacy key exchange on each platform.

Run:  python3 demos/key_exchange_walkthrough.py
"""

from conjkex import heisenberg_group, metacyclic_group, run_demo, tree_group

print("=" * 70)
print("Conjugacy key exchange: shared base w, private conjugators x and y")
print("drawn from a commuting subgroup; both sides conjugate the peer's")
print("public value and land on the same element of the orbit of w.")
print("=" * 70)

platforms = [
    ("metacyclic p=1009, m=2, n=2", metacyclic_group(1009, 2, 2).a(1)),
    ("heisenberg p=7, m=1, n=1", heisenberg_group(7, 1, 1).a()),
    ("tree depth k=3", tree_group(3).default_base()),
]

for label, base in platforms:
    print(f"\n--- {label} ---")
    print(f"base element w: {base.canonical()}")
    result = run_demo(base, seed_alice=2024, seed_bob=4048)
    for line in result.transcript.to_text().splitlines():
        print(f"  wire> {line}")
    print(f"alice derives: {result.key_alice.decode()}")
    print(f"bob derives:   {result.key_bob.decode()}")
    print(f"keys match:    {result.agreed}")
