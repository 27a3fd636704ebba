"""Conjugacy-based key exchange laboratory.

Three exact-arithmetic platform groups (a metacyclic and a non-metacyclic
minimal non-abelian p-group, and Sylow 2-subgroups of S_(2^k) as tree
portraits), a generic conjugacy key-exchange protocol over them, attack
code that breaks the metacyclic instance in O(sqrt(p)) operations, and a
suite verifying the structural claims the construction rests on.
"""

from .arith import OpCounter, Residue, bsgs_dlog, is_probable_prime, mod_inv, mod_pow, mult_order
from .cryptanalysis import AttackReport, brute_conjugacy, bsgs_break, orbit_stats
from .heisenberg import HeisenbergElement, HeisenbergGroup, heisenberg_group
from .kex import DemoResult, Session, Transcript, parse_element, run_demo, validate_base
from .metacyclic import MetacyclicGroup, MetaElement, metacyclic_group
from .treegroup import Portrait, TreeSylowGroup, commutator, tree_group
from .verify import ClaimResult, run_suites

__version__ = "0.1.0"

__all__ = [
    "AttackReport",
    "ClaimResult",
    "DemoResult",
    "HeisenbergElement",
    "HeisenbergGroup",
    "MetaElement",
    "MetacyclicGroup",
    "OpCounter",
    "Portrait",
    "Residue",
    "Session",
    "Transcript",
    "TreeSylowGroup",
    "brute_conjugacy",
    "bsgs_break",
    "bsgs_dlog",
    "commutator",
    "heisenberg_group",
    "is_probable_prime",
    "metacyclic_group",
    "mod_inv",
    "mod_pow",
    "mult_order",
    "orbit_stats",
    "parse_element",
    "run_demo",
    "run_suites",
    "tree_group",
    "validate_base",
]
