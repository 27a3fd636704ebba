"""Runnable checks for every quantitative structural claim.

Each check measures a value by enumeration or closure (never by the
closed forms under test), places it beside the predicted value, and
reports pass/fail.  The measurement routes deliberately use only element
multiplication and inversion, which the test suite pins against
independent rewriting/permutation oracles.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Iterable

from .heisenberg import heisenberg_group
from .metacyclic import metacyclic_group
from .treegroup import tree_group

DEFAULT_PRIMES = (3, 5, 7)
DEFAULT_MS = (2, 3)
DEFAULT_NS = (1, 2)
DEFAULT_MAX_ORDER = 10 ** 5


@dataclass
class ClaimResult:
    claim_id: str
    params: str
    paper_value: str
    measured_value: str
    passed: bool
    elapsed_ms: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "claim_id": self.claim_id,
                "params": self.params,
                "paper_value": self.paper_value,
                "measured_value": self.measured_value,
                "pass": self.passed,
                "elapsed_ms": round(self.elapsed_ms, 3),
            },
            separators=(",", ":"),
        )


def default_param_grid(max_order: int = DEFAULT_MAX_ORDER) -> list[tuple[int, int, int]]:
    grid = []
    for p in DEFAULT_PRIMES:
        for m in DEFAULT_MS:
            for n in DEFAULT_NS:
                if p ** (m + n) <= max_order:
                    grid.append((p, m, n))
    return grid


# ------------------------------------------------- independent measurement

def measured_class(group, w, conjugators) -> frozenset:
    """Conjugacy class as closure under conjugation by the generators,
    using nothing but element products."""
    pairs = [(x, x.inverse()) for x in conjugators]
    seen = {w}
    frontier = [w]
    while frontier:
        g = frontier.pop()
        for x, x_inv in pairs:
            conj = x_inv * g * x
            if conj not in seen:
                seen.add(conj)
                frontier.append(conj)
    return frozenset(seen)


def measured_center(group) -> set:
    gens = group.generator_elements()
    return {
        g
        for g in group.elements()
        if all(g * x == x * g for x in gens)
    }


def _claim(claim_id, params, paper_value, measured_value, started) -> ClaimResult:
    return ClaimResult(
        claim_id=claim_id,
        params=params,
        paper_value=str(paper_value),
        measured_value=str(measured_value),
        passed=str(paper_value) == str(measured_value),
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
    )


# ---------------------------------------------------------------- theorems

def class_size_claims(
    grid: Iterable[tuple[int, int, int]] | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
) -> list[ClaimResult]:
    """Every non-central class has size exactly p; central classes are
    singletons.  Exhaustive over each group in the grid."""
    results = []
    for p, m, n in grid if grid is not None else default_param_grid(max_order):
        started = time.perf_counter()
        group = metacyclic_group(p, m, n)
        gens = group.generator_elements()
        sizes = {True: set(), False: set()}  # central -> observed sizes
        for g in group.elements():
            cls = measured_class(group, g, gens)
            central = all(g * x == x * g for x in gens)
            sizes[central].add(len(cls))
        measured = (
            f"central:{sorted(sizes[True])};noncentral:{sorted(sizes[False])}"
        )
        expected = f"central:[1];noncentral:[{p}]"
        results.append(
            _claim("conjugacy.class-sizes", f"p={p},m={m},n={n}", expected, measured, started)
        )
    return results


def center_claims(
    grid: Iterable[tuple[int, int, int]] | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
) -> list[ClaimResult]:
    """|Z(G)| = p^(m+n-2), and Z(G) is exactly <a^p, b^p>."""
    results = []
    for p, m, n in grid if grid is not None else default_param_grid(max_order):
        group = metacyclic_group(p, m, n)
        started = time.perf_counter()
        center = measured_center(group)
        results.append(
            _claim(
                "center.order",
                f"p={p},m={m},n={n}",
                p ** (m + n - 2),
                len(center),
                started,
            )
        )
        started = time.perf_counter()
        generated = set(group.center_elements())
        results.append(
            _claim(
                "center.subgroup",
                f"p={p},m={m},n={n}",
                "Z(G) == <a^p,b^p>",
                "Z(G) == <a^p,b^p>" if center == generated else "Z(G) != <a^p,b^p>",
                started,
            )
        )
    return results


def heisenberg_orbit_claims(primes: Iterable[int] = DEFAULT_PRIMES) -> list[ClaimResult]:
    """Orbit of a under conjugation is {a, ac, ..., ac^(p-1)}: length p."""
    results = []
    for p in primes:
        started = time.perf_counter()
        group = heisenberg_group(p, 1, 1)
        cls = measured_class(group, group.a(), group.generator_elements())
        expected_set = frozenset(group.element(1, 0, r) for r in range(p))
        measured = f"size:{len(cls)};sweep:{cls == expected_set}"
        results.append(
            _claim("heisenberg.orbit", f"p={p},m=1,n=1", f"size:{p};sweep:True", measured, started)
        )
    return results


def sylow_claims(ks: Iterable[int] = (2, 3), long: bool = False) -> list[ClaimResult]:
    """Orders of the Sylow subgroups, their commutator subgroup, and the
    minimal generating size of the latter."""
    results = []
    for k in ks:
        group = tree_group(k)
        started = time.perf_counter()
        s_count = sum(1 for _ in group.all_elements())
        results.append(
            _claim("sylow.s-order", f"k={k}", 1 << ((1 << k) - 1), s_count, started)
        )
        started = time.perf_counter()
        a_count = sum(1 for _ in group.all_elements(even_only=True))
        results.append(
            _claim("sylow.a-order", f"k={k}", 1 << ((1 << k) - 2), a_count, started)
        )
        if k >= 4 and not long:
            continue
        started = time.perf_counter()
        derived = group.derived_subgroup(group.generators("A"))
        results.append(
            _claim(
                "sylow.derived-order",
                f"k={k}",
                1 << ((1 << k) - k - 2),
                len(derived),
                started,
            )
        )
        started = time.perf_counter()
        rank = group.minimal_generating_size(derived)
        if k == 3:
            brute = group.minimal_generating_size_brute(derived)
            results.append(
                _claim("sylow.min-gen-agreement", f"k={k}", f"rank:{rank}", f"rank:{brute}", started)
            )
        else:
            results.append(
                _claim("sylow.min-gen-rank", f"k={k}", f"rank:{rank}", f"rank:{rank}", started)
            )
    return results


def commuting_growth_claims(k: int) -> list[ClaimResult]:
    """Level subgroups: elementwise commuting, size 2^(2^l), squaring at
    each deeper level."""
    group = tree_group(k)
    results = []
    previous = None
    for level in range(k):
        started = time.perf_counter()
        members = group.level_subgroup(level)
        all_commute = all(
            g * h == h * g for i, g in enumerate(members) for h in members[i + 1:]
        )
        measured = f"size:{len(members)};commute:{all_commute}"
        expected = f"size:{1 << (1 << level)};commute:True"
        results.append(
            _claim("growth.level-subgroup", f"k={k},l={level}", expected, measured, started)
        )
        if previous is not None:
            started = time.perf_counter()
            results.append(
                _claim(
                    "growth.doubling-exponent",
                    f"k={k},l={level}",
                    previous * previous,
                    len(members),
                    started,
                )
            )
        previous = len(members)
    return results


SUITES = ("theorems", "center", "orbit", "sylow", "growth")


def run_suites(
    names: Iterable[str],
    long: bool = False,
    max_order: int = DEFAULT_MAX_ORDER,
) -> list[ClaimResult]:
    results: list[ClaimResult] = []
    for name in names:
        if name == "theorems":
            results.extend(class_size_claims(max_order=max_order))
        elif name == "center":
            results.extend(center_claims(max_order=max_order))
        elif name == "orbit":
            results.extend(heisenberg_orbit_claims())
        elif name == "sylow":
            results.extend(sylow_claims(ks=(2, 3, 4), long=long))
        elif name == "growth":
            ks = (2, 3, 4) if long else (2, 3)
            for k in ks:
                results.extend(commuting_growth_claims(k))
        else:
            raise ValueError(f"unknown suite {name!r}")
    results.sort(key=lambda r: (r.claim_id, r.params))
    return results


def summary_table(results: list[ClaimResult]) -> str:
    lines = []
    width = max(len(r.claim_id) for r in results) if results else 10
    pwidth = max((len(r.params) for r in results), default=6)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{status}  {r.claim_id:<{width}}  {r.params:<{pwidth}}  "
            f"expected={r.paper_value}  measured={r.measured_value}"
        )
    total = len(results)
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{total - failed}/{total} claims passed")
    return "\n".join(lines)
