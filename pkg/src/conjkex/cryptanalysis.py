"""Attacks on the conjugacy exchange, and orbit statistics.

The headline attack reduces key recovery on the metacyclic platform to a
discrete log in the cyclic twist group of order p: the public values are
powers of the twist applied to the base's a-exponent, so baby-step
giant-step recovers the exponent in O(sqrt(p)) modular multiplications
and the eavesdropper rebuilds the shared key from public data alone.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .arith import OpCounter, Residue, bsgs_dlog
from .errors import NoSolutionError, NotInOrbitError, TooLargeError


@dataclass
class AttackReport:
    """Outcome of one attack run; group_ops counts platform multiplications."""

    recovered_key: bytes
    exponent: int
    group_ops: int
    wall_ms: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "recovered_key": self.recovered_key.decode("ascii"),
                "exponent": str(self.exponent),
                "group_ops": str(self.group_ops),
                "wall_ms": round(self.wall_ms, 3),
            },
            separators=(",", ":"),
        )


def brute_conjugacy(w, w_pub, max_iter: int) -> int:
    """Scan the designated commuting subgroup for the least conjugator
    index s with conjugate(w, subgroup[s]) = w_pub."""
    group = w.group
    bound = min(max_iter + 1, group.commuting_subgroup_order())
    for s in range(bound):
        if w.conjugate_by(group.commuting_conjugator(s)) == w_pub:
            return s
    raise NotInOrbitError(f"no conjugator found within {max_iter} steps")


def bsgs_break(w, w_x, w_y) -> AttackReport:
    """Recover the shared key of a metacyclic session from public data.

    Solves twist^s = (x-exponent of w_x) / (x-exponent of w) over the
    order-p twist group by baby-step giant-step, then reuses the solved
    twist power directly on w_y's exponent, keeping the total modular
    multiplication count at 2*ceil(sqrt(p)) + O(1).
    """
    group = w.group
    if group.kind != "metacyclic":
        raise NoSolutionError("twist-log attack applies to the metacyclic platform")
    if w_x.group != group or w_y.group != group:
        raise NoSolutionError("inputs come from different platforms")
    if w.j != 0 or w_x.j != 0 or w_y.j != 0:
        raise NoSolutionError("attack expects base and publics inside <a>")
    if w.i % group.p == 0:
        raise NoSolutionError("base exponent must be a unit mod p")

    started = time.perf_counter()
    ops = OpCounter()
    pm = group.pm
    base_exp = Residue(w.i, pm)
    # twist^s = w_x.i / w.i; the quotient is itself the needed twist power.
    twist_power = Residue(w_x.i, pm) * base_exp.inverse()
    ops.tick()
    exponent = bsgs_dlog(Residue(group.twist, pm), twist_power, group.p, ops=ops)
    key_exp = Residue(w_y.i, pm) * twist_power
    ops.tick()
    recovered = group.element(key_exp.value, 0)
    wall_ms = (time.perf_counter() - started) * 1000.0
    return AttackReport(
        recovered_key=recovered.canonical().encode("ascii"),
        exponent=exponent,
        group_ops=ops.count,
        wall_ms=wall_ms,
    )


def class_size_histogram(elements, class_of) -> dict[int, int]:
    """Histogram {class size: number of classes} over an element list."""
    seen = set()
    histogram: dict[int, int] = {}
    for g in elements:
        if g in seen:
            continue
        cls = class_of(g)
        seen.update(cls)
        histogram[len(cls)] = histogram.get(len(cls), 0) + 1
    return histogram


def orbit_stats(group, cap: int = 10 ** 5) -> dict[int, int]:
    """Class-size histogram over the whole platform group."""
    if group.kind == "tree":
        order = group.order("S")
        if order > cap:
            raise TooLargeError(f"|G| = {order} exceeds cap {cap}")
        elements = list(group.all_elements())
    else:
        if group.order > cap:
            raise TooLargeError(f"|G| = {group.order} exceeds cap {cap}")
        elements = list(group.elements())
    return class_size_histogram(elements, group.conjugacy_class)
