"""Sylow 2-subgroups of S_(2^k) and A_(2^k) as labelled binary trees.

An automorphism of the complete binary tree of depth k is stored as a
*portrait*: one swap/identity bit per internal vertex, 2^k - 1 bits in
level order (root first, left to right within a level).  The portraits
form the iterated wreath product of k copies of C2, which is exactly a
Sylow 2-subgroup of S_(2^k); its even-parity half is a Sylow 2-subgroup
of A_(2^k).

Composition convention is "g then h": the composite sends leaf x to
h(g(x)).  A vertex bit swaps the two subtrees below it, so a bit on
level l contributes 2^(k-l-1) transpositions to the leaf permutation;
the permutation is even iff the number of active bottom-level bits is
even.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from typing import Collection, Iterable, Iterator

from .errors import (
    DepthMismatchError,
    DepthTooLargeError,
    LevelOutOfRangeError,
    NotAGroupError,
    ParamMismatchError,
    ParseError,
)

_CANONICAL_RE = re.compile(r"^tg:k=(0|[1-9]\d*);bits=(0|[1-9a-f][0-9a-f]*)$")

MAX_DEPTH = 20        # pure portrait arithmetic
MAX_ENUM_DEPTH = 4    # exhaustive enumeration / closure work


@lru_cache(maxsize=None)
def tree_group(k: int) -> "TreeSylowGroup":
    return TreeSylowGroup(k)


class TreeSylowGroup:
    """Depth parameter k plus enumeration and subgroup machinery."""

    kind = "tree"

    def __init__(self, k: int):
        if not 1 <= k <= MAX_DEPTH:
            raise ValueError(f"depth must be in [1, {MAX_DEPTH}]")
        self.k = k
        self.leaves = 1 << k
        self.bit_count = (1 << k) - 1

    # ----------------------------------------------------------- elements

    def identity(self) -> "Portrait":
        return Portrait(self, 0)

    def from_packed(self, packed: int) -> "Portrait":
        return Portrait(self, packed)

    def from_level_masks(self, masks: dict[int, int]) -> "Portrait":
        packed = 0
        for level, mask in masks.items():
            if not 0 <= level < self.k:
                raise LevelOutOfRangeError(f"level {level} outside [0, {self.k})")
            width = 1 << level
            if mask >> width:
                raise ValueError(f"mask {mask:#x} too wide for level {level}")
            for pos in range(width):
                if (mask >> pos) & 1:
                    packed |= 1 << self._shift(level, pos)
        return Portrait(self, packed)

    def single(self, level: int, pos: int) -> "Portrait":
        return self.from_level_masks({level: 1 << pos})

    def _shift(self, level: int, pos: int) -> int:
        # level-order index of the vertex, counted from the root...
        idx = (1 << level) - 1 + pos
        # ...stored big-endian: the root is the most significant bit.
        return self.bit_count - 1 - idx

    # -------------------------------------------------------- enumeration

    def order(self, variant: str = "S") -> int:
        if variant == "S":
            return 1 << (self.bit_count)
        if variant == "A":
            return 1 << (self.bit_count - 1)
        raise ValueError("variant must be 'S' or 'A'")

    def all_elements(self, even_only: bool = False) -> Iterator["Portrait"]:
        if self.k > MAX_ENUM_DEPTH:
            raise DepthTooLargeError(f"enumeration limited to k <= {MAX_ENUM_DEPTH}")
        for packed in range(1 << self.bit_count):
            g = Portrait(self, packed)
            if even_only and not g.is_even():
                continue
            yield g

    def level_subgroup(self, level: int, even_only: bool = False) -> list["Portrait"]:
        """All portraits supported on one level: an elementary abelian
        commuting family of size 2^(2^level)."""
        if not 0 <= level < self.k:
            raise LevelOutOfRangeError(f"level {level} outside [0, {self.k})")
        width = 1 << level
        if width > 1 << MAX_ENUM_DEPTH:
            raise DepthTooLargeError("level too wide to enumerate")
        out = []
        for mask in range(1 << width):
            g = self.from_level_masks({level: mask})
            if even_only and not g.is_even():
                continue
            out.append(g)
        return out

    def level_subgroup_order(self, level: int) -> int:
        if not 0 <= level < self.k:
            raise LevelOutOfRangeError(f"level {level} outside [0, {self.k})")
        return 1 << (1 << level)

    def level_subgroup_element(self, level: int, index: int) -> "Portrait":
        return self.from_level_masks({level: index})

    def generators(self, variant: str = "S") -> list["Portrait"]:
        """Small generating sets: one single-vertex portrait per level for
        the S-Sylow; for the A-Sylow the bottom level is replaced by
        even bottom-pair swaps."""
        if variant == "S":
            return [self.single(level, 0) for level in range(self.k)]
        if variant != "A":
            raise ValueError("variant must be 'S' or 'A'")
        if self.k == 1:
            return [self.identity()]
        gens = [self.single(level, 0) for level in range(self.k - 1)]
        bottom = self.k - 1
        for pos in range(1, 1 << bottom):
            gens.append(self.from_level_masks({bottom: 1 | (1 << pos)}))
        return gens

    # ----------------------------------------------------- subgroup tools

    def closure(self, generators: Iterable["Portrait"]) -> frozenset:
        """Worklist closure of a generating set under composition."""
        gens = [g for g in generators]
        for g in gens:
            self._own(g)
        els = {self.identity()} | set(gens)
        frontier = list(els)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = x * g
                    if y not in els:
                        els.add(y)
                        new.append(y)
            frontier = new
        return frozenset(els)

    def derived_subgroup(self, generators: Iterable["Portrait"]) -> frozenset:
        """Commutator subgroup of <generators>: the closure of generator
        commutators, extended until conjugation-stable (normal closure)."""
        if self.k > MAX_ENUM_DEPTH:
            raise DepthTooLargeError(
                f"derived-subgroup closure limited to k <= {MAX_ENUM_DEPTH}"
            )
        gens = list(generators)
        for g in gens:
            self._own(g)
        seeds = {commutator(x, y) for x, y in combinations(gens, 2)}
        seeds.discard(self.identity())
        subgroup = self.closure(seeds)
        while True:
            extra = {
                g.inverse() * x * g
                for x in subgroup
                for g in gens
            } - subgroup
            if not extra:
                return subgroup
            seeds |= extra
            subgroup = self.closure(seeds)

    def minimal_generating_size(self, elements: Collection["Portrait"]) -> int:
        """Size of a minimal generating set of a 2-group, as the 2-rank of
        the quotient by squares and commutators (Burnside basis)."""
        group = set(elements)
        if not group:
            raise NotAGroupError("empty input")
        gens = self._greedy_generators(group)
        if len(group) == 1:
            return 0
        frattini_seeds = {g * g for g in gens}
        frattini_seeds |= {commutator(x, y) for x, y in combinations(gens, 2)}
        frattini = self.closure(frattini_seeds)
        # Frattini subgroup of a 2-group: normal closure of squares and
        # commutators inside the group itself.
        while True:
            extra = {
                g.inverse() * x * g for x in frattini for g in gens
            } - frattini
            if not extra:
                break
            frattini_seeds |= extra
            frattini = self.closure(frattini_seeds)
        quotient = len(group) // len(frattini)
        return quotient.bit_length() - 1

    def minimal_generating_size_brute(self, elements: Collection["Portrait"]) -> int:
        """Independent check: smallest subset that generates the input."""
        group = set(elements)
        if len(group) == 1:
            return 0
        candidates = sorted(group - {self.identity()}, key=lambda g: g.packed)
        for size in range(1, len(candidates) + 1):
            for subset in combinations(candidates, size):
                if len(self.closure(subset)) == len(group):
                    return size
        raise NotAGroupError("input generates something larger than itself")

    def _greedy_generators(self, group: set) -> list["Portrait"]:
        gens: list[Portrait] = []
        span = {self.identity()}
        for g in sorted(group, key=lambda g: g.packed):
            if g not in span:
                gens.append(g)
                span = set(self.closure(gens))
        if span != group:
            raise NotAGroupError("element set is not closed under composition")
        return gens

    # ------------------------------------------------------------ plumbing

    def commuting_subgroup_level(self) -> int:
        if self.k < 2:
            raise LevelOutOfRangeError("key exchange needs depth k >= 2")
        return self.k - 2

    def commuting_subgroup_order(self) -> int:
        return self.level_subgroup_order(self.commuting_subgroup_level())

    def commuting_conjugator(self, s: int) -> "Portrait":
        return self.level_subgroup_element(self.commuting_subgroup_level(), s)

    def generator_elements(self) -> list["Portrait"]:
        return self.generators("S")

    def conjugacy_class(self, w: "Portrait") -> frozenset:
        """Class under the full S-Sylow, by closure under generator
        conjugation."""
        self._own(w)
        gens = self.generators("S")
        seen = {w}
        frontier = [w]
        while frontier:
            g = frontier.pop()
            for x in gens:
                conj = x.inverse() * g * x
                if conj not in seen:
                    seen.add(conj)
                    frontier.append(conj)
        return frozenset(seen)

    def is_central(self, w: "Portrait") -> bool:
        """Center test against the generating set."""
        self._own(w)
        return all(w * g == g * w for g in self.generators("S"))

    def wire_params(self) -> dict[str, str]:
        return {"k": str(self.k)}

    def default_base(self) -> "Portrait":
        # One bottom-level swap: moved around by level-(k-2) conjugators.
        return self.single(self.k - 1, 0)

    def _own(self, g: "Portrait") -> None:
        if g.group is not self:
            raise ParamMismatchError("portrait belongs to a different group")

    def __eq__(self, other) -> bool:
        return isinstance(other, TreeSylowGroup) and self.k == other.k

    def __hash__(self) -> int:
        return hash((self.kind, self.k))

    def __repr__(self) -> str:
        return f"TreeSylowGroup(k={self.k})"


class Portrait:
    """One swap/identity bit per internal vertex, packed level-order."""

    __slots__ = ("group", "packed")

    def __init__(self, group: TreeSylowGroup, packed: int):
        if packed >> group.bit_count:
            raise ValueError("packed value has more bits than the tree has vertices")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "packed", packed)

    def __setattr__(self, name, val):
        raise AttributeError("Portrait is immutable")

    def bit(self, level: int, pos: int) -> int:
        return (self.packed >> self.group._shift(level, pos)) & 1

    def level_mask(self, level: int) -> int:
        mask = 0
        for pos in range(1 << level):
            mask |= self.bit(level, pos) << pos
        return mask

    def active_bits(self, level: int) -> int:
        return self.level_mask(level).bit_count()

    def _check(self, other: "Portrait") -> None:
        if not isinstance(other, Portrait):
            raise TypeError("expected a Portrait")
        if self.group.k != other.group.k:
            raise DepthMismatchError(
                f"depth mismatch: {self.group.k} vs {other.group.k}"
            )

    def __mul__(self, other: "Portrait") -> "Portrait":
        """Composite "self then other": leaf x maps to other(self(x)).

        Root labels XOR; below a vertex the right factor's subtree is
        reindexed by the left factor's label there.
        """
        self._check(other)
        G = self.group
        k = G.k
        out = 0
        # stack of (level, pos in self/out, pos in other)
        stack = [(0, 0, 0)]
        while stack:
            level, pos, opos = stack.pop()
            gb = self.bit(level, pos)
            if gb ^ other.bit(level, opos):
                out |= 1 << G._shift(level, pos)
            if level + 1 < k:
                stack.append((level + 1, 2 * pos, 2 * opos + gb))
                stack.append((level + 1, 2 * pos + 1, 2 * opos + (1 ^ gb)))
        return Portrait(G, out)

    def inverse(self) -> "Portrait":
        G = self.group
        k = G.k
        out = 0
        # (g^-1) keeps each label but fetches it from the g-subtree the
        # inverse path came from.
        stack = [(0, 0, 0)]  # (level, out pos, g pos)
        while stack:
            level, pos, gpos = stack.pop()
            gb = self.bit(level, gpos)
            if gb:
                out |= 1 << G._shift(level, pos)
            if level + 1 < k:
                stack.append((level + 1, 2 * pos, 2 * gpos + gb))
                stack.append((level + 1, 2 * pos + 1, 2 * gpos + (1 ^ gb)))
        return Portrait(G, out)

    def apply(self, leaf: int) -> int:
        """Image of a leaf in [0, 2^k); the path bits are flipped by the
        labels along the original path."""
        G = self.group
        k = G.k
        pos = 0
        out = 0
        for level in range(k):
            d = (leaf >> (k - 1 - level)) & 1
            out = (out << 1) | (d ^ self.bit(level, pos))
            pos = 2 * pos + d
        return out

    def to_permutation(self) -> tuple[int, ...]:
        return tuple(self.apply(x) for x in range(self.group.leaves))

    def is_even(self) -> bool:
        # Only bottom-level swaps are single transpositions; every higher
        # level contributes an even number of them.
        return self.active_bits(self.group.k - 1) % 2 == 0

    def is_identity(self) -> bool:
        return self.packed == 0

    def conjugate_by(self, x: "Portrait") -> "Portrait":
        """x^-1 * self * x."""
        self._check(x)
        return x.inverse() * self * x

    def commutes_with(self, other: "Portrait") -> bool:
        return self * other == other * self

    def canonical(self) -> str:
        return f"tg:k={self.group.k};bits={self.packed:x}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Portrait)
            and self.group.k == other.group.k
            and self.packed == other.packed
        )

    def __hash__(self) -> int:
        return hash((self.group.k, self.packed))

    def __repr__(self) -> str:
        return f"Portrait(k={self.group.k}, bits={self.packed:#x})"


def commutator(x: Portrait, y: Portrait) -> Portrait:
    """[x, y] = x^-1 y^-1 x y."""
    return x.inverse() * y.inverse() * x * y


def parse_canonical(text: str) -> Portrait:
    """Strict parser for the tg: canonical form (minimal lowercase hex)."""
    match = _CANONICAL_RE.match(text)
    if not match:
        raise ParseError(f"not a canonical tree element: {text!r}")
    k = int(match.group(1))
    packed = int(match.group(2), 16)
    try:
        group = tree_group(k)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if packed >> group.bit_count:
        raise ParseError("bit string longer than the tree has vertices")
    return group.from_packed(packed)
