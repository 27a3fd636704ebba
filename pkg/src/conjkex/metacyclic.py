"""Exact arithmetic in the metacyclic minimal non-abelian p-group.

The platform is the semidirect product of two cyclic p-groups,

    G = < a, b | a^(p^m) = e, b^(p^n) = e, b^-1 a b = a^twist >,

with twist = 1 + p^(m-1), p an odd prime, m >= 2, n >= 1.  Every element
has the unique normal form a^i b^j with 0 <= i < p^m, 0 <= j < p^n, so
equality is componentwise.  Conjugation by b raises a-exponents to the
twist power, which is what makes the platform efficient: it is a single
modular exponentiation.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterator

from .arith import is_probable_prime
from .errors import CapExceededError, ParamMismatchError, ParseError, TooLargeError

_CANONICAL_RE = re.compile(
    r"^mc:p=(0|[1-9]\d*);m=(0|[1-9]\d*);n=(0|[1-9]\d*);"
    r"i=(0|[1-9]\d*);j=(0|[1-9]\d*)$"
)

ENUMERATION_CAP = 10 ** 6


@lru_cache(maxsize=None)
def metacyclic_group(p: int, m: int, n: int) -> "MetacyclicGroup":
    """Interned group instances, so parsed elements share power caches."""
    return MetacyclicGroup(p, m, n)


class MetacyclicGroup:
    """Parameters p, m, n plus the derived twist machinery."""

    kind = "metacyclic"

    def __init__(self, p: int, m: int, n: int):
        if m < 2 or n < 1:
            raise ValueError("presentation requires m >= 2 and n >= 1")
        if p < 3 or not is_probable_prime(p):
            raise ValueError("p must be an odd prime")
        self.p = p
        self.m = m
        self.n = n
        self.pm = p ** m
        self.pn = p ** n
        self.twist = 1 + p ** (m - 1)
        self.order = self.pm * self.pn
        # Construction-time sanity: the twist generates an automorphism of
        # a-exponents of multiplicative order exactly p.
        if pow(self.twist, p, self.pm) != 1 or self.twist % self.pm == 1:
            raise ValueError("twist exponent does not have order p")
        self._twist_pows: list[int] | None = None
        self._twist_inv_pows: list[int] | None = None

    # twist^j depends only on j mod p; cache the cycle for small p.
    def twist_pow(self, j: int) -> int:
        j %= self.p
        if self.p <= 1 << 16:
            if self._twist_pows is None:
                self._twist_pows = self._cycle(self.twist)
            return self._twist_pows[j]
        return pow(self.twist, j, self.pm)

    def twist_pow_inv(self, j: int) -> int:
        j %= self.p
        if self.p <= 1 << 16:
            if self._twist_inv_pows is None:
                self._twist_inv_pows = self._cycle(pow(self.twist, -1, self.pm))
            return self._twist_inv_pows[j]
        return pow(self.twist, -j % self.p, self.pm)

    def _cycle(self, t: int) -> list[int]:
        out = [1]
        for _ in range(self.p - 1):
            out.append(out[-1] * t % self.pm)
        return out

    def element(self, i: int, j: int) -> "MetaElement":
        return MetaElement(self, i, j)

    def identity(self) -> "MetaElement":
        return MetaElement(self, 0, 0)

    def a(self, i: int = 1) -> "MetaElement":
        return MetaElement(self, i, 0)

    def b(self, j: int = 1) -> "MetaElement":
        return MetaElement(self, 0, j)

    def generator_elements(self) -> list["MetaElement"]:
        return [self.a(), self.b()]

    def elements(self) -> Iterator["MetaElement"]:
        if self.order > ENUMERATION_CAP:
            raise TooLargeError(f"|G| = {self.order} is beyond enumeration")
        for i in range(self.pm):
            for j in range(self.pn):
                yield MetaElement(self, i, j)

    def center_order(self) -> int:
        return self.p ** (self.m + self.n - 2)

    def center_elements(self) -> list["MetaElement"]:
        """The subgroup generated by a^p and b^p, enumerated directly."""
        if self.center_order() > ENUMERATION_CAP:
            raise TooLargeError("center too large to enumerate")
        return [
            MetaElement(self, self.p * x, self.p * y)
            for x in range(self.pm // self.p)
            for y in range(self.pn // self.p)
        ]

    def conjugacy_class(self, w: "MetaElement", cap: int | None = None) -> frozenset:
        """Full conjugacy class of w.

        Elements of <a> get the closed-form twist orbit; anything else is
        closed under conjugation by the generators, which only needs the
        group to be enumerable.
        """
        self._own(w)
        if w.j == 0:
            orbit = frozenset(
                MetaElement(self, w.i * self.twist_pow(v) % self.pm, 0)
                for v in range(self.p)
            )
            if cap is not None and len(orbit) > cap:
                raise CapExceededError(f"class size {len(orbit)} exceeds cap {cap}")
            return orbit
        if self.order > ENUMERATION_CAP:
            raise TooLargeError(
                "class enumeration outside <a> needs an enumerable group"
            )
        seen = {w}
        frontier = [w]
        while frontier:
            g = frontier.pop()
            for conj in (self._conj_by_a(g), self._conj_by_b(g)):
                if conj not in seen:
                    if cap is not None and len(seen) >= cap:
                        raise CapExceededError(f"class grew past cap {cap}")
                    seen.add(conj)
                    frontier.append(conj)
        return frozenset(seen)

    def _conj_by_a(self, g: "MetaElement") -> "MetaElement":
        # a (a^i b^j) a^-1 = a^(i + 1 - twist^j) b^j
        return MetaElement(self, g.i + 1 - self.twist_pow(g.j), g.j)

    def _conj_by_b(self, g: "MetaElement") -> "MetaElement":
        # b (a^i b^j) b^-1 = a^(i * twist) b^j
        return MetaElement(self, g.i * self.twist % self.pm, g.j)

    # Designated commuting subgroup for the key exchange: the cyclic <b>.
    def commuting_subgroup_order(self) -> int:
        return self.pn

    def commuting_conjugator(self, s: int) -> "MetaElement":
        return self.b(s)

    def wire_params(self) -> dict[str, str]:
        return {"p": str(self.p), "m": str(self.m), "n": str(self.n)}

    def default_base(self) -> "MetaElement":
        return self.a(1)

    def _own(self, g: "MetaElement") -> None:
        if g.group is not self:
            raise ParamMismatchError("element belongs to a different group")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MetacyclicGroup)
            and (self.p, self.m, self.n) == (other.p, other.m, other.n)
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.p, self.m, self.n))

    def __repr__(self) -> str:
        return f"MetacyclicGroup(p={self.p}, m={self.m}, n={self.n})"


class MetaElement:
    """Normal form a^i b^j; immutable value object."""

    __slots__ = ("group", "i", "j")

    def __init__(self, group: MetacyclicGroup, i: int, j: int):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "i", i % group.pm)
        object.__setattr__(self, "j", j % group.pn)

    def __setattr__(self, name, val):
        raise AttributeError("MetaElement is immutable")

    def _check(self, other: "MetaElement") -> None:
        if not isinstance(other, MetaElement):
            raise TypeError("expected a MetaElement")
        if self.group is not other.group and self.group != other.group:
            raise ParamMismatchError("elements built under different parameters")

    def __mul__(self, other: "MetaElement") -> "MetaElement":
        # (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2*twist^j1) b^(j1 + j2)
        self._check(other)
        G = self.group
        return MetaElement(
            G, self.i + other.i * G.twist_pow(self.j), self.j + other.j
        )

    def inverse(self) -> "MetaElement":
        G = self.group
        return MetaElement(G, -self.i * G.twist_pow_inv(self.j), -self.j)

    def __pow__(self, exp: int) -> "MetaElement":
        if exp < 0:
            return self.inverse() ** (-exp)
        out = self.group.identity()
        sq = self
        while exp:
            if exp & 1:
                out = out * sq
            sq = sq * sq
            exp >>= 1
        return out

    def conjugate_by(self, x: "MetaElement") -> "MetaElement":
        """Conjugate of this element under x, computed as x * self * x^-1.

        With the a^i b^j normal form used here, conjugating an element of
        <a> by b^v raises its exponent to the twist^v power, one modular
        exponentiation.
        """
        self._check(x)
        return x * self * x.inverse()

    def commutes_with(self, other: "MetaElement") -> bool:
        return self * other == other * self

    def is_central(self) -> bool:
        # Central iff both exponents are multiples of p, i.e. g in <a^p, b^p>.
        return self.i % self.group.p == 0 and self.j % self.group.p == 0

    def is_identity(self) -> bool:
        return self.i == 0 and self.j == 0

    def in_a_subgroup(self) -> bool:
        return self.j == 0

    def canonical(self) -> str:
        G = self.group
        return f"mc:p={G.p};m={G.m};n={G.n};i={self.i};j={self.j}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MetaElement)
            and self.group == other.group
            and self.i == other.i
            and self.j == other.j
        )

    def __hash__(self) -> int:
        return hash((self.i, self.j))

    def __repr__(self) -> str:
        return f"<a^{self.i} b^{self.j} | p={self.group.p},m={self.group.m},n={self.group.n}>"


def parse_canonical(text: str) -> MetaElement:
    """Strict parser for the mc: canonical form (minimal decimal fields)."""
    match = _CANONICAL_RE.match(text)
    if not match:
        raise ParseError(f"not a canonical metacyclic element: {text!r}")
    p, m, n, i, j = (int(g) for g in match.groups())
    try:
        group = metacyclic_group(p, m, n)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if i >= group.pm or j >= group.pn:
        raise ParseError("exponents exceed their moduli; form is not canonical")
    return group.element(i, j)
