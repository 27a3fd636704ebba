"""Exact arithmetic in the non-metacyclic minimal non-abelian p-group.

The platform is

    G = < a, b, c | a^(p^m) = b^(p^n) = c^p = e,
                    b^-1 a b = a c,  c central >,

with p an odd prime and m, n >= 1; |G| = p^(m+n+1).  Normal form is
a^i b^j c^k, and the commutator of any two elements lands in the central
<c>, so conjugation only ever shifts the c-exponent.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterator

from .arith import is_probable_prime
from .errors import ParamMismatchError, ParseError, TooLargeError

_CANONICAL_RE = re.compile(
    r"^mm:p=(0|[1-9]\d*);m=(0|[1-9]\d*);n=(0|[1-9]\d*);"
    r"i=(0|[1-9]\d*);j=(0|[1-9]\d*);k=(0|[1-9]\d*)$"
)

ENUMERATION_CAP = 10 ** 6


@lru_cache(maxsize=None)
def heisenberg_group(p: int, m: int, n: int) -> "HeisenbergGroup":
    return HeisenbergGroup(p, m, n)


class HeisenbergGroup:
    """Parameters p, m, n for the a/b/c presentation above."""

    kind = "heisenberg"

    def __init__(self, p: int, m: int, n: int):
        if m < 1 or n < 1:
            raise ValueError("presentation requires m >= 1 and n >= 1")
        if p < 3 or not is_probable_prime(p):
            raise ValueError("p must be an odd prime")
        self.p = p
        self.m = m
        self.n = n
        self.pm = p ** m
        self.pn = p ** n
        self.order = p ** (m + n + 1)

    def element(self, i: int, j: int, k: int) -> "HeisenbergElement":
        return HeisenbergElement(self, i, j, k)

    def identity(self) -> "HeisenbergElement":
        return HeisenbergElement(self, 0, 0, 0)

    def a(self, i: int = 1) -> "HeisenbergElement":
        return HeisenbergElement(self, i, 0, 0)

    def b(self, j: int = 1) -> "HeisenbergElement":
        return HeisenbergElement(self, 0, j, 0)

    def c(self, k: int = 1) -> "HeisenbergElement":
        return HeisenbergElement(self, 0, 0, k)

    def generator_elements(self) -> list["HeisenbergElement"]:
        return [self.a(), self.b(), self.c()]

    def elements(self) -> Iterator["HeisenbergElement"]:
        if self.order > ENUMERATION_CAP:
            raise TooLargeError(f"|G| = {self.order} is beyond enumeration")
        for i in range(self.pm):
            for j in range(self.pn):
                for k in range(self.p):
                    yield HeisenbergElement(self, i, j, k)

    def center_order(self) -> int:
        return self.p ** (self.m + self.n - 1)

    def center_elements(self) -> list["HeisenbergElement"]:
        if self.center_order() > ENUMERATION_CAP:
            raise TooLargeError("center too large to enumerate")
        return [
            HeisenbergElement(self, self.p * x, self.p * y, k)
            for x in range(self.pm // self.p)
            for y in range(self.pn // self.p)
            for k in range(self.p)
        ]

    def conjugacy_class(self, w: "HeisenbergElement") -> frozenset:
        """Closed form: conjugation sweeps the c-exponent over Z_p unless
        w is central, in which case the class is a singleton."""
        self._own(w)
        if w.is_central():
            return frozenset({w})
        return frozenset(
            HeisenbergElement(self, w.i, w.j, k) for k in range(self.p)
        )

    def commuting_subgroup_order(self) -> int:
        return self.pn

    def commuting_conjugator(self, s: int) -> "HeisenbergElement":
        return self.b(s)

    def wire_params(self) -> dict[str, str]:
        return {"p": str(self.p), "m": str(self.m), "n": str(self.n)}

    def default_base(self) -> "HeisenbergElement":
        return self.a(1)

    def _own(self, g: "HeisenbergElement") -> None:
        if g.group is not self:
            raise ParamMismatchError("element belongs to a different group")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeisenbergGroup)
            and (self.p, self.m, self.n) == (other.p, other.m, other.n)
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.p, self.m, self.n))

    def __repr__(self) -> str:
        return f"HeisenbergGroup(p={self.p}, m={self.m}, n={self.n})"


class HeisenbergElement:
    """Normal form a^i b^j c^k."""

    __slots__ = ("group", "i", "j", "k")

    def __init__(self, group: HeisenbergGroup, i: int, j: int, k: int):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "i", i % group.pm)
        object.__setattr__(self, "j", j % group.pn)
        object.__setattr__(self, "k", k % group.p)

    def __setattr__(self, name, val):
        raise AttributeError("HeisenbergElement is immutable")

    def _check(self, other: "HeisenbergElement") -> None:
        if not isinstance(other, HeisenbergElement):
            raise TypeError("expected a HeisenbergElement")
        if self.group is not other.group and self.group != other.group:
            raise ParamMismatchError("elements built under different parameters")

    def __mul__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        # b^j a^i = a^i b^j c^(-i*j), so the c-exponent picks up -j1*i2.
        self._check(other)
        G = self.group
        return HeisenbergElement(
            G,
            self.i + other.i,
            self.j + other.j,
            self.k + other.k - self.j * other.i,
        )

    def inverse(self) -> "HeisenbergElement":
        G = self.group
        return HeisenbergElement(G, -self.i, -self.j, -self.k - self.i * self.j)

    def __pow__(self, exp: int) -> "HeisenbergElement":
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

    def conjugate_by(self, x: "HeisenbergElement") -> "HeisenbergElement":
        """x^-1 * self * x; only the c-exponent moves, by i*v - j*u."""
        self._check(x)
        G = self.group
        return HeisenbergElement(
            G, self.i, self.j, self.k + self.i * x.j - self.j * x.i
        )

    def conjugate_via_products(self, x: "HeisenbergElement") -> "HeisenbergElement":
        """Reference route for cross-checks: literal x^-1 * self * x."""
        self._check(x)
        return x.inverse() * self * x

    def commutes_with(self, other: "HeisenbergElement") -> bool:
        return self * other == other * self

    def is_central(self) -> bool:
        return self.i % self.group.p == 0 and self.j % self.group.p == 0

    def is_identity(self) -> bool:
        return self.i == 0 and self.j == 0 and self.k == 0

    def in_a_subgroup(self) -> bool:
        return self.j == 0 and self.k == 0

    def canonical(self) -> str:
        G = self.group
        return f"mm:p={G.p};m={G.m};n={G.n};i={self.i};j={self.j};k={self.k}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeisenbergElement)
            and self.group == other.group
            and (self.i, self.j, self.k) == (other.i, other.j, other.k)
        )

    def __hash__(self) -> int:
        return hash((self.i, self.j, self.k))

    def __repr__(self) -> str:
        G = self.group
        return f"<a^{self.i} b^{self.j} c^{self.k} | p={G.p},m={G.m},n={G.n}>"


def parse_canonical(text: str) -> HeisenbergElement:
    """Strict parser for the mm: canonical form."""
    match = _CANONICAL_RE.match(text)
    if not match:
        raise ParseError(f"not a canonical heisenberg element: {text!r}")
    p, m, n, i, j, k = (int(g) for g in match.groups())
    try:
        group = heisenberg_group(p, m, n)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if i >= group.pm or j >= group.pn or k >= group.p:
        raise ParseError("exponents exceed their moduli; form is not canonical")
    return group.element(i, j, k)
