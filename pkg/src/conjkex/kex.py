"""Conjugacy key exchange over any of the three group platforms.

Both parties share a non-central base element w.  Each draws a private
element from a designated elementwise-commuting subgroup, publishes the
conjugate of w under it, and conjugates the peer's public value with its
own private; because the privates commute, both arrive at the same group
element.  The shared secret is the canonical text form of that element,
as bytes.

The designated commuting subgroups are <b> for the metacyclic and
heisenberg platforms (cyclic, and conjugation of <a> by b-powers is
non-trivial) and a single level subgroup (level k-2) for trees.  Drawing
privates from the center instead would fix w and make every key equal
to w, so central sampling is deliberately not offered.

Wire format: newline-delimited JSON messages with lowercase keys and no
extra whitespace; integers travel as minimal decimal strings, elements
as their canonical text forms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import heisenberg, metacyclic, treegroup
from .errors import (
    ParseError,
    PlatformMismatchError,
    SessionStateError,
    TranscriptError,
)
from .rng import ALGORITHM_ID, SplitMix64

PLATFORMS = ("metacyclic", "heisenberg", "tree")

_PARSERS = {
    "mc": metacyclic.parse_canonical,
    "mm": heisenberg.parse_canonical,
    "tg": treegroup.parse_canonical,
}


def parse_element(text: str):
    """Parse any platform's canonical element string."""
    prefix, _, _ = text.partition(":")
    parser = _PARSERS.get(prefix)
    if parser is None:
        raise ParseError(f"unknown element prefix {prefix!r}")
    return parser(text)


def group_for(platform: str, **params):
    if platform == "metacyclic":
        return metacyclic.metacyclic_group(params["p"], params["m"], params["n"])
    if platform == "heisenberg":
        return heisenberg.heisenberg_group(params["p"], params["m"], params["n"])
    if platform == "tree":
        return treegroup.tree_group(params["k"])
    raise ValueError(f"unknown platform {platform!r}")


def validate_base(w, strict: bool = True) -> bool:
    """A usable base is non-central; the strict profile additionally
    requires metacyclic/heisenberg bases to be non-identity a-powers."""
    group = w.group
    if group.kind == "tree":
        return not group.is_central(w)
    if w.is_central():
        return False
    if strict and not w.in_a_subgroup():
        return False
    return not w.is_identity()


def sample_private(group, rng: SplitMix64):
    """Uniform draw from the designated commuting subgroup.

    Cyclic platforms exclude the identity (v >= 1); the tree subgroup is
    sampled whole, identity included.
    """
    if group.kind == "tree":
        return group.commuting_conjugator(rng.randrange(group.commuting_subgroup_order()))
    return group.commuting_conjugator(1 + rng.randrange(group.commuting_subgroup_order() - 1))


class Session:
    """One party's view of an in-progress exchange."""

    def __init__(self, role: str, base, seed: int):
        if role not in ("alice", "bob"):
            raise ValueError("role must be 'alice' or 'bob'")
        if not validate_base(base):
            raise ValueError("base element is unusable (central or degenerate)")
        self.role = role
        self.group = base.group
        self.base = base
        self.seed = seed
        self.private = None
        self.peer_public = None
        self.shared_key: bytes | None = None

    def gen_private(self):
        self.private = sample_private(self.group, SplitMix64(self.seed))
        return self.private

    def public_value(self):
        if self.private is None:
            raise SessionStateError("generate the private element first")
        return self.base.conjugate_by(self.private)

    def derive(self, peer_public) -> bytes:
        if self.private is None:
            raise SessionStateError("generate the private element first")
        if peer_public.group != self.group:
            raise PlatformMismatchError("peer value comes from a different platform")
        self.peer_public = peer_public
        shared = peer_public.conjugate_by(self.private)
        self.shared_key = shared.canonical().encode("ascii")
        return self.shared_key


def _dump(message: dict) -> str:
    return json.dumps(message, separators=(",", ":"))


@dataclass
class Transcript:
    """Replayable record of the public handshake messages."""

    messages: list = field(default_factory=list)

    def add(self, **fields) -> None:
        self.messages.append(dict(fields))

    def to_text(self) -> str:
        return "".join(_dump(m) + "\n" for m in self.messages)

    @classmethod
    def from_text(cls, text: str) -> "Transcript":
        messages = []
        for line in text.splitlines():
            if not line.strip():
                continue
            try:
                messages.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise TranscriptError(f"bad transcript line: {exc}") from None
        return cls(messages)

    def _only(self, kind: str) -> dict:
        found = [m for m in self.messages if m.get("type") == kind]
        if len(found) != 1:
            raise TranscriptError(f"expected exactly one {kind!r} message")
        return found[0]

    def platform(self) -> str:
        return self._only("params").get("platform", "")

    def base_element(self):
        params = self._only("params")
        try:
            return parse_element(params["w"])
        except KeyError:
            raise TranscriptError("params message lacks the base element") from None

    def public_from(self, role: str):
        for m in self.messages:
            if m.get("type") == "public" and m.get("from") == role:
                try:
                    return parse_element(m["value"])
                except KeyError:
                    raise TranscriptError("public message lacks a value") from None
        raise TranscriptError(f"no public value from {role!r}")

    def debug_key(self) -> bytes:
        for m in self.messages:
            if m.get("type") == "debug":
                try:
                    return m["key"].encode("ascii")
                except KeyError:
                    raise TranscriptError("debug message lacks the key") from None
        raise TranscriptError("transcript carries no debug key")


@dataclass
class DemoResult:
    transcript: Transcript
    key_alice: bytes
    key_bob: bytes

    @property
    def agreed(self) -> bool:
        return self.key_alice == self.key_bob


def run_demo(base, seed_alice: int, seed_bob: int, debug_key: bool = False) -> DemoResult:
    """Full two-party exchange; keys must agree for honest runs."""
    group = base.group
    alice = Session("alice", base, seed_alice)
    bob = Session("bob", base, seed_bob)
    x = alice.gen_private()
    y = bob.gen_private()
    # The algebra needs commuting privates; cheap to check outright.
    if not x.commutes_with(y):
        raise SessionStateError("sampled privates do not commute")

    transcript = Transcript()
    transcript.add(type="header", rng=ALGORITHM_ID)
    transcript.add(
        type="params",
        platform=group.kind,
        **group.wire_params(),
        w=base.canonical(),
    )
    pub_a = alice.public_value()
    pub_b = bob.public_value()
    transcript.add(type="public", **{"from": "alice"}, value=pub_a.canonical())
    transcript.add(type="public", **{"from": "bob"}, value=pub_b.canonical())

    key_a = alice.derive(pub_b)
    key_b = bob.derive(pub_a)
    if debug_key:
        transcript.add(type="debug", key=key_a.decode("ascii"))
    return DemoResult(transcript, key_a, key_b)
