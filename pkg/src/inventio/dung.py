"""Abstract argumentation frameworks: conflict-freeness, defence, admissibility,
preferred and grounded extensions, and derivation from an argument graph."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from inventio.errors import ForeignArgument, InvalidGraph
from inventio.model import ArgumentGraph, validate


@dataclass(frozen=True)
class AbstractFramework:
    arguments: frozenset[str]
    attacks: frozenset[tuple[str, str]] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "arguments", frozenset(self.arguments))
        object.__setattr__(self, "attacks", frozenset((a, b) for a, b in self.attacks))
        for a, b in self.attacks:
            if a not in self.arguments or b not in self.arguments:
                raise ForeignArgument(f"attack ({a!r}, {b!r}) references an unknown argument")

    def attackers(self, x: str) -> set[str]:
        return {a for a, b in self.attacks if b == x}

    def attacked_by(self, x: str) -> set[str]:
        return {b for a, b in self.attacks if a == x}

    def _check(self, members: Iterable[str]) -> frozenset[str]:
        members = frozenset(members)
        foreign = members - self.arguments
        if foreign:
            raise ForeignArgument(f"arguments {sorted(foreign)} are not in the framework")
        return members


def is_conflict_free(af: AbstractFramework, b: Iterable[str]) -> bool:
    b = af._check(b)
    return not any(x in b and y in b for x, y in af.attacks)


def defends(af: AbstractFramework, b: Iterable[str], x: str) -> bool:
    b = af._check(b)
    af._check([x])
    return all(af.attackers(attacker) & b for attacker in af.attackers(x))


def is_admissible(af: AbstractFramework, b: Iterable[str]) -> bool:
    b = af._check(b)
    return is_conflict_free(af, b) and all(defends(af, b, x) for x in b)


def admissible_sets(af: AbstractFramework) -> list[frozenset[str]]:
    """Every admissible set, found by include/exclude search over conflict-free sets."""
    order = sorted(af.arguments)
    attackers = {x: af.attackers(x) for x in order}
    hits = {x: af.attacked_by(x) for x in order}
    found: list[frozenset[str]] = []

    def search(i: int, chosen: frozenset[str]) -> None:
        if i == len(order):
            # conflict-free by construction; check defence
            countered = _union(hits, chosen)
            if all(attackers[x] <= countered for x in chosen):
                found.append(chosen)
            return
        x = order[i]
        if x not in hits[x] and not (hits[x] & chosen) and not (attackers[x] & chosen):
            search(i + 1, chosen | {x})
        search(i + 1, chosen)

    search(0, frozenset())
    return found


def _union(hits: dict[str, set[str]], chosen: frozenset[str]) -> set[str]:
    out: set[str] = set()
    for x in chosen:
        out |= hits[x]
    return out


def preferred_extensions(af: AbstractFramework) -> set[frozenset[str]]:
    """Subset-maximal admissible sets.  Never empty."""
    adm = sorted(admissible_sets(af), key=len, reverse=True)
    maximal: list[frozenset[str]] = []
    for s in adm:
        if not any(s < m for m in maximal):
            maximal.append(s)
    return set(maximal)


def grounded_extension(af: AbstractFramework) -> frozenset[str]:
    current: frozenset[str] = frozenset()
    while True:
        nxt = frozenset(x for x in af.arguments if defends(af, current, x))
        if nxt == current:
            return current
        current = nxt


def derive_af(graph: ArgumentGraph) -> AbstractFramework:
    """Attack relation from undermining and rebuttal between graph arguments.

    ``a`` attacks ``b`` when ``a`` concludes the complement of one of ``b``'s
    premises, when both conclude the same statement in opposite directions, or
    when they conclude complementary statements in the same direction.
    """
    report = validate(graph)
    if not report.ok:
        raise InvalidGraph(report)
    args = graph.arguments
    attacks = set()
    for a in args.values():
        comp = graph.complement(a.conclusion)
        for b in args.values():
            if a.id == b.id:
                continue
            undermines = comp is not None and comp in b.premise_statements()
            rebuts = (a.conclusion == b.conclusion and a.direction is not b.direction) or (
                comp is not None and comp == b.conclusion and a.direction is b.direction
            )
            if undermines or rebuts:
                attacks.add((a.id, b.id))
    return AbstractFramework(frozenset(args), frozenset(attacks))
