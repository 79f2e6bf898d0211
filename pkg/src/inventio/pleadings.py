"""Pleadings records, justification regimes and the arbitrator's search space.

Two parties put solutions on the record: a claimant and a defendant each
propose, per dispositive item, a conclusion backed by a nonempty set of
grounds.  The arbitrator's decision on an item is checked against one of four
regimes, which bound the decided conclusion, its grounds, both, or neither,
by what the parties pleaded.  Independently of the regime, the ``inv-star``
mode vetoes grounds no party put forward, while ``inv`` lets the arbitrator
add reasons of their own.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

from inventio.errors import (
    ArbitratorCannotPlead,
    DuplicateAwardItem,
    InvalidSolution,
    NoProposals,
    PleadingsError,
    UniverseMismatch,
    UnknownAgent,
    UnknownItem,
    UnknownStatement,
)
from inventio.model import ArgumentGraph


class Role(str, Enum):
    CLAIMANT = "claimant"
    DEFENDANT = "defendant"
    ARBITRATOR = "arbitrator"


@dataclass(frozen=True)
class Agent:
    name: str
    role: Role

    def __post_init__(self) -> None:
        object.__setattr__(self, "role", Role(self.role))


@dataclass(frozen=True)
class DispositiveItem:
    id: str
    description: str = ""


def _fmt_set(ids: Iterable[str]) -> str:
    return "{" + ", ".join(sorted(ids)) + "}"


@dataclass(frozen=True)
class Solution:
    """A conclusion backed by a nonempty set of grounds."""

    conclusion: str
    grounds: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "grounds", frozenset(self.grounds))
        if not self.grounds:
            raise InvalidSolution(f"solution for {self.conclusion!r} has no grounds")
        if self.conclusion in self.grounds:
            raise InvalidSolution(f"{self.conclusion!r} cannot be one of its own grounds")

    def statements(self) -> set[str]:
        return {self.conclusion, *self.grounds}

    def __str__(self) -> str:
        return f"{_fmt_set(self.grounds)} > {self.conclusion}"


@dataclass(frozen=True)
class Proposal:
    agent: Agent
    item: str
    solution: Solution

    def __str__(self) -> str:
        return f"prop({self.agent.role.value}, {self.solution}) on {self.item}"


@dataclass
class PleadingsRecord:
    graph: ArgumentGraph
    claimant: Agent
    defendant: Agent
    items: dict[str, DispositiveItem] = field(default_factory=dict)
    proposals: list[Proposal] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.claimant.role is not Role.CLAIMANT:
            raise UnknownAgent(f"{self.claimant.name!r} is not a claimant")
        if self.defendant.role is not Role.DEFENDANT:
            raise UnknownAgent(f"{self.defendant.name!r} is not a defendant")

    @property
    def agents(self) -> tuple[Agent, Agent]:
        return self.claimant, self.defendant

    def add_item(self, item_id: str, description: str = "") -> DispositiveItem:
        if item_id in self.items:
            raise PleadingsError(f"dispositive item {item_id!r} already declared")
        item = DispositiveItem(item_id, description)
        self.items[item_id] = item
        return item

    def record_proposal(self, agent: Agent, item: str, solution: Solution) -> Proposal:
        if agent.role is Role.ARBITRATOR:
            raise ArbitratorCannotPlead(f"{agent.name!r} is an arbitrator; arbitrators do not plead")
        if agent not in self.agents:
            raise UnknownAgent(f"{agent.name!r} is not a party to this record")
        if item not in self.items:
            raise UnknownItem(f"unknown dispositive item {item!r}")
        missing = solution.statements() - self.graph.statements.keys()
        if missing:
            raise UnknownStatement(f"solution references unknown statements {sorted(missing)}")
        proposal = Proposal(agent, item, solution)
        if proposal not in self.proposals:
            self.proposals.append(proposal)
        return proposal

    def proposals_for(self, item: str) -> list[Proposal]:
        return [p for p in self.proposals if p.item == item]


# -- the party search space ------------------------------------------------------


@dataclass(frozen=True)
class SearchPoint:
    item: str
    solution: Solution
    proposers: frozenset[Agent]


def party_search_space(record: PleadingsRecord) -> frozenset[SearchPoint]:
    """The finite set of party-proposed solutions, each with its proposers."""
    by_key: dict[tuple[str, Solution], set[Agent]] = {}
    for p in record.proposals:
        by_key.setdefault((p.item, p.solution), set()).add(p.agent)
    return frozenset(SearchPoint(item, sol, frozenset(agents)) for (item, sol), agents in by_key.items())


class InventioMode(str, Enum):
    INV = "inv"
    INV_STAR = "inv-star"


@dataclass(frozen=True)
class DecisionTemplate:
    """One point of the decision space for an item.

    When ``open`` is set the template stands for ``grounds`` plus any further
    reasons the arbitrator adds, so it admits every decision on ``conclusion``.
    """

    conclusion: str
    grounds: frozenset[str]
    open: bool = False

    def admits(self, decision: Solution) -> bool:
        if decision.conclusion != self.conclusion:
            return False
        return self.open or decision.grounds == self.grounds

    def __str__(self) -> str:
        grounds = _fmt_set(self.grounds) + (" + R" if self.open else "")
        return f"{grounds} > {self.conclusion}"


def _grounds_by_conclusion(proposals: Iterable[Proposal]) -> dict[str, set[str]]:
    out: dict[str, set[str]] = {}
    for p in proposals:
        out.setdefault(p.solution.conclusion, set()).update(p.solution.grounds)
    return out


def enumerate_decisions(record: PleadingsRecord, item: str, mode: InventioMode | str) -> frozenset[DecisionTemplate]:
    mode = InventioMode(mode)
    props = record.proposals_for(item)
    if not props:
        raise NoProposals(f"no party proposed anything for item {item!r}")
    pool = _grounds_by_conclusion(props)
    if mode is InventioMode.INV:
        return frozenset(DecisionTemplate(c, frozenset(g), open=True) for c, g in pool.items())
    out = set()
    for c, grounds in pool.items():
        ordered = sorted(grounds)
        for r in range(1, len(ordered) + 1):
            for combo in itertools.combinations(ordered, r):
                out.add(DecisionTemplate(c, frozenset(combo)))
    return frozenset(out)


# -- awards and compliance ------------------------------------------------------


class Regime(str, Enum):
    BOUND_BOTH = "bound-both"
    BOUND_CONCLUSION = "bound-conclusion"
    BOUND_PREMISES = "bound-premises"
    UNBOUND = "unbound"


@dataclass(frozen=True)
class AwardItem:
    item: str
    decision: Solution
    public_issue: bool = False
    parties_consulted: bool = False
    addressed: frozenset[Proposal] = frozenset()
    description: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "addressed", frozenset(self.addressed))


@dataclass(frozen=True)
class Award:
    items: tuple[AwardItem, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))
        ids = [i.item for i in self.items]
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        if dupes:
            raise DuplicateAwardItem(f"award decides items {dupes} more than once")

    def without(self, item: str) -> Award:
        return Award(tuple(i for i in self.items if i.item != item))


class ViolationKind(str, Enum):
    ULTRA_PETITA = "ultra-petita"
    CITRA_PETITA = "citra-petita"
    NEW_GROUND = "new-ground"
    PUBLIC_ISSUE_WITHOUT_CONSULTATION = "public-issue-without-consultation"


@dataclass(frozen=True)
class ComplianceViolation:
    kind: ViolationKind
    item: str
    detail: str


@dataclass(frozen=True)
class UnaddressedArgument:
    item: str
    proposal: Proposal


@dataclass(frozen=True)
class ComplianceReport:
    violations: tuple[ComplianceViolation, ...] = ()
    warnings: tuple[UnaddressedArgument, ...] = ()

    @property
    def compliant(self) -> bool:
        return not self.violations

    def kinds(self) -> list[ViolationKind]:
        return [v.kind for v in self.violations]

    def for_item(self, item: str) -> list[ComplianceViolation]:
        return [v for v in self.violations if v.item == item]


def _check_universe(award: Award, record: PleadingsRecord) -> None:
    known = record.graph.statements.keys()
    pleaded = set(record.proposals)
    for ai in award.items:
        missing = ai.decision.statements() - known
        if missing:
            raise UniverseMismatch(f"award item {ai.item!r} uses statements {sorted(missing)} not in the record")
        stray = [p for p in ai.addressed if p not in pleaded]
        if stray:
            raise UniverseMismatch(f"award item {ai.item!r} addresses {len(stray)} proposal(s) absent from the record")


def _ultra_petita(ai: AwardItem, record: PleadingsRecord, regime: Regime) -> str | None:
    if ai.item not in record.items:
        return f"item {ai.item!r} was never pleaded"
    solutions = {p.solution for p in record.proposals_for(ai.item)}
    z, grounds = ai.decision.conclusion, ai.decision.grounds
    claimed = z in {s.conclusion for s in solutions}
    if regime is Regime.BOUND_BOTH and ai.decision not in solutions:
        if not claimed:
            return f"conclusion {z!r} was claimed by neither party"
        return f"grounds {_fmt_set(grounds)} differ from every party's grounds for {z!r}"
    if regime is Regime.BOUND_CONCLUSION and not claimed:
        return f"conclusion {z!r} was claimed by neither party"
    if regime is Regime.BOUND_PREMISES and grounds not in {s.grounds for s in solutions}:
        return f"grounds {_fmt_set(grounds)} match no party's set of grounds"
    return None


def check_award(
    award: Award,
    record: PleadingsRecord,
    regime: Regime | str,
    mode: InventioMode | str,
) -> ComplianceReport:
    regime = Regime(regime)
    mode = InventioMode(mode)
    _check_universe(award, record)
    violations: list[ComplianceViolation] = []
    warnings: list[UnaddressedArgument] = []

    for ai in award.items:
        props = record.proposals_for(ai.item)
        if ai.public_issue:
            # arbitrator-raised public issues escape the party bounds but need consultation
            if not ai.parties_consulted:
                violations.append(
                    ComplianceViolation(
                        ViolationKind.PUBLIC_ISSUE_WITHOUT_CONSULTATION,
                        ai.item,
                        "public issue decided without consulting the parties",
                    )
                )
        elif regime is not Regime.UNBOUND:
            detail = _ultra_petita(ai, record, regime)
            if detail:
                violations.append(ComplianceViolation(ViolationKind.ULTRA_PETITA, ai.item, detail))
            if mode is InventioMode.INV_STAR:
                pool = _grounds_by_conclusion(props)
                basis = pool.get(ai.decision.conclusion)
                if basis is None:
                    basis = set().union(*pool.values()) if pool else set()
                new = ai.decision.grounds - basis
                if new:
                    violations.append(
                        ComplianceViolation(
                            ViolationKind.NEW_GROUND,
                            ai.item,
                            f"grounds {_fmt_set(new)} were not pleaded by either party",
                        )
                    )
        for p in props:
            if p not in ai.addressed:
                warnings.append(UnaddressedArgument(ai.item, p))

    decided = {ai.item for ai in award.items}
    for item_id in record.items:
        if item_id not in decided:
            violations.append(
                ComplianceViolation(ViolationKind.CITRA_PETITA, item_id, f"item {item_id!r} was left undecided")
            )
    return ComplianceReport(tuple(violations), tuple(warnings))


# -- justification patterns -----------------------------------------------------


class PatternLabel(str, Enum):
    SHARED_ARGUMENT_ADOPTED = "shared-argument-adopted"
    NEW_ARGUMENT_PUBLIC_ISSUE = "new-argument-public-issue"
    WHOLE_PARTY_ARGUMENT_ADOPTED = "whole-party-argument-adopted"
    CONSENSUS_ADOPTED = "consensus-adopted"
    CONCLUSION_KEPT_PREMISE_REPLACED = "conclusion-kept-premise-replaced"
    PREMISE_KEPT_CONCLUSION_SWITCHED = "premise-kept-conclusion-switched"

    @property
    def finding(self) -> int:
        return _FINDING[self]


_FINDING = {
    PatternLabel.SHARED_ARGUMENT_ADOPTED: 1,
    PatternLabel.NEW_ARGUMENT_PUBLIC_ISSUE: 2,
    PatternLabel.WHOLE_PARTY_ARGUMENT_ADOPTED: 3,
    PatternLabel.CONSENSUS_ADOPTED: 4,
    PatternLabel.CONCLUSION_KEPT_PREMISE_REPLACED: 5,
    PatternLabel.PREMISE_KEPT_CONCLUSION_SWITCHED: 6,
}


def classify_pattern(award_item: AwardItem, record: PleadingsRecord) -> PatternLabel | None:
    """Label an award item with the first matching justification pattern.

    Rules are tried in the order 1, 4, 3, 2, 5, 6; ``None`` means no match.
    """
    props = record.proposals_for(award_item.item)
    by_party = {
        Role.CLAIMANT: [p.solution for p in props if p.agent.role is Role.CLAIMANT],
        Role.DEFENDANT: [p.solution for p in props if p.agent.role is Role.DEFENDANT],
    }
    alpha, beta = by_party[Role.CLAIMANT], by_party[Role.DEFENDANT]
    d = award_item.decision
    z, grounds = d.conclusion, d.grounds
    pool = _grounds_by_conclusion(props)

    # 1: both parties ran the very same argument and the tribunal took it
    if d in alpha and d in beta:
        return PatternLabel.SHARED_ARGUMENT_ADOPTED

    # 4: parties agree on the conclusion; tribunal adds nothing of its own
    agreed = {s.conclusion for s in alpha} & {s.conclusion for s in beta}
    if z in agreed and grounds <= pool[z]:
        return PatternLabel.CONSENSUS_ADOPTED

    # 3: one party's whole argument, whose grounds the other party did not share
    for mine, theirs in ((alpha, beta), (beta, alpha)):
        if d in mine and grounds not in {s.grounds for s in theirs}:
            return PatternLabel.WHOLE_PARTY_ARGUMENT_ADOPTED

    # 2: an arbitrator-raised public issue with an argument of its own
    all_grounds = set().union(*pool.values()) if pool else set()
    if award_item.public_issue and (z not in pool or not grounds <= all_grounds):
        return PatternLabel.NEW_ARGUMENT_PUBLIC_ISSUE

    # 5: a party's conclusion kept, its grounds swapped for disjoint ones
    if not award_item.public_issue:
        for party in (alpha, beta):
            own = set().union(*(s.grounds for s in party if s.conclusion == z))
            if any(s.conclusion == z for s in party) and not (grounds & own):
                return PatternLabel.CONCLUSION_KEPT_PREMISE_REPLACED

    # 6: grounds both parties shared, conclusion of only one of them
    for x in alpha:
        for y in beta:
            if x.grounds == y.grounds == grounds and x.conclusion != y.conclusion and z in (x.conclusion, y.conclusion):
                return PatternLabel.PREMISE_KEPT_CONCLUSION_SWITCHED
    return None
