"""Statement acceptability over an argument graph.

Statements are decided one complement pair at a time, in topological order.
Arguments pro ``s`` and arguments con ``-s`` both count in favour of ``s``
(and symmetrically against it), so a pair always ends up with opposite
statuses: accepted/rejected, rejected/accepted, or undecided/undecided.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum

from inventio.errors import (
    IncoherentAudience,
    InvalidGraph,
    NotDecided,
    UnknownStatement,
    UnresolvedPremise,
)
from inventio.model import (
    Argument,
    ArgumentGraph,
    Direction,
    PremiseKind,
    Statement,
    topological_order,
    validate,
)


class Status(str, Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    UNDECIDED = "undecided"

    @property
    def flipped(self) -> Status:
        if self is Status.ACCEPTED:
            return Status.REJECTED
        if self is Status.REJECTED:
            return Status.ACCEPTED
        return Status.UNDECIDED


class ProofStandard(str, Enum):
    SCINTILLA = "scintilla"
    PREPONDERANCE = "preponderance"


@dataclass(frozen=True)
class Audience:
    accepted: frozenset[str] = frozenset()
    rejected: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "accepted", frozenset(self.accepted))
        object.__setattr__(self, "rejected", frozenset(self.rejected))
        both = self.accepted & self.rejected
        if both:
            raise IncoherentAudience(f"statements both accepted and rejected: {sorted(both)}")

    def restrict(self, ids: Iterable[str]) -> Audience:
        ids = set(ids)
        return Audience(self.accepted & ids, self.rejected & ids)

    def check_against(self, graph: ArgumentGraph) -> None:
        unknown = (self.accepted | self.rejected) - graph.statements.keys()
        if unknown:
            raise UnknownStatement(f"audience names unknown statements {sorted(unknown)}")
        for group, label in ((self.accepted, "accepted"), (self.rejected, "rejected")):
            for sid in group:
                comp = graph.complement(sid)
                if comp is not None and comp in group:
                    raise IncoherentAudience(f"{sid!r} and its complement {comp!r} are both {label}")


@dataclass(frozen=True)
class Labeling:
    statement_status: Mapping[str, Status]
    argument_applicable: Mapping[str, bool]
    audience: Audience = field(default_factory=Audience)
    standard: ProofStandard = ProofStandard.PREPONDERANCE

    def __getitem__(self, sid: str) -> Status:
        return self.statement_status[sid]


def is_applicable(graph: ArgumentGraph, statuses: Mapping[str, Status], argument_id: str) -> bool:
    """Ordinary premises must be accepted, assumptions not rejected, exceptions not accepted."""
    arg = graph.arguments[argument_id]
    for p in arg.premises:
        if p.statement not in statuses:
            raise UnresolvedPremise(f"premise {p.statement!r} of {argument_id!r} has no status yet")
        st = statuses[p.statement]
        if p.kind is PremiseKind.ORDINARY and st is not Status.ACCEPTED:
            return False
        if p.kind is PremiseKind.ASSUMPTION and st is Status.REJECTED:
            return False
        if p.kind is PremiseKind.EXCEPTION and st is Status.ACCEPTED:
            return False
    return True


def _sides(graph: ArgumentGraph, sid: str) -> tuple[list[Argument], list[Argument]]:
    """Arguments counting for and against ``sid`` once its complement is folded in."""
    pro: list[Argument] = []
    con: list[Argument] = []
    comp = graph.complement(sid)
    for a in graph.arguments.values():
        if a.conclusion == sid:
            (pro if a.direction is Direction.PRO else con).append(a)
        elif comp is not None and a.conclusion == comp:
            (con if a.direction is Direction.PRO else pro).append(a)
    return pro, con


def _weigh(pro: list[float], con: list[float], standard: ProofStandard) -> Status:
    if standard is ProofStandard.SCINTILLA:
        # any support suffices, but support on both sides leaves the pair open
        if pro and not con:
            return Status.ACCEPTED
        if con and not pro:
            return Status.REJECTED
        return Status.UNDECIDED
    best_pro = max(pro, default=float("-inf"))
    best_con = max(con, default=float("-inf"))
    if pro and best_pro > best_con:
        return Status.ACCEPTED
    if con and best_pro < best_con:
        return Status.REJECTED
    return Status.UNDECIDED


def evaluate(
    graph: ArgumentGraph,
    audience: Audience | None = None,
    standard: ProofStandard | str = ProofStandard.PREPONDERANCE,
) -> Labeling:
    audience = audience or Audience()
    standard = ProofStandard(standard)
    report = validate(graph)
    if not report.ok:
        raise InvalidGraph(report)
    audience.check_against(graph)

    statuses: dict[str, Status] = {}
    applicable: dict[str, bool] = {}
    for node in topological_order(graph):
        if node in graph.arguments:
            applicable[node] = is_applicable(graph, statuses, node)
            continue
        if node in statuses:  # decided together with its complement
            continue
        comp = graph.complement(node)
        if node in audience.accepted or (comp is not None and comp in audience.rejected):
            status = Status.ACCEPTED
        elif node in audience.rejected or (comp is not None and comp in audience.accepted):
            status = Status.REJECTED
        else:
            pro, con = _sides(graph, node)
            status = _weigh(
                [a.weight for a in pro if applicable[a.id]],
                [a.weight for a in con if applicable[a.id]],
                standard,
            )
        statuses[node] = status
        if comp is not None:
            statuses[comp] = status.flipped
    return Labeling(statuses, applicable, audience, standard)


def _decided_by_audience(graph: ArgumentGraph, audience: Audience, sid: str) -> str | None:
    """The member of ``sid``'s pair the audience took a position on, if any."""
    if sid in audience.accepted or sid in audience.rejected:
        return sid
    comp = graph.complement(sid)
    if comp is not None and (comp in audience.accepted or comp in audience.rejected):
        return comp
    return None


def proof_subgraph(graph: ArgumentGraph, labeling: Labeling, sid: str) -> ArgumentGraph:
    """Smallest support for the status of ``sid``.

    For each decided statement keep only the strongest applicable argument on
    the winning side, then recurse into its ordinary premises.  Assumption and
    exception premises are kept as bare nodes: with nothing arguing about them
    they come out undecided, which is enough for the argument to stay
    applicable.
    """
    if sid not in graph.statements:
        raise UnknownStatement(f"unknown statement {sid!r}")
    if labeling[sid] is Status.UNDECIDED:
        raise NotDecided(f"statement {sid!r} is undecided; there is nothing to prove")

    keep_statements: set[str] = set()
    keep_arguments: set[str] = set()
    supported: set[str] = set()

    def support(s: str) -> None:
        keep_statements.add(s)
        if s in supported:
            return
        supported.add(s)
        decider = _decided_by_audience(graph, labeling.audience, s)
        if decider is not None:
            keep_statements.add(decider)
            return
        pro, con = _sides(graph, s)
        side = pro if labeling[s] is Status.ACCEPTED else con
        candidates = sorted((a for a in side if labeling.argument_applicable[a.id]), key=lambda a: a.id)
        best = max(candidates, key=lambda a: a.weight)  # first of equals: smallest id
        keep_arguments.add(best.id)
        keep_statements.add(best.conclusion)
        for p in best.premises:
            keep_statements.add(p.statement)
            if p.kind is PremiseKind.ORDINARY:
                support(p.statement)

    support(sid)

    statements: dict[str, Statement] = {}
    for s in sorted(keep_statements):
        orig = graph.statements[s]
        comp = orig.complement_of if orig.complement_of in keep_statements else None
        statements[s] = Statement(orig.id, orig.text, comp)
    arguments = {a: graph.arguments[a] for a in sorted(keep_arguments)}
    return ArgumentGraph(statements, arguments).freeze()
