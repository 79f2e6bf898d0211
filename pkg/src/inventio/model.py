"""Statements, premises, arguments and the argument graph that links them.

A graph is built append-only through :meth:`ArgumentGraph.add_statement`,
:meth:`ArgumentGraph.link_complement` and :meth:`ArgumentGraph.add_argument`,
then frozen.  A statement and its complement are two nodes joined by a
symmetric link, but for acyclicity they count as a single node: an argument
may not, directly or transitively, derive ``s`` from ``-s`` or vice versa.
"""

from __future__ import annotations

import heapq
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum

from inventio.errors import (
    AlreadyLinked,
    CycleIntroduced,
    CyclicGraph,
    DuplicateId,
    DuplicatePremise,
    GraphFrozen,
    InvalidGraph,
    InvalidWeight,
    SelfComplement,
    UnknownStatement,
)

DEFAULT_WEIGHT = 0.5


class PremiseKind(str, Enum):
    ORDINARY = "ordinary"
    ASSUMPTION = "assumption"
    EXCEPTION = "exception"


class Direction(str, Enum):
    PRO = "pro"
    CON = "con"

    @property
    def opposite(self) -> Direction:
        return Direction.CON if self is Direction.PRO else Direction.PRO


@dataclass(frozen=True)
class Statement:
    id: str
    text: str
    complement_of: str | None = None


@dataclass(frozen=True, order=True)
class Premise:
    statement: str
    kind: PremiseKind = PremiseKind.ORDINARY


def check_weight(value: float) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidWeight(f"weight must be a real number, got {value!r}")
    if math.isnan(value) or not 0.0 <= value <= 1.0:
        raise InvalidWeight(f"weight {value!r} outside [0, 1]")
    return float(value)


@dataclass(frozen=True)
class Argument:
    """A conclusion, a direction and a (possibly empty) set of premises."""

    id: str
    conclusion: str
    direction: Direction
    premises: frozenset[Premise] = frozenset()
    weight: float = DEFAULT_WEIGHT

    def __post_init__(self) -> None:
        object.__setattr__(self, "direction", Direction(self.direction))
        object.__setattr__(self, "premises", frozenset(self.premises))
        object.__setattr__(self, "weight", check_weight(self.weight))

    def premise_statements(self, kind: PremiseKind | None = None) -> set[str]:
        return {p.statement for p in self.premises if kind is None or p.kind is kind}


# Accessors named after the usual c(a), d(a), p(a) notation.
def conclusion(a: Argument) -> str:
    return a.conclusion


def direction(a: Argument) -> Direction:
    return a.direction


def premises(a: Argument) -> frozenset[Premise]:
    return a.premises


# -- validation report --------------------------------------------------------


class ViolationKind(str, Enum):
    CYCLE = "cycle"
    COMPLEMENT_DUPLICATION = "complement-duplication"
    DANGLING_REFERENCE = "dangling-reference"
    ID_COLLISION = "id-collision"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    nodes: tuple[str, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def has(self, kind: ViolationKind) -> bool:
        return any(v.kind is kind for v in self.violations)


# -- the graph ----------------------------------------------------------------


@dataclass
class ArgumentGraph:
    statements: dict[str, Statement] = field(default_factory=dict)
    arguments: dict[str, Argument] = field(default_factory=dict)
    frozen: bool = field(default=False, compare=False)

    # -- construction

    def _fresh_id(self, prefix: str) -> str:
        n = len(self.statements) + len(self.arguments) + 1
        while f"{prefix}{n}" in self.statements or f"{prefix}{n}" in self.arguments:
            n += 1
        return f"{prefix}{n}"

    def _claim_id(self, node_id: str | None, prefix: str) -> str:
        if self.frozen:
            raise GraphFrozen("graph is frozen; build a new one")
        if node_id is None:
            return self._fresh_id(prefix)
        if not isinstance(node_id, str) or not node_id:
            raise DuplicateId(f"node id must be a non-empty string, got {node_id!r}")
        if node_id in self.statements or node_id in self.arguments:
            raise DuplicateId(f"node id {node_id!r} already in use")
        return node_id

    def add_statement(self, text: str, id: str | None = None) -> str:
        sid = self._claim_id(id, "s")
        self.statements[sid] = Statement(sid, text)
        return sid

    def link_complement(self, a: str, b: str) -> None:
        if self.frozen:
            raise GraphFrozen("graph is frozen; build a new one")
        self._require_statement(a)
        self._require_statement(b)
        if a == b:
            raise SelfComplement(f"statement {a!r} cannot be its own complement")
        for sid in (a, b):
            if self.statements[sid].complement_of is not None:
                raise AlreadyLinked(
                    f"statement {sid!r} already has complement "
                    f"{self.statements[sid].complement_of!r}"
                )
        # the pair becomes one node for acyclicity purposes
        if self._reaches(a, {b}) or self._reaches(b, {a}):
            raise CycleIntroduced(f"linking {a!r} and {b!r} closes a cycle")
        sa, sb = self.statements[a], self.statements[b]
        self.statements[a] = Statement(sa.id, sa.text, b)
        self.statements[b] = Statement(sb.id, sb.text, a)

    def add_argument(
        self,
        conclusion: str,
        direction: Direction | str,
        premises: Iterable[Premise | tuple[str, PremiseKind | str]] = (),
        weight: float = DEFAULT_WEIGHT,
        id: str | None = None,
    ) -> str:
        if self.frozen:
            raise GraphFrozen("graph is frozen; build a new one")
        given = [p if isinstance(p, Premise) else Premise(p[0], PremiseKind(p[1])) for p in premises]
        if len(set(given)) != len(given):
            raise DuplicatePremise(f"duplicate premise in argument for {conclusion!r}")
        self._require_statement(conclusion)
        for p in given:
            self._require_statement(p.statement)
        check_weight(weight)
        if self._reaches(conclusion, {p.statement for p in given}):
            raise CycleIntroduced(
                f"argument for {conclusion!r} would close a cycle through its premises"
            )
        aid = self._claim_id(id, "a")
        self.arguments[aid] = Argument(aid, conclusion, Direction(direction), frozenset(given), weight)
        return aid

    def freeze(self) -> ArgumentGraph:
        report = validate(self)
        if not report.ok:
            raise InvalidGraph(report)
        self.frozen = True
        return self

    # -- queries

    def _require_statement(self, sid: str) -> None:
        if sid not in self.statements:
            raise UnknownStatement(f"unknown statement {sid!r}")

    def complement(self, sid: str) -> str | None:
        return self.statements[sid].complement_of

    def pair_key(self, sid: str) -> str:
        """Canonical representative of ``sid``'s complement pair."""
        other = self.statements[sid].complement_of if sid in self.statements else None
        if other is None or other not in self.statements:
            return sid
        return min(sid, other)

    def arguments_concluding(self, sid: str) -> list[Argument]:
        return [a for a in self.arguments.values() if a.conclusion == sid]

    def edges(self) -> Iterator[tuple[str, str]]:
        """Raw premise->argument and argument->conclusion edges."""
        for a in self.arguments.values():
            for p in sorted(a.premises):
                yield p.statement, a.id
            yield a.id, a.conclusion

    def _reaches(self, start: str, targets: set[str]) -> bool:
        # reachability between complement pairs, moving statement -> argument -> conclusion
        goal = {self.pair_key(t) for t in targets}
        start_key = self.pair_key(start)
        if start_key in goal:
            return True
        uses: dict[str, list[str]] = {}
        for a in self.arguments.values():
            for p in a.premises:
                if p.statement in self.statements:
                    uses.setdefault(self.pair_key(p.statement), []).append(a.conclusion)
        seen = {start_key}
        stack = [start_key]
        while stack:
            node = stack.pop()
            for nxt in uses.get(node, ()):
                if nxt not in self.statements:
                    continue
                key = self.pair_key(nxt)
                if key in goal:
                    return True
                if key not in seen:
                    seen.add(key)
                    stack.append(key)
        return False


# -- whole-graph checks ---------------------------------------------------------


def _induced(graph: ArgumentGraph) -> tuple[dict[tuple[str, str], set[tuple[str, str]]], dict]:
    """Digraph over ("s", pair key) and ("a", argument id) nodes."""
    succ: dict[tuple[str, str], set[tuple[str, str]]] = {}
    members: dict[tuple[str, str], list[str]] = {}
    for sid in graph.statements:
        node = ("s", graph.pair_key(sid))
        succ.setdefault(node, set())
        members.setdefault(node, []).append(sid)
    for aid, a in graph.arguments.items():
        node = ("a", aid)
        succ.setdefault(node, set())
        members[node] = [aid]
        if a.conclusion in graph.statements:
            succ[node].add(("s", graph.pair_key(a.conclusion)))
        for p in a.premises:
            if p.statement in graph.statements:
                succ[("s", graph.pair_key(p.statement))].add(node)
    return succ, members


def _kahn(graph: ArgumentGraph) -> tuple[list[str], set[str]]:
    succ, members = _induced(graph)
    indegree = {n: 0 for n in succ}
    for targets in succ.values():
        for t in targets:
            indegree[t] += 1
    heap = [(n[1], n[0]) for n, d in indegree.items() if d == 0]
    heapq.heapify(heap)
    order: list[str] = []
    while heap:
        name, kind = heapq.heappop(heap)
        node = (kind, name)
        order.extend(sorted(members[node]))
        for t in sorted(succ[node]):
            indegree[t] -= 1
            if indegree[t] == 0:
                heapq.heappush(heap, (t[1], t[0]))
    stuck = {m for n, d in indegree.items() if d > 0 for m in members[n]}
    return order, stuck


def validate(graph: ArgumentGraph) -> ValidationReport:
    """Report structural violations; never raises."""
    violations: list[Violation] = []
    warnings: list[str] = []

    for key, s in graph.statements.items():
        if key != s.id:
            violations.append(
                Violation(ViolationKind.DANGLING_REFERENCE, (key,), f"statement keyed {key!r} has id {s.id!r}")
            )
        if not s.text.strip():
            warnings.append(f"statement {key!r} has empty text")
        if s.complement_of is None:
            continue
        if s.complement_of not in graph.statements:
            violations.append(
                Violation(
                    ViolationKind.DANGLING_REFERENCE,
                    (key,),
                    f"statement {key!r} names unknown complement {s.complement_of!r}",
                )
            )
        elif s.complement_of == key:
            violations.append(
                Violation(ViolationKind.COMPLEMENT_DUPLICATION, (key,), f"statement {key!r} is its own complement")
            )
        elif graph.statements[s.complement_of].complement_of != key:
            violations.append(
                Violation(
                    ViolationKind.COMPLEMENT_DUPLICATION,
                    (key, s.complement_of),
                    f"complement link {key!r} -> {s.complement_of!r} is not symmetric",
                )
            )

    # two node pairs standing for the same logical pair (same texts)
    seen_pairs: dict[frozenset[str], tuple[str, str]] = {}
    for key, s in sorted(graph.statements.items()):
        other = s.complement_of
        if other is None or other not in graph.statements or key > other:
            continue
        texts = frozenset({s.text.strip(), graph.statements[other].text.strip()})
        if texts in seen_pairs:
            first = seen_pairs[texts]
            violations.append(
                Violation(
                    ViolationKind.COMPLEMENT_DUPLICATION,
                    (*first, key, other),
                    f"pairs {first} and {(key, other)} encode the same complement pair",
                )
            )
        else:
            seen_pairs[texts] = (key, other)

    for key, a in graph.arguments.items():
        if key != a.id:
            violations.append(
                Violation(ViolationKind.DANGLING_REFERENCE, (key,), f"argument keyed {key!r} has id {a.id!r}")
            )
        if key in graph.statements:
            violations.append(
                Violation(ViolationKind.ID_COLLISION, (key,), f"id {key!r} names both a statement and an argument")
            )
        refs = [a.conclusion, *sorted(a.premise_statements())]
        for ref in refs:
            if ref not in graph.statements:
                violations.append(
                    Violation(
                        ViolationKind.DANGLING_REFERENCE,
                        (key, ref),
                        f"argument {key!r} references unknown statement {ref!r}",
                    )
                )

    _, stuck = _kahn(graph)
    if stuck:
        violations.append(
            Violation(ViolationKind.CYCLE, tuple(sorted(stuck)), f"directed cycle among {sorted(stuck)}")
        )
    return ValidationReport(tuple(violations), tuple(warnings))


def topological_order(graph: ArgumentGraph) -> list[str]:
    """All node ids, each edge source before its target.

    Both members of a complement pair are emitted next to each other.
    Ties are broken by id, so the order is deterministic.
    """
    order, stuck = _kahn(graph)
    if stuck:
        raise CyclicGraph(f"graph has a cycle among {sorted(stuck)}")
    return order
