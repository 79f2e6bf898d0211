"""Reading and writing case files.

A case file is a YAML (or JSON) document with one top-level mapping::

    format_version: 1
    statements:   [{id, text}]
    complements:  [{id, of, text}]          # declares -of as a new node
    arguments:    [{id, conclusion, direction, premises: [{statement, kind}], weight}]
    audience:     {accepted: [ids], rejected: [ids]}
    pleadings:
      agents: {claimant: name, defendant: name}
      items:
        - id: n1
          description: ...
          proposals: [{id, agent: claimant|defendant, conclusion, grounds: [ids]}]
    award:                                   # optional
      items: [{item, conclusion, grounds, public_issue, parties_consulted, addressed: [proposal ids]}]

Unknown keys are rejected.  Every diagnostic names the line and column of
the offending node.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import yaml
from yaml.nodes import MappingNode, Node, ScalarNode, SequenceNode

from inventio.carneades import Audience
from inventio.errors import ArgumentationError, InvalidWeight, UnknownStatement
from inventio.model import DEFAULT_WEIGHT, ArgumentGraph, Direction, Premise, PremiseKind
from inventio.pleadings import (
    Agent,
    Award,
    AwardItem,
    PleadingsRecord,
    Proposal,
    Role,
    Solution,
)

FORMAT_VERSION = 1


class CaseFileError(ArgumentationError):
    def __init__(self, message: str, node: Node | None = None, line: int | None = None, column: int | None = None):
        if node is not None:
            line, column = node.start_mark.line + 1, node.start_mark.column + 1
        self.line = line
        self.column = column
        self.message = message
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class CaseSyntaxError(CaseFileError):
    pass


class SchemaError(CaseFileError):
    pass


class CaseReferenceError(CaseFileError):
    pass


class DomainError(CaseFileError):
    pass


@dataclass
class CaseFile:
    graph: ArgumentGraph
    audience: Audience
    record: PleadingsRecord
    award: Award | None = None
    format_version: int = FORMAT_VERSION


# -- node helpers -----------------------------------------------------------------


def _mapping(node: Node, what: str, required: set[str], optional: set[str] = frozenset()) -> dict[str, Node]:
    if not isinstance(node, MappingNode):
        raise SchemaError(f"{what} must be a mapping", node)
    out: dict[str, Node] = {}
    for key_node, value in node.value:
        key = key_node.value if isinstance(key_node, ScalarNode) else None
        if key not in required | optional:
            raise SchemaError(f"unknown key {key!r} in {what}", key_node)
        if key in out:
            raise SchemaError(f"duplicate key {key!r} in {what}", key_node)
        out[key] = value
    missing = sorted(required - out.keys())
    if missing:
        raise SchemaError(f"{what} is missing {', '.join(repr(m) for m in missing)}", node)
    return out


def _sequence(node: Node, what: str) -> list[Node]:
    if isinstance(node, ScalarNode) and node.tag == "tag:yaml.org,2002:null":
        return []
    if not isinstance(node, SequenceNode):
        raise SchemaError(f"{what} must be a list", node)
    return list(node.value)


def _text(node: Node, what: str) -> str:
    if not isinstance(node, ScalarNode):
        raise SchemaError(f"{what} must be a scalar", node)
    if node.tag == "tag:yaml.org,2002:null":
        return ""
    return node.value


def _ident(node: Node, what: str) -> str:
    value = _text(node, what)
    if not value:
        raise SchemaError(f"{what} must be a non-empty identifier", node)
    return value


def _bool(node: Node, what: str) -> bool:
    if not isinstance(node, ScalarNode) or node.tag != "tag:yaml.org,2002:bool":
        raise SchemaError(f"{what} must be true or false", node)
    return node.value.lower() in {"true", "yes", "on", "y"}


def _number(node: Node, what: str) -> float:
    if not isinstance(node, ScalarNode) or node.tag not in {"tag:yaml.org,2002:int", "tag:yaml.org,2002:float"}:
        raise SchemaError(f"{what} must be a number", node)
    return float(yaml.safe_load(node.value))


def _choice(node: Node, what: str, enum):
    value = _text(node, what)
    try:
        return enum(value)
    except ValueError:
        options = ", ".join(e.value for e in enum)
        raise SchemaError(f"{what} must be one of {options}; got {value!r}", node) from None


def _ref(node: Node, known, what: str) -> str:
    value = _ident(node, what)
    if value not in known:
        raise CaseReferenceError(f"{what} refers to unknown id {value!r}", node)
    return value


# -- parsing ----------------------------------------------------------------------


def parse_case_file(data: bytes | str) -> CaseFile:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CaseSyntaxError(f"input is not UTF-8: {exc}") from None
    try:
        root = yaml.compose(data, Loader=yaml.SafeLoader)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        line, col = (mark.line + 1, mark.column + 1) if mark else (None, None)
        raise CaseSyntaxError(exc.problem or str(exc), line=line, column=col) from None
    except yaml.YAMLError as exc:
        raise CaseSyntaxError(str(exc)) from None
    if root is None:
        raise SchemaError("empty document; expected format_version, statements, complements, "
                          "arguments, audience and pleadings", line=1, column=1)

    top = _mapping(
        root,
        "case file",
        {"format_version", "statements", "complements", "arguments", "audience", "pleadings"},
        {"award"},
    )
    version_node = top["format_version"]
    if not isinstance(version_node, ScalarNode) or version_node.tag != "tag:yaml.org,2002:int":
        raise SchemaError("format_version must be an integer", version_node)
    version = int(version_node.value)
    if version != FORMAT_VERSION:
        raise SchemaError(f"unsupported format_version {version}; this reader handles {FORMAT_VERSION}", version_node)

    graph = ArgumentGraph()
    for node in _sequence(top["statements"], "statements"):
        fields = _mapping(node, "statement", {"id", "text"})
        sid = _ident(fields["id"], "statement id")
        _add_node(graph, sid, _text(fields["text"], "statement text"), fields["id"])

    for node in _sequence(top["complements"], "complements"):
        fields = _mapping(node, "complement", {"id", "of", "text"})
        of = _ref(fields["of"], graph.statements, "complement 'of'")
        sid = _ident(fields["id"], "complement id")
        _add_node(graph, sid, _text(fields["text"], "complement text"), fields["id"])
        _graph_call(graph.link_complement, node, of, sid)

    for node in _sequence(top["arguments"], "arguments"):
        fields = _mapping(node, "argument", {"id", "conclusion", "direction"}, {"premises", "weight"})
        aid = _ident(fields["id"], "argument id")
        concl = _ref(fields["conclusion"], graph.statements, f"conclusion of {aid!r}")
        direction = _choice(fields["direction"], f"direction of {aid!r}", Direction)
        premises = []
        for pnode in _sequence(fields["premises"], "premises") if "premises" in fields else []:
            pf = _mapping(pnode, "premise", {"statement"}, {"kind"})
            stmt = _ref(pf["statement"], graph.statements, f"premise of {aid!r}")
            kind = _choice(pf["kind"], "premise kind", PremiseKind) if "kind" in pf else PremiseKind.ORDINARY
            premises.append(Premise(stmt, kind))
        weight = DEFAULT_WEIGHT
        if "weight" in fields:
            weight = _number(fields["weight"], f"weight of {aid!r}")
            if not 0.0 <= weight <= 1.0:
                raise DomainError(f"argument {aid!r} has weight {weight} outside [0, 1]", fields["weight"])
        if aid in graph.statements or aid in graph.arguments:
            raise SchemaError(f"duplicate id {aid!r}", fields["id"])
        _graph_call(graph.add_argument, node, concl, direction, premises, weight, id=aid)

    aud = _mapping(top["audience"], "audience", set(), {"accepted", "rejected"})
    accepted = [_ref(n, graph.statements, "audience entry") for n in _sequence(aud.get("accepted", _null()), "accepted")]
    rejected = [_ref(n, graph.statements, "audience entry") for n in _sequence(aud.get("rejected", _null()), "rejected")]
    try:
        audience = Audience(frozenset(accepted), frozenset(rejected))
        audience.check_against(graph)
    except ArgumentationError as exc:
        raise DomainError(str(exc), top["audience"]) from None

    try:
        graph.freeze()
    except ArgumentationError as exc:
        raise DomainError(str(exc), root) from None

    record, proposal_ids = _parse_pleadings(top["pleadings"], graph)
    award = _parse_award(top["award"], record, proposal_ids) if "award" in top else None
    return CaseFile(graph, audience, record, award, version)


def _null() -> ScalarNode:
    return ScalarNode("tag:yaml.org,2002:null", "")


def _add_node(graph: ArgumentGraph, sid: str, text: str, node: Node) -> None:
    if sid in graph.statements or sid in graph.arguments:
        raise SchemaError(f"duplicate id {sid!r}", node)
    graph.add_statement(text, id=sid)


def _graph_call(fn, node: Node, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except InvalidWeight as exc:
        raise DomainError(str(exc), node) from None
    except UnknownStatement as exc:
        raise CaseReferenceError(str(exc), node) from None
    except ArgumentationError as exc:
        raise DomainError(str(exc), node) from None


def _solution(fields: dict[str, Node], graph: ArgumentGraph, node: Node, what: str) -> Solution:
    concl = _ref(fields["conclusion"], graph.statements, f"conclusion of {what}")
    grounds = [_ref(n, graph.statements, f"ground of {what}") for n in _sequence(fields["grounds"], "grounds")]
    if not grounds:
        raise DomainError(f"{what} has an empty set of grounds", fields["grounds"])
    try:
        return Solution(concl, frozenset(grounds))
    except ArgumentationError as exc:
        raise DomainError(str(exc), node) from None


def _parse_pleadings(node: Node, graph: ArgumentGraph) -> tuple[PleadingsRecord, dict[str, Proposal]]:
    fields = _mapping(node, "pleadings", {"agents", "items"})
    agents = _mapping(fields["agents"], "agents", {"claimant", "defendant"})
    claimant = Agent(_ident(agents["claimant"], "claimant"), Role.CLAIMANT)
    defendant = Agent(_ident(agents["defendant"], "defendant"), Role.DEFENDANT)
    record = PleadingsRecord(graph, claimant, defendant)
    by_role = {Role.CLAIMANT: claimant, Role.DEFENDANT: defendant}
    proposal_ids: dict[str, Proposal] = {}
    for item_node in _sequence(fields["items"], "items"):
        item = _mapping(item_node, "item", {"id"}, {"description", "proposals"})
        item_id = _ident(item["id"], "item id")
        if item_id in record.items:
            raise SchemaError(f"duplicate item id {item_id!r}", item["id"])
        record.add_item(item_id, _text(item["description"], "description") if "description" in item else "")
        for pnode in _sequence(item.get("proposals", _null()), "proposals"):
            pf = _mapping(pnode, "proposal", {"id", "agent", "conclusion", "grounds"})
            pid = _ident(pf["id"], "proposal id")
            if pid in proposal_ids:
                raise SchemaError(f"duplicate proposal id {pid!r}", pf["id"])
            role = _choice(pf["agent"], "proposal agent", Role)
            if role is Role.ARBITRATOR:
                raise DomainError("arbitrators do not plead", pf["agent"])
            solution = _solution(pf, graph, pnode, f"proposal {pid!r}")
            proposal_ids[pid] = _graph_call(record.record_proposal, pnode, by_role[role], item_id, solution)
    return record, proposal_ids


def _parse_award(node: Node, record: PleadingsRecord, proposal_ids: dict[str, Proposal]) -> Award:
    fields = _mapping(node, "award", {"items"})
    items = []
    seen = set()
    for item_node in _sequence(fields["items"], "award items"):
        f = _mapping(
            item_node,
            "award item",
            {"item", "conclusion", "grounds"},
            {"public_issue", "parties_consulted", "addressed", "description"},
        )
        item_id = _ident(f["item"], "award item")
        if item_id in seen:
            raise SchemaError(f"item {item_id!r} decided twice", f["item"])
        seen.add(item_id)
        public = _bool(f["public_issue"], "public_issue") if "public_issue" in f else False
        if item_id not in record.items and not public:
            raise CaseReferenceError(
                f"award item {item_id!r} is not a pleaded item (only public issues may be raised by the tribunal)",
                f["item"],
            )
        addressed = [
            proposal_ids[_ref(n, proposal_ids, "addressed proposal")]
            for n in _sequence(f.get("addressed", _null()), "addressed")
        ]
        items.append(
            AwardItem(
                item_id,
                _solution(f, record.graph, item_node, f"award item {item_id!r}"),
                public_issue=public,
                parties_consulted=_bool(f["parties_consulted"], "parties_consulted") if "parties_consulted" in f else False,
                addressed=frozenset(addressed),
                description=_text(f["description"], "description") if "description" in f else "",
            )
        )
    return Award(tuple(items))


def load_case_file(path: str | Path) -> CaseFile:
    return parse_case_file(Path(path).read_bytes())


# -- serialization ----------------------------------------------------------------


def to_document(case: CaseFile) -> dict:
    graph = case.graph
    statements, complements = [], []
    placed: set[str] = set()
    for sid, s in graph.statements.items():
        if s.complement_of is not None and s.complement_of in placed:
            complements.append({"id": sid, "of": s.complement_of, "text": s.text})
        else:
            statements.append({"id": sid, "text": s.text})
        placed.add(sid)

    arguments = []
    for aid, a in graph.arguments.items():
        arguments.append(
            {
                "id": aid,
                "conclusion": a.conclusion,
                "direction": a.direction.value,
                "premises": [{"statement": p.statement, "kind": p.kind.value} for p in sorted(a.premises)],
                "weight": a.weight,
            }
        )

    record = case.record
    pid_of: dict[Proposal, str] = {p: f"p{i}" for i, p in enumerate(record.proposals, 1)}
    items = []
    for item_id, item in record.items.items():
        items.append(
            {
                "id": item_id,
                "description": item.description,
                "proposals": [
                    {
                        "id": pid_of[p],
                        "agent": p.agent.role.value,
                        "conclusion": p.solution.conclusion,
                        "grounds": sorted(p.solution.grounds),
                    }
                    for p in record.proposals_for(item_id)
                ],
            }
        )

    doc = {
        "format_version": case.format_version,
        "statements": statements,
        "complements": complements,
        "arguments": arguments,
        "audience": {"accepted": sorted(case.audience.accepted), "rejected": sorted(case.audience.rejected)},
        "pleadings": {
            "agents": {"claimant": record.claimant.name, "defendant": record.defendant.name},
            "items": items,
        },
    }
    if case.award is not None:
        doc["award"] = {
            "items": [
                {
                    "item": ai.item,
                    "description": ai.description,
                    "conclusion": ai.decision.conclusion,
                    "grounds": sorted(ai.decision.grounds),
                    "public_issue": ai.public_issue,
                    "parties_consulted": ai.parties_consulted,
                    "addressed": sorted(pid_of[p] for p in ai.addressed),
                }
                for ai in case.award.items
            ]
        }
    return doc


def serialize_case_file(case: CaseFile) -> str:
    return yaml.safe_dump(to_document(case), sort_keys=False, allow_unicode=True, width=100)
