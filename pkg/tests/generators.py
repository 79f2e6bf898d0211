"""Random instances shared by property and acceptance tests."""

from __future__ import annotations

import random

from inventio import (
    AbstractFramework,
    Agent,
    ArgumentGraph,
    Award,
    AwardItem,
    PleadingsRecord,
    Role,
    Solution,
)
from inventio.errors import CycleIntroduced
from inventio.model import PremiseKind


def random_af(rng: random.Random, max_args: int = 8) -> AbstractFramework:
    n = rng.randint(0, max_args)
    args = [f"x{i}" for i in range(n)]
    density = rng.random()
    attacks = {(a, b) for a in args for b in args if rng.random() < density * 0.6}
    return AbstractFramework(frozenset(args), frozenset(attacks))


def random_graph(rng: random.Random, n_statements: int = 8, n_arguments: int = 10) -> ArgumentGraph:
    g = ArgumentGraph()
    ids = [g.add_statement(f"statement {i}", id=f"s{i}") for i in range(n_statements)]
    free = list(ids)
    rng.shuffle(free)
    for _ in range(rng.randint(0, n_statements // 3)):
        if len(free) < 2:
            break
        a, b = free.pop(), free.pop()
        try:
            g.link_complement(a, b)
        except CycleIntroduced:
            pass
    kinds = list(PremiseKind)
    for i in range(n_arguments):
        concl = rng.choice(ids)
        prem = {(rng.choice(ids), rng.choice(kinds)) for _ in range(rng.randint(0, 3))}
        try:
            g.add_argument(concl, rng.choice(["pro", "con"]), prem, round(rng.random(), 2), id=f"a{i}")
        except CycleIntroduced:
            continue
    return g.freeze()


def random_case(rng: random.Random, n_items: int = 3):
    """A pleadings record and an award mixing faithful and deviant decisions."""
    g = ArgumentGraph()
    ids = [g.add_statement(f"statement {i}", id=f"t{i}") for i in range(10)]
    g.freeze()
    claimant = Agent("Alpha", Role.CLAIMANT)
    defendant = Agent("Beta", Role.DEFENDANT)
    record = PleadingsRecord(g, claimant, defendant)
    for k in range(n_items):
        item = f"n{k}"
        record.add_item(item)
        for agent in (claimant, defendant):
            for _ in range(rng.randint(1, 2)):
                concl = rng.choice(ids[:4])
                grounds = frozenset(rng.sample([i for i in ids if i != concl], rng.randint(1, 3)))
                record.record_proposal(agent, item, Solution(concl, grounds))
        if rng.random() < 0.3:
            shared = record.proposals_for(item)[0].solution
            other = defendant if record.proposals_for(item)[0].agent is claimant else claimant
            record.record_proposal(other, item, shared)

    items = []
    for item in record.items:
        if rng.random() < 0.1:
            continue  # left undecided
        props = record.proposals_for(item)
        roll = rng.random()
        if roll < 0.35:
            decision = rng.choice(props).solution
        elif roll < 0.55:
            concl = rng.choice(props).solution.conclusion
            pool = sorted({g for p in props for g in p.solution.grounds} - {concl})
            decision = Solution(concl, frozenset(rng.sample(pool, rng.randint(1, len(pool)))))
        elif roll < 0.7:
            grounds = rng.choice(props).solution.grounds
            concl = rng.choice([i for i in ids if i not in grounds])
            decision = Solution(concl, grounds)
        else:
            concl = rng.choice(ids)
            decision = Solution(concl, frozenset(rng.sample([i for i in ids if i != concl], rng.randint(1, 3))))
        public = rng.random() < 0.15
        addressed = frozenset(p for p in props if rng.random() < 0.8)
        items.append(AwardItem(item, decision, public, rng.random() < 0.5, addressed))
    if rng.random() < 0.2:
        items.append(AwardItem("n_extra", Solution("t9", frozenset({"t8"})), public_issue=rng.random() < 0.5,
                               parties_consulted=rng.random() < 0.5))
    return record, Award(tuple(items))
