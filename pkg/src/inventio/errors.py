"""Exception hierarchy shared by every part of the engine."""

from __future__ import annotations


class ArgumentationError(Exception):
    """Base class for all errors raised by :mod:`inventio`."""


# -- graph construction -------------------------------------------------------


class GraphError(ArgumentationError):
    pass


class UnknownStatement(GraphError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return Exception.__str__(self)


class DuplicateId(GraphError):
    pass


class SelfComplement(GraphError):
    pass


class AlreadyLinked(GraphError):
    pass


class DuplicatePremise(GraphError):
    pass


class CycleIntroduced(GraphError):
    pass


class InvalidWeight(GraphError, ValueError):
    pass


class GraphFrozen(GraphError):
    pass


class CyclicGraph(GraphError):
    pass


class InvalidGraph(GraphError):
    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(str(v) for v in report.violations))


# -- abstract frameworks ------------------------------------------------------


class ForeignArgument(ArgumentationError, ValueError):
    pass


# -- evaluation ---------------------------------------------------------------


class IncoherentAudience(ArgumentationError):
    pass


class UnresolvedPremise(ArgumentationError):
    pass


class NotDecided(ArgumentationError):
    pass


# -- pleadings ----------------------------------------------------------------


class PleadingsError(ArgumentationError):
    pass


class UnknownAgent(PleadingsError):
    pass


class UnknownItem(PleadingsError):
    pass


class ArbitratorCannotPlead(PleadingsError):
    pass


class NoProposals(PleadingsError):
    pass


class UniverseMismatch(PleadingsError):
    pass


class InvalidSolution(PleadingsError, ValueError):
    pass


class DuplicateAwardItem(PleadingsError, ValueError):
    pass
