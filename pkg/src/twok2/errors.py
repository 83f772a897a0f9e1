"""Exception types shared across the library."""

from __future__ import annotations


class TwoK2Error(Exception):
    """Base class for all library errors."""


class ParseError(TwoK2Error):
    """Malformed graph document.  Carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DomainError(TwoK2Error):
    """An operation was called outside its stated domain (bad subset, non-edge, ...)."""


class DisconnectedGraphError(TwoK2Error):
    """The algorithm requires a connected graph."""


class NoSeparatorError(TwoK2Error):
    """Complete graphs have no vertex separator under the standard definition."""


class NotTwoK2FreeError(TwoK2Error):
    """An algorithm whose hypothesis is 2K2-freeness was given a graph with a 2K2.

    ``witness`` is the four-vertex certificate (a, b, c, d) with edges
    {a, b} and {c, d} and no cross edges.
    """

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"graph is not 2K2-free: witness edges "
                         f"{{{witness.a},{witness.b}}}, {{{witness.c},{witness.d}}}")


class SubclassError(TwoK2Error):
    """The graph is outside the subclass the operation is defined for."""


class FindingError(TwoK2Error):
    """A structural guarantee taken from the underlying theory failed on a
    concrete graph.  Never raised silently: the message embeds the serialized
    counterexample so it can be reported as a finding.
    """
