"""Exception types shared across the library."""


class SachsLabError(Exception):
    """Base class for all library-specific errors."""


class MalformedGraph6(SachsLabError):
    """The input is not a valid graph6 line."""


class ParseError(SachsLabError):
    """Malformed edge-list text."""


class LoopEdge(ParseError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(ParseError):
    """The same edge is listed twice."""


class VertexOutOfRange(ParseError):
    """An endpoint is not in [0, n)."""


class EdgeNotPresent(SachsLabError):
    """The named edge does not exist in the graph."""


class SizeLimitExceeded(SachsLabError):
    """The graph is larger than the exact-algorithm contract allows."""


class KOutOfRange(SachsLabError):
    """k is outside 0 <= k < n."""


class MatchingNotMaximum(SachsLabError):
    """A supposedly maximum matching admits an augmenting path."""


class NotPerfect(SachsLabError):
    """A matching expected to saturate both sides does not."""


class InvalidViolator(SachsLabError):
    """A claimed Hall violator does not satisfy |S| > |N(S)|."""


class MalformedRotation(SachsLabError):
    """A rotation system does not list each vertex's incident edges exactly once."""


class HypothesisViolated(SachsLabError):
    """A lemma verifier was called on input that fails its hypotheses.

    ``reason`` names the failed hypothesis: "parts", "bipartite", "planar",
    "balance", "order" or "edge".
    """

    def __init__(self, reason: str, message: str = ""):
        self.reason = reason
        super().__init__(message or reason)


class NotCritical(SachsLabError):
    """Minimality was queried for a graph that is not critical at this level."""


class UnknownContext(SachsLabError):
    """check_degree_bounds received an unrecognised hypothesis context."""


class ContradictionDetected(SachsLabError):
    """A computation contradicts a proved statement; this should never happen.

    Raised e.g. when d(G) != id(G) is observed, or when a verified-hypothesis
    degree bound fails.  Exit code 3 in the CLI.
    """
