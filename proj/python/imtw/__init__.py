"""Maximum-weight induced subgraphs of bounded treewidth."""

from fractions import Fraction

from . import _imtw
from ._imtw import ContractError, ParseError, ResourceError, StructureError, emit_gr, parse_gr, problems, selfcheck

__all__ = [
    "ContractError",
    "ParseError",
    "ResourceError",
    "StructureError",
    "emit_gr",
    "oracle",
    "parse_gr",
    "problems",
    "selfcheck",
    "solve",
]


def _weights(weights):
    return None if weights is None else [str(Fraction(w)) for w in weights]


def _result(raw):
    result = dict(raw)
    if "weight" in result:
        result["weight"] = Fraction(result["weight"])
    return result


def solve(n, edges, weights=None, problem="mwis", td_source="search", w=None, k=None, family_mode="bounded"):
    """Returns a dict with status, and weight (a Fraction) and solution when optimal."""
    return _result(_imtw.solve(n, list(edges), _weights(weights), problem, td_source, w, k, family_mode))


def oracle(n, edges, weights=None, problem="mwis"):
    """The same answer as solve, by exhaustive search; n is limited to 14."""
    return _result(_imtw.oracle(n, list(edges), _weights(weights), problem))
