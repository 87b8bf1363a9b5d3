"""Exception hierarchy.

Every verification failure carries a ``witness`` describing the offending
vertices, cells or matrix positions so a caller can reproduce the failure.
"""
from __future__ import annotations

from typing import Any


class ArglabError(ValueError):
    def __init__(self, message: str = "", witness: Any = None):
        super().__init__(message)
        self.witness = witness


# finite fields
class InvalidPrimePower(ArglabError):
    pass


class DivisionByZero(ArglabError, ZeroDivisionError):
    pass


class ZeroInput(ArglabError):
    pass


class NoQuarticStructure(ArglabError):
    pass


# graphs
class InvalidEdge(ArglabError):
    pass


class SameVertex(ArglabError):
    pass


class NotHalfCaseSrg(ArglabError):
    pass


class NotAntipodal(ArglabError):
    pass


class NoUniqueAntipode(ArglabError):
    def __init__(self, vertex: int, count: int):
        super().__init__(
            f"vertex {vertex} has {count} vertices at distance 4", (vertex, count)
        )
        self.vertex = vertex
        self.count = count


class MalformedInstance(ArglabError):
    pass


class InvalidPartition(ArglabError):
    pass


class NotEquitable(ArglabError):
    pass


class MalformedGraph6(ArglabError):
    pass


class MalformedJson(ArglabError):
    pass


# constructions
class CongruenceError(ArglabError):
    pass


class InvalidOrder(ArglabError):
    pass


class DeskScaleExceeded(ArglabError):
    pass


# verifiers
class NotRegular(ArglabError):
    pass


class NotAmplyRegular(ArglabError):
    pass


class DiameterTooSmall(ArglabError):
    pass


class NotStronglyRegular(ArglabError):
    pass


class NotDistanceRegular(ArglabError):
    pass


class NotSesquiRegular(ArglabError):
    pass


class InvalidValency(ArglabError):
    pass


class NotApplicable(ArglabError):
    pass


class NotQRegular(ArglabError):
    pass


# designs and schemes
class NotGdd(ArglabError):
    pass


class SchemeAxiomViolation(ArglabError):
    pass


# spectrum
class InfeasibleParameters(ArglabError):
    pass
