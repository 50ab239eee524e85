"""Exception hierarchy.

Every checker raises a subclass of :class:`Violation` naming the axiom that
failed together with a ``witness`` mapping (element names, fuzzy-set labels,
and so on) that reproduces the failure when fed back to the same checker.
"""

from __future__ import annotations

from typing import Any


class FfilError(Exception):
    """Base class for every error raised by this package."""


class Violation(FfilError, ValueError):
    axiom = "violation"

    def __init__(self, message: str, witness: dict[str, Any] | None = None):
        super().__init__(message)
        self.message = message
        self.witness = dict(witness or {})

    def report(self) -> dict[str, Any]:
        return {"error": type(self).__name__, "axiom": self.axiom,
                "message": self.message, "witness": self.witness}


# lattices


class NotAPartialOrder(Violation):
    axiom = "partial-order"


class NotALattice(Violation):
    axiom = "lattice"


class TensorNotIsotone(Violation):
    axiom = "tensor-isotone"


class TopNotIdempotentUnderTensor(Violation):
    axiom = "top-idempotent"


class TopNotUnit(Violation):
    axiom = "top-unit"


class NotResiduated(Violation):
    axiom = "residuation"


class InvalidTable(Violation):
    axiom = "table"


# morphisms


class JoinNotPreserved(Violation):
    axiom = "join-preserving"


class TensorNotPreserved(Violation):
    axiom = "tensor-preserving"


class TopNotPreserved(Violation):
    axiom = "top-preserving"


class BottomNotPreserved(Violation):
    axiom = "bottom-preserving"


class MeetsNotPreserved(Violation):
    axiom = "meet-preserving"


# grounds


class EmptyGround(Violation):
    axiom = "nonempty-ground"


class GroundMismatch(FfilError, ValueError):
    pass


# filters and topologies

class AxiomViolation(Violation):
    """A candidate filter or topology table breaks one of its axioms."""


class TopAxiom(AxiomViolation):
    axiom = "top"


class BottomAxiom(AxiomViolation):
    axiom = "bottom"


class Monotonicity(AxiomViolation):
    axiom = "monotone"


class TensorAxiom(AxiomViolation):
    axiom = "tensor"


class JoinAxiom(AxiomViolation):
    axiom = "join"


class EmptyFamily(FfilError, ValueError):
    pass


class PreconditionUnmet(FfilError, ValueError):
    pass


class NotOnto(PreconditionUnmet):
    pass


class NoCoAdjoint(PreconditionUnmet):
    pass


class NotAChain(Violation):
    axiom = "chain"


class BudgetExceeded(FfilError, RuntimeError):
    def __init__(self, message: str, search_space: int, budget: int):
        super().__init__(message)
        self.search_space = search_space
        self.budget = budget


# instance documents


class ParseError(FfilError, ValueError):
    pass


class ValidationError(FfilError, ValueError):
    """Loading failed because some structure did not pass its checker."""

    def __init__(self, message: str, cause: Violation):
        super().__init__(message)
        self.cause = cause

    def report(self) -> dict[str, Any]:
        out = self.cause.report()
        out["context"] = str(self)
        return out
