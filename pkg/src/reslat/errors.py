"""Exception types raised by the workbench.

Every failure that has a concrete counterexample carries it in ``witness``
(a tuple of carrier indices, ideal indices or ring elements, depending on
where the error comes from).
"""


class AlgebraError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# lattices and residuated lattices
class NotAPartialOrder(AlgebraError):
    pass


class MeetJoinMismatch(AlgebraError):
    pass


class NotBounded(AlgebraError):
    pass


class MonoidViolation(AlgebraError):
    pass


class ResiduumMissing(AlgebraError):
    pass


class ArrowMismatch(AlgebraError):
    pass


class EquivalenceBroken(AlgebraError):
    """Criteria that must agree on every input did not; this is a bug signal."""


class PreconditionNotDivisible(AlgebraError):
    pass


# rings
class InvalidSpec(AlgebraError):
    pass


class RingAxiomViolation(AlgebraError):
    pass


class MixedRings(AlgebraError):
    pass


class NonCommutativeRing(AlgebraError):
    pass


class ValidationFailed(AlgebraError):
    pass


class CriteriaDisagree(AlgebraError):
    pass


class PreconditionNotMultiplication(AlgebraError):
    pass


# ordinal products and classification
class NotBLAlgebra(AlgebraError):
    def __init__(self, message, witness=None, path=()):
        super().__init__(message, witness)
        self.path = tuple(path)


class SizeGuardExceeded(AlgebraError):
    pass


class MethodMismatch(AlgebraError):
    pass


class CatalogIncomplete(AlgebraError):
    pass
