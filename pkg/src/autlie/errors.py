"""Exception types shared across the package."""


class AutlieError(Exception):
    pass


class ContractViolation(AutlieError, ValueError):
    """An argument breaks an operation's precondition."""


class DomainError(ContractViolation):
    pass


class DimensionMismatch(ContractViolation):
    pass


class HypothesisViolation(ContractViolation):
    """Input lies outside the range where a closed formula is a theorem."""


class ResourceLimitError(AutlieError, RuntimeError):
    def __init__(self, cap, value, limit):
        self.cap = cap
        self.value = value
        self.limit = limit
        super().__init__(f"resource cap '{cap}' exceeded: {value} > {limit}")


class ConsistencyError(AutlieError, ArithmeticError):
    """Two exact computations that must agree did not."""
