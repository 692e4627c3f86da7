class InternalConsistencyError(RuntimeError):
    """A postcondition that the mathematics guarantees has failed; indicates a bug."""


class ContainmentError(InternalConsistencyError):
    pass


class UnlinkednessError(InternalConsistencyError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class NotInHorseshoe(ValueError):
    pass
