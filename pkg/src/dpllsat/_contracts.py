"""Runtime contract checks shared by the solver's data structures."""


class ContractError(AssertionError):
    """A precondition or postcondition was violated (a programming error,
    never a consequence of bad input)."""


def require(condition, message):
    if not condition:
        raise ContractError(message)
