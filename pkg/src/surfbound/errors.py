class InputError(ValueError):
    """Input that violates an operation's precondition (bad degree, malformed ideal, ...)."""
