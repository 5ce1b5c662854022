class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""
