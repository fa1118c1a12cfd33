"""Exception hierarchy shared by the library and the CLI."""


class MrankError(Exception):
    """Base class; the CLI maps these to exit code 1 unless noted."""


class ParseError(MrankError):
    """Malformed edge-list document (CLI exit code 2)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConnectedError(MrankError):
    pass


class CapExceededError(MrankError):
    pass


class WrongClassError(MrankError):
    """Input is outside the class a solver or constructor requires."""


class NotBipartiteError(WrongClassError):
    def __init__(self, odd_cycle):
        self.odd_cycle = list(odd_cycle)
        super().__init__(f"graph is not bipartite; odd cycle {self.odd_cycle}")
