class HxError(ValueError):
    """Base class for rejected inputs."""


class HypergraphError(HxError):
    pass


class ParseError(HxError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ParameterError(HxError):
    """A parameter tuple violates a precondition; ``constraint`` names it."""

    def __init__(self, constraint: str, detail: str = ""):
        msg = f"violated constraint: {constraint}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.constraint = constraint


class OracleCapError(HxError):
    pass
