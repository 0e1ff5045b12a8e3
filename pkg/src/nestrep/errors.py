"""Exception types shared across the package."""


class NestrepError(Exception):
    """Base class for every domain error raised by nestrep."""


class EmptyPatternError(NestrepError, ValueError):
    pass


class LengthMismatchError(NestrepError, ValueError):
    pass


class DuplicateSourceCharError(NestrepError, ValueError):
    pass


class ChainFormatError(NestrepError, ValueError):
    """A chain file line could not be parsed."""

    def __init__(self, lineno, line, reason):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class NonUnaryChainError(NestrepError, ValueError):
    pass


class NotLengthDecreasingError(NestrepError, ValueError):
    pass


class RunTooLongError(NestrepError):
    def __init__(self, run_length, capability):
        self.run_length = run_length
        self.capability = capability
        super().__init__(
            f"digit run of length {run_length} exceeds chain capability {capability}"
        )


class EmptyColumnExprError(NestrepError, ValueError):
    pass


class DisagreementError(NestrepError):
    """Benchmark implementations produced different outputs."""

    def __init__(self, text, outputs):
        self.text = text
        self.outputs = outputs
        detail = ", ".join(f"{name}={out!r}" for name, out in outputs.items())
        super().__init__(f"implementations disagree on {text!r}: {detail}")
