from typing import Iterable, Optional


class PiGeometryError(Exception):
    """Base class for every error raised by the pigeom package."""


class ConstructionError(PiGeometryError, ValueError):
    """Invalid parameters for a vector, motion, surface, curve or table."""


class InvalidVector(ConstructionError):
    pass


class ArgumentCausalMismatch(PiGeometryError, ValueError):
    def __init__(self, operation: str, expected: str, got: Iterable[str]):
        self.operation = operation
        self.expected = expected
        self.got = tuple(got)
        super().__init__(f"{operation} expects {expected}, got {', '.join(self.got)}")


class AngleDomainError(PiGeometryError, ValueError):
    def __init__(self, message: str, ratio: float):
        self.ratio = ratio
        super().__init__(f"{message} (ratio={ratio!r})")


class SpanNotTimelike(AngleDomainError):
    pass


class ReverseTriangleViolation(AngleDomainError):
    pass


class ProfileError(PiGeometryError, ValueError):
    pass


class ProfileSyntaxError(ProfileError):
    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f" (expected one of: {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")


class UnknownFunction(ProfileError):
    def __init__(self, name: str, offset: int):
        self.name = name
        self.offset = offset
        super().__init__(f"Unknown function '{name}' at byte {offset}")


class DomainError(PiGeometryError, ValueError):
    def __init__(self, message: str, node: Optional[str] = None, value: Optional[float] = None):
        self.node = node
        self.value = value
        self.reason = message
        super().__init__(self._format())

    def _format(self) -> str:
        parts = [self.reason]
        if self.node is not None:
            parts.append(f"in {self.node}")
        if self.value is not None:
            parts.append(f"at value {self.value!r}")
        return " ".join(parts)

    def at_node(self, node: str) -> "DomainError":
        """Attach the innermost expression node that failed (first caller wins)."""
        if self.node is None:
            self.node = node
            self.args = (self._format(),)
        return self


class IntegrationError(PiGeometryError, RuntimeError):
    def __init__(self, message: str, t: float, state: Optional[tuple] = None):
        self.t = t
        self.state = state
        super().__init__(f"{message} at t={t!r}")


class AxisCrossing(IntegrationError):
    pass


class StepTooLarge(IntegrationError):
    pass
