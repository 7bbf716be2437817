"""Exception hierarchy.

``InputError`` covers anything the caller got wrong (bad notation, illegal
throws, malformed state strings); the CLI maps it to exit code 1.
``ComputationError`` covers failures of an otherwise well-posed request and
maps to exit code 2.
"""


class JuggleError(Exception):
    pass


class InputError(JuggleError):
    pass


class ComputationError(JuggleError):
    pass


class EmptyInput(InputError):
    pass


class InvalidCharacter(InputError):
    def __init__(self, position, char):
        self.position = position
        self.char = char
        super().__init__(f"invalid character {char!r} at position {position}")


class InvalidPattern(InputError):
    pass


class CapacityTooSmall(InputError):
    pass


class BadParameters(InputError):
    pass


class BadProbability(InputError):
    pass


class BadStart(InputError):
    pass


class BadStateString(InputError):
    pass


class EmptyTrace(InputError):
    pass


class NotATransition(InputError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"no single throw connects states[{index}] to the next state")


class NoCycle(InputError):
    pass


class TransitionError(InputError):
    """Base for throws that ``advance`` refuses."""


class MustWait(TransitionError):
    pass


class MustThrow(TransitionError):
    pass


class Collision(TransitionError):
    pass


class OutOfRange(TransitionError):
    pass


class NotIrreducible(ComputationError):
    def __init__(self, classes):
        self.classes = classes
        super().__init__(f"support graph has {len(classes)} closed communicating classes")


class NoConvergence(ComputationError):
    def __init__(self, max_iterations):
        self.max_iterations = max_iterations
        super().__init__(f"power iteration did not converge in {max_iterations} iterations")
