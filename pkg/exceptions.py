"""
Engine exception hierarchy for qbraid.

All exceptions that should halt a run are subclasses of EngineError.  Each
class carries the process exit code of the command-line contract
(0 pass, 1 mathematical failure, 2 input error, 3 resource cap).  Catch
EngineError at the top level (main()) to print a clean error message and
exit without a raw Python traceback.
"""


class EngineError(Exception):
    """Base class for all run-halting errors."""

    exit_code = 1


class InputError(EngineError):
    """Raised when user input is malformed or dimensionally inconsistent."""

    exit_code = 2


class MissingInputError(InputError):
    """Raised when a required input file is not found."""


class DatumFormatError(InputError):
    """Raised when a datum or expression cannot be parsed."""

    def __init__(self, message: str, path: str = '', location: str = ''):
        self.path = path
        self.location = location
        super().__init__(message)

    def __str__(self) -> str:
        parts = [super().__str__()]
        if self.path:
            parts.append(f'File: {self.path}')
        if self.location:
            parts.append(f'At: {self.location}')
        return '\n'.join(parts)


class QArithmeticError(EngineError):
    """Raised on division by zero in Q(q)."""


class DegreeBoundError(EngineError):
    """Raised when a computation would leave the configured degree bound."""

    exit_code = 3

    def __init__(self, degree: int, bound: int, what: str = 'element'):
        self.degree = degree
        self.bound = bound
        super().__init__(f'{what} has degree {degree}, above the bound {bound}')


class OrbitCapError(EngineError):
    """Raised when a basis grows past the dimension cap.

    ``partial`` holds whatever was computed before the cap was hit, so the
    caller can still report it.
    """

    exit_code = 3

    def __init__(self, message: str, cap: int, partial=None):
        self.cap = cap
        self.partial = partial
        super().__init__(message)


class ConsistencyError(EngineError):
    """Raised when two independent computations of the same object disagree."""

    def __init__(self, step: str, message: str):
        self.step = step
        super().__init__(f'[{step}] {message}')


class PropertyFailure(ConsistencyError):
    """Raised by a property suite; ``witness`` is a minimal failing input."""

    def __init__(self, step: str, message: str, witness: str = ''):
        self.witness = witness
        if witness:
            message = f'{message}\nWitness: {witness}'
        super().__init__(step, message)
