"""Exception hierarchy.

Every error carries a ``category`` used by the CLI to pick an exit code:
``config`` -> 2, ``math`` -> 3, ``io`` -> 4.
"""


class SslabError(Exception):
    category = "math"

    @property
    def name(self) -> str:
        return type(self).__name__


class ConfigError(SslabError):
    category = "config"


class MathError(SslabError):
    category = "math"


class DataIOError(SslabError):
    category = "io"


# algebra
class CompositeModulus(ConfigError): pass
class TwoNotSupported(ConfigError): pass
class BothZero(MathError): pass
class DegenerateInput(MathError): pass
class ZeroPolynomial(MathError): pass
class DuplicateNode(MathError): pass

# curves
class InvalidModel(MathError): pass
class TooLarge(ConfigError): pass
class EllEqualsP(ConfigError): pass
class ExtensionTooLarge(MathError): pass
class NotSupersingularStart(MathError): pass
class RepeatedRootAtStep(MathError): pass
class SearchExhausted(MathError): pass

# hasse
class DegenerateLambda(MathError): pass
class DerivativeZero(MathError): pass
class DomainMismatch(ConfigError): pass

# mappings
class RejectionBudgetExceeded(MathError): pass

# modpoly
class ParseError(DataIOError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class DegreeMismatch(DataIOError): pass
class MissingLevel(ConfigError): pass
class MissingPrimeLevel(ConfigError): pass
class ModulusMismatch(DataIOError): pass
class ChecksumMismatch(DataIOError): pass
class IOFailure(DataIOError): pass
class NotEnoughNodes(MathError): pass
class CoefficientNotInBaseField(MathError): pass

# conjgcd
class NotSymmetric(MathError): pass
class EqualLevels(ConfigError): pass
class LevelDividesP(ConfigError): pass
class ResultantIdenticallyZero(MathError): pass

# torsion
class BadEll(ConfigError): pass
class CosetOrderInvalid(ConfigError): pass
class EmptyEllSet(ConfigError): pass

# qwalk
class SymmetryUnavailable(ConfigError): pass
class DisconnectedClosure(MathError): pass
class NoConvergence(MathError): pass
class VertexUnknown(ConfigError): pass
class NonpositiveT(ConfigError): pass
class NotADistribution(MathError): pass
