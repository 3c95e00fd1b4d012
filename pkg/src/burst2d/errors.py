"""Exception types raised across the package."""


class Burst2DError(Exception):
    pass


# field construction / arithmetic
class EvenDimensionError(Burst2DError, ValueError):
    pass


class LambdaTooLargeError(Burst2DError, ValueError):
    pass


class DivideByZeroError(Burst2DError, ZeroDivisionError):
    pass


class NotADivisorError(Burst2DError, ValueError):
    pass


# transforms
class OrderMismatchError(Burst2DError):
    pass


class DimensionMismatchError(Burst2DError, ValueError):
    pass


class NonBinaryResultError(Burst2DError):
    pass


# code definition / encoding
class IndexOutOfRangeError(Burst2DError, ValueError):
    pass


class IndicatorNotAZeroError(Burst2DError, ValueError):
    pass


class IndicatorNotPatternRootError(Burst2DError, ValueError):
    pass


class LengthMismatchError(Burst2DError, ValueError):
    pass


class InternalNonBinaryError(Burst2DError):
    pass


class ConfigError(Burst2DError, ValueError):
    pass


class PatternError(Burst2DError, ValueError):
    pass


# decoding
class MissingIndicatorsError(Burst2DError):
    pass


class NoSolutionError(Burst2DError):
    pass


class AmbiguousSolutionError(Burst2DError):
    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = list(candidates)


# oracle
class TooLargeError(Burst2DError):
    pass


class EnumerationMismatchError(Burst2DError):
    pass
