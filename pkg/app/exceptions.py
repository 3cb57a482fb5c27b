class SparkRingError(Exception):
    """Base exception for all sparkring errors"""


class ExactArithmeticError(SparkRingError, ZeroDivisionError):
    """Exception raised when an exact scalar is inverted at zero"""


class EvaluationError(SparkRingError):
    """Exception raised when exact evaluation is requested off the integers"""


class InputParseError(SparkRingError):
    """Exception raised when an input file or literal cannot be parsed"""


class DisagreementError(SparkRingError):
    """Exception raised when two pipelines or the oracle disagree"""


class DegreeError(SparkRingError):
    """Exception raised when cochain degrees or levels are incompatible"""


class NonCocycleError(DegreeError):
    """Exception raised when a cocycle or cycle precondition fails"""
