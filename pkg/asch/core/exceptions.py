"""
Error hierarchy.

InputError  -> the input could not be used (CLI exit 2)
CheckFailure -> a mathematical check failed (CLI exit 1)

Every error carries a witness dict describing the counterexample.
"""

from typing import Any, Dict, Optional


class AschError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness or {}

    def __str__(self) -> str:
        if not self.witness:
            return self.message
        details = " ".join(f"{key}={value}" for key, value in self.witness.items())
        return f"{self.message} [{details}]"


class InputError(AschError):
    exit_code = 2


class CheckFailure(AschError):
    exit_code = 1


# --- input problems -------------------------------------------------------

class FormatError(InputError):
    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(message, {"line": line, "column": column})
        self.line = line
        self.column = column


class NonSquare(InputError):
    pass


class NonIntegralEntries(InputError):
    pass


class EmptySubset(InputError):
    pass


class NotAPartition(InputError):
    pass


class EvenDegree(InputError):
    pass


class UnsupportedDegree(InputError):
    pass


# --- exact linear algebra ---------------------------------------------------

class NonIntegralSpectrum(CheckFailure):
    pass


class JointEigenspaceNotSimple(CheckFailure):
    pass


class Singular(CheckFailure):
    pass


# --- scheme axioms and spectra ---------------------------------------------

class NotSymmetric(CheckFailure):
    pass


class IdentityViolation(CheckFailure):
    pass


class IntersectionNumberNotConstant(CheckFailure):
    pass


class NonIntegralMultiplicity(CheckFailure):
    pass


# --- imprimitivity ----------------------------------------------------------

class NotClosed(CheckFailure):
    pass


class UnequalBlocks(CheckFailure):
    pass


class NotAFourClassCover(CheckFailure):
    pass


class ArrangementImpossible(CheckFailure):
    pass


# --- cliques and fission ----------------------------------------------------

class NonNegativeTheta(CheckFailure):
    pass


class NotTight(CheckFailure):
    pass


class NotConstant(CheckFailure):
    pass


class BlockNotClique(CheckFailure):
    pass


class BlockNotTight(CheckFailure):
    pass


class FissionNotAScheme(CheckFailure):
    pass


class EigenspaceInheritanceError(CheckFailure):
    pass


# --- weighing matrices ------------------------------------------------------

class MultiplicityMismatch(CheckFailure):
    pass


class NotOrthonormal(CheckFailure):
    pass


class NonConstantAngle(CheckFailure):
    pass


class NotAWeighingMatrix(CheckFailure):
    pass


class UnbiasednessViolation(CheckFailure):
    pass


# --- codes ------------------------------------------------------------------

class WeightSpectrumViolation(CheckFailure):
    pass


class UnexpectedDistance(CheckFailure):
    pass
