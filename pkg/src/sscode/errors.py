"""Exception hierarchy shared by every module of the package."""


class SubspaceCodeError(ValueError):
    """Base class for all errors raised by sscode."""


class NotPrimePower(SubspaceCodeError):
    pass


class Unsupported(SubspaceCodeError):
    pass


class DimMismatch(SubspaceCodeError):
    pass


class BadArgs(SubspaceCodeError):
    pass


class DiagramMismatch(SubspaceCodeError):
    pass


class AmbientMismatch(SubspaceCodeError):
    pass


class LengthMismatch(SubspaceCodeError):
    pass


class ZeroWeight(SubspaceCodeError):
    pass


class BadDistance(SubspaceCodeError):
    pass


class ConstructionFailed(SubspaceCodeError):
    pass


class ShapeMismatch(SubspaceCodeError):
    pass


class TooLarge(SubspaceCodeError):
    pass


class TooSmall(SubspaceCodeError):
    pass


class BadIndex(SubspaceCodeError):
    pass


class TooShort(SubspaceCodeError):
    pass


class DistanceViolation(SubspaceCodeError):
    pass


class BadParams(SubspaceCodeError):
    pass


class FieldTooSmall(SubspaceCodeError):
    pass


class RegistryMiss(SubspaceCodeError):
    pass


class DeltaTooSmall(SubspaceCodeError):
    pass


class UnitVectorInside(SubspaceCodeError):
    pass


class PreconditionFailed(SubspaceCodeError):
    pass


class CertificateGap(SubspaceCodeError):
    pass


class ParseError(SubspaceCodeError):
    pass
