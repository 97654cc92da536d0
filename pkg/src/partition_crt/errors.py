"""Exception hierarchy shared by the builders, verifiers and the CLI."""


class PartitionCrtError(Exception):
    """Base class for every error raised by this package."""


class InvalidParams(PartitionCrtError, ValueError):
    pass


class NotCoprime(InvalidParams):
    pass


class ConstructionViolation(PartitionCrtError):
    """A builder assertion failed; the CLI maps these to exit code 3."""


class DistinctnessViolation(ConstructionViolation):
    pass


class DisjointnessViolation(ConstructionViolation):
    pass


class ChainViolation(ConstructionViolation):
    pass


class InfiniteExclusion(PartitionCrtError, ValueError):
    pass


class WrongShape(PartitionCrtError, ValueError):
    pass


class OracleScaleExceeded(PartitionCrtError, ValueError):
    pass


class ModulusMismatch(PartitionCrtError, ValueError):
    pass


class IndexOutOfRange(PartitionCrtError, IndexError):
    pass
