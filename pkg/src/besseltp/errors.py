"""Exception types shared across the package."""


class MapDomainError(ValueError):
    """Argument outside the domain of the conformal map (cut plane, sector)."""


class ValidityGuardError(ValueError):
    """Evaluation point rejected by an asymptotic-validity guard."""


class ContourSpecError(ValueError):
    """Contour parameters violate the geometric requirements."""


class BranchContinuityError(RuntimeError):
    """Branch tracking along a path failed to close or jumped a sheet."""


class AiryRangeError(OverflowError):
    """Unscaled Airy value under/overflows double precision."""


class OracleBudgetError(RuntimeError):
    """Reference evaluation could not be certified within the precision budget."""


class MissingOracleDataError(KeyError):
    """Requested reference values absent from the cache and recomputation disabled."""
