"""Exception types shared across the package."""


class ToricIPError(Exception):
    """Base class for all structured errors raised by this package."""


class ValidationError(ToricIPError):
    """Problem data fails a standing assumption or is malformed."""


class RankDeficientError(ValidationError):
    """Matrix rows are linearly dependent (rank < d)."""


class ConeNotPointedError(ValidationError):
    """cone(A) contains a line, or equivalently Ax=0 has a nonzero
    nonnegative solution; fibers would be infinite."""


class SingularBasisError(ToricIPError):
    """Requested column set is not a basis (zero determinant)."""


class OutsideConeError(ToricIPError):
    """Right hand side lies outside cone(A)."""


class NotPointedError(ToricIPError):
    """Generator set spans a cone containing a line."""


class NotDeltaNormalError(ToricIPError):
    """Matrix is not normal with respect to the given triangulation."""


class NonGenericCostError(ToricIPError):
    """Cost vector admits ties; the operation requires unique optima."""


class UnboundedRelaxationError(ToricIPError):
    """Group relaxation objective is unbounded below (face not in the
    regular triangulation).  ray, when set, is an integer certificate z
    with B^taubar z <= 0 and (-cB).z < 0."""

    def __init__(self, message, ray=None):
        super().__init__(message)
        self.ray = ray


class InfeasibleError(ToricIPError):
    """Program has no feasible solution."""


class InfeasibleUError(InfeasibleError):
    """Supplied starting point u is not a feasible solution (some entry is
    negative, so z = 0 violates Bz <= u)."""


class NotAFacetError(ToricIPError):
    """Vector is not a facet normal of the Groebner cone."""


class NotPureError(ToricIPError):
    """Radical's complex is not pure of the expected dimension."""


class SeedNotFoundError(ToricIPError):
    """Randomized probing failed to find a generic seed cost."""


class ConsistencyError(ToricIPError):
    """Two independent computation routes disagreed; indicates a bug."""
