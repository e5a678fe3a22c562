"""Exception types raised by the solver stack."""


class ParameterError(ValueError):
    """An argument or configuration value violates its documented domain."""


class GridConstructionError(RuntimeError):
    """Internal and external momentum grids could not be made non-coincident."""


class DegenerateMomentumError(ValueError):
    """A difference quotient was requested at p2 == q2."""


class KinematicSingularityError(ValueError):
    """Integrand evaluation requested at k2 <= 0."""


class NumericalFailureError(RuntimeError):
    """A non-finite value appeared during a sweep.

    Carries the (row, radial, angular) indices of the first offending entry.
    """

    def __init__(self, message, row=None, radial=None, angular=None):
        super().__init__(message)
        self.row = row
        self.radial = radial
        self.angular = angular

    def __reduce__(self):
        # keep the location attributes across process boundaries
        return (self.__class__, (self.args[0], self.row, self.radial, self.angular))


class ExecutionEnvironmentError(RuntimeError):
    """The worker pool for a parallel sweep could not be created."""


class ConsistencyError(RuntimeError):
    """Algorithm variants that must agree produced different results."""
