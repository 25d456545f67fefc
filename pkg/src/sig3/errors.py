"""Exception types raised across the package."""


class Sig3Error(Exception):
    """Base class for all errors raised by :mod:`sig3`."""


class DomainError(Sig3Error, ValueError):
    """Argument outside the domain on which a function is defined."""


class NonConvergence(Sig3Error, ArithmeticError):
    """An adaptive routine hit its refinement cap before meeting tolerance."""


class NonFinite(Sig3Error, ArithmeticError):
    """An integrand or stencil evaluation produced inf or nan."""


class StepUnderflow(Sig3Error, ArithmeticError):
    """ODE step size collapsed, usually a singularity on the path."""


class NonRectangular(Sig3Error, ValueError):
    """Invariants with non-positive discriminant (no rectangular lattice)."""


class NonRealInvariants(Sig3Error, ValueError):
    """Scaled invariants acquired an imaginary part."""


class NearPole(Sig3Error, ArithmeticError):
    """Evaluation point lies within the exclusion radius of a pole."""


class Dn3Pole(NearPole):
    """dn3 evaluated at one of its poles (where p = -1/3)."""


class WPole(NearPole):
    """W evaluated at one of its poles (where P = 6)."""


class PoleVerificationFailed(Sig3Error):
    pass


class CriticalValueMismatch(Sig3Error):
    pass
