"""Exception hierarchy shared across the package."""


class LineSurfError(Exception):
    """Base class for all library errors."""


# --- arrangement input errors ---

class MalformedLine(LineSurfError):
    """A line of input is not three rational tokens."""


class ZeroForm(LineSurfError):
    """All three coefficients of a linear form are zero."""


class DuplicateLine(LineSurfError):
    """Two proportional coefficient triples describe the same line."""


class TooFewLines(LineSurfError):
    """An arrangement needs at least two lines."""


# --- profile errors ---

class UnbalancedProfile(LineSurfError):
    """The counts t_r fail the identity sum t_r r(r-1)/2 = d(d-1)/2."""


class MultiplicityOutOfRange(LineSurfError):
    """A multiplicity r lies outside [2, d]."""


class UnknownCatalogName(LineSurfError):
    """No catalog entry with this name."""


class BadParameter(LineSurfError):
    """A parameter is missing, extraneous, or out of range."""


# --- continued fraction errors ---

class NotCoprime(LineSurfError):
    """Arguments are required to be coprime."""


class BetaOutOfRange(LineSurfError):
    """beta must satisfy 0 < beta < alpha (or be the (1, 0) convention)."""


class TermTooSmall(LineSurfError):
    """Continued fraction terms must all be >= 2."""


# --- resolution errors ---

class BadMultiplicity(LineSurfError):
    """The germ parameters must satisfy 2 <= r <= d."""


class NotSymmetric(LineSurfError):
    """Definiteness checks require a symmetric matrix."""


class SingularMatrix(LineSurfError):
    """The linear system has no unique solution (cannot happen for
    negative definite intersection matrices; indicates an internal bug)."""


# --- Hodge errors ---

class NoetherDivisibilityFailure(LineSurfError):
    """12 does not divide c1^2 + c2 + 12(q - 1)."""


class NegativeHodgeNumber(LineSurfError):
    """The (profile, q) pair yields a negative Hodge number."""


class ZeroSecondChern(LineSurfError):
    """The Chern ratio is undefined when c2 = 0."""
