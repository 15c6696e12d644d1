"""Exception hierarchy shared by all thermomajor modules."""


class ThermomajorError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(ThermomajorError):
    """Vectors or matrices that must share a dimension do not."""


class NonPositiveWeight(ThermomajorError):
    """A Gibbs weight is zero or negative (energies must be finite)."""


class NegativeProbability(ThermomajorError):
    """A probability entry is negative."""


class ProbSumNotOne(ThermomajorError):
    """Probabilities do not sum to exactly one (checked as rationals)."""


class WidthMismatch(ThermomajorError):
    """Curves compared for majorization have different total widths."""


class GibbsInput(ThermomajorError):
    """Operation requires a non-equilibrium state but received a Gibbs state."""


class NontrivialHamiltonian(ThermomajorError):
    """Operation is only defined for equal Gibbs weights on every level."""


class ZeroProbability(ThermomajorError):
    """Operation requires strictly positive probabilities."""


class NotProductState(ThermomajorError):
    """Joint state does not factor as system x catalyst."""


class CatalystMarginalMismatch(ThermomajorError):
    """Initial and final catalyst marginals differ."""


class InvalidTemperatures(ThermomajorError):
    """Engine parameters violate 0 < beta_hot <= beta_cold or epsilon > 0."""


class DimensionCapExceeded(ThermomajorError):
    """LP oracle invoked above its configured dimension cap."""


class ParseError(ThermomajorError):
    """Malformed input file or rational literal."""


class ReproductionMismatch(ThermomajorError):
    """A reproduction target produced a value outside its tolerance."""
