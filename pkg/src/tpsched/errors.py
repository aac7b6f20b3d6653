"""Exception types shared across the package.

Every domain failure derives from ScheduleDomainError and carries a short
machine-greppable code; the CLI prints it as ``error[<code>]: message`` and
exits 2.
"""


class ScheduleDomainError(ValueError):
    """An input lies outside the model's domain."""

    code = "domain-error"


class InfeasibleContributionError(ScheduleDomainError):
    """The target contribution rate exceeds what the curve can support."""

    code = "infeasible-contribution"


class NoOptimumError(ScheduleDomainError):
    """Net marginal revenue never crosses zero inside the sampled range."""

    code = "no-optimum"


class DuplicateAbscissaError(ScheduleDomainError):
    """Two curve samples share the same output abscissa."""

    code = "duplicate-abscissa"


class NegativeEffectiveContributionError(ScheduleDomainError):
    """The target contribution does not even recover the variable cost."""

    code = "negative-effective-contribution"


class VariableCostTooHighError(ScheduleDomainError):
    """The seller's variable cost meets or exceeds the optimal unit value."""

    code = "variable-cost-too-high"


class ScenarioError(ScheduleDomainError):
    """A scenario file or argument set does not describe a valid request."""

    code = "bad-scenario"
