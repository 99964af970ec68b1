"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid model, ring, plan, or experiment configuration."""


class IntegrationDivergedError(RuntimeError):
    """The integrator produced a non-finite state.

    Carries the 1-based index of the failing step and, when raised from a
    full run, the trajectory recorded up to the last finite state.
    """

    def __init__(self, step, partial_record=None):
        super().__init__(f"integration diverged at step {step}")
        self.step = step
        self.partial_record = partial_record
