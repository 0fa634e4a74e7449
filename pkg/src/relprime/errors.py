"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SetSpecError(ValueError):
    """A set-specification string does not conform to the grammar."""


class OverlapError(ValueError):
    """Progressions passed as a disjoint union actually intersect."""

    def __init__(self, first, second, witness):
        self.first = first
        self.second = second
        self.witness = witness
        super().__init__(
            f"progressions {first} and {second} both contain {witness}"
        )


class BudgetExceededError(RuntimeError):
    """A brute-force enumeration would exceed the configured budget."""
