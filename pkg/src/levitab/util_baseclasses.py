class LevitabException(Exception):
    """
    Base of all domain errors raised by levitab.
    """


class ParseException(LevitabException):
    """
    Malformed text for a LieType, Weight, RealForm, diagram, column or family spec.
    """

    def __init__(self, msg: str, token: str):
        assert isinstance(msg, str)
        assert isinstance(token, str)
        self.msg = msg
        self.token = token
        full_msg = f"{self.msg}: '{self.token}'"
        super().__init__(full_msg)


class PreconditionException(LevitabException):
    """
    A well formed value outside the domain of an operation.

    Examples: a non dominant weight, a symbol beyond the rank,
    an unsupported Θ pattern.
    """


class BudgetExceededException(LevitabException):
    """
    Box budget, dimension budget or rank bound exceeded.

    The computation was not started: partial results are never returned.
    """

    def __init__(self, msg: str, budget: int, required: int | None = None):
        assert isinstance(msg, str)
        assert isinstance(budget, int)
        assert isinstance(required, int | None)
        self.msg = msg
        self.budget = budget
        self.required = required
        full_msg = f"{self.msg}: budget {self.budget}"
        if self.required is not None:
            full_msg += f", required {self.required}"
        super().__init__(full_msg)


class InternalErrorException(LevitabException):
    """
    A broken internal invariant, for example a negative residual
    multiplicity while extracting Levi characters.
    """
