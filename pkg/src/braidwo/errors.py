class BraidwoError(Exception):
    pass


class BudgetExhausted(BraidwoError):
    def __init__(self, message: str, budget: int | None = None, progress: str = ""):
        super().__init__(message)
        self.budget = budget
        self.progress = progress


class CongruenceOverflow(BudgetExhausted):
    pass


class CapExceededError(BraidwoError, ValueError):
    def __init__(self, what: str, requested: int, cap: int):
        super().__init__(f"{what}: requested {requested} exceeds the configured cap {cap}")
        self.requested = requested
        self.cap = cap


class NotSpecialError(BraidwoError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at letter index {position})")
        self.position = position


class IndexRangeError(BraidwoError, IndexError):
    pass


class WordSyntaxError(BraidwoError, ValueError):
    pass


class OrdinalSyntaxError(BraidwoError, ValueError):
    pass


class TreeSyntaxError(BraidwoError, ValueError):
    pass
