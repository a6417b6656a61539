class TritangentError(Exception):
    pass


class PerturbationError(TritangentError):
    pass


class CatalogError(TritangentError):
    pass


class UnclassifiableTangencyError(TritangentError):
    pass


class UnmappedLabelError(TritangentError):
    pass


class MuUndefinedError(TritangentError):
    def __init__(self, label: str):
        super().__init__(f"mu undefined for this type: {label}")
        self.label = label


class ClassCountError(TritangentError):
    def __init__(self, count: int):
        super().__init__(f"class count ≠ 15 (found {count})")
        self.count = count


class DisconnectedComplexError(TritangentError):
    pass


class InadmissibleDimensionsError(TritangentError):
    pass


class NonGenericCurveError(TritangentError):
    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
