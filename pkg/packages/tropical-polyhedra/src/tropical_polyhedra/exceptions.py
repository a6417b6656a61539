class PolyhedronError(Exception):
    pass


class EmptyCellError(PolyhedronError):
    def __init__(self, message: str = "empty cell"):
        super().__init__(message)


class ArrangementError(PolyhedronError):
    pass
