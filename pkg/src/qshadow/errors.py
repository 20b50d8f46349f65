"""Exception types shared across the package."""


class QShadowError(Exception):
    pass


class NonSquare(QShadowError):
    pass


class NegativeEntry(QShadowError):
    pass


class TameBoundViolated(QShadowError):
    def __init__(self, i, j, value):
        super().__init__("multiplicity %d at (%d, %d) exceeds the tame bound" % (value, i, j))
        self.i = i
        self.j = j
        self.value = value


class VertexOutOfRange(QShadowError):
    pass


class TooLarge(QShadowError):
    pass


class NotSkewSymmetric(QShadowError):
    pass


class ParseError(QShadowError):
    def __init__(self, message, location=None):
        if location is not None:
            message = "%s (at %s)" % (message, location)
        super().__init__(message)
        self.location = location


class UnsupportedSize(QShadowError):
    pass


class NotEssential(QShadowError):
    pass


class NotComposable(QShadowError):
    pass


class NoMatchingPattern(QShadowError):
    pass


class LoopAtPivot(QShadowError):
    pass


class DanglingOutlet(QShadowError):
    pass


class OverGlued(QShadowError):
    pass


class DuplicateBullet(QShadowError):
    pass


class WeightNotOrbitConstant(QShadowError):
    pass


class WeightTooSmall(QShadowError):
    pass
