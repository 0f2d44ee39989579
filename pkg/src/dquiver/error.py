
class DQuiverError(Exception):
    """
    Base exception for dquiver errors
    """
    pass


class FieldError(DQuiverError):
    """
    Exception for unsupported or malformed fields and scalars
    """
    pass


class ShapeError(DQuiverError):
    """
    Exception for matrix size or block width mismatches
    """
    pass


class LabelError(DQuiverError):
    """
    Exception for unknown or misordered block labels
    """
    pass


class SingularMatrixError(DQuiverError):
    """
    Exception for inverting a singular matrix
    """
    pass


class QuiverError(DQuiverError):
    """
    Exception for malformed quivers
    """
    pass


class NotAdmissibleError(QuiverError):
    """
    Exception for an arrow set that is not admissible for contraction
    """
    pass


class NotDynkinError(QuiverError):
    """
    Exception for a quiver whose underlying graph is not Dynkin
    """
    pass


class NotTypeDError(NotDynkinError):
    """
    Exception for a quiver whose underlying graph is not of type D
    """
    pass


class RepresentationError(DQuiverError):
    """
    Exception for representations not matching their dimension vector
    """
    pass


class SamplingError(DQuiverError):
    """
    Exception for an exhausted indecomposable sampling budget
    """

    def __init__(self, message: str, seed=None):
        super(SamplingError, self).__init__(message)
        self.seed = seed


class InternalError(DQuiverError):
    """
    Exception for states that valid input can never reach
    """
    pass


class IncomparableArrowsError(DQuiverError):
    """
    Exception for arrow pairs that are not comparable in the zig-zag order
    """
    pass


class EmbeddingMismatchError(DQuiverError):
    """
    Exception for representations that do not match an embedding
    """
    pass


class BudgetExceededError(DQuiverError):
    """
    Exception for orbit enumerations over the configured budget
    """

    def __init__(self, message: str, count: int):
        super(BudgetExceededError, self).__init__(message)
        self.count = count


class AntisymmetryError(InternalError):
    """
    Exception for two distinct orbits that degenerate to each other
    """

    def __init__(self, message: str, dump: str):
        super(AntisymmetryError, self).__init__(message)
        self.dump = dump


class RankDeficientError(DQuiverError):
    """
    Exception for double Grassmannian inputs which are not of maximal rank
    """
    pass


class SpecFileError(DQuiverError):
    """
    Exception for unreadable or schema-invalid input files
    """

    def __init__(self, message: str, path: str = None, line: int = None):
        super(SpecFileError, self).__init__(message)
        self.path = path
        self.line = line
