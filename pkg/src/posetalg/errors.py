"""Exception hierarchy shared by every module."""


class PosetError(Exception):
    pass


class DuplicateName(PosetError):
    pass


class UnknownName(PosetError):
    pass


class CycleDetected(PosetError):
    pass


class NotBounded(PosetError):
    pass


class NotComplemented(PosetError):
    pass


class NotBoolean(PosetError):
    pass


class EmptyArgument(PosetError):
    pass


class SizeTooLarge(PosetError):
    pass


class AxiomsFail(PosetError):
    """Raised when a construction needs a structure whose axioms do not hold."""

    def __init__(self, report):
        super().__init__(f"{report.title}: axioms fail ({', '.join(report.failed_labels())})")
        self.report = report


class ConsistencyFail(PosetError):
    pass


class ParseError(PosetError):
    pass


class KindMismatch(PosetError):
    pass


class MissingComplement(PosetError):
    pass
