"""Exception types raised by the library; the CLI maps them to exit codes."""


class KwClassifyError(Exception):
    """Base class for all library errors."""


class CorpusError(KwClassifyError, ValueError):
    """Corpus could not be loaded or split."""


class CandidateError(KwClassifyError, ValueError):
    """Candidate keyword file is malformed."""


class InsufficientVocabularyError(KwClassifyError, ValueError):
    def __init__(self, k: int, available: int):
        self.k = k
        self.available = available
        super().__init__(
            f"insufficient vocabulary: k={k} requested but only {available} "
            f"keyword(s) have a nonzero count"
        )


class ModelValidationError(KwClassifyError, ValueError):
    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        msg = f"model validation failed ({invariant})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class GenSpecError(KwClassifyError, ValueError):
    def __init__(self, field: str, detail: str):
        self.field = field
        super().__init__(f"invalid generator spec field {field!r}: {detail}")
