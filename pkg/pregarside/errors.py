"""Exceptions raised by pregarside.

Every error the library raises on bad input or on a structural refusal
derives from :class:`PgkError`; the command line maps it to exit code 2.
"""


class PgkError(Exception):
    pass


class ParseError(PgkError, ValueError):
    def __init__(self, message: str, line: int = None, column: int = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        if self.column is None:
            return f'line {self.line}: {self.message}'
        return f'line {self.line}, column {self.column}: {self.message}'


class DuplicateAtom(ParseError):
    pass


class UnknownAtom(ParseError):
    pass


class MalformedRelation(ParseError):
    pass


class InvalidWord(PgkError, ValueError):
    pass


class ConflictingComplement(PgkError):
    pass


class NotAtomic(PgkError):
    def __init__(self, non_atoms):
        self.non_atoms = tuple(non_atoms)
        super().__init__(
            f'generators are not atoms: {", ".join(self.non_atoms)}')


class GraphMismatch(PgkError):
    pass


class NotParabolic(PgkError):
    pass


class IntersectionNotParabolic(PgkError):
    pass


class NoValidSplit(PgkError):
    pass


class SearchExhausted(PgkError):
    def __init__(self, max_word_length: int, atoms=()):
        self.max_word_length = max_word_length
        self.atoms = tuple(atoms)
        super().__init__(
            f'no Garside element on {{{", ".join(self.atoms)}}} '
            f'among words of length <= {max_word_length}')


class ClosureBudgetExceeded(PgkError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f'rewriting closure exceeded {limit} words')


class PreconditionViolated(PgkError, ValueError):
    pass
