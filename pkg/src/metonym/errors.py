"""Exception types shared across the package."""


class MetonymError(Exception):
    pass


class MalformedLine(MetonymError):
    def __init__(self, lineno, message=""):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if message else f"line {lineno}")


class CycleDetected(MetonymError):
    def __init__(self, names):
        self.names = list(names)
        super().__init__("is-a cycle: " + " -> ".join(self.names))


class UnknownCategory(MetonymError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown category {name!r}")


class UnknownWord(MetonymError):
    def __init__(self, word):
        self.word = word
        super().__init__(f"word {word!r} is not in the lexicon")


class VerbNotInDictionary(MetonymError):
    def __init__(self, verb):
        self.verb = verb
        super().__init__(f"verb {verb!r} has no case frames")


class MalformedToken(MetonymError):
    def __init__(self, line, position, token=""):
        self.line = line
        self.position = position
        self.token = token
        super().__init__(f"line {line}, token {position}: malformed token {token!r}")


class FormatVersionMismatch(MetonymError):
    pass


class IndexIOError(MetonymError, OSError):
    """The index file ended early or its body does not parse."""
