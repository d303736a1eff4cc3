#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exception hierarchy shared by every package of the toolkit.

All domain failures derive from ``T3coError`` which itself is a ``ValueError``,
so callers that only know about ``ValueError`` keep working.
"""


class T3coError(ValueError):
    """Base class for all toolkit errors"""


class WalkReferenceError(T3coError):
    """A walk names a node or edge id that the graph does not declare"""

    def __init__(self, ident, kind='node'):
        self.ident = ident
        self.kind = kind
        super().__init__(f"Unknown {kind} id in walk: {ident}")


class WalkIndexError(T3coError, IndexError):
    """Visited-node index outside the walk"""


class AmbiguityError(T3coError):
    """The originating proper walk cannot be restored uniquely"""

    def __init__(self, message, candidates=()):
        self.candidates = tuple(candidates)
        super().__init__(message)


class BindingError(T3coError):
    """A symbol required by a variant has no value in the instance or solution"""


class T3coSyntaxError(T3coError):
    """Parse failure with location and the set of expected tokens"""

    def __init__(self, message, span=None, expected=()):
        self.span = span
        self.expected = frozenset(expected)
        location = f" at line {span.line}, column {span.column}" if span is not None else ""
        hint = f" (expected one of: {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message}{location}{hint}")


class MixedNotationError(T3coSyntaxError):
    """Longhand field labels and shorthand bars used in one definition"""


class MissingFieldError(T3coSyntaxError):
    """Fewer (or more) than five fields"""


class ResolutionError(T3coError):
    """An unnamed value matches no attribute, or more than one"""

    def __init__(self, message, candidates=()):
        self.candidates = tuple(candidates)
        if self.candidates:
            message = f"{message} (candidates: {', '.join(self.candidates)})"
        super().__init__(message)


class RegistryError(T3coError):
    """Unknown attribute name for a field"""


class UnsupportedObjectiveError(T3coError):
    """Objective expression outside the supported statement catalog"""

    def __init__(self, message, subtree=''):
        self.subtree = subtree
        super().__init__(f"{message}: {subtree}" if subtree else message)


class UnsupportedError(T3coError):
    """Semantics the toolkit parses but cannot execute"""


class SchemaError(T3coError):
    """Malformed instance or solution file"""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class RangeError(SchemaError):
    """Value outside the declared range of its cost function"""


class InstanceInvariantError(T3coError):
    """Instance data contradicts itself, e.g. r(v) > d(v)"""


class UnsupportedFormatError(T3coError):
    """TSPLIB keyword or value outside the supported subset"""

    def __init__(self, keyword, value=None):
        self.keyword = keyword
        detail = f"{keyword}: {value}" if value is not None else keyword
        super().__init__(f"Unsupported TSPLIB feature {detail}")


class ClosureError(T3coError):
    """Metric closure impossible, e.g. disconnected graph"""

    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)


class PreconditionError(T3coError):
    """A heuristic was called on an instance it does not support"""


class CatalogError(T3coError):
    """Unknown catalog id or family, or unreadable corpus"""
