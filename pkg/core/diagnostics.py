#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Non-fatal findings reported by lint, well-formedness and corpus checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

ERROR = 'error'
WARNING = 'warning'
NOTE = 'note'


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    code: str
    message: str
    span: Optional[object] = None
    source: Optional[str] = None

    def __str__(self):
        where = ''
        if self.span is not None:
            where = f"{self.span.line}:{self.span.column}: "
        prefix = f"{self.source}: " if self.source else ''
        return f"{prefix}{where}{self.severity}: {self.message} [{self.code}]"

    def located(self, source: str) -> 'Diagnostic':
        return Diagnostic(self.severity, self.code, self.message, self.span, source)
