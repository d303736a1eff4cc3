#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Variant catalog.

The corpus directory holds one ``.t3co`` file per entry and an
``index.toml`` with the metadata of every entry::

    [[entry]]
    id = "standard-metric"
    family = "standard"
    bounds = [
        "lower ; 123/122 ; KLS2015 ; confirmed",
        "upper ; 3/2 − 10⁻³⁶ ; karlin2021slightly ; unconfirmed",
    ]

``file`` defaults to ``<id>.t3co``. Optional keys are ``pair`` (the entry
this one is equivalent to on a different graph), ``same_as`` (the same
definition written in the other notation), ``merged`` (ids of table rows
with an identical definition folded into this entry) and ``note``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

try:
    import tomllib
except ImportError:
    import tomli as tomllib

from core.diagnostics import ERROR, Diagnostic
from core.errors import CatalogError, T3coError, T3coSyntaxError
from grammar.ast_nodes import VariantAst
from grammar.parser import parse
from grammar.render import render
from semantics.model import ResolvedVariant
from semantics.resolver import resolve, resolved_equal
from semantics.wellformed import check_wellformed
from utils.log import get_logger

logger = get_logger(__name__)

FAMILIES = (
    'standard', 'path', 'bottleneck', 'max-scatter', 'generalized', 'clustered', 'purchaser',
    'profitable-tour', 'quota', 'prize-collecting', 'orienteering', 'time-dependent',
    'time-windows', 'orienteering-tw',
)

LOWER = 'lower'
UPPER = 'upper'
CONFIRMED = 'confirmed'
UNCONFIRMED = 'unconfirmed'

INDEX_FILE = 'index.toml'
DEFAULT_CORPUS = Path(__file__).resolve().parent / 'corpus'


@dataclass(frozen=True)
class Bound:
    """
    One approximability result. The expression is kept as text and never
    evaluated.

    Attributes:
        kind: 'lower' or 'upper'
        expression: bound as printed, e.g. "3/2 − 10⁻³⁶"
        citation: citation key, empty when the row gives none
        confirmed: True or False when the row is marked, None otherwise
    """
    kind: str
    expression: str
    citation: str = ''
    confirmed: Optional[bool] = None

    @classmethod
    def from_text(cls, text: str) -> 'Bound':
        """
        Parse ``kind ; expression ; citation ; confirmed|unconfirmed``; the
        last two parts may be left out.

        Raises:
            CatalogError: On an unknown kind or confirmation marker
        """
        parts = [part.strip() for part in text.split(';')]
        if len(parts) < 2 or len(parts) > 4:
            raise CatalogError(f"Malformed bound {text!r}")
        parts += [''] * (4 - len(parts))
        kind, expression, citation, marker = parts
        if kind not in (LOWER, UPPER):
            raise CatalogError(f"Bound kind must be lower or upper, got {kind!r}")
        if marker not in ('', CONFIRMED, UNCONFIRMED):
            raise CatalogError(f"Bound marker must be confirmed or unconfirmed, got {marker!r}")
        confirmed = None if not marker else marker == CONFIRMED
        return cls(kind, expression, citation, confirmed)

    def __str__(self):
        marker = '' if self.confirmed is None else (CONFIRMED if self.confirmed else UNCONFIRMED)
        return ' ; '.join(part for part in (self.kind, self.expression, self.citation, marker) if part)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    family: str
    file: str
    definition_text: str
    bounds: Tuple[Bound, ...] = ()
    pair: Optional[str] = None
    same_as: Optional[str] = None
    merged: Tuple[str, ...] = ()
    note: str = ''

    def ast(self) -> VariantAst:
        return parse(self.definition_text)

    def resolve(self) -> ResolvedVariant:
        return resolve(self.ast())

    @property
    def notation(self) -> str:
        return self.ast().notation

    @property
    def extensions(self) -> Tuple[str, ...]:
        """Annotation texts as ``⊕tag: text`` lines."""
        extension = self.ast().extension
        if extension is None:
            return ()
        return tuple(f"⊕{a.tag}: {a.text}" for a in extension.annotations)

    def bounds_of(self, kind: str) -> Tuple[Bound, ...]:
        return tuple(bound for bound in self.bounds if bound.kind == kind)


class CatalogManager:
    """
    Loads the corpus lazily and answers listing and lookup queries
    """
    def __init__(self, corpus_dir=None):
        self.corpus_dir = Path(corpus_dir) if corpus_dir else DEFAULT_CORPUS
        self.index_path = self.corpus_dir / INDEX_FILE
        self._entries: Optional[Dict[str, CatalogEntry]] = None
        self._problems: List[Diagnostic] = []

    def read_index(self) -> List[dict]:
        """
        Read the raw index records

        Returns:
            list: one dict per [[entry]] table

        Raises:
            CatalogError: If the index is missing or not valid TOML
        """
        try:
            if not self.index_path.exists():
                raise CatalogError(f"Catalog index not found at {self.index_path}")
            with self.index_path.open('rb') as handle:
                data = tomllib.load(handle)
        except CatalogError:
            raise
        except Exception as e:
            raise CatalogError(f"Error reading catalog index: {str(e)}")
        records = data.get('entry', [])
        if not isinstance(records, list):
            raise CatalogError("Catalog index must consist of [[entry]] tables")
        return records

    def _entry(self, record: dict) -> CatalogEntry:
        entry_id = record.get('id')
        family = record.get('family')
        if not entry_id or not family:
            raise CatalogError(f"Catalog record without id or family: {record}")
        file_name = record.get('file', f"{entry_id}.t3co")
        path = self.corpus_dir / file_name
        try:
            text = path.read_text(encoding='utf-8')
        except OSError as e:
            raise CatalogError(f"Cannot read {path}: {e.strerror or e}")
        bounds = tuple(Bound.from_text(item) for item in record.get('bounds', []))
        return CatalogEntry(
            id=entry_id,
            family=family,
            file=file_name,
            definition_text=text,
            bounds=bounds,
            pair=record.get('pair'),
            same_as=record.get('same_as'),
            merged=tuple(record.get('merged', [])),
            note=record.get('note', ''),
        )

    def _load(self) -> Dict[str, CatalogEntry]:
        if self._entries is not None:
            return self._entries
        entries: Dict[str, CatalogEntry] = {}
        problems: List[Diagnostic] = []
        for record in self.read_index():
            try:
                entry = self._entry(record)
            except CatalogError as e:
                problems.append(Diagnostic(ERROR, 'index', str(e), source=record.get('id')))
                continue
            if entry.id in entries:
                problems.append(Diagnostic(ERROR, 'index', "Duplicate catalog id", source=entry.id))
                continue
            entries[entry.id] = entry
        logger.info(f"Loaded {len(entries)} catalog entries from {self.corpus_dir}")
        for problem in problems:
            logger.warning(str(problem))
        self._entries = entries
        self._problems = problems
        return entries

    def families(self) -> Tuple[str, ...]:
        return FAMILIES

    def list(self, family: Optional[str] = None) -> List[CatalogEntry]:
        """
        Entries sorted by id, optionally restricted to one family

        Raises:
            CatalogError: If the family is unknown
        """
        if family is not None and family not in FAMILIES:
            raise CatalogError(f"Unknown family {family!r}; known families: {', '.join(FAMILIES)}")
        entries = self._load().values()
        return sorted((e for e in entries if family is None or e.family == family), key=lambda e: e.id)

    def get(self, entry_id: str) -> CatalogEntry:
        """
        Raises:
            CatalogError: If no entry has this id
        """
        entry = self._load().get(entry_id)
        if entry is None:
            raise CatalogError(f"Unknown catalog id {entry_id!r}")
        return entry

    def verify_corpus(self) -> List[Diagnostic]:
        """
        Check every entry of the corpus.

        Every definition must parse, resolve without well-formedness errors
        and print canonically to a text that parses back to the same
        variant. Paired entries must point at each other and resolve to
        different variants; ``same_as`` entries must resolve equal.

        Returns:
            list: Diagnostic entries, empty for a clean corpus
        """
        entries = self._load()
        diagnostics = list(self._problems)
        resolved: Dict[str, ResolvedVariant] = {}

        for entry in sorted(entries.values(), key=lambda e: e.id):
            if entry.family not in FAMILIES:
                diagnostics.append(Diagnostic(ERROR, 'family', f"Unknown family {entry.family}", source=entry.id))
            try:
                ast = entry.ast()
            except T3coSyntaxError as e:
                diagnostics.append(Diagnostic(ERROR, 'parse', str(e), e.span, source=entry.id))
                continue
            try:
                variant = resolve(ast)
            except T3coError as e:
                diagnostics.append(Diagnostic(ERROR, 'resolve', str(e), source=entry.id))
                continue
            resolved[entry.id] = variant
            for finding in check_wellformed(variant):
                # several travelers are describable, just not executable
                if finding.severity == ERROR and finding.code != 'traveler-count':
                    diagnostics.append(finding.located(entry.id))
            diagnostics.extend(self._round_trip(entry, ast, variant))

        for entry in sorted(entries.values(), key=lambda e: e.id):
            if entry.id not in resolved:
                continue
            if entry.pair is not None:
                diagnostics.extend(self._check_pair(entry, entries, resolved))
            if entry.same_as is not None:
                other = resolved.get(entry.same_as)
                if other is None:
                    diagnostics.append(Diagnostic(
                        ERROR, 'same-as', f"same_as names missing entry {entry.same_as}", source=entry.id))
                elif not resolved_equal(resolved[entry.id], other):
                    diagnostics.append(Diagnostic(
                        ERROR, 'same-as', f"Does not resolve equal to {entry.same_as}", source=entry.id))

        if diagnostics:
            logger.warning(f"Corpus verification found {len(diagnostics)} problem(s)")
        else:
            logger.info(f"Corpus verified: {len(entries)} entries")
        return diagnostics

    @staticmethod
    def _round_trip(entry: CatalogEntry, ast: VariantAst, variant: ResolvedVariant) -> List[Diagnostic]:
        canonical = render(ast)
        try:
            again = parse(canonical)
            variant_again = resolve(again)
        except T3coError as e:
            return [Diagnostic(ERROR, 'round-trip', f"Canonical text does not parse back: {e}", source=entry.id)]
        problems = []
        if render(again) != canonical:
            problems.append(Diagnostic(ERROR, 'round-trip', "Canonical text is not a fixpoint", source=entry.id))
        if not resolved_equal(variant, variant_again):
            problems.append(Diagnostic(ERROR, 'round-trip', "Canonical text resolves differently", source=entry.id))
        return problems

    @staticmethod
    def _check_pair(entry: CatalogEntry, entries: Dict[str, CatalogEntry],
                    resolved: Dict[str, ResolvedVariant]) -> List[Diagnostic]:
        partner = entries.get(entry.pair)
        if partner is None:
            return [Diagnostic(ERROR, 'pair', f"pair names missing entry {entry.pair}", source=entry.id)]
        if partner.pair != entry.id:
            return [Diagnostic(ERROR, 'pair', f"{entry.pair} does not pair back", source=entry.id)]
        other = resolved.get(partner.id)
        if other is not None and resolved_equal(resolved[entry.id], other):
            return [Diagnostic(ERROR, 'pair', f"Resolves equal to its pair {partner.id}", source=entry.id)]
        return []
