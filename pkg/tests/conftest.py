#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from pathlib import Path

import pytest

from grammar.parser import parse
from instances.native_format import load_native
from semantics.resolver import resolve

FIXTURES = Path(__file__).resolve().parent / 'fixtures'


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text(encoding='utf-8')


def variant_of(text: str):
    return resolve(parse(text))


@pytest.fixture
def worked_example():
    return load_native(fixture_text('worked-example.t3i'))


@pytest.fixture
def fixture_variant():
    def load(name: str):
        return variant_of(fixture_text(name))
    return load


@pytest.fixture(autouse=True)
def _clean_environment(monkeypatch):
    for name in ('T3CO_CONFIG', 'T3CO_CORPUS_DIR', 'T3CO_LOG_LEVEL', 'T3CO_DEBUG',
                 'T3CO_MAX_NODES', 'T3CO_MAX_WALK_EDGES', 'T3CO_TIME_BUDGET', 'T3CO_WORKERS'):
        monkeypatch.delenv(name, raising=False)


CORPUS = Path(__file__).resolve().parent.parent / 'catalog' / 'corpus'


def corpus_text(entry_id: str) -> str:
    return (CORPUS / f"{entry_id}.t3co").read_text(encoding='utf-8')
