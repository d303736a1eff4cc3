#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import importlib
from pathlib import Path

import pytest

from core.costs import NODES
from semantics.model import CostSignature

ROOT = Path(__file__).resolve().parent.parent
PACKAGES = ('core', 'grammar', 'semantics', 'instances', 'validator', 'solvers', 'catalog', 'cli', 'config', 'utils')
MODULES = sorted(
    f"{package}.{path.stem}"
    for package in PACKAGES
    for path in (ROOT / package).glob('*.py')
    if path.stem != '__init__'
)


@pytest.mark.parametrize('name', PACKAGES + ('main',))
def test_package_imports(name):
    assert importlib.import_module(name) is not None


@pytest.mark.parametrize('name', MODULES)
def test_module_imports(name):
    assert importlib.import_module(name) is not None


def test_cost_signature_keeps_its_derived_fields():
    signature = CostSignature('avail_i', NODES, 'ℝ≥0', family_index='i', family_upper='m')
    assert signature.base == 'avail'
    assert signature.is_family
    assert not signature.is_waiting
    assert signature.declared_property is None
