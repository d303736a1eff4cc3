#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .manager import (
    CONFIRMED, DEFAULT_CORPUS, FAMILIES, LOWER, UNCONFIRMED, UPPER,
    Bound, CatalogEntry, CatalogManager,
)

__all__ = [
    'CONFIRMED', 'DEFAULT_CORPUS', 'FAMILIES', 'LOWER', 'UNCONFIRMED', 'UPPER',
    'Bound', 'CatalogEntry', 'CatalogManager',
]
