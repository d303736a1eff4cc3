#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .app import build_parser, run

__all__ = ['build_parser', 'run']
