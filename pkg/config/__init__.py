#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .settings import CONFIG_FILE, SettingsManager

__all__ = ['CONFIG_FILE', 'SettingsManager']
