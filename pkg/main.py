#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import sys

from cli.app import run


def main(argv=None):
    """Main entry point for the toolkit"""
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
