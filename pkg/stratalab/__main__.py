#!/usr/bin/env python3

"""Entry point."""

from script import main

main()
