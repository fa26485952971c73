# This file makes the 'app' directory a Python package.
# The command-line entry point is app.cli.main.
