# Numerical services; each module is importable on its own.
