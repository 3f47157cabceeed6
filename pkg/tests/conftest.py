# Keeps tests/ importable (helpers.py) without making it a package.
