"""Per-orbit counts for spin groups and their double covers: closed forms, left cells, Weyl group characters."""

__version__ = "0.1.0"
