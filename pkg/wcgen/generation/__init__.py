"""Separator-based and two-pair generators, plus the phase bookkeeping they share."""
