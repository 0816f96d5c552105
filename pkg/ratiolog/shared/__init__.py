"""Shared libraries with no mathematics: error model, report envelopes, and named registries.

General guidelines:
    - Keep these modules free of sequence or polynomial logic so they can be reused by every command.
    - Values crossing these modules must be JSON compatible (str, int, float, bool, list, dict, None).
"""
