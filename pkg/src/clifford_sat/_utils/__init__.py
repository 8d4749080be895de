"""Internal utilities package for clifford-sat.

This package contains internal utility modules that are used by other
components within clifford-sat. These utilities are not part of the
public API and should not be imported directly by external users.
"""
