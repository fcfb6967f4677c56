"""Exhaustive-search limits, overridable via the TWO_RD_MAX_ORDER env var.

The limits are configuration, not complexity claims: they mark the graph
orders up to which the exhaustive searches are known to finish in sane time
on ordinary hardware.
"""

import os

ENV_MAX_ORDER = "TWO_RD_MAX_ORDER"

DEFAULT_BRUTEFORCE_MAX_ORDER = 24
DEFAULT_ENUMERATION_MAX_ORDER = 16
DEFAULT_ECCD_MAX_ORDER = 22


def _env_override():
    raw = os.environ.get(ENV_MAX_ORDER)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value >= 0 else None


def bruteforce_max_order():
    override = _env_override()
    return DEFAULT_BRUTEFORCE_MAX_ORDER if override is None else override


def enumeration_max_order():
    override = _env_override()
    return DEFAULT_ENUMERATION_MAX_ORDER if override is None else override


def eccd_max_order():
    override = _env_override()
    return DEFAULT_ECCD_MAX_ORDER if override is None else override
