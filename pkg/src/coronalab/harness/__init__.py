"""Theorem harness: exact values against closed formulas on corona families."""

from .checks import CHECKS, CHECKS_BY_ID, CheckSpec, Instance, Outcome
from .suite import (
    DEFAULT_G,
    DEFAULT_H,
    DEFAULT_KS,
    HARNESS_CAPS,
    SuiteConfig,
    check_instance,
    parse_family,
    report_json,
    run_suite,
)

__all__ = [
    "CHECKS",
    "CHECKS_BY_ID",
    "CheckSpec",
    "DEFAULT_G",
    "DEFAULT_H",
    "DEFAULT_KS",
    "HARNESS_CAPS",
    "Instance",
    "Outcome",
    "SuiteConfig",
    "check_instance",
    "parse_family",
    "report_json",
    "run_suite",
]
