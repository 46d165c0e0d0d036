"""Theorem registry, instance generators and the counterexample search driver."""

from .cases import COVERAGE, REGISTRY, TheoremCase
from .generators import (
    DEFAULT_GRID,
    InstanceGenerator,
    catalog_ifs,
    catalog_instance,
    draw_ifs,
    enumerate_ifs,
    generate_gsemigroups,
    generate_ifs,
    load_catalog,
)
from .runner import (
    TheoremReport,
    exit_status,
    machine_report,
    reverify,
    run_all,
    run_case,
    select_cases,
    summary_matrix,
)

__all__ = [
    "COVERAGE", "REGISTRY", "TheoremCase", "DEFAULT_GRID", "InstanceGenerator", "catalog_ifs",
    "catalog_instance", "draw_ifs", "enumerate_ifs", "generate_gsemigroups", "generate_ifs",
    "load_catalog", "TheoremReport", "exit_status", "machine_report", "reverify", "run_all",
    "run_case", "select_cases", "summary_matrix",
]
