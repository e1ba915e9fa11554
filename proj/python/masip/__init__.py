"""Instruction-set reuse analysis for multi-application processors."""

from ._masip import (
    ConsistencyError,
    InputError,
    IsaCatalog,
    MasipError,
    UsageError,
    analyze_group,
    base_instruction_set,
    build_profile,
    enumerate_combinations,
    extension_set,
    extra_cost_factor,
    load_catalog,
    masip_union,
    parse_assembly,
    parse_catalog,
    reusability_factor,
    run_cli,
    run_suite,
    set_name,
)

__all__ = [
    "ConsistencyError",
    "InputError",
    "IsaCatalog",
    "MasipError",
    "UsageError",
    "analyze_group",
    "base_instruction_set",
    "build_profile",
    "enumerate_combinations",
    "extension_set",
    "extra_cost_factor",
    "load_catalog",
    "masip_union",
    "parse_assembly",
    "parse_catalog",
    "reusability_factor",
    "run_cli",
    "run_suite",
    "set_name",
]
