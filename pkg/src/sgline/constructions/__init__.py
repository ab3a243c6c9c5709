"""Constructions A-D: plan types, validators, appliers and samplers."""

from .construction_a import apply_plan_a, candidate_elements, sample_plan_a, validate_plan_a
from .construction_b import (
    apply_plan_b,
    apply_plan_c,
    apply_plan_d,
    derive_block_signs,
    plan_b_from_d,
    subdivide,
    validate_plan_b,
    validate_plan_c,
)
from .planfile import parse_plan, serialize_plan
from .plans import PlanA, PlanB, PlanC, PlanD, Violation, plan_c_from_b
from .sampling import random_base_graph, sample_plan_b, sample_plan_c, sample_plan_d

__all__ = [
    "PlanA",
    "PlanB",
    "PlanC",
    "PlanD",
    "Violation",
    "apply_plan_a",
    "apply_plan_b",
    "apply_plan_c",
    "apply_plan_d",
    "candidate_elements",
    "derive_block_signs",
    "parse_plan",
    "plan_b_from_d",
    "plan_c_from_b",
    "random_base_graph",
    "sample_plan_a",
    "sample_plan_b",
    "sample_plan_c",
    "sample_plan_d",
    "serialize_plan",
    "subdivide",
    "validate_plan_a",
    "validate_plan_b",
    "validate_plan_c",
]
