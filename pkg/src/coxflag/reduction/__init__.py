"""Change of omega under lowering edge weights, and the coefficient families behind it."""
from .deltas import (FinitenessViolation, PreconditionViolated, delta_omega_by_subdiagrams,
                     delta_omega_direct, delta_omega_formula)
from .pipeline import PipelineResult, ReductionStep, reduce_edge, reduce_pipeline
