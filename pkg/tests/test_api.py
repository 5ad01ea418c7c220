# -*- coding: utf-8 -*-

from discriminantal_arrangement import api


def test():
    _ = api
    _ = api.DEFAULT_SEED
    _ = api.FieldTypeEnum
    _ = api.PappusCarrierEnum
    _ = api.PappusKindEnum
    _ = api.CommandEnum
    _ = api.ExitCodeEnum
    _ = api.DiscrimError
    _ = api.ScalarParseError
    _ = api.MixedFieldError
    _ = api.NotGenericError
    _ = api.DegenerateSubsetError
    _ = api.DuplicateLineError
    _ = api.NoCollinearitiesError
    _ = api.NotStrongError
    _ = api.UncoverableFixedPointError
    _ = api.AmbiguousCoverError
    _ = api.PatternError
    _ = api.DegenerateParametersError
    _ = api.NoRationalSolutionError
    _ = api.Config
    _ = api.QuadraticNumber
    _ = api.Scalar
    _ = api.quadratic
    _ = api.sign
    _ = api.parse_scalar
    _ = api.format_scalar
    _ = api.Field
    _ = api.dot
    _ = api.cross
    _ = api.rref
    _ = api.rank
    _ = api.det
    _ = api.kernel
    _ = api.solution_space
    _ = api.Hyperplane
    _ = api.ProjectiveFlat
    _ = api.GenericityReport
    _ = api.Arrangement
    _ = api.is_generic
    _ = api.ensure_generic
    _ = api.translate
    _ = api.with_offsets
    _ = api.trace_at_infinity
    _ = api.homogeneous_lines
    _ = api.alpha_normal
    _ = api.DiscriminantalHyperplane
    _ = api.DiscriminantalArrangement
    _ = api.build
    _ = api.incident_subsets
    _ = api.Flat
    _ = api.closure
    _ = api.D_K
    _ = api.Lattice
    _ = api.LatticeBuilder
    _ = api.flats_up_to_rank
    _ = api.athanasiadis_predicate
    _ = api.SimpleIntersectionReport
    _ = api.classify
    _ = api.simple_intersections
    _ = api.VeryGenericReport
    _ = api.very_generic_report
    _ = api.IncidencePoint
    _ = api.IncidenceStats
    _ = api.incidence_stats
    _ = api.triple_points
    _ = api.is_central
    _ = api.double_points
    _ = api.Collinearity
    _ = api.collinearity_conditions
    _ = api.ChartedArrangement
    _ = api.affine_chart
    _ = api.realize_translate
    _ = api.QuadrilateralTranslate
    _ = api.quadrilateral_translates
    _ = api.render_svg
    _ = api.m_upper_bound
    _ = api.TripleSystem
    _ = api.enumerate_systems
    _ = api.SystemEvaluation
    _ = api.evaluate_system
    _ = api.OrchardWitness
    _ = api.OrchardResult
    _ = api.OrchardSearch
    _ = api.orchard_max
    _ = api.Involution
    _ = api.all_involutions
    _ = api.is_strong
    _ = api.strong_involutions
    _ = api.CompletionResult
    _ = api.sigma_completion
    _ = api.union_lines
    _ = api.PappusParams
    _ = api.PAPPUS_INSTANCES
    _ = api.axes_concurrent
    _ = api.pappus_generator
    _ = api.concurrency_tune
    _ = api.four_collinearity_tune
    _ = api.collinearity_flat
    _ = api.independent
    _ = api.purely_dependent
    _ = api.triple_flats
    _ = api.max_independent_count
    _ = api.UnionCertificate
    _ = api.union_certify
    _ = api.ChartWitness
    _ = api.completion_charts
    _ = api.ClauseVerdict
    _ = api.ConjectureReport
    _ = api.conjecture_report
    _ = api.PappusRun
    _ = api.PappusReport
    _ = api.PappusPipeline


if __name__ == "__main__":
    from discriminantal_arrangement.tests import run_cov_test

    run_cov_test(
        __file__,
        "discriminantal_arrangement.api",
        preview=False,
    )
