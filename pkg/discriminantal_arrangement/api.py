# -*- coding: utf-8 -*-

from .constants import DEFAULT_SEED
from .constants import FieldTypeEnum
from .constants import PappusCarrierEnum
from .constants import PappusKindEnum
from .constants import CommandEnum
from .constants import ExitCodeEnum
from .exc import DiscrimError
from .exc import ScalarParseError
from .exc import MixedFieldError
from .exc import NotGenericError
from .exc import DegenerateSubsetError
from .exc import DuplicateLineError
from .exc import NoCollinearitiesError
from .exc import NotStrongError
from .exc import UncoverableFixedPointError
from .exc import AmbiguousCoverError
from .exc import PatternError
from .exc import DegenerateParametersError
from .exc import NoRationalSolutionError
from .config import Config
from .exactfield import QuadraticNumber
from .exactfield import Scalar
from .exactfield import quadratic
from .exactfield import sign
from .exactfield import parse_scalar
from .exactfield import format_scalar
from .exactfield import Field
from .exactfield import dot
from .exactfield import cross
from .exactfield import rref
from .exactfield import rank
from .exactfield import det
from .exactfield import kernel
from .exactfield import solution_space
from .arrangement import Hyperplane
from .arrangement import ProjectiveFlat
from .arrangement import GenericityReport
from .arrangement import Arrangement
from .arrangement import is_generic
from .arrangement import ensure_generic
from .arrangement import translate
from .arrangement import with_offsets
from .arrangement import trace_at_infinity
from .arrangement import homogeneous_lines
from .discriminantal import alpha_normal
from .discriminantal import DiscriminantalHyperplane
from .discriminantal import DiscriminantalArrangement
from .discriminantal import build
from .discriminantal import incident_subsets
from .lattice import Flat
from .lattice import closure
from .lattice import D_K
from .lattice import Lattice
from .lattice import LatticeBuilder
from .lattice import flats_up_to_rank
from .lattice import athanasiadis_predicate
from .lattice import SimpleIntersectionReport
from .lattice import classify
from .lattice import simple_intersections
from .lattice import VeryGenericReport
from .lattice import very_generic_report
from .planar import IncidencePoint
from .planar import IncidenceStats
from .planar import incidence_stats
from .planar import triple_points
from .planar import is_central
from .planar import double_points
from .planar import Collinearity
from .planar import collinearity_conditions
from .planar import ChartedArrangement
from .planar import affine_chart
from .planar import realize_translate
from .planar import QuadrilateralTranslate
from .planar import quadrilateral_translates
from .render import render_svg
from .orchard import m_upper_bound
from .orchard import TripleSystem
from .orchard import enumerate_systems
from .orchard import SystemEvaluation
from .orchard import evaluate_system
from .orchard import OrchardWitness
from .orchard import OrchardResult
from .orchard import OrchardSearch
from .orchard import orchard_max
from .completion.involution import Involution
from .completion.involution import all_involutions
from .completion.involution import is_strong
from .completion.involution import strong_involutions
from .completion.sigma import CompletionResult
from .completion.sigma import sigma_completion
from .completion.sigma import union_lines
from .completion.pappus import PappusParams
from .completion.pappus import PAPPUS_INSTANCES
from .completion.pappus import axes_concurrent
from .completion.pappus import pappus_generator
from .completion.pappus import concurrency_tune
from .completion.pappus import four_collinearity_tune
from .completion.certify import collinearity_flat
from .completion.certify import independent
from .completion.certify import purely_dependent
from .completion.certify import triple_flats
from .completion.certify import max_independent_count
from .completion.certify import UnionCertificate
from .completion.certify import union_certify
from .completion.certify import ChartWitness
from .completion.certify import completion_charts
from .completion.certify import ClauseVerdict
from .completion.certify import ConjectureReport
from .completion.certify import conjecture_report
from .completion.pipeline import PappusRun
from .completion.pipeline import PappusReport
from .completion.pipeline import PappusPipeline
