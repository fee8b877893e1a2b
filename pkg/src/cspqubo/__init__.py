"""QUBO formulations of the closest string problem, with exact and annealing solvers."""
from .advisor import (
    AdvisorReport,
    a_range,
    advise,
    chain_strength_guideline,
    max_hb_bound,
    min_ha_exact,
    min_ha_paper,
    qpu_capacity,
)
from .analysis import DecodedOutcome, OccurrenceReport, decode, occurrence_report
from .builder import (
    NUMERIC,
    STANDARD,
    HamiltonianKind,
    PenaltyParams,
    build_hamiltonian,
    build_objective_numeric,
    build_objective_standard,
    build_penalty,
    build_per_position,
    energy,
    hamiltonian_energy_direct,
)
from .core import CspInstance, IsingModel, QuboModel, flat_index, to_ising, validate_instance, var_index
from .distance import (
    brute_force_closest,
    delta_i,
    hamming_distance,
    hamming_f,
    per_position_argmin,
    position_alphabet,
    sum_distance,
)
from .sampler import AnnealSchedule, SampleSet, sample_sa, solve_decomposed, solve_exhaustive
