"""Exact tools for qudit stabilizer and entanglement-assisted codes.

Codes are integer symplectic matrices over a prime local dimension ``q``.  The
main entry point, :func:`transform`, lifts an entanglement-assisted code to a
set of generators that commute modulo a different prime ``p`` while staying
identical modulo ``q``.
"""

__version__ = "0.1.0"

from .canonical import CanonicalForm, HadamardSwap, RegisterSwap, canonicalize, replay
from .codefile import format_code_file, parse_code_file, read_code_file, write_code_file
from .distance import DistanceReport, detection_distance, nondegeneracy_check, oracle_distance
from .errors import *  # noqa: F401,F403
from .modular import (
    PrimeModulus,
    RowAdd,
    RowScale,
    RowSwap,
    eval_p_star,
    is_prime,
    mod_inverse,
    rank_mod,
    rref_mod,
    solve_in_rowspace,
)
from .pauli import (
    CodeSpec,
    PauliTerm,
    PhiVector,
    code_from_paulis,
    compose,
    format_pauli_string,
    hadamard_swap,
    parse_pauli_string,
    phi_of_pauli,
    register_swap,
    weight,
)
from .rates import RatesReport, rates
from .symplectic import (
    CommutatorMatrix,
    EntanglementReport,
    commutator_matrix,
    in_group,
    min_entanglement,
    symplectic_product,
    undetectable_kernel,
)
from .transform import (
    BoundsReport,
    CommutatorDecomposition,
    TransformResult,
    VerificationReport,
    bounds,
    check_lift,
    decompose,
    entry_bound,
    lifted_entry_bound,
    prime_scan,
    threshold,
    transform,
    verify,
)
