"""contextua: contextuality of Pauli observable sets, and what it computes.

The library decides whether a finite set of Pauli observables admits a
noncontextual value assignment (a global section of its spectral presheaf),
produces an explicit parity-contradiction certificate when it does not, and
simulates measurement-based mod-2 computations to exhibit the link between
contextuality of the resource and nonlinearity of the computed function.
"""
from .contexts import (
    ContextGroup,
    ContextPoset,
    MinusIdentityError,
    NonCommutingGeneratorsError,
    Relation,
    build_poset,
    close_context,
    commutation_graph,
    maximal_contexts,
)
from .gf2 import (
    AffineForm,
    Certificate,
    Gf2Solution,
    Gf2System,
    fit_affine,
    input_vector,
    solve,
    verify_certificate,
)
from .mbqc import (
    ContextualityReport,
    IndeterminateInputsError,
    InvalidResourceError,
    LinearOutputMap,
    MBQCInstance,
    NonLocalObservableError,
    ShapeMismatchError,
    SpecialContextNotStabilizingError,
    TruthTable,
    contextuality_report,
    joint_observable,
    linear_output_map,
    mbqc_contexts,
    run,
    truth_table,
    validate_instance,
)
from .pauli import (
    NonHermitianError,
    PauliOperator,
    PauliParseError,
    commutes,
    format_pauli,
    from_letter,
    identity,
    multiply,
    multiply_all,
    parse_pauli,
)
from .presheaf import (
    Empty,
    EmptySpectrumError,
    GlobalSection,
    NotASubcontextError,
    StateConstraint,
    TooLargeError,
    UnknownConstrainedObservableError,
    Valuation,
    brute_force_global,
    build_global_problem,
    restrict,
    section_valuation,
    solve_global,
    spectrum,
)
from .report import TOOL_VERSION
from .stabilizer import (
    DenseState,
    DependentGeneratorsError,
    MemberSign,
    StabilizerGroup,
    WidthTooLargeError,
    apply_pauli,
    expectation,
    make_stabilizer,
    member_sign,
    state_vector,
)

__version__ = TOOL_VERSION

__all__ = [
    "AffineForm",
    "Certificate",
    "ContextGroup",
    "ContextPoset",
    "ContextualityReport",
    "DenseState",
    "DependentGeneratorsError",
    "Empty",
    "EmptySpectrumError",
    "Gf2Solution",
    "Gf2System",
    "GlobalSection",
    "IndeterminateInputsError",
    "InvalidResourceError",
    "LinearOutputMap",
    "MBQCInstance",
    "MemberSign",
    "MinusIdentityError",
    "NonCommutingGeneratorsError",
    "NonHermitianError",
    "NonLocalObservableError",
    "NotASubcontextError",
    "PauliOperator",
    "PauliParseError",
    "Relation",
    "ShapeMismatchError",
    "SpecialContextNotStabilizingError",
    "StabilizerGroup",
    "StateConstraint",
    "TooLargeError",
    "TruthTable",
    "UnknownConstrainedObservableError",
    "Valuation",
    "WidthTooLargeError",
    "apply_pauli",
    "brute_force_global",
    "build_global_problem",
    "build_poset",
    "close_context",
    "commutation_graph",
    "commutes",
    "contextuality_report",
    "expectation",
    "fit_affine",
    "format_pauli",
    "from_letter",
    "identity",
    "input_vector",
    "joint_observable",
    "linear_output_map",
    "make_stabilizer",
    "maximal_contexts",
    "mbqc_contexts",
    "member_sign",
    "multiply",
    "multiply_all",
    "parse_pauli",
    "restrict",
    "run",
    "section_valuation",
    "solve",
    "solve_global",
    "spectrum",
    "state_vector",
    "truth_table",
    "validate_instance",
    "verify_certificate",
    "__version__",
]
