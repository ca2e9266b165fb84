"""Ordered semirings, quasirings and skew idempotent functionals.

A desk-scale computer-algebra toolkit: finite structures given by
operation tables, ordinals in Cantor normal form, shifted product
constructions, function spaces, idempotent functionals with their monad
structure, and convolution algebras over groupoid actions.  Every stated
law has an exhaustive or budgeted checker that reports concrete,
re-evaluable counterexample witnesses.
"""

from .errors import (
    CapacityError,
    IncomparableError,
    InputError,
    OrdalgError,
    PreconditionError,
    UndefinedValueError,
    WindowEscape,
)
from .order import (
    OrderedCarrier,
    OrderRelation,
    check_op_monotone,
    check_order_axioms,
    inf_over,
    maximal_chains,
    sup_over,
)
from .report import AxiomReport, Verdict
from .structures import (
    FinStruct,
    Homomorphism,
    boolean_semiring,
    check_exact_chain,
    check_homomorphism,
    check_law,
    direct_product,
    enumerate_ideals,
    image,
    is_simple,
    kernel,
    maxplus_chain,
    right_dist_only,
    trivial_structure,
)
from .ordinals import (
    MaxReduct,
    ONE,
    Ordinal,
    ZERO,
    format_ordinal,
    omega,
    omega_power,
    ord_add,
    ord_cmp,
    ord_mul,
    ord_sup,
    parse_ordinal,
)
from .sproduct import (
    IndexScheme,
    SuppElement,
    check_transfer_distributivity,
    componentwise_leq,
    find_nonassoc_witness,
    lex_compare,
    s_mu,
)
from .funcspace import FunctionSpace, KFunction
from .functionals import (
    Dirac,
    Functional,
    InfExtension,
    InfOver,
    Pushforward,
    SupOver,
    TableFunctional,
    check_homogeneous,
    check_idempotent,
    check_weak_properties,
    enumerate_functionals,
    enumerate_idempotent,
    extend_inf,
    extend_over_space,
    extensionally_equal,
    is_support,
    monad_check,
    pushforward,
    signature,
    support_of,
    supported_on,
    tabulate,
    weighted_combo,
)
from .convolution import (
    ActionSystem,
    ConvAlgebra,
    Convolution,
    Groupoid,
    all_kind_functionals,
    apply_T,
    check_action,
    check_ideal,
    check_invariant,
    check_kind,
    check_quasiring,
    convolve,
    dirac_unit,
    invariant_subfamily,
    plus_kind,
    saturate,
    support_bounds,
)

__version__ = "0.1.0"
