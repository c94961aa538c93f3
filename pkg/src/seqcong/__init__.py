"""Sequentially congruent partitions: representations, bijections, and ideal analysis."""

from .bijections import (
    CNotation,
    from_c_notation,
    is_seq_congruent,
    pi_map,
    pi_sigma_closed_form,
    psi_inverse,
    psi_map,
    render_square_decomposition,
    sigma_map,
    to_c_notation,
)
from .counting import (
    CountSeries,
    count_all_partitions,
    count_into_powers,
    count_members,
    enumerate_partitions,
    enumerate_seqcong_by_largest,
    enumerate_seqcong_by_size,
    enumerate_with_parts_from,
    iter_partition_tuples,
)
from .errors import (
    CanonicalFormError,
    ContainmentError,
    DomainError,
    HorizonError,
    NotSequentiallyCongruentError,
    SpecError,
)
from .generalized import (
    GenSpec,
    NNotation,
    SequenceRule,
    eta,
    is_in_SBA,
    is_in_Sjk,
    is_in_Sk,
    n_decode,
    n_encode,
    pi_AB,
    pi_prime_AB,
    psi_k,
    sigma_AB,
    sigma_k,
    sigma_prime_AB,
    tau,
)
from .ideals import (
    AnalysisBound,
    ClosureReport,
    IdealSpec,
    LinkEntry,
    LinkReport,
    LSetReport,
    ModulusReport,
    OrderReport,
    SubidealRefutation,
    andrews_compose,
    andrews_decompose,
    check_ideal_closure,
    check_modulus,
    compute_L,
    count_parity_ideal,
    infer_linking,
    is_member,
    linked_refutation_example,
    members_within,
    order_estimate,
    order_refute,
    seqcong_ideal_exit,
    weak_order_estimate,
    weak_order_refute,
)
from .partition import (
    EMPTY,
    FrequencyMap,
    Partition,
    conjugate,
    durfee_size,
    from_frequencies,
    head_above,
    is_self_conjugate,
    oplus_merge,
    remove_parts,
    render_diagram,
    scalar_mul,
    shift,
    star_add,
    tail,
    unshift,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisBound",
    "CNotation",
    "CanonicalFormError",
    "ClosureReport",
    "ContainmentError",
    "CountSeries",
    "DomainError",
    "EMPTY",
    "FrequencyMap",
    "GenSpec",
    "HorizonError",
    "IdealSpec",
    "LinkEntry",
    "LinkReport",
    "LSetReport",
    "ModulusReport",
    "NNotation",
    "NotSequentiallyCongruentError",
    "OrderReport",
    "Partition",
    "SequenceRule",
    "SpecError",
    "SubidealRefutation",
    "andrews_compose",
    "andrews_decompose",
    "check_ideal_closure",
    "check_modulus",
    "compute_L",
    "conjugate",
    "count_all_partitions",
    "count_into_powers",
    "count_members",
    "count_parity_ideal",
    "durfee_size",
    "enumerate_partitions",
    "enumerate_seqcong_by_largest",
    "enumerate_seqcong_by_size",
    "enumerate_with_parts_from",
    "eta",
    "from_c_notation",
    "from_frequencies",
    "head_above",
    "infer_linking",
    "is_in_SBA",
    "is_in_Sjk",
    "is_in_Sk",
    "is_member",
    "is_self_conjugate",
    "is_seq_congruent",
    "iter_partition_tuples",
    "linked_refutation_example",
    "members_within",
    "n_decode",
    "n_encode",
    "oplus_merge",
    "order_estimate",
    "order_refute",
    "pi_AB",
    "pi_map",
    "pi_prime_AB",
    "pi_sigma_closed_form",
    "psi_inverse",
    "psi_k",
    "psi_map",
    "remove_parts",
    "render_diagram",
    "render_square_decomposition",
    "scalar_mul",
    "seqcong_ideal_exit",
    "shift",
    "sigma_AB",
    "sigma_k",
    "sigma_map",
    "sigma_prime_AB",
    "star_add",
    "tail",
    "to_c_notation",
    "unshift",
    "weak_order_estimate",
    "weak_order_refute",
]
