"""Exact repetition machinery for linear and circular words: exponents and
freeness, binary codeword encodings and their forbidden-factor detectors,
the kernel-repetition-free circular word construction with an independent
verifier, and a certified backtracking search engine."""

from .beta import (
    BetaPrefix,
    beta_prefix,
    beta_recurrence,
    beta_tau,
    factor_bracketed_by_two,
    period_divisibility_violations,
    sigma,
)
from .carpi import (
    CarpiParameters,
    MorphismTable,
    PsiKernelWitness,
    apply_table,
    find_psi_kernel_repetition,
    in_psi_kernel,
    lambda_membership,
    load_fn_table,
    params,
    parse_fn_table,
    pipeline,
    psi_kernel_length_bound,
    structured_letter,
    structured_violation,
    table_kernel_crosscheck,
)
from .certificates import (
    Certificate,
    CheckRecord,
    MalformedCertificate,
    deserialize,
    deserialize_many,
    emit,
    serialize,
)
from .certify import CertifyResult, certify
from .construction import (
    ConstructionTrace,
    build_w,
    full_pipeline,
    verify_construction,
)
from .pansiot import (
    KernelRepetitionWitness,
    Permutation,
    StabilizingFactor,
    find_kernel_repetition,
    find_short_stabilizing,
    gamma,
    kernel_length_bound,
    phi,
    rotation_rename,
)
from .search import (
    SearchConfig,
    SearchResult,
    search_all_lengths,
    search_witness,
)
from .words import (
    CircularWord,
    ExponentReport,
    FreenessResult,
    Word,
    as_word,
    circular_is_r_free,
    circular_max_exponent,
    circumnavigations,
    conjugates,
    exponent_report,
    format_ratio,
    format_word,
    is_period,
    is_r_free,
    max_factor_exponent,
    minimal_period,
    parse_ratio,
    parse_word,
)

__version__ = "0.1.0"
