
from .models import (
    CrossingKind, Bracket, Interval, Assignment,
    Point, ORIGIN,
    Crossing,
    Timestamp,
    Color, MARKER_COLORS,
)
from .qpoly import (
    QTPoly,
    t, q,
    zero, one, constant, monomial, shift, total,
    add, mul,
    exact_div_one_minus_q_pow,
    qbinom,
    to_text, to_latex, from_text,
)
from .paths import (
    LatticePath, PathStats,
    parse_path, stats,
    line_crossings, diagonal_crossings, to_diagonal, pair_crossings,
    precedes, count_paths, enumerate_paths,
)
from .arrays import (
    TwoRowedArray,
    encode_path, decode_array, truncate,
    array_crossings, first_crossing_kind,
    alpha, beta, nu,
    enumerate_arrays,
)
from .pair_arrays import (
    ArrayPair,
    alt_less,
    encode_pair, decode_pair, truncate_pair,
    gamma, delta, sigma, gamma0,
    zigzag_class,
    enumerate_pairs,
)
from .formulas import (
    LineQuery, PairQuery, LineCase,
    line_case,
    lemma_qbin2, lemma_sum_closed, lemma_sum_array,
    g_poly, case_ix_rational,
    f_poly, f_poly_direct, h_poly,
)
from .oracle import (
    SweepReport,
    oracle_g, oracle_h,
    sweep_verify_line, sweep_verify_pairs, sweep_verify_lemmas, sweep_verify_bijections,
    write_reports,
)

from .errors import (
    LatticeCrossException,
    PolynomialError,
        NonDivisible,
        NegativeExponent,
        FormulaMismatch,
    PathError,
        MixedAlphabet,
        InvalidStep,
    ArrayError,
        InvalidArray,
        ShapeMismatch,
    BijectionError,
        NoSuchCrossing,
        WrongKind,
        ImproperCrossing,
        NotInDomain,
        ImproperPosition,
    QueryError,
        UnsupportedConfiguration,
        Condition13Violated,
)

from .__version__ import version_info, __version__

__title__ = "latticecross"
__author__ = "latticecross contributors"
__copyright__ = "Copyright 2024-present latticecross contributors"
