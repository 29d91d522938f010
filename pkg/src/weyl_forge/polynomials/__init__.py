"""Root-multiset polynomials and the (p,q)-interlacing calculus."""

from weyl_forge.polynomials.generators import (
    gen_bordered_pair,
    gen_pq_pair,
    random_pair,
    random_poly,
)
from weyl_forge.polynomials.interlacing import (
    InterlaceReport,
    Side,
    Violation,
    common_interlacer,
    interlace_report,
    is_pq_interlacing,
    is_strict_pq,
    minimal_pq,
    root_count_criterion,
    split,
    split_degree_window,
)
from weyl_forge.polynomials.rooted import (
    RootedPoly,
    coefficients,
    common_roots,
    derivative_roots,
    evaluate,
    make_poly,
    merge_roots,
    pair_roots,
    root_at,
    root_count_geq,
    same_roots,
)

__all__ = [
    "RootedPoly",
    "make_poly",
    "root_at",
    "evaluate",
    "coefficients",
    "root_count_geq",
    "derivative_roots",
    "pair_roots",
    "common_roots",
    "merge_roots",
    "same_roots",
    "InterlaceReport",
    "Side",
    "Violation",
    "is_pq_interlacing",
    "minimal_pq",
    "interlace_report",
    "root_count_criterion",
    "split",
    "split_degree_window",
    "common_interlacer",
    "is_strict_pq",
    "gen_pq_pair",
    "gen_bordered_pair",
    "random_pair",
    "random_poly",
]
