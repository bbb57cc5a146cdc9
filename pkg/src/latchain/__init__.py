"""Exact chain-polynomial machinery for posets and geometric lattices."""

from .polynomial import (
    ExactPoly,
    RootIsolation,
    check_damped_interlacing,
    diamond_product,
    f_from_h,
    h_from_f,
    interlaces,
    is_real_rooted,
    is_tp2,
    isolate_real_roots,
    poly_gcd,
    roots_in_interval,
    squarefree_decomposition,
    squarefree_part,
    sturm_real_root_count,
)
from .posets import (
    Poset,
    antichain,
    chain_poset,
    is_isomorphic,
    poset_from_text,
    poset_to_text,
    read_poset,
    write_poset,
)
from .tn import (
    RMatrix,
    ResolutionWitness,
    ResolveOutcome,
    chain_polys_from_rmatrix,
    check_cover_recursion,
    incidence_R,
    incidence_R_table,
    is_atomistic,
    is_geometric,
    is_lattice,
    is_modular,
    is_perfect_matroid_design,
    is_quasi_rank_uniform,
    is_semimodular,
    is_totally_nonnegative,
    is_triangular,
    ordinal_sum_rows,
    rank_matrix,
    resolve,
    subdivision_operator,
)
from .families import (
    Design,
    DPartition,
    ModularCut,
    WhitneyMatrix,
    affine_lattice,
    boolean_lattice,
    build_instance,
    design_poset,
    dowling_rows,
    dowling_whitney,
    fano_design,
    fano_lattice,
    generalized_dpartition_check,
    l_paving,
    linear_space_lattice,
    modular_cut_validate,
    partition_lattice,
    paving_construction,
    paving_lattice_from_dpartition,
    principal_cut,
    single_element_extension,
    subspace_lattice,
    truncated_boolean,
    truncated_extension_coatoms,
    uniform_design,
    vamos_lattice,
)
from .permstats import PermStats, eulerian, q_eulerian
from .reports import CheckReport, write_csv, write_jsonl
from .suites import (
    SUITE_NAMES,
    brute_force_oracle,
    counterexample_search,
    rank3_formula,
    suite_run,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
