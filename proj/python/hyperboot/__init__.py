"""j-set bootstrap percolation in k-uniform hypergraphs.

Thin Python surface over the C++ core: process simulation, configuration
generators, bound evaluation, and the isomorphism-reduced minimum search.
"""

from fractions import Fraction

from ._hyperboot import (  # noqa: F401
    augment,
    best_known,
    binom,
    brute_force_infection_oracle,
    clique_upper,
    disjoint_witness,
    enumerate_canonical_configs,
    exact_32,
    exact_small_j,
    ext_set,
    infection_check,
    is_contagious,
    is_joker,
    make_clique_config,
    make_recursive_tight,
    make_star,
    make_z_config,
    min_contagious,
    rank_jset,
    recursive_upper,
    restrict_configuration,
    run_process,
    run_suite,
    star_of,
    suite_names,
    unrank_jset,
)
from ._hyperboot import closed_form_upper as _closed_form_upper


def closed_form_upper(k: int, r: int) -> Fraction:
    """Exact closed form of the tight-case recursion, as a Fraction."""
    num, den = _closed_form_upper(k, r)
    return Fraction(num, den)


__all__ = [name for name in dir() if not name.startswith("_")]
