"""Point counts, local densities and pole data for the norm-form
compactification of the quotient Weil-restriction group over F_q(t)."""

try:
    from ._core import (  # noqa: F401
        BudgetExceeded,
        Field,
        averaged_asymptotic,
        averaged_count,
        count_points,
        count_points_naive,
        count_table,
        empirical_constant,
        enumerate_points,
        group_mul,
        height_exponent,
        infinite_local_volume,
        leading_constant,
        list_places,
        local_density,
        pole_structure,
        run_acceptance,
        tauberian_predict,
        unit_character_sum,
        valuation_histogram,
        zeta_partial,
    )
except ImportError:  # uninstalled build-tree layout: the module sits on PYTHONPATH
    from _core import (  # noqa: F401
        BudgetExceeded,
        Field,
        averaged_asymptotic,
        averaged_count,
        count_points,
        count_points_naive,
        count_table,
        empirical_constant,
        enumerate_points,
        group_mul,
        height_exponent,
        infinite_local_volume,
        leading_constant,
        list_places,
        local_density,
        pole_structure,
        run_acceptance,
        tauberian_predict,
        unit_character_sum,
        valuation_histogram,
        zeta_partial,
    )

__all__ = [
    "BudgetExceeded",
    "Field",
    "averaged_asymptotic",
    "averaged_count",
    "count_points",
    "count_points_naive",
    "count_table",
    "empirical_constant",
    "enumerate_points",
    "group_mul",
    "height_exponent",
    "infinite_local_volume",
    "leading_constant",
    "list_places",
    "local_density",
    "pole_structure",
    "run_acceptance",
    "tauberian_predict",
    "unit_character_sum",
    "valuation_histogram",
    "zeta_partial",
]
