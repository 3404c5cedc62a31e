"""Feasibility, counting, and distribution indices for crisp/rough populations.

Thin wrapper over the compiled core; large integers and exact rationals are
passed as strings ("P" or "P/Q").
"""

try:
    from . import roughdist_core as _core  # installed wheel layout
except ImportError:
    import roughdist_core as _core  # build-tree layout

__all__ = [
    "alpha_refine",
    "bounded_model_count",
    "case0_k",
    "case1_k",
    "case2_admissible",
    "case2_count_values",
    "chain_cover_model_count",
    "chain_distribution_count",
    "classify_space",
    "find_sdr",
    "hasse_index",
    "iota_index",
    "placement_oracle_count",
    "poset_chain_cover",
    "poset_width",
    "powerset_models",
]

for _name in __all__:
    globals()[_name] = getattr(_core, _name)
del _name
