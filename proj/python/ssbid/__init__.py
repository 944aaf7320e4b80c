"""Strong-substitutes bid lists: exact demand evaluation and query learning."""

try:
    from ssbid._ssbid import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _ssbid import *  # noqa: F401,F403  (build-tree layout)

__all__ = [
    "normalize_bids",
    "demand",
    "delta_query",
    "existence_query",
    "find_magnitude",
    "learn_positive",
    "learn_general",
    "is_valid",
    "island_gadget",
    "boundary_bids",
    "adversarial_instance",
    "demand_from_valuation",
    "bidlist_to_json",
    "bidlist_from_json",
]
