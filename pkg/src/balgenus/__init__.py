"""Balanced genus of balanced normal pseudomanifolds.

Build a colored complex, form its edge-colored dual graph, and minimise the
genus of its regular embeddings over cyclic color orders.
"""

__version__ = "0.1.0"

from .complex import ColoredComplex, build_complex, degree, link, star, validate
from .constructors import connected_sum, handle_addition, join, octahedral_sphere
from .dual import bicolored_cycle_count, dual_graph, embedding_summary, is_bipartite
from .edgepath import rank_bounds, spanning_tree
from .flags import euler, f_vector, flag_f, flag_h, gamma, h_vector
from .genus import Necklace, balanced_genus, necklaces, rho, verify_bounds

__all__ = [
    "ColoredComplex",
    "Necklace",
    "balanced_genus",
    "bicolored_cycle_count",
    "build_complex",
    "connected_sum",
    "degree",
    "dual_graph",
    "embedding_summary",
    "euler",
    "f_vector",
    "flag_f",
    "flag_h",
    "gamma",
    "h_vector",
    "handle_addition",
    "is_bipartite",
    "join",
    "link",
    "necklaces",
    "octahedral_sphere",
    "rank_bounds",
    "rho",
    "spanning_tree",
    "star",
    "validate",
    "verify_bounds",
]
