"""Hot loops, compiled when the Cython extension is built.

Importing this module picks ``_ckernels`` if it is importable and falls back
to the pure-Python ``_pykernels`` otherwise.  ``BACKEND`` names the choice.
"""

try:
    from ._ckernels import BACKEND, lie_apply, orientation_sum, rank_mod_p, y_degree_histogram
except ImportError:  # extension not built
    from ._pykernels import BACKEND, lie_apply, orientation_sum, rank_mod_p, y_degree_histogram

__all__ = ["BACKEND", "lie_apply", "orientation_sum", "rank_mod_p", "y_degree_histogram"]
