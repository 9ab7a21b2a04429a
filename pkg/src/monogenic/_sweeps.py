"""Select the sweep kernels: compiled extension if built, else pure Python."""

try:
    from . import _sweeps_cy as _impl

    BACKEND = "compiled"
except ImportError:
    from . import _sweeps_py as _impl

    BACKEND = "python"

transformation_type_counts = _impl.transformation_type_counts
partial_perm_type_counts = _impl.partial_perm_type_counts
