"""Backend selection for the hot kernels.

The compiled extension is preferred at import time; if it was not built the
pure-Python twins are used. ``use_backend`` switches at runtime, which the
benchmark and the backend-equivalence tests rely on.
"""

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_NAMES = ("kummer_series", "jet_mul", "jet_div", "jet_exp", "jet_log", "seed_taylor",
          "gauged_taylor")

BACKEND = None


def available_backends():
    return ("compiled", "python") if _compiled is not None else ("python",)


def use_backend(name):
    """Route all kernel calls to ``"compiled"`` or ``"python"``."""
    global BACKEND
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernels are not built; run `pip install -e .`")
        source = _compiled
    elif name == "python":
        source = _pykernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    for fn in _NAMES:
        globals()[fn] = getattr(source, fn)
    BACKEND = name


use_backend(available_backends()[0])
