"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is used. ``use_backend`` switches at runtime (tests and benchmarks
compare the two).
"""
from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_NAMES = ("add_terms", "sub_terms", "neg_terms", "scale_terms", "mul_terms",
          "pfaffian", "determinant")

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

backend = None


def use_backend(name):
    """Rebind the kernel functions of this module to backend ``name``."""
    global backend
    try:
        module = BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
    for fn in _NAMES:
        globals()[fn] = getattr(module, fn)
    backend = name


use_backend("cython" if _ckernels is not None else "python")
