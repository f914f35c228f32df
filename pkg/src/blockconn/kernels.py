"""Kernel backend selection.

The compiled backend is used when importable; ``BLOCKCONN_BACKEND=python``
forces the numpy fallback and ``BLOCKCONN_BACKEND=cython`` makes a missing
extension an import error instead of a silent downgrade.
"""
import logging
import os

from . import _pykernels

log = logging.getLogger(__name__)

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels


def get_backend(name=None):
    """Return a kernel module by name; ``None`` or ``"auto"`` picks the fastest available."""
    if name in (None, "auto"):
        return BACKENDS.get("cython", _pykernels)
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown or unavailable backend {name!r}; available: {sorted(BACKENDS)}"
        ) from None


def _select_default():
    choice = os.environ.get("BLOCKCONN_BACKEND", "auto").strip().lower() or "auto"
    if choice == "cython" and _ckernels is None:
        raise ImportError("BLOCKCONN_BACKEND=cython but the compiled extension is not built")
    backend = get_backend(choice)
    log.debug("using %s kernels", backend.NAME)
    return backend


default = _select_default()


def resolve(backend):
    """Accept a backend module, a backend name, or ``None`` for the import-time default."""
    if backend is None:
        return default
    if isinstance(backend, str):
        return get_backend(backend)
    return backend
