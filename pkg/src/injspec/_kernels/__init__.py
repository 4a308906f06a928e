"""Hot kernels: compiled extension when available, pure Python otherwise.

Set ``INJSPEC_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels as python_impl

compiled_impl = None
if os.environ.get("INJSPEC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_impl
    except ImportError:
        compiled_impl = None

_impl = compiled_impl if compiled_impl is not None else python_impl

IMPL = _impl.IMPL
rref = _impl.rref
cyclic_subspaces = _impl.cyclic_subspaces
idempotents = _impl.idempotents

__all__ = ["IMPL", "compiled_impl", "cyclic_subspaces", "idempotents", "python_impl", "rref"]
