"""Enumeration caps.

Defaults can be overridden with ``INJSPEC_CAPS``, e.g.
``INJSPEC_CAPS="elements=4096,lattice=512"``.
"""

import os
from dataclasses import dataclass, replace

from .errors import CapExceeded


@dataclass(frozen=True)
class Caps:
    elements: int = 65536  # p ** dim for any brute-force enumeration
    lattice: int = 4096  # submodule lattice size


def _from_env():
    caps = Caps()
    raw = os.environ.get("INJSPEC_CAPS", "").strip()
    if not raw:
        return caps
    fields = {}
    for part in raw.split(","):
        if not part.strip():
            continue
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in ("elements", "lattice"):
            raise ValueError(f"unknown cap {key!r} in INJSPEC_CAPS")
        fields[key] = int(value)
    return replace(caps, **fields)


CAPS = _from_env()


def set_caps(**fields):
    """Replace the process-wide caps; returns the previous value."""
    global CAPS
    old = CAPS
    CAPS = replace(CAPS, **fields)
    return old


def check_elements(p, dim, what="enumeration"):
    if p**dim > CAPS.elements:
        raise CapExceeded(
            f"{what} over F_{p}^{dim} exceeds cap {CAPS.elements}",
            p=p, dim=dim, cap=CAPS.elements,
        )


def check_lattice(size):
    if size > CAPS.lattice:
        raise CapExceeded(f"submodule lattice exceeds cap {CAPS.lattice}", cap=CAPS.lattice)
