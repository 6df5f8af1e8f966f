"""Kernel backend selection.

The hot kernel modules exist twice: as plain Python under
``lfkit._kernel`` and, when the package was built with Cython, as a
compiled twin under ``lfkit._kernel_c`` generated from the same sources.
This module picks the compiled twin when present and falls back to the
interpreted kernel otherwise.  Set ``LFKIT_PURE=1`` to force the fallback.
"""

import dataclasses
import importlib
import os

_KERNEL_MODULES = ("terms", "simple", "reduction", "equate")


def _load(package):
    mods = {}
    for name in _KERNEL_MODULES:
        mods[name] = importlib.import_module("%s.%s" % (package, name))
    return mods


def _is_compiled(mods):
    return all(m.__file__.endswith((".so", ".pyd")) for m in mods.values())


def load_backend(which):
    """Load "pure" or "compiled" kernel modules explicitly (benchmarks and
    cross-checking tests); raises ImportError if unavailable."""
    if which == "pure":
        return _load("lfkit._kernel")
    mods = _load("lfkit._kernel_c")
    if not _is_compiled(mods):
        raise ImportError("lfkit._kernel_c is present but not compiled")
    return mods


def _select():
    if not os.environ.get("LFKIT_PURE"):
        try:
            return load_backend("compiled"), "compiled"
        except ImportError:
            pass
    return load_backend("pure"), "pure"


_mods, BACKEND = _select()

terms = _mods["terms"]
simple = _mods["simple"]
reduction = _mods["reduction"]
equate = _mods["equate"]


def clone(value, module):
    """Rebuild a kernel value (term, signature, simple type, ...) using the
    dataclasses of another backend module.  Strings, ints, and None pass
    through; tuples are rebuilt elementwise."""
    if value is None or isinstance(value, (str, int, bool)):
        return value
    if isinstance(value, tuple):
        return tuple(clone(v, module) for v in value)
    cls = getattr(module, type(value).__name__)
    kwargs = {
        f.name: clone(getattr(value, f.name), module)
        for f in dataclasses.fields(value)
    }
    return cls(**kwargs)
