"""Build script for the optional compiled kernel.

The modules under ``src/lfkit/_kernel`` are plain Python and always work as
installed.  When Cython and a C compiler are available, the same sources
are copied into ``src/lfkit/_kernel_c`` and compiled into extension
modules; :mod:`lfkit._backend` prefers that twin at import time.  Set
``LFKIT_NO_EXT=1`` to skip the compiled build entirely.
"""

import os
import shutil
from pathlib import Path

from setuptools import setup

ROOT = Path(__file__).parent
KERNEL = ROOT / "src" / "lfkit" / "_kernel"
TWIN = ROOT / "src" / "lfkit" / "_kernel_c"

TWIN_INIT = '''"""Compiled twin of ``lfkit._kernel``; sources are generated at build time."""
'''


def generate_twin_sources():
    TWIN.mkdir(exist_ok=True)
    (TWIN / "__init__.py").write_text(TWIN_INIT, encoding="utf-8")
    names = []
    for src in sorted(KERNEL.glob("*.py")):
        if src.name == "__init__.py":
            continue
        shutil.copyfile(src, TWIN / src.name)
        names.append(src.stem)
    return names


def extension_modules():
    if os.environ.get("LFKIT_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    names = generate_twin_sources()
    extensions = [
        Extension("lfkit._kernel_c.%s" % name, ["src/lfkit/_kernel_c/%s.py" % name])
        for name in names
    ]
    return cythonize(
        extensions,
        compiler_directives={"language_level": 3, "annotation_typing": False},
        quiet=True,
    )


setup(ext_modules=extension_modules())
