"""Pure-Python kernel: term syntax, erasure, reduction, and equality.

These modules are written so that the same sources compile unchanged with
Cython into the ``lfkit._kernel_c`` twin package.  Everything outside the
kernel must import them through :mod:`lfkit._backend`, which picks the
compiled twin when it is available.
"""
