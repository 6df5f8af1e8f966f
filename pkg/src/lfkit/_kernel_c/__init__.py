"""Compiled twin of ``lfkit._kernel``; sources are generated at build time."""
