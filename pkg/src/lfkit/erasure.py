"""Dependency-erased simple types, kinds, and contexts."""

from lfkit._backend import simple as _s

Base = _s.Base
Arrow = _s.Arrow
TypeMinus = _s.TypeMinus
ArrowK = _s.ArrowK
TYPE_MINUS = _s.TYPE_MINUS
SimpleContext = _s.SimpleContext
ErasedSignature = _s.ErasedSignature

erase_family = _s.erase_family
erase_kind = _s.erase_kind
erase_context = _s.erase_context
erase_signature = _s.erase_signature

__all__ = [
    "Base", "Arrow", "TypeMinus", "ArrowK", "TYPE_MINUS",
    "SimpleContext", "ErasedSignature",
    "erase_family", "erase_kind", "erase_context", "erase_signature",
]
