"""Dependency erasure: simple types, simple kinds, and simple contexts.

Erasure forgets every object embedded in a family or kind, leaving just
enough shape to drive the equality algorithm.
"""

from dataclasses import dataclass

from .terms import FamApp, FamConst, Pi, PiK, Signature, TypeKind


@dataclass(frozen=True)
class Base:
    name: str


@dataclass(frozen=True)
class Arrow:
    dom: object  # SimpleType
    cod: object  # SimpleType


@dataclass(frozen=True)
class TypeMinus:
    pass


@dataclass(frozen=True)
class ArrowK:
    dom: object  # SimpleType
    cod: object  # SimpleKind


TYPE_MINUS = TypeMinus()


@dataclass(frozen=True)
class SimpleContext:
    entries: tuple = ()  # of (name, SimpleType)

    def lookup(self, name):
        for n, tau in self.entries:
            if n == name:
                return tau
        return None

    def declares(self, name):
        return self.lookup(name) is not None

    def extended(self, name, tau):
        if self.declares(name):
            raise ValueError("variable '%s' already declared" % name)
        return SimpleContext(self.entries + ((name, tau),))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def erase_family(a):
    """The simple type of a family: applications drop their arguments,
    dependent function families become plain arrows."""
    if isinstance(a, FamConst):
        return Base(a.name)
    if isinstance(a, FamApp):
        return erase_family(a.fam)
    if isinstance(a, Pi):
        return Arrow(erase_family(a.dom), erase_family(a.cod))
    raise TypeError("not a family: %r" % (a,))


def erase_kind(k):
    if isinstance(k, TypeKind):
        return TYPE_MINUS
    if isinstance(k, PiK):
        return ArrowK(erase_family(k.dom), erase_kind(k.cod))
    raise TypeError("not a kind: %r" % (k,))


def erase_context(g):
    return SimpleContext(tuple((n, erase_family(fam)) for n, fam in g.entries))


class ErasedSignature:
    """Erased classifier tables for constants, consulted by the equality
    judgments.  Later duplicate declarations are ignored; a checked
    signature has none."""

    def __init__(self, obj_consts=(), fam_consts=()):
        self.obj_consts = dict(obj_consts)  # name -> SimpleType
        self.fam_consts = dict(fam_consts)  # name -> SimpleKind

    def obj_type(self, name):
        return self.obj_consts.get(name)

    def fam_kind(self, name):
        return self.fam_consts.get(name)


def erase_signature(sig):
    if not isinstance(sig, Signature):
        raise TypeError("not a signature: %r" % (sig,))
    esig = ErasedSignature()
    for name, classifier in sig.decls:
        if isinstance(classifier, (TypeKind, PiK)):
            esig.fam_consts.setdefault(name, erase_kind(classifier))
        else:
            esig.obj_consts.setdefault(name, erase_family(classifier))
    return esig
