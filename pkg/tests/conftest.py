import random

import pytest

from lfkit import typecheck as tc
from lfkit.frontend import parser as par

STD_TEXT = """\
iota : type.
o : type.
p : {x:iota} type.
t : iota.
u : iota.
f : iota -> iota.
eq : iota -> iota -> o.
and : o -> o -> o.
forall : (iota -> o) -> o.
d : {x:iota} p x.
"""


@pytest.fixture(scope="session")
def std_sig():
    return par.parse_signature(STD_TEXT)


@pytest.fixture(scope="session")
def std_csig(std_sig):
    return tc.check_signature(std_sig)


@pytest.fixture
def obj(std_csig):
    def parse(text, ctx=None):
        return par.parse_object(text, std_csig, ctx)

    return parse


@pytest.fixture
def fam(std_csig):
    def parse(text, ctx=None):
        return par.parse_family(text, std_csig, ctx)

    return parse


@pytest.fixture
def knd(std_csig):
    def parse(text, ctx=None):
        return par.parse_kind(text, std_csig, ctx)

    return parse


@pytest.fixture
def ctx(std_csig):
    def parse(text):
        return par.parse_context(text, std_csig)

    return parse


@pytest.fixture
def rng():
    return random.Random(20240811)
