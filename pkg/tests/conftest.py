import random

import pytest
from hypothesis import settings, strategies as st

from gmn.amalgam import embed
from gmn.aut_presentation import AutWord
from gmn.words import GroupParams, Word

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")

INSTANCES = [GroupParams(2, 3), GroupParams(2, 2), GroupParams(3, 3), GroupParams(2, 5)]

params_st = st.sampled_from(INSTANCES)


@st.composite
def words(draw, letters="abcd", max_syllables=10, max_exp=4):
    n = draw(st.integers(0, max_syllables))
    syl = [
        (draw(st.sampled_from(letters)), draw(st.integers(-max_exp, max_exp).filter(bool)))
        for _ in range(n)
    ]
    return Word.of(*syl)


def random_word(rng: random.Random, max_letters: int = 40, letters: str = "abcd") -> Word:
    """Random word with total letter count at most ``max_letters``."""
    budget = rng.randint(0, max_letters)
    syl = []
    while budget > 0:
        e = rng.randint(1, min(budget, 4))
        budget -= e
        syl.append((rng.choice(letters), e * rng.choice((1, -1))))
    return Word.of(*syl)


def random_gelem(rng, params, max_letters=12):
    return embed(random_word(rng, max_letters), params)


def random_aut_word(rng: random.Random, params: GroupParams, max_len: int = 20) -> AutWord:
    letters = "LMAB" + ("E" if params.symmetric else "")
    return AutWord.of((rng.choice(letters), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len)))


@pytest.fixture
def rng():
    return random.Random(20261018)


@pytest.fixture(params=INSTANCES, ids=lambda p: f"m{p.m}n{p.n}")
def params(request):
    return request.param


@pytest.fixture
def p23():
    return GroupParams(2, 3)


# criterion number -> PASS/FAIL line, filled in by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
