import pytest

from smoothwords import Alphabet, Word


@pytest.fixture(scope="session")
def ab12():
    return Alphabet(1, 2)


@pytest.fixture(scope="session")
def ab13():
    return Alphabet(1, 3)


def W(text: str) -> Word:
    return Word(text)
