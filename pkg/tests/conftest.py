import pytest

from polarcodes import Code


@pytest.fixture
def four_word_code():
    """The running three-neuron example with a strictly larger formal polarization."""
    return Code.from_words(["000", "100", "110", "011"])


@pytest.fixture
def single_word_code():
    return Code.from_words(["10"])


@pytest.fixture
def chain_code():
    return Code.from_words(["000", "001", "011", "111"])
