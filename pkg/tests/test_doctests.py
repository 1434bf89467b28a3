import doctest

from dynres import numtheory, polycore, serialize


def test_doctests():
    for mod in (polycore, numtheory, serialize):
        result = doctest.testmod(mod)
        assert result.failed == 0, mod.__name__
