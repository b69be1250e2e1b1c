import doctest

import heckebasis.laurent
import heckebasis.modarith
import heckebasis.partitions


def test_module_doctests():
    for mod in (
        heckebasis.laurent,
        heckebasis.partitions,
        heckebasis.modarith,
    ):
        result = doctest.testmod(mod)
        assert result.attempted > 0, mod.__name__
        assert result.failed == 0, mod.__name__
