import pytest

from braidwo.registry import Registry
from braidwo.verify.registry import SUITE_MAP, _SUITES
from braidwo.wo.growth import FUNC_MAP, IS_FACTORY_FUNC, _GROWTH


def test_register_and_get() -> None:
    reg = Registry("widget")

    @reg.register("double", 2)
    def double(x: int) -> int:
        return 2 * x

    assert reg.get("double") is double
    assert reg.attrs == {"double": 2}

    with pytest.raises(AssertionError, match="Widget 'double' is already registered"):
        reg.add("double", double, 3)
    with pytest.raises(ValueError, match="Unknown widget name: triple"):
        reg.get("triple")


def test_module_maps_share_the_registry() -> None:
    assert FUNC_MAP is _GROWTH.funcs
    assert IS_FACTORY_FUNC is _GROWTH.attrs
    assert IS_FACTORY_FUNC["const"] and not IS_FACTORY_FUNC["square"]
    assert SUITE_MAP is _SUITES.funcs
