import importlib
from functools import partial
from typing import Any, Callable, Dict, List

from pydantic import BaseModel, Field

from ..registry import Registry

# The package re-exports the function `ackermann`, which shadows the submodule
# attribute, so load the module itself.
ackermann = importlib.import_module("..ordinals.ackermann", __package__)

GrowthFunction = Callable[[int], int]

_GROWTH = Registry("growth function")

FUNC_MAP: Dict[str, Callable] = _GROWTH.funcs
IS_FACTORY_FUNC: Dict[str, bool] = _GROWTH.attrs


def register(name: str, is_factory_function: bool = False):
    """
    Decorator to register a growth function. A factory function returns the
    growth function when called with the GrowthSpec arguments.
    """
    return _GROWTH.register(name, is_factory_function)


def get_registered_functions():
    return FUNC_MAP, IS_FACTORY_FUNC


@register("const", is_factory_function=True)
def const(c: int) -> GrowthFunction:
    if c < 0:
        raise ValueError(f"Constant growth needs c >= 0: {c}")
    return ackermann.const(c)


@register("square")
def square(x: int) -> int:
    return ackermann.square(x)


@register("linear", is_factory_function=True)
def linear(a: int) -> GrowthFunction:
    def scaled(x: int) -> int:
        return a * x

    scaled.__name__ = f"linear_{a}"
    return scaled


@register("f_r")
def f_r(r: int, x: int) -> int:
    return ackermann.f_r(r, x)


@register("f_omega")
def f_omega(x: int) -> int:
    return ackermann.f_omega(x)


class GrowthSpec(BaseModel):
    """
    g = GrowthSpec(name="f_r", args=[2])
    f = g.build()  # f(x) == f_r(2, x)
    """

    name: str
    args: List[Any] = Field(default_factory=list)
    description: str = ""

    model_config = {"frozen": True}

    def build(self) -> GrowthFunction:
        return _reconstruct_callable(self)

    def label(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({', '.join(str(a) for a in self.args)})"


def _reconstruct_callable(spec: GrowthSpec) -> GrowthFunction:
    func_name = spec.name
    base_func = _GROWTH.get(func_name)

    if IS_FACTORY_FUNC[func_name]:
        func = base_func(*spec.args)
    else:
        func = partial(base_func, *spec.args)

    return func


def parse_growth(text: str) -> GrowthSpec:
    """'square', 'const(2)', 'f_r(3)' or 'const:2' to a GrowthSpec."""
    text = text.strip()
    if "(" in text:
        if not text.endswith(")"):
            raise ValueError(f"Unbalanced growth function text: {text!r}")
        name, _, rest = text[:-1].partition("(")
        raw_args = [a for a in rest.split(",") if a.strip()]
    elif ":" in text:
        name, _, rest = text.partition(":")
        raw_args = [a for a in rest.split(",") if a.strip()]
    else:
        name, raw_args = text, []
    return GrowthSpec(name=name.strip(), args=[int(a) for a in raw_args])
