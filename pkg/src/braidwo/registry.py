from typing import Any, Callable, Dict


class Registry:
    """
    Named callables, each stored with one attribute, filled through a decorator.

    reg = Registry("growth function")

    @reg.register("square", False)
    def square(x): ...
    """

    def __init__(self, kind: str):
        self.kind = kind
        self.funcs: Dict[str, Callable] = {}
        self.attrs: Dict[str, Any] = {}

    def add(self, name: str, func: Callable, attr: Any):
        assert name not in self.funcs, f"{self.kind.capitalize()} '{name}' is already registered."
        self.funcs[name] = func
        self.attrs[name] = attr

    def register(self, name: str, attr: Any):
        def decorator(func: Callable):
            self.add(name, func, attr)
            return func

        return decorator

    def get(self, name: str) -> Callable:
        func = self.funcs.get(name)
        if func is None:
            raise ValueError(f"Unknown {self.kind} name: {name}. Available: {sorted(self.funcs)}")
        return func
