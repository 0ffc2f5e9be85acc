from typing import Dict, Generic, List, TypeVar

from mtd_evolve.exceptions import ConfigurationError

T = TypeVar("T")


class BaseRegistry(Generic[T]):
    label: str = "entry"

    def __init__(self) -> None:
        self._registry: Dict[str, T] = {}

    def names(self) -> List[str]:
        return list(self._registry)

    def get(self, name: str) -> T | None:
        return self._registry.get(name)

    def require(self, name: str) -> T:
        item = self.get(name)
        if item is None:
            raise ConfigurationError(
                f"Unknown {self.label}: {name!r}",
                {"field": self.label, "value": name, "known": self.names()},
            )
        return item
