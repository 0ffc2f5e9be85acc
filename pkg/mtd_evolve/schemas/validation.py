from typing import Any, Type, TypeVar

from pydantic import BaseModel, ValidationError

from mtd_evolve.exceptions import ConfigurationError

M = TypeVar("M", bound=BaseModel)


def config_error_from(error: ValidationError, prefix: str = "") -> ConfigurationError:
    """Turn the first pydantic error into a ConfigurationError naming its field."""
    first = error.errors()[0]
    loc = ".".join(str(part) for part in first["loc"])
    field = ".".join(part for part in (prefix, loc) if part) or prefix or "config"
    return ConfigurationError(
        f"Invalid value for {field}: {first['msg']}",
        {"field": field, "errors": error.errors(include_url=False)},
    )


def validated(model: Type[M], data: Any, prefix: str = "") -> M:
    """``model.model_validate`` raising ConfigurationError instead of pydantic's."""
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise config_error_from(e, prefix) from e
