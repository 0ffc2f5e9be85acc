from ._base import BaseRegistry

__all__ = ["BaseRegistry"]
