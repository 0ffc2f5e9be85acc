import logging
from pathlib import Path

from .helpers import ensure_dir

logger = logging.getLogger(__name__)


class BaseService:
    """Owns the directory a service writes its result set into."""

    def __init__(self, directory: Path) -> None:
        self.directory = directory

    def prepare(self) -> Path:
        logger.debug("Writing results to %s", self.directory)
        return ensure_dir(self.directory)

    def path(self, name: str) -> Path:
        return self.directory / name
