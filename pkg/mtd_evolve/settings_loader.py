from typing import Any

from mtd_evolve.global_settings import Settings, global_settings

PROJECT_SETTINGS_MODULE = "mtd_settings"


class LazySettings:
    _settings_instance: Settings | None = None

    def _load(self) -> Settings:
        import importlib.util

        if self._settings_instance is not None:
            return self._settings_instance

        # A project-local `mtd_settings.py` may override the defaults
        if importlib.util.find_spec(PROJECT_SETTINGS_MODULE) is not None:
            try:
                external_mod = importlib.import_module(PROJECT_SETTINGS_MODULE)
                if hasattr(external_mod, "settings"):
                    self._settings_instance = external_mod.settings
                    return self._settings_instance
            except Exception as e:
                raise ImportError(
                    f"Found `{PROJECT_SETTINGS_MODULE}.py` but failed to load "
                    "`settings` object."
                ) from e
        self._settings_instance = global_settings
        return self._settings_instance

    def reset(self) -> None:
        self._settings_instance = None

    def __getattr__(self, item: str) -> Any:
        return getattr(self._load(), item)


settings = LazySettings()
