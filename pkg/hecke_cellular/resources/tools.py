import os
from dataclasses import dataclass

from dotenv import load_dotenv

from hecke_cellular.resources.errors import SizeCapExceeded, UsageError


def get_setting_from_env(key_name: str, default: str | None = None) -> str | None:
    load_dotenv()
    value = os.getenv(key_name)
    if value is None or value == "":
        return default
    return value


def get_int_from_env(key_name: str, default: int) -> int:
    value = get_setting_from_env(key_name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{key_name} must be an integer, got {value!r}") from None


@dataclass(frozen=True)
class Settings:
    max_hecke_n: int = 6
    max_hc_n: int = 4
    log_level: str = "INFO"
    jobs: int = 1


def load_settings() -> Settings:
    """Snapshot of the environment configuration (`.env` is honoured)."""
    return Settings(
        max_hecke_n=get_int_from_env("HECKE_CELLULAR_MAX_N", 6),
        max_hc_n=get_int_from_env("HECKE_CELLULAR_MAX_HC_N", 4),
        log_level=(get_setting_from_env("HECKE_CELLULAR_LOG_LEVEL", "INFO") or "INFO").upper(),
        jobs=get_int_from_env("HECKE_CELLULAR_JOBS", 1),
    )


def check_size_cap(n: int, algebra: str, settings: Settings, override: bool = False) -> None:
    if override:
        return
    cap = settings.max_hc_n if algebra == "hc" else settings.max_hecke_n
    if n > cap:
        raise SizeCapExceeded(
            f"n={n} exceeds the {algebra} cap of {cap}; pass --allow-large to override"
        )
