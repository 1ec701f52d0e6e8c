"""
Ayarlar Modülü (Settings Module)

Çalışma parametrelerini tek bir doğrulanmış pydantic modelinde toplar.

Öncelik sırası (yüksekten düşüğe):
    CLI bayrakları > grup spec dosyasındaki `options` > ortam değişkenleri (GPGROWTH_*) > varsayılanlar

`.env` dosyası python-dotenv ile okunur; mevcut ortam değişkenlerini ezmez.
"""

from __future__ import annotations

import logging
import os
import re
from enum import Enum
from typing import Any, Mapping

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

logger = logging.getLogger(__name__)

ENV_PREFIX = "GPGROWTH_"

_UNITS = {"": 1, "b": 1, "kb": 1000, "mb": 1000**2, "gb": 1000**3,
          "kib": 1024, "mib": 1024**2, "gib": 1024**3}


class SettingsError(ValueError):
    """Geçersiz ayar değeri (ortam, spec options veya CLI)."""


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


def parse_bytes(value: Any) -> int:
    """`2GiB`, `512MB`, `1048576` gibi değerleri bayta çevirir."""
    if isinstance(value, int):
        return value
    match = re.fullmatch(r"\s*(\d+)\s*([a-zA-Z]*)\s*", str(value))
    if match is None or match[2].lower() not in _UNITS:
        raise ValueError(f"bayt degeri anlasilamadi: {value!r}")
    return int(match[1]) * _UNITS[match[2].lower()]


class Settings(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    radius: int = Field(8, ge=0)
    max_order: int = Field(12, ge=0)
    memory_budget: int = Field(2 * 1024**3, gt=0)
    threads: int = Field(1, ge=1)
    tolerance: float = Field(1e-9, gt=0)
    grouping_tolerance: float = Field(1e-8, gt=0)
    root_tolerance: float = Field(1e-12, gt=0)
    separation_tolerance: float = Field(1e-6, gt=0)
    seed: int = 0
    output_format: OutputFormat = OutputFormat.TEXT
    oracle_radius: int = Field(4, ge=0)

    @field_validator("memory_budget", mode="before")
    @classmethod
    def _bytes(cls, value):
        return parse_bytes(value)

    def tolerances(self) -> dict[str, float]:
        """Raporlara gömülen tolerans tablosu."""
        return {
            "tolerance": self.tolerance,
            "grouping_tolerance": self.grouping_tolerance,
            "root_tolerance": self.root_tolerance,
            "separation_tolerance": self.separation_tolerance,
        }


def _from_environment() -> dict[str, str]:
    values = {}
    for name in Settings.model_fields:
        raw = os.getenv(ENV_PREFIX + name.upper())
        if raw is not None:
            values[name] = raw
    return values


def load_settings(
    options: Mapping[str, Any] | None = None,
    env_file: str | None = None,
    **overrides: Any,
) -> Settings:
    """
    Ayarları katmanlı olarak birleştirir.

    Args:
        options: grup spec dosyasındaki `options` alanı
        env_file: okunacak .env yolu (None ise çalışma dizinindeki .env aranır)
        **overrides: CLI değerleri; None olanlar yok sayılır

    Raises:
        SettingsError: herhangi bir alan doğrulanamazsa.

    Kullanım Yeri:
        - main.py her alt komutta bir kez çağırır.
    """
    load_dotenv(env_file)
    values: dict[str, Any] = _from_environment()
    values.update({k: v for k, v in (options or {}).items() if v is not None})
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        settings = Settings(**values)
    except ValidationError as exc:
        problems = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
        raise SettingsError(f"gecersiz ayar: {problems}") from None
    logger.debug("Ayarlar: %s", settings.model_dump())
    return settings
