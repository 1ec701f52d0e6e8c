"""
Rapor Modülü (Report Module)

Alt komutların ürettiği sonuçları deterministik metin, JSON veya CSV çıktısına çevirir.
Aynı girdiler her zaman bayt bazında aynı çıktıyı verir (worker sayısı rapora girmez).

Değer biçimleri:
- Fraction -> "pay/payda" (payda 1 ise tam sayı)
- float -> 12 anlamlı basamak
- complex -> "a+bj"
- None -> "-"
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from src.settings import OutputFormat


@dataclass
class Section:
    title: str
    columns: tuple[str, ...] = ()
    rows: list[tuple] = field(default_factory=list)
    fields: dict[str, Any] = field(default_factory=dict)

    @property
    def is_table(self) -> bool:
        return bool(self.columns)


@dataclass
class Report:
    command: str
    metadata: dict[str, Any] = field(default_factory=dict)
    sections: list[Section] = field(default_factory=list)
    partial: bool = False

    def add_table(self, title: str, columns: Sequence[str], rows: Iterable[Sequence]) -> Section:
        section = Section(title, tuple(columns), [tuple(r) for r in rows])
        self.sections.append(section)
        return section

    def add_fields(self, title: str, values: Mapping[str, Any]) -> Section:
        section = Section(title, fields=dict(values))
        self.sections.append(section)
        return section


def format_value(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, complex):
        return f"{value.real:.12g}{value.imag:+.12g}j"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_value(v) for v in value) + "]"
    return str(value)


def _render_text(report: Report) -> str:
    out = [f"# gpgrowth {report.command}"]
    if report.partial:
        out.append("partial: true")
    out.extend(f"{k}: {format_value(v)}" for k, v in report.metadata.items())
    for section in report.sections:
        out.append("")
        out.append(f"== {section.title} ==")
        if section.is_table:
            cells = [list(section.columns)] + [[format_value(v) for v in row] for row in section.rows]
            widths = [max(len(r[i]) for r in cells) for i in range(len(section.columns))]
            for row in cells:
                out.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
        else:
            out.extend(f"{k}: {format_value(v)}" for k, v in section.fields.items())
    return "\n".join(out) + "\n"


def _render_json(report: Report) -> str:
    payload = {
        "command": report.command,
        "partial": report.partial,
        "metadata": {k: format_value(v) for k, v in report.metadata.items()},
        "sections": [
            {
                "title": s.title,
                "columns": list(s.columns),
                "rows": [[format_value(v) for v in row] for row in s.rows],
            }
            if s.is_table
            else {"title": s.title, "fields": {k: format_value(v) for k, v in s.fields.items()}}
            for s in report.sections
        ],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _render_csv(report: Report) -> str:
    """Her tablo `# başlık` satırı ve başlık satırıyla ayrı bir blok olarak yazılır."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for section in report.sections:
        buffer.write(f"# {section.title}\n")
        if section.is_table:
            writer.writerow(section.columns)
            writer.writerows([format_value(v) for v in row] for row in section.rows)
        else:
            writer.writerow(("key", "value"))
            writer.writerows((k, format_value(v)) for k, v in section.fields.items())
    return buffer.getvalue()


def render(report: Report, fmt: OutputFormat | str = OutputFormat.TEXT) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return _render_json(report)
    if fmt is OutputFormat.CSV:
        return _render_csv(report)
    return _render_text(report)
