"""
Spec Yükleme Modülü (Loader Module)

Bu modül, grup spec dosyalarını (JSON veya YAML) ve tam sayı dizisi dosyalarını
diskten okuyup doğrulanmış nesnelere çevirir.

Özellikler:
- GroupSpecFile: pydantic modeli, köşe grubu tanımları için discriminated union
  (Z, cyclic, table, dihedral, symmetric)
- load_group_spec: dosya -> LoadedSpec (spec, GraphProduct, sha256 özeti)
- load_sequence: her satırda bir tam sayı, `#` yorumlarına izin verir
- Hatalar satır/alan bilgisiyle GroupSpecError olarak yükselir
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Annotated, Literal, Sequence, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.graph_product import GraphProduct, GraphProductError, create_graph_product
from src.vertex_groups import (
    VertexGroupError,
    VertexGroupSpec,
    create_table_group,
    cyclic_group,
    dihedral_group,
    infinite_cyclic,
    symmetric_group,
)

logger = logging.getLogger(__name__)


class GroupSpecError(ValueError):
    """Spec veya dizi dosyası okunamadı ya da doğrulanamadı."""


# ============================================================
# 1️⃣ KÖŞE GRUBU TANIMLARI
# ============================================================
class _Descriptor(BaseModel):
    model_config = ConfigDict(extra="forbid")


class InfiniteCyclicDescriptor(_Descriptor):
    type: Literal["Z"]


class CyclicDescriptor(_Descriptor):
    type: Literal["cyclic"]
    order: int = Field(ge=2)


class TableDescriptor(_Descriptor):
    type: Literal["table"]
    order: int = Field(ge=2)
    mult: list[list[int]]
    generators: list[int]

    @model_validator(mode="after")
    def _shape(self):
        if len(self.mult) != self.order or any(len(row) != self.order for row in self.mult):
            raise ValueError(f"mult tablosu {self.order}x{self.order} olmali")
        return self


class DihedralDescriptor(_Descriptor):
    type: Literal["dihedral"]
    n: int = Field(ge=2)


class SymmetricDescriptor(_Descriptor):
    type: Literal["symmetric"]
    n: Literal[3, 4]


VertexGroupDescriptor = Annotated[
    Union[
        InfiniteCyclicDescriptor,
        CyclicDescriptor,
        TableDescriptor,
        DihedralDescriptor,
        SymmetricDescriptor,
    ],
    Field(discriminator="type"),
]


class SpecOptions(BaseModel):
    """Dosya düzeyindeki varsayılanlar; CLI bayrakları bunları ezer."""

    model_config = ConfigDict(extra="forbid")

    radius: int | None = Field(None, ge=0)
    max_order: int | None = Field(None, ge=0)
    memory_budget: int | str | None = None
    tolerance: float | None = Field(None, gt=0)
    grouping_tolerance: float | None = Field(None, gt=0)
    root_tolerance: float | None = Field(None, gt=0)
    separation_tolerance: float | None = Field(None, gt=0)
    oracle_radius: int | None = Field(None, ge=0)


class GroupSpecFile(BaseModel):
    """
    Grup spec dosyası. `vertices` sırası kanonik köşe sırasıdır.
    """

    model_config = ConfigDict(extra="forbid")

    vertices: list[str]
    edges: list[tuple[str, str]] = []
    groups: dict[str, VertexGroupDescriptor]
    options: SpecOptions = SpecOptions()

    @model_validator(mode="after")
    def _consistency(self):
        declared = set(self.vertices)
        if len(declared) != len(self.vertices):
            raise ValueError("vertices listesinde tekrar var")
        seen = set()
        for u, v in self.edges:
            if u not in declared or v not in declared:
                raise ValueError(f"kenar tanimsiz koseye gidiyor: {u}-{v}")
            if u == v:
                raise ValueError(f"dongu kenari: {u}-{v}")
            edge = frozenset((u, v))
            if edge in seen:
                raise ValueError(f"tekrarlanan kenar: {u}-{v}")
            seen.add(edge)
        missing = [v for v in self.vertices if v not in self.groups]
        if missing:
            raise ValueError(f"grup tanimi olmayan kose(ler): {missing}")
        extra = sorted(set(self.groups) - declared)
        if extra:
            raise ValueError(f"tanimsiz kose(ler) icin grup: {extra}")
        return self


# ============================================================
# 2️⃣ DOSYA OKUMA
# ============================================================
@dataclass(frozen=True)
class LoadedSpec:
    spec: GroupSpecFile
    gp: GraphProduct
    digest: str
    path: Path


def build_vertex_group(name: str, descriptor) -> VertexGroupSpec:
    """Tanımdan VertexGroupSpec üretir; tablo hataları GroupSpecError'a çevrilir."""
    try:
        match descriptor:
            case InfiniteCyclicDescriptor():
                return infinite_cyclic()
            case CyclicDescriptor(order=q):
                return cyclic_group(q)
            case TableDescriptor(mult=mult, generators=gens):
                return create_table_group(mult, gens, label=name)
            case DihedralDescriptor(n=n):
                return dihedral_group(n)
            case SymmetricDescriptor(n=n):
                return symmetric_group(n)
    except VertexGroupError as exc:
        raise GroupSpecError(f"groups.{name}: {exc}") from None
    raise GroupSpecError(f"groups.{name}: bilinmeyen tanim {descriptor!r}")


def _format_validation(exc: ValidationError) -> str:
    return "; ".join(f"{'.'.join(map(str, e['loc'])) or '<kok>'}: {e['msg']}" for e in exc.errors())


def parse_group_spec(text: str, source: str = "<metin>") -> GroupSpecFile:
    """
    JSON veya YAML metnini GroupSpecFile'a çevirir.

    Raises:
        GroupSpecError: sözdizimi hatasında satır/sütun, doğrulama hatasında alan yolu ile.
    """
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f" (satir {mark.line + 1}, sutun {mark.column + 1})" if mark is not None else ""
        raise GroupSpecError(f"{source}: sozdizimi hatasi{where}: {getattr(exc, 'problem', exc)}") from None
    if not isinstance(raw, dict):
        raise GroupSpecError(f"{source}: ust duzey bir nesne olmali")
    try:
        return GroupSpecFile.model_validate(raw)
    except ValidationError as exc:
        raise GroupSpecError(f"{source}: {_format_validation(exc)}") from None


def _decode(data: bytes, path: Path) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise GroupSpecError(f"{path}: gecersiz UTF-8 (bayt {exc.start}: {data[exc.start:exc.end]!r})") from None


def load_group_spec(path: str | Path) -> LoadedSpec:
    """
    Spec dosyasını okur, doğrular ve graph product'ı kurar.

    Returns:
        LoadedSpec: spec, GraphProduct, dosya baytlarının sha256 özeti.

    Raises:
        GroupSpecError: dosya geçersizse (UTF-8 olmayan baytlar dahil).
        OSError: dosya okunamazsa.
    """
    path = Path(path)
    data = path.read_bytes()
    spec = parse_group_spec(_decode(data, path), source=str(path))
    groups = {name: build_vertex_group(name, desc) for name, desc in spec.groups.items()}
    try:
        gp = create_graph_product(spec.vertices, spec.edges, groups)
    except GraphProductError as exc:
        raise GroupSpecError(f"{path}: {exc}") from None
    logger.info("Yuklendi: %s (%d kose, %d kenar)", path.name, len(spec.vertices), len(spec.edges))
    return LoadedSpec(spec, gp, hashlib.sha256(data).hexdigest(), path)


def file_digest(path: str | Path) -> str:
    """Dosya baytlarının sha256 özeti (raporlara gömülür)."""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def sequence_digest(values: Sequence[int]) -> str:
    """Dizinin dosya biçimindeki (satır başına bir terim) sha256 özeti; hazır diziler için."""
    text = "".join(f"{a}\n" for a in values)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def load_sequence(path: str | Path) -> list[int]:
    """
    Her satırda bir tam sayı; `#` sonrası yorumdur, boş satırlar atlanır.

    Raises:
        GroupSpecError: tam sayı olmayan satırda satır numarasıyla, UTF-8 olmayan dosyada bayt konumuyla.
    """
    path = Path(path)
    values = []
    for lineno, line in enumerate(_decode(path.read_bytes(), path).splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        try:
            values.append(int(content))
        except ValueError:
            raise GroupSpecError(f"{path}:{lineno}: tam sayi bekleniyordu: {content!r}") from None
    if not values:
        raise GroupSpecError(f"{path}: dizi bos")
    logger.info("Yuklendi: %s (%d terim)", path.name, len(values))
    return values
