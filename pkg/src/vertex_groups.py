"""
Köşe Grupları Modülü (Vertex Groups Module)

Bu modül, graph product içindeki köşe gruplarını H(v) ve üreteç kümelerini X(v) temsil eder.
Her köşe grubu ya çarpım tablosu ile verilen sonlu bir gruptur (FiniteTable),
ya da sonsuz devirli gruptur Z (InfiniteCyclic, elemanlar tam sayı üslerdir).

Cevaplanan sorgular:
- Uzunluk (vg_length): X(v) üzerindeki geodesic kelime uzunluğu (BFS ile bir kez hesaplanır).
- Merkezleyici (vg_centraliser): C_{H(v)}(g).
- Top sayımı (vg_ball_count): |{g : |g| <= n}|.
- Rational pair denetimi (rational_pair_audit): |C(g) ∩ B(n)| <= P n^β.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

logger = logging.getLogger(__name__)

# Tablo ile verilen grupların desteklenen en büyük mertebesi
MAX_TABLE_ORDER = 200


class VertexGroupError(ValueError):
    """Geçersiz çarpım tablosu, üreteç kümesi veya eleman."""


class VertexGroupKind(str, Enum):
    FINITE_TABLE = "table"
    INFINITE_CYCLIC = "Z"


@dataclass(frozen=True)
class VertexCentraliser:
    """
    C_{H(v)}(g) tanımı.

    members=None ise merkezleyici tüm gruptur (Z için kullanılan işaret).
    """

    members: frozenset[int] | None = None

    @property
    def is_entire_group(self) -> bool:
        return self.members is None


@dataclass(frozen=True)
class AuditResult:
    """Denetim sonucu: geçti mi, geçmediyse ilk tanık (witness)."""

    passed: bool
    witness: tuple | None = None


@dataclass(frozen=True, eq=False)
class VertexGroupSpec:
    """
    Tek bir köşe grubu H(v) ve üreteç kümesi X(v).

    FiniteTable için elemanlar 0..order-1 arası id'lerdir; InfiniteCyclic için
    elemanlar tam sayı üslerdir ve üreteç kümesi {+1, -1} olur.
    Nesne oluşturulduktan sonra değişmez; worker'lar arasında paylaşılabilir.
    """

    kind: VertexGroupKind
    label: str = "Z"
    identity: int = 0
    mult: tuple[tuple[int, ...], ...] = ()
    inv: tuple[int, ...] = ()
    generators: frozenset[int] = frozenset({1, -1})
    lengths: tuple[int, ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.kind is VertexGroupKind.FINITE_TABLE

    @property
    def order(self) -> int | None:
        return len(self.mult) if self.is_finite else None

    @cached_property
    def first_generator(self) -> int:
        """Kelime sözdiziminde çıplak `v` yazımının gösterdiği üreteç."""
        if not self.is_finite:
            return 1
        return min(self.generators, key=lambda g: (self.lengths[g], g))

    @cached_property
    def is_abelian(self) -> bool:
        if not self.is_finite:
            return True
        table = np.asarray(self.mult)
        return bool(np.array_equal(table, table.T))

    def is_valid(self, g: object) -> bool:
        if isinstance(g, bool) or not isinstance(g, (int, np.integer)):
            return False
        if self.is_finite:
            return 0 <= int(g) < len(self.mult)
        return True

    def check(self, g: object) -> int:
        if not self.is_valid(g):
            raise VertexGroupError(f"{self.label} grubunda gecersiz eleman: {g!r}")
        return int(g)

    def is_identity(self, g: int) -> bool:
        return g == self.identity

    def mul(self, g: int, h: int) -> int:
        if self.is_finite:
            return self.mult[g][h]
        return g + h

    def inverse(self, g: int) -> int:
        if self.is_finite:
            return self.inv[g]
        return -g

    def power(self, g: int, k: int) -> int:
        if not self.is_finite:
            return g * k
        base = g if k >= 0 else self.inv[g]
        result = self.identity
        for _ in range(abs(k)):
            result = self.mult[result][base]
        return result

    def length(self, g: int) -> int:
        if self.is_finite:
            return self.lengths[g]
        return abs(g)

    def elements(self) -> Iterator[int]:
        if not self.is_finite:
            raise VertexGroupError("Z grubunun elemanlari listelenemez")
        return iter(range(len(self.mult)))


# ============================================================
# 1️⃣ CONSTRUCTORS (TABLO, Z VE HAZIR SABİT GRUPLAR)
# ============================================================
def infinite_cyclic(label: str = "Z") -> VertexGroupSpec:
    """Sonsuz devirli grup Z; üreteç kümesi {+1, -1}."""
    return VertexGroupSpec(kind=VertexGroupKind.INFINITE_CYCLIC, label=label)


def create_table_group(
    mult: Sequence[Sequence[int]],
    generators: Iterable[int],
    label: str = "table",
) -> VertexGroupSpec:
    """
    Çarpım tablosundan sonlu köşe grubu oluşturur ve tüm değişmezleri doğrular.

    Kontroller:
    - Tablo kare ve elemanları 0..m-1 aralığında
    - Birim eleman ve tersler tutarlı
    - Birleşme özelliği (numpy ile tüm üçlüler üzerinde)
    - Üreteç kümesi simetrik, birimi içermez ve tüm grubu üretir

    Args:
        mult (Sequence[Sequence[int]]): m x m çarpım tablosu, mult[g][h] = g·h.
        generators (Iterable[int]): X(v) üreteç id'leri.
        label (str): Raporlarda kullanılacak isim.

    Returns:
        VertexGroupSpec: Uzunluk tablosu hesaplanmış değişmez grup.
    """
    table = tuple(tuple(int(x) for x in row) for row in mult)
    order = len(table)
    if order < 2:
        raise VertexGroupError(f"{label}: kose grubu trivial olamaz (mertebe {order})")
    if order > MAX_TABLE_ORDER:
        raise VertexGroupError(f"{label}: mertebe {order} > {MAX_TABLE_ORDER} desteklenmiyor")
    if any(len(row) != order for row in table):
        raise VertexGroupError(f"{label}: carpim tablosu kare degil")
    if any(not 0 <= x < order for row in table for x in row):
        raise VertexGroupError(f"{label}: tabloda aralik disi eleman id'si var")

    elements = tuple(range(order))
    identity = next(
        (e for e in elements
         if table[e] == elements and all(table[x][e] == x for x in elements)),
        None,
    )
    if identity is None:
        raise VertexGroupError(f"{label}: birim eleman bulunamadi")

    inv = []
    for x in elements:
        y = next((y for y in elements if table[x][y] == identity), None)
        if y is None or table[y][x] != identity:
            raise VertexGroupError(f"{label}: {x} elemaninin tersi yok")
        inv.append(y)

    arr = np.asarray(table, dtype=np.int64)
    # (g·h)·k == g·(h·k) tüm üçlüler için
    if not np.array_equal(arr[arr], arr[:, arr]):
        raise VertexGroupError(f"{label}: carpim tablosu birlesmeli degil")

    gens = frozenset(int(g) for g in generators)
    if not gens:
        raise VertexGroupError(f"{label}: uretec kumesi bos")
    if any(not 0 <= g < order for g in gens):
        raise VertexGroupError(f"{label}: uretec id'si aralik disi")
    if identity in gens:
        raise VertexGroupError(f"{label}: uretec kumesi birimi iceremez")
    if any(inv[g] not in gens for g in gens):
        raise VertexGroupError(f"{label}: uretec kumesi simetrik degil")

    lengths = _bfs_lengths(table, identity, gens)
    if len(lengths) != order:
        raise VertexGroupError(f"{label}: uretecler tum grubu uretmiyor")

    logger.debug("%s: mertebe %d, %d uretec", label, order, len(gens))
    return VertexGroupSpec(
        kind=VertexGroupKind.FINITE_TABLE,
        label=label,
        identity=identity,
        mult=table,
        inv=tuple(inv),
        generators=gens,
        lengths=tuple(lengths[x] for x in elements),
    )


def _bfs_lengths(table, identity: int, generators: frozenset[int]) -> dict[int, int]:
    lengths = {identity: 0}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for x in sorted(generators):
            h = table[g][x]
            if h not in lengths:
                lengths[h] = lengths[g] + 1
                queue.append(h)
    return lengths


def cyclic_group(q: int) -> VertexGroupSpec:
    """C_q; eleman k = x^k, üreteç kümesi {x, x^-1}."""
    if q < 2:
        raise VertexGroupError(f"C_{q}: mertebe en az 2 olmali")
    table = [[(i + j) % q for j in range(q)] for i in range(q)]
    return create_table_group(table, {1, q - 1}, label=f"C{q}")


def dihedral_group(n: int) -> VertexGroupSpec:
    """
    2n mertebeli dihedral grup; eleman i + n·j = r^i s^j.
    Üreteçler iki yansımadır: s ve r·s (Coxeter üreteçleri).
    """
    if n < 2:
        raise VertexGroupError(f"D_{n}: n en az 2 olmali")

    def encode(i: int, j: int) -> int:
        return (i % n) + n * (j % 2)

    table = []
    for a in range(2 * n):
        i, j = a % n, a // n
        row = []
        for b in range(2 * n):
            k, l = b % n, b // n
            row.append(encode(i + (-k if j else k), j + l))
        table.append(row)
    return create_table_group(table, {encode(0, 1), encode(1, 1)}, label=f"D{n}")


def symmetric_group(n: int) -> VertexGroupSpec:
    """
    S_3 veya S_4; elemanlar permütasyonların sözlük sırasıdır (0 = birim).
    Üreteçler komşu transpozisyonlardır; çarpım (p·q)(x) = p(q(x)).
    """
    if n not in (3, 4):
        raise VertexGroupError(f"S_{n}: sadece S_3 ve S_4 hazir")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    transpositions = []
    for i in range(n - 1):
        swap = list(range(n))
        swap[i], swap[i + 1] = swap[i + 1], swap[i]
        transpositions.append(index[tuple(swap)])
    return create_table_group(table, transpositions, label=f"S{n}")


# ============================================================
# 2️⃣ QUERIES (UZUNLUK, MERKEZLEYİCİ, TOP SAYIMI)
# ============================================================
def vg_length(vg: VertexGroupSpec, g: int) -> int:
    """X(v) üzerindeki geodesic uzunluk; Z için |üs|."""
    return vg.length(vg.check(g))


def vg_centraliser(vg: VertexGroupSpec, g: int) -> VertexCentraliser:
    """
    C_{H(v)}(g) = {h : hg = gh}.

    Sonlu grupta açık küme döner; Z için "tüm grup" işareti döner.
    g = birim çağıranın hatasıdır (merkezleyici zaten tüm grup).
    """
    g = vg.check(g)
    if vg.is_identity(g):
        raise VertexGroupError("birim elemanin merkezleyicisi istenmemeli")
    if not vg.is_finite:
        return VertexCentraliser(None)
    if vg.is_abelian:
        return VertexCentraliser(frozenset(vg.elements()))
    members = frozenset(h for h in vg.elements() if vg.mul(h, g) == vg.mul(g, h))
    return VertexCentraliser(members)


def vg_ball_count(vg: VertexGroupSpec, n: int) -> int:
    """|{g : vg_length(g) <= n}|; Z için 2n+1."""
    if n < 0:
        return 0
    if not vg.is_finite:
        return 2 * n + 1
    return sum(1 for length in vg.lengths if length <= n)


def centraliser_ball_count_in_vertex_group(vg: VertexGroupSpec, cent: VertexCentraliser, n: int) -> int:
    if cent.is_entire_group:
        return vg_ball_count(vg, n)
    return sum(1 for h in cent.members if vg.length(h) <= n)


def rational_pair_parameters(vg: VertexGroupSpec) -> tuple[int, int]:
    """Köşe grubunun (P, β) parametreleri: sonlu grupta (mertebe, 1), Z için (3, 1)."""
    if vg.is_finite:
        return vg.order, 1
    return 3, 1


def rational_pair_audit(vg: VertexGroupSpec, P: int, beta: int, N: int) -> AuditResult:
    """
    Tüm birim olmayan g ve 1 <= n <= N için |C(g) ∩ B(n)| <= P n^β sınırını denetler.

    Z'de her birim olmayan elemanın merkezleyicisi tüm gruptur, bu yüzden tek temsilci
    (üreteç x = +1) yeterlidir.

    Returns:
        AuditResult: ilk ihlal (g, n, sayım, sınır) ile birlikte.
    """
    if N < 1:
        raise VertexGroupError("N en az 1 olmali")
    candidates = [g for g in vg.elements() if not vg.is_identity(g)] if vg.is_finite else [1]
    for g in candidates:
        cent = vg_centraliser(vg, g)
        for n in range(1, N + 1):
            count = centraliser_ball_count_in_vertex_group(vg, cent, n)
            bound = P * n ** beta
            if count > bound:
                return AuditResult(False, (g, n, count, bound))
    return AuditResult(True)
