"""
Top Sayımı Modülü (Ball Enumeration Module)

Bu modül, G(Γ,H)'nin Cayley grafında genişlik öncelikli arama (BFS) ile topları
ve küreleri çıkarır. Her yeni kelime, tekrar kontrolünden önce kanonik forma
indirgenir; böylece sayımlar kesindir.

Özellikler:
- enumerate_ball: bellek bütçesi aşılırsa en büyük tamamlanmış yarıçapla kısmi sonuç
- sphere_sizes / ball_sizes ve dc_sequence (değişmeli çift yoğunluğu, kesirli)
- count_tilde_support: supp(g̃) = A ve |p_g| <= s sayımı
- special_subgroup, submultiplicativity_audit
- K_{k,k} kapalı formları ve dc alt sınırları
- threads > 1 için ProcessPoolExecutor (sonuçlar worker sayısından bağımsız)
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

import networkx as nx

from src.graph_product import (
    Element,
    GraphProduct,
    GraphProductError,
    SyllableKey,
    cyclically_reduce,
    format_element,
    keys_commute,
    multiply_keys,
)
from src.vertex_groups import AuditResult

logger = logging.getLogger(__name__)

# Bir top elemanı için kaba bellek tahmini (bayt): sabit kısım + hece başına
_ELEMENT_OVERHEAD_BYTES = 200
_SYLLABLE_BYTES = 120

# Worker başına parça sayısı; parçalar ardışık indeks aralıklarıdır
_CHUNKS_PER_WORKER = 4


class BudgetExceeded(RuntimeError):
    """Bellek bütçesi aşıldı; tamamlanmış en büyük yarıçap ve kısmi BallIndex taşır."""

    def __init__(self, completed_radius: int, partial: BallIndex, budget: int):
        super().__init__(
            f"bellek butcesi ({budget} bayt) asildi; tamamlanan en buyuk yaricap: {completed_radius}"
        )
        self.completed_radius = completed_radius
        self.partial = partial
        self.budget = budget


# ============================================================
# 1️⃣ BALL INDEX
# ============================================================
@dataclass
class BallIndex:
    """
    B(N)'nin katmanları: layers[d] tam olarak |g|_X = d olan elemanlardır.

    membership, kanonik hece anahtarından uzaklığa giden sözlüktür.
    """

    gp: GraphProduct
    layers: list[tuple[Element, ...]] = field(default_factory=list)
    membership: dict[SyllableKey, int] = field(default_factory=dict)

    @property
    def radius(self) -> int:
        return len(self.layers) - 1

    def sphere_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def ball_sizes(self) -> list[int]:
        return list(accumulate(self.sphere_sizes()))

    def elements(self, n: int | None = None) -> Iterator[Element]:
        """B(n) elemanları, uzaklık ve kanonik sıraya göre."""
        stop = self.radius if n is None else min(n, self.radius)
        for d in range(stop + 1):
            yield from self.layers[d]

    def distance(self, g: Element) -> int | None:
        return self.membership.get(g.syllables)

    def __contains__(self, g: Element) -> bool:
        return g.syllables in self.membership


def _estimated_bytes(layer: Sequence[Element]) -> int:
    return sum(_ELEMENT_OVERHEAD_BYTES + _SYLLABLE_BYTES * g.syllable_length for g in layer)


# ============================================================
# 2️⃣ WORKER HAVUZU (PROCESS POOL)
# ============================================================
_worker_gp: GraphProduct | None = None
_worker_keys: list[SyllableKey] = []
_worker_distances: list[int] = []


def _init_worker(gp: GraphProduct, keys: list[SyllableKey] | None = None, distances: list[int] | None = None):
    """Her worker'a salt okunur grubu (ve çift sayımı için top anahtarlarını) bir kez yükler."""
    global _worker_gp, _worker_keys, _worker_distances
    _worker_gp = gp
    _worker_keys = keys or []
    _worker_distances = distances or []


def _expand_keys(gp: GraphProduct, keys: Sequence[SyllableKey]) -> list[SyllableKey]:
    """Her anahtarı tüm üreteçlerle sağdan çarpar; sıra: anahtar sırası, sonra üreteç sırası."""
    out = []
    for key in keys:
        for syllable in gp.generator_syllables:
            out.append(multiply_keys(gp, key, (syllable,)))
    return out


def _expand_chunk(index: int, keys: list[SyllableKey]) -> tuple[int, list[SyllableKey]]:
    return index, _expand_keys(_worker_gp, keys)


def _pair_counts(
    gp: GraphProduct, keys: Sequence[SyllableKey], distances: Sequence[int], start: int, stop: int, radius: int
) -> list[int]:
    """
    i in [start, stop), j >= i çiftleri için değişen çift sayıları, max(d_i, d_j) indeksli.

    Liste her zaman radius + 1 uzunluktadır; top dolmuş sonlu gruplarda üst katmanlar 0 kalır.
    """
    counts = [0] * (radius + 1)
    for i in range(start, stop):
        counts[distances[i]] += 1
        for j in range(i + 1, len(keys)):
            if keys_commute(gp, keys[i], keys[j]):
                counts[max(distances[i], distances[j])] += 2
    return counts


def _pair_chunk(index: int, start: int, stop: int, radius: int) -> tuple[int, list[int]]:
    return index, _pair_counts(_worker_gp, _worker_keys, _worker_distances, start, stop, radius)


def _chunk_bounds(total: int, threads: int) -> list[tuple[int, int]]:
    pieces = max(1, min(total, threads * _CHUNKS_PER_WORKER))
    step = -(-total // pieces) if total else 1
    return [(s, min(s + step, total)) for s in range(0, total, step)]


def _map_chunks(executor: ProcessPoolExecutor, fn, jobs: list[tuple]) -> list:
    """Parçaları gönderir, sonuçları indeks sırasıyla döner."""
    results: list = [None] * len(jobs)
    futures = {executor.submit(fn, i, *job): i for i, job in enumerate(jobs)}
    for future in as_completed(futures):
        index, value = future.result()
        results[index] = value
    return results


# ============================================================
# 3️⃣ BFS: TOPLAR VE KÜRELER
# ============================================================
def enumerate_ball(
    gp: GraphProduct,
    N: int,
    memory_budget: int | None = None,
    threads: int = 1,
) -> BallIndex:
    """
    Birim elemandan başlayarak X = ⊔X(v) üzerinde kesin BFS.

    Args:
        gp: graph product
        N: yarıçap (>= 0)
        memory_budget: bayt cinsinden üst sınır; None ise sınırsız
        threads: > 1 ise katman genişletme süreç havuzunda yapılır

    Returns:
        BallIndex: layers[d] kanonik sıraya göre sıralı

    Raises:
        BudgetExceeded: bir katman bütçeyi aşarsa (o ana kadarki katmanlar korunur)
    """
    if N < 0:
        raise ValueError(f"yaricap negatif olamaz: {N}")

    index = BallIndex(gp)
    index.layers.append((gp.identity,))
    index.membership[()] = 0
    used = _estimated_bytes(index.layers[0])

    executor = ProcessPoolExecutor(max_workers=threads, initializer=_init_worker, initargs=(gp,)) if threads > 1 else None
    try:
        for d in range(1, N + 1):
            frontier = [g.syllables for g in index.layers[d - 1]]
            if executor is None:
                candidates = _expand_keys(gp, frontier)
            else:
                jobs = [(frontier[s:e],) for s, e in _chunk_bounds(len(frontier), threads)]
                candidates = [key for part in _map_chunks(executor, _expand_chunk, jobs) for key in part]

            fresh: dict[SyllableKey, None] = {}
            for key in candidates:
                if key not in index.membership and key not in fresh:
                    fresh[key] = None
            layer = sorted((Element(gp, key) for key in fresh), key=lambda g: g.sort_key)

            used += _estimated_bytes(layer)
            if memory_budget is not None and used > memory_budget:
                logger.warning("Bellek butcesi asildi: yaricap %d tamamlanamadi", d)
                raise BudgetExceeded(d - 1, index, memory_budget)

            index.layers.append(tuple(layer))
            for g in layer:
                index.membership[g.syllables] = d
            logger.debug("Yaricap %d: %d eleman (tahmini %d bayt)", d, len(layer), used)
    finally:
        if executor is not None:
            executor.shutdown()

    logger.info("B(%d) hazir: %d eleman", N, len(index.membership))
    return index


def sphere_sizes(gp: GraphProduct, N: int, **kwargs) -> list[int]:
    return enumerate_ball(gp, N, **kwargs).sphere_sizes()


def ball_sizes(gp: GraphProduct, N: int, **kwargs) -> list[int]:
    return enumerate_ball(gp, N, **kwargs).ball_sizes()


def dump_ball(index: BallIndex) -> list[str]:
    """Topu `uzaklık<TAB>kelime` satırları olarak döner (uzaklık ve kanonik sıraya göre)."""
    return [f"{index.membership[g.syllables]}\t{format_element(g)}" for g in index.elements()]


# ============================================================
# 4️⃣ DEĞİŞMELİLİK DERECESİ DİZİSİ (dc)
# ============================================================
def dc_sequence(gp: GraphProduct, N: int, index: BallIndex | None = None, threads: int = 1) -> list[Fraction]:
    """
    d_n = |{(x,y) ∈ B(n)² : [x,y] = 1}| / 𝔅(n)², n = 0..N, kesin kesir olarak.

    Her çift bir kez sayılır: köşegen 1, köşegen dışı 2 ile; çift max(|x|,|y|)
    yarıçapında topa girer, kümülatif toplam d_n'yi verir.
    """
    if index is None or index.radius < N:
        index = enumerate_ball(gp, N, threads=threads)
    elements = list(index.elements(N))
    keys = [g.syllables for g in elements]
    distances = [index.membership[k] for k in keys]

    if threads > 1 and len(keys) > 1:
        bounds = [(start, stop, N) for start, stop in _chunk_bounds(len(keys), threads)]
        with ProcessPoolExecutor(
            max_workers=threads, initializer=_init_worker, initargs=(gp, keys, distances)
        ) as executor:
            parts = _map_chunks(executor, _pair_chunk, bounds)
        counts = [sum(column) for column in zip(*parts)]
    else:
        counts = _pair_counts(gp, keys, distances, 0, len(keys), N)

    balls = index.ball_sizes()
    cumulative = list(accumulate(counts))
    return [Fraction(cumulative[n], balls[n] ** 2) for n in range(N + 1)]


# ============================================================
# 5️⃣ SPECIAL SUBGROUP VE SUPPORT SAYIMLARI
# ============================================================
def special_subgroup(gp: GraphProduct, A: Iterable[str]) -> GraphProduct:
    """G_A = G(Γ(A), H|_A); A = V(Γ) ise gp'nin kendisi."""
    vertex_set = frozenset(A)
    unknown = vertex_set - set(gp.vertices)
    if unknown:
        raise GraphProductError(f"bilinmeyen kose(ler): {sorted(unknown)}")
    if vertex_set == frozenset(gp.vertices):
        return gp
    graph = gp.graph.induced(vertex_set)
    return GraphProduct(graph, {v: gp.assignment[v] for v in graph.vertices})


def embed(g: Element, gp: GraphProduct) -> Element:
    """G_A elemanını G(Γ,H) içine taşır; kanonik form ve uzunluk aynı kalır."""
    unknown = g.support - set(gp.vertices)
    if unknown:
        raise GraphProductError(f"eleman desteği hedef grupta yok: {sorted(unknown)}")
    return Element(gp, g.syllables)


def count_tilde_support(
    gp: GraphProduct,
    n: int,
    A: Iterable[str],
    s: int,
    index: BallIndex | None = None,
) -> int:
    """
    |{g ∈ B(n) : supp(g̃) = A, |p_g| <= s}|; g̃ ve p_g kanonik greedy cyclic reduction'dan gelir.
    """
    target = frozenset(A)
    if index is None or index.radius < n:
        index = enumerate_ball(gp, n)
    total = 0
    for g in index.elements(n):
        if not target and not g.is_identity:
            continue
        p, g_tilde = cyclically_reduce(g)
        if g_tilde.support == target and p.word_length <= s:
            total += 1
    return total


def submultiplicativity_audit(seq: Sequence[int]) -> AuditResult:
    """
    a_{i+j} <= a_i · a_j kontrolü; ilk ihlal (i, j) sözlük sırasıyla döner (i <= j).
    """
    for i in range(len(seq)):
        for j in range(i, len(seq) - i):
            if seq[i + j] > seq[i] * seq[j]:
                return AuditResult(False, (i, j))
    return AuditResult(True)


# ============================================================
# 6️⃣ K_{k,k} YARDIMCILARI
# ============================================================
def complete_bipartite_parts(gp: GraphProduct) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """
    Γ = K_{k,k} ise parçaları döner (ilk parça ilk köşeyi içerir).

    Raises:
        GraphProductError: Γ tam iki parçalı ve dengeli değilse.
    """
    graph = gp.graph.nx_graph
    if graph.number_of_nodes() < 2 or not nx.is_connected(graph) or not nx.is_bipartite(graph):
        raise GraphProductError("graf K_{k,k} degil")
    left, right = nx.bipartite.sets(graph)
    if gp.vertices[0] not in left:
        left, right = right, left
    if len(left) != len(right) or graph.number_of_edges() != len(left) * len(right):
        raise GraphProductError("graf tam ve dengeli iki parcali degil")
    return gp.graph.ordered(left), gp.graph.ordered(right)


def kk_part_ball_size(k: int, n: int) -> int:
    """F_k topu: (k(2k−1)^n − 1)/(k−1); k = 1 için 2n + 1."""
    if k < 1:
        raise ValueError(f"k >= 1 olmali: {k}")
    if k == 1:
        return 2 * n + 1
    return (k * (2 * k - 1) ** n - 1) // (k - 1)


def dc_lower_bounds(gp: GraphProduct, N: int, index: BallIndex | None = None) -> list[Fraction]:
    """
    K_{k,k} RAAG için d_n >= 𝔅_{G_A}(n)·𝔅_{G_link A}(n) / 𝔅_G(n)², A ilk parça.

    Parça toplarının boyutu kapalı formdan değil, special subgroup sayımından gelir.
    """
    left, right = complete_bipartite_parts(gp)
    if index is None or index.radius < N:
        index = enumerate_ball(gp, N)
    balls = index.ball_sizes()
    part_a = ball_sizes(special_subgroup(gp, left), N)
    part_link = ball_sizes(special_subgroup(gp, right), N)
    return [Fraction(part_a[n] * part_link[n], balls[n] ** 2) for n in range(N + 1)]
