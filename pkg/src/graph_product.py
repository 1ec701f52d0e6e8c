"""
Graph Product Çekirdeği (Graph Product Core)

Bu modül, G(Γ,H) graph product grubunun cebir motorudur.
Elemanlar kanonik Green normal formunda tutulur: her eleman, hecelerin (syllable)
indirgenmiş ve sözlük sırasına göre en küçük shuffle temsilcisidir. Böylece grup
eşitliği, hece dizilerinin eşitliğine indirgenir.

Özellikler:
- normalize: sağa ekleme ile pile-up (shuffle + merge hamleleri), ardından kanonik sıralama
- multiply / inverse / power / commutes
- support, link, complement_components
- cyclically_reduce (greedy, tek heceli eşlenikler) ve cyclically_normalize
- Kelime sözdizimi: `a^2 b^-3` (Z köşeleri), `v:3` (tablo köşeleri)
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

import networkx as nx

from src.vertex_groups import VertexGroupError, VertexGroupSpec, cyclic_group, infinite_cyclic

logger = logging.getLogger(__name__)


class GraphProductError(ValueError):
    """Bilinmeyen köşe, geçersiz harf, karışık grup veya kelime ayrıştırma hatası."""


class Syllable(NamedTuple):
    vertex: str
    letter: int


SyllableKey = tuple[Syllable, ...]


# ============================================================
# 1️⃣ GRAPH VE GRUP TİPLERİ
# ============================================================
@dataclass(frozen=True, eq=False)
class PresentationGraph:
    """
    Sonlu basit graf Γ. Köşe sırası sabittir ve kanonik formu belirler.

    Kenarlar iki elemanlı frozenset olarak tutulur (döngü ve çoklu kenar yok).
    """

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphProductError(f"tekrarlanan kose: {self.vertices}")
        declared = set(self.vertices)
        for edge in self.edges:
            if len(edge) != 2:
                raise GraphProductError(f"dongu (self-loop) kenari: {sorted(edge)}")
            if not edge <= declared:
                raise GraphProductError(f"kenar tanimsiz koseye gidiyor: {sorted(edge)}")

    @cached_property
    def position(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def neighbours(self) -> dict[str, frozenset[str]]:
        adjacency = {v: set() for v in self.vertices}
        for edge in self.edges:
            u, w = tuple(edge)
            adjacency[u].add(w)
            adjacency[w].add(u)
        return {v: frozenset(ns) for v, ns in adjacency.items()}

    @cached_property
    def nx_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(tuple(edge) for edge in self.edges)
        return graph

    def adjacent(self, u: str, v: str) -> bool:
        return v in self.neighbours[u]

    def ordered(self, vertices: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(vertices, key=self.position.__getitem__))

    def induced(self, vertices: Iterable[str]) -> PresentationGraph:
        keep = self.ordered(set(vertices))
        kept = set(keep)
        return PresentationGraph(keep, frozenset(e for e in self.edges if e <= kept))


def create_presentation_graph(vertices: Sequence[str], edges: Iterable[Sequence[str]]) -> PresentationGraph:
    """
    Köşe listesi ve kenar çiftlerinden Γ oluşturur.

    Raises:
        GraphProductError: döngü, tekrarlanan kenar veya tanımsız köşe.
    """
    seen: set[frozenset[str]] = set()
    for pair in edges:
        u, w = pair
        edge = frozenset((u, w))
        if edge in seen:
            raise GraphProductError(f"tekrarlanan kenar: {u}-{w}")
        seen.add(edge)
    return PresentationGraph(tuple(vertices), frozenset(seen))


@dataclass(frozen=True, eq=False)
class GraphProduct:
    """
    G(Γ,H): graf + köşe -> VertexGroupSpec ataması.

    Üreteç kümesi X = ⊔ X(v). Eşitlik nesne kimliğidir; aynı grubun elemanları
    aynı GraphProduct nesnesini paylaşır.
    """

    graph: PresentationGraph
    assignment: Mapping[str, VertexGroupSpec]

    def __post_init__(self):
        missing = [v for v in self.graph.vertices if v not in self.assignment]
        extra = [v for v in self.assignment if v not in self.graph.position]
        if missing:
            raise GraphProductError(f"grubu atanmamis kose(ler): {missing}")
        if extra:
            raise GraphProductError(f"grafta olmayan kose(ler)e grup atanmis: {extra}")

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.graph.vertices

    def group(self, vertex: str) -> VertexGroupSpec:
        try:
            return self.assignment[vertex]
        except KeyError:
            raise GraphProductError(f"bilinmeyen kose: {vertex!r}") from None

    @cached_property
    def identity(self) -> Element:
        return Element(self, ())

    @cached_property
    def generator_syllables(self) -> tuple[Syllable, ...]:
        """X'in tüm harfleri, köşe sırası ve harf id'si sırasıyla."""
        return tuple(
            Syllable(v, x)
            for v in self.vertices
            for x in sorted(self.assignment[v].generators)
        )

    @cached_property
    def generators(self) -> tuple[Element, ...]:
        return tuple(Element(self, (s,)) for s in self.generator_syllables)

    def vertex_element(self, vertex: str, letter: int) -> Element:
        """Tek heceli eleman (v, x); x birim ise birim eleman."""
        return normalize(self, [(vertex, letter)])


@dataclass(frozen=True, eq=False)
class Element:
    """
    G(Γ,H) elemanı: kanonik sıradaki hece dizisi.

    Yapısal eşitlik = grup eşitliği. word_length, syllable_length ve support
    ilk erişimde hesaplanıp saklanır.
    """

    gp: GraphProduct
    syllables: SyllableKey

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.gp is other.gp and self.syllables == other.syllables

    def __hash__(self) -> int:
        return hash(self.syllables)

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def __pow__(self, k: int) -> Element:
        return power(self, k)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"

    @cached_property
    def word_length(self) -> int:
        return sum(self.gp.assignment[v].length(x) for v, x in self.syllables)

    @property
    def syllable_length(self) -> int:
        return len(self.syllables)

    @cached_property
    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.syllables)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    @cached_property
    def sort_key(self) -> tuple:
        position = self.gp.graph.position
        return tuple((position[v], x) for v, x in self.syllables)


# ============================================================
# 2️⃣ NORMAL FORM (PILE-UP + KANONİK SIRALAMA)
# ============================================================
def _pile_up(gp: GraphProduct, pile: list[Syllable], syllables: Iterable[Syllable]) -> list[Syllable]:
    """
    Heceleri sırayla yığına ekler: her hece, komşu (değişmeli) köşelerin hecelerini
    sola doğru atlar; aynı köşede bir heceye ulaşırsa birleşir (çarpım birimse ikisi silinir).
    Yığın her adımda Green-indirgenmiş kalır.
    """
    neighbours = gp.graph.neighbours
    for vertex, letter in syllables:
        vg = gp.assignment[vertex]
        if vg.is_identity(letter):
            continue
        adjacent = neighbours[vertex]
        j = len(pile) - 1
        while j >= 0 and pile[j].vertex in adjacent:
            j -= 1
        if j >= 0 and pile[j].vertex == vertex:
            merged = vg.mul(pile[j].letter, letter)
            if vg.is_identity(merged):
                del pile[j]
            else:
                pile[j] = Syllable(vertex, merged)
        else:
            pile.append(Syllable(vertex, letter))
    return pile


def _canonical(gp: GraphProduct, reduced: Sequence[Syllable]) -> SyllableKey:
    """
    İndirgenmiş dizinin sözlük sırasına göre en küçük shuffle temsilcisi.
    Her adımda başa taşınabilen heceler arasından köşe sırası en küçük olan seçilir.
    """
    position = gp.graph.position
    neighbours = gp.graph.neighbours
    remaining = list(reduced)
    result = []
    while remaining:
        best = -1
        seen: set[str] = set()
        for i, syllable in enumerate(remaining):
            if seen <= neighbours[syllable.vertex]:
                if best < 0 or position[syllable.vertex] < position[remaining[best].vertex]:
                    best = i
            seen.add(syllable.vertex)
        result.append(remaining.pop(best))
    return tuple(result)


def multiply_keys(gp: GraphProduct, left: SyllableKey, right: Iterable[Syllable]) -> SyllableKey:
    """İki kanonik anahtarın çarpımının kanonik anahtarı (BFS ve worker'lar için)."""
    return _canonical(gp, _pile_up(gp, list(left), right))


def normalize(gp: GraphProduct, word: Iterable[Sequence]) -> Element:
    """
    Hece dizisini (v, x) kanonik Element'e çevirir.

    Birim harfler sessizce atılır.

    Raises:
        GraphProductError: bilinmeyen köşe veya grupta olmayan harf.
    """
    checked = []
    for item in word:
        vertex, letter = item
        vg = gp.group(vertex)
        try:
            letter = vg.check(letter)
        except VertexGroupError as exc:
            raise GraphProductError(f"{vertex}: {exc}") from None
        checked.append(Syllable(vertex, letter))
    return Element(gp, _canonical(gp, _pile_up(gp, [], checked)))


def _same_group(a: Element, b: Element) -> GraphProduct:
    if a.gp is not b.gp:
        raise GraphProductError("farkli graph product elemanlari karistirilamaz")
    return a.gp


def multiply(a: Element, b: Element) -> Element:
    gp = _same_group(a, b)
    return Element(gp, multiply_keys(gp, a.syllables, b.syllables))


def inverse(a: Element) -> Element:
    gp = a.gp
    reversed_word = [
        Syllable(v, gp.assignment[v].inverse(x)) for v, x in reversed(a.syllables)
    ]
    return Element(gp, _canonical(gp, reversed_word))


def power(g: Element, k: int) -> Element:
    base = g if k >= 0 else inverse(g)
    result = g.gp.identity
    for _ in range(abs(k)):
        result = multiply(result, base)
    return result


def support(a: Element) -> frozenset[str]:
    return a.support


def syllable_length(a: Element) -> int:
    return a.syllable_length


def word_length(a: Element) -> int:
    return a.word_length


def keys_commute(gp: GraphProduct, a: SyllableKey, b: SyllableKey) -> bool:
    """Anahtar düzeyinde değişme testi; destekler tamamen komşuysa çarpım yapılmaz."""
    if not a or not b:
        return True
    neighbours = gp.graph.neighbours
    support_b = {v for v, _ in b}
    if all(support_b <= neighbours[v] for v, _ in a):
        return True
    return multiply_keys(gp, a, b) == multiply_keys(gp, b, a)


def commutes(a: Element, b: Element) -> bool:
    gp = _same_group(a, b)
    return keys_commute(gp, a.syllables, b.syllables)


# ============================================================
# 3️⃣ LINK VE COMPLEMENT BİLEŞENLERİ
# ============================================================
def _check_vertices(gp: GraphProduct, vertices: Iterable[str]) -> frozenset[str]:
    vertex_set = frozenset(vertices)
    unknown = vertex_set - set(gp.vertices)
    if unknown:
        raise GraphProductError(f"bilinmeyen kose(ler): {sorted(unknown)}")
    return vertex_set


def link(gp: GraphProduct, A: Iterable[str]) -> frozenset[str]:
    """link A = A'nın tüm köşelerine komşu köşeler; link(∅) = V(Γ)."""
    vertex_set = _check_vertices(gp, A)
    result = frozenset(gp.vertices)
    for v in vertex_set:
        result &= gp.graph.neighbours[v]
    return result


def complement_components(gp: GraphProduct, A: Iterable[str]) -> list[tuple[str, ...]]:
    """
    Γ(A)'nın complement grafının bağlantılı bileşenleri, kanonik köşe sırasıyla.

    Raises:
        GraphProductError: A boş ise.
    """
    vertex_set = _check_vertices(gp, A)
    if not vertex_set:
        raise GraphProductError("complement bilesenleri icin A bos olamaz")
    complement = nx.complement(gp.graph.nx_graph.subgraph(vertex_set))
    components = [gp.graph.ordered(c) for c in nx.connected_components(complement)]
    return sorted(components, key=lambda c: gp.graph.position[c[0]])


# ============================================================
# 4️⃣ CYCLIC REDUCTION VE CYCLIC NORMALIZATION
# ============================================================
def _front_indices(gp: GraphProduct, syllables: SyllableKey) -> list[int]:
    """Başa shuffle edilebilen hecelerin indisleri."""
    neighbours = gp.graph.neighbours
    seen: set[str] = set()
    result = []
    for i, (vertex, _) in enumerate(syllables):
        if seen <= neighbours[vertex]:
            result.append(i)
        seen.add(vertex)
    return result


def _back_indices(gp: GraphProduct, syllables: SyllableKey) -> list[int]:
    """Sona shuffle edilebilen hecelerin indisleri (artan sırada)."""
    neighbours = gp.graph.neighbours
    seen: set[str] = set()
    result = []
    for i in range(len(syllables) - 1, -1, -1):
        vertex = syllables[i].vertex
        if seen <= neighbours[vertex]:
            result.append(i)
        seen.add(vertex)
    return sorted(result)


def is_cyclically_normal(g: Element) -> bool:
    """
    ℓ_n(g) <= 1 ise ya da hiçbir normal formda ilk ve son hece aynı köşede değilse True.
    Başa ve sona taşınabilen heceler aynı köşede ama farklı hecelerse False.
    """
    if g.syllable_length <= 1:
        return True
    gp = g.gp
    front = {g.syllables[i].vertex: i for i in _front_indices(gp, g.syllables)}
    back = {g.syllables[i].vertex: i for i in _back_indices(gp, g.syllables)}
    return not any(v in back and back[v] != i for v, i in front.items())


def _conjugator_letters(vg: VertexGroupSpec, front_letter: int) -> list[int]:
    """Denenecek eşlenik harfler: uzundan kısaya, eşitlikte küçük id önce."""
    if vg.is_finite:
        letters = [z for z in vg.elements() if not vg.is_identity(z)]
    else:
        bound = abs(front_letter)
        letters = [k for k in range(-bound, bound + 1) if k]
    return sorted(letters, key=lambda z: (-vg.length(z), z))


def _shortening_step(g: Element) -> tuple[Element, Element] | None:
    """
    z g z^-1 uzunluğu |g| - 2|z| olan tek heceli z arar (önce küçük köşe, sonra uzun z).

    Returns:
        (z, z g z^-1) veya None (g cyclically reduced).
    """
    gp = g.gp
    position = gp.graph.position
    fronts = sorted(_front_indices(gp, g.syllables), key=lambda i: position[g.syllables[i].vertex])
    for i in fronts:
        vertex, letter = g.syllables[i]
        vg = gp.assignment[vertex]
        for z in _conjugator_letters(vg, letter):
            conjugator = Element(gp, (Syllable(vertex, z),))
            candidate = multiply(multiply(conjugator, g), inverse(conjugator))
            if candidate.word_length == g.word_length - 2 * vg.length(z):
                return conjugator, candidate
    return None


def cyclically_reduce(g: Element) -> tuple[Element, Element]:
    """
    g = p^-1 · g̃ · p ve |g| = 2|p| + |g̃| olacak şekilde (p, g̃) döner.

    Greedy: başa taşınabilen bir heceyle eşlenik alarak uzunluk her adımda 2|z| azalır;
    adım kalmayınca g̃ cyclically reduced olur. Seçimler deterministiktir.
    """
    p = g.gp.identity
    current = g
    while True:
        step = _shortening_step(current)
        if step is None:
            return p, current
        z, current = step
        p = multiply(z, p)


def cyclically_normalize(g_tilde: Element) -> tuple[Element, Element]:
    """
    Cyclically reduced g̃ için (p̃, ĝ) döner: ĝ = p̃ g̃ p̃^-1 cyclically normal,
    supp(ĝ) = supp(g̃).

    Zaten cyclically normal olan g̃ için p̃ = 1. Aksi halde p̃, sona taşınabilen
    hecelerin E(g̃) çarpımıdır; sonuç normal olana dek tekrarlanır.

    Raises:
        GraphProductError: g̃ cyclically reduced değilse veya E(g̃) aynı köşeden
            iki harf içeriyorsa.
    """
    gp = g_tilde.gp
    check, _ = cyclically_reduce(g_tilde)
    if not check.is_identity:
        raise GraphProductError(f"cyclically reduced degil: {format_element(g_tilde)}")

    p_total = gp.identity
    current = g_tilde
    for _ in range(g_tilde.syllable_length + 1):
        if is_cyclically_normal(current):
            if current.support != g_tilde.support:
                raise GraphProductError("cyclic normalization destegi degistirdi")
            return p_total, current
        tail = [current.syllables[i] for i in _back_indices(gp, current.syllables)]
        vertices = [s.vertex for s in tail]
        if len(set(vertices)) != len(vertices):
            raise GraphProductError(f"E(g~) ayni koseden iki harf iceriyor: {vertices}")
        step = Element(gp, _canonical(gp, tail))
        current = multiply(multiply(step, current), inverse(step))
        p_total = multiply(step, p_total)
    raise GraphProductError(f"cyclic normal form bulunamadi: {format_element(g_tilde)}")


# ============================================================
# 5️⃣ KELİME SÖZDİZİMİ (PARSE / FORMAT)
# ============================================================
_TOKEN = re.compile(r"^(?P<vertex>[^\s^:]+)(?:\^(?P<exp>[+-]?\d+)|:(?P<elem>\d+))?$")


def parse_word(gp: GraphProduct, text: str) -> Element:
    """
    `a^2 b^-3`, `v:4`, `u` gibi boşlukla ayrılmış heceleri okur.

    - `v`: H(v)'nin ilk üreteci
    - `v^k`: Z köşesinde üs k; sonlu köşede ilk üretecin k. kuvveti
    - `v:id`: tablo elemanı id
    - boş metin veya `1`: birim eleman
    """
    syllables = []
    for token in text.split():
        if token == "1" and "1" not in gp.graph.position:
            continue
        match = _TOKEN.match(token)
        if match is None:
            raise GraphProductError(f"gecersiz hece: {token!r}")
        vertex = match["vertex"]
        vg = gp.group(vertex)
        if match["elem"] is not None:
            if not vg.is_finite:
                raise GraphProductError(f"{vertex} bir Z kosesi; `{vertex}^k` yazin")
            letter = int(match["elem"])
        else:
            exponent = int(match["exp"]) if match["exp"] is not None else 1
            letter = vg.power(vg.first_generator, exponent)
        syllables.append((vertex, letter))
    return normalize(gp, syllables)


def format_element(g: Element) -> str:
    """Kanonik formu yazar; birim eleman `1` olarak gösterilir."""
    if g.is_identity:
        return "1"
    tokens = []
    for vertex, letter in g.syllables:
        if g.gp.assignment[vertex].is_finite:
            tokens.append(f"{vertex}:{letter}")
        elif letter == 1:
            tokens.append(vertex)
        else:
            tokens.append(f"{vertex}^{letter}")
    return " ".join(tokens)


# ============================================================
# 6️⃣ HAZIR GRUPLAR (RAAG, RACG, K_{k,k}, ÇEVRE)
# ============================================================
def create_graph_product(
    vertices: Sequence[str],
    edges: Iterable[Sequence[str]],
    groups: Mapping[str, VertexGroupSpec],
) -> GraphProduct:
    """Köşe sırası, kenarlar ve köşe grupları ile G(Γ,H) oluşturur."""
    graph = create_presentation_graph(vertices, edges)
    return GraphProduct(graph, dict(groups))


def raag(vertices: Sequence[str], edges: Iterable[Sequence[str]] = ()) -> GraphProduct:
    """Right-angled Artin grubu: tüm köşe grupları Z."""
    z = infinite_cyclic()
    return create_graph_product(vertices, edges, {v: z for v in vertices})


def racg(vertices: Sequence[str], edges: Iterable[Sequence[str]] = ()) -> GraphProduct:
    """Right-angled Coxeter grubu: tüm köşe grupları C_2."""
    c2 = cyclic_group(2)
    return create_graph_product(vertices, edges, {v: c2 for v in vertices})


def complete_bipartite_raag(k: int) -> GraphProduct:
    """K_{k,k} üzerindeki RAAG (= F_k × F_k); parçalar u1..uk ve v1..vk."""
    left = [f"u{i}" for i in range(1, k + 1)]
    right = [f"v{i}" for i in range(1, k + 1)]
    return raag(left + right, [(u, v) for u in left for v in right])


def cycle_racg(m: int) -> GraphProduct:
    """m-gon üzerindeki RACG; m = 5 beşgen (pentagon) grubudur."""
    vertices = [f"s{i}" for i in range(m)]
    return racg(vertices, [(vertices[i], vertices[(i + 1) % m]) for i in range(m)])
