"""
Merkezleyici Modülü (Centraliser Module)

Bu modül, graph product içinde C_G(g̃) = H_1 × ... × H_k × G_{link A} ayrışımını
yapısal olarak hesaplar (A = supp(g̃)) ve sonucu kaba kuvvet (brute force) ile doğrular.

Özellikler:
- centraliser_structure: cyclic reduction + cyclic normalization + complement bileşenleri
- primitive_root: köşe başına hece sayılarının bölenleri üzerinden kök arama, üs alarak doğrulama
- centraliser_ball_count: faktör uzunluk dağılımlarının konvolüsyonu (kesin sayım)
- expand_centraliser / brute_force_centraliser: küme eşitliği için oracle
- small_centraliser_bounds_audit, conjugate_bound_audit, spot_check
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Sequence

from src.enumeration import BallIndex, embed, enumerate_ball, special_subgroup, sphere_sizes
from src.graph_product import (
    Element,
    GraphProduct,
    GraphProductError,
    commutes,
    complement_components,
    cyclically_normalize,
    cyclically_reduce,
    inverse,
    is_cyclically_normal,
    link,
    multiply,
    normalize,
    power,
)
from src.series import convolve_spheres
from src.vertex_groups import AuditResult, rational_pair_parameters, vg_centraliser

logger = logging.getLogger(__name__)


class CentraliserError(ValueError):
    """Birim eleman girdisi veya kök çıkarma hatası."""


# ============================================================
# 1️⃣ TİPLER
# ============================================================
@dataclass(frozen=True)
class FiniteFactor:
    """Tekil bileşen {v}, sonlu H(v): C_{H(v)}(g̃_i), eşlenik alınmış elemanlarıyla."""

    vertex: str
    members: tuple[Element, ...]
    component: tuple[str, ...]


@dataclass(frozen=True)
class CyclicFactor:
    """
    ⟨generator⟩; generator = p_i^-1 h_i p_i ve ĝ_i = h_i^exponent.

    primitive: üreteç başka bir elemanın kuvveti değil.
    """

    generator: Element
    exponent: int
    component: tuple[str, ...]
    primitive: bool = True


Factor = FiniteFactor | CyclicFactor


@dataclass(frozen=True)
class CentraliserDescription:
    element: Element
    conjugator: Element
    tilde: Element
    normal_conjugator: Element
    normal: Element
    components: tuple[tuple[str, ...], ...]
    factors: tuple[Factor, ...]
    link: tuple[str, ...]


# ============================================================
# 2️⃣ YAPISAL HESAP
# ============================================================
def _project(g: Element, vertices: Sequence[str]) -> Element:
    keep = set(vertices)
    return normalize(g.gp, [s for s in g.syllables if s.vertex in keep])


def primitive_root(g_hat: Element) -> tuple[Element, int]:
    """
    ĝ = h^β olacak şekilde β'sı en büyük (h, β).

    Aday h, her v köşesindeki ilk k_v/β hecedir (k_v: ĝ'deki v heceleri);
    aday üs alınarak doğrulanır.

    Raises:
        CentraliserError: destek < 2, ĝ cyclically normal değil veya kök bulunamadı.
    """
    gp = g_hat.gp
    if len(g_hat.support) < 2:
        raise CentraliserError("primitive_root en az iki koseli destek ister")
    if not is_cyclically_normal(g_hat):
        raise CentraliserError(f"cyclically normal degil: {g_hat}")
    if len(complement_components(gp, g_hat.support)) != 1:
        raise CentraliserError("destegin complement grafi bagli olmali")

    counts: dict[str, int] = {}
    for vertex, _ in g_hat.syllables:
        counts[vertex] = counts.get(vertex, 0) + 1
    period = 0
    for k in counts.values():
        period = gcd(period, k)

    for beta in sorted((d for d in range(1, period + 1) if period % d == 0), reverse=True):
        quota = {v: k // beta for v, k in counts.items()}
        taken = dict.fromkeys(counts, 0)
        prefix = []
        for syllable in g_hat.syllables:
            if taken[syllable.vertex] < quota[syllable.vertex]:
                taken[syllable.vertex] += 1
                prefix.append(syllable)
        h = normalize(gp, prefix)
        if power(h, beta) == g_hat:
            return h, beta
    raise CentraliserError(f"kok cikarilamadi: {g_hat}")


def centraliser_structure(gp: GraphProduct, g: Element) -> CentraliserDescription:
    """
    C_G(g̃) ayrışımı.

    Adımlar:
        1. g = p^-1 g̃ p (cyclically_reduce), ĝ = p̃ g̃ p̃^-1 (cyclically_normalize)
        2. A = supp(g̃) complement bileşenlerine A_1..A_k ayrılır; ĝ = ĝ_1 ⋯ ĝ_k
        3. tekil Z bileşeni -> CyclicFactor(v); tekil sonlu -> FiniteFactor
           |A_i| >= 2 -> CyclicFactor(p_i^-1 h_i p_i), ĝ_i = h_i^β
        4. link part = link(A)

    Raises:
        CentraliserError: g birim ise veya bir faktör g̃ ile değişmiyorsa.
    """
    if g.gp is not gp:
        raise GraphProductError("eleman bu graph product'a ait degil")
    if g.is_identity:
        raise CentraliserError("birim elemanin merkezleyicisi tum gruptur")

    p, g_tilde = cyclically_reduce(g)
    p_norm, g_hat = cyclically_normalize(g_tilde)
    components = complement_components(gp, g_tilde.support)

    factors: list[Factor] = []
    for component in components:
        g_hat_i = _project(g_hat, component)
        p_i = _project(p_norm, component)
        p_i_inv = inverse(p_i)

        def conjugate(x: Element) -> Element:
            return multiply(multiply(p_i_inv, x), p_i)

        if len(component) == 1:
            vertex = component[0]
            vg = gp.group(vertex)
            letter = g_hat_i.syllables[0].letter
            if not vg.is_finite:
                factors.append(CyclicFactor(gp.vertex_element(vertex, 1), abs(letter), component))
                continue
            cent = vg_centraliser(vg, letter)
            members = sorted(
                (conjugate(gp.vertex_element(vertex, c)) for c in cent.members),
                key=lambda x: (x.word_length, x.sort_key),
            )
            factors.append(FiniteFactor(vertex, tuple(members), component))
        else:
            h, beta = primitive_root(g_hat_i)
            root_is_primitive = primitive_root(h)[1] == 1
            factors.append(CyclicFactor(conjugate(h), beta, component, root_is_primitive))

    for factor in factors:
        members = (factor.generator,) if isinstance(factor, CyclicFactor) else factor.members
        for x in members:
            if not commutes(x, g_tilde):
                raise CentraliserError(f"faktor elemani g~ ile degismiyor: {x}")

    desc = CentraliserDescription(
        element=g,
        conjugator=p,
        tilde=g_tilde,
        normal_conjugator=p_norm,
        normal=g_hat,
        components=tuple(components),
        factors=tuple(factors),
        link=gp.graph.ordered(link(gp, g_tilde.support)),
    )
    logger.debug("C(%s): %d faktor, link=%s", g_tilde, len(factors), desc.link)
    return desc


# ============================================================
# 3️⃣ SAYIMLAR
# ============================================================
def _cyclic_lengths(generator: Element, n: int) -> list[int]:
    """⟨generator⟩ küre boyutları 0..n; üsler iki yönde uzunluk n'yi aşana dek yürür."""
    spheres = [0] * (n + 1)
    spheres[0] = 1
    for base in (generator, inverse(generator)):
        current = base
        while current.word_length <= n:
            spheres[current.word_length] += 1
            current = multiply(current, base)
    return spheres


def factor_sphere_sizes(factor: Factor, n: int) -> list[int]:
    if isinstance(factor, CyclicFactor):
        return _cyclic_lengths(factor.generator, n)
    spheres = [0] * (n + 1)
    for x in factor.members:
        if x.word_length <= n:
            spheres[x.word_length] += 1
    return spheres


@lru_cache(maxsize=64)
def _link_spheres(gp: GraphProduct, link_part: tuple[str, ...], n: int) -> tuple[int, ...]:
    return tuple(sphere_sizes(special_subgroup(gp, link_part), n))


def centraliser_sphere_sizes(desc: CentraliserDescription, gp: GraphProduct, n: int) -> list[int]:
    """|C_G(g̃) ∩ S(d)|, d = 0..n: faktörler ve link part'ın uzunluk dağılımlarının konvolüsyonu."""
    total = list(_link_spheres(gp, desc.link, n))
    for factor in desc.factors:
        total = convolve_spheres(total, factor_sphere_sizes(factor, n))
    return total


def centraliser_ball_count(desc: CentraliserDescription, gp: GraphProduct, n: int) -> int:
    """|C_G(g̃) ∩ B(n)| (kesin)."""
    return sum(centraliser_sphere_sizes(desc, gp, n))


def brute_force_centraliser(gp: GraphProduct, g: Element, n: int, index: BallIndex | None = None) -> set[Element]:
    """{x ∈ B(n) : xg = gx}, top üzerinde kapsamlı kontrol."""
    if index is None or index.radius < n:
        index = enumerate_ball(gp, n)
    return {x for x in index.elements(n) if commutes(x, g)}


def _factor_elements(factor: Factor, n: int) -> list[Element]:
    if isinstance(factor, FiniteFactor):
        return [x for x in factor.members if x.word_length <= n]
    gp = factor.generator.gp
    out = [gp.identity]
    for base in (factor.generator, inverse(factor.generator)):
        current = base
        while current.word_length <= n:
            out.append(current)
            current = multiply(current, base)
    return out


def expand_centraliser(desc: CentraliserDescription, gp: GraphProduct, n: int) -> set[Element]:
    """
    C_G(g̃) ∩ B(n) elemanlarını faktörlerin çarpımı olarak üretir.

    Uzunluk toplanırlığına göre kısmi çarpımlar budanır; sonuç gerçek uzunlukla süzülür.
    """
    link_group = special_subgroup(gp, desc.link)
    partial = [(embed(x, gp), x.word_length) for x in enumerate_ball(link_group, n).elements()]
    for factor in desc.factors:
        pieces = _factor_elements(factor, n)
        partial = [
            (multiply(x, y), lx + y.word_length)
            for x, lx in partial
            for y in pieces
            if lx + y.word_length <= n
        ]
    return {x for x, _ in partial if x.word_length <= n}


# ============================================================
# 4️⃣ DENETİMLER
# ============================================================
def audit_factor_counts(counts: Sequence[int], P: int, beta: int) -> AuditResult:
    """
    counts[n] <= P·n^β, 1 <= n < len(counts).

    Returns:
        AuditResult: ilk ihlalde (n, sayım, sınır).
    """
    for n in range(1, len(counts)):
        bound = P * n**beta
        if counts[n] > bound:
            return AuditResult(False, (n, counts[n], bound))
    return AuditResult(True)


def small_centraliser_bounds_audit(desc: CentraliserDescription, gp: GraphProduct, N: int) -> AuditResult:
    """
    CyclicFactor için |H_i ∩ B(n)| <= 3n; FiniteFactor için <= P·n^β (köşe grubunun parametreleri).

    Returns:
        AuditResult: ihlalde (faktör indeksi, n, sayım, sınır).
    """
    if N < 1:
        raise CentraliserError("N en az 1 olmali")
    for i, factor in enumerate(desc.factors):
        spheres = factor_sphere_sizes(factor, N)
        balls = [sum(spheres[: d + 1]) for d in range(N + 1)]
        if isinstance(factor, CyclicFactor):
            P, beta = 3, 1
        else:
            P, beta = rational_pair_parameters(gp.group(factor.vertex))
        result = audit_factor_counts(balls, P, beta)
        if not result.passed:
            return AuditResult(False, (i, *result.witness))
    return AuditResult(True)


@dataclass(frozen=True)
class ConjugateBound:
    passed: bool
    left: int
    right: int
    shift: int


def conjugate_bound_audit(gp: GraphProduct, g: Element, n: int, index: BallIndex | None = None) -> ConjugateBound:
    """|C_G(g) ∩ B(n)| <= |C_G(g̃) ∩ B(n + 2s)|, s = |p_g|."""
    desc = centraliser_structure(gp, g)
    s = desc.conjugator.word_length
    left = len(brute_force_centraliser(gp, g, n, index))
    right = centraliser_ball_count(desc, gp, n + 2 * s)
    return ConjugateBound(left <= right, left, right, s)


def spot_check(
    desc: CentraliserDescription,
    gp: GraphProduct,
    n: int,
    rng: random.Random,
    samples: int = 16,
) -> AuditResult:
    """
    Rastgele faktör demetleri seçer; çarpımın g̃ ile değiştiğini ve uzunlukların
    toplandığını kontrol eder.

    Returns:
        AuditResult: ihlalde ihlal eden demetin kelimeleri.
    """
    link_elements = list(enumerate_ball(special_subgroup(gp, desc.link), n).elements())
    pools = [_factor_elements(f, n) for f in desc.factors]
    for _ in range(samples):
        picks = [rng.choice(pool) for pool in pools]
        picks.append(embed(rng.choice(link_elements), gp))
        product = gp.identity
        for x in picks:
            product = multiply(product, x)
        if not commutes(product, desc.tilde) or product.word_length != sum(x.word_length for x in picks):
            return AuditResult(False, tuple(str(x) for x in picks))
    return AuditResult(True)
