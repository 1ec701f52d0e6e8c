"""
Seri Analizi Modülü (Series Analysis Module)

Bu modül, tam sayı dizilerinden kesin rasyonel üreteç fonksiyonu çıkarır ve
büyüme serisinin asimptotik profilini hesaplar.

Özellikler:
- find_recurrence: ℚ üzerinde kesin Berlekamp–Massey, tüm terimlerde doğrulama
- asymptotic_profile: baskın modül λ, derece α, b_{i,j} katsayıları ve c_n örnekleri
  (doğrusal/karesel çarpanlar sympy ile kesin, kalanlar numpy ile sayısal)
- theorem1_audit, c_sequence_check, density_gap
- convolve_spheres ve product_growth_check (H × K büyüme ikilemi, mpmath polylog sınırı)
- Örnek diziler: example_series (c_n döngüsü 0,2,6,8,6,2) ve digit_sum_sequence
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np
import sympy

logger = logging.getLogger(__name__)

_x = sympy.Symbol("x")

Number = int | Fraction


class SeriesError(ValueError):
    """Kısa dizi, geçersiz rasyonel fonksiyon veya uygulanamayan analiz."""


class RootSeparationError(SeriesError):
    """Kök modülleri tolerans içinde ayrıştırılamadı."""


class EmptyDensityWindow(SeriesError):
    """E_δ örnek penceresinde boş."""


# ============================================================
# 1️⃣ RASYONEL FONKSİYON (p/q)
# ============================================================
@dataclass(frozen=True)
class RationalFunctionSeries:
    """
    p(t)/q(t), katsayılar düşükten yükseğe kesin kesir olarak.

    Normalizasyon: q(0) = 1 ve gcd(p, q) = 1.
    """

    numerator: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...]

    @property
    def degree_p(self) -> int:
        return len(self.numerator) - 1

    @property
    def degree_q(self) -> int:
        return len(self.denominator) - 1

    @property
    def order(self) -> int:
        """Doğrusal karmaşıklık L = max(deg q, deg p + 1)."""
        return max(self.degree_q, self.degree_p + 1)

    @property
    def is_polynomial(self) -> bool:
        return self.degree_q == 0


def _trim(coeffs: Sequence[Fraction]) -> list[Fraction]:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out or [Fraction(0)]


def _to_poly(coeffs: Sequence[Fraction]) -> sympy.Poly:
    high_to_low = [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)]
    return sympy.Poly(high_to_low, _x, domain=sympy.QQ)


def _from_poly(poly: sympy.Poly) -> list[Fraction]:
    return [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]


def create_rational_function(p: Sequence[Number], q: Sequence[Number]) -> RationalFunctionSeries:
    """
    p/q'yu sadeleştirir (ℚ üzerinde gcd) ve q(0) = 1 olacak şekilde ölçekler.

    Raises:
        SeriesError: q(0) = 0 ise.
    """
    p_frac = _trim([Fraction(c) for c in p])
    q_frac = _trim([Fraction(c) for c in q])
    if q_frac[0] == 0:
        raise SeriesError("payda q(0) = 0 olamaz")

    P, Q = _to_poly(p_frac), _to_poly(q_frac)
    G = P.gcd(Q)
    if G.degree() > 0:
        logger.debug("Ortak carpan sadelestirildi: %s", G.as_expr())
        P, Q = P.exquo(G), Q.exquo(G)
    p_frac = _trim(_from_poly(P))
    q_frac = _trim(_from_poly(Q))

    scale = q_frac[0]
    return RationalFunctionSeries(
        tuple(c / scale for c in p_frac),
        tuple(c / scale for c in q_frac),
    )


def _as_number(value: Fraction) -> Number:
    return value.numerator if value.denominator == 1 else value


def expand(rf: RationalFunctionSeries, N: int) -> list[Number]:
    """
    İlk N+1 kuvvet serisi katsayısı: a_n = p_n − Σ_{i>=1} q_i a_{n−i} (q_0 = 1).
    Tam sayı olan katsayılar int olarak döner.
    """
    q = rf.denominator
    out: list[Fraction] = []
    for n in range(N + 1):
        value = rf.numerator[n] if n < len(rf.numerator) else Fraction(0)
        for i in range(1, min(n, rf.degree_q) + 1):
            value -= q[i] * out[n - i]
        out.append(value)
    return [_as_number(v) for v in out]


# ============================================================
# 2️⃣ RECURRENCE BULMA (BERLEKAMP–MASSEY, ℚ ÜZERİNDE)
# ============================================================
def _berlekamp_massey(seq: Sequence[Fraction]) -> tuple[int, list[Fraction]]:
    """
    En kısa bağlantı polinomu C (C_0 = 1): n >= L için Σ_{i<=L} C_i a_{n−i} = 0.

    Returns:
        (L, C) ve len(C) == L + 1
    """
    current = [Fraction(1)]
    previous = [Fraction(1)]
    L = 0
    shift = 1
    last_discrepancy = Fraction(1)

    for n in range(len(seq)):
        discrepancy = seq[n]
        for i in range(1, min(L, len(current) - 1) + 1):
            discrepancy += current[i] * seq[n - i]
        if discrepancy == 0:
            shift += 1
            continue

        factor = discrepancy / last_discrepancy
        updated = current + [Fraction(0)] * max(0, len(previous) + shift - len(current))
        for i, c in enumerate(previous):
            updated[i + shift] -= factor * c

        if 2 * L <= n:
            previous, last_discrepancy = current, discrepancy
            L = n + 1 - L
            shift = 1
        else:
            shift += 1
        current = updated

    current = current + [Fraction(0)] * max(0, L + 1 - len(current))
    return L, current[: L + 1]


def find_recurrence(
    seq: Sequence[int],
    max_order: int = 12,
    confirm_terms: int = 4,
) -> RationalFunctionSeries | None:
    """
    Tüm terimlerde geçerli en düşük dereceli sabit katsayılı recurrence'ı p/q olarak döner.

    Args:
        seq: a_0, a_1, ... tam sayı dizisi
        max_order: izin verilen en büyük doğrusal karmaşıklık
        confirm_terms: 2·max_order üzerinde istenen ek doğrulama terimi

    Returns:
        RationalFunctionSeries veya None (max_order içinde recurrence yok)

    Raises:
        SeriesError: len(seq) < 2·max_order + confirm_terms
    """
    needed = 2 * max_order + confirm_terms
    if len(seq) < needed:
        raise SeriesError(f"dizi cok kisa: {len(seq)} terim, max_order={max_order} icin {needed} gerekli")

    terms = [Fraction(a) for a in seq]
    L, connection = _berlekamp_massey(terms)
    if L > max_order:
        logger.info("Recurrence bulunamadi (dogrusal karmasiklik %d > %d)", L, max_order)
        return None

    product = [Fraction(0)] * L
    for i in range(L):
        for j in range(i + 1):
            product[i] += terms[j] * connection[i - j]
    rf = create_rational_function(product or [Fraction(0)], connection)

    if expand(rf, len(seq) - 1) != [_as_number(t) for t in terms]:
        raise SeriesError("bulunan recurrence tum terimleri uretmiyor")
    logger.info("Recurrence bulundu: derece L=%d (deg p=%d, deg q=%d)", L, rf.degree_p, rf.degree_q)
    return rf


# ============================================================
# 3️⃣ ASİMPTOTİK PROFİL
# ============================================================
@dataclass(frozen=True)
class ReciprocalRoot:
    """q(t) = Π (1 − λ_i t)^{m_i} içindeki λ_i; exact None ise sayısal köktür."""

    value: complex
    multiplicity: int
    exact: sympy.Expr | None = None

    @property
    def modulus(self) -> float:
        return abs(self.value)

    @property
    def degree(self) -> int:
        return self.multiplicity - 1


@dataclass(frozen=True)
class PartialFractionTerm:
    """b_{i,j}: a_n içindeki b · n^j · λ_i^n terimi."""

    root: int
    power: int
    value: complex
    exact: sympy.Expr | None = None


@dataclass
class AsymptoticProfile:
    """
    Kısmi kesir ayrışımı ve C_emp/D_emp penceresi.

    dominant: |λ_i| = λ olan köklerin indeksleri; start: ayrışımın geçerli olduğu ilk n.
    """

    roots: list[ReciprocalRoot]
    dominant: tuple[int, ...]
    dominant_modulus: float
    dominant_modulus_exact: sympy.Expr | None
    dominant_degree: int
    coefficients: list[PartialFractionTerm]
    start: int
    horizon: int
    c_samples: list = field(default_factory=list)
    c_emp: Number | float = 0
    d_emp: Number | float = 0

    @property
    def exact(self) -> bool:
        return self.dominant_modulus_exact is not None and all(t.exact is not None for t in self.coefficients)

    def leading_terms(self) -> list[PartialFractionTerm]:
        """b_{j,α}: baskın köklerin en yüksek n^α katsayıları."""
        return [t for t in self.coefficients if t.power == self.dominant_degree and t.root in self.dominant]

    def c_sequence(self, N: int) -> list:
        """
        c_n = Σ b_{j,α} (λ_j/λ)^n, n = 0..N. Kesin profilde sympy ifadeleri, aksi halde complex.
        """
        terms = self.leading_terms()
        if self.exact:
            units = [sympy.simplify(self.roots[t.root].exact / self.dominant_modulus_exact) for t in terms]
            powers = [sympy.Integer(1)] * len(terms)
            out = []
            for _ in range(N + 1):
                out.append(sympy.expand(sum((t.exact * p for t, p in zip(terms, powers)), sympy.Integer(0))))
                powers = [sympy.expand(p * u) for p, u in zip(powers, units)]
            return out
        units = [self.roots[t.root].value / self.dominant_modulus for t in terms]
        return [sum(t.value * u**n for t, u in zip(terms, units)) for n in range(N + 1)]

    def real_c_samples(self) -> list:
        """c_n gerçek kısımları: kesin rasyonel ise Fraction, aksi halde float."""
        return [_real_part(c) for c in self.c_samples]

    def c_parts(self) -> list[tuple]:
        """Rapor tablosu için (re, im) çiftleri."""
        return [(_real_part(c), _imag_part(c)) for c in self.c_samples]


def _real_part(value) -> Fraction | float:
    if isinstance(value, sympy.Expr):
        real = sympy.re(value)
        if real.is_Rational:
            return Fraction(int(real.p), int(real.q))
        return float(real)
    return float(complex(value).real)


def _imag_part(value) -> Fraction | float:
    if isinstance(value, sympy.Expr):
        imag = sympy.simplify(sympy.im(value))
        if imag.is_Rational:
            return Fraction(int(imag.p), int(imag.q))
        return float(imag)
    return float(complex(value).imag)


def _polish(coeffs: np.ndarray, z: complex, tolerance: float) -> complex:
    """Newton adımlarıyla sayısal kökü iyileştirir."""
    derivative = np.polyder(coeffs)
    for _ in range(50):
        slope = np.polyval(derivative, z)
        if slope == 0:
            break
        step = np.polyval(coeffs, z) / slope
        z -= step
        if abs(step) <= tolerance * max(1.0, abs(z)):
            break
    return complex(z)


def _reciprocal_roots(rf: RationalFunctionSeries, root_tolerance: float) -> list[ReciprocalRoot]:
    """q'nun ters köklerini bulur: x^d q(1/x) polinomunun kökleri."""
    reversed_q = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in rf.denominator], _x, domain=sympy.QQ
    )
    _, factors = reversed_q.factor_list()
    found: list[ReciprocalRoot] = []
    for factor, multiplicity in factors:
        if factor.degree() <= 2:
            for root in sympy.roots(factor):
                found.append(ReciprocalRoot(complex(root.evalf(30)), multiplicity, root))
        else:
            coeffs = np.array([float(c) for c in factor.all_coeffs()])
            with np.errstate(all="ignore"):
                numeric = [_polish(coeffs, z, root_tolerance) for z in np.roots(coeffs)]
            found.extend(ReciprocalRoot(z, multiplicity) for z in numeric)
            logger.debug("Derece %d carpan sayisal olarak cozuldu", factor.degree())
    return sorted(found, key=lambda r: (-r.modulus, -r.value.real, -r.value.imag))


def _solve_coefficients(
    roots: list[ReciprocalRoot], values: list[Number], start: int
) -> list[PartialFractionTerm]:
    """a_n = Σ b_{i,j} n^j λ_i^n sistemini n = start..start+D−1 satırlarıyla çözer."""
    unknowns = [(i, j) for i, r in enumerate(roots) for j in range(r.multiplicity)]
    rows = range(start, start + len(unknowns))

    if all(r.exact is not None for r in roots):
        matrix = sympy.Matrix([[sympy.Integer(n) ** j * roots[i].exact ** n for i, j in unknowns] for n in rows])
        rhs = sympy.Matrix([sympy.Rational(values[n].numerator, values[n].denominator)
                            if isinstance(values[n], Fraction) else sympy.Integer(values[n]) for n in rows])
        solution = matrix.LUsolve(rhs)
        terms = []
        for (i, j), b in zip(unknowns, solution):
            b = sympy.simplify(sympy.radsimp(sympy.simplify(b)))
            terms.append(PartialFractionTerm(i, j, complex(b.evalf(30)), b))
        return terms

    matrix = np.array([[float(n) ** j * roots[i].value ** n for i, j in unknowns] for n in rows], dtype=complex)
    rhs = np.array([float(values[n]) for n in rows], dtype=complex)
    with np.errstate(all="ignore"):
        solution = np.linalg.solve(matrix, rhs)
    return [PartialFractionTerm(i, j, complex(b)) for (i, j), b in zip(unknowns, solution)]


def _ratios(seq: Sequence[Number], alpha: int, modulus, horizon: int) -> list:
    """a_n / (n^α λ^n), n = 1..horizon; λ rasyonelse kesin kesir."""
    if isinstance(modulus, Fraction):
        return [Fraction(seq[n]) / (Fraction(n) ** alpha * modulus**n) for n in range(1, horizon + 1)]
    return [float(seq[n]) / (float(n) ** alpha * float(modulus) ** n) for n in range(1, horizon + 1)]


def _modulus_value(profile_modulus_exact, modulus: float):
    if profile_modulus_exact is not None and profile_modulus_exact.is_Rational:
        return Fraction(int(profile_modulus_exact.p), int(profile_modulus_exact.q))
    return modulus


def asymptotic_profile(
    rf: RationalFunctionSeries,
    sample_horizon: int,
    grouping_tolerance: float = 1e-8,
    root_tolerance: float = 1e-12,
    separation_tolerance: float = 1e-6,
) -> AsymptoticProfile:
    """
    𝔖(n) = Σ_i Σ_{j<=α_i} b_{i,j} n^j λ_i^n ayrışımını ve C_emp/D_emp penceresini hesaplar.

    Args:
        rf: normalize edilmiş rasyonel fonksiyon (q sabit olmamalı)
        sample_horizon: c_n, C_emp ve D_emp için n = 1..H penceresi
        grouping_tolerance: aynı modül kabul edilen göreli fark
        separation_tolerance: bundan küçük ama gruplama toleransından büyük fark hatadır

    Raises:
        SeriesError: q sabit ise (sonlu grup, polinom seri)
        RootSeparationError: modüller ayrıştırılamazsa
    """
    if rf.is_polynomial:
        raise SeriesError("payda sabit: seri bir polinom (sonlu grup), asimptotik profil yok")

    roots = _reciprocal_roots(rf, root_tolerance)
    all_exact = all(r.exact is not None for r in roots)
    modulus = roots[0].modulus

    if all_exact:
        exact_moduli = [sympy.simplify(sympy.Abs(r.exact)) for r in roots]
        modulus_exact = max(exact_moduli, key=lambda m: float(m))
        dominant = [i for i, m in enumerate(exact_moduli) if sympy.simplify(m - modulus_exact) == 0]
    else:
        modulus_exact = None
        dominant = []
        for i, r in enumerate(roots):
            gap = (modulus - r.modulus) / modulus
            if gap <= grouping_tolerance:
                dominant.append(i)
            elif gap <= separation_tolerance:
                raise RootSeparationError(
                    f"kok modulleri ayristirilamadi: |λ|={modulus:.15g} ve {r.modulus:.15g}"
                )
    alpha = max(roots[i].degree for i in dominant)

    start = max(0, rf.degree_p - rf.degree_q + 1)
    values = expand(rf, max(sample_horizon, start + rf.degree_q) + 1)
    coefficients = _solve_coefficients(roots, values, start)

    profile = AsymptoticProfile(
        roots=roots,
        dominant=tuple(dominant),
        dominant_modulus=float(modulus_exact.evalf(30)) if modulus_exact is not None else modulus,
        dominant_modulus_exact=modulus_exact,
        dominant_degree=alpha,
        coefficients=coefficients,
        start=start,
        horizon=sample_horizon,
    )
    profile.c_samples = profile.c_sequence(sample_horizon)
    if sample_horizon >= 1:
        ratios = _ratios(values, alpha, _modulus_value(modulus_exact, profile.dominant_modulus), sample_horizon)
        profile.c_emp, profile.d_emp = min(ratios), max(ratios)
    logger.info(
        "Profil: λ=%.12g, α=%d, %d kok (%s)",
        profile.dominant_modulus, alpha, len(roots), "kesin" if profile.exact else "sayisal",
    )
    return profile


def ball_alpha(profile: AsymptoticProfile, tolerance: float = 1e-9) -> int:
    """Top serisi için α kayması: λ = 1 ise α + 1, aksi halde α."""
    if profile.dominant_modulus_exact is not None:
        is_one = profile.dominant_modulus_exact == 1
    else:
        is_one = abs(profile.dominant_modulus - 1) <= tolerance
    return profile.dominant_degree + 1 if is_one else profile.dominant_degree


# ============================================================
# 4️⃣ DENETİMLER (BÜYÜME KARARI, c_n, YOĞUNLUK)
# ============================================================
class GrowthVerdict(str, Enum):
    BOUNDED_POSITIVE = "bounded-positive"
    LIMINF_ZERO = "liminf-zero"
    UNBOUNDED = "unbounded"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Theorem1Result:
    verdict: GrowthVerdict
    c_emp: Number | float | None = None
    d_emp: Number | float | None = None


def _envelope(profile: AsymptoticProfile, n: int) -> float:
    """Σ |b_{i,j}| n^{j−α} (|λ_i|/λ)^n: oran için kısmi kesir üst sınırı."""
    total = 0.0
    for t in profile.coefficients:
        ratio = profile.roots[t.root].modulus / profile.dominant_modulus
        total += abs(t.value) * float(n) ** (t.power - profile.dominant_degree) * ratio**n
    return total


def theorem1_audit(
    seq: Sequence[int],
    profile: AsymptoticProfile | None,
    tolerance: float = 1e-9,
) -> Theorem1Result:
    """
    a_n/(n^α λ^n) oranının pozitif ve sınırlı bir pencerede kalıp kalmadığını raporlar.

    - profil yok -> not-applicable
    - oran kısmi kesir zarfını aşarsa -> unbounded
    - min Re c_n <= tol -> liminf-zero
    - aksi halde -> bounded-positive
    """
    if profile is None:
        return Theorem1Result(GrowthVerdict.NOT_APPLICABLE)

    horizon = len(seq) - 1
    modulus = _modulus_value(profile.dominant_modulus_exact, profile.dominant_modulus)
    ratios = _ratios(seq, profile.dominant_degree, modulus, horizon)
    c_emp, d_emp = (min(ratios), max(ratios)) if ratios else (None, None)

    for n in range(max(1, profile.start), horizon + 1):
        bound = _envelope(profile, n)
        if float(ratios[n - 1]) > bound * (1 + tolerance) + tolerance:
            logger.warning("Oran zarfi asti: n=%d", n)
            return Theorem1Result(GrowthVerdict.UNBOUNDED, c_emp, d_emp)

    reals = profile.real_c_samples()
    if reals and min(float(c) for c in reals) <= tolerance:
        return Theorem1Result(GrowthVerdict.LIMINF_ZERO, c_emp, d_emp)
    return Theorem1Result(GrowthVerdict.BOUNDED_POSITIVE, c_emp, d_emp)


@dataclass(frozen=True)
class CSequenceCheck:
    passed: bool
    max_imag: Fraction | float
    min_real: Fraction | float


def c_sequence_check(profile: AsymptoticProfile, N: int, tol: float = 1e-9) -> CSequenceCheck:
    """
    0 <= n <= N için |Im c_n| <= tol ve Re c_n >= −tol. Kesin profilde tol = 0 kullanılır.
    """
    values = profile.c_sequence(N)
    reals = [_real_part(c) for c in values]
    imags = [abs(_imag_part(c)) for c in values]
    limit = 0 if profile.exact else tol
    max_imag, min_real = max(imags), min(reals)
    return CSequenceCheck(max_imag <= limit and min_real >= -limit, max_imag, min_real)


@dataclass(frozen=True)
class DensityGap:
    members: tuple[int, ...]
    max_gap: int
    lead_in: int


def density_gap(c_samples: Sequence, delta) -> DensityGap:
    """
    E_δ = {n : c_n >= δ} üyeleri arasındaki en büyük aralık; ilk üyeye kadarki boşluk lead_in.

    Raises:
        EmptyDensityWindow: pencerede üye yoksa.
    """
    if not c_samples:
        raise SeriesError("c_n ornekleri bos")
    members = tuple(n for n, c in enumerate(c_samples) if c >= delta)
    if not members:
        raise EmptyDensityWindow(f"E_δ bos (δ={delta}, pencere 0..{len(c_samples) - 1})")
    gaps = [b - a for a, b in zip(members, members[1:])]
    return DensityGap(members, max(gaps, default=0), members[0])


# ============================================================
# 5️⃣ ÇARPIM BÜYÜMESİ (H × K)
# ============================================================
def convolve_spheres(seqH: Sequence[Number], seqK: Sequence[Number]) -> list[Number]:
    """Σ_i H(n−i)·K(i): uzunluk toplanırlığı altında H × K küre boyutları."""
    if len(seqH) != len(seqK):
        raise SeriesError(f"dizi uzunluklari esit olmali: {len(seqH)} != {len(seqK)}")
    return [sum(seqH[n - i] * seqK[i] for i in range(n + 1)) for n in range(len(seqH))]


class ProductGrowthVerdict(str, Enum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ProductGrowthResult:
    verdict: ProductGrowthVerdict
    ratios: tuple
    bound: float | None = None
    d_tilde: Number | float | None = None


def product_growth_check(
    seqH: Sequence[int],
    seqK: Sequence[int],
    profileH: AsymptoticProfile,
    profileK: AsymptoticProfile,
    grouping_tolerance: float = 1e-8,
    tolerance: float = 1e-9,
) -> ProductGrowthResult:
    """
    H ⊛ K küre dizisinin n^{α_H} λ_H^n ile ölçeklenmiş oranını inceler.

    - λ_H > λ_K: oran D_H + max(D_H,1)·D_K·Li_{−α_K}(λ_K/λ_H) ile sınırlı olmalı
    - λ_H = λ_K: oran, C²·2^{−(α_H+2)}·n^{α_K/2+1} alt sınır şeklini takip etmeli (sınırsız)

    Raises:
        SeriesError: λ_H < λ_K (argümanlar sıralanmalı)
    """
    lam_h, lam_k = profileH.dominant_modulus, profileK.dominant_modulus
    relative = (lam_h - lam_k) / lam_h
    if relative < -grouping_tolerance:
        raise SeriesError(f"λ_H < λ_K ({lam_h:.12g} < {lam_k:.12g}); argumanlari siralayin")

    conv = convolve_spheres(seqH, seqK)
    modulus = _modulus_value(profileH.dominant_modulus_exact, lam_h)
    ratios = tuple(_ratios(conv, profileH.dominant_degree, modulus, len(conv) - 1))
    if not ratios:
        return ProductGrowthResult(ProductGrowthVerdict.INCONCLUSIVE, ratios)

    if relative > grouping_tolerance:
        d_h, d_k = float(profileH.d_emp), float(profileK.d_emp)
        series = float(mpmath.polylog(-profileK.dominant_degree, lam_k / lam_h))
        bound = d_h + max(d_h, 1.0) * d_k * series
        d_tilde = max(ratios)
        verdict = ProductGrowthVerdict.BOUNDED if float(d_tilde) <= bound * (1 + tolerance) else ProductGrowthVerdict.INCONCLUSIVE
        return ProductGrowthResult(verdict, ratios, bound, d_tilde)

    c = min(float(profileH.c_emp), float(profileK.c_emp))
    if c <= tolerance:
        return ProductGrowthResult(ProductGrowthVerdict.INCONCLUSIVE, ratios)
    alpha_h, alpha_k = profileH.dominant_degree, profileK.dominant_degree
    first = max(1, len(ratios) // 2)
    follows_shape = all(
        float(ratios[n - 1]) >= c**2 * 2.0 ** -(alpha_h + 2) * n ** (alpha_k / 2 + 1) * (1 - tolerance)
        for n in range(first, len(ratios) + 1)
    )
    rising = float(ratios[-1]) > float(ratios[first - 1]) or len(ratios) == 1
    verdict = ProductGrowthVerdict.UNBOUNDED if follows_shape and rising else ProductGrowthVerdict.INCONCLUSIVE
    return ProductGrowthResult(verdict, ratios)


# ============================================================
# 6️⃣ ÖRNEK DİZİLER
# ============================================================
def example_series() -> RationalFunctionSeries:
    """p = 1 + 12t² − 16t³, q = (1−t)(1−2t)(1−2t+4t²); a_n = c_n·2^n + 1."""
    return create_rational_function([1, 0, 12, -16], [1, -5, 12, -16, 8])


def example_c_cycle() -> tuple[int, ...]:
    return (0, 2, 6, 8, 6, 2)


def digit_sum_sequence(N: int) -> list[int]:
    """a_n = 2^{b(n)}, b(n) ikili gösterimdeki 1 sayısı; n = 0..N."""
    if N < 0:
        raise ValueError(f"N >= 0 olmali: {N}")
    return [2 ** n.bit_count() for n in range(N + 1)]


def min_linear_ratio(seq: Sequence[int]) -> tuple[int, Fraction]:
    """min_{n>=1} a_n/n ve argmin (eşitlikte en küçük n)."""
    if len(seq) < 2:
        raise SeriesError("en az iki terim gerekli")
    best = min(range(1, len(seq)), key=lambda n: (Fraction(seq[n], n), n))
    return best, Fraction(seq[best], best)
