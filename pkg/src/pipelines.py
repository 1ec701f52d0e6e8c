"""
Pipeline Modülü (Pipelines Module)

CLI alt komutlarının uçtan uca akışları. Her fonksiyon bir Report döner; çıktı
biçimlendirme ve çıkış kodları main.py'dedir.

Akışlar:
- cmd_growth: küreler/toplar -> find_recurrence -> asymptotic_profile -> denetimler
- cmd_dc: değişmeli çift yoğunluğu d_n (+ K_{k,k} alt sınır sütunu)
- cmd_centraliser: C_G(g̃) yapısı, top sayımları, oracle karşılaştırması, denetimler
- cmd_series: hazır diziler (example-i, digit-sum) veya dosya üzerinde seri analizi

Bellek bütçesi aşılırsa tamamlanan yarıçapla devam edilir ve rapor `partial` işaretlenir.
"""

from __future__ import annotations

import logging
import random
from pathlib import Path
from typing import Sequence

from src.centralisers import (
    CyclicFactor,
    brute_force_centraliser,
    centraliser_sphere_sizes,
    centraliser_structure,
    conjugate_bound_audit,
    expand_centraliser,
    factor_sphere_sizes,
    small_centraliser_bounds_audit,
    spot_check,
)
from src.enumeration import (
    BallIndex,
    BudgetExceeded,
    complete_bipartite_parts,
    count_tilde_support,
    dc_lower_bounds,
    dc_sequence,
    dump_ball,
    enumerate_ball,
    submultiplicativity_audit,
)
from src.graph_product import GraphProduct, GraphProductError, format_element, parse_word
from src.loader import LoadedSpec, file_digest, load_sequence, sequence_digest
from src.report import Report
from src.series import (
    EmptyDensityWindow,
    RootSeparationError,
    asymptotic_profile,
    ball_alpha,
    c_sequence_check,
    density_gap,
    digit_sum_sequence,
    example_series,
    expand,
    find_recurrence,
    min_linear_ratio,
    theorem1_audit,
)
from src.settings import Settings

logger = logging.getLogger(__name__)

BUILTIN_SEQUENCES = ("example-i", "digit-sum")


# ============================================================
# 1️⃣ ORTAK YARDIMCILAR
# ============================================================
def _metadata(settings: Settings, **extra) -> dict:
    data = dict(extra)
    data.update(
        radius=settings.radius,
        max_order=settings.max_order,
        memory_budget=settings.memory_budget,
        seed=settings.seed,
    )
    data.update(settings.tolerances())
    return data


def _spec_metadata(loaded: LoadedSpec, settings: Settings) -> dict:
    return _metadata(settings, spec=loaded.path.name, spec_digest=loaded.digest)


def _enumerate(gp: GraphProduct, N: int, settings: Settings, report: Report) -> BallIndex:
    """Bütçe aşılırsa kısmi topla devam eder ve raporu işaretler."""
    try:
        return enumerate_ball(gp, N, settings.memory_budget, settings.threads)
    except BudgetExceeded as exc:
        report.partial = True
        report.metadata["completed_radius"] = exc.completed_radius
        return exc.partial


def _reconstruct(seq: Sequence[int], settings: Settings):
    """
    Dizi uzunluğuna göre sınırlanmış max_order ile recurrence arar.

    Returns:
        (rf veya None, kullanılan max_order, doğrulama terimi sayısı)
    """
    if len(seq) < 3:
        return None, 0, 0
    order = min(settings.max_order, (len(seq) - 1) // 2)
    confirm = len(seq) - 2 * order
    return find_recurrence(seq, order, confirm), order, confirm


def _profile_sections(report: Report, label: str, seq: Sequence[int], settings: Settings, *, ball: bool = False):
    """Rasyonel seri, profil ve denetim bölümlerini ekler; profil yoksa None döner."""
    rf, order, confirm = _reconstruct(seq, settings)
    fields = {"max_order_used": order, "confirmation_terms": confirm}
    if rf is None:
        fields["recurrence"] = "none found"
        report.add_fields(f"{label} series", fields)
        report.add_fields(f"{label} verdict", {"verdict": theorem1_audit(seq, None).verdict})
        return None

    fields.update(numerator=list(rf.numerator), denominator=list(rf.denominator), order=rf.order)
    if rf.is_polynomial:
        fields["note"] = "constant denominator: finite group, polynomial growth series"
        report.add_fields(f"{label} series", fields)
        return None
    report.add_fields(f"{label} series", fields)

    horizon = max(len(seq) - 1, 2 * settings.max_order + 8)
    try:
        profile = asymptotic_profile(
            rf,
            horizon,
            grouping_tolerance=settings.grouping_tolerance,
            root_tolerance=settings.root_tolerance,
            separation_tolerance=settings.separation_tolerance,
        )
    except RootSeparationError as exc:
        report.add_fields(f"{label} profile", {"error": str(exc)})
        return None

    leading = profile.leading_terms()
    summary = {
        "lambda": profile.dominant_modulus,
        "lambda_exact": profile.dominant_modulus_exact,
        "alpha": profile.dominant_degree,
        "exact": profile.exact,
        "leading_coefficients": [t.exact if t.exact is not None else t.value for t in leading],
        "c_emp": profile.c_emp,
        "d_emp": profile.d_emp,
        "horizon": profile.horizon,
    }
    if ball:
        summary["ball_alpha"] = ball_alpha(profile)
    report.add_fields(f"{label} profile", summary)
    report.add_table(
        f"{label} roots",
        ("lambda_i", "exact", "multiplicity"),
        [(r.value, r.exact, r.multiplicity) for r in profile.roots],
    )
    report.add_table(
        f"{label} partial fractions",
        ("root", "j", "b"),
        [(t.root, t.power, t.exact if t.exact is not None else t.value) for t in profile.coefficients],
    )

    t1 = theorem1_audit(seq, profile, settings.tolerance)
    check = c_sequence_check(profile, profile.horizon, settings.tolerance)
    audits = {
        "theorem1": t1.verdict,
        "theorem1_c_emp": t1.c_emp,
        "theorem1_d_emp": t1.d_emp,
        "c_check": check.passed,
        "c_max_imag": check.max_imag,
        "c_min_real": check.min_real,
    }
    reals = profile.real_c_samples()
    if t1.c_emp is not None and t1.c_emp > 0:
        delta = t1.c_emp / 2
        try:
            gap = density_gap(reals, delta)
            audits.update(density_delta=delta, density_max_gap=gap.max_gap, density_lead_in=gap.lead_in)
        except EmptyDensityWindow as exc:
            audits["density"] = str(exc)
    report.add_fields(f"{label} audits", audits)
    report.add_table(f"{label} c_n", ("n", "re", "im"), [(n, re, im) for n, (re, im) in enumerate(profile.c_parts())])
    return profile


def _submultiplicativity(report: Report, title: str, sequences: dict[str, Sequence[int]]):
    fields = {}
    for name, seq in sequences.items():
        result = submultiplicativity_audit(seq)
        fields[name] = "pass" if result.passed else f"violation at {result.witness}"
    report.add_fields(title, fields)


# ============================================================
# 2️⃣ GROWTH
# ============================================================
def cmd_growth(loaded: LoadedSpec, settings: Settings, dump_path: str | Path | None = None) -> Report:
    """
    Küre/top tabloları, rasyonel seri, profil ve denetimler.

    Kullanım Yeri:
        - main.py `growth` alt komutu
    """
    gp = loaded.gp
    report = Report("growth", _spec_metadata(loaded, settings))
    index = _enumerate(gp, settings.radius, settings, report)
    spheres, balls = index.sphere_sizes(), index.ball_sizes()
    report.add_table("spheres", ("n", "sphere", "ball"), zip(range(len(spheres)), spheres, balls))

    if dump_path is not None:
        Path(dump_path).write_text("\n".join(dump_ball(index)) + "\n", encoding="utf-8")
        logger.info("Top dokumu yazildi: %s", dump_path)

    _profile_sections(report, "sphere", spheres, settings)
    _profile_sections(report, "ball", balls, settings, ball=True)
    _submultiplicativity(report, "submultiplicativity", {"spheres": spheres, "balls": balls})
    return report


# ============================================================
# 3️⃣ DEGREE OF COMMUTATIVITY
# ============================================================
def _is_kk_raag(gp: GraphProduct) -> bool:
    if any(gp.group(v).is_finite for v in gp.vertices):
        return False
    try:
        complete_bipartite_parts(gp)
    except GraphProductError:
        return False
    return True


def cmd_dc(loaded: LoadedSpec, settings: Settings) -> Report:
    """d_n tablosu; Γ = K_{k,k} RAAG ise alt sınır karşılaştırması eklenir."""
    gp = loaded.gp
    report = Report("dc", _spec_metadata(loaded, settings))
    index = _enumerate(gp, settings.radius, settings, report)
    N = index.radius
    dc = dc_sequence(gp, N, index, settings.threads)
    balls = index.ball_sizes()

    if _is_kk_raag(gp):
        bounds = dc_lower_bounds(gp, N, index)
        rows = [(n, balls[n], dc[n], bounds[n], dc[n] >= bounds[n]) for n in range(N + 1)]
        report.add_table("dc", ("n", "ball", "d_n", "lower_bound", "holds"), rows)
    else:
        report.add_table("dc", ("n", "ball", "d_n"), [(n, balls[n], dc[n]) for n in range(N + 1)])
    report.add_fields("dc summary", {"d_N": dc[N], "d_N_float": float(dc[N])})
    return report


# ============================================================
# 4️⃣ CENTRALISER
# ============================================================
def cmd_centraliser(loaded: LoadedSpec, settings: Settings, word: str) -> Report:
    """
    C_G(g̃) ayrışımı, top sayımları ve min(N, oracle_radius)'a kadar oracle karşılaştırması.

    Raises:
        CentraliserError: kelime birim elemana indirgenirse.
    """
    gp = loaded.gp
    g = parse_word(gp, word)
    report = Report("centraliser", _spec_metadata(loaded, settings) | {"word": word})
    desc = centraliser_structure(gp, g)
    N = settings.radius

    report.add_fields("structure", {
        "element": format_element(g),
        "conjugator": format_element(desc.conjugator),
        "conjugator_length": desc.conjugator.word_length,
        "tilde": format_element(desc.tilde),
        "normal_conjugator": format_element(desc.normal_conjugator),
        "normal": format_element(desc.normal),
        "support": list(gp.graph.ordered(desc.tilde.support)),
        "components": [list(c) for c in desc.components],
        "link": list(desc.link),
    })

    rows = []
    for i, factor in enumerate(desc.factors):
        spheres = factor_sphere_sizes(factor, N)
        if isinstance(factor, CyclicFactor):
            rows.append((i, "cyclic", list(factor.component), format_element(factor.generator),
                         factor.exponent, factor.primitive, spheres))
        else:
            rows.append((i, "finite", list(factor.component), factor.vertex, len(factor.members), None, spheres))
    report.add_table("factors", ("i", "kind", "component", "generator", "beta_or_size", "primitive", "spheres"), rows)

    structural = centraliser_sphere_sizes(desc, gp, N)
    oracle_radius = min(N, settings.oracle_radius)
    index = _enumerate(gp, oracle_radius, settings, report)
    oracle_radius = index.radius

    count_rows = []
    running = 0
    for n in range(N + 1):
        running += structural[n]
        if n <= oracle_radius:
            oracle = len(brute_force_centraliser(gp, desc.tilde, n, index))
            count_rows.append((n, running, oracle, running == oracle))
        else:
            count_rows.append((n, running, None, None))
    report.add_table("ball counts", ("n", "structural", "oracle", "match"), count_rows)

    equal = expand_centraliser(desc, gp, oracle_radius) == brute_force_centraliser(gp, desc.tilde, oracle_radius, index)
    bounds = small_centraliser_bounds_audit(desc, gp, max(1, N))
    conj = conjugate_bound_audit(gp, g, oracle_radius, index)
    spots = spot_check(desc, gp, oracle_radius, random.Random(settings.seed))
    report.add_fields("audits", {
        "oracle_radius": oracle_radius,
        "oracle_set_equal": equal,
        "small_centraliser_bounds": "pass" if bounds.passed else f"violation at {bounds.witness}",
        "conjugate_bound": conj.passed,
        "conjugate_bound_left": conj.left,
        "conjugate_bound_right": conj.right,
        "spot_check": "pass" if spots.passed else f"violation at {spots.witness}",
    })

    census = [
        (s, count_tilde_support(gp, oracle_radius, desc.tilde.support, s, index))
        for s in range(3)
    ]
    report.add_table("tilde-support census", ("s", "count"), census)
    return report


# ============================================================
# 5️⃣ SERIES
# ============================================================
def builtin_sequence(name: str) -> list[int]:
    if name == "example-i":
        return [int(a) for a in expand(example_series(), 60)]
    if name == "digit-sum":
        return digit_sum_sequence(64)
    raise ValueError(f"bilinmeyen hazir dizi: {name}")


def cmd_series(source: str, settings: Settings) -> Report:
    """
    Hazır dizi adı (example-i, digit-sum) veya dizi dosyası üzerinde seri analizi.
    """
    if source in BUILTIN_SEQUENCES:
        seq = builtin_sequence(source)
        report = Report("series", _metadata(settings, source=source, spec_digest=sequence_digest(seq)))
    else:
        seq = load_sequence(source)
        digest = file_digest(source)
        report = Report("series", _metadata(settings, source=Path(source).name, spec_digest=digest))

    report.add_table("sequence", ("n", "a_n"), enumerate(seq))
    _profile_sections(report, "sequence", seq, settings)
    _submultiplicativity(report, "submultiplicativity", {"sequence": seq})
    if len(seq) >= 2 and all(a > 0 for a in seq):
        n, ratio = min_linear_ratio(seq)
        report.add_fields("linear ratio", {"argmin_n": n, "min_a_n_over_n": ratio})
    return report
