"""
gpgrowth komut satırı.

Alt komutlar:
    growth SPEC       küre/top tabloları, rasyonel seri, profil ve denetimler
    dc SPEC           değişmeli çift yoğunluğu d_n
    centraliser SPEC WORD   C_G(g̃) yapısı ve sayımları
    series SOURCE     dizi dosyası veya hazır dizi (example-i, digit-sum)

Çıkış kodları: 0 başarı, 2 girdi hatası, 3 bellek bütçesi aşıldı (kısmi rapor yazıldı), 1 diğer.
"""

import argparse
import logging
import sys

from src.centralisers import CentraliserError
from src.graph_product import GraphProductError
from src.loader import GroupSpecError, load_group_spec
from src.pipelines import BUILTIN_SEQUENCES, cmd_centraliser, cmd_dc, cmd_growth, cmd_series
from src.report import render
from src.series import SeriesError
from src.settings import OutputFormat, SettingsError, load_settings
from src.vertex_groups import VertexGroupError

logger = logging.getLogger("gpgrowth")

EXIT_INPUT = 2
EXIT_BUDGET = 3
INPUT_ERRORS = (
    GroupSpecError,
    GraphProductError,
    VertexGroupError,
    SeriesError,
    CentraliserError,
    SettingsError,
    OSError,
)


def _status(message: str):
    print(message, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--radius", type=int, help="top yaricapi N")
    common.add_argument("--max-order", type=int, dest="max_order", help="recurrence derecesi ust siniri")
    common.add_argument("--memory-budget", dest="memory_budget", help="bayt veya 2GiB gibi")
    common.add_argument("--threads", type=int, help="worker sayisi")
    common.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat])
    common.add_argument("--seed", type=int)
    common.add_argument("--tolerance", type=float)
    common.add_argument("--env-file", dest="env_file", help=".env yolu")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="gpgrowth", description="Graph product buyume araclari")
    sub = parser.add_subparsers(dest="command", required=True)

    growth = sub.add_parser("growth", parents=[common])
    growth.add_argument("spec")
    growth.add_argument("--dump-ball", dest="dump_ball", help="top elemanlarini bu dosyaya yaz")

    dc = sub.add_parser("dc", parents=[common])
    dc.add_argument("spec")

    centraliser = sub.add_parser("centraliser", parents=[common])
    centraliser.add_argument("spec")
    centraliser.add_argument("word", help="ornek: 'a b^-1 a'")

    series = sub.add_parser("series", parents=[common])
    series.add_argument("source", help=f"dizi dosyasi veya {', '.join(BUILTIN_SEQUENCES)}")
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _overrides(args: argparse.Namespace) -> dict:
    names = ("radius", "max_order", "memory_budget", "threads", "output_format", "seed", "tolerance")
    return {name: getattr(args, name) for name in names}


def run(args: argparse.Namespace):
    """Alt komutu çalıştırır; (rapor, ayarlar) döner."""
    if args.command == "series":
        settings = load_settings(env_file=args.env_file, **_overrides(args))
        return cmd_series(args.source, settings), settings

    loaded = load_group_spec(args.spec)
    options = loaded.spec.options.model_dump()
    settings = load_settings(options, env_file=args.env_file, **_overrides(args))
    if args.command == "growth":
        return cmd_growth(loaded, settings, args.dump_ball), settings
    if args.command == "dc":
        return cmd_dc(loaded, settings), settings
    return cmd_centraliser(loaded, settings, args.word), settings


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    _status(f"--- gpgrowth {args.command} ---")

    try:
        report, settings = run(args)
    except INPUT_ERRORS as e:
        _status(f"Girdi hatasi: {e}")
        return EXIT_INPUT
    except Exception:
        logger.exception("Beklenmeyen hata")
        return 1

    sys.stdout.write(render(report, settings.output_format))
    sys.stdout.flush()
    if report.partial:
        _status(f"Bellek butcesi asildi; tamamlanan yaricap {report.metadata.get('completed_radius')}")
        return EXIT_BUDGET
    _status("--- tamamlandi ---")
    return 0


if __name__ == "__main__":
    sys.exit(main())
