from pathlib import Path

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from tripartite.core.exceptions import ConfigError
from tripartite.sweeps.cli import add_sweep_arguments
from tripartite.sweeps.cli import config_from_options
from tripartite.sweeps.runner import run_sweep


class Command(BaseCommand):
    help = "Evaluate pipeline quantities along one parameter axis and write plot-ready CSV"

    def add_arguments(self, parser):
        add_sweep_arguments(parser)
        parser.add_argument("--out", help="CSV file; standard output when omitted")
        parser.add_argument("--dump-config", help="Write the effective configuration here")
        parser.add_argument(
            "--strict",
            action="store_true",
            help="Exit with status 3 when any row failed",
        )

    def handle(self, *args, **options):
        try:
            config = config_from_options(options)
            result = run_sweep(config, jobs=options["jobs"], backend=options["backend"])
        except ConfigError as e:
            raise CommandError(str(e), returncode=2) from e

        if options["dump_config"]:
            Path(options["dump_config"]).write_text(config.to_text(), encoding="utf-8")
        text = result.to_csv()
        if options["out"]:
            Path(options["out"]).write_text(text, encoding="utf-8")
            self.stdout.write(self.style.SUCCESS(f"Wrote {len(result.rows)} rows to {options['out']}"))
        else:
            self.stdout.write(text, ending="")

        failed = result.failed_rows()
        if options["strict"] and failed:
            raise CommandError(f"{len(failed)} rows failed", returncode=3)
