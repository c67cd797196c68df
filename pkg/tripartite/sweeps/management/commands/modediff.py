from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from tripartite.core.exceptions import ConfigError
from tripartite.sweeps.cli import add_sweep_arguments
from tripartite.sweeps.cli import config_from_options
from tripartite.sweeps.runner import diff_modes


class Command(BaseCommand):
    help = "Run a sweep in both formula modes and list the columns that differ"

    def add_arguments(self, parser):
        add_sweep_arguments(parser)

    def handle(self, *args, **options):
        try:
            config = config_from_options(options)
            diffs = diff_modes(config, jobs=options["jobs"], backend=options["backend"])
        except ConfigError as e:
            raise CommandError(str(e), returncode=2) from e

        for diff in diffs:
            if not diff.changed:
                self.stdout.write(f"{diff.name}: unchanged")
            elif diff.explained:
                self.stdout.write(f"{diff.name}: changed ({', '.join(diff.variants)})")
            else:
                self.stdout.write(self.style.ERROR(f"{diff.name}: changed (unexplained)"))
        if not all(diff.explained for diff in diffs):
            raise CommandError("columns changed without a documented formula variant", returncode=3)
