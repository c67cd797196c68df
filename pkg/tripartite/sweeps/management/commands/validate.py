from django.conf import settings
from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from tripartite.core.exceptions import ConfigError
from tripartite.core.hierarchy import validate_hierarchy
from tripartite.sweeps.cli import add_parameter_arguments
from tripartite.sweeps.cli import parameters_from_options


class Command(BaseCommand):
    help = "Check a parameter point against the time-scale hierarchy"

    def add_arguments(self, parser):
        add_parameter_arguments(parser)
        parser.add_argument(
            "--factor",
            type=float,
            default=settings.TRIPARTITE_HIERARCHY_FACTOR,
            help="Minimum ratio for every '>>' link",
        )

    def handle(self, *args, **options):
        try:
            p = parameters_from_options(options)
        except ConfigError as e:
            raise CommandError(str(e), returncode=2) from e

        warnings = validate_hierarchy(p, options["factor"])
        for warning in warnings:
            self.stdout.write(self.style.WARNING(str(warning)))
        if not warnings:
            self.stdout.write(self.style.SUCCESS("Time-scale hierarchy satisfied"))
