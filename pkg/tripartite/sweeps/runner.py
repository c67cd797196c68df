# sweeps/runner.py
import io
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat

import numpy as np
import scipy
import tablib

import tripartite
from tripartite.core.choices import FormulaMode
from tripartite.core.exceptions import ConfigError
from tripartite.core.exceptions import TripartiteError
from tripartite.core.parameters import TWO_PI

from .config import SweepConfig
from .quantities import QUANTITIES
from .quantities import RowContext
from .signals import sweep_finished

logger = logging.getLogger(__name__)

BACKENDS = ("local", "celery")
REASON = "reason"
DIVERGENT = "divergent"
UNDEFINED = "undefined"
# reason codes that mark a computation failure rather than a physical sentinel
FAILURE_CODES = frozenset({"error", "step", "convergence", "truncation", "order", "arity"})


def headers_for(config: SweepConfig) -> list[str]:
    extra = [] if config.axis.param == "lam" else ["lam"]
    return [config.axis.param, *extra, *config.outputs, REASON]


def evaluate_row(config: SweepConfig, value: float) -> dict:
    """
    All requested quantities at one grid point.

    Never raises for physics: divergences and failures become inf/nan values
    with a ``quantity:code`` entry in the reason column.
    """
    row = {config.axis.param: value}
    reasons = {}
    try:
        ctx = RowContext(config, value)
    except TripartiteError as e:
        logger.info(f"Row {config.axis.param} = {value!r} has no valid parameter point: {e}")
        row.setdefault("lam", math.nan)
        for name in config.outputs:
            row[name] = math.nan
            reasons[name] = e.code
    else:
        row.setdefault("lam", ctx.lam / TWO_PI)
        for name in config.outputs:
            try:
                result = float(QUANTITIES[name].evaluate(ctx))
            except TripartiteError as e:
                logger.info(f"{name} at {config.axis.param} = {value!r}: {e}")
                result = math.nan
                reasons[name] = e.code
            else:
                if math.isinf(result):
                    reasons[name] = DIVERGENT
                elif math.isnan(result):
                    reasons[name] = UNDEFINED
            row[name] = result
    row[REASON] = ";".join(f"{name}:{code}" for name, code in reasons.items())
    return row


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    rows: list

    @property
    def headers(self):
        return headers_for(self.config)

    @staticmethod
    def row_codes(row) -> dict:
        text = row.get(REASON, "")
        return dict(item.split(":", 1) for item in text.split(";") if item)

    def failed_rows(self):
        return [
            row for row in self.rows if FAILURE_CODES & set(self.row_codes(row).values())
        ]

    def column(self, name):
        return np.array([row[name] for row in self.rows], dtype=float)

    @property
    def dataset(self) -> tablib.Dataset:
        data = tablib.Dataset(headers=self.headers)
        for row in self.rows:
            data.append([row[name] for name in self.headers])
        return data

    def metadata(self) -> list[str]:
        cfg = self.config
        return [
            f"tripartite: {tripartite.__version__}",
            f"numpy: {np.__version__}",
            f"scipy: {scipy.__version__}",
            f"mode: {cfg.mode}",
            f"preset: {cfg.preset or '-'}",
            f"axis: {cfg.axis}",
            f"fock_n: {cfg.fock_n}",
            f"gamma_ad: {cfg.gamma_ad!r}",
            f"zeta: {cfg.zeta!r}",
            f"coherent_order: {cfg.coherent_order}",
            f"hierarchy_factor: {cfg.hierarchy_factor!r}",
            f"critical_tolerance: {cfg.critical_tolerance!r}",
            f"null_tolerance: {cfg.null_tolerance!r}",
        ]

    def to_csv(self) -> str:
        out = io.StringIO()
        for line in self.metadata():
            out.write(f"# {line}\n")
        out.write(self.dataset.export("csv", lineterminator="\n"))
        return out.getvalue()


def _run_celery(config: SweepConfig, values):
    from celery import group

    from .tasks import evaluate_sweep_row

    payload = config.as_dict()
    job = group(evaluate_sweep_row.s(payload, value) for value in values)
    return [result.get() for result in job.apply_async().results]


def run_sweep(config: SweepConfig, jobs: int = 1, backend: str = "local") -> SweepResult:
    """
    Evaluate every grid point of ``config``.

    Rows are independent; whatever the backend, they come back in grid order.
    """
    if backend not in BACKENDS:
        raise ConfigError(f"Unknown backend {backend!r}", {"backend": list(BACKENDS)})
    if jobs < 1:
        raise ConfigError("jobs must be at least 1", {"jobs": [str(jobs)]})
    values = [float(v) for v in config.axis.values()]
    logger.info(f"Sweeping {config.axis} ({config.mode}) with {backend} backend, {jobs} job(s)")

    if backend == "celery":
        rows = _run_celery(config, values)
    elif jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(evaluate_row, repeat(config), values))
    else:
        rows = [evaluate_row(config, value) for value in values]

    result = SweepResult(config=config, rows=rows)
    sweep_finished.send(sender=SweepResult, result=result)
    return result


@dataclass(frozen=True)
class ColumnDiff:
    name: str
    changed: bool
    variants: tuple[str, ...]

    @property
    def explained(self):
        return not self.changed or bool(self.variants)


def _same(a, b):
    return np.array_equal(a, b, equal_nan=True)


def diff_modes(config: SweepConfig, jobs: int = 1, backend: str = "local") -> list[ColumnDiff]:
    """
    Run the sweep in both formula modes and report which columns moved.

    On a ``gap_ratio`` axis λ itself depends on the mode, so every column
    inherits V1.
    """
    corrected = run_sweep(config.with_mode(FormulaMode.CORRECTED), jobs, backend)
    strict = run_sweep(config.with_mode(FormulaMode.STRICT_PAPER), jobs, backend)
    inherited = ("V1",) if config.axis.param == "gap_ratio" else ()
    diffs = []
    for name in corrected.headers:
        if name in (REASON, config.axis.param):
            continue
        own = QUANTITIES[name].variants if name in QUANTITIES else ()
        variants = tuple(sorted(set(own) | set(inherited)))
        changed = not _same(corrected.column(name), strict.column(name))
        diffs.append(ColumnDiff(name=name, changed=changed, variants=variants if changed else ()))
    return diffs
