# sweeps/signals.py
import logging
from collections import Counter

from django.dispatch import Signal
from django.dispatch import receiver

logger = logging.getLogger(__name__)

# sent with ``result``, a SweepResult, once every row is in
sweep_finished = Signal()


@receiver(sweep_finished)
def log_sweep_summary(sender, result, **kwargs):
    codes = Counter(code for row in result.rows for code in result.row_codes(row).values())
    if not codes:
        logger.info(f"Sweep finished: {len(result.rows)} rows, all finite")
        return
    summary = ", ".join(f"{code} × {count}" for code, count in sorted(codes.items()))
    logger.info(f"Sweep finished: {len(result.rows)} rows; sentinels and failures: {summary}")
    failed = result.failed_rows()
    if failed:
        logger.warning(f"{len(failed)} of {len(result.rows)} rows failed")
