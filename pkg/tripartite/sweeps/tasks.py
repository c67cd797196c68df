from celery import shared_task

from .config import SweepConfig
from .runner import evaluate_row


@shared_task()
def evaluate_sweep_row(config: dict, value: float) -> dict:
    """One grid point of a sweep, for the celery backend."""
    return evaluate_row(SweepConfig.from_dict(config), value)
