from celery.result import EagerResult

from tripartite.sweeps.forms import SweepConfigForm
from tripartite.sweeps.runner import evaluate_row
from tripartite.sweeps.tasks import evaluate_sweep_row


def test_evaluate_sweep_row(settings):
    """A grid point evaluated through the task queue matches the in-process row."""
    settings.CELERY_TASK_ALWAYS_EAGER = True
    config = SweepConfigForm.build(
        {"preset": "feasibility", "axis": "gap_ratio:1e-1:1e-3:3:log", "outputs": "delta,tau"},
    )
    task_result = evaluate_sweep_row.delay(config.as_dict(), 1e-2)
    assert isinstance(task_result, EagerResult)
    assert task_result.result == evaluate_row(config, 1e-2)
