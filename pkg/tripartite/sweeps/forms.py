# sweeps/forms.py
from django import forms
from django.conf import settings
from django.utils.translation import gettext_lazy as _

from tripartite.core.choices import FormulaMode
from tripartite.core.exceptions import ConfigError
from tripartite.core.exceptions import DomainError

from .config import GAP_RATIO
from .config import PARAMETER_FIELDS
from .config import Axis
from .config import SweepConfig
from .presets import PRESETS
from .quantities import QUANTITIES

DEFAULT_OUTPUTS = ("delta", "tau", "qfi_gaussian")
REQUIRED_PARAMETERS = ("omega_k", "omega_m", "omega_nv", "lam")


class SweepConfigForm(forms.Form):
    """
    Validates a flat sweep configuration.

    Parameter values are in Hz and are merged over the chosen preset.
    """

    preset = forms.ChoiceField(
        choices=[("", "---"), *((name, name) for name in PRESETS)],
        required=False,
    )
    axis = forms.CharField()
    outputs = forms.CharField(required=False)
    mode = forms.ChoiceField(choices=FormulaMode.choices, required=False)
    fock_n = forms.IntegerField(min_value=0, required=False)
    gamma_ad = forms.FloatField(min_value=0.0, max_value=1.0, required=False)
    zeta = forms.FloatField(required=False)
    coherent_order = forms.IntegerField(min_value=1, required=False)
    hierarchy_factor = forms.FloatField(min_value=1.0, required=False)
    critical_tolerance = forms.FloatField(min_value=0.0, required=False)
    null_tolerance = forms.FloatField(min_value=0.0, required=False)

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        for name in PARAMETER_FIELDS:
            self.fields[name] = forms.FloatField(required=False)

    @classmethod
    def build(cls, data) -> SweepConfig:
        form = cls(data)
        if not form.is_valid():
            raise ConfigError(
                "Invalid sweep configuration",
                {name: list(errors) for name, errors in form.errors.items()},
            )
        return form.cleaned_data["config"]

    def clean_axis(self):
        try:
            return Axis.parse(self.cleaned_data["axis"])
        except ConfigError as e:
            raise forms.ValidationError(str(e)) from e

    def clean_outputs(self):
        text = self.cleaned_data.get("outputs") or ""
        names = tuple(name.strip() for name in text.split(",") if name.strip())
        unknown = [name for name in names if name not in QUANTITIES]
        if unknown:
            raise forms.ValidationError(
                _("Unknown quantities: %(names)s"),
                params={"names": ", ".join(unknown)},
            )
        return names or DEFAULT_OUTPUTS

    def _setting(self, name, setting):
        value = self.cleaned_data.get(name)
        return getattr(settings, setting) if value is None else value

    def clean(self):
        cleaned = super().clean()
        axis = cleaned.get("axis")
        if axis is None or "outputs" not in cleaned:
            return cleaned

        preset = cleaned.get("preset") or ""
        values = dict(PRESETS.get(preset, {}))
        values.update(
            {name: cleaned[name] for name in PARAMETER_FIELDS if cleaned.get(name) is not None},
        )
        if axis.param == GAP_RATIO:
            values.setdefault("lam", 0.0)
        missing = [
            name for name in REQUIRED_PARAMETERS if name not in values and name != axis.param
        ]
        if missing:
            for name in missing:
                self.add_error(name, _("Required unless a preset provides it."))
            return cleaned

        config = SweepConfig(
            values=values,
            axis=axis,
            outputs=cleaned["outputs"],
            mode=FormulaMode(cleaned.get("mode") or FormulaMode.CORRECTED),
            preset=preset,
            fock_n=self._setting("fock_n", "TRIPARTITE_FOCK_N"),
            gamma_ad=self._setting("gamma_ad", "TRIPARTITE_DEFAULT_GAMMA_AD"),
            zeta=self._setting("zeta", "TRIPARTITE_ANHARMONIC_ZETA"),
            coherent_order=self._setting("coherent_order", "TRIPARTITE_COHERENT_ORDER"),
            hierarchy_factor=self._setting("hierarchy_factor", "TRIPARTITE_HIERARCHY_FACTOR"),
            critical_tolerance=self._setting("critical_tolerance", "TRIPARTITE_CRITICAL_TOLERANCE"),
            null_tolerance=self._setting("null_tolerance", "TRIPARTITE_NULL_SENSITIVITY_TOL"),
        )
        for endpoint in (axis.lo, axis.hi):
            try:
                config.point(endpoint)
            except DomainError as e:
                self.add_error("axis", str(e))
                return cleaned
        cleaned["config"] = config
        return cleaned
