# measurements/operators.py
import cmath
import math
import numbers
from dataclasses import dataclass

from tripartite.core.exceptions import DomainError

from .choices import MeasurementKind


class NormalOrdered:
    """
    A polynomial Σ c_kl b†ᵏ bˡ kept in normal order.

    Products are re-ordered with bˡ b†ᵐ = Σ_s C(l,s) C(m,s) s! b†ᵐ⁻ˢ bˡ⁻ˢ.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {
            (int(k), int(l)): complex(c) for (k, l), c in (terms or {}).items() if c != 0
        }

    @classmethod
    def annihilation(cls):
        return cls({(0, 1): 1})

    @classmethod
    def creation(cls):
        return cls({(1, 0): 1})

    @classmethod
    def identity(cls):
        return cls({(0, 0): 1})

    @property
    def order(self):
        return max((k + l for k, l in self.terms), default=0)

    def dagger(self):
        return NormalOrdered({(l, k): c.conjugate() for (k, l), c in self.terms.items()})

    def displaced(self, shift: complex):
        """Substitute b → b + shift, staying in normal order."""
        shift = complex(shift)
        terms: dict[tuple[int, int], complex] = {}
        for (k, l), c in self.terms.items():
            for i in range(k + 1):
                for j in range(l + 1):
                    weight = math.comb(k, i) * math.comb(l, j)
                    value = c * weight * shift.conjugate() ** (k - i) * shift ** (l - j)
                    terms[(i, j)] = terms.get((i, j), 0) + value
        return NormalOrdered(terms)

    def is_hermitian(self, tolerance=1e-12):
        other = self.dagger().terms
        keys = set(self.terms) | set(other)
        return all(
            abs(self.terms.get(key, 0) - other.get(key, 0)) <= tolerance for key in keys
        )

    def __add__(self, other):
        if isinstance(other, numbers.Number):
            other = NormalOrdered({(0, 0): other})
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return NormalOrdered(terms)

    __radd__ = __add__

    def __neg__(self):
        return NormalOrdered({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return NormalOrdered({key: c * other for key, c in self.terms.items()})
        terms: dict[tuple[int, int], complex] = {}
        for (k, l), a in self.terms.items():
            for (m, n), b in other.terms.items():
                for s in range(min(l, m) + 1):
                    weight = math.comb(l, s) * math.comb(m, s) * math.factorial(s)
                    key = (k + m - s, l + n - s)
                    terms[key] = terms.get(key, 0) + a * b * weight
        return NormalOrdered(terms)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        return isinstance(other, NormalOrdered) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        body = " + ".join(f"({c:.6g}) b†^{k} b^{l}" for (k, l), c in sorted(self.terms.items()))
        return f"NormalOrdered({body or '0'})"


@dataclass(frozen=True)
class MeasurementOp:
    """A measured observable on the mechanical mode."""

    kind: MeasurementKind
    theta: float = 0.0
    j: int = 1
    zeta: float = 0.0
    base: "MeasurementOp | None" = None
    noise: "MeasurementOp | None" = None
    epsilon: float = 0.0

    def __post_init__(self):
        if self.kind == MeasurementKind.COHERENT_DRIVE and (
            isinstance(self.j, bool) or not isinstance(self.j, int) or self.j < 1
        ):
            raise DomainError(f"coherent drive order must be an integer ≥ 1, got {self.j!r}")
        if self.kind == MeasurementKind.ANHARMONIC and not math.isfinite(self.zeta):
            raise DomainError("anharmonic strength must be finite")
        if self.kind == MeasurementKind.MIXTURE:
            if self.base is None or self.noise is None:
                raise DomainError("a mixture needs both a base and a noise operator")
            if not 0.0 <= self.epsilon < 1.0:
                raise DomainError(f"mixture weight must lie in [0, 1), got {self.epsilon!r}")

    @classmethod
    def intensity(cls):
        return cls(MeasurementKind.INTENSITY)

    @classmethod
    def quadrature(cls, theta: float):
        return cls(MeasurementKind.QUADRATURE, theta=theta)

    @classmethod
    def coherent_drive(cls, j: int):
        return cls(MeasurementKind.COHERENT_DRIVE, j=j)

    @classmethod
    def anharmonic(cls, zeta: float):
        return cls(MeasurementKind.ANHARMONIC, zeta=zeta)

    @classmethod
    def mixture(cls, base, noise, epsilon: float):
        return cls(MeasurementKind.MIXTURE, base=base, noise=noise, epsilon=epsilon)

    def polynomial(self) -> NormalOrdered:
        match self.kind:
            case MeasurementKind.INTENSITY:
                return NormalOrdered({(1, 1): 1})
            case MeasurementKind.QUADRATURE:
                phase = cmath.exp(1j * self.theta)
                return NormalOrdered({(0, 1): phase, (1, 0): phase.conjugate()})
            case MeasurementKind.COHERENT_DRIVE:
                return NormalOrdered({(self.j, 0): 1, (0, self.j): 1})
            case MeasurementKind.ANHARMONIC:
                # (b†b)² = b†²b² + b†b
                return NormalOrdered({(2, 2): self.zeta, (1, 1): self.zeta})
            case MeasurementKind.MIXTURE:
                return (
                    self.base.polynomial() * (1.0 - self.epsilon)
                    + self.noise.polynomial() * self.epsilon
                )
        raise DomainError(f"unknown measurement kind {self.kind!r}")
