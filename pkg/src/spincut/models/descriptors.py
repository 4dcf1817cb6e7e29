"""Tagged descriptions of the prequantized models and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, ClassVar

from ..errors import ParityError, UnsupportedError


def require_odd(ell: int) -> int:
    if int(ell) != ell or int(ell) % 2 == 0:
        raise ParityError(f"plane parameter ell must be an odd integer, got {ell}")
    return int(ell)


class PrequantDescriptor:
    model: ClassVar[str]

    @property
    def params(self) -> dict[str, Any]:
        raise NotImplementedError

    @property
    def two_form_label(self) -> str:
        raise NotImplementedError

    def to_json(self) -> dict[str, Any]:
        return {"model": self.model, "params": self.params, "two_form_label": self.two_form_label}

    @staticmethod
    def from_json(data: dict[str, Any]) -> "PrequantDescriptor":
        model, p = data["model"], data.get("params", {})
        if model == "ComplexPlane":
            return ComplexPlane(p["ell"], negative=p.get("negative", False))
        if model == "Sphere":
            return Sphere(p["k"], p["n"])
        if model == "ProjectiveSpace":
            return ProjectiveSpace(p["n"])
        if model == "Product":
            return Product(PrequantDescriptor.from_json(p["left"]),
                           PrequantDescriptor.from_json(p["right"]), p.get("action", "anti-diagonal"))
        if model == "LevelSet":
            return LevelSet(PrequantDescriptor.from_json(p["base"]), p["ell"], p["alpha"],
                            p.get("side", "positive"))
        raise UnsupportedError(f"unknown model {model!r}")


@dataclass(frozen=True)
class ComplexPlane(PrequantDescriptor):
    """(P_C^ell, theta_C); ``negative`` selects the plane used for the negative cut."""

    ell: int
    negative: bool = False
    model: ClassVar[str] = "ComplexPlane"

    def __post_init__(self):
        object.__setattr__(self, "ell", require_odd(self.ell))

    @property
    def params(self):
        return {"ell": self.ell, "negative": self.negative}

    @property
    def two_form_label(self):
        return "i dz^dzbar = 2 dx^dy" if self.negative else "omega_C = -i dz^dzbar = -2 dx^dy"


@dataclass(frozen=True)
class Sphere(PrequantDescriptor):
    """(P_{k,n}, theta_n) prequantizing (S^2, omega_n = (n/2) A)."""

    k: int
    n: int
    model: ClassVar[str] = "Sphere"

    def __post_init__(self):
        for name in ("k", "n"):
            v = getattr(self, name)
            if int(v) != v:
                raise ValueError(f"sphere parameter {name} must be an integer, got {v}")
            object.__setattr__(self, name, int(v))

    @property
    def params(self):
        return {"k": self.k, "n": self.n}

    @property
    def omega_coefficient(self) -> int:
        """The ``m`` in the label ``omega_m = (m/2) A``."""
        return self.n

    @property
    def two_form_label(self):
        return f"omega_{self.n} = ({self.n}/2) A"


@dataclass(frozen=True)
class ProjectiveSpace(PrequantDescriptor):
    n: int
    model: ClassVar[str] = "ProjectiveSpace"

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"CP^n needs a positive integer n, got {self.n}")

    @property
    def params(self):
        return {"n": self.n}

    @property
    def omega_fs_coefficient(self) -> Fraction:
        """t with [omega / 2 pi] = t [omega_FS]."""
        return Fraction(-(self.n + 1), 2)

    @property
    def two_form_label(self):
        return f"-({self.n + 1}/2) 2pi omega_FS"


@dataclass(frozen=True)
class Product(PrequantDescriptor):
    left: PrequantDescriptor
    right: PrequantDescriptor
    # "anti-diagonal" uses both factors' circle actions, "M-action" only the left one
    action: str = "anti-diagonal"
    model: ClassVar[str] = "Product"

    def __post_init__(self):
        if self.action not in ("anti-diagonal", "M-action"):
            raise ValueError(f"unknown product action {self.action!r}")

    @property
    def params(self):
        return {"left": self.left.to_json(), "right": self.right.to_json(), "action": self.action}

    @property
    def two_form_label(self):
        return f"({self.left.two_form_label}) + ({self.right.two_form_label})"


@dataclass(frozen=True)
class LevelSet(PrequantDescriptor):
    """The level set Phi(m) -+ |u|^2 = alpha inside M x C."""

    base: PrequantDescriptor
    ell: int
    alpha: float
    side: str = "positive"
    model: ClassVar[str] = "LevelSet"

    def __post_init__(self):
        object.__setattr__(self, "ell", require_odd(self.ell))
        if self.side not in ("positive", "negative"):
            raise ValueError(f"side must be 'positive' or 'negative', got {self.side!r}")

    @property
    def params(self):
        return {"base": self.base.to_json(), "ell": self.ell, "alpha": self.alpha,
                "side": self.side}

    @property
    def two_form_label(self):
        plane = ComplexPlane(self.ell, negative=self.side == "negative")
        return f"(({self.base.two_form_label}) + ({plane.two_form_label}))|Z"
