from __future__ import annotations

import os
from dataclasses import dataclass, field, fields
from typing import Optional

from .assembly import DEFAULT_MAX_STATES
from .coxeter import DEFAULT_MAX_D, DEFAULT_MAX_WORD_LEN
from .errors import InputError
from .permutahedron import check_epsilons, default_epsilons


@dataclass
class Budgets:
    max_states: int = DEFAULT_MAX_STATES
    max_d: int = DEFAULT_MAX_D
    max_word_len: int = DEFAULT_MAX_WORD_LEN
    budget_seconds: Optional[float] = None

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if v is not None and v <= 0:
                raise InputError(f"budget {f.name} must be positive", budget=f.name, value=v)


@dataclass
class RunConfig:
    command: str
    input: Optional[str] = None
    output: Optional[str] = None
    report: Optional[str] = None
    budgets: Budgets = field(default_factory=Budgets)
    epsilon_base: int = 4
    emit_geometry: bool = False
    exact_gamma: bool = True
    verbose: int = 0

    def epsilons(self, n: int) -> tuple:
        eps = default_epsilons(n, self.epsilon_base)
        check_epsilons(eps)
        return eps


ENV_NAMES = {
    "max_states": "MAX_STATES",
    "max_d": "MAX_D",
    "max_word_len": "MAX_WORD_LEN",
    "budget_seconds": "BUDGET_SECONDS",
    "epsilon_base": "EPSILON_BASE",
}


def env_value(name: str, cast, environ=None):
    environ = os.environ if environ is None else environ
    raw = environ.get(ENV_NAMES[name])
    if raw is None or raw == "":
        return None
    try:
        return cast(raw)
    except ValueError:
        raise InputError(f"environment variable {ENV_NAMES[name]}={raw!r} is not a number") from None
