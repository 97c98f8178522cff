"""Suite registry and configuration for the batch verification harness.

Every verification entry point in the library is registered here under a
stable kebab-case name, together with an adapter that feeds it the shared
configuration.  Suites that do not consume a given knob simply ignore it;
knobs left unset fall back to each suite's own documented default.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional

from .bigon import verify_cobraiding, verify_hopf_axioms
from .braided import verify_braided_associativity, verify_phi_braided
from .frobenius import (
    negative_control,
    verify_annulus_TN,
    verify_phi_homomorphism,
    verify_square_lemma,
)
from .pairing import verify_dual_frobenius, verify_pairing_tables
from .qcomb import verify_root_identities
from .report import Report
from .torus import (
    verify_freshman_dream,
    verify_monogon_noncentrality,
    verify_torus_chebyshev,
)

__all__ = [
    "SuiteConfig",
    "ConfigError",
    "SUITES",
    "suite_names",
    "parse_orders",
    "parse_config_file",
    "run_suites",
]


class ConfigError(ValueError):
    """Unknown suite name or malformed configuration value."""


@dataclass
class SuiteConfig:
    suites: List[str] = field(default_factory=list)
    orders: List[int] = field(default_factory=lambda: list(range(1, 25)))
    degree_bound: Optional[int] = None
    m_max: Optional[int] = None
    samples: Optional[int] = None
    seed: int = 0
    format: str = "text"

    def validate(self) -> None:
        for name in self.suites:
            if name not in SUITES:
                known = ", ".join(suite_names())
                raise ConfigError(f"unknown suite {name!r} (known: {known})")
        if not self.orders or any(n < 1 for n in self.orders):
            raise ConfigError("orders must be a nonempty list of integers >= 1")
        if self.samples is not None and self.samples < 1:
            raise ConfigError("samples must be >= 1")
        if self.degree_bound is not None and self.degree_bound < 0:
            raise ConfigError("degree-bound must be >= 0")
        if self.m_max is not None and self.m_max < 1:
            raise ConfigError("m-max must be >= 1")
        if self.format not in ("text", "json"):
            raise ConfigError("format must be 'text' or 'json'")


def _or(value: Optional[int], default: int) -> int:
    return default if value is None else value


SUITES: Dict[str, Callable[[SuiteConfig], Report]] = {
    "qfacts": lambda cfg: verify_root_identities(cfg.orders),
    "freshman": lambda cfg: verify_freshman_dream(cfg.orders),
    "torus-chebyshev": lambda cfg: verify_torus_chebyshev(cfg.orders),
    "monogon": lambda cfg: verify_monogon_noncentrality(_or(cfg.m_max, 6)),
    "hopf-axioms": lambda cfg: verify_hopf_axioms(
        _or(cfg.degree_bound, 4), _or(cfg.samples, 200), cfg.seed
    ),
    "cobraiding": lambda cfg: verify_cobraiding(_or(cfg.samples, 200), cfg.seed),
    "pairing-tables": lambda cfg: verify_pairing_tables(
        _or(cfg.m_max, 8), _or(cfg.m_max, 8)
    ),
    "dual-frobenius": lambda cfg: verify_dual_frobenius(
        cfg.orders,
        samples=_or(cfg.samples, 100),
        seed=cfg.seed,
        degree_bound=_or(cfg.degree_bound, 6),
    ),
    "phi-homomorphism": lambda cfg: verify_phi_homomorphism(cfg.orders),
    "annulus": lambda cfg: verify_annulus_TN(cfg.orders),
    "square": lambda cfg: verify_square_lemma(_or(cfg.m_max, 10), cfg.orders),
    "negative-control": lambda cfg: negative_control(cfg.orders),
    "braided-associativity": lambda cfg: verify_braided_associativity(
        _or(cfg.samples, 200), cfg.seed
    ),
    "phi-braided": lambda cfg: verify_phi_braided(
        cfg.orders, _or(cfg.samples, 100), cfg.seed
    ),
}


def suite_names() -> List[str]:
    return list(SUITES)


def parse_orders(text: str) -> List[int]:
    """Orders given either as a comma list `1,3,12` or a range `A..B`.

    Every order must be an integer >= 1; empty lists and empty items are
    rejected so a typo never silently verifies nothing.
    """
    stripped = text.strip()
    try:
        if ".." in stripped:
            lo_text, hi_text = stripped.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if lo < 1 or lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        orders = [int(part) for part in stripped.split(",")]
        if not orders or any(n < 1 for n in orders):
            raise ValueError
        return orders
    except ValueError:
        raise ConfigError(f"malformed orders {text!r}: expected N,N,... or A..B") from None


_INT_KEYS = {"degree_bound", "m_max", "samples", "seed"}


def parse_config_file(path: str, base: SuiteConfig) -> SuiteConfig:
    """Line-oriented `key = value` file; blank lines and # comments ignored."""
    updates: Dict[str, object] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected `key = value`, got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key == "suites":
            updates["suites"] = [part.strip() for part in value.split(",") if part.strip()]
        elif key == "orders":
            updates["orders"] = parse_orders(value)
        elif key in _INT_KEYS:
            try:
                updates[key] = int(value)
            except ValueError:
                raise ConfigError(f"{path}:{lineno}: {key} must be an integer, got {value!r}") from None
        elif key == "format":
            updates["format"] = value
        else:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
    return replace(base, **updates)


def run_suites(cfg: SuiteConfig) -> List[Report]:
    """Run the configured suites in registry order; deterministic given seed."""
    cfg.validate()
    reports: List[Report] = []
    for name in cfg.suites:
        reports.append(SUITES[name](cfg))
    return reports
