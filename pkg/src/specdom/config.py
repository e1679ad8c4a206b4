"""Run configuration with environment-variable overrides.

Every field can be overridden by an environment variable with the
``SPECDOM_`` prefix (``SPECDOM_TOL``, ``SPECDOM_MAX_TREE_N``,
``SPECDOM_MAX_GRAPH_N``, ``SPECDOM_WORKERS``, ``SPECDOM_OUTPUT_FORMAT``,
``SPECDOM_CHECKPOINT``). Tolerances parse as exact rationals: either
"p/q" or a decimal literal.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidArgumentError

ENV_PREFIX = "SPECDOM_"

OUTPUT_FORMATS = ("json", "csv", "table")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer, or a decimal/scientific literal exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        pass
    try:
        # Fraction rejects "1e-6" before Python 3.12; go through Decimal.
        from decimal import Decimal, InvalidOperation

        try:
            return Fraction(Decimal(text.strip()))
        except InvalidOperation:
            raise ValueError
    except ValueError:
        raise InvalidArgumentError(f"not a rational number: {text!r}") from None


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by the CLI and the verification harness."""

    tol: Fraction = field(default_factory=lambda: Fraction(1, 10**6))
    max_tree_n: int = 18
    max_graph_n: int = 8
    workers: int = 1
    output_format: str = "json"
    checkpoint_path: str | None = None

    def __post_init__(self) -> None:
        if self.tol <= 0:
            raise InvalidArgumentError("tol must be positive")
        if self.max_tree_n < 1 or self.max_graph_n < 1:
            raise InvalidArgumentError("size limits must be >= 1")
        if self.workers < 1:
            raise InvalidArgumentError("workers must be >= 1")
        if self.output_format not in OUTPUT_FORMATS:
            raise InvalidArgumentError(
                f"output_format must be one of {OUTPUT_FORMATS}"
            )

    @classmethod
    def from_env(cls, env: dict[str, str] | None = None, **overrides) -> "RunConfig":
        """Build a config from os.environ (or a mapping), then apply overrides."""
        src = os.environ if env is None else env
        kwargs: dict = {}
        if ENV_PREFIX + "TOL" in src:
            kwargs["tol"] = parse_rational(src[ENV_PREFIX + "TOL"])
        for name, key in (
            ("max_tree_n", "MAX_TREE_N"),
            ("max_graph_n", "MAX_GRAPH_N"),
            ("workers", "WORKERS"),
        ):
            if ENV_PREFIX + key in src:
                try:
                    kwargs[name] = int(src[ENV_PREFIX + key])
                except ValueError:
                    raise InvalidArgumentError(
                        f"{ENV_PREFIX + key} must be an integer"
                    ) from None
        if ENV_PREFIX + "OUTPUT_FORMAT" in src:
            kwargs["output_format"] = src[ENV_PREFIX + "OUTPUT_FORMAT"]
        if ENV_PREFIX + "CHECKPOINT" in src:
            kwargs["checkpoint_path"] = src[ENV_PREFIX + "CHECKPOINT"]
        kwargs.update(overrides)
        return cls(**kwargs)
