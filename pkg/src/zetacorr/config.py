"""Flat key-value experiment configuration.

Format: UTF-8 text, one `key = value` per line, '#' comments.  Keys:

    zeros                path of the ordinate table (falls back to the
                         ZETA_ZEROS_PATH env var, then the bundled table)
    tuples               semicolon-separated coefficient tuples, e.g.
                         ``1,1,-2; 1,1,-1,-1``
    T                    comma-separated list of cutoffs
    h_center, h_width    weight-function parameters (default 20, 2)
    series_tolerance     certified series tail tolerance (default 1e-3;
                         tighter values need rapidly growing sieves at
                         kernel height 2)
    quadrature_tolerance main-term integration tolerance (default 1e-6)
    output_dir           where reports are written (default '.')

Every tuple is validated before any computation starts.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DataError
from .tuples import CoefficientTuple
from .correlation import parse_tuple_text
from .zeros import bundled_zeros_path

ENV_ZEROS = "ZETA_ZEROS_PATH"


@dataclass
class ExperimentConfig:
    zeros_path: Path
    tuples: list[CoefficientTuple]
    t_list: list[float]
    h_center: float = 20.0
    h_width: float = 2.0
    series_tolerance: float = 1e-3
    quadrature_tolerance: float = 1e-6
    output_dir: Path = field(default_factory=lambda: Path("."))


def default_zeros_path() -> Path:
    env = os.environ.get(ENV_ZEROS)
    return Path(env) if env else bundled_zeros_path()


def parse_config_text(text: str, source: str = "<config>") -> ExperimentConfig:
    """Parse config text; raises DataError naming the offending line."""
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise DataError(f"{source}: line {lineno}: expected 'key = value'")
        key, _, value = stripped.partition("=")
        raw[key.strip()] = value.strip()
    try:
        tuples_text = raw.get("tuples", "")
        tuples = [
            parse_tuple_text(part)
            for part in tuples_text.split(";")
            if part.strip()
        ]
        if not tuples:
            raise ValueError("config must list at least one tuple")
        t_list = [float(part) for part in raw.get("T", "").split(",") if part.strip()]
        if not t_list:
            raise ValueError("config must list at least one T")
        zeros_path = Path(raw["zeros"]) if "zeros" in raw else default_zeros_path()
        return ExperimentConfig(
            zeros_path=zeros_path,
            tuples=tuples,
            t_list=t_list,
            h_center=float(raw.get("h_center", 20.0)),
            h_width=float(raw.get("h_width", 2.0)),
            series_tolerance=float(raw.get("series_tolerance", 1e-3)),
            quadrature_tolerance=float(raw.get("quadrature_tolerance", 1e-6)),
            output_dir=Path(raw.get("output_dir", ".")),
        )
    except (ValueError, KeyError) as exc:
        raise DataError(f"{source}: {exc}") from exc


def load_config(path) -> ExperimentConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read config {path}: {exc}") from exc
    return parse_config_text(text, source=str(path))
