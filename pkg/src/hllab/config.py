"""Flat ``key = value`` configuration files and the frozen check thresholds."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

__all__ = ["parse_flat_config", "read_flat_config", "load_thresholds"]


def parse_flat_config(text: str, source: str = "<config>") -> dict[str, str]:
    """Parse ``key = value`` lines; blank lines and ``#`` comments are skipped."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep or not key.strip():
            raise ValueError(f"{source}:{lineno}: expected key = value, got {raw!r}")
        out[key.strip()] = value.strip()
    return out


def read_flat_config(path: str | Path) -> dict[str, str]:
    p = Path(path)
    return parse_flat_config(p.read_text(), str(p))


def load_thresholds() -> dict[str, float]:
    text = resources.files("hllab").joinpath("data/thresholds.cfg").read_text()
    return {k: float(v) for k, v in parse_flat_config(text, "thresholds.cfg").items()}
