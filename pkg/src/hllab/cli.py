"""Command-line front end: ``hllab norm``, ``hllab verify`` and ``hllab suite``.

Exit codes are a stable contract: 0 pass, 1 fail, 2 usage, 3 resolution,
4 inconclusive.  Every report embeds the effective run configuration, and
feeding a report back through ``--config`` reruns it identically.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import logging
import math
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .coeff_core import CoefficientSeries, cauchy_power, lacunary, monomial
from .config import parse_flat_config
from .multipliers import Resolution, ResolutionError, generator_from_tag, parse_space, space_norm
from .theorems import REGISTRY, VerificationReport, run_check

__all__ = ["RunConfig", "main", "parse_function", "cmd_norm", "cmd_verify", "cmd_suite"]

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_RESOLUTION, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4
VERDICT_EXIT = {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}

log = logging.getLogger("hllab")

# keys of RunConfig that are not check parameters
_RUN_KEYS = ("command", "check_id", "seed", "degrees", "control", "M", "K", "grade", "out", "format")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    check_id: str | None = None
    params: dict = field(default_factory=dict)
    seed: int = 0
    degrees: tuple[int, ...] | None = None
    control: str | None = None
    M: int | None = None
    K: int = 512
    grade: float = 3.0
    out: str | None = None
    format: str = "json"

    def resolution(self) -> Resolution:
        return Resolution(M=self.M, K=self.K, grade=self.grade)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["degrees"] = None if self.degrees is None else list(self.degrees)
        d["params"] = {k: _scalar_out(v) for k, v in sorted(self.params.items())}
        return d


# value parsing ----------------------------------------------------------------


def _scalar_out(v):
    if isinstance(v, float) and math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return v


def _scalar(text) -> object:
    """``inf``, ``none``, numbers, otherwise the string itself."""
    if not isinstance(text, str):
        return text
    t = text.strip()
    low = t.lower()
    if low in ("inf", "+inf", "infinity"):
        return math.inf
    if low == "-inf":
        return -math.inf
    if low in ("none", "null"):
        return None
    try:
        return float(t)
    except ValueError:
        return t


def _degrees(value) -> tuple[int, ...] | None:
    if value is None or value == "":
        return None
    items = value.split(",") if isinstance(value, str) else value
    try:
        degs = tuple(int(str(x).strip()) for x in items)
    except ValueError as exc:
        raise UsageError(f"bad degree list {value!r}") from exc
    if not degs or any(d < 1 for d in degs):
        raise UsageError("degrees must be positive integers")
    return degs


def _opt_int(value) -> int | None:
    if value is None or value == "" or value == "None":
        return None
    try:
        return int(value)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"expected an integer, got {value!r}") from exc


def _load_config_file(path: str) -> dict:
    """Flat ``key = value`` text, or a JSON report whose ``config`` is reused."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: invalid JSON: {exc}") from exc
        cfg = dict(data.get("config", data))
        params = cfg.pop("params", None) or {}
        cfg.pop("command", None)
        return {**cfg, **params}
    try:
        return parse_flat_config(text, path)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_function(spec: str) -> CoefficientSeries:
    """``monomial:n``, ``cauchy:gamma:N``, ``random:deg:seed``, ``lacunary:N`` or ``file:path``."""
    name, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    try:
        if name == "monomial" and len(args) == 1:
            return monomial(int(args[0]))
        if name == "cauchy" and len(args) == 2:
            return cauchy_power(float(args[0]), int(args[1]))
        if name == "random" and len(args) == 2:
            rng = np.random.default_rng(int(args[1]))
            return generator_from_tag("random")(int(args[0]), rng)
        if name == "lacunary" and len(args) == 1:
            return lacunary(int(args[0]))
        if name == "file" and rest:
            return _read_coeff_file(rest)
    except (ValueError, OSError) as exc:
        raise UsageError(f"bad function spec {spec!r}: {exc}") from exc
    raise UsageError(f"bad function spec {spec!r}")


def _read_coeff_file(path: str) -> CoefficientSeries:
    vals = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) != 2:
            raise ValueError(f"{path}:{lineno}: expected 're im'")
        vals.append(complex(float(line[0]), float(line[1])))
    if not vals:
        raise ValueError(f"{path}: no coefficients")
    return CoefficientSeries(np.array(vals))


# output ------------------------------------------------------------------------


def atomic_write(path: Path, text: str) -> None:
    """Write through a temporary file in the same directory, then rename."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    buf = io.StringIO()
    # the run configuration rides along as flat comment lines
    for k, v in report.config.items():
        buf.write(f"# {k} = {json.dumps(v, sort_keys=True)}\n")
    w = csv.DictWriter(buf, ["check_id", "degree", "generator", "ratio", "verdict"], lineterminator="\n")
    w.writeheader()
    for row in report.csv_rows():
        w.writerow({**row, "ratio": repr(float(row["ratio"]))})
    return buf.getvalue()


# commands ----------------------------------------------------------------------


def cmd_norm(function_spec: str, space_spec: str, resolution: Resolution) -> float:
    f = parse_function(function_spec)
    try:
        space = parse_space(space_spec, resolution)
    except ValueError as exc:
        raise UsageError(f"bad space spec {space_spec!r}: {exc}") from exc
    return space_norm(f, space)


def _check_params(check_id: str, raw: dict) -> dict:
    func = REGISTRY[check_id].func
    allowed = set(inspect.signature(func).parameters) - {"degrees", "seed", "control", "resolution", "family"}
    bad = sorted(set(raw) - allowed)
    if bad:
        raise UsageError(f"unknown parameter(s) for {check_id}: {', '.join(bad)}")
    return {k: _scalar(v) for k, v in raw.items()}


def _run(cfg: RunConfig) -> VerificationReport:
    kwargs = dict(seed=cfg.seed, control=cfg.control, resolution=cfg.resolution())
    if cfg.degrees is not None:
        kwargs["degrees"] = cfg.degrees
    accepted = inspect.signature(REGISTRY[cfg.check_id].func).parameters
    # deterministic checks take no seed
    kwargs = {k: v for k, v in kwargs.items() if k in accepted}
    report = run_check(cfg.check_id, cfg.params, **kwargs)
    return report.with_config(cfg.to_dict())


def cmd_verify(cfg: RunConfig) -> VerificationReport:
    report = _run(cfg)
    if cfg.out:
        atomic_write(Path(cfg.out), render_report(report, cfg.format))
    return report


def _threads() -> int:
    raw = os.environ.get("HLLAB_THREADS")
    if raw is None or raw == "":
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError as exc:
        raise UsageError(f"HLLAB_THREADS must be an integer, got {raw!r}") from exc
    if n < 1:
        raise UsageError("HLLAB_THREADS must be >= 1")
    return n


def _suite_job(cfg: RunConfig) -> str:
    report = _run(cfg)
    ext = "json" if cfg.format == "json" else "csv"
    atomic_write(Path(cfg.out) / f"{cfg.check_id}.{ext}", render_report(report, cfg.format))
    return report.verdict


def cmd_suite(cfg: RunConfig) -> dict[str, str]:
    """Run every registered check with its defaults; returns ``{check_id: verdict}``."""
    out = Path(cfg.out or "hllab-suite")
    jobs = [RunConfig(**{**asdict(cfg), "command": "verify", "check_id": cid, "params": {}, "out": str(out)})
            for cid in REGISTRY]
    workers = min(_threads(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_suite_job, jobs))
    else:
        verdicts = [_suite_job(j) for j in jobs]
    summary = dict(sorted(zip(REGISTRY, verdicts)))
    atomic_write(out / "summary.json", json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return summary


def suite_exit(summary: dict[str, str]) -> int:
    verdicts = set(summary.values())
    if "fail" in verdicts:
        return EXIT_FAIL
    if "inconclusive" in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


# argument handling ---------------------------------------------------------------


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="flat key = value file, or a JSON report to rerun")
    p.add_argument("--seed", type=int)
    p.add_argument("--degrees", help="comma-separated degree sweep, e.g. 64,128,256")
    p.add_argument("--control", choices=["inverted"])
    p.add_argument("--M", type=int, help="circle samples (power of two; default automatic)")
    p.add_argument("--K", type=int, help="radial grid nodes")
    p.add_argument("--grade", type=float, help="radial grid grading exponent")
    p.add_argument("--format", choices=["json", "csv"])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hllab", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    n = sub.add_parser("norm", help="print the norm of a polynomial in a space")
    n.add_argument("--fn", required=True, help="monomial:n | cauchy:g:N | random:deg:seed | lacunary:N | file:path")
    n.add_argument("--space", required=True, help="e.g. hl:0.5:1, berg:2:2:1, blocked:2:inf:1")
    n.add_argument("--M", type=int)
    n.add_argument("--K", type=int, default=512)
    n.add_argument("--grade", type=float, default=3.0)

    v = sub.add_parser("verify", help="run one registered check")
    v.add_argument("check_id", nargs="?")
    v.add_argument("--out", help="report path (default: print JSON to stdout)")
    _add_run_flags(v)

    s = sub.add_parser("suite", help="run every registered check")
    s.add_argument("--out", help="output directory (default hllab-suite)")
    _add_run_flags(s)
    return ap


def _extra_params(extra: list[str]) -> dict:
    """``--name value`` pairs left over by argparse become check parameters."""
    out: dict[str, str] = {}
    i = 0
    while i < len(extra):
        tok = extra[i]
        if not tok.startswith("--") or len(tok) == 2:
            raise UsageError(f"unexpected argument {tok!r}")
        key, eq, val = tok[2:].partition("=")
        if not eq:
            if i + 1 >= len(extra):
                raise UsageError(f"missing value for {tok}")
            i += 1
            val = extra[i]
        out[key.replace("-", "_")] = val
        i += 1
    return out


def _merge_config(command: str, args: argparse.Namespace, extra: dict) -> RunConfig:
    file_vals = _load_config_file(args.config) if args.config else {}
    vals = dict(file_vals)
    # flags override file values
    for key in ("check_id", "seed", "degrees", "control", "M", "K", "grade", "out", "format"):
        flag = getattr(args, key, None)
        if flag is not None:
            vals[key] = flag
    params = {k: v for k, v in vals.items() if k not in _RUN_KEYS}
    params.update(extra)
    check_id = vals.get("check_id")
    if command == "verify":
        if not check_id:
            raise UsageError("verify needs a check id")
        if check_id not in REGISTRY:
            raise UsageError(f"unknown check {check_id!r}; known: {', '.join(REGISTRY)}")
        params = _check_params(check_id, params)
    elif params:
        raise UsageError(f"suite runs frozen defaults; unexpected parameter(s): {', '.join(sorted(params))}")
    control = vals.get("control")
    if control in ("", "none", "None"):
        control = None
    if control not in (None, "inverted"):
        raise UsageError(f"unknown control {control!r}")
    fmt = vals.get("format") or "json"
    if fmt not in ("json", "csv"):
        raise UsageError(f"unknown format {fmt!r}")
    try:
        return RunConfig(
            command=command,
            check_id=check_id if command == "verify" else None,
            params=params,
            seed=int(vals.get("seed", 0)),
            degrees=_degrees(vals.get("degrees")),
            control=control,
            M=_opt_int(vals.get("M")),
            K=int(vals.get("K", 512)),
            grade=float(vals.get("grade", 3.0)),
            out=vals.get("out"),
            format=fmt,
        )
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args, extra = ap.parse_known_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command == "norm":
            if extra:
                raise UsageError(f"unexpected argument(s): {' '.join(extra)}")
            try:
                res = Resolution(M=args.M, K=args.K, grade=args.grade)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            print(f"{cmd_norm(args.fn, args.space, res):.12f}")
            return EXIT_PASS
        cfg = _merge_config(args.command, args, _extra_params(extra))
        try:
            cfg.resolution()
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if args.command == "verify":
            report = cmd_verify(cfg)
            if not cfg.out:
                sys.stdout.write(render_report(report, cfg.format))
            log.info("%s: %s", cfg.check_id, report.verdict)
            return VERDICT_EXIT[report.verdict]
        summary = cmd_suite(cfg)
        sys.stdout.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")
        return suite_exit(summary)
    except ResolutionError as exc:
        print(f"hllab: resolution error: {exc}", file=sys.stderr)
        return EXIT_RESOLUTION
    except UsageError as exc:
        print(f"hllab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # invalid parameter combinations reported by the checks
        print(f"hllab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
