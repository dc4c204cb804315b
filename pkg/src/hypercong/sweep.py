"""Parameter sweeps over the checker registry, and JSON/CSV reports."""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
import random
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

from .exactnum import INFINITY, odd_primes
from .theorems import REGISTRY, CheckParams, Status, Verdict, in_main_range, least_positive_residue, run_check

SCHEMA_VERSION = "1.0"
CSV_COLUMNS = ["check_id", "p", "r", "a", "s", "claimed", "observed_valuation", "residual", "status"]

# fixed enumeration bounds for checks that are not indexed by a prime
KM_MAX_A = 10
KM_MAX_M = 3
SIGN_MAX_M = 15
SIGN_MAX_R = 6
DERIV_MAX_M = 10
DERIV_MAX_K = 10
SHIFT_VECTORS = 20


class ConfigError(ValueError):
    pass


@dataclass
class SweepConfig:
    checks: list
    p_min: int = 3
    p_max: int = 31
    r_set: list = field(default_factory=lambda: [1, 2, 3])
    a_policy: str | list = "all-valid"
    lift_policy: str | dict = "all"
    mode: str = "rational"
    output: dict | None = None
    # optional: check_id -> claimed exponent, to point the engine at other conjectures
    claims: dict = field(default_factory=dict)

    def __post_init__(self):
        self.validate()

    def validate(self):
        if not self.checks:
            raise ConfigError("checks must be a non-empty list")
        unknown = [c for c in self.checks if c not in REGISTRY]
        if unknown:
            raise ConfigError(f"unknown check ids: {unknown}")
        if not isinstance(self.p_min, int) or not isinstance(self.p_max, int):
            raise ConfigError("p_min and p_max must be integers")
        if self.p_min < 3:
            raise ConfigError("p_min must be at least 3")
        if self.p_max < self.p_min:
            raise ConfigError("p_max must be >= p_min")
        if not all(isinstance(r, int) and r >= 0 for r in self.r_set):
            raise ConfigError("r_set must hold non-negative integers")
        if self.a_policy != "all-valid":
            if not isinstance(self.a_policy, list) or not all(isinstance(a, int) for a in self.a_policy):
                raise ConfigError("a_policy must be 'all-valid' or a list of integers")
        if self.lift_policy != "all":
            lp = self.lift_policy
            if not isinstance(lp, dict) or set(lp) != {"sample", "seed"}:
                raise ConfigError("lift_policy must be 'all' or {'sample': N, 'seed': S}")
            if not isinstance(lp["sample"], int) or lp["sample"] < 1 or not isinstance(lp["seed"], int):
                raise ConfigError("lift sample size and seed must be integers (size >= 1)")
        if self.mode not in ("rational", "modular", "cross-check"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.output is not None:
            if not isinstance(self.output, dict) or "path" not in self.output:
                raise ConfigError("output must be {'path': ..., 'format': 'json'|'csv'}")
            if self.output.get("format", "json") not in ("json", "csv"):
                raise ConfigError("output format must be json or csv")
        for cid, c in self.claims.items():
            if cid not in REGISTRY or not isinstance(c, int):
                raise ConfigError(f"bad claim override {cid!r}: {c!r}")

    @classmethod
    def from_dict(cls, d: dict) -> SweepConfig:
        known = set(cls.__dataclass_fields__)
        extra = set(d) - known
        if extra:
            raise ConfigError(f"unknown config fields: {sorted(extra)}")
        if "checks" not in d:
            raise ConfigError("config needs 'checks'")
        try:
            return cls(**d)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None

    @classmethod
    def load(cls, path) -> SweepConfig:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return asdict(self)


# ---------------------------------------------------------------- enumeration

def _lifts(cfg: SweepConfig, p: int, check_id: str) -> list[int]:
    if cfg.lift_policy == "all":
        return list(range(p))
    n, seed = cfg.lift_policy["sample"], cfg.lift_policy["seed"]
    rng = random.Random(f"{seed}:{check_id}:{p}")
    return sorted(rng.sample(range(p), min(n, p)))


def _a_values(cfg: SweepConfig, valid) -> list[int]:
    if cfg.a_policy == "all-valid":
        return list(valid)
    allowed = set(valid)
    return [a for a in cfg.a_policy if a in allowed]


def _primes(cfg):
    return odd_primes(cfg.p_min, cfg.p_max)


def _enum_main(cfg, cid):
    for p in _primes(cfg):
        for r in cfg.r_set:
            if r < 1:
                continue
            for a in _a_values(cfg, [a for a in range(1, p) if in_main_range(p, r, a)]):
                for s in _lifts(cfg, p, cid):
                    yield CheckParams(p=p, r=r, a=a, s=s)


def _enum_sun(cfg, cid):
    for p in _primes(cfg):
        for r in cfg.r_set:
            if r < 2:
                continue
            for a in _a_values(cfg, [a for a in range(1, p) if a * (2 * r + 1) <= p + 1]):
                for s in _lifts(cfg, p, cid):
                    yield CheckParams(p=p, r=r, a=a, s=s, x=-2 * a + s * p)


def _enum_eq11(cfg, cid):
    for p in _primes(cfg):
        for a in _a_values(cfg, [a for a in range(1, p) if 3 * a <= p - 1]):
            for s in _lifts(cfg, p, cid):
                yield CheckParams(p=p, a=a, s=s, x=-2 * a + s * p)


def _enum_p1mod4(cfg, cid):
    for p in _primes(cfg):
        if p % 4 == 1:
            yield CheckParams(p=p)


def _enum_km(cfg, cid):
    for r in cfg.r_set:
        if r < 1:
            continue
        for ms in itertools.product(range(KM_MAX_M + 1), repeat=r):
            for a in _a_values(cfg, range(sum(ms) + 1, KM_MAX_A + 1)):
                yield CheckParams(a=a, r=r, m_list=ms)


def _enum_sign(cfg, cid):
    for m in range(1, SIGN_MAX_M + 1, 2):
        for r in range(0, SIGN_MAX_R + 1, 2):
            yield CheckParams(m=m, r=r)


def _enum_harmonic(cfg, cid):
    for p in _primes(cfg):
        for r in cfg.r_set:
            for a in _a_values(cfg, range(0, (p - 1) // 2 + 1)):
                yield CheckParams(p=p, a=a, r=r)


def random_shift_vectors(p: int, a: int, r: int, count: int = SHIFT_VECTORS):
    """Deterministic pseudo-random (top, bottom) shift vectors for one (p, a, r)."""
    rng = random.Random(f"shift:{p}:{a}:{r}")
    width = 2 * r + 1
    for _ in range(count):
        yield (tuple(rng.randint(-3, 3) for _ in range(width)),
               tuple(rng.randint(-3, 3) for _ in range(width - 1)))


def _enum_shifted(cfg, cid):
    for p in _primes(cfg):
        for r in cfg.r_set:
            for a in _a_values(cfg, range(1, (p - 1) // 2 + 1)):
                for i, (s_vec, t_vec) in enumerate(random_shift_vectors(p, a, r)):
                    yield CheckParams(p=p, a=a, r=r, s=i, shifts=s_vec, bottom_shifts=t_vec)


def _enum_deriv(cfg, cid):
    for m in range(1, DERIV_MAX_M + 1):
        for k in range(DERIV_MAX_K + 1):
            yield CheckParams(m=m, k=k)


def _enum_chain(cfg, cid):
    for p in _primes(cfg):
        for r in cfg.r_set:
            if r < 1 or (2 * r + 1) % p == 0:
                continue
            for a in _a_values(cfg, [a for a in range(1, p) if in_main_range(p, r, a)]):
                yield CheckParams(p=p, a=a, r=r)


def _enum_taylor(cfg, cid):
    for p in _primes(cfg):
        for r in cfg.r_set:
            if r < 1:
                continue
            for a in _a_values(cfg, [a for a in range(1, p) if in_main_range(p, r, a)]):
                for s in _lifts(cfg, p, cid):
                    yield CheckParams(p=p, a=a, r=r, s=s)


def _enum_np(cfg, cid):
    # odd entries of r_set serve as the multiplier n
    for p in _primes(cfg):
        for n in cfg.r_set:
            if n < 1 or n % 2 == 0:
                continue
            for a in _a_values(cfg, range(1, (p - 1) // 2 + 1)):
                for s in _lifts(cfg, p, cid):
                    yield CheckParams(p=p, n=n, a=a, s=s)


def _enum_rstar(cfg, cid):
    for p in _primes(cfg):
        h = (p - 1) // 2
        for r in cfg.r_set:
            if r < 1 or r % h == 0:
                continue
            rs = least_positive_residue(r, h)
            for a in _a_values(cfg, [a for a in range(1, p) if in_main_range(p, rs, a)]):
                for s in _lifts(cfg, p, cid):
                    yield CheckParams(p=p, r=r, a=a, s=s)


ENUMERATORS = {
    "main_theorem": _enum_main,
    "sun_conjecture": _enum_sun,
    "eq_1_1": _enum_eq11,
    "catalan_mod_p2": _enum_p1mod4,
    "3F2_half": _enum_p1mod4,
    "karlsson_minton": _enum_km,
    "sign_symmetry": _enum_sign,
    "harmonic_weighted": _enum_harmonic,
    "shifted_congruence": _enum_shifted,
    "derivative_identity": _enum_deriv,
    "phi_prime_chain": _enum_chain,
    "taylor_step": _enum_taylor,
    "remark_np": _enum_np,
    "remark_rstar": _enum_rstar,
}


def enumerate_tasks(cfg: SweepConfig) -> list[tuple[str, CheckParams]]:
    return [(cid, params) for cid in cfg.checks for params in ENUMERATORS[cid](cfg, cid)]


# --------------------------------------------------------------------- report

@dataclass
class Report:
    config: SweepConfig
    verdicts: list
    generated_at: str = ""
    schema_version: str = SCHEMA_VERSION

    @property
    def summary(self) -> dict:
        out = {}
        for v in self.verdicts:
            row = out.setdefault(v.check_id, {s.value: 0 for s in Status} | {"min_valuation": None})
            row[v.status.value] += 1
            if v.status in (Status.PASS, Status.FAIL, Status.OBSERVED) and v.observed is not None:
                cur = row["min_valuation"]
                obs = "inf" if v.observed == INFINITY else v.observed
                if cur is None or cur == "inf" or (obs != "inf" and obs < cur):
                    row["min_valuation"] = obs
        return out

    @property
    def failures(self) -> list:
        return [v for v in self.verdicts if v.status is Status.FAIL]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "generated_at": self.generated_at,
            "config": self.config.to_dict(),
            "summary": self.summary,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for v in self.verdicts:
            d = v.to_dict()
            pr = d["params"]
            w.writerow([v.check_id, pr.get("p", ""), pr.get("r", ""), pr.get("a", ""), pr.get("s", ""),
                        d["claimed"], "" if d["observed_valuation"] is None else d["observed_valuation"],
                        d["residual"] or "", d["status"]])
        return buf.getvalue()

    def write(self, path, fmt: str = "json"):
        """Write atomically: temp file in the target directory, then rename."""
        text = self.to_csv() if fmt == "csv" else self.to_json()
        directory = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".report-", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def _run_task(task):
    cid, params, mode, claimed = task
    return run_check(cid, params, mode, claimed)


def _sort_key(v: Verdict):
    return (v.check_id, v.params.sort_key())


def available_cores() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def run_sweep(cfg: SweepConfig, workers: int | None = None, write: bool = True) -> Report:
    """Evaluate every gate-passing tuple of every configured check.

    ``workers`` defaults to the number of available cores; verdict order is
    fixed after the parallel phase, so it does not affect the report.
    Raises ``ConfigError`` for bad configs and ``OSError`` if the report cannot be written.
    """
    cfg.validate()
    tasks = [(cid, params, cfg.mode, cfg.claims.get(cid))
             for cid, params in enumerate_tasks(cfg)]
    if workers is None:
        workers = available_cores()
    if workers > 1 and len(tasks) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (workers * 8))))
    else:
        verdicts = [_run_task(t) for t in tasks]
    verdicts.sort(key=_sort_key)
    report = Report(cfg, verdicts, generated_at=datetime.now(timezone.utc).isoformat(timespec="seconds"))
    if write and cfg.output:
        report.write(cfg.output["path"], cfg.output.get("format", "json"))
    return report
