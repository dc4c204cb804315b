"""Executable catalog of the congruences and identities, one checker per claim.

Every checker takes a :class:`CheckParams` and returns a :class:`Verdict`
recording the claimed p-adic exponent, the observed valuation, the residual
``value / p**claimed`` and a status.  Preconditions that fail give ``SKIP``;
nothing is silently dropped.

Checkers that support it can run in ``"modular"`` mode, which evaluates the
series in Z/p^(claimed+1) instead of Q.  Modular valuations are capped at
claimed+1, so a zero residue is reported with ``valuation_exact = False``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .exactnum import (
    INFINITY,
    Residue,
    as_rational,
    is_p_integral,
    is_prime,
    p_valuation,
    reduce_mod,
    residue_valuation,
)
from .hyperg import (
    HyperSeriesSpec,
    binomial_power_sum,
    catalan,
    harmonic,
    rising,
    terminating_hyper,
    trunc_hyper,
)
from .polyring import phi_poly, pochhammer_shift_poly, psi_poly

EXACT_ZERO = "exact_zero"


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"
    # exploratory checks: observation below the claim, recorded but never a failure
    OBSERVED = "OBSERVED"


@dataclass(frozen=True)
class CheckParams:
    p: int | None = None
    r: int | None = None
    a: int | None = None
    s: int | None = None
    x: Fraction | None = None
    alpha: Fraction | None = None
    n: int | None = None
    m: int | None = None
    k: int | None = None
    m_list: tuple | None = None
    shifts: tuple | None = None
    bottom_shifts: tuple | None = None

    def __post_init__(self):
        for name in ("x", "alpha"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, as_rational(v))
        for name in ("m_list", "shifts", "bottom_shifts"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, tuple(int(t) for t in v))

    def sort_key(self):
        def k(v):
            return (0, 0) if v is None else (1, v)
        # x and vectors break ties between lifts sharing (p, r, a, s)
        return (k(self.p), k(self.r), k(self.a), k(self.s), k(self.n), k(self.m),
                k(self.k), k(self.x), k(self.alpha), k(self.m_list), k(self.shifts),
                k(self.bottom_shifts))

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None:
                continue
            if isinstance(v, Fraction):
                v = str(v)
            elif isinstance(v, tuple):
                v = list(v)
            out[f.name] = v
        return out

    @classmethod
    def from_dict(cls, d: dict) -> CheckParams:
        names = {f.name for f in fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise ValueError(f"unknown check parameters: {sorted(unknown)}")
        return cls(**d)


@dataclass
class Verdict:
    check_id: str
    params: CheckParams
    claimed: int | str
    status: Status
    observed: int | float | None = None
    valuation_exact: bool = True
    value: Fraction | Residue | None = None
    residual: Fraction | None = None
    reason: str = ""
    mode: str = "rational"
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self) -> dict:
        obs = self.observed
        if obs == INFINITY:
            obs = "inf"
        value = self.value
        if isinstance(value, Residue):
            value = f"{value.value} mod {value.modulus}"
        elif value is not None:
            value = str(value)
        return {
            "check_id": self.check_id,
            "params": self.params.to_dict(),
            "claimed": self.claimed,
            "status": self.status.value,
            "observed_valuation": obs,
            "valuation_exact": self.valuation_exact,
            "value": value,
            "residual": None if self.residual is None else str(self.residual),
            "reason": self.reason,
            "mode": self.mode,
            "details": self.details,
        }


# --------------------------------------------------------------------- helpers

def _skip(check_id, params, claimed, reason, mode="rational"):
    return Verdict(check_id, params, claimed, Status.SKIP, reason=reason, mode=mode)


def _judge(check_id, params, claimed, value, p, *, mode="rational", exploratory=False,
           problems=(), details=None) -> Verdict:
    """Turn a computed value into a Verdict against ``p**claimed``.

    ``problems`` lists failed sub-checks; any entry forces FAIL.
    """
    details = dict(details or {})
    if isinstance(value, Residue):
        observed, exact = residue_valuation(value, p)
        residual = Fraction(value.value, p ** claimed)
        mode = "modular"
    else:
        observed, exact = p_valuation(value, p), True
        residual = value / Fraction(p) ** claimed
    ok = observed >= claimed
    if problems:
        status = Status.FAIL
    elif ok:
        status = Status.PASS
    else:
        status = Status.OBSERVED if exploratory else Status.FAIL
    return Verdict(check_id, params, claimed, status, observed, exact, value, residual,
                   reason="; ".join(problems), mode=mode, details=details)


def _judge_zero(check_id, params, value, *, problems=(), details=None) -> Verdict:
    status = Status.PASS if value == 0 and not problems else Status.FAIL
    return Verdict(check_id, params, EXACT_ZERO, status,
                   observed=INFINITY if value == 0 else None, value=value,
                   residual=None, reason="; ".join(problems), details=dict(details or {}))


def _odd_prime_or_reason(p):
    if p is None:
        return "p is required"
    if p < 3 or not is_prime(p):
        return f"p = {p} is not an odd prime"
    return None


def in_main_range(p: int, r: int, a: int) -> bool:
    """1 <= a < (p + r) / (2r + 1), compared in integers."""
    return a >= 1 and a * (2 * r + 1) < p + r


def lift_alpha(p: int, a: int, s: int) -> Fraction:
    return Fraction(2 * a + s * p)


def residue_index(x, p: int) -> int | None:
    """The a in [0, p) with x = -2a (mod p), or None if x is not p-integral."""
    x = as_rational(x)
    if not is_p_integral(x, p):
        return None
    return int(reduce_mod(-x / 2, p))


def _modulus(p, claimed, mode):
    return p ** (claimed + 1) if mode == "modular" else None


def _equal_param_series(alpha, width, p, modulus=None):
    spec = HyperSeriesSpec([alpha] * width, [1] * (width - 1), 1, p - 1)
    return trunc_hyper(spec, modulus)


def _weights(a: int, r: int, upto: int) -> list[Fraction]:
    # (2a)_k^(2r+1) / k!^(2r+1) for k = 0..upto
    out, w, base = [], Fraction(1), Fraction(2 * a)
    for k in range(upto + 1):
        if k:
            w *= ((base + k - 1) / k) ** (2 * r + 1)
        out.append(w)
    return out


def phi_prime_series(p: int, a: int, r: int) -> Fraction:
    """Closed form of phi'(0): sum_{k<p} (2a)_k^(2r+1)/k!^(2r+1) * (H_{2a-1} - H_{2a+k-1})."""
    w = _weights(a, r, p - 1)
    h0 = harmonic(2 * a - 1)
    return sum((w[k] * (h0 - harmonic(2 * a + k - 1)) for k in range(p)), Fraction(0))


@lru_cache(maxsize=256)
def _psi(p, a, r):
    return psi_poly(p, a, r)


@lru_cache(maxsize=256)
def _phi(p, a, r):
    return phi_poly(p, a, r)


# -------------------------------------------------------------------- checkers

def check_main_theorem(params: CheckParams, mode="rational", claimed=2) -> Verdict:
    """(2r+1)F(2r)[alpha, ..., alpha; 1, ..., 1 | 1]_{p-1} vanishes mod p^2."""
    cid = "main_theorem"
    p, r, a = params.p, params.r, params.a
    reason = _odd_prime_or_reason(p)
    if reason:
        return _skip(cid, params, claimed, reason, mode)
    if r is None or r < 1 or a is None:
        return _skip(cid, params, claimed, "need r >= 1 and a", mode)
    if not in_main_range(p, r, a):
        return _skip(cid, params, claimed, f"a = {a} outside 1 <= a < (p+r)/(2r+1)", mode)
    if params.alpha is not None:
        alpha = params.alpha
        if not is_p_integral(alpha, p) or reduce_mod(alpha - 2 * a, p).value:
            return _skip(cid, params, claimed, "alpha is not a p-adic integer congruent to 2a", mode)
    elif params.s is not None:
        alpha = lift_alpha(p, a, params.s)
    else:
        return _skip(cid, params, claimed, "need a lift index s or alpha", mode)
    value = _equal_param_series(alpha, 2 * r + 1, p, _modulus(p, claimed, mode))
    return _judge(cid, params, claimed, value, p, mode=mode, details={"alpha": str(alpha)})


def _binomial_power_sum_mod(x, e, n, modulus):
    x = reduce_mod(x, modulus)
    total = Residue(0, modulus)
    b = Residue(1, modulus)
    for k in range(n + 1):
        if k:
            b = b * (x - (k - 1)) / k
        term = b ** e
        total = total + (term if k % 2 == 0 else -term)
    return total


def check_sun_conjecture(params: CheckParams, mode="rational", claimed=2) -> Verdict:
    """sum_{k<p} (-1)^k binom(x,k)^(2r+1) vanishes mod p^2 when x = -2a, 1 <= a <= (p+1)/(2r+1)."""
    cid = "sun_conjecture"
    p, r, x = params.p, params.r, params.x
    reason = _odd_prime_or_reason(p)
    if reason:
        return _skip(cid, params, claimed, reason, mode)
    if r is None or r < 2 or x is None:
        return _skip(cid, params, claimed, "need r >= 2 and x", mode)
    a = residue_index(x, p)
    if a is None or not (1 <= a and a * (2 * r + 1) <= p + 1):
        return _skip(cid, params, claimed, "no a with x = -2a (mod p) and 1 <= a <= (p+1)/(2r+1)", mode)
    if params.a is not None and params.a != a:
        return _skip(cid, params, claimed, f"x corresponds to a = {a}, not {params.a}", mode)
    width = 2 * r + 1
    modulus = _modulus(p, claimed, mode)
    series = _equal_param_series(-x, width, p, modulus)
    if modulus is None:
        direct = binomial_power_sum(x, width, p - 1)
    else:
        direct = _binomial_power_sum_mod(x, width, p - 1, modulus)
    problems = [] if series == direct else ["binomial form and series form disagree"]
    return _judge(cid, params, claimed, series, p, mode=mode, problems=problems,
                  details={"a": a, "paths_agree": series == direct})


def check_eq_1_1(params: CheckParams, mode="rational", claimed=3) -> Verdict:
    """Exploratory: valuation of sum_{k<p} (-1)^k binom(x,k)^3 for x = -2a, 1 <= a <= (p-1)/3.

    The claim is a mod p^3 statement; small primes show valuation 2, so this
    checker records observations and never fails.
    """
    cid = "eq_1_1"
    p, x = params.p, params.x
    reason = _odd_prime_or_reason(p)
    if reason:
        return _skip(cid, params, claimed, reason, mode)
    if x is None:
        return _skip(cid, params, claimed, "need x", mode)
    a = residue_index(x, p)
    if a is None or not (1 <= a and 3 * a <= p - 1):
        return _skip(cid, params, claimed, "no a with x = -2a (mod p) and 1 <= a <= (p-1)/3", mode)
    value = _equal_param_series(-x, 3, p, _modulus(p, claimed, mode))
    return _judge(cid, params, claimed, value, p, mode=mode, exploratory=True, details={"a": a})


def catalan_cube_sum(p: int) -> Fraction:
    return sum((Fraction(catalan(k) ** 3, 64 ** k) for k in range((p - 1) // 2 + 1)), Fraction(0))


def check_catalan_mod_p2(params: CheckParams, mode="rational", claimed=2) -> Verdict:
    """sum_{k <= (p-1)/2} C_k^3 / 64^k = 8 (mod p^2) for p = 1 (mod 4)."""
    cid = "catalan_mod_p2"
    p = params.p
    reason = _odd_prime_or_reason(p)
    if reason:
        return _skip(cid, params, claimed, reason, mode)
    if p % 4 != 1:
        return _skip(cid, params, claimed, f"p = {p} is not 1 mod 4", mode)
    if mode == "modular":
        mod = p ** (claimed + 1)
        inv64 = reduce_mod(Fraction(1, 64), mod)
        total = Residue(0, mod)
        for k in range((p - 1) // 2 + 1):
            total = total + Residue(catalan(k) ** 3, mod) * inv64 ** k
        value = total - 8
        details = {}
    else:
        s = catalan_cube_sum(p)
        value = s - 8
        details = {"sum": str(s)}
    return _judge(cid, params, claimed, value, p, mode=mode, details=details)


def check_3F2_half(params: CheckParams, mode="rational", claimed=2) -> Verdict:
    """sum_{k<p} (-1/2)_k^3 / k!^3 vanishes mod p^2 for p = 1 (mod 4), and matches the Catalan form."""
    cid = "3F2_half"
    p = params.p
    reason = _odd_prime_or_reason(p)
    if reason:
        return _skip(cid, params, claimed, reason, mode)
    if p % 4 != 1:
        return _skip(cid, params, claimed, f"p = {p} is not 1 mod 4", mode)
    half = Fraction(-1, 2)
    value = _equal_param_series(half, 3, p, _modulus(p, claimed, mode))
    problems = []
    tail_ok = all(catalan(k) % p == 0 for k in range((p + 1) // 2, p - 1))
    if not tail_ok:
        problems.append("some C_k with (p+1)/2 <= k <= p-2 is not divisible by p")
    # Catalan sum minus 8 is -8 times the series cut at (p+1)/2
    head = trunc_hyper(HyperSeriesSpec([half] * 3, [1, 1], 1, (p + 1) // 2))
    reduction_ok = catalan_cube_sum(p) - 8 == -8 * head
    if not reduction_ok:
        problems.append("Catalan sum does not reduce to the truncated series")
    # equivalence: both forms must land on the same side of the claim
    cat = check_catalan_mod_p2(CheckParams(p=p), mode, claimed)
    verdict = _judge(cid, params, claimed, value, p, mode=mode, problems=problems,
                     details={"tail_divisible": tail_ok, "catalan_reduction": reduction_ok,
                              "catalan_status": cat.status.value})
    if verdict.status in (Status.PASS, Status.FAIL) and verdict.status is not cat.status:
        verdict.status = Status.FAIL
        verdict.reason = "; ".join(filter(None, [verdict.reason, "disagrees with catalan_mod_p2"]))
    return verdict


def check_karlsson_minton(params: CheckParams, mode="rational", claimed=EXACT_ZERO) -> Verdict:
    """(r+1)F(r)[-a, 1+m_1, ..., 1+m_r; 1, ..., 1 | 1] = 0 whenever a > m_1 + ... + m_r."""
    cid = "karlsson_minton"
    a, ms = params.a, params.m_list
    if a is None or ms is None or a < 1 or any(m < 0 for m in ms):
        return _skip(cid, params, claimed, "need a >= 1 and non-negative m_list")
    if a <= sum(ms):
        return _skip(cid, params, claimed, f"a = {a} <= sum(m) = {sum(ms)}")
    value = terminating_hyper([-a] + [1 + m for m in ms], [1] * len(ms), 1)
    return _judge_zero(cid, params, value)


def check_sign_symmetry(params: CheckParams, mode="rational", claimed=EXACT_ZERO) -> Verdict:
    """(r+1)F(r)[-m, ..., -m; 1, ..., 1 | 1] = 0 for odd m and even r."""
    cid = "sign_symmetry"
    m, r = params.m, params.r
    if m is None or r is None or m < 1 or m % 2 == 0:
        return _skip(cid, params, claimed, "m must be a positive odd integer")
    if r < 0 or r % 2:
        return _skip(cid, params, claimed, "r must be a non-negative even integer")
    value = trunc_hyper(HyperSeriesSpec([-m] * (r + 1), [1] * r, 1, m))
    direct = binomial_power_sum(m, r + 1, m)
    problems = [] if value == direct else ["series and binomial forms disagree"]
    return _judge_zero(cid, params, value, problems=problems)


def check_harmonic_weighted(params: CheckParams, mode="rational", claimed=1) -> Verdict:
    """sum w_k H_k = -sum w_k H_{2a+k-1} (mod p), w_k = (2a)_k^(2r+1)/k!^(2r+1), k <= p - 2a."""
    cid = "harmonic_weighted"
    p, a, r = params.p, params.a, params.r
    reason = _odd_prime_or_reason(p)
    if reason:
        return _skip(cid, params, claimed, reason, mode)
    if a is None or r is None or r < 0:
        return _skip(cid, params, claimed, "need a and r >= 0", mode)
    if not 0 <= 2 * a < p:
        return _skip(cid, params, claimed, f"a = {a} outside 0 <= a < p/2", mode)
    top = p - 2 * a
    # (0)_k = 0 for k >= 1, so a = 0 leaves only the k = 0 term
    ks = [0] if a == 0 else range(top + 1)
    w = _weights(a, r, top)
    lhs = sum((w[k] * harmonic(k) for k in ks), Fraction(0))
    rhs = -sum((w[k] * harmonic(2 * a + k - 1) for k in ks), Fraction(0))
    if mode == "modular":
        mod = p ** (claimed + 1)
        value = sum((reduce_mod(w[k], mod) * (reduce_mod(harmonic(k), mod)
                                              + reduce_mod(harmonic(2 * a + k - 1), mod))
                     for k in ks), Residue(0, mod))
    else:
        value = lhs - rhs
    details = {"lhs": str(lhs), "rhs": str(rhs)}
    if a == 0:
        details["convention"] = "H_{-1} = 0"
    return _judge(cid, params, claimed, value, p, mode=mode, details=details)


def check_shifted_congruence(params: CheckParams, mode="rational", claimed=1) -> Verdict:
    """Shifting every parameter by multiples of p leaves the (2r+1)F(2r) sum at 0 mod p."""
    cid = "shifted_congruence"
    p, a, r = params.p, params.a, params.r
    reason = _odd_prime_or_reason(p)
    if reason:
        return _skip(cid, params, claimed, reason, mode)
    if a is None or r is None or r < 0 or not 1 <= 2 * a <= p - 1:
        return _skip(cid, params, claimed, "need 1 <= 2a <= p - 1 and r >= 0", mode)
    width = 2 * r + 1
    s_vec = params.shifts if params.shifts is not None else (1,) * width
    t_vec = params.bottom_shifts if params.bottom_shifts is not None else (0,) * (width - 1)
    if len(s_vec) != width or len(t_vec) != width - 1:
        raise ValueError(f"need {width} top shifts and {width - 1} bottom shifts")
    spec = HyperSeriesSpec([2 * a - s * p for s in s_vec], [1 + t * p for t in t_vec], 1, p - 1)
    value = trunc_hyper(spec, _modulus(p, claimed, mode))
    anchor = trunc_hyper(HyperSeriesSpec([2 * a - p] * width, [1] * (width - 1), 1, p - 1))
    problems = [] if anchor == 0 else ["anchor series at 2a - p is not exactly 0"]
    return _judge(cid, params, claimed, value, p, mode=mode, problems=problems,
                  details={"anchor_zero": anchor == 0})


def check_derivative_identity(params: CheckParams, mode="rational", claimed=EXACT_ZERO) -> Verdict:
    """d/dx (m - x)_k at x = 0 equals (m)_k (H_{m-1} - H_{m+k-1})."""
    cid = "derivative_identity"
    m, k = params.m, params.k
    if m is None or k is None or m < 1 or k < 0:
        return _skip(cid, params, claimed, "need m >= 1 and k >= 0")
    poly_side = pochhammer_shift_poly(m, k).coeff(1)
    closed = rising(m, k) * (harmonic(m - 1) - harmonic(m + k - 1))
    return _judge_zero(cid, params, poly_side - closed,
                       details={"polynomial": str(poly_side), "closed_form": str(closed)})


def check_phi_prime_chain(params: CheckParams, mode="rational", claimed=1) -> Verdict:
    """phi'(0) = 0 (mod p), computed four ways, plus every intermediate identity of the argument."""
    cid = "phi_prime_chain"
    p, a, r = params.p, params.a, params.r
    reason = _odd_prime_or_reason(p)
    if reason:
        return _skip(cid, params, claimed, reason)
    if r is None or r < 1 or a is None or not in_main_range(p, r, a):
        return _skip(cid, params, claimed, "need r >= 1 and 1 <= a < (p+r)/(2r+1)")
    if (2 * r + 1) % p == 0:
        return _skip(cid, params, claimed, "p divides 2r+1; see remark_np")
    P = Fraction(p)
    m = 2 * a
    cut = p - m
    width = 2 * r + 1
    w = _weights(a, r, p - 1)
    problems = []
    det = {}

    def mod_p_zero(q):
        return p_valuation(q, p) >= 1

    def mod_p2_zero(q):
        return p_valuation(q, p) >= 2

    phi = _phi(p, a, r)
    d_poly = phi.derivative().eval(0)
    # first route: direct differentiation, then truncation at p - 2a
    d_full = sum((w[k] * (harmonic(m - 1) - harmonic(m + k - 1)) for k in range(p)), Fraction(0))
    S = sum((w[k] * harmonic(m + k - 1) for k in range(cut + 1)), Fraction(0))
    d_first = -S
    det["derivative_sum_exact"] = d_full == d_poly
    if d_full != d_poly:
        problems.append("phi'(0) differs from its termwise derivative")
    det["pochhammer_divisible_beyond_cut"] = all(
        p_valuation(rising(m, k), p) >= 1 for k in range(cut + 1, p))
    if not det["pochhammer_divisible_beyond_cut"]:
        problems.append("(2a)_k not divisible by p for some p-2a < k < p")

    # second route: phi(2p) through the terminating series and its tail
    phi0, phi2p = phi.eval(0), phi.eval(2 * P)
    full = terminating_hyper([m - 2 * p] + [m] * (width - 1), [1] * (width - 1), 1)
    det["karlsson_minton_zero"] = full == 0
    if full != 0:
        problems.append("untruncated series at 2a - 2p is not 0")
    tail = sum((rising(m - 2 * P, p + k) * rising(m, p + k) ** (width - 1)
                / rising(1, p + k) ** width for k in range(cut + 1)), Fraction(0))
    det["phi_2p_closed_form"] = phi2p == -tail
    if phi2p != -tail:
        problems.append("phi(2p) differs from minus its tail sum")
    unit = rising(m - 2 * P, p) * rising(m, p) ** (width - 1) / rising(1, p) ** width
    det["unit_factor_minus_one"] = mod_p_zero(unit + 1)
    if not det["unit_factor_minus_one"]:
        problems.append("unit factor is not -1 mod p")
    shifted = sum((rising(m - P, k) * rising(m + P, k) ** (width - 1) / rising(1 + P, k) ** width
                   for k in range(cut + 1)), Fraction(0))
    det["tail_vs_shifted_mod_p2"] = mod_p2_zero(tail + shifted)
    if not det["tail_vs_shifted_mod_p2"]:
        problems.append("tail sum is not minus the shifted sum mod p^2")
    base = sum((w[k] for k in range(cut + 1)), Fraction(0))
    expansion = P * sum((w[k] * ((2 * r - 1) * harmonic(m + k - 1) - (2 * r + 1) * harmonic(k))
                         for k in range(cut + 1)), Fraction(0))
    det["shifted_expansion_mod_p2"] = mod_p2_zero(shifted - base - expansion)
    if not det["shifted_expansion_mod_p2"]:
        problems.append("first-order expansion of the shifted sum fails mod p^2")
    d_quot = (phi2p - phi0) / (2 * P)
    d_second = 2 * r * S

    routes = {"polynomial": d_poly, "truncated_sum": d_first,
              "difference_quotient": d_quot, "harmonic_2r": d_second}
    names = list(routes)
    for i, u in enumerate(names):
        for v in names[i + 1:]:
            if not mod_p_zero(routes[u] - routes[v]):
                problems.append(f"{u} and {v} disagree mod p")
    for name, val in routes.items():
        det[f"v_p({name})"] = _valuation_json(p_valuation(val, p))

    psi_d0 = _psi(p, a, r).derivative().eval(0) if width * (p - 1) <= 400 else None
    if psi_d0 is not None:
        det["psi_prime_is_width_times_phi_prime"] = psi_d0 == width * d_poly
        if psi_d0 != width * d_poly:
            problems.append("psi'(0) != (2r+1) phi'(0)")
    return _judge(cid, params, claimed, d_poly, p, problems=problems, details=det)


def _valuation_json(v):
    return "inf" if v == INFINITY else v


def check_taylor_step(params: CheckParams, mode="rational", claimed=2) -> Verdict:
    """psi(sp) = (s - 1) p psi'(0) (mod p^2)."""
    cid = "taylor_step"
    p, a, r, s = params.p, params.a, params.r, params.s
    reason = _odd_prime_or_reason(p)
    if reason:
        return _skip(cid, params, claimed, reason)
    if r is None or r < 1 or a is None or not in_main_range(p, r, a):
        return _skip(cid, params, claimed, "need r >= 1 and 1 <= a < (p+r)/(2r+1)")
    if s is None or not 0 <= s < p:
        return _skip(cid, params, claimed, "need 0 <= s < p")
    psi = _psi(p, a, r)
    dpsi = psi.derivative()
    d0 = dpsi.eval(0)
    at_sp = psi.eval(s * p)
    value = at_sp - (s - 1) * p * d0
    problems = []
    psi_p_zero = psi.eval(p) == 0
    if not psi_p_zero:
        problems.append("psi(p) != 0")
    drift = p_valuation(dpsi.eval(p) - d0, p) >= 1
    if not drift:
        problems.append("psi'(p) and psi'(0) differ mod p")
    series = _equal_param_series(Fraction(2 * a - s * p), 2 * r + 1, p)
    if series != at_sp:
        problems.append("psi(sp) differs from the series at alpha = 2a - sp")
    return _judge(cid, params, claimed, value, p, problems=problems,
                  details={"psi_p_zero": psi_p_zero, "psi_prime_p_matches_0": drift,
                           "v_p(psi'(0))": _valuation_json(p_valuation(d0, p))})


def check_remark_np(params: CheckParams, mode="rational", claimed=2) -> Verdict:
    """(np)F(np-1)[alpha, ...; 1, ... | 1]_{p-1} vanishes mod p^2 for odd n and 1 <= a <= (p-1)/2."""
    cid = "remark_np"
    p, n, a, s = params.p, params.n, params.a, params.s
    reason = _odd_prime_or_reason(p)
    if reason:
        return _skip(cid, params, claimed, reason, mode)
    if n is None or n < 1 or n % 2 == 0:
        return _skip(cid, params, claimed, "n must be a positive odd integer", mode)
    if a is None or not 1 <= 2 * a <= p - 1:
        return _skip(cid, params, claimed, "need 1 <= a <= (p-1)/2", mode)
    if s is None:
        return _skip(cid, params, claimed, "need lift index s", mode)
    alpha = lift_alpha(p, a, s)
    value = _equal_param_series(alpha, n * p, p, _modulus(p, claimed, mode))
    return _judge(cid, params, claimed, value, p, mode=mode, details={"alpha": str(alpha)})


def least_positive_residue(r: int, h: int) -> int:
    return (r - 1) % h + 1


def check_remark_rstar(params: CheckParams, mode="rational", claimed=2) -> Verdict:
    """The main congruence for r, with the range widened to a < (p + r*)/(2r* + 1)."""
    cid = "remark_rstar"
    p, r, a, s = params.p, params.r, params.a, params.s
    reason = _odd_prime_or_reason(p)
    if reason:
        return _skip(cid, params, claimed, reason, mode)
    h = (p - 1) // 2
    if r is None or r < 1 or r % h == 0:
        return _skip(cid, params, claimed, f"need r >= 1 not divisible by (p-1)/2 = {h}", mode)
    rs = least_positive_residue(r, h)
    if a is None or not in_main_range(p, rs, a):
        return _skip(cid, params, claimed, f"a outside 1 <= a < (p+r*)/(2r*+1), r* = {rs}", mode)
    if s is None:
        return _skip(cid, params, claimed, "need lift index s", mode)
    alpha = lift_alpha(p, a, s)
    value = _equal_param_series(alpha, 2 * r + 1, p, _modulus(p, claimed, mode))
    fermat = p_valuation(phi_prime_series(p, a, r) - phi_prime_series(p, a, rs), p) >= 1
    problems = [] if fermat else ["phi'(0) sums for r and r* differ mod p"]
    return _judge(cid, params, claimed, value, p, mode=mode, problems=problems,
                  details={"r_star": rs, "fermat_reduction": fermat, "alpha": str(alpha)})


# -------------------------------------------------------------------- registry

@dataclass(frozen=True)
class CheckEntry:
    check_id: str
    func: Callable
    claimed: int | str
    gate: str
    modular: bool = False
    exploratory: bool = False


REGISTRY: dict[str, CheckEntry] = {e.check_id: e for e in [
    CheckEntry("main_theorem", check_main_theorem, 2,
               "p odd prime, r >= 1, 1 <= a < (p+r)/(2r+1), alpha = 2a + s p", modular=True),
    CheckEntry("sun_conjecture", check_sun_conjecture, 2,
               "r >= 2, x = -2a (mod p), 1 <= a <= (p+1)/(2r+1)", modular=True),
    CheckEntry("eq_1_1", check_eq_1_1, 3,
               "x = -2a (mod p), 1 <= a <= (p-1)/3; exploratory", modular=True, exploratory=True),
    CheckEntry("catalan_mod_p2", check_catalan_mod_p2, 2, "p = 1 (mod 4)", modular=True),
    CheckEntry("3F2_half", check_3F2_half, 2, "p = 1 (mod 4)", modular=True),
    CheckEntry("karlsson_minton", check_karlsson_minton, EXACT_ZERO,
               "a > m_1 + ... + m_r, m_i >= 0"),
    CheckEntry("sign_symmetry", check_sign_symmetry, EXACT_ZERO, "m odd >= 1, r even >= 0"),
    CheckEntry("harmonic_weighted", check_harmonic_weighted, 1, "0 <= a < p/2, r >= 0",
               modular=True),
    CheckEntry("shifted_congruence", check_shifted_congruence, 1,
               "1 <= 2a <= p-1; 2r+1 top shifts, 2r bottom shifts", modular=True),
    CheckEntry("derivative_identity", check_derivative_identity, EXACT_ZERO, "m >= 1, k >= 0"),
    CheckEntry("phi_prime_chain", check_phi_prime_chain, 1,
               "1 <= a < (p+r)/(2r+1), p does not divide 2r+1"),
    CheckEntry("taylor_step", check_taylor_step, 2, "1 <= a < (p+r)/(2r+1), 0 <= s < p"),
    CheckEntry("remark_np", check_remark_np, 2, "n odd >= 1, 1 <= a <= (p-1)/2", modular=True),
    CheckEntry("remark_rstar", check_remark_rstar, 2,
               "(p-1)/2 does not divide r, 1 <= a < (p+r*)/(2r*+1)", modular=True),
]}


def run_check(check_id: str, params: CheckParams, mode: str = "rational",
              claimed: int | str | None = None) -> Verdict:
    """Run one registered checker.

    ``mode`` is ``"rational"``, ``"modular"`` or ``"cross-check"``; checkers
    without a modular path always run exactly.  In cross-check mode both paths
    run and the verdict fails if they disagree.
    """
    try:
        entry = REGISTRY[check_id]
    except KeyError:
        raise KeyError(f"unknown check id {check_id!r}") from None
    if claimed is None:
        claimed = entry.claimed
    if mode not in ("rational", "modular", "cross-check"):
        raise ValueError(f"unknown mode {mode!r}")
    if not entry.modular or mode == "rational":
        return entry.func(params, mode="rational", claimed=claimed)
    if mode == "modular":
        return entry.func(params, mode="modular", claimed=claimed)
    exact = entry.func(params, mode="rational", claimed=claimed)
    fast = entry.func(params, mode="modular", claimed=claimed)
    if not verdicts_agree(exact, fast):
        exact = replace(exact, status=Status.FAIL,
                        reason="; ".join(filter(None, [exact.reason, "rational and modular paths disagree"])))
    exact.mode = "cross-check"
    return exact


def verdicts_agree(exact: Verdict, fast: Verdict) -> bool:
    """Rational and modular verdicts agree on status and on the valuation up to the modular cap."""
    if exact.status is not fast.status:
        return False
    if exact.observed is None or fast.observed is None:
        return exact.observed is fast.observed
    cap = exact.claimed + 1
    return min(exact.observed, cap) == fast.observed
