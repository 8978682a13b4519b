"""Registry of verifiable identities with exact series and counting checks.

Each identity is registered under a stable string id together with a
human-readable statement of what is being compared (echoed in reports as
the anchor), the name of the oracle used for its right-hand side, and the
parameter ranges it is verified over by default. Three kinds of check
exist:

* series equality: both sides are built as TruncatedSeries and compared
  coefficient by coefficient up to a fixed order;
* enumerative equality: both sides are computed as integer sequences over
  n = 1..n_max, by exhaustive enumeration on one side and alternating sums
  or generating-function coefficients on the other;
* inequality: a single integer sequence that must be nonnegative, with an
  optional threshold past which it must be strictly positive. Strictness
  failures are reported distinctly from sign failures.

An identity that admits both a series and an enumerative reading carries
both; verify_identity runs every registered form. All comparisons are
exact, a mismatch carries the first differing index and both values, and a
verifier accepts an optional single-coefficient perturbation of its
left-hand side so the harness can prove its own sensitivity.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from time import perf_counter
from typing import Callable, Mapping, Sequence

from . import bijections
from . import overpartitions as op
from . import series
from .series import PochSpec, TruncatedSeries

__all__ = [
    "IdentityDescriptor",
    "VerificationReport",
    "UnknownIdentityError",
    "BadParamsError",
    "MAX_ORDER",
    "list_identities",
    "get_identity",
    "verify_series",
    "verify_enumerative",
    "verify_inequality",
    "verify_identity",
    "run_default_suite",
]

MAX_ORDER = 2000

SeriesBuilder = Callable[[Mapping[str, int], int], TruncatedSeries]
RowsBuilder = Callable[[Mapping[str, int], int], "list[tuple[int, ...]]"]
ValuesBuilder = Callable[[Mapping[str, int], int], "list[int]"]


class UnknownIdentityError(KeyError):
    def __str__(self) -> str:  # KeyError would repr-quote the message
        return str(self.args[0]) if self.args else ""


class BadParamsError(ValueError):
    pass


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    kind: str  # "series-equality" | "enumerative-equality" | "inequality"
    statement: str
    oracle: str
    # validation bounds per parameter and the default verification ranges
    schema: tuple[tuple[str, int, int], ...] = ()
    param_ranges: tuple[tuple[str, int, int], ...] = ()
    requires_m_le_k: bool = False
    default_order: int | None = None
    default_n_max: int | None = None
    series_lhs: SeriesBuilder | None = None
    series_rhs: SeriesBuilder | None = None
    enum_lhs: RowsBuilder | None = None
    enum_rhs: RowsBuilder | None = None
    ineq_values: ValuesBuilder | None = None
    strict_from: Callable[[Mapping[str, int]], int] | None = None
    truncation_note: str | None = None

    @property
    def has_series(self) -> bool:
        return self.series_lhs is not None

    @property
    def has_enum(self) -> bool:
        return self.enum_lhs is not None

    @property
    def has_inequality(self) -> bool:
        return self.ineq_values is not None


@dataclass(frozen=True)
class VerificationReport:
    id: str
    params: tuple[tuple[str, int], ...]
    compared: str
    status: str  # "pass" | "fail"
    first_mismatch: tuple[int, int, int] | None
    elapsed_ms: float
    anchor: str
    detail: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_jsonable(self, include_timing: bool = True) -> dict:
        out: dict = {
            "id": self.id,
            "params": {k: v for k, v in self.params},
            "range": self.compared,
            "status": self.status,
        }
        if self.first_mismatch is not None:
            out["firstMismatch"] = list(self.first_mismatch)
        out["elapsedMs"] = round(self.elapsed_ms, 3) if include_timing else 0
        out["anchor"] = self.anchor
        if self.detail is not None:
            out["detail"] = self.detail
        return out


# -- shared numeric helpers ---------------------------------------------------

def _sign(e: int) -> int:
    return 1 if e % 2 == 0 else -1


def _alt_pbar_sq(n: int, k: int) -> int:
    """pbar(n) + 2*sum_{j=1..k} (-1)^j pbar(n - j^2)."""
    total = op.pbar(n)
    for j in range(1, k + 1):
        total += 2 * _sign(j) * op.pbar(n - j * j)
    return total


def _window_pbar_sq(n: int, m: int, k: int) -> int:
    """sum_{j=m..k} (-1)^j pbar(n - j^2)."""
    return sum(_sign(j) * op.pbar(n - j * j) for j in range(m, k + 1))


@lru_cache(maxsize=None)
def _opgf(order: int) -> TruncatedSeries:
    return series.overpartition_gf(order)


@lru_cache(maxsize=None)
def _pgf(order: int) -> TruncatedSeries:
    return series.partition_gf(order)


@lru_cache(maxsize=None)
def _qq_inf(order: int) -> TruncatedSeries:
    return series.qproduct(1, 1, 1, None, order)


@lru_cache(maxsize=None)
def _negq_inf(order: int) -> TruncatedSeries:
    return series.qproduct(-1, 1, 1, None, order)


def _accumulate(acc: list[int], s: TruncatedSeries, shift: int) -> None:
    cs = s.coeffs
    top = len(acc) - 1 - shift
    for i in range(top + 1):
        ci = cs[i]
        if ci:
            acc[i + shift] += ci


def _tail_sum(order: int, m_lo: int, coef: int, denom_off: int) -> TruncatedSeries:
    """sum_{m>=m_lo} q^(coef*m) * (-q^(m+1);q)oo / (q^(m+denom_off);q)oo.

    Terms stop once the shift coef*m passes the order (the summand's
    minimal exponent). Successive ratios differ by one factor on each side,
    so they are produced by a downward recurrence in O(order) per term:
    R(m) = R(m+1) * (1 + q^(m+1)) / (1 - q^(m+denom_off)).
    """
    m_hi = order // coef
    if m_hi < m_lo:
        return series.zero(order)
    ratio = series.poch_ratio(m_hi + 1, m_hi + denom_off, order)
    acc = [0] * (order + 1)
    _accumulate(acc, ratio, coef * m_hi)
    for m in range(m_hi - 1, m_lo - 1, -1):
        ratio = ratio.times_factor(m + 1, -1).div_factor(m + denom_off, 1)
        _accumulate(acc, ratio, coef * m)
    return TruncatedSeries(order, acc)


def _odd_square_theta(k: int, order: int) -> TruncatedSeries:
    """sum_{j>=0} (q^((k+2j+1)^2) - q^((k+2j+2)^2)) truncated at order.

    The second exponent is the first plus 2k+4j+3, i.e. the next square.
    """
    c = [0] * (order + 1)
    j = 0
    while True:
        a = k + 2 * j + 1
        if a * a > order:
            break
        c[a * a] += 1
        b = (a + 1) * (a + 1)
        if b <= order:
            c[b] -= 1
        j += 1
    return TruncatedSeries(order, c)


def _times_neg_poch(s: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by (-q;q)_k, one factor at a time."""
    for i in range(1, min(k, s.order) + 1):
        s = s.times_factor(i, -1)
    return s


def _div_qpoch(s: TruncatedSeries, n: int) -> TruncatedSeries:
    """Divide by (q;q)_n, one factor at a time."""
    for i in range(1, min(n, s.order) + 1):
        s = s.div_factor(i, 1)
    return s


def _mbar_gf(kappa: int, order: int) -> TruncatedSeries:
    """Generating function of the repeated-first-large-part counts: twice
    (-q;q)_kappa/(q;q)_kappa times the tail sum with shift (kappa+1)m."""
    tail = _tail_sum(order, kappa + 1, kappa + 1, 0)
    tail = _div_qpoch(_times_neg_poch(tail, kappa), kappa)
    return tail.scale(2)


def _gen_pentagonal_terms(ell: int, bound: int) -> list[tuple[int, int]]:
    """(j, ell*j*(3j-1)/2) for all integers j with the exponent <= bound."""
    out = [(0, 0)]
    j = 1
    while True:
        g_pos = ell * j * (3 * j - 1) // 2
        g_neg = ell * j * (3 * j + 1) // 2
        if g_pos > bound and g_neg > bound:
            break
        if g_pos <= bound:
            out.append((j, g_pos))
        if g_neg <= bound:
            out.append((-j, g_neg))
        j += 1
    return out


# -- series builders ----------------------------------------------------------

def _pent_am_lhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    c = [0] * (order + 1)
    for j in range(k):
        g = j * (3 * j + 1) // 2
        if g > order:
            break
        c[g] += _sign(j)
        h = g + 2 * j + 1
        if h <= order:
            c[h] -= _sign(j)
    return TruncatedSeries(order, c) * _pgf(order)


def _pent_am_rhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    base = k * (k - 1) // 2
    acc = [0] * (order + 1)
    n = 1
    while base + (k + 1) * n <= order:
        term = series.gauss_binomial(n - 1, k - 1, order)
        term = _div_qpoch(term, n)
        _accumulate(acc, term, base + (k + 1) * n)
        n += 1
    return series.one(order) + TruncatedSeries(order, acc).scale(_sign(k - 1))


def _gauss_lhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    return series.gauss_theta(None, order)


def _gauss_rhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    return _qq_inf(order) * _negq_inf(order).invert()


def _guo_zeng_lhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    return _opgf(order) * series.gauss_theta(p["k"], order)


def _guo_zeng_rhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    acc = [0] * (order + 1)
    n = k + 1
    while (k + 1) * n <= order:
        term = series.gauss_binomial(n - 1, k, order)
        term = _times_neg_poch(term, k)
        # (-1;q)_{n-k} has leading factor (1 + q^0) = 2
        term = term.scale(2)
        for i in range(1, min(n - k - 1, order) + 1):
            term = term.times_factor(i, -1)
        term = _div_qpoch(term, n)
        _accumulate(acc, term, (k + 1) * n)
        n += 1
    return series.one(order) + TruncatedSeries(order, acc).scale(_sign(k))


def _am2018_rhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    tail = _tail_sum(order, k + 1, k + 1, 0)
    tail = _div_qpoch(_times_neg_poch(tail, k), k)
    return series.one(order) + tail.scale(2 * _sign(k))


def _li_lhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    return _opgf(order) * series.theta_partial(-k, k - 1, order)


def _li_rhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    tail = _tail_sum(order, k, k, 1)
    tail = _div_qpoch(_times_neg_poch(tail, k), k - 1)
    return series.one(order) + tail.scale(_sign(k - 1))


def _cor26_rhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    inner = _opgf(order) * _odd_square_theta(k, order)
    return series.one(order) + inner.scale(2 * _sign(k))


def _cor29_lhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    return _mbar_gf(k - 1, order) - _mbar_gf(k, order)


def _cor29_rhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    tail = _tail_sum(order, k, k, 1)
    tail = _div_qpoch(_times_neg_poch(tail, k), k - 1)
    return tail.scale(2)


def _sec5_main_lhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    t1 = _tail_sum(order, k, k, 0)
    t1 = _div_qpoch(_times_neg_poch(t1, k - 1), k - 1)
    t2 = _tail_sum(order, k + 1, k + 1, 0)
    t2 = _div_qpoch(_times_neg_poch(t2, k), k)
    return t1 - t2


def _sec5_main_rhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    tail = _tail_sum(order, k, k, 1)
    return _div_qpoch(_times_neg_poch(tail, k), k - 1)


def _sec5_red_lhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    s1 = _tail_sum(order, k, k, 0)
    s2 = _tail_sum(order, k + 1, k + 1, 0)
    return s1.times_factor(k, 1) - s2.times_factor(k, -1)


def _sec5_red_rhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k = p["k"]
    return _tail_sum(order, k, k, 1).times_factor(2 * k, 1)


def _euler_lhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    return series.qproduct(1, 1, 2, None, order).invert()


def _euler_rhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    return _negq_inf(order)


def _yao_lhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    """Built from enumerated counts: coefficient n is the alternating sum of
    the repeated-first-large-part count over generalized pentagonal shifts
    dilated by ell; weights below 1 contribute nothing."""
    k, ell = p["k"], p["ell"]
    terms = _gen_pentagonal_terms(ell, order)
    c = [0] * (order + 1)
    for n in range(1, order + 1):
        total = 0
        for j, g in terms:
            m = n - g
            if m >= 1:
                total += _sign(j) * op.mbar(m, k)
        c[n] = total
    return TruncatedSeries(order, c)


def _yao_rhs(p: Mapping[str, int], order: int) -> TruncatedSeries:
    k, ell = p["k"], p["ell"]
    s = series.pochhammer(PochSpec(1, 1, None, ell), order)
    s = _div_qpoch(s, order)  # 1/(q;q)oo
    for e in range(1, order + 1, 2):  # 1/(q;q^2)oo
        s = s.div_factor(e, 1)
    return (s * _odd_square_theta(k, order)).scale(2)


# -- enumerative builders -----------------------------------------------------

def _rows(fn: Callable[[int], tuple[int, ...]], n_max: int) -> list[tuple[int, ...]]:
    return [fn(n) for n in range(1, n_max + 1)]


def _thm11_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]

    def row(n: int) -> tuple[int, ...]:
        total = 0
        for j in range(k):
            total += _sign(j) * (
                op.partition_count(n - j * (3 * j + 1) // 2)
                - op.partition_count(n - j * (3 * j + 5) // 2 - 1)
            )
        return (_sign(k - 1) * total,)

    return _rows(row, n_max)


def _thm11_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(lambda n: (op.mk_stat(n, k),), n_max)


def _gauss_enum_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    # full alternating sum: j^2 <= n exhausts every nonzero term
    return _rows(lambda n: (_alt_pbar_sq(n, math.isqrt(n)),), n_max)


def _gauss_enum_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    return [(0,)] * n_max


def _thm13_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(lambda n: (_sign(k) * _alt_pbar_sq(n, k),), n_max)


def _thm13_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(lambda n: (op.mbar(n, k),), n_max)


def _thm14_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(lambda n: (_sign(k - 1) * _window_pbar_sq(n, -k, k - 1),), n_max)


def _thm14_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(lambda n: (op.nbar(n, k),), n_max)


def _thm22_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    return _rows(lambda n: (2 * op.op21(n, 0),), n_max)


def _thm23_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    return _rows(lambda n: (2 * op.op21(n, 1),), n_max)


def _pbar_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    return _rows(lambda n: (op.pbar(n),), n_max)


def _split21_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    return _rows(lambda n: (sum(op.op_class_counts(n)),), n_max)


def _thm24_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    m, k = p["m"], p["k"]
    pref = _sign(min(abs(m), k))
    return _rows(lambda n: (pref * _window_pbar_sq(n, m, k),), n_max)


def _thm24_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    m, k = p["m"], p["k"]
    a, b = min(abs(m), abs(k)), max(abs(m), abs(k))
    eps = _sign(m + k)
    low = a if m * k > 0 else a + 1
    return _rows(lambda n: (op.op21(n, low) + eps * op.op21(n, b + 1),), n_max)


def _cor25a_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(lambda n: (_sign(k) * _alt_pbar_sq(n, k),), n_max)


def _cor25a_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(lambda n: (2 * op.op21(n, k + 1),), n_max)


def _cor25b_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(
        lambda n: (_sign(k - 1) * _alt_pbar_sq(n, k) + op.pbar(n - k * k),), n_max
    )


def _cor25b_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(lambda n: (op.op21(n, k) - op.op21(n, k + 1),), n_max)


def _cor27_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(
        lambda n: (2 * op.op21(n, k + 1), op.op21(n, k) - op.op21(n, k + 1)), n_max
    )


def _cor27_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(lambda n: (op.mbar(n, k), op.nbar(n, k)), n_max)


def _gen_op_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(lambda n: (op.op21(n, k + 1),), n_max)


def _gen_op_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    s = _opgf(n_max) * _odd_square_theta(k, n_max)
    return [(s.coeff(n),) for n in range(1, n_max + 1)]


def _cor29_enum_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    k = p["k"]
    return _rows(lambda n: (op.mbar(n, k - 1) - op.mbar(n, k),), n_max)


def _cor29_enum_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    s = _cor29_rhs(p, n_max)
    return [(s.coeff(n),) for n in range(1, n_max + 1)]


def _lemma41_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    j = p["j"]
    return _rows(lambda n: (op.pbar(n - j * j),), n_max)


def _lemma41_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    j = p["j"]
    return _rows(lambda n: (op.op21(n, j) + op.op21(n, j + 1),), n_max)


@lru_cache(maxsize=None)
def _sec3_data(n: int) -> dict:
    return bijections.check_weight_down(n)


def _sec3_lhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    rows = []
    for n in range(1, n_max + 1):
        d = _sec3_data(n)
        if n <= 3:
            c_comp = d["c_count"]
        else:
            c_comp = int(bool(d["witness_ok"]) and d["c_count"] >= 1)
        rows.append(
            (
                d["a_count"],
                d["images_in_b"],
                int(d["round_trip_ok"] and d["weights_ok"]),
                c_comp,
            )
        )
    return rows


def _sec3_rhs(p: Mapping[str, int], n_max: int) -> list[tuple[int, ...]]:
    rows = []
    for n in range(1, n_max + 1):
        d = _sec3_data(n)
        rows.append((d["pbar_half"], d["b_count"], 1, 0 if n <= 3 else 1))
    return rows


# -- inequality builders ------------------------------------------------------

def _ineq_gz_values(p: Mapping[str, int], n_max: int) -> list[int]:
    k = p["k"]
    return [_sign(k) * _alt_pbar_sq(n, k) for n in range(1, n_max + 1)]


def _ineq_15_values(p: Mapping[str, int], n_max: int) -> list[int]:
    k = p["k"]
    return [
        _sign(k - 1) * _alt_pbar_sq(n, k) + op.pbar(n - k * k)
        for n in range(1, n_max + 1)
    ]


def _ineq_xyz_values(p: Mapping[str, int], n_max: int) -> list[int]:
    k = p["k"]
    return [
        _sign(k - 1) * _alt_pbar_sq(n, k) + op.pbar(n - k * (k + 1))
        for n in range(1, n_max + 1)
    ]


def _ineq_mk_values(p: Mapping[str, int], n_max: int) -> list[int]:
    m, k = p["m"], p["k"]
    pref = _sign(min(abs(m), k))
    return [pref * _window_pbar_sq(n, m, k) for n in range(1, n_max + 1)]


# -- registry -----------------------------------------------------------------

_REGISTRY: dict[str, IdentityDescriptor] = {}


def _register(desc: IdentityDescriptor) -> None:
    if desc.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {desc.id!r}")
    _REGISTRY[desc.id] = desc


_K_SERIES = (("k", 1, 64),)
_K_ENUM = (("k", 1, 64),)
_MK = (("m", -64, 64), ("k", -64, 64))

_register(
    IdentityDescriptor(
        id="pentagonal-am",
        kind="series-equality",
        statement=(
            "1/(q;q)oo * sum_{j=0..k-1} (-1)^j q^(j(3j+1)/2) (1-q^(2j+1)) = 1 + "
            "(-1)^(k-1) sum_{n>=1} q^(k(k-1)/2+(k+1)n) / (q;q)_n * qbin(n-1|k-1)"
        ),
        oracle="independent series constructions of both sides",
        schema=_K_SERIES,
        param_ranges=(("k", 1, 8),),
        default_order=100,
        series_lhs=_pent_am_lhs,
        series_rhs=_pent_am_rhs,
        truncation_note="summand minimal exponent k(k-1)/2+(k+1)n",
    )
)

_register(
    IdentityDescriptor(
        id="thm-1-1",
        kind="enumerative-equality",
        statement=(
            "(-1)^(k-1) sum_{j=0..k-1} (-1)^j (p(n-j(3j+1)/2) - p(n-j(3j+5)/2-1)) "
            "counts partitions of n with least non-part k and more parts above k "
            "than below"
        ),
        oracle="exhaustive partition enumeration vs alternating p(n) sums",
        schema=_K_ENUM,
        param_ranges=(("k", 1, 4),),
        default_n_max=30,
        enum_lhs=_thm11_lhs,
        enum_rhs=_thm11_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="gauss",
        kind="series-equality",
        statement=(
            "1 + 2 sum_{j>=1} (-1)^j q^(j^2) = (q;q)oo / (-q;q)oo; equivalently "
            "pbar(n) + 2 sum_{j>=1} (-1)^j pbar(n-j^2) = 0 for n >= 1"
        ),
        oracle="theta sum vs product quotient; alternating pbar sums vs zero",
        default_order=200,
        default_n_max=25,
        series_lhs=_gauss_lhs,
        series_rhs=_gauss_rhs,
        enum_lhs=_gauss_enum_lhs,
        enum_rhs=_gauss_enum_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="guo-zeng-truncation",
        kind="series-equality",
        statement=(
            "(-q;q)oo/(q;q)oo (1 + 2 sum_{j=1..k} (-1)^j q^(j^2)) = 1 + (-1)^k "
            "sum_{n>=k+1} (-q;q)_k (-1;q)_{n-k} q^((k+1)n) / (q;q)_n * qbin(n-1|k)"
        ),
        oracle="independent series constructions of both sides",
        schema=_K_SERIES,
        param_ranges=(("k", 1, 8),),
        default_order=100,
        series_lhs=_guo_zeng_lhs,
        series_rhs=_guo_zeng_rhs,
        truncation_note="summand minimal exponent (k+1)n; sum while (k+1)n <= order",
    )
)

_register(
    IdentityDescriptor(
        id="ineq-guo-zeng",
        kind="inequality",
        statement=(
            "(-1)^k (pbar(n) + 2 sum_{j=1..k} (-1)^j pbar(n-j^2)) >= 0 with strict "
            "inequality for n >= (k+1)^2"
        ),
        oracle="alternating pbar sums with sign and strictness scan",
        schema=_K_ENUM,
        param_ranges=(("k", 1, 4),),
        default_n_max=60,
        ineq_values=_ineq_gz_values,
        strict_from=lambda p: (p["k"] + 1) ** 2,
    )
)

_register(
    IdentityDescriptor(
        id="am-2018-truncation",
        kind="series-equality",
        statement=(
            "(-q;q)oo/(q;q)oo (1 + 2 sum_{j=1..k} (-1)^j q^(j^2)) = 1 + 2 (-1)^k "
            "(-q;q)_k/(q;q)_k sum_{j>=0} q^((k+1)(k+j+1)) (-q^(k+j+2);q)oo / "
            "(q^(k+j+1);q)oo"
        ),
        oracle="independent series constructions of both sides",
        schema=_K_SERIES,
        param_ranges=(("k", 1, 8),),
        default_order=100,
        series_lhs=_guo_zeng_lhs,
        series_rhs=_am2018_rhs,
        truncation_note="summand minimal exponent (k+1)(k+j+1)",
    )
)

_register(
    IdentityDescriptor(
        id="thm-1-3",
        kind="enumerative-equality",
        statement=(
            "(-1)^k (pbar(n) + 2 sum_{j=1..k} (-1)^j pbar(n-j^2)) counts "
            "overpartitions of n whose smallest part value above k occurs at "
            "least k+1 times (overlined occurrences included)"
        ),
        oracle="exhaustive overpartition enumeration vs alternating pbar sums",
        schema=_K_ENUM,
        param_ranges=(("k", 1, 4),),
        default_n_max=25,
        enum_lhs=_thm13_lhs,
        enum_rhs=_thm13_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="yao",
        kind="series-equality",
        statement=(
            "sum_n sum_j (-1)^j Mbar_k(n - l j(3j-1)/2) q^n = 2 (q^l;q^l)oo / "
            "(q;q)oo / (q;q^2)oo * sum_{j>=0} q^((k+2j+1)^2) (1-q^(2k+4j+3))"
        ),
        oracle="enumerated counts on the left vs series product on the right",
        schema=(("k", 1, 64), ("ell", 1, 16)),
        param_ranges=(("k", 1, 3), ("ell", 1, 3)),
        default_order=25,
        series_lhs=_yao_lhs,
        series_rhs=_yao_rhs,
        truncation_note="summand minimal exponent (k+2j+1)^2",
    )
)

_register(
    IdentityDescriptor(
        id="ineq-conj-1-5",
        kind="inequality",
        statement=(
            "(-1)^(k-1) (pbar(n) + 2 sum_{j=1..k} (-1)^j pbar(n-j^2)) + "
            "pbar(n-k^2) >= 0 with strict inequality for n >= k^2"
        ),
        oracle="alternating pbar sums with sign and strictness scan",
        schema=_K_ENUM,
        param_ranges=(("k", 1, 4),),
        default_n_max=60,
        ineq_values=_ineq_15_values,
        strict_from=lambda p: p["k"] * p["k"],
    )
)

_register(
    IdentityDescriptor(
        id="ineq-xyz",
        kind="inequality",
        statement=(
            "(-1)^(k-1) (pbar(n) + 2 sum_{j=1..k} (-1)^j pbar(n-j^2)) + "
            "pbar(n-k(k+1)) >= 0"
        ),
        oracle="alternating pbar sums with sign scan",
        schema=_K_ENUM,
        param_ranges=(("k", 1, 4),),
        default_n_max=60,
        ineq_values=_ineq_xyz_values,
    )
)

_register(
    IdentityDescriptor(
        id="li-truncation",
        kind="series-equality",
        statement=(
            "(-q;q)oo/(q;q)oo sum_{j=-k..k-1} (-1)^j q^(j^2) = 1 + (-1)^(k-1) "
            "(-q;q)_k/(q;q)_{k-1} sum_{j>=0} q^(k(k+j)) (-q^(k+j+1);q)oo / "
            "(q^(k+j+1);q)oo"
        ),
        oracle="independent series constructions of both sides",
        schema=_K_SERIES,
        param_ranges=(("k", 1, 8),),
        default_order=100,
        series_lhs=_li_lhs,
        series_rhs=_li_rhs,
        truncation_note="summand minimal exponent k(k+j)",
    )
)

_register(
    IdentityDescriptor(
        id="thm-1-4",
        kind="enumerative-equality",
        statement=(
            "(-1)^(k-1) sum_{j=-k..k-1} (-1)^j pbar(n-j^2) counts overpartitions "
            "of n in which after exempting an overlined k the smallest remaining "
            "part of value >= k is plain and its value occurs exactly k times"
        ),
        oracle="exhaustive overpartition enumeration vs alternating pbar sums",
        schema=_K_ENUM,
        param_ranges=(("k", 1, 4),),
        default_n_max=25,
        enum_lhs=_thm14_lhs,
        enum_rhs=_thm14_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="ineq-m-k",
        kind="inequality",
        statement=(
            "(-1)^min(|m| k) sum_{j=m..k} (-1)^j pbar(n-j^2) >= 0 for m <= k"
        ),
        oracle="alternating pbar sums with sign scan",
        schema=_MK,
        param_ranges=(("m", -4, 4), ("k", -4, 4)),
        requires_m_le_k=True,
        default_n_max=60,
        ineq_values=_ineq_mk_values,
    )
)

_register(
    IdentityDescriptor(
        id="op-split-2-1",
        kind="enumerative-equality",
        statement="op_{2 1}(n) + opbar_{2 1}(n) = pbar(n)",
        oracle="mex-class split by enumeration vs overpartition counts",
        default_n_max=25,
        enum_lhs=_split21_lhs,
        enum_rhs=_pbar_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="thm-2-2",
        kind="enumerative-equality",
        statement="2 op21(n|0) = pbar(n)",
        oracle="mex-class enumeration vs overpartition counts",
        default_n_max=25,
        enum_lhs=_thm22_lhs,
        enum_rhs=_pbar_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="thm-2-3",
        kind="enumerative-equality",
        statement="2 op21(n|1) = pbar(n)",
        oracle="mex-class enumeration vs overpartition counts",
        default_n_max=25,
        enum_lhs=_thm23_lhs,
        enum_rhs=_pbar_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="thm-2-4",
        kind="enumerative-equality",
        statement=(
            "(-1)^min(|m| k) sum_{j=m..k} (-1)^j pbar(n-j^2) = op21(n|a) + "
            "(-1)^(m+k) op21(n|b+1) when mk > 0 and op21(n|a+1) + (-1)^(m+k) "
            "op21(n|b+1) when mk <= 0 where a=min(|m| |k|) b=max(|m| |k|)"
        ),
        oracle="mex-class enumeration vs alternating pbar sums",
        schema=_MK,
        param_ranges=(("m", -4, 4), ("k", -4, 4)),
        requires_m_le_k=True,
        default_n_max=25,
        enum_lhs=_thm24_lhs,
        enum_rhs=_thm24_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="cor-2-5-first",
        kind="enumerative-equality",
        statement=(
            "(-1)^k (pbar(n) + 2 sum_{j=1..k} (-1)^j pbar(n-j^2)) = 2 op21(n|k+1)"
        ),
        oracle="mex-class enumeration vs alternating pbar sums",
        schema=_K_ENUM,
        param_ranges=(("k", 1, 4),),
        default_n_max=25,
        enum_lhs=_cor25a_lhs,
        enum_rhs=_cor25a_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="cor-2-5-second",
        kind="enumerative-equality",
        statement=(
            "(-1)^(k-1) (pbar(n) + 2 sum_{j=1..k} (-1)^j pbar(n-j^2)) + "
            "pbar(n-k^2) = op21(n|k) - op21(n|k+1)"
        ),
        oracle="mex-class enumeration vs alternating pbar sums",
        schema=_K_ENUM,
        param_ranges=(("k", 1, 4),),
        default_n_max=25,
        enum_lhs=_cor25b_lhs,
        enum_rhs=_cor25b_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="gen-op",
        kind="enumerative-equality",
        statement=(
            "sum_n op21(n|k+1) q^n = (-q;q)oo/(q;q)oo sum_{j>=0} "
            "q^((k+2j+1)^2) (1-q^(2k+4j+3))"
        ),
        oracle="mex-class enumeration vs series coefficients",
        schema=_K_ENUM,
        param_ranges=(("k", 1, 4),),
        default_n_max=25,
        enum_lhs=_gen_op_lhs,
        enum_rhs=_gen_op_rhs,
        truncation_note="summand minimal exponent (k+2j+1)^2",
    )
)

_register(
    IdentityDescriptor(
        id="cor-2-6",
        kind="series-equality",
        statement=(
            "(-q;q)oo/(q;q)oo (1 + 2 sum_{j=1..k} (-1)^j q^(j^2)) = 1 + 2 (-1)^k "
            "(-q;q)oo/(q;q)oo sum_{j>=0} q^((k+2j+1)^2) (1-q^(2k+4j+3))"
        ),
        oracle="independent series constructions of both sides",
        schema=_K_SERIES,
        param_ranges=(("k", 1, 8),),
        default_order=100,
        series_lhs=_guo_zeng_lhs,
        series_rhs=_cor26_rhs,
        truncation_note="summand minimal exponent (k+2j+1)^2",
    )
)

_register(
    IdentityDescriptor(
        id="cor-2-7",
        kind="enumerative-equality",
        statement=(
            "2 op21(n|k+1) = Mbar_k(n) and op21(n|k) - op21(n|k+1) = Nbar_k(n)"
        ),
        oracle="independent enumerations of both statistics",
        schema=_K_ENUM,
        param_ranges=(("k", 1, 4),),
        default_n_max=25,
        enum_lhs=_cor27_lhs,
        enum_rhs=_cor27_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="cor-2-9",
        kind="series-equality",
        statement=(
            "sum_n (Mbar_{k-1}(n) - Mbar_k(n)) q^n = 2 (-q;q)_k/(q;q)_{k-1} "
            "sum_{j>=0} q^(k(k+j)) (-q^(k+j+1);q)oo / (q^(k+j+1);q)oo"
        ),
        oracle="enumerated count differences and analytic form of the left "
        "side vs series construction of the right side",
        schema=_K_SERIES,
        param_ranges=(("k", 1, 8),),
        default_order=100,
        default_n_max=25,
        series_lhs=_cor29_lhs,
        series_rhs=_cor29_rhs,
        enum_lhs=_cor29_enum_lhs,
        enum_rhs=_cor29_enum_rhs,
        truncation_note="summand minimal exponent k(k+j)",
    )
)

_register(
    IdentityDescriptor(
        id="euler-odd-distinct",
        kind="series-equality",
        statement="1/(q;q^2)oo = (-q;q)oo",
        oracle="odd-step product inversion vs distinct-part product",
        default_order=200,
        series_lhs=_euler_lhs,
        series_rhs=_euler_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="lemma-4-1",
        kind="enumerative-equality",
        statement="pbar(n-j^2) = op21(n|j) + op21(n|j+1)",
        oracle="mex-class enumeration vs overpartition counts",
        schema=(("j", 1, 16),),
        param_ranges=(("j", 1, 4),),
        default_n_max=25,
        enum_lhs=_lemma41_lhs,
        enum_rhs=_lemma41_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="sec3-bijection",
        kind="enumerative-equality",
        statement=(
            "dropping or spreading the smallest non-overlined part is a "
            "weight-1-decreasing bijection between the smallest-part-plain "
            "class of n and the gap-conditioned class of n-1; both have size "
            "pbar(n)/2 and the complement class is empty exactly for n <= 3"
        ),
        oracle="exhaustive classification and mapping of both classes",
        default_n_max=20,
        enum_lhs=_sec3_lhs,
        enum_rhs=_sec3_rhs,
    )
)

_register(
    IdentityDescriptor(
        id="sec5-main",
        kind="series-equality",
        statement=(
            "(-q;q)_{k-1}/(q;q)_{k-1} sum_j q^(k(k+j)) (-q^(k+j+1);q)oo/"
            "(q^(k+j);q)oo - (-q;q)_k/(q;q)_k sum_j q^((k+1)(k+j+1)) "
            "(-q^(k+j+2);q)oo/(q^(k+j+1);q)oo = (-q;q)_k/(q;q)_{k-1} "
            "sum_j q^(k(k+j)) (-q^(k+j+1);q)oo/(q^(k+j+1);q)oo"
        ),
        oracle="independent series constructions of both sides",
        schema=_K_SERIES,
        param_ranges=(("k", 1, 10),),
        default_order=100,
        series_lhs=_sec5_main_lhs,
        series_rhs=_sec5_main_rhs,
        truncation_note="summand minimal exponent k(k+j)",
    )
)

_register(
    IdentityDescriptor(
        id="sec5-reduced",
        kind="series-equality",
        statement=(
            "(1-q^k) sum_j q^(k(k+j)) (-q^(k+j+1);q)oo/(q^(k+j);q)oo - (1+q^k) "
            "sum_j q^((k+1)(k+j+1)) (-q^(k+j+2);q)oo/(q^(k+j+1);q)oo = "
            "(1-q^(2k)) sum_j q^(k(k+j)) (-q^(k+j+1);q)oo/(q^(k+j+1);q)oo"
        ),
        oracle="independent series constructions of both sides",
        schema=_K_SERIES,
        param_ranges=(("k", 1, 10),),
        default_order=100,
        series_lhs=_sec5_red_lhs,
        series_rhs=_sec5_red_rhs,
        truncation_note="summand minimal exponent k(k+j)",
    )
)


# -- verification -------------------------------------------------------------

def list_identities() -> tuple[IdentityDescriptor, ...]:
    return tuple(_REGISTRY.values())


def get_identity(ident: str) -> IdentityDescriptor:
    try:
        return _REGISTRY[ident]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity id {ident!r}") from None


def _validate_params(
    desc: IdentityDescriptor, params: Mapping[str, int] | None
) -> dict[str, int]:
    given = dict(params or {})
    names = [name for name, _, _ in desc.schema]
    unknown = sorted(set(given) - set(names))
    if unknown:
        raise BadParamsError(
            f"{desc.id} does not take parameter(s) {unknown}; expects {names}"
        )
    missing = sorted(set(names) - set(given))
    if missing:
        raise BadParamsError(f"{desc.id} requires parameter(s) {missing}")
    for name, lo, hi in desc.schema:
        v = given[name]
        if not isinstance(v, int) or isinstance(v, bool) or not lo <= v <= hi:
            raise BadParamsError(
                f"{desc.id}: parameter {name}={v!r} outside {lo}..{hi}"
            )
    if desc.requires_m_le_k and given["m"] > given["k"]:
        raise BadParamsError(f"{desc.id}: requires m <= k, got {given}")
    return given


def _params_key(params: Mapping[str, int]) -> tuple[tuple[str, int], ...]:
    return tuple(sorted(params.items()))


def _first_diff(
    lhs: Sequence[int], rhs: Sequence[int]
) -> tuple[int, int, int] | None:
    for i, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return (i, a, b)
    return None


def verify_series(
    ident: str,
    params: Mapping[str, int] | None = None,
    order: int | None = None,
    *,
    perturb: tuple[int, int] | None = None,
) -> VerificationReport:
    """Compare both series sides coefficientwise up to the order.

    perturb=(index, delta) adds delta*q^index to the left side before the
    comparison; it exists so tests can confirm the check actually bites.
    """
    desc = get_identity(ident)
    if not desc.has_series:
        raise BadParamsError(f"{ident} has no series form")
    p = _validate_params(desc, params)
    n = desc.default_order if order is None else order
    if n is None or not 0 <= n <= MAX_ORDER:
        raise BadParamsError(f"order must be within 0..{MAX_ORDER}, got {n}")
    t0 = perf_counter()
    lhs = desc.series_lhs(p, n)
    rhs = desc.series_rhs(p, n)
    if perturb is not None:
        idx, delta = perturb
        lhs = lhs + series.monomial(n, idx, delta)
    mismatch = _first_diff(lhs.coeffs, rhs.coeffs)
    elapsed = (perf_counter() - t0) * 1000.0
    return VerificationReport(
        id=ident,
        params=_params_key(p),
        compared=f"order={n}",
        status="pass" if mismatch is None else "fail",
        first_mismatch=mismatch,
        elapsed_ms=elapsed,
        anchor=desc.statement,
    )


def verify_enumerative(
    ident: str,
    params: Mapping[str, int] | None = None,
    n_max: int | None = None,
    *,
    perturb: tuple[int, int] | None = None,
) -> VerificationReport:
    """Compare both integer sequences for n = 1..n_max.

    Rows may carry several components (an identity with two displays); the
    first mismatching component of the first mismatching n is reported.
    """
    desc = get_identity(ident)
    if not desc.has_enum:
        raise BadParamsError(f"{ident} has no enumerative form")
    p = _validate_params(desc, params)
    n_top = desc.default_n_max if n_max is None else n_max
    if n_top is None or n_top < 1:
        raise BadParamsError(f"n_max must be >= 1, got {n_top}")
    t0 = perf_counter()
    lhs_rows = desc.enum_lhs(p, n_top)
    rhs_rows = desc.enum_rhs(p, n_top)
    if perturb is not None:
        idx, delta = perturb
        if not 1 <= idx <= n_top:
            raise BadParamsError(f"perturbation index {idx} outside 1..{n_top}")
        row = lhs_rows[idx - 1]
        lhs_rows[idx - 1] = (row[0] + delta,) + row[1:]
    mismatch = None
    detail = None
    for n, (lrow, rrow) in enumerate(zip(lhs_rows, rhs_rows), start=1):
        for ci, (a, b) in enumerate(zip(lrow, rrow)):
            if a != b:
                mismatch = (n, a, b)
                if len(lrow) > 1:
                    detail = f"display {ci + 1} of {len(lrow)}"
                break
        if mismatch:
            break
    elapsed = (perf_counter() - t0) * 1000.0
    return VerificationReport(
        id=ident,
        params=_params_key(p),
        compared=f"n=1..{n_top}",
        status="pass" if mismatch is None else "fail",
        first_mismatch=mismatch,
        elapsed_ms=elapsed,
        anchor=desc.statement,
        detail=detail,
    )


def verify_inequality(
    ident: str,
    params: Mapping[str, int] | None = None,
    n_max: int | None = None,
    *,
    perturb: tuple[int, int] | None = None,
) -> VerificationReport:
    """Scan the value sequence for sign violations and, where a strictness
    threshold applies, for zeros at or past it. The two failure modes are
    reported distinctly through the detail field."""
    desc = get_identity(ident)
    if not desc.has_inequality:
        raise BadParamsError(f"{ident} has no inequality form")
    p = _validate_params(desc, params)
    n_top = desc.default_n_max if n_max is None else n_max
    if n_top is None or n_top < 1:
        raise BadParamsError(f"n_max must be >= 1, got {n_top}")
    t0 = perf_counter()
    values = desc.ineq_values(p, n_top)
    if perturb is not None:
        idx, delta = perturb
        if not 1 <= idx <= n_top:
            raise BadParamsError(f"perturbation index {idx} outside 1..{n_top}")
        values[idx - 1] += delta
    threshold = desc.strict_from(p) if desc.strict_from is not None else None
    mismatch = None
    detail = None
    for n, v in enumerate(values, start=1):
        if v < 0:
            mismatch = (n, v, 0)
            detail = "sign violation: value below 0"
            break
        if threshold is not None and n >= threshold and v == 0:
            mismatch = (n, v, 0)
            detail = f"strictness violation: zero at n={n} >= {threshold}"
            break
    elapsed = (perf_counter() - t0) * 1000.0
    return VerificationReport(
        id=ident,
        params=_params_key(p),
        compared=f"n=1..{n_top}",
        status="pass" if mismatch is None else "fail",
        first_mismatch=mismatch,
        elapsed_ms=elapsed,
        anchor=desc.statement,
        detail=detail,
    )


def verify_identity(
    ident: str,
    params: Mapping[str, int] | None = None,
    *,
    order: int | None = None,
    n_max: int | None = None,
) -> list[VerificationReport]:
    """Run every registered form of one identity for one parameter set."""
    desc = get_identity(ident)
    reports = []
    if desc.has_series:
        reports.append(verify_series(ident, params, order))
    if desc.has_enum:
        reports.append(verify_enumerative(ident, params, n_max))
    if desc.has_inequality:
        reports.append(verify_inequality(ident, params, n_max))
    return reports


def expand_grid(
    desc: IdentityDescriptor,
    overrides: Mapping[str, tuple[int, int]] | None = None,
) -> list[dict[str, int]]:
    """Parameter sets for one identity: its default ranges, with any override
    ranges substituted, expanded one set per value combination."""
    ranges = []
    bounds = {name: (lo, hi) for name, lo, hi in desc.schema}
    for name, lo, hi in desc.param_ranges:
        if overrides and name in overrides:
            lo, hi = overrides[name]
            b_lo, b_hi = bounds[name]
            if lo > hi or lo < b_lo or hi > b_hi:
                raise BadParamsError(
                    f"{desc.id}: range {lo}..{hi} for {name} outside "
                    f"{b_lo}..{b_hi}"
                )
        ranges.append((name, lo, hi))
    grids = []
    for combo in itertools.product(
        *[range(lo, hi + 1) for _, lo, hi in ranges]
    ):
        params = {name: value for (name, _, _), value in zip(ranges, combo)}
        if desc.requires_m_le_k and params["m"] > params["k"]:
            continue
        grids.append(params)
    return grids


def run_default_suite(
    ids: Sequence[str] | None = None,
    *,
    order: int | None = None,
    n_max: int | None = None,
    overrides: Mapping[str, tuple[int, int]] | None = None,
) -> list[VerificationReport]:
    """Verify identities over their default parameter grids.

    Reports are merged deterministically, sorted by id then parameters then
    compared range.
    """
    selected = list(ids) if ids is not None else list(_REGISTRY)
    reports: list[VerificationReport] = []
    for ident in selected:
        desc = get_identity(ident)
        for params in expand_grid(desc, overrides):
            reports.extend(
                verify_identity(ident, params, order=order, n_max=n_max)
            )
    reports.sort(key=lambda r: (r.id, r.params, r.compared))
    return reports
