"""Executable finite-n checks for every inequality and constant in scope.

Each check returns a CheckResult.  Comparisons are exact integer
comparisons wherever both sides are integers; fractional powers of two are
handled by raising both sides to the power that clears the denominator
(e.g. the 2^(k/8) bound is checked as an exact comparison of 8th powers).
Asymptotic-constant checks are report-only, never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial, log2

import mpmath

from .burnside import correction_report, count_codes, non_identity_sum
from .cyclestruct import CycleType, class_size, cycle_types_of, primary_components
from .qarith import gauss_binomial, gauss_total, lemma1_tail_product, scaled_u
from .submodcount import component_total, lattice_size

PASS = "pass"
FAIL = "fail"
REPORT = "report-only"

LOG_BASE_NOTE = "log means log2 throughout"


@dataclass
class CheckResult:
    name: str
    n_range: tuple[int, int]
    status: str
    witnesses: dict = field(default_factory=dict)
    counterexample: dict | None = None

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "n_range": list(self.n_range),
            "status": self.status,
            "witnesses": {k: str(v) for k, v in self.witnesses.items()},
            "counterexample": (
                {k: str(v) for k, v in self.counterexample.items()}
                if self.counterexample
                else None
            ),
        }


def check_lemma1(n_max: int) -> CheckResult:
    """Sandwich bound on subspace counts: 2^(n^2/4) <= G(n,2) <= 23*2^(n^2/4),
    checked as exact 4th-power integer comparisons, plus the tail-product
    constant and the even/odd limit values."""
    if n_max < 10:
        raise ValueError(f"n_max must be >= 10, got {n_max}")
    max_u = None
    max_u_at = 0
    for n in range(n_max + 1):
        g4 = gauss_total(n, 2) ** 4
        two = 1 << (n * n)
        if g4 < two:  # u_n < 1
            return CheckResult("lemma1", (0, n_max), FAIL,
                               counterexample={"n": n, "side": "lower"})
        if g4 > 23 ** 4 * two:  # u_n > 23
            return CheckResult("lemma1", (0, n_max), FAIL,
                               counterexample={"n": n, "side": "upper"})
        u = scaled_u(n, 2)
        if max_u is None or u > max_u:
            max_u, max_u_at = u, n
    tail = lemma1_tail_product(1000)
    if not tail < 23:
        return CheckResult("lemma1", (0, n_max), FAIL,
                           counterexample={"tail_product": tail})
    witnesses = {
        "max_u": max_u,
        "max_u_at": max_u_at,
        "tail_product_1000": tail,
        "note": LOG_BASE_NOTE,
    }
    if n_max >= 201:
        witnesses["u_200"] = scaled_u(200, 2)
        witnesses["u_201"] = scaled_u(201, 2)
        for n, limit in ((200, "7.371969"), (201, "7.371949")):
            if not abs(scaled_u(n, 2) - mpmath.mpf(limit)) < mpmath.mpf("1e-5"):
                return CheckResult("lemma1", (0, n_max), FAIL,
                                   counterexample={"n": n, "limit": limit})
    return CheckResult("lemma1", (0, n_max), PASS, witnesses)


def _t_plus_1_data(ct: CycleType):
    comp = primary_components(ct)[0]
    lam = comp.module_type
    return comp, component_total(lam, 2, 1), comp.dim, comp.max_exponent


def check_lemma2_3(n: int) -> CheckResult:
    """For every cycle type of S_n: the two bounds on the t+1 block and the
    whole-lattice bound via that block, all exact."""
    if n > 12:
        raise ValueError(f"n must be <= 12, got {n}")
    worst = None
    for ct in cycle_types_of(n):
        comp1, L1, n1, mu1 = _t_plus_1_data(ct)
        r = ct.r
        L = lattice_size(ct)
        bound3a = gauss_total(r, 2) * gauss_total(n1 - r, 2)
        bound3b = gauss_total(r, 2) ** mu1
        if L1 > bound3a:
            return CheckResult("lemma3a", (n, n), FAIL,
                               counterexample={"type": str(ct), "L1": L1,
                                               "bound": bound3a})
        if L1 > bound3b:
            return CheckResult("lemma3b", (n, n), FAIL,
                               counterexample={"type": str(ct), "L1": L1,
                                               "bound": bound3b})
        # L <= L1 * 2^((n-n1)^2/8 + 5n), compared via exact 8th powers
        if L ** 8 > L1 ** 8 << ((n - n1) ** 2 + 40 * n):
            return CheckResult("lemma2", (n, n), FAIL,
                               counterexample={"type": str(ct), "L": L})
        slack = bound3a - L1
        if worst is None or slack < worst[0]:
            worst = (slack, str(ct))
    return CheckResult("lemma2_3", (n, n), PASS,
                       {"worst_lemma3a_slack": worst[0], "at_type": worst[1]})


def check_lower_bound_4(n: int) -> CheckResult:
    """The transposition-class floor: the non-identity orbit sum is at least
    C(n,2) * G(n-1,2)."""
    if not 2 <= n <= 20:
        raise ValueError(f"n must be in [2, 20], got {n}")
    total = non_identity_sum(n)
    floor = comb(n, 2) * gauss_total(n - 1, 2)
    status = PASS if total >= floor else FAIL
    return CheckResult("lower_bound_4", (n, n), status,
                       {"sum": total, "floor": floor, "ratio_num": total,
                        "ratio_den": floor})


def classify_D(n: int) -> CheckResult:
    """Partition the non-identity cycle types (weighted by class size) into
    the four diagnostic classes by block dimension n1 and cycle count r;
    reports each class's share of the orbit sum.  Classes are assigned
    first-match in order D1..D4 (the raw D2/D4 ranges overlap at small n);
    only the cover-everything property is asserted."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    sums = {k: 0 for k in ("D1", "D2", "D3", "D4")}
    overlap_weight = 0
    for ct in cycle_types_of(n):
        r = ct.r
        if r == n:  # identity
            continue
        _, _, n1, _ = _t_plus_1_data(ct)
        weight = class_size(ct) * lattice_size(ct)
        in_d1 = n1 <= n - 6 * log2(n)
        in_d2 = not in_d1 and 1 <= r <= 8 * log2(n1)
        in_d3 = not in_d1 and 8 * log2(n1) < r < n1 - 8 * log2(n1)
        in_d4 = not in_d1 and n1 - 8 * log2(n1) <= r <= n - 1
        if in_d1:
            sums["D1"] += weight
        elif in_d2:
            sums["D2"] += weight
            if in_d4:
                overlap_weight += weight
        elif in_d3:
            sums["D3"] += weight
        elif in_d4:
            sums["D4"] += weight
        else:
            return CheckResult("classify_D", (n, n), FAIL,
                               counterexample={"type": str(ct), "n1": n1, "r": r})
    total = sum(sums.values())
    shares = {k: (float(v) / total if total else 0.0) for k, v in sums.items()}
    return CheckResult("classify_D", (n, n), REPORT,
                       {"sums": sums, "shares": shares,
                        "d2_d4_overlap_weight": overlap_weight,
                        "note": LOG_BASE_NOTE})


def check_dimension_bounds(n: int) -> CheckResult:
    """Gauss-coefficient sandwich 2^(nd-d^2) <= G(n,2,d) <= 4*2^(nd-d^2)
    for all n' <= n, and the per-dimension orbit floor b(n',d)*n'! >=
    G(n',2,d) for n' <= min(n, 40).  The matching upper bound on b(n,d) is
    reported as an observed ratio near d = n/2, never asserted."""
    if n > 100:
        raise ValueError(f"n must be <= 100, got {n}")
    for m in range(1, n + 1):
        for d in range(1, m + 1):
            g = gauss_binomial(m, d, 2)
            low = 1 << (m * d - d * d)
            if not low <= g <= 4 * low:
                return CheckResult("gauss_sandwich_27", (1, n), FAIL,
                                   counterexample={"n": m, "d": d, "G": g})
    n31 = min(n, 40)
    for m in range(1, n31 + 1):
        row = count_codes(m)
        mfact = factorial(m)
        for d in range(m + 1):
            if row.by_dim[d] * mfact < gauss_binomial(m, d, 2):
                return CheckResult("dim_floor_31", (1, n31), FAIL,
                                   counterexample={"n": m, "d": d})
    ratios = {}
    row = count_codes(n31)
    nfact = factorial(n31)
    for c in (0, 1, 2):
        d = n31 // 2 + c
        if d <= n31:
            with mpmath.workdps(30):
                ratios[f"d={d}"] = +(
                    mpmath.mpf(row.by_dim[d] * nfact)
                    / mpmath.mpf(gauss_binomial(n31, d, 2))
                )
    return CheckResult("dimension_bounds", (1, n), PASS,
                       {"ratio_upper_31_at_n": n31, "observed_ratios": ratios})


def theorem_constants_report(n_values=(20, 30, 40)) -> CheckResult:
    """Empirical exponents e(n) next to the paper-facing constants; the
    bracket constants themselves are never asserted (their derivation has an
    apparent factor-2 ambiguity; see the decisions ledger of this repo's
    build notes)."""
    rows = {}
    for n in n_values:
        rep = correction_report(n)
        rows[n] = {"R": rep["R"], "rho": rep["rho"], "e": rep["e"]}
    return CheckResult("theorem_constants", (min(n_values), max(n_values)),
                       REPORT,
                       {"per_n": rows,
                        "paper_constants": {"bracket": (1.2499, 1.2501),
                                            "even": 13 / 4, "odd": 11 / 4},
                        "note": LOG_BASE_NOTE})


def run_suite(suite: str, max_n: int) -> list[CheckResult]:
    """Run one named suite (or all); deterministic result order."""
    results: list[CheckResult] = []
    if suite in ("all", "lemma1"):
        results.append(check_lemma1(max(max_n, 10)))
    if suite in ("all", "lemma23"):
        for n in range(1, min(max_n, 12) + 1):
            results.append(check_lemma2_3(n))
    if suite in ("all", "bound4"):
        for n in range(2, min(max_n, 20) + 1):
            results.append(check_lower_bound_4(n))
    if suite in ("all", "dims"):
        results.append(check_dimension_bounds(min(max_n, 100)))
    if suite in ("all", "dclass"):
        for n in range(2, min(max_n, 40) + 1):
            results.append(classify_D(n))
    if suite == "all" and max_n >= 20:
        results.append(theorem_constants_report(
            tuple(n for n in (20, 30, 40) if n <= max_n)))
    return results
