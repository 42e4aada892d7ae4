"""Numeric grid checks for the inequality toolkit behind the extremal
results: edge-weight gap monotonicity, part-size shift positivity,
group merge inequalities, the balanced-to-unbalanced step function, the
unimodal value chain, and the closed formulas for the bipartite
maximum.

A check that expects a strict inequality reports an exact zero as a
finding, not a failure; genuine sign violations are failures.  Checks
over group-size tuples are pure closed-form arithmetic; the
"double-entry" sweep rebuilds the tuples as graphs (up to n = 14) and
confirms the closed-form differences against directly computed ABS
values.
"""

import math
from dataclasses import dataclass

from .absindex import abs_index, weight_of_sum
from .families import (abs_kappa_xy_closed, abs_kr_join_closed,
                       abs_multipartite_closed, abs_sixpart_closed,
                       build_complete_bipartite, build_complete_multipartite,
                       build_kappa_xy, build_kr_join_multipartite,
                       build_sixpart)
from .graph import add_edge

DOUBLE_ENTRY_MAX = 14
DOUBLE_ENTRY_TOL = 1e-10


@dataclass(frozen=True, slots=True)
class LemmaCheck:
    """Outcome of one grid check: what ran, what failed, what was exactly tight."""

    lemma: str
    grid: str
    checked: int
    failures: tuple[str, ...] = ()
    findings: tuple[str, ...] = ()

    @property
    def verdict(self) -> str:
        if self.failures:
            return "fail"
        if self.checked == 0:
            return "vacuous"
        return "pass"

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "grid": self.grid,
            "checked": self.checked,
            "failures": list(self.failures),
            "findings": list(self.findings),
            "verdict": self.verdict,
        }


def _merge(lemma: str, grid: str, parts: list[LemmaCheck]) -> LemmaCheck:
    return LemmaCheck(
        lemma, grid,
        sum(p.checked for p in parts),
        tuple(f for p in parts for f in p.failures),
        tuple(f for p in parts for f in p.findings),
    )


# ==================================================================
# edge-weight gaps
# ==================================================================

def zeta(t: int, x: int) -> float:
    """sqrt(1 - 2/(x - t)) - sqrt(1 - 2/(x - t + 1)); negative, increasing in x."""
    if x - t <= 2:
        raise ValueError(f"need x - t > 2, got x={x}, t={t}")
    return weight_of_sum(x - t) - weight_of_sum(x - t + 1)


def zeta1(n: int, x: int) -> float:
    """sqrt(1 - 2/(2n - x)) - sqrt(1 - 2/(2n - x - 1)); positive, increasing in x."""
    if 2 * n - x - 1 < 2:
        raise ValueError(f"need x <= 2n - 3, got x={x}, n={n}")
    if x < 1:
        raise ValueError(f"need x >= 1, got x={x}")
    return weight_of_sum(2 * n - x) - weight_of_sum(2 * n - x - 1)


def check_zeta_monotone(t: int, x_lo: int, x_hi: int) -> LemmaCheck:
    """zeta(t, x) strictly increases over integer x in [x_lo, x_hi]."""
    if x_lo - t <= 2:
        raise ValueError(f"need x_lo - t > 2, got x_lo={x_lo}, t={t}")
    failures, findings = [], []
    checked = 0
    prev = None
    for x in range(x_lo, x_hi + 1):
        cur = zeta(t, x)
        if cur >= 0:
            failures.append(f"zeta(t={t}, x={x}) = {cur!r} not negative")
        if prev is not None:
            checked += 1
            if cur < prev:
                failures.append(f"zeta(t={t}) decreased at x={x}")
            elif cur == prev:
                findings.append(f"zeta(t={t}) tight at x={x}")
        prev = cur
    return LemmaCheck("zeta-monotone", f"t={t}, x in [{x_lo}, {x_hi}]",
                      checked, tuple(failures), tuple(findings))


def check_zeta1_monotone(n: int, x_lo: int = 1, x_hi: int | None = None) -> LemmaCheck:
    """zeta1(n, x) is positive and strictly increases over [x_lo, x_hi]."""
    if x_hi is None:
        x_hi = 2 * n - 4
    failures, findings = [], []
    checked = 0
    prev = None
    for x in range(x_lo, x_hi + 1):
        cur = zeta1(n, x)
        if cur <= 0:
            failures.append(f"zeta1(n={n}, x={x}) = {cur!r} not positive")
        if prev is not None:
            checked += 1
            if cur < prev:
                failures.append(f"zeta1(n={n}) decreased at x={x}")
            elif cur == prev:
                findings.append(f"zeta1(n={n}) tight at x={x}")
        prev = cur
    return LemmaCheck("zeta1-monotone", f"n={n}, x in [{x_lo}, {x_hi}]",
                      checked, tuple(failures), tuple(findings))


# ==================================================================
# part-size shifts: moving one vertex from a large part to a small one
# ==================================================================

def check_multipartite_shift(parts, i: int, j: int) -> float:
    """ABS gain from moving one vertex from part i to part j (t_i - t_j >= 2)."""
    parts = tuple(parts)
    if parts[i] - parts[j] < 2:
        raise ValueError(f"need t_i - t_j >= 2, got t_i={parts[i]}, t_j={parts[j]}")
    shifted = list(parts)
    shifted[i] -= 1
    shifted[j] += 1
    return abs_multipartite_closed(shifted) - abs_multipartite_closed(parts)


def check_kr_join_shift(r: int, parts, i: int, j: int) -> float:
    """Same shift inside the multipartite factor of a K_r join."""
    parts = tuple(parts)
    if parts[i] - parts[j] < 2:
        raise ValueError(f"need t_i - t_j >= 2, got t_i={parts[i]}, t_j={parts[j]}")
    shifted = list(parts)
    shifted[i] -= 1
    shifted[j] += 1
    return abs_kr_join_closed(r, shifted) - abs_kr_join_closed(r, parts)


# ==================================================================
# group merges on the six-group blow-up
# ==================================================================

def sixpart_merge_target(parts) -> tuple[int, int, int, int, int, int]:
    n1, n2, n3, n4, n5, n6 = parts
    return (n1 + n2 + n3 - 1, 0, 1, n4 + n6 - n2, n5 + n2, 0)


def check_sixpart_merge(parts) -> float:
    """ABS gain from collapsing a general blow-up onto its kappa-xy shape.

    Hypotheses: groups 1, 4, 6 nonempty, group 3 of size >= 2,
    n1, n3 >= n5 and n4, n6 >= n2.
    """
    n1, n2, n3, n4, n5, n6 = parts
    if min(n1, n4, n6) < 1 or n3 < 2 or min(n1, n3) < n5 or min(n4, n6) < n2:
        raise ValueError(f"sizes {tuple(parts)} violate the merge hypotheses")
    return abs_sixpart_closed(sixpart_merge_target(parts)) - abs_sixpart_closed(parts)


def check_tail_merge(n2: int, n3: int, n4: int, n6: int) -> float:
    """ABS gain from shrinking group 4 to a single vertex in a (0,n2,n3,n4,0,n6) blow-up.

    Hypotheses: n3 >= 1, n4 >= 2, n6 >= n2.  The underlying bound is
    only non-strict, so exact zeros are legitimate findings.
    """
    if n3 < 1 or n4 < 2 or n6 < n2:
        raise ValueError(f"sizes (0,{n2},{n3},{n4},0,{n6}) violate the merge hypotheses")
    return (abs_sixpart_closed((0, n2, n3, 1, 0, n6 + n4 - 1))
            - abs_sixpart_closed((0, n2, n3, n4, 0, n6)))


def check_head_merge(n1: int, n3: int, n5: int, n6: int) -> float:
    """ABS gain from shrinking group 1 to a single vertex in a (n1,0,n3,0,n5,n6) blow-up.

    Hypotheses: n6 >= 1, n1 >= 2, n3 >= n5.
    """
    if n6 < 1 or n1 < 2 or n3 < n5:
        raise ValueError(f"sizes ({n1},0,{n3},0,{n5},{n6}) violate the merge hypotheses")
    return (abs_sixpart_closed((1, 0, n3 + n1 - 1, 0, n5, n6))
            - abs_sixpart_closed((n1, 0, n3, 0, n5, n6)))


def check_kappa_shift(x: int, y: int, kappa: int) -> float:
    """ABS gain of the (x+1, y-1) rebalance; valid when y - x - 1 + kappa >= 0."""
    if y < 2:
        raise ValueError(f"need y >= 2 to move a vertex, got y={y}")
    if min(x, kappa) < 1:
        raise ValueError("need x >= 1 and kappa >= 1")
    if y - x - 1 + kappa < 0:
        raise ValueError(f"hypothesis y - x - 1 + kappa >= 0 fails for ({x}, {y}, {kappa})")
    return abs_kappa_xy_closed(x + 1, y - 1, kappa) - abs_kappa_xy_closed(x, y, kappa)


# ==================================================================
# the balanced-to-unbalanced step function f(c)
# ==================================================================

def _balanced_xy(n: int, kappa: int, c: int) -> tuple[int, int]:
    if n % 2 == 0:
        return n // 2 + c, (n - 2 * kappa - 2) // 2 - c
    return (n - 1) // 2 + c, (n - 2 * kappa - 1) // 2 - c


def _step_count(n: int, kappa: int) -> int:
    # number of valid c values (c = 0 .. bound inclusive), possibly zero
    bound = (n - 2 * kappa - 6) // 2 if n % 2 == 0 else (n - 2 * kappa - 5) // 2
    return max(0, bound + 1)


def step_value(n: int, kappa: int, c: int) -> float:
    """f(c): ABS drop from the c-th to the (c+1)-th unbalancing step."""
    x, y = _balanced_xy(n, kappa, c)
    return abs_kappa_xy_closed(x, y, kappa) - abs_kappa_xy_closed(x + 1, y - 1, kappa)


def step_value_explicit(n: int, k: int, c: int) -> float:
    """f(c) recomputed from its expanded radical form (second route)."""
    w1 = math.sqrt((n - 3) / (n - 1))
    if n % 2 == 0:
        return (2 * w1 * c + w1 * k - k * math.sqrt((n - 2) / n)
                + k * math.sqrt((n + 2 * k - 2 + 2 * c) / (n + 2 * k + 2 + 2 * c))
                - k * math.sqrt((n + 2 * k + 2 * c) / (n + 2 * k + 4 + 2 * c))
                + 2 * w1)
    return ((2 * c + k + 1) * w1 - k * math.sqrt((n - 2) / n)
            + k * math.sqrt(1 - 4 / (n + 2 * k + 1 + 2 * c))
            - k * math.sqrt(1 - 4 / (n + 2 * k + 3 + 2 * c)))


def claim_gap(n: int, k: int) -> float:
    """sqrt((n-3)/(n-1)) minus the near-balanced radical difference times k."""
    return (math.sqrt((n - 3) / (n - 1))
            - k * (math.sqrt((n + 2 * k) / (n + 2 * k + 4))
                   - math.sqrt((n + 2 * k - 2) / (n + 2 * k + 2))))


def companion_gap(n: int, k: int) -> float:
    """sqrt((n-3)/(n-1)) minus k * (sqrt((n-2)/n) - sqrt((n-3)/(n-1)))."""
    return (math.sqrt((n - 3) / (n - 1))
            - k * (math.sqrt((n - 2) / n) - math.sqrt((n - 3) / (n - 1))))


def claim_polynomial(n: int, k: int) -> int:
    """Exact integer value of the degree-6 polynomial certifying claim_gap > 0."""
    return ((64 * n**2 - 256 * n + 192) * k**6
            + (128 * n**3 - 256 * n**2 - 640 * n + 768) * k**5
            + (96 * n**4 - 1072 * n**2 + 352 * n + 560) * k**4
            + (32 * n**5 + 64 * n**4 - 448 * n**3 - 416 * n**2 + 1312 * n - 1056) * k**3
            + (4 * n**6 + 16 * n**5 - 76 * n**4 - 192 * n**3 + 632 * n**2 + 368 * n - 2256) * k**2
            + (-8 * n**5 - 24 * n**4 + 152 * n**3 + 408 * n**2 - 720 * n - 1728) * k
            - n**6 - 6 * n**5 + 11 * n**4 + 108 * n**3 + 44 * n**2 - 480 * n - 576)


def _check_balanced_step_any(n: int, kappa: int) -> LemmaCheck:
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    steps = _step_count(n, kappa)
    grid = f"n={n}, kappa={kappa}, c in [0, {steps - 1}]"
    if steps == 0:
        return LemmaCheck("balanced-step", grid, 0)
    failures, findings = [], []
    values = []
    for c in range(steps):
        val = step_value(n, kappa, c)
        values.append(val)
        other = step_value_explicit(n, kappa, c)
        if abs(val - other) > DOUBLE_ENTRY_TOL:
            failures.append(f"f(c={c}) routes disagree at n={n}, kappa={kappa}: {val!r} vs {other!r}")
        if val < 0:
            failures.append(f"f(c={c}) = {val!r} negative at n={n}, kappa={kappa}")
        elif val == 0:
            findings.append(f"f(c={c}) tight at n={n}, kappa={kappa}")
    for c in range(1, steps):
        if values[c] < values[c - 1]:
            failures.append(f"f decreased at c={c}, n={n}, kappa={kappa}")
        elif values[c] == values[c - 1]:
            findings.append(f"f flat at c={c}, n={n}, kappa={kappa}")
    cg, pg = claim_gap(n, kappa), companion_gap(n, kappa)
    poly = claim_polynomial(n, kappa)
    if cg <= 0:
        failures.append(f"claim gap {cg!r} not positive at n={n}, kappa={kappa}")
    if pg <= 0:
        failures.append(f"companion gap {pg!r} not positive at n={n}, kappa={kappa}")
    if poly <= 0:
        failures.append(f"certificate polynomial {poly} not positive at n={n}, kappa={kappa}")
    if n % 2 == 0 and abs((cg + pg) - values[0]) > DOUBLE_ENTRY_TOL:
        failures.append(f"gap decomposition of f(0) fails at n={n}, kappa={kappa}")
    return LemmaCheck("balanced-step", grid, steps + max(0, steps - 1) + 3,
                      tuple(failures), tuple(findings))


def check_balanced_step_even(n: int, kappa: int) -> LemmaCheck:
    """Step positivity and monotonicity for even n >= 8."""
    if n % 2 != 0:
        raise ValueError(f"even-order step check requires even n, got n={n}")
    if n < 8:
        raise ValueError(f"even-order step check requires n >= 8, got n={n}")
    return _check_balanced_step_any(n, kappa)


def check_balanced_step_odd(n: int, kappa: int) -> LemmaCheck:
    """Step positivity and monotonicity for odd n >= 7."""
    if n % 2 != 1:
        raise ValueError(f"odd-order step check requires odd n, got n={n}")
    if n < 7:
        raise ValueError(f"odd-order step check requires n >= 7, got n={n}")
    return _check_balanced_step_any(n, kappa)


def check_balanced_step(n: int, kappa: int) -> LemmaCheck:
    if n % 2 == 0:
        return check_balanced_step_even(n, kappa)
    return check_balanced_step_odd(n, kappa)


# ==================================================================
# the value chain over x and the closed maximum formulas
# ==================================================================

def check_chain_unimodal(n: int, kappa: int) -> LemmaCheck:
    """ABS of the kappa-xy family rises strictly to x = floor(n/2), then falls.

    The chain runs over x from kappa to n - kappa - 2 with y = n - kappa
    - 1 - x; fewer than two chain points is reported as vacuous.
    """
    if n < 7:
        raise ValueError(f"chain check requires n >= 7, got n={n}")
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    x_lo, x_hi = kappa, n - kappa - 2
    grid = f"n={n}, kappa={kappa}, x in [{x_lo}, {x_hi}]"
    if x_hi <= x_lo:
        return LemmaCheck("chain-unimodal", grid, 0)
    peak = n // 2
    values = {x: abs_kappa_xy_closed(x, n - kappa - 1 - x, kappa)
              for x in range(x_lo, x_hi + 1)}
    failures, findings = [], []
    checked = 0
    for x in range(x_lo + 1, x_hi + 1):
        checked += 1
        rising, prev, cur = x <= peak, values[x - 1], values[x]
        if rising and cur <= prev:
            (findings if cur == prev else failures).append(
                f"chain not strictly rising at x={x}, n={n}, kappa={kappa}")
        if not rising and cur >= prev:
            (findings if cur == prev else failures).append(
                f"chain not strictly falling at x={x}, n={n}, kappa={kappa}")
    if max(values, key=values.get) != peak:
        failures.append(f"chain peak is not x={peak} at n={n}, kappa={kappa}")
    return LemmaCheck("chain-unimodal", grid, checked, tuple(failures), tuple(findings))


def bipartite_extremal_params(n: int, kappa: int) -> tuple | None:
    """Parameters of the claimed maximum for connected bipartite graphs
    of order n >= 7 and connectivity kappa, or None when out of scope.

    Returns ("complete-bipartite", a, b) or ("kappa-xy", x, y, kappa).
    """
    if n < 7 or kappa < 1:
        return None
    if 2 * kappa in (n - 2, n - 1, n):
        return ("complete-bipartite", kappa, n - kappa)
    if n % 2 == 0 and kappa <= (n - 4) // 2:
        return ("kappa-xy", n // 2, (n - 2 * kappa - 2) // 2, kappa)
    if n % 2 == 1 and kappa <= (n - 3) // 2:
        return ("kappa-xy", (n - 1) // 2, (n - 2 * kappa - 1) // 2, kappa)
    return None  # kappa exceeds what order n allows: empty class


def bipartite_extremal_value(n: int, kappa: int) -> float:
    """The claimed maximum ABS value, from the per-case closed formulas."""
    params = bipartite_extremal_params(n, kappa)
    if params is None:
        raise ValueError(f"no closed maximum for n={n}, kappa={kappa}")
    if params[0] == "complete-bipartite":
        return kappa * (n - kappa) * weight_of_sum(n)
    k = kappa
    if n % 2 == 0:
        return (n * (n - 2 * k - 2) // 4 * weight_of_sum(n - 1)
                + n * k // 2 * weight_of_sum(n)
                + k * math.sqrt(1 - 4 / (2 * k + n + 2)))
    return ((n - 1) * (n - 2 * k - 1) // 4 * weight_of_sum(n - 1)
            + (n - 1) * k // 2 * weight_of_sum(n)
            + k * math.sqrt(1 - 4 / (2 * k + n + 1)))


def bipartite_extremal_graph(n: int, kappa: int):
    params = bipartite_extremal_params(n, kappa)
    if params is None:
        raise ValueError(f"no extremal construction for n={n}, kappa={kappa}")
    if params[0] == "complete-bipartite":
        return build_complete_bipartite(params[1], params[2])
    return build_kappa_xy(*params[1:])


def check_final_formulas(n: int, kappa: int) -> LemmaCheck:
    """Case formula, family closed form, and built graph agree for (n, kappa)."""
    params = bipartite_extremal_params(n, kappa)
    grid = f"n={n}, kappa={kappa}"
    if params is None:
        return LemmaCheck("final-formulas", grid, 0)
    stated = bipartite_extremal_value(n, kappa)
    if params[0] == "complete-bipartite":
        closed = abs_multipartite_closed(params[1:])
    else:
        closed = abs_kappa_xy_closed(*params[1:])
    direct = abs_index(bipartite_extremal_graph(n, kappa))
    failures = []
    # 1e-12 relative: the three routes are algebraically equal
    scale = max(1.0, abs(stated))
    if abs(stated - closed) > 1e-12 * scale:
        failures.append(f"case formula vs family closed form differ at {grid}")
    if abs(stated - direct) > 1e-12 * scale:
        failures.append(f"case formula vs built graph differ at {grid}")
    return LemmaCheck("final-formulas", grid, 2, tuple(failures))


def pendant_relocation_margin(q: int, d: int) -> tuple[float, float]:
    """(difference expression, bound) for a pendant moved onto the long path.

    q is the clique size (n - p >= 3), d the degree of the splice
    vertex.  Both returned values must be negative: expression < bound <= 0.
    """
    if q < 3:
        raise ValueError(f"need clique size q >= 3, got q={q}")
    if d < 2:
        raise ValueError(f"need splice degree d >= 2, got d={d}")
    bound = 1 / math.sqrt(2) - weight_of_sum(q + 1)
    diff = (1 / math.sqrt(3)
            + weight_of_sum(d + 2) - weight_of_sum(d + 1)
            - weight_of_sum(q + 1)
            + (q - 1) * (weight_of_sum(2 * q - 2) - weight_of_sum(2 * q - 1)))
    return diff, bound


# ==================================================================
# grid sweeps
# ==================================================================

def _partitions(total: int, k: int, minimum: int = 1):
    """Ascending partitions of total into exactly k parts of size >= minimum."""
    if k == 1:
        if total >= minimum:
            yield (total,)
        return
    for first in range(minimum, total // k + 1):
        for rest in _partitions(total - first, k - 1, first):
            yield (first,) + rest


def _shift_pairs(parts):
    """Index pairs (i, j), deduplicated by value, with parts[i] - parts[j] >= 2."""
    seen = set()
    for j in range(len(parts)):
        for i in range(j + 1, len(parts)):
            pair = (parts[i], parts[j])
            if parts[i] - parts[j] >= 2 and pair not in seen:
                seen.add(pair)
                yield i, j


def _positivity(lemma: str, grid: str, items) -> LemmaCheck:
    """items yields (label, diff); diff must be > 0, == 0 is a finding."""
    failures, findings = [], []
    checked = 0
    for label, diff in items:
        checked += 1
        if diff < 0:
            failures.append(f"{label} diff={diff!r}")
        elif diff == 0:
            findings.append(f"{label} tight")
    return LemmaCheck(lemma, grid, checked, tuple(failures[:50]), tuple(findings[:50]))


def _sweep_zeta(n_max, k_max, r_max):
    parts = [check_zeta_monotone(t, t + 3, t + max(n_max, 4)) for t in range(1, 11)]
    return _merge("zeta-monotone", f"t in [1, 10], x to t+{max(n_max, 4)}", parts)


def _sweep_zeta1(n_max, k_max, r_max):
    parts = [check_zeta1_monotone(n) for n in range(3, n_max + 1)]
    return _merge("zeta1-monotone", f"n in [3, {n_max}], x in [1, 2n-4]", parts)


def _sweep_turan_shift(n_max, k_max, r_max):
    def items():
        for n in range(4, n_max + 1):
            for k in range(2, min(k_max, n) + 1):
                for parts in _partitions(n, k):
                    for i, j in _shift_pairs(parts):
                        yield (f"parts={parts} i={i} j={j}",
                               check_multipartite_shift(parts, i, j))
    return _positivity("turan-shift", f"n <= {n_max}, k <= {k_max}", items())


def _sweep_join_shift(n_max, k_max, r_max):
    def items():
        for r in range(1, r_max + 1):
            for m in range(4, n_max - r + 1):
                for k in range(2, min(k_max, m) + 1):
                    for parts in _partitions(m, k):
                        for i, j in _shift_pairs(parts):
                            yield (f"r={r} parts={parts} i={i} j={j}",
                                   check_kr_join_shift(r, parts, i, j))
    return _positivity("join-shift", f"n <= {n_max}, k <= {k_max}, r <= {r_max}", items())


def _merge_tuples(n_max):
    """All six-group tuples meeting the merge hypotheses with total <= n_max."""
    for n1 in range(1, n_max + 1):
        for n3 in range(2, n_max - n1 + 1):
            for n4 in range(1, n_max - n1 - n3 + 1):
                for n6 in range(1, n_max - n1 - n3 - n4 + 1):
                    room = n_max - n1 - n3 - n4 - n6
                    for n5 in range(0, min(n1, n3, room) + 1):
                        for n2 in range(0, min(n4, n6, room - n5) + 1):
                            yield (n1, n2, n3, n4, n5, n6)


def _sweep_sixpart_merge(n_max, k_max, r_max):
    def items():
        for t in _merge_tuples(n_max):
            yield f"sizes={t}", check_sixpart_merge(t)
    return _positivity("sixpart-merge", f"total <= {n_max}", items())


def _sweep_tail_merge(n_max, k_max, r_max):
    def items():
        for n2 in range(1, n_max + 1):
            for n3 in range(1, n_max - n2 + 1):
                for n4 in range(2, n_max - n2 - n3 + 1):
                    for n6 in range(n2, n_max - n2 - n3 - n4 + 1):
                        yield (f"sizes=(0,{n2},{n3},{n4},0,{n6})",
                               check_tail_merge(n2, n3, n4, n6))
    return _positivity("tail-merge", f"total <= {n_max}, kappa >= 1", items())


def _sweep_head_merge(n_max, k_max, r_max):
    def items():
        for n1 in range(2, n_max + 1):
            for n5 in range(1, n_max - n1 + 1):
                for n3 in range(n5, n_max - n1 - n5 + 1):
                    for n6 in range(1, n_max - n1 - n3 - n5 + 1):
                        yield (f"sizes=({n1},0,{n3},0,{n5},{n6})",
                               check_head_merge(n1, n3, n5, n6))
    return _positivity("head-merge", f"total <= {n_max}, kappa >= 1", items())


def _sweep_kappa_shift(n_max, k_max, r_max):
    def items():
        for kappa in range(1, n_max - 3):
            for x in range(1, n_max + 1):
                for y in range(max(2, x + 1 - kappa), n_max - kappa - x):
                    yield (f"x={x} y={y} kappa={kappa}",
                           check_kappa_shift(x, y, kappa))
    return _positivity("kappa-shift", f"n <= {n_max}", items())


def _sweep_balanced_step(n_max, k_max, r_max):
    parts = [check_balanced_step(n, kappa)
             for n in range(7, n_max + 1)
             for kappa in range(1, (n - 2) // 2 + 1)]
    return _merge("balanced-step", f"n in [7, {n_max}], all feasible kappa", parts)


def _sweep_chain(n_max, k_max, r_max):
    parts = [check_chain_unimodal(n, kappa)
             for n in range(7, n_max + 1)
             for kappa in range(1, (n - 2) // 2 + 1)]
    return _merge("chain-unimodal", f"n in [7, {n_max}], all feasible kappa", parts)


def _sweep_final_formulas(n_max, k_max, r_max):
    parts = [check_final_formulas(n, kappa)
             for n in range(7, n_max + 1)
             for kappa in range(1, n // 2 + 1)]
    return _merge("final-formulas", f"n in [7, {n_max}], all feasible kappa", parts)


def _sweep_pendant(n_max, k_max, r_max):
    failures = []
    checked = 0
    for q in range(3, n_max + 1):
        for d in range(2, n_max + 1):
            checked += 1
            diff, bound = pendant_relocation_margin(q, d)
            if not diff < bound <= 0:
                failures.append(f"pendant margin fails at q={q}, d={d}")
    return LemmaCheck("pendant-relocation", f"q in [3, {n_max}], d in [2, {n_max}]",
                      checked, tuple(failures[:50]))


def _sweep_edge_add(n_max, k_max, r_max):
    from .enumeration import connected_graphs  # only this sweep needs the enumerator
    cap = min(n_max, 6)
    failures, findings = [], []
    checked = 0
    for n in range(2, cap + 1):
        for g in connected_graphs(n):
            base = abs_index(g)
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    checked += 1
                    gained = abs_index(add_edge(g, u, v)) - base
                    if gained < 0:
                        failures.append(f"edge ({u},{v}) lowers ABS on n={n} graph")
                    elif gained == 0:
                        findings.append(f"edge ({u},{v}) leaves ABS tight on n={n} graph")
    return LemmaCheck("edge-add", f"connected graphs, n <= {cap}, every non-edge",
                      checked, tuple(failures[:50]), tuple(findings[:50]))


def _sweep_double_entry(n_max, k_max, r_max):
    cap = min(n_max, DOUBLE_ENTRY_MAX)
    failures = []
    checked = 0

    def compare(label, closed_diff, built_diff):
        nonlocal checked
        checked += 1
        if abs(closed_diff - built_diff) > DOUBLE_ENTRY_TOL:
            failures.append(f"{label}: closed {closed_diff!r} vs built {built_diff!r}")

    for n in range(4, cap + 1):
        for k in range(2, min(k_max, n) + 1):
            for parts in _partitions(n, k):
                for i, j in _shift_pairs(parts):
                    shifted = list(parts)
                    shifted[i] -= 1
                    shifted[j] += 1
                    built = (abs_index(build_complete_multipartite(shifted))
                             - abs_index(build_complete_multipartite(parts)))
                    compare(f"turan-shift {parts} ({i},{j})",
                            check_multipartite_shift(parts, i, j), built)
    for r in range(1, min(r_max, 3) + 1):
        for m in range(4, cap - r + 1):
            for parts in _partitions(m, min(k_max, 3)):
                for i, j in _shift_pairs(parts):
                    shifted = list(parts)
                    shifted[i] -= 1
                    shifted[j] += 1
                    built = (abs_index(build_kr_join_multipartite(r, shifted))
                             - abs_index(build_kr_join_multipartite(r, parts)))
                    compare(f"join-shift r={r} {parts} ({i},{j})",
                            check_kr_join_shift(r, parts, i, j), built)
    for t in _merge_tuples(cap):
        built = (abs_index(build_sixpart(sixpart_merge_target(t), check=False))
                 - abs_index(build_sixpart(t, check=False)))
        compare(f"sixpart-merge {t}", check_sixpart_merge(t), built)
    for n2 in range(1, cap + 1):
        for n3 in range(1, cap - n2 + 1):
            for n4 in range(2, cap - n2 - n3 + 1):
                for n6 in range(n2, cap - n2 - n3 - n4 + 1):
                    built = (abs_index(build_sixpart((0, n2, n3, 1, 0, n6 + n4 - 1), check=False))
                             - abs_index(build_sixpart((0, n2, n3, n4, 0, n6), check=False)))
                    compare(f"tail-merge (0,{n2},{n3},{n4},0,{n6})",
                            check_tail_merge(n2, n3, n4, n6), built)
    for n1 in range(2, cap + 1):
        for n5 in range(1, cap - n1 + 1):
            for n3 in range(n5, cap - n1 - n5 + 1):
                for n6 in range(1, cap - n1 - n3 - n5 + 1):
                    built = (abs_index(build_sixpart((1, 0, n3 + n1 - 1, 0, n5, n6), check=False))
                             - abs_index(build_sixpart((n1, 0, n3, 0, n5, n6), check=False)))
                    compare(f"head-merge ({n1},0,{n3},0,{n5},{n6})",
                            check_head_merge(n1, n3, n5, n6), built)
    for kappa in range(1, cap - 3):
        for x in range(1, cap + 1):
            for y in range(max(2, x + 1 - kappa), cap - kappa - x):
                built = (abs_index(build_kappa_xy(x + 1, y - 1, kappa))
                         - abs_index(build_kappa_xy(x, y, kappa)))
                compare(f"kappa-shift ({x},{y},{kappa})",
                        check_kappa_shift(x, y, kappa), built)
    for n in range(7, cap + 1):
        for kappa in range(1, (n - 2) // 2 + 1):
            for c in range(_step_count(n, kappa)):
                x, y = _balanced_xy(n, kappa, c)
                built = (abs_index(build_kappa_xy(x, y, kappa))
                         - abs_index(build_kappa_xy(x + 1, y - 1, kappa)))
                compare(f"balanced-step n={n} kappa={kappa} c={c}",
                        step_value(n, kappa, c), built)
    return LemmaCheck("double-entry", f"all lemma families, total <= {cap}",
                      checked, tuple(failures[:50]))


_SWEEPS = {
    "zeta-monotone": _sweep_zeta,
    "zeta1-monotone": _sweep_zeta1,
    "turan-shift": _sweep_turan_shift,
    "join-shift": _sweep_join_shift,
    "sixpart-merge": _sweep_sixpart_merge,
    "tail-merge": _sweep_tail_merge,
    "head-merge": _sweep_head_merge,
    "kappa-shift": _sweep_kappa_shift,
    "balanced-step": _sweep_balanced_step,
    "chain-unimodal": _sweep_chain,
    "final-formulas": _sweep_final_formulas,
    "pendant-relocation": _sweep_pendant,
    "edge-add": _sweep_edge_add,
    "double-entry": _sweep_double_entry,
}

LEMMA_ALIASES = {
    "fl1": "sixpart-merge",
    "bl2": "tail-merge",
    "fl3": "head-merge",
    "fil1": "kappa-shift",
    "fil2": "balanced-step",
    "fil3": "balanced-step",
}


def lemma_ids() -> tuple[str, ...]:
    return tuple(sorted(_SWEEPS))


def run_lemma_check(lemma_id: str, n_max: int = 40, k_max: int = 6,
                    r_max: int = 5) -> LemmaCheck:
    """Run one named grid sweep; unknown ids raise ValueError."""
    name = LEMMA_ALIASES.get(lemma_id, lemma_id)
    if name not in _SWEEPS:
        raise ValueError(f"unknown lemma id {lemma_id!r}; known: {', '.join(lemma_ids())}")
    if n_max < 7:
        raise ValueError("n_max must be >= 7")
    return _SWEEPS[name](n_max, k_max, r_max)


def run_all_lemma_checks(n_max: int = 40, k_max: int = 6, r_max: int = 5) -> list[LemmaCheck]:
    return [run_lemma_check(name, n_max, k_max, r_max) for name in lemma_ids()]
