"""Inequality toolkit: single checks, their preconditions, grid sweeps."""

import math

import pytest

from absgraph.absindex import abs_index
from absgraph.families import abs_kappa_xy_closed, build_kappa_xy, build_sixpart
from absgraph.lemmas import (LemmaCheck, bipartite_extremal_graph,
                             bipartite_extremal_params,
                             bipartite_extremal_value, check_balanced_step,
                             check_balanced_step_even, check_balanced_step_odd,
                             check_chain_unimodal, check_final_formulas,
                             check_head_merge, check_kappa_shift,
                             check_kr_join_shift, check_multipartite_shift,
                             check_sixpart_merge, check_tail_merge,
                             check_zeta1_monotone, check_zeta_monotone,
                             claim_gap, claim_polynomial, companion_gap,
                             lemma_ids, pendant_relocation_margin,
                             run_lemma_check, sixpart_merge_target, step_value,
                             step_value_explicit, zeta, zeta1)


def test_zeta_is_negative_and_increasing():
    values = [zeta(2, x) for x in range(5, 30)]
    assert all(v < 0 for v in values)
    assert all(b > a for a, b in zip(values, values[1:]))
    check = check_zeta_monotone(2, 5, 40)
    assert check.verdict == "pass" and not check.findings
    with pytest.raises(ValueError):
        zeta(3, 5)
    with pytest.raises(ValueError):
        check_zeta_monotone(3, 5, 10)


def test_zeta1_is_positive_and_increasing():
    values = [zeta1(10, x) for x in range(1, 17)]
    assert all(v > 0 for v in values)
    assert all(b > a for a, b in zip(values, values[1:]))
    assert check_zeta1_monotone(10).verdict == "pass"
    with pytest.raises(ValueError):
        zeta1(10, 18)


def test_multipartite_shift_examples():
    assert check_multipartite_shift((4, 2), 0, 1) > 0
    assert check_multipartite_shift((5, 1, 1), 0, 1) > 0
    assert check_multipartite_shift((4, 1, 1), 0, 2) > 0
    with pytest.raises(ValueError):
        check_multipartite_shift((3, 3), 0, 1)


def test_kr_join_shift_examples():
    assert check_kr_join_shift(1, (4, 2), 0, 1) > 0
    assert check_kr_join_shift(3, (3, 1), 0, 1) > 0
    with pytest.raises(ValueError):
        check_kr_join_shift(2, (2, 2), 0, 1)


def test_sixpart_merge_examples():
    assert check_sixpart_merge((1, 0, 2, 1, 1, 1)) > 0
    assert check_sixpart_merge((2, 1, 2, 1, 1, 1)) > 0
    with pytest.raises(ValueError):
        check_sixpart_merge((1, 0, 1, 1, 1, 1))  # middle group too small
    with pytest.raises(ValueError):
        check_sixpart_merge((1, 2, 2, 1, 0, 1))  # n4 < n2
    assert sixpart_merge_target((2, 1, 2, 1, 1, 1)) == (4, 0, 1, 1, 2, 0)


def test_tail_and_head_merges():
    assert check_tail_merge(1, 1, 2, 1) >= 0
    assert check_head_merge(2, 1, 1, 1) >= 0
    with pytest.raises(ValueError):
        check_tail_merge(1, 1, 1, 1)  # n4 must be >= 2
    with pytest.raises(ValueError):
        check_head_merge(1, 1, 1, 1)  # n1 must be >= 2
    with pytest.raises(ValueError):
        check_tail_merge(3, 1, 2, 2)  # n6 < n2


def test_kappa_shift_examples():
    assert check_kappa_shift(1, 3, 1) > 0
    assert check_kappa_shift(2, 2, 2) > 0
    with pytest.raises(ValueError):
        check_kappa_shift(3, 1, 1)  # y - 1 would empty a group
    with pytest.raises(ValueError):
        check_kappa_shift(3, 2, 0)


def test_balanced_step_even_small():
    check = check_balanced_step_even(8, 1)
    assert check.verdict == "pass"
    assert "c in [0, 0]" in check.grid
    assert check_balanced_step_even(20, 3).verdict == "pass"
    with pytest.raises(ValueError):
        check_balanced_step_even(7, 1)
    with pytest.raises(ValueError):
        check_balanced_step_even(6, 1)


def test_balanced_step_odd_small():
    assert check_balanced_step_odd(7, 1).verdict == "pass"
    assert check_balanced_step_odd(21, 4).verdict == "pass"
    with pytest.raises(ValueError):
        check_balanced_step_odd(8, 1)


def test_balanced_step_dispatch_and_vacuous():
    assert check_balanced_step(8, 2).verdict == "vacuous"
    assert check_balanced_step(9, 2).verdict == "pass"


def test_step_value_routes_agree():
    for n in range(7, 26):
        for kappa in range(1, (n - 2) // 2 + 1):
            bound = (n - 2 * kappa - 6) // 2 if n % 2 == 0 else (n - 2 * kappa - 5) // 2
            for c in range(bound + 1):
                direct = step_value(n, kappa, c)
                explicit = step_value_explicit(n, kappa, c)
                assert abs(direct - explicit) < 1e-10
                assert direct > 0


def test_claim_decomposition_even():
    for n in (8, 10, 14, 20, 40):
        for kappa in range(1, (n - 6) // 2 + 1):
            f0 = step_value(n, kappa, 0)
            assert claim_gap(n, kappa) + companion_gap(n, kappa) == pytest.approx(
                f0, abs=1e-12)
            assert claim_gap(n, kappa) > 0
            assert companion_gap(n, kappa) > 0
            assert claim_polynomial(n, kappa) > 0


def test_chain_unimodal_peaks():
    check = check_chain_unimodal(10, 2)
    assert check.verdict == "pass"
    values = {x: abs_kappa_xy_closed(x, 10 - 2 - 1 - x, 2) for x in range(2, 7)}
    assert max(values, key=values.get) == 5
    check = check_chain_unimodal(9, 1)
    assert check.verdict == "pass"
    values = {x: abs_kappa_xy_closed(x, 9 - 1 - 1 - x, 1) for x in range(1, 7)}
    assert max(values, key=values.get) == 4
    assert check_chain_unimodal(8, 3).verdict == "vacuous"
    with pytest.raises(ValueError):
        check_chain_unimodal(6, 1)


def test_bipartite_extremal_cases():
    assert bipartite_extremal_params(8, 3) == ("complete-bipartite", 3, 5)
    assert bipartite_extremal_params(8, 4) == ("complete-bipartite", 4, 4)
    assert bipartite_extremal_params(8, 1) == ("kappa-xy", 4, 2, 1)
    assert bipartite_extremal_params(9, 2) == ("kappa-xy", 4, 2, 2)
    assert bipartite_extremal_params(9, 4) == ("complete-bipartite", 4, 5)
    assert bipartite_extremal_params(6, 1) is None
    assert bipartite_extremal_params(8, 5) is None


def test_bipartite_extremal_value_matches_graph():
    for n in range(7, 15):
        for kappa in range(1, n // 2 + 1):
            value = bipartite_extremal_value(n, kappa)
            g = bipartite_extremal_graph(n, kappa)
            assert value == pytest.approx(abs_index(g), rel=1e-12)
    assert bipartite_extremal_value(8, 4) == pytest.approx(
        16 * math.sqrt(3 / 4), rel=1e-14)
    with pytest.raises(ValueError):
        bipartite_extremal_value(6, 1)


def test_final_formula_checks():
    assert check_final_formulas(8, 1).verdict == "pass"
    assert check_final_formulas(9, 2).verdict == "pass"
    assert check_final_formulas(8, 4).verdict == "pass"
    assert check_final_formulas(8, 5).verdict == "vacuous"


def test_lemma_check_dataclass_shape():
    check = LemmaCheck("x", "grid", 3, ("bad",), ())
    assert check.verdict == "fail"
    assert LemmaCheck("x", "grid", 0).verdict == "vacuous"
    d = check.to_dict()
    assert d["failures"] == ["bad"] and d["verdict"] == "fail"


def test_run_lemma_check_registry():
    for name in lemma_ids():
        check = run_lemma_check(name, n_max=12, k_max=4, r_max=2)
        assert check.verdict in ("pass", "vacuous"), (name, check.failures[:3])
        assert not check.findings, (name, check.findings[:3])
    with pytest.raises(ValueError):
        run_lemma_check("nosuch")
    with pytest.raises(ValueError):
        run_lemma_check("turan-shift", n_max=5)


def test_run_lemma_check_aliases():
    direct = run_lemma_check("balanced-step", n_max=10)
    for alias in ("fil2", "fil3"):
        assert run_lemma_check(alias, n_max=10) == direct
    assert run_lemma_check("fl1", n_max=9) == run_lemma_check("sixpart-merge", n_max=9)
    assert run_lemma_check("bl2", n_max=9).lemma == "tail-merge"
    assert run_lemma_check("fl3", n_max=9).lemma == "head-merge"
    assert run_lemma_check("fil1", n_max=9).lemma == "kappa-shift"


def test_pendant_relocation_margins():
    for q in range(3, 20):
        for d in range(2, 20):
            diff, bound = pendant_relocation_margin(q, d)
            assert diff < bound <= 0
    with pytest.raises(ValueError):
        pendant_relocation_margin(2, 3)
    with pytest.raises(ValueError):
        pendant_relocation_margin(4, 1)


def test_double_entry_against_builds():
    # spot checks duplicating the sweep's bookkeeping on single tuples
    parts = (2, 1, 2, 1, 1, 1)
    closed = check_sixpart_merge(parts)
    built = (abs_index(build_sixpart(sixpart_merge_target(parts), check=False))
             - abs_index(build_sixpart(parts, check=False)))
    assert closed == pytest.approx(built, abs=1e-10)
    closed = check_kappa_shift(2, 3, 1)
    built = abs_index(build_kappa_xy(3, 2, 1)) - abs_index(build_kappa_xy(2, 3, 1))
    assert closed == pytest.approx(built, abs=1e-10)
