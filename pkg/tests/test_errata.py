from eaqmds.errata import ENTRY_IDS, errata_report, render_json, render_text
from eaqmds.families import family_grid


def test_report_contains_exactly_the_fixture_entries():
    entries = errata_report()
    assert tuple(e.entry_id for e in entries) == ENTRY_IDS == (
        "E1", "E2", "E3", "E4", "E5", "E6", "E7",
    )


def test_e1_dimension_term():
    e1 = errata_report()[0]
    w = e1.data["witness"]
    assert (w["stated_value"], w["corrected_value"]) == (12, 33)
    assert w["classical_k"] == 59 and w["c"] == 21


def test_e2_sign_witness():
    e2 = errata_report()[1]
    w = e2.data["witness"]
    assert (w["q"], w["m"], w["stated_value"], w["corrected_value"]) == (23, 2, 177, 33)


def _codes_by_q(entries):
    return {e.data["q"]: e.data["codes"] for e in entries if e.entry_id in ("E3", "E4", "E5", "E6")}


def test_example_corrections_key_values():
    by_q = _codes_by_q(errata_report())
    assert {c["m"]: (c["printed_k"], c["computed_k"]) for c in by_q[37]} == {
        2: (401, 145),
        3: (489, 57),
    }
    assert {c["m"]: (c["printed_k"], c["computed_k"]) for c in by_q[47]} == {
        2: (609, 273),
        3: (737, 145),
        4: (825, 57),
    }
    assert {c["m"]: (c["printed_k"], c["computed_k"]) for c in by_q[32]} == {
        2: (312, 96),
        3: (380, 28),
    }
    q128 = {c["m"]: (c["printed_k"], c["computed_k"]) for c in by_q[128]}
    assert q128[2] == (3768, 2784)
    assert q128[12] == (6488, 64)
    assert sorted(q128) == list(range(2, 13))


def test_both_dimension_routes_agree_everywhere():
    for codes in _codes_by_q(errata_report()).values():
        for c in codes:
            assert c["k_via_2k_minus_n_plus_c"] == c["k_via_singleton_equality"] == c["computed_k"]


def test_e7_matches_independent_inequality_scan():
    e7 = errata_report(q_max=200)[6]
    got = {(v["q"], v["m"]) for v in e7.data["violations"]}
    # re-derive independently from the closed forms alone
    want = set()
    for spec, m in family_grid(200):
        d = 2 * (m - 1) * spec.q.q + 2
        if 2 * d > spec.n + 2:
            want.add((spec.q.q, m))
    assert got == want
    assert {(43, 4), (37, 3), (32, 3), (47, 4)} <= got
    assert {(128, m) for m in range(8, 13)} <= got
    assert (23, 2) not in got and (43, 3) not in got
    assert not any(q == 128 and m < 8 for q, m in got)


def test_e6_notes_the_exponent_typo():
    e6 = errata_report()[5]
    assert "e=7" in e6.data["note"]


def test_renderers_are_deterministic():
    a, b = errata_report(), errata_report()
    assert render_text(a) == render_text(b)
    assert render_json(a) == render_json(b)
    txt = render_text(a)
    for eid in ENTRY_IDS:
        assert f"{eid}: " in txt
