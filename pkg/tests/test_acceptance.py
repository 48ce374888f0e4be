"""End-to-end acceptance gate.

One test per numbered criterion, in order.  Each prints a single
"[criterion N] PASS/FAIL" line (visible under -s; the -v test names carry
the same numbers) and then asserts.  Criteria 1 and 2 rebuild their
catalogs from scratch because they are timed; the rest share one fixture.
"""

from __future__ import annotations

import itertools
import json
import random
import time

import numpy as np

from cotorsion_workbench import cli
from cotorsion_workbench.exactla import FieldSpec
from cotorsion_workbench.homology import ext_space
from cotorsion_workbench.quiverrep import (
    Quiver,
    Rep,
    RepCategory,
    enumerate_indecomposables,
    is_exact,
)
from cotorsion_workbench.trimat import (
    Bimodule,
    enumerate_triple_indecomposables,
    regular_row_triple,
    tensor_over_lambda,
    u_row_triple,
    verify_ext_formula,
)
from cotorsion_workbench.cotorsion import (
    builtin_class,
    is_hereditary,
    is_left_n_cotorsion,
    is_right_n_cotorsion,
    make_A,
    make_I,
    make_P,
    mod_class,
    vee,
    verify_perp_formulas,
    verify_transfer_theorem,
    wedge,
)

ROW = Quiver(("1", "2"), (("a", "1", "2"),))
COLUMN = Quiver(("3",), ())
P = 2

_shared: dict = {}


def _fresh(p=P):
    u = Bimodule(
        COLUMN, ROW, p, {("3", "1"): 1, ("3", "2"): 1}, right_action={"a": {"3": [[1]]}}
    )
    acat = enumerate_indecomposables(ROW, FieldSpec(p), 1)
    bcat = enumerate_indecomposables(COLUMN, FieldSpec(p), 1)
    return u, acat, bcat, enumerate_triple_indecomposables(acat, bcat, u)


def _fix():
    if "data" not in _shared:
        _shared["data"] = _fresh()
    return _shared["data"]


def _verdict(num, ok, detail):
    print(f"[criterion {num}] {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, f"criterion {num}: {detail}"


def _cli_run(tmp_path, monkeypatch, config_name, argv):
    monkeypatch.setenv("WORKBENCH_CACHE_DIR", str(tmp_path / "cache"))
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(cli._bundled_config(config_name)))
    return cli.main(argv[:1] + ["--config", str(cfg)] + argv[1:])


def test_criterion_01_catalog_reproduction():
    t0 = time.monotonic()
    _, _, _, tcat = _fresh()
    elapsed = time.monotonic() - t0
    got = sorted(
        (t.m1.dims["1"], t.m1.dims["2"], t.m2.dims["3"]) for t in tcat.entries
    )
    want = sorted(
        [(0, 0, 1), (0, 1, 1), (1, 1, 1), (0, 1, 0), (1, 1, 0), (1, 0, 0)]
    )
    ok = len(tcat.entries) == 6 and got == want and elapsed < 10.0
    _verdict(1, ok, f"6 triples, dim vectors {got}, built in {elapsed:.2f}s")


def test_criterion_02_example_a_class_listings():
    t0 = time.monotonic()
    _, acat, bcat, tcat = _fresh()
    ainj = builtin_class(acat, "inj")
    ball = builtin_class(bcat, "all")
    monic = sorted(make_P(tcat, ainj, ball).names())
    componentwise = sorted(make_A(tcat, ainj, ball).names())
    lifted = sorted(vee(make_P(tcat, ainj, ball), 1).names())
    elapsed = time.monotonic() - t0
    ok = (
        monic == ["T(0,0|1)", "T(1,0|0)", "T(1,1|1)"]
        and componentwise == ["T(0,0|1)", "T(1,0|0)", "T(1,1|0)", "T(1,1|1)"]
        and lifted == ["T(0,0|1)", "T(0,1|1)", "T(1,0|0)", "T(1,1|1)"]
        and elapsed < 30.0
    )
    _verdict(2, ok, f"three listings exact, computed in {elapsed:.2f}s")


def test_criterion_03_example_a_verdict(tmp_path, monkeypatch):
    _, acat, bcat, tcat = _fix()
    ainj = builtin_class(acat, "inj")
    ball = builtin_class(bcat, "all")
    rep = verify_transfer_theorem(tcat, ainj, ainj, ball, ball, 2, "right")
    assert set(rep.hypotheses) == {"tor_vanishing", "closure_extension_closed"}
    decided = all(v.ok is True for v in rep.hypotheses.values())
    code = _cli_run(
        tmp_path, monkeypatch, "example_a.json",
        ["verify", "--theorem", "transfer", "--side", "right"],
    )
    ok = rep.status == "pass" and decided and code == 0
    _verdict(3, ok, f"right transfer status {rep.status!r}, cli exit {code}")


def test_criterion_04_example_b_listings_and_verdict(tmp_path, monkeypatch):
    _, acat, bcat, tcat = _fix()
    aproj = builtin_class(acat, "proj")
    ball = builtin_class(bcat, "all")
    componentwise = sorted(make_A(tcat, aproj, ball).names())
    epi = sorted(make_I(tcat, aproj, ball).names())
    lowered = sorted(wedge(make_I(tcat, aproj, ball), 1).names())
    rep = verify_transfer_theorem(tcat, aproj, aproj, ball, ball, 2, "left")
    code = _cli_run(
        tmp_path, monkeypatch, "example_b.json",
        ["verify", "--theorem", "transfer", "--side", "left"],
    )
    ok = (
        componentwise
        == ["T(0,0|1)", "T(0,1|0)", "T(0,1|1)", "T(1,1|0)", "T(1,1|1)"]
        and epi == ["T(0,1|0)", "T(1,1|0)", "T(1,1|1)"]
        and lowered == ["T(0,1|0)", "T(1,0|0)", "T(1,1|0)", "T(1,1|1)"]
        and rep.status == "pass"
        and code == 0
    )
    _verdict(4, ok, f"three listings exact, left transfer {rep.status!r}, cli exit {code}")


def test_criterion_05_ext_formula_cases():
    u, acat, bcat, tcat = _fix()
    outcomes = []
    for case in (1, 2, 3, 4):
        rep = verify_ext_formula(case, u, acat, bcat, tcat, max_degree=3)
        outcomes.append((case, rep.status, len(rep.rows), len(rep.failures)))
    ok = all(s == "pass" and rows > 0 and fails == 0 for _, s, rows, fails in outcomes)
    _verdict(5, ok, f"cases {outcomes}")


def test_criterion_06_tensor_identities():
    u, _, _, tcat = _fix()
    corner_row = u_row_triple(u)
    free_row = regular_row_triple(u)
    checked = 0
    for t in tcat.entries:
        assert tensor_over_lambda(corner_row, t).dimension == t.tensor.rep.total_dim
        assert tensor_over_lambda(free_row, t).dimension == t.m2.total_dim
        checked += 1
    _verdict(6, checked == 6, f"both identities exact on {checked}/6 triples")


def test_criterion_07_perp_formula_cases():
    _, acat, bcat, tcat = _fix()
    ainj = builtin_class(acat, "inj")
    aproj = builtin_class(acat, "proj")
    ball = builtin_class(bcat, "all")
    case1 = verify_perp_formulas(tcat, ainj, ainj, ball, ball, 2)[0]
    case3 = verify_perp_formulas(tcat, aproj, aproj, ball, ball, 2)[2]
    assert case1.case == 1 and case3.case == 3
    ok = (
        case1.status == "pass"
        and not case1.mismatch
        and case3.status == "pass"
        and not case3.mismatch
    )
    _verdict(7, ok, f"case 1 {case1.status!r}, case 3 {case3.status!r}, no mismatches")


def test_criterion_08_axioms_match_characterization():
    _, _, _, tcat = _fix()
    rng = random.Random(7)
    decided = agreed = 0
    for _ in range(24):
        c = mod_class(tcat, rng.sample(range(6), rng.randint(0, 6)))
        d = mod_class(tcat, rng.sample(range(6), rng.randint(0, 6)))
        n = rng.choice([1, 2])
        check = is_right_n_cotorsion if rng.random() < 0.5 else is_left_n_cotorsion
        rep = check(c, d, n)
        if rep.status == "undecided" or rep.characterization.ok is None:
            continue
        decided += 1
        agreed += (rep.status == "pass") == (rep.characterization.ok is True)
    ok = decided >= 20 and agreed == decided
    _verdict(8, ok, f"{agreed}/{decided} decided pairs agree (24 sampled)")


def test_criterion_09_ext_against_brute_force_sequences():
    # independent oracle: enumerate every short exact sequence between
    # catalog entries of the row algebra and count equivalence classes
    cat = RepCategory(ROW, P)
    acat = enumerate_indecomposables(ROW, FieldSpec(P), 1)

    def all_reps(d1, d2):
        for flat in itertools.product(range(P), repeat=d1 * d2):
            yield Rep(
                ROW, P, {"1": d1, "2": d2},
                {"a": np.array(flat, dtype=np.int64).reshape(d2, d1)},
            )

    def all_homs(x, y):
        basis = cat.hom_basis(x, y)
        for coeffs in itertools.product(range(P), repeat=len(basis)):
            yield cat.lincomb(x, y, coeffs, basis)

    def equivalent(s, t):
        (e, i, pi), (e2, i2, pi2) = s, t
        for f in all_homs(e, e2):
            if not cat.is_invertible(f):
                continue
            if all(
                np.array_equal(f.vertex_maps[v] @ i.vertex_maps[v] % P, i2.vertex_maps[v])
                and np.array_equal(pi2.vertex_maps[v] @ f.vertex_maps[v] % P, pi.vertex_maps[v])
                for v in ("1", "2")
            ):
                return True
        return False

    agree = total = 0
    for a in acat.entries:
        for b in acat.entries:
            assert a.total_dim + b.total_dim <= 4
            expected = P ** ext_space(a, b, 1).dimension
            classes = []
            for e in all_reps(a.dims["1"] + b.dims["1"], a.dims["2"] + b.dims["2"]):
                for i in all_homs(b, e):
                    if cat.dim(cat.kernel(i)[0]):
                        continue
                    for pi in all_homs(e, a):
                        if cat.dim(cat.cokernel(pi)[0]):
                            continue
                        if not is_exact([i, pi]):
                            continue
                        ses = (e, i, pi)
                        if not any(equivalent(ses, r) for r in classes):
                            classes.append(ses)
            total += 1
            agree += len(classes) == expected
    _verdict(9, agree == total == 9, f"{agree}/{total} entry pairs agree with the sequence count")


def test_criterion_10_hereditary_equivalence():
    _, acat, bcat, tcat = _fix()
    ainj = builtin_class(acat, "inj")
    aproj = builtin_class(acat, "proj")
    ball = builtin_class(bcat, "all")
    fixtures = [
        ("right", ainj, ainj, 2),
        ("left", aproj, aproj, 2),
        ("right", ball, ball, 2),
        ("left", ball, ball, 2),
        ("right", make_P(tcat, ainj, ball), make_A(tcat, ainj, ball), 2),
        ("left", make_A(tcat, aproj, ball), make_I(tcat, aproj, ball), 2),
    ]
    consistent = 0
    for side, c, d, n in fixtures:
        check = is_right_n_cotorsion if side == "right" else is_left_n_cotorsion
        assert check(c, d, n).passed, "fixture must verify before the equivalence is tested"
        h = is_hereditary(c, d, n, side)
        assert h.consistent is True, (side, c.label, d.label)
        consistent += 1
    _verdict(10, consistent == 6, f"{consistent}/6 verified pairs keep the equivalence")
