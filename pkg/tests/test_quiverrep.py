import itertools
import random

import numpy as np
import pytest

from cotorsion_workbench.quiverrep import (
    Quiver,
    Rep,
    RepCategory,
    RepMorphism,
    all_paths,
    cokernel,
    compose,
    decompose,
    decompose_in,
    direct_sum,
    enumerate_indecomposables,
    hom_basis,
    identity_morphism,
    image,
    injective,
    is_exact,
    is_injective_rep,
    is_iso,
    is_iso_in,
    is_projective_rep,
    kernel,
    opposite,
    projective,
    projective_cover,
    simple,
    validate_quiver,
    zero_morphism,
    zero_rep,
)

A2 = Quiver(("1", "2"), (("a", "1", "2"),))
A3 = Quiver(("1", "2", "3"), (("a", "1", "2"), ("b", "2", "3")))


def test_quiver_constructor_rejects_bad_data():
    with pytest.raises(ValueError):
        Quiver(("1", "1"))
    with pytest.raises(ValueError):
        Quiver(("1", "2"), (("a", "1", "2"), ("a", "2", "1")))
    with pytest.raises(ValueError):
        Quiver(("1",), (("a", "1", "9"),))


def test_validate_quiver_names_the_cycle():
    loop = Quiver(("x", "y"), (("f", "x", "y"), ("g", "y", "x")))
    diag = validate_quiver(loop)
    assert diag is not None
    assert "x" in diag and "y" in diag
    assert validate_quiver(A3) is None


def test_all_paths_orders_by_length_then_arrow_index():
    paths = all_paths(A3)
    assert paths[("1", "1")] == ((),)
    assert paths[("1", "2")] == (("a",),)
    assert paths[("1", "3")] == (("a", "b"),)
    assert paths[("3", "1")] == ()


def test_projective_and_injective_shapes_over_a2():
    p1 = projective(A2, 2, "1")
    p2 = projective(A2, 2, "2")
    s1 = simple(A2, 2, "1")
    i1 = injective(A2, 2, "1")
    i2 = injective(A2, 2, "2")
    assert p1.dim_vector == (1, 1) and p1.arrow_maps["a"].tolist() == [[1]]
    assert p2.dim_vector == (0, 1)
    assert s1.dim_vector == (1, 0)
    assert i1.dim_vector == (1, 0)
    assert i2.dim_vector == (1, 1) and i2.arrow_maps["a"].tolist() == [[1]]
    with pytest.raises(ValueError):
        projective(A2, 2, "7")


def test_rep_validation():
    with pytest.raises(ValueError):
        Rep(A2, 4, {"1": 1})
    with pytest.raises(ValueError):
        Rep(A2, 2, {"1": 1, "2": 1}, {"a": [[1, 0]]})
    with pytest.raises(ValueError):
        Rep(A2, 2, {"1": 1}, {"zz": [[0]]})


def test_morphism_validation_checks_squares():
    p1 = projective(A2, 2, "1")
    identity_morphism(p1)
    with pytest.raises(ValueError):
        RepMorphism(p1, p1, {"1": [[1]], "2": [[0]]})


def test_hom_dimension_table_over_a2():
    p = 2
    p1 = projective(A2, p, "1")
    p2 = projective(A2, p, "2")
    s1 = simple(A2, p, "1")
    table = {
        ("p1", "p1"): 1,
        ("p1", "p2"): 0,
        ("p1", "s1"): 1,
        ("p2", "p1"): 1,
        ("p2", "p2"): 1,
        ("p2", "s1"): 0,
        ("s1", "p1"): 0,
        ("s1", "p2"): 0,
        ("s1", "s1"): 1,
    }
    objs = {"p1": p1, "p2": p2, "s1": s1}
    for (a, b), d in table.items():
        assert len(hom_basis(objs[a], objs[b])) == d, (a, b)


def test_kernel_and_cokernel_of_radical_inclusion():
    p1 = projective(A2, 2, "1")
    p2 = projective(A2, 2, "2")
    incl = hom_basis(p2, p1)[0]
    k, _ = kernel(incl)
    assert k.total_dim == 0
    c, proj = cokernel(incl)
    assert c.dim_vector == (1, 0)
    assert is_iso(c, simple(A2, 2, "1"))
    img, _ = image(incl)
    assert img.dim_vector == (0, 1)
    assert is_exact([incl, proj])


def test_is_exact_flags_failure_position():
    p1 = projective(A2, 2, "1")
    p2 = projective(A2, 2, "2")
    incl = hom_basis(p2, p1)[0]
    # dropping the quotient map leaves the chain non-exact as a two-term complex
    assert not is_exact([incl, zero_morphism(p1, p2)])
    with pytest.raises(ValueError):
        is_exact([])
    with pytest.raises(ValueError):
        is_exact([incl, incl])


def test_direct_sum_blocks_and_projections():
    p1 = projective(A2, 2, "1")
    s1 = simple(A2, 2, "1")
    total, injs, projs = direct_sum([p1, s1])
    assert total.dim_vector == (2, 1)
    ident = compose(projs[0], injs[0])
    assert np.array_equal(ident.vertex_maps["1"], np.eye(1, dtype=np.int64))
    mixed = compose(projs[1], injs[0])
    assert not mixed.vertex_maps["1"].any()


def test_is_iso_distinguishes_same_dim_vector():
    p1 = projective(A2, 2, "1")
    split, _, _ = direct_sum([simple(A2, 2, "1"), projective(A2, 2, "2")])
    assert split.dim_vector == p1.dim_vector
    assert not is_iso(split, p1)
    assert is_iso(p1, projective(A2, 2, "1"))


def test_decompose_recovers_summands():
    p = 2
    parts = [projective(A2, p, "1"), simple(A2, p, "1"), projective(A2, p, "2")]
    total, _, _ = direct_sum(parts)
    pieces = decompose(total)
    assert sorted(m.dim_vector for m in pieces) == [(0, 1), (1, 0), (1, 1)]
    assert decompose(zero_rep(A2, p)) == []


def test_projective_cover_of_simple():
    s1 = simple(A2, 2, "1")
    cover, epi = projective_cover(s1)
    assert cover.dim_vector == (1, 1)
    k, _ = kernel(epi)
    assert k.dim_vector == (0, 1)


def test_projectives_have_zero_first_syzygy():
    for q in (A2, A3):
        for v in q.vertices:
            pr = projective(q, 2, v)
            _, epi = projective_cover(pr)
            k, _ = kernel(epi)
            assert k.total_dim == 0


def test_enumerate_a3_catalog():
    cat = enumerate_indecomposables(A3, 2, 1)
    assert cat.complete
    assert len(cat) == 6
    assert cat.names == [
        "M(0,0,1)",
        "M(0,1,0)",
        "M(1,0,0)",
        "M(0,1,1)",
        "M(1,1,0)",
        "M(1,1,1)",
    ]
    assert cat.by_name("M(1,1,0)") == 4
    with pytest.raises(ValueError):
        cat.by_name("M(9)")


def test_enumerate_counts_for_small_type_a():
    assert len(enumerate_indecomposables(A2, 2, 1)) == 3
    a4 = Quiver(
        ("1", "2", "3", "4"),
        (("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")),
    )
    assert len(enumerate_indecomposables(a4, 2, 1)) == 10


def test_enumerate_respects_budget():
    cat = enumerate_indecomposables(A2, 3, 2, budget=2)
    assert not cat.complete


def test_enumerate_rejects_cyclic_quiver():
    loop = Quiver(("x",), (("f", "x", "x"),))
    with pytest.raises(ValueError):
        enumerate_indecomposables(loop, 2, 1)


def test_catalog_matches_brute_force_over_a3():
    """Every rep with vertex dims <= 1 over F_2 decomposes into the 6 catalog
    classes, and all 6 occur; so the catalog is exactly the list of
    indecomposables in that range."""
    cat = enumerate_indecomposables(A3, 2, 1)
    rc = RepCategory(A3, 2)
    seen = set()
    for dv in itertools.product(range(2), repeat=3):
        if not any(dv):
            continue
        dims = dict(zip(A3.vertices, dv))
        na = dims["1"] * dims["2"]
        nb = dims["2"] * dims["3"]
        for fa in itertools.product(range(2), repeat=na):
            for fb in itertools.product(range(2), repeat=nb):
                maps = {
                    "a": np.array(fa, dtype=np.int64).reshape(dims["2"], dims["1"]),
                    "b": np.array(fb, dtype=np.int64).reshape(dims["3"], dims["2"]),
                }
                m = Rep(A3, 2, dims, maps)
                for idx in cat.identify(m):
                    seen.add(idx)
    assert seen == set(range(6))
    for i, a in enumerate(cat.entries):
        for j, b in enumerate(cat.entries):
            if i != j:
                assert not is_iso_in(rc, a, b)


def test_catalog_identify_multiset():
    cat = enumerate_indecomposables(A3, 2, 1)
    p1 = projective(A3, 2, "1")
    m, _, _ = direct_sum([p1, p1, simple(A3, 2, "2")])
    assert cat.identify(m) == [1, 5, 5]


def test_hom_additivity_random():
    rng = random.Random(4091)
    cat = enumerate_indecomposables(A3, 2, 1)
    for _ in range(25):
        x = cat.entries[rng.randrange(6)]
        y = cat.entries[rng.randrange(6)]
        z = cat.entries[rng.randrange(6)]
        s, _, _ = direct_sum([x, y])
        assert len(hom_basis(s, z)) == len(hom_basis(x, z)) + len(hom_basis(y, z))
        assert len(hom_basis(z, s)) == len(hom_basis(z, x)) + len(hom_basis(z, y))


def test_rank_nullity_per_vertex_on_random_homs():
    rng = random.Random(5508)
    cat = enumerate_indecomposables(A3, 2, 1)
    for _ in range(30):
        x = cat.entries[rng.randrange(6)]
        y = cat.entries[rng.randrange(6)]
        basis = hom_basis(x, y)
        if not basis:
            continue
        f = basis[rng.randrange(len(basis))]
        k, _ = kernel(f)
        img, _ = image(f)
        for v in A3.vertices:
            assert k.dims[v] + img.dims[v] == x.dims[v]


def test_projectivity_and_injectivity_recognition():
    p = 2
    assert is_projective_rep(projective(A3, p, "2"))
    total, _, _ = direct_sum([projective(A3, p, "1"), projective(A3, p, "3")])
    assert is_projective_rep(total)
    assert not is_projective_rep(simple(A3, p, "1"))
    assert is_injective_rep(injective(A3, p, "2"))
    assert not is_injective_rep(projective(A3, p, "3"))


def test_opposite_is_involutive():
    assert opposite(opposite(A3)) == A3
    assert opposite(A3).arrows == (("a", "2", "1"), ("b", "3", "2"))


def test_decompose_in_handles_three_by_three_blocks():
    # 3 copies of the same brick still split cleanly
    p2 = projective(A3, 2, "2")
    total, _, _ = direct_sum([p2, p2, p2])
    rc = RepCategory(A3, 2)
    parts = decompose_in(rc, total)
    assert len(parts) == 3
    assert all(is_iso_in(rc, m, p2) for m in parts)
