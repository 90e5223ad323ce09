import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sskit import simplicial as sp
from sskit.simplicial import SimplexRef


# ---------------------------------------------------------------------------
# degeneracy-word calculus against the monotone-map model.
#
# A word (i_1 > ... > i_k) applied to a d-simplex is the surjection
# sigma_{i_1} ... sigma_{i_k}: [d+k] -> [d]; faces and degeneracies compose
# on that side, giving an independent oracle for the rewriting rules.


def word_to_map(word, d):
    """The monotone surjection [d + len(word)] -> [d] of a normal word."""
    values = list(range(d))
    # apply innermost first
    values = list(range(d + len(word)))
    f = {v: v for v in range(d)}
    current = list(range(d))
    for i in reversed(word):
        current = current[: i + 1] + current[i:]
    return tuple(current)


def sigma(i, n):
    """sigma_i: [n+1] -> [n]."""
    return tuple(v if v <= i else v - 1 for v in range(n + 2))


def delta(i, n):
    """delta_i: [n-1] -> [n]."""
    return tuple(v if v < i else v + 1 for v in range(n))


def compose_maps(f, g):
    """f after g, maps as value tuples."""
    return tuple(f[v] for v in g)


@given(st.lists(st.integers(0, 5), min_size=0, max_size=5))
@settings(max_examples=200, deadline=None)
def test_normalize_word_matches_monotone_model(indices):
    # interpret indices as operators applied outermost-first at matching
    # dimensions; build the corresponding surjection and compare
    d = 0
    word = sp.normalize_word([])
    # apply operators innermost-first so each s_i is valid: clamp indices
    ops = []
    dim = d
    for i in reversed(indices):
        ops.append(min(i, dim))
        dim += 1
    # ops[j] applied at dimension d + j
    target = tuple(range(d + 1))
    f = tuple(range(d + 1))
    word_ops = []
    for j, i in enumerate(ops):
        f = compose_maps(f, sigma(i, d + j))
        word_ops.append(i)
    normal = sp.normalize_word(list(reversed(word_ops)))
    assert all(a > b for a, b in zip(normal, normal[1:]))
    g = tuple(range(d + 1))
    dd = d
    for i in reversed(normal):
        g = compose_maps(g, sigma(i, dd))
        dd += 1
    assert f == g


@given(
    st.integers(0, 4),
    st.lists(st.integers(0, 6), min_size=1, max_size=4),
    st.integers(0, 10),
)
@settings(max_examples=300, deadline=None)
def test_face_through_word_matches_model(d, raw_ops, face_seed):
    ops = []
    dim = d
    for i in reversed(raw_ops):
        ops.append(min(i, dim))
        dim += 1
    word = sp.normalize_word(list(reversed(ops)))
    n = d + len(word)
    i = face_seed % (n + 1)
    # model: word as surjection [n] -> [d], compose with delta_i: [n-1] -> [n]
    f = tuple(range(d + 1))
    dd = d
    for j in reversed(word):
        f = compose_maps(f, sigma(j, dd))
        dd += 1
    model = compose_maps(f, delta(i, n))
    j, word2 = sp.face_through_word(i, word)
    g = tuple(range(d + 1)) if j is None else delta(j, d)
    src_dim = d if j is None else d - 1
    dd = src_dim
    for jj in reversed(word2):
        g = compose_maps(g, sigma(jj, dd))
        dd += 1
    assert g == model
    assert all(a > b for a, b in zip(word2, word2[1:]))


# ---------------------------------------------------------------------------
# standard simplices, horns, boundaries


def gen_counts(x):
    return tuple(len(x.generators.get(n, ())) for n in range(x.dim + 1))


def test_standard_simplex_counts():
    assert gen_counts(sp.standard_simplex(0)) == (1,)
    assert gen_counts(sp.standard_simplex(2)) == (3, 3, 1)
    total = sum(gen_counts(sp.standard_simplex(4)))
    assert total == 2**5 - 1  # nonempty subsets of a 5-element set


def test_simplex_identities():
    for n in range(5):
        sp.standard_simplex(n).check_identities(4)


def test_boundary_and_horn_counts():
    b1, _ = sp.boundary(1)
    assert gen_counts(b1) == (2,)
    h21, _ = sp.horn(2, 1)
    assert gen_counts(h21) == (3, 2)
    h32, _ = sp.horn(3, 2)
    assert len(h32.generators[2]) == 3  # 3 of 4 triangles
    with pytest.raises(ValueError):
        sp.horn(2, 5)


def test_level_enumeration_against_monotone_maps():
    # |Delta^n_m| = #monotone maps [m] -> [n]
    for n in range(4):
        x = sp.standard_simplex(n)
        for m in range(5):
            count = sum(
                1
                for s in itertools.product(range(n + 1), repeat=m + 1)
                if all(a <= b for a, b in zip(s, s[1:]))
            )
            assert len(x.level(m)) == count


def test_level_enumerate_interval_oracle():
    # the count at level 2 of Delta^1 is fixed by brute force over
    # monotone maps [2] -> [1]
    x = sp.standard_simplex(1)
    strings = [
        s
        for s in itertools.product(range(2), repeat=3)
        if all(a <= b for a, b in zip(s, s[1:]))
    ]
    assert len(x.level(2)) == len(strings) == 4


def test_point_has_one_simplex_per_level():
    pt = sp.standard_simplex(0)
    for n in range(6):
        assert len(pt.level(n)) == 1


def test_classify_roundtrip():
    x = sp.standard_simplex(2)
    for n in range(4):
        for ref in x.level(n):
            again = x.classify(ref.gen, list(ref.word))
            assert again == ref


def test_delta_ref_values_roundtrip():
    for s in itertools.product(range(3), repeat=4):
        if all(a <= b for a, b in zip(s, s[1:])):
            ref = sp.delta_ref(2, s)
            assert sp.delta_values(ref) == s


def test_divisor_set_equals_word_indices():
    x = sp.standard_simplex(2)
    for n in range(1, 5):
        for ref in x.level(n):
            assert tuple(sorted(x.divisors(ref))) == tuple(sorted(ref.word))


def test_act_functorial():
    x = sp.standard_simplex(2)
    alphas2 = [
        a
        for a in itertools.product(range(3), repeat=3)
        if all(u <= v for u, v in zip(a, a[1:]))
    ]
    for ref in x.level(2):
        for a in alphas2:
            acted = x.act(a, ref)
            assert sp.delta_values(acted) == tuple(
                sp.delta_values(ref)[v] for v in a
            )


# ---------------------------------------------------------------------------
# nerve


def poset_category(n):
    """The poset 0 < 1 < ... < n as a finite category."""
    objects = [str(i) for i in range(n + 1)]
    morphisms = {}
    compose = {}
    identities = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            morphisms[f"{i}<{j}"] = (str(i), str(j))
        identities[str(i)] = f"{i}<{i}"
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                compose[(f"{i}<{j}", f"{j}<{k}")] = f"{i}<{k}"
    return sp.FiniteCategory(objects, morphisms, compose, identities)


def cyclic_group_category(m):
    objects = ["*"]
    morphisms = {f"g{i}": ("*", "*") for i in range(m)}
    compose = {(f"g{i}", f"g{j}"): f"g{(i + j) % m}" for i in range(m) for j in range(m)}
    identities = {"*": "g0"}
    return sp.FiniteCategory(objects, morphisms, compose, identities)


def test_nerve_of_poset_is_simplex():
    n2 = sp.nerve(poset_category(2))
    d2 = sp.standard_simplex(2)
    assert gen_counts(n2) == gen_counts(d2)
    assert sp.find_isomorphism(n2, d2) is not None
    n2.check_identities(4)


def test_nerve_discrete():
    cat = sp.FiniteCategory(
        ["a", "b"],
        {"ia": ("a", "a"), "ib": ("b", "b")},
        {("ia", "ia"): "ia", ("ib", "ib"): "ib"},
        {"a": "ia", "b": "ib"},
    )
    nc = sp.nerve(cat)
    assert gen_counts(nc) == (2,)


def test_nerve_rejects_groups_but_truncates():
    z2 = cyclic_group_category(2)
    with pytest.raises(ValueError):
        sp.nerve(z2)
    t = sp.nerve(z2, truncation=3)
    for d in range(1, 4):
        assert len(t.generators[d]) == 1
    t.check_identities(4)


# ---------------------------------------------------------------------------
# products, joins, opposites, pushouts


def test_product_square():
    d1 = sp.standard_simplex(1)
    prod, pr1, pr2 = sp.product(d1, d1)
    assert gen_counts(prod) == (4, 5, 2)
    prod.check_identities(4)
    pr1.validate()
    pr2.validate()
    # level counts are products of level counts
    for n in range(4):
        assert len(prod.level(n)) == len(d1.level(n)) ** 2


def test_join_points_is_edge():
    pt = sp.standard_simplex(0)
    j, _, _ = sp.join(pt, pt)
    assert sp.find_isomorphism(j, sp.standard_simplex(1)) is not None


def test_join_edges_is_delta3():
    d1 = sp.standard_simplex(1)
    j, i1, i2 = sp.join(d1, d1)
    d3 = sp.standard_simplex(3)
    for n in range(5):
        assert len(j.level(n)) == len(d3.level(n))
    assert sp.find_isomorphism(j, d3) is not None
    i1.validate()
    i2.validate()
    j.check_identities(4)


def test_join_associative_on_simplices():
    # (D^a * D^b) * D^c and D^{a+b+c+2} are isomorphic
    for a, b, c in [(0, 0, 0), (1, 0, 0), (0, 1, 1), (2, 1, 0)]:
        if a + b + c > 4:
            continue
        da, db, dc = (sp.standard_simplex(i) for i in (a, b, c))
        left0, _, _ = sp.join(da, db)
        left, _, _ = sp.join(left0, dc)
        right0, _, _ = sp.join(db, dc)
        right, _, _ = sp.join(da, right0)
        full = sp.standard_simplex(a + b + c + 2)
        assert sp.find_isomorphism(left, full) is not None
        assert sp.find_isomorphism(right, full) is not None


def test_opposite_involution():
    for x in [sp.standard_simplex(2), sp.nerve(poset_category(2)), sp.product(sp.standard_simplex(1), sp.standard_simplex(1))[0]]:
        opop = sp.opposite(sp.opposite(x))
        assert opop.generators == x.generators
        assert opop.faces == x.faces
        sp.opposite(x).check_identities(3)


def test_pushout_identity_is_x():
    x = sp.standard_simplex(2)
    ident = sp.SimplicialMap.identity(x)
    p, incl_b, map_x = sp.pushout(ident, ident)
    assert gen_counts(p) == gen_counts(x)


def test_pushout_wedge_of_edges():
    pt = sp.standard_simplex(0)
    d1 = sp.standard_simplex(1)
    # include the point as vertex [1] of the first edge and vertex [0] of
    # the second
    f = sp.SimplicialMap(pt, d1, {"[0]": SimplexRef("[1]")})
    g = sp.SimplicialMap(pt, d1, {"[0]": SimplexRef("[0]")})
    p, _, _ = sp.pushout(f, g)
    assert gen_counts(p) == (3, 2)
    p.check_identities(3)


def test_pushout_two_triangles_on_spine():
    # Delta^2 u_{Horn^2_1} Delta^2: enumeration oracle gives 3 vertices,
    # 4 edges (the two spine edges are shared), 2 triangles
    h, incl = sp.horn(2, 1)
    p, _, _ = sp.pushout(incl, incl)
    assert gen_counts(p) == (3, 4, 2)
    p.check_identities(4)


def test_pushout_rejects_noninjective():
    d1 = sp.standard_simplex(1)
    pt = sp.standard_simplex(0)
    collapse = sp.SimplicialMap(
        d1, pt, {"[0]": SimplexRef("[0]"), "[1]": SimplexRef("[0]"), "[0,1]": SimplexRef("[0]", (0,))}
    )
    with pytest.raises(ValueError):
        sp.pushout(collapse, collapse)


def test_ez_uniqueness_roundtrip_property():
    # classify(level_enumerate(K, n)[i]) round-trips on assorted objects
    objs = [
        sp.standard_simplex(3),
        sp.product(sp.standard_simplex(1), sp.standard_simplex(1))[0],
        sp.join(sp.standard_simplex(0), sp.standard_simplex(1))[0],
    ]
    for x in objs:
        for n in range(4):
            for ref in x.level(n):
                assert x.classify(ref.gen, list(ref.word)) == ref


def test_json_roundtrip():
    x, _, _ = sp.product(sp.standard_simplex(1), sp.standard_simplex(1))
    data = x.to_json()
    y = sp.SimplicialSet.from_json(data)
    assert y.generators == x.generators
    assert y.faces == x.faces
