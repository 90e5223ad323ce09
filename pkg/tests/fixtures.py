"""Shared category/simplicial fixtures for the test suite."""

from sskit import simplicial as sp


def poset_category(n):
    """The linear poset 0 < 1 < ... < n."""
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


def square_poset_category():
    """The commuting square poset (0,0) < (0,1),(1,0) < (1,1)."""
    objs = ["00", "01", "10", "11"]
    leq = {
        (a, b)
        for a in objs
        for b in objs
        if a[0] <= b[0] and a[1] <= b[1]
    }
    morphisms = {f"{a}->{b}": (a, b) for (a, b) in leq}
    compose = {}
    for (a, b) in leq:
        for (b2, c) in leq:
            if b2 == b:
                compose[(f"{a}->{b}", f"{b}->{c}")] = f"{a}->{c}"
    identities = {a: f"{a}->{a}" for a in objs}
    return sp.FiniteCategory(objs, morphisms, compose, identities)


def parallel_arrows_category():
    """Two objects with two parallel arrows a, b: x -> y."""
    objects = ["x", "y"]
    morphisms = {"ix": ("x", "x"), "iy": ("y", "y"), "a": ("x", "y"), "b": ("x", "y")}
    compose = {
        ("ix", "ix"): "ix",
        ("iy", "iy"): "iy",
        ("ix", "a"): "a",
        ("a", "iy"): "a",
        ("ix", "b"): "b",
        ("b", "iy"): "b",
    }
    identities = {"x": "ix", "y": "iy"}
    return sp.FiniteCategory(objects, morphisms, compose, identities)


def group_category(elements, mult, unit):
    """A finite group as a one-object category."""
    objects = ["*"]
    morphisms = {g: ("*", "*") for g in elements}
    compose = {(g, h): mult(g, h) for g in elements for h in elements}
    identities = {"*": unit}
    return sp.FiniteCategory(objects, morphisms, compose, identities)


def cyclic_group_category(m):
    return group_category(
        [f"g{i}" for i in range(m)],
        lambda a, b: f"g{(int(a[1:]) + int(b[1:])) % m}",
        "g0",
    )


def sym3_category():
    """S_3 as permutations of {0,1,2} in one-line notation."""
    import itertools

    elements = ["p" + "".join(map(str, perm)) for perm in itertools.permutations(range(3))]

    def mult(a, b):
        # a then b (diagrammatic: (b∘a)(i) = b(a(i)))
        pa = [int(c) for c in a[1:]]
        pb = [int(c) for c in b[1:]]
        return "p" + "".join(str(pb[pa[i]]) for i in range(3))

    return group_category(elements, mult, "p012")


def truncated_group_nerve(cat, truncation=3, name=""):
    return sp.nerve(cat, truncation=truncation, name=name)


def grothendieck_category(base, fibres, pulls):
    """Strict Grothendieck construction of a contravariant functor on a
    finite category `base`: fibres[obj] is a FiniteCategory, pulls[f] a
    functor-on-names dict (objects and morphisms) from fibre(target f) to
    fibre(source f).

    Objects are (T, x); a morphism (T, x) -> (U, y) is a base morphism
    f: T -> U together with a fibre morphism x -> f*(y).
    """
    objects = []
    for t in base.objects:
        for x in fibres[t].objects:
            objects.append(f"{t}|{x}")
    morphisms = {}
    identities = {}
    for f, (t, u) in base.morphisms.items():
        pull = pulls[f]
        for y in fibres[u].objects:
            fy = pull[y]
            for x in fibres[t].objects:
                for m in fibres[t].hom(x, fy):
                    morphisms[f"{f}|{m}|{y}"] = (f"{t}|{x}", f"{u}|{y}")
    for t in base.objects:
        for x in fibres[t].objects:
            identities[f"{t}|{x}"] = f"{base.identities[t]}|{fibres[t].identities[x]}|{x}"
    compose = {}
    for n1, (s1, t1) in morphisms.items():
        f, m, y = n1.split("|")
        for n2, (s2, t2) in morphisms.items():
            if t1 != s2:
                continue
            g, m2, z = n2.split("|")
            base_comp = base.compose((f, g))
            tt = base.morphisms[f][0]
            # composite fibre morphism: x -> f*(y) -> f*(g*(z))
            pulled = pulls[f][m2]
            fibre_comp = fibres[tt].compose((m, pulled))
            compose[(n1, n2)] = f"{base_comp}|{fibre_comp}|{z}"
    return sp.FiniteCategory(objects, morphisms, compose, identities)
