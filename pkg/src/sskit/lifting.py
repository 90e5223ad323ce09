"""Lifting problems, fibration classification, slices and homotopy
categories of finite simplicial sets.

The solver is an exhaustive backtracking search over generator
assignments: a map out of a presented simplicial set is exactly a choice
of simplex for each generator commuting with faces, so failure verdicts
are definitive.  Candidate simplices are tried in the canonical order and
the first lift found is returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .reports import FAILS, HOLDS, Report
from .simplicial import (
    FiniteCategory,
    SimplexRef,
    SimplicialMap,
    SimplicialSet,
    apply_assignment,
    boundary,
    compose_words,
    horn,
    join,
    map_from_simplex,
    point,
    present,
    pullback_sets,
    LevelData,
    raw_ref,
    standard_simplex,
    terminal_map,
    vertex_name,
)

INNER, LEFT, RIGHT, KAN, TRIVIAL = "inner", "left", "right", "kan", "trivial"
FIBRATION_CLASSES = (INNER, LEFT, RIGHT, KAN, TRIVIAL)


def horn_indices(cls: str, n: int) -> list[int]:
    if cls == INNER:
        return list(range(1, n))
    if cls == LEFT:
        return list(range(0, n))
    if cls == RIGHT:
        return list(range(1, n + 1))
    if cls == KAN:
        return list(range(0, n + 1))
    raise ValueError(f"no horns for class {cls!r}")


def horn_matches_class(cls: str, n: int, k: int) -> bool:
    if cls == "general":
        return 0 <= k <= n
    return k in horn_indices(cls, n)


# ---------------------------------------------------------------------------
# map enumeration


def _face_index(x: SimplicialSet, n: int) -> dict:
    cache = getattr(x, "_face_index_cache", None)
    if cache is None:
        cache = {}
        x._face_index_cache = cache  # type: ignore[attr-defined]
    if n not in cache:
        idx: dict[tuple, list[SimplexRef]] = {}
        for ref in x.level(n):
            key = x.faces_tuple(ref) if n > 0 else ()
            idx.setdefault(key, []).append(ref)
        cache[n] = idx
    return cache[n]


def simplicial_maps(
    src: SimplicialSet,
    tgt: SimplicialSet,
    *,
    fixed: dict[str, SimplexRef] | None = None,
    over: tuple[SimplicialMap, SimplicialMap] | None = None,
) -> Iterator[SimplicialMap]:
    """All simplicial maps src -> tgt, deterministically ordered.

    fixed pins values on some generators; over = (p, q) restricts to maps h
    with p∘h = q (p: tgt -> S, q: src -> S).
    """
    gens = [g for n in sorted(src.generators) for g in src.generators[n]]
    assignment: dict[str, SimplexRef] = {}
    fixed = fixed or {}

    def candidates(g: str) -> list[SimplexRef]:
        n = src.gen_dim(g)
        if n == 0:
            cands = tgt.level(0)
        else:
            expected = tuple(
                apply_assignment(assignment, src.face(SimplexRef(g), i))
                for i in range(n + 1)
            )
            cands = _face_index(tgt, n).get(expected, [])
        if g in fixed:
            cands = [c for c in cands if c == fixed[g]]
        if over is not None:
            p, q = over
            want = q.apply(SimplexRef(g))
            cands = [c for c in cands if p.apply(c) == want]
        return cands

    def extend(idx: int) -> Iterator[SimplicialMap]:
        if idx == len(gens):
            yield SimplicialMap(src, tgt, dict(assignment), check=False)
            return
        g = gens[idx]
        for c in candidates(g):
            assignment[g] = c
            yield from extend(idx + 1)
            del assignment[g]

    yield from extend(0)


def count_assignment_space(src: SimplicialSet, tgt: SimplicialSet) -> int:
    """Size of the unconstrained generator-assignment space (naive search)."""
    total = 1
    for n in sorted(src.generators):
        total *= len(tgt.level(n)) ** len(src.generators[n])
    return total


# ---------------------------------------------------------------------------
# lifting


@dataclass
class LiftProblem:
    """A commuting square: inclusion A -> B (injective), top A -> X,
    bottom B -> S, against a candidate fibration X -> S."""

    inclusion: SimplicialMap
    top: SimplicialMap
    bottom: SimplicialMap
    fibration: SimplicialMap

    def __post_init__(self):
        a = self.inclusion.source
        for n in a.generators:
            for g in a.generators[n]:
                lhs = self.fibration.apply(self.top.apply(SimplexRef(g)))
                rhs = self.bottom.apply(self.inclusion.apply(SimplexRef(g)))
                if lhs != rhs:
                    raise ValueError(f"lifting square does not commute at {g!r}")

    def to_json(self) -> dict:
        return {
            "inclusion": self.inclusion.to_json(),
            "top": self.top.to_json(),
            "bottom": self.bottom.to_json(),
        }


def solve_lift(problem: LiftProblem) -> SimplicialMap | None:
    """First lift in canonical order, or None (definitive: the search is
    exhaustive over generator assignments)."""
    fixed = _fixed_from_inclusion(problem)
    for h in simplicial_maps(
        problem.bottom.source,
        problem.top.target,
        fixed=fixed,
        over=(problem.fibration, problem.bottom),
    ):
        return h
    return None


def solve_lift_naive(problem: LiftProblem, limit: int = 10**4) -> SimplicialMap | None:
    """Independent cross-check of solve_lift: enumerate full generator
    assignments per level without face propagation and validate at the end."""
    b, x = problem.bottom.source, problem.top.target
    if count_assignment_space(b, x) > limit:
        raise ValueError("naive search space exceeds limit")
    fixed = _fixed_from_inclusion(problem)
    gens = [g for n in sorted(b.generators) for g in b.generators[n]]
    pools = []
    for g in gens:
        pool = [fixed[g]] if g in fixed else list(x.level(b.gen_dim(g)))
        pools.append(pool)
    for combo in itertools.product(*pools):
        assignment = dict(zip(gens, combo))
        if not _is_valid_map(b, x, assignment):
            continue
        h = SimplicialMap(b, x, assignment, check=False)
        ok = all(
            problem.fibration.apply(h.apply(SimplexRef(g))) == problem.bottom.apply(SimplexRef(g))
            for g in gens
        )
        if ok:
            return h
    return None


def _fixed_from_inclusion(problem: LiftProblem) -> dict[str, SimplexRef]:
    a = problem.inclusion.source
    fixed = {}
    for n in a.generators:
        for g in a.generators[n]:
            img = problem.inclusion.apply(SimplexRef(g))
            if img.word:
                raise ValueError("inclusion must send generators to generators")
            if img.gen in fixed and fixed[img.gen] != problem.top.apply(SimplexRef(g)):
                raise ValueError("inclusion is not injective on generators")
            fixed[img.gen] = problem.top.apply(SimplexRef(g))
    return fixed


def _is_valid_map(src, tgt, assignment) -> bool:
    for n in sorted(src.generators):
        for g in src.generators[n]:
            if tgt.dim_of(assignment[g]) != n:
                return False
            for i in range(n + 1) if n > 0 else ():
                if apply_assignment(assignment, src.face(SimplexRef(g), i)) != tgt.face(assignment[g], i):
                    return False
    return True


# ---------------------------------------------------------------------------
# fibration classification


def lifting_instances(
    p: SimplicialMap, incl: SimplicialMap
) -> Iterator[LiftProblem]:
    """All commuting squares of the given inclusion shape against p,
    in canonical order.  incl must be A -> Delta^n."""
    a, b = incl.source, incl.target
    x, s = p.source, p.target
    n = b.dim
    for u in simplicial_maps(a, x):
        # bottoms: n-simplices of S restricting along incl to p∘u
        pu = {g: p.apply(u.assignment[g]) for g in u.assignment}
        for v_ref in s.level(n):
            vmap = map_from_simplex(s, v_ref, n)
            if all(
                vmap.apply(incl.apply(SimplexRef(g))) == val
                for g, val in pu.items()
            ):
                yield LiftProblem(incl, u, vmap, p)


def classify_fibration(p: SimplicialMap, cls: str, bound: int) -> Report:
    """Bounded right-lifting-property check for a fibration class.

    Verdict "holds" means every lifting square against the generating
    inclusions of dimension <= bound has a solution; a failure carries the
    counterexample square.
    """
    if cls not in FIBRATION_CLASSES:
        raise ValueError(f"unknown fibration class {cls!r}")
    claim = f"{p.source.name or 'X'} -> {p.target.name or 'S'} is a {cls} fibration"
    notes = [f"exhaustive over generating inclusions of dimension <= {bound}"]
    inclusions: list[SimplicialMap] = []
    if cls == TRIVIAL:
        for n in range(0, bound + 1):
            inclusions.append(boundary(n)[1])
    else:
        for n in range(1, bound + 1):
            for k in horn_indices(cls, n):
                inclusions.append(horn(n, k)[1])
    for incl in inclusions:
        for problem in lifting_instances(p, incl):
            if solve_lift(problem) is None:
                return Report(
                    claim,
                    bound,
                    FAILS,
                    counterexample=problem.to_json(),
                    notes=notes,
                )
    return Report(claim, bound, HOLDS, notes=notes)


def is_quasi_category(x: SimplicialSet, bound: int) -> Report:
    return classify_fibration(terminal_map(x), INNER, bound)


def is_kan_complex(x: SimplicialSet, bound: int) -> Report:
    return classify_fibration(terminal_map(x), KAN, bound)


# ---------------------------------------------------------------------------
# joins with a simplex factor, slices, Hom spaces


def _delta_map(src_n: int, tgt_n: int, values: dict[int, int]) -> SimplicialMap:
    """SimplicialMap Delta^src_n -> Delta^tgt_n of a monotone vertex map."""
    src = standard_simplex(src_n)
    tgt = standard_simplex(tgt_n)
    assignment = {}
    for m in src.generators:
        for g in src.generators[m]:
            vals = tuple(values[int(v)] for v in g.strip("[]").split(","))
            from .simplicial import delta_ref

            assignment[g] = delta_ref(tgt_n, vals)
    return SimplicialMap(src, tgt, assignment, check=False)


def delta_coface(n: int, i: int) -> SimplicialMap:
    """delta_i: Delta^{n-1} -> Delta^n."""
    values = {v: v if v < i else v + 1 for v in range(n)}
    return _delta_map(n - 1, n, values)


def delta_codegeneracy(n: int, i: int) -> SimplicialMap:
    """sigma_i: Delta^{n+1} -> Delta^n."""
    values = {v: v if v <= i else v - 1 for v in range(n + 2)}
    return _delta_map(n + 1, n, values)


def join_map(
    jsrc: SimplicialSet, jtgt: SimplicialSet, f: SimplicialMap, g: SimplicialMap
) -> SimplicialMap:
    """The induced map join(A,B) -> join(A',B') of f: A -> A', g: B -> B'."""
    assignment = {}
    for gn, raw in jsrc.gen_to_raw.items():  # type: ignore[attr-defined]
        i, xr, yr = raw
        xi = xr if xr.gen == "" else f.apply(xr)
        yi = yr if yr.gen == "" else g.apply(yr)
        n = jsrc.gen_dim(gn)
        assignment[gn] = raw_ref(jtgt, n, (i, xi, yi))
    return SimplicialMap(jsrc, jtgt, assignment, check=False)


def product_map(
    psrc: SimplicialSet, ptgt: SimplicialSet, f: SimplicialMap, g: SimplicialMap
) -> SimplicialMap:
    """The induced map A x B -> A' x B' of f and g."""
    assignment = {}
    for gn, raw in psrc.gen_to_raw.items():  # type: ignore[attr-defined]
        a, b = raw
        n = psrc.gen_dim(gn)
        assignment[gn] = raw_ref(ptgt, n, (f.apply(a), g.apply(b)))
    return SimplicialMap(psrc, ptgt, assignment, check=False)


class SliceComplex:
    """The slice X_{/k} of a diagram k: K -> X, presented up to a bound.

    Level n is the set of maps Delta^n * K -> X restricting to k; the
    simplicial operators act on the Delta factor.  Raws are value tuples
    over the generators of the join, in canonical generator order.
    """

    def __init__(self, x: SimplicialSet, k: SimplicialMap, bound: int, name: str = "", op_side: bool = False):
        self.x = x
        self.k = k
        self.bound = bound
        self.op_side = op_side
        kk = k.source
        self._joins = []
        self._incl_k = []
        self._gen_lists = []
        for n in range(bound + 2):
            if op_side:
                jn, i_delta, i_k = _ordered_join(kk, standard_simplex(n), swap=True)
            else:
                jn, i_delta, i_k = _ordered_join(standard_simplex(n), kk, swap=False)
            self._joins.append(jn)
            self._incl_k.append(i_k)
            self._gen_lists.append([g for m in sorted(jn.generators) for g in jn.generators[m]])
        self._fixed = []
        for n in range(bound + 2):
            fixed = {}
            for m in kk.generators:
                for gk in kk.generators[m]:
                    img = self._incl_k[n].apply(SimplexRef(gk))
                    fixed[img.gen] = k.apply(SimplexRef(gk))
            self._fixed.append(fixed)
        self._levels_cache: dict[int, list] = {}
        data = LevelData(self._levels, self._face, self._degen)
        self.sset, self._raw_to_ref, self._gen_to_raw = present(
            data, bound, name=name or f"slice({x.name})", check_top=True
        )
        self.sset.raw_to_ref = self._raw_to_ref  # type: ignore[attr-defined]
        self.sset.gen_to_raw = self._gen_to_raw  # type: ignore[attr-defined]

    def _levels(self, n):
        if n in self._levels_cache:
            return self._levels_cache[n]
        if n > self.bound + 1:
            raise ValueError("slice level above bound")
        out = []
        for h in simplicial_maps(self._joins[n], self.x, fixed=self._fixed[n]):
            out.append(tuple(h.assignment[g] for g in self._gen_lists[n]))
        out.sort()
        self._levels_cache[n] = out
        return out

    def _as_dict(self, n, raw):
        return dict(zip(self._gen_lists[n], raw))

    def _precompose(self, n_src, n_tgt, connecting: SimplicialMap, raw):
        amap = self._as_dict(n_tgt, raw)
        out = []
        for g in self._gen_lists[n_src]:
            out.append(apply_assignment(amap, connecting.apply(SimplexRef(g))))
        return tuple(out)

    def _face(self, n, i, raw):
        conn = self._conn_face(n, i)
        return self._precompose(n - 1, n, conn, raw)

    def _conn_face(self, n, i):
        key = ("f", n, i)
        cache = getattr(self, "_conn_cache", None)
        if cache is None:
            cache = {}
            self._conn_cache = cache
        if key not in cache:
            if self.op_side:
                cache[key] = join_map(
                    self._joins[n - 1], self._joins[n],
                    SimplicialMap.identity(self.k.source), delta_coface(n, i),
                )
            else:
                cache[key] = join_map(
                    self._joins[n - 1], self._joins[n],
                    delta_coface(n, i), SimplicialMap.identity(self.k.source),
                )
        return cache[key]

    def _conn_degen(self, n, i):
        key = ("s", n, i)
        cache = getattr(self, "_conn_cache", None)
        if cache is None:
            cache = {}
            self._conn_cache = cache
        if key not in cache:
            if self.op_side:
                cache[key] = join_map(
                    self._joins[n + 1], self._joins[n],
                    SimplicialMap.identity(self.k.source), delta_codegeneracy(n, i),
                )
            else:
                cache[key] = join_map(
                    self._joins[n + 1], self._joins[n],
                    delta_codegeneracy(n, i), SimplicialMap.identity(self.k.source),
                )
        return cache[key]

    def _degen(self, n, i, raw):
        conn = self._conn_degen(n, i)
        return self._precompose(n + 1, n, conn, raw)

    def value_ref(self, raw_or_gen, join_ref: SimplexRef, n: int) -> SimplexRef:
        """Value of a slice simplex on a simplex of the join."""
        raw = self._gen_to_raw[raw_or_gen] if isinstance(raw_or_gen, str) else raw_or_gen
        amap = self._as_dict(n, raw)
        return apply_assignment(amap, join_ref)


def _ordered_join(a: SimplicialSet, b: SimplicialSet, swap: bool):
    """join(a, b) returning (join, incl_a-part, incl_b-part) where the
    second inclusion is always the K factor."""
    jn, ia, ib = join(a, b)
    if swap:
        return jn, ib, ia
    return jn, ia, ib


def slice_complex(x: SimplicialSet, k: SimplicialMap, bound: int, name: str = "") -> SliceComplex:
    """Overcategory X_{/k}: n-simplices are maps Delta^n * K -> X
    restricting to k on K."""
    return SliceComplex(x, k, bound, name=name, op_side=False)


def coslice_complex(x: SimplicialSet, k: SimplicialMap, bound: int, name: str = "") -> SliceComplex:
    """Undercategory X_{k/}: n-simplices are maps K * Delta^n -> X."""
    return SliceComplex(x, k, bound, name=name, op_side=True)


def slice_over_vertex(x: SimplicialSet, v: SimplexRef, bound: int, name: str = "") -> SliceComplex:
    return slice_complex(x, map_from_simplex(x, v, 0), bound, name=name)


def hom_right(x: SimplicialSet, a: SimplexRef, b: SimplexRef, bound: int, name: str = "") -> SimplicialSet:
    """The right Hom space: n-simplices are (n+1)-simplices of X collapsing
    the front face to a and the last vertex to b."""
    if x.dim_of(a) != 0 or x.dim_of(b) != 0:
        raise ValueError("hom_right needs two vertices")

    def collapsed(n: int) -> SimplexRef:
        return SimplexRef(a.gen, tuple(range(n - 1, -1, -1)))

    def levels(n):
        front = tuple(range(n + 1))
        out = []
        for ref in x.level(n + 1):
            if x.act(front, ref) == collapsed(n) and x.act((n + 1,), ref) == b:
                out.append(ref)
        return out

    def face(n, i, ref):
        return x.face(ref, i)

    def degen(n, i, ref):
        return x.degeneracy(ref, i)

    data = LevelData(levels, face, degen)
    hom, raw_to_ref, gen_to_raw = present(
        data, bound, name=name or f"HomR({x.name})", check_top=True
    )
    hom.raw_to_ref = raw_to_ref  # type: ignore[attr-defined]
    hom.gen_to_raw = gen_to_raw  # type: ignore[attr-defined]
    return hom


# ---------------------------------------------------------------------------
# homotopy category


class HomotopyCategory:
    """tau_1 of a quasi-category: vertices, edge classes, composition."""

    def __init__(self, cat: FiniteCategory, edge_class: dict[SimplexRef, str], class_rep: dict[str, SimplexRef]):
        self.cat = cat
        self.edge_class = edge_class
        self.class_rep = class_rep


def tau1(x: SimplicialSet, bound: int = 3, assume_quasi: bool = False) -> HomotopyCategory:
    """The homotopy category of a quasi-category.

    Objects are vertices, morphisms are edges modulo the 2-simplex homotopy
    relation, composition from inner-horn fillers (any filler; independence
    is checked exhaustively).  Raises if x fails inner-horn filling within
    the bound.
    """
    if not assume_quasi:
        rep = is_quasi_category(x, bound)
        if not rep.holds:
            raise ValueError(f"not a quasi-category up to bound {bound}")
    edges = x.level(1)
    vertices = x.level(0)

    related: dict[SimplexRef, set[SimplexRef]] = {e: {e} for e in edges}
    for sig in x.level(2):
        f = x.face(sig, 2)
        g = x.face(sig, 1)
        idedge = x.face(sig, 0)
        tgt = x.face(f, 0)
        if idedge == x.degeneracy(tgt, 0):
            related[f].add(g)
    # must already be an equivalence relation on parallel edges
    for f in edges:
        for g in related[f]:
            if f not in related[g]:
                raise AssertionError("homotopy relation is not symmetric")
            for h in related[g]:
                if h not in related[f]:
                    raise AssertionError("homotopy relation is not transitive")

    class_of: dict[SimplexRef, SimplexRef] = {}
    for e in edges:
        class_of[e] = min(related[e])
    class_names = {}
    for e in sorted(set(class_of.values())):
        class_names[e] = f"[{e.gen}{list(e.word)}]" if e.word else f"[{e.gen}]"

    def endpoints(e):
        return (x.face(e, 1), x.face(e, 0))

    # composites via fillers, with independence of the filler choice
    comp: dict[tuple[SimplexRef, SimplexRef], SimplexRef] = {}
    fillers: dict[tuple[SimplexRef, SimplexRef], set[SimplexRef]] = {}
    for sig in x.level(2):
        f = x.face(sig, 2)
        g = x.face(sig, 0)
        h = x.face(sig, 1)
        fillers.setdefault((f, g), set()).add(class_of[h])
    for f in edges:
        for g in edges:
            if endpoints(f)[1] != endpoints(g)[0]:
                continue
            found = fillers.get((f, g), set())
            if not found:
                raise AssertionError(f"no composite found for {f}, {g}")
            if len(found) != 1:
                raise AssertionError(f"composite of {f}, {g} not well defined")
            comp[(f, g)] = next(iter(found))
    # composition descends to classes
    comp_classes: dict[tuple[SimplexRef, SimplexRef], SimplexRef] = {}
    for (f, g), h in comp.items():
        key = (class_of[f], class_of[g])
        if key in comp_classes and comp_classes[key] != h:
            raise AssertionError("composition does not descend to homotopy classes")
        comp_classes[key] = h

    objects = [v.gen for v in vertices]
    morphisms = {}
    compose_table = {}
    identities = {}
    for e, nm in class_names.items():
        s, t = endpoints(e)
        morphisms[nm] = (s.gen, t.gen)
    for v in vertices:
        identities[v.gen] = class_names[class_of[x.degeneracy(v, 0)]]
    for (cf, cg), ch in comp_classes.items():
        compose_table[(class_names[cf], class_names[cg])] = class_names[ch]
    cat = FiniteCategory(objects, morphisms, compose_table, identities)
    edge_class = {e: class_names[class_of[e]] for e in edges}
    class_rep = {nm: e for e, nm in class_names.items()}
    return HomotopyCategory(cat, edge_class, class_rep)


def is_equivalence_edge(x: SimplicialSet, e: SimplexRef, bound: int = 3, ht: HomotopyCategory | None = None) -> bool:
    """An edge is an equivalence iff its class is invertible in tau_1."""
    ht = ht or tau1(x, bound)
    cat = ht.cat
    cls = ht.edge_class[e]
    s, t = cat.morphisms[cls]
    for r, (rs, rt) in cat.morphisms.items():
        if rs != t or rt != s:
            continue
        if (
            cat.compose((cls, r)) == cat.identities[s]
            and cat.compose((r, cls)) == cat.identities[t]
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# Cartesian edges


def is_cartesian_edge(p: SimplicialMap, e: SimplexRef, bound: int, slice_bound: int | None = None) -> Report:
    """Bounded check that an edge is p-Cartesian: the comparison map
    X_{/e} -> X_{/y} x_{S_{/p(y)}} S_{/p(e)} is tested as a trivial
    fibration up to the bound."""
    x, s = p.source, p.target
    if x.dim_of(e) != 1:
        raise ValueError("not an edge")
    sb = bound + 1 if slice_bound is None else slice_bound
    y = x.face(e, 0)
    pe = p.apply(e)
    py = s.face(pe, 0)

    k_e = map_from_simplex(x, e, 1)
    k_y = map_from_simplex(x, y, 0)
    k_pe = map_from_simplex(s, pe, 1)
    k_py = map_from_simplex(s, py, 0)

    sl_e = slice_complex(x, k_e, sb, name="X/e")
    sl_y = slice_complex(x, k_y, sb, name="X/y")
    sl_pe = slice_complex(s, k_pe, sb, name="S/pe")
    sl_py = slice_complex(s, k_py, sb, name="S/py")

    pt = point()
    vertex1 = SimplicialMap(pt, standard_simplex(1), {"[0]": SimplexRef("[1]")}, check=False)

    def restrict(sl_big: SliceComplex, sl_small: SliceComplex):
        """Restriction slice-over-edge -> slice-over-target-vertex."""
        assignment = {}
        for gn, raw in sl_big._gen_to_raw.items():
            n = sl_big.sset.gen_dim(gn)
            conn = join_map(
                sl_small._joins[n],
                sl_big._joins[n],
                SimplicialMap.identity(standard_simplex(n)),
                vertex1,
            )
            amap = sl_big._as_dict(n, raw)
            out_raw = tuple(
                apply_assignment(amap, conn.apply(SimplexRef(g)))
                for g in sl_small._gen_lists[n]
            )
            assignment[gn] = raw_ref(sl_small.sset, n, out_raw)
        return SimplicialMap(sl_big.sset, sl_small.sset, assignment, check=False)

    def postcompose(sl_src: SliceComplex, sl_tgt: SliceComplex):
        assignment = {}
        for gn, raw in sl_src._gen_to_raw.items():
            n = sl_src.sset.gen_dim(gn)
            out_raw = tuple(p.apply(v) for v in raw)
            assignment[gn] = raw_ref(sl_tgt.sset, n, out_raw)
        return SimplicialMap(sl_src.sset, sl_tgt.sset, assignment, check=False)

    r1 = restrict(sl_e, sl_y)                 # X/e -> X/y
    q1 = postcompose(sl_y, sl_py)             # X/y -> S/py
    q2 = postcompose(sl_e, sl_pe)             # X/e -> S/pe
    r_s = restrict(sl_pe, sl_py)              # S/pe -> S/py

    pb, pr1, pr2 = pullback_sets(q1, r_s, sb, name="slice-pullback", check_top=False)
    assignment = {}
    for gn in sl_e.sset._dims:
        n = sl_e.sset.gen_dim(gn)
        pair = (r1.apply(SimplexRef(gn)), q2.apply(SimplexRef(gn)))
        assignment[gn] = raw_ref(pb, n, pair)
    comparison = SimplicialMap(sl_e.sset, pb, assignment, check=False)
    rep = classify_fibration(comparison, TRIVIAL, bound)
    claim = f"edge {e} is Cartesian for {x.name or 'X'} -> {s.name or 'S'}"
    return Report(claim, bound, rep.verdict, counterexample=rep.counterexample, notes=rep.notes)
