"""Finite simplicial sets presented by nondegenerate generators.

A simplicial set is stored as its nondegenerate simplices ("generators")
together with a face table; every simplex is a unique degeneracy of a
generator (Eilenberg-Zilber), encoded as a SimplexRef = (generator, word)
where word is a strictly decreasing sequence of degeneracy indices.  All
levels are then finite and enumerable at every dimension, and equality of
simplices is syntactic equality of refs.

The simplicial identities used throughout:

    d_i d_j = d_{j-1} d_i            (i < j)
    d_i s_j = s_{j-1} d_i            (i < j)
    d_i s_j = id                     (i = j, j+1)
    d_i s_j = s_j d_{i-1}            (i > j+1)
    s_i s_j = s_{j+1} s_i            (i <= j)
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, NamedTuple

Word = tuple[int, ...]


# ---------------------------------------------------------------------------
# degeneracy words


def normalize_word(indices: Iterable[int]) -> Word:
    """Normal form of a composite of degeneracy operators.

    `indices` lists operator subscripts outermost first: (a, b) stands for
    s_a s_b.  The result is the unique strictly decreasing word equal to the
    composite under s_i s_j = s_{j+1} s_i (i <= j).
    """
    out: tuple[int, ...] = ()
    for a in reversed(list(indices)):
        out = push_degeneracy(a, out)
    return out


def push_degeneracy(a: int, word: Word) -> Word:
    """Normal form of s_a applied after the (normal) word."""
    if a < 0:
        raise ValueError("negative degeneracy index")
    if not word or a > word[0]:
        return (a,) + word
    # a <= word[0]: s_a s_j = s_{j+1} s_a
    return (word[0] + 1,) + push_degeneracy(a, word[1:])


def face_through_word(i: int, word: Word) -> tuple[int | None, Word]:
    """Push d_i through a degeneracy word.

    Returns (j, word') where the composite d_i s_word equals s_word' d_j,
    or (None, word') if the face cancels against a degeneracy.
    """
    prefix: list[int] = []
    k = i
    rest = word
    while rest:
        j = rest[0]
        if k == j or k == j + 1:
            return None, tuple(prefix) + rest[1:]
        if k < j:
            prefix.append(j - 1)
            rest = rest[1:]
        else:  # k > j + 1
            prefix.append(j)
            k -= 1
            rest = rest[1:]
    return k, tuple(prefix)


class SimplexRef(NamedTuple):
    gen: str
    word: Word = ()

    def __repr__(self):
        if not self.word:
            return f"<{self.gen}>"
        return f"<s{list(self.word)} {self.gen}>"


class SimplicialSet:
    """A finitely presented simplicial set.

    generators: dim -> sorted tuple of generator names (names are globally
    unique); faces: generator name -> tuple of SimplexRefs, one per face.
    """

    def __init__(self, generators: dict[int, Iterable[str]], faces: dict[str, Iterable[SimplexRef]], name: str = ""):
        self.generators = {
            n: tuple(sorted(gs)) for n, gs in sorted(generators.items()) if gs
        }
        self.faces = {g: tuple(fs) for g, fs in faces.items()}
        self.name = name
        self._dims: dict[str, int] = {}
        for n, gs in self.generators.items():
            for g in gs:
                if g in self._dims:
                    raise ValueError(f"duplicate generator name {g!r}")
                self._dims[g] = n
        for n, gs in self.generators.items():
            if n == 0:
                continue
            for g in gs:
                fs = self.faces.get(g)
                if fs is None or len(fs) != n + 1:
                    raise ValueError(f"generator {g!r} needs {n + 1} faces")
                for r in fs:
                    if self.dim_of(r) != n - 1:
                        raise ValueError(f"face of {g!r} has wrong dimension")
        self._levels: dict[int, list[SimplexRef]] = {}

    # -- basic structure ---------------------------------------------------

    @property
    def dim(self) -> int:
        return max(self.generators, default=-1)

    def gen_dim(self, g: str) -> int:
        return self._dims[g]

    def dim_of(self, ref: SimplexRef) -> int:
        return self._dims[ref.gen] + len(ref.word)

    def all_generators(self) -> list[SimplexRef]:
        return [SimplexRef(g) for n in sorted(self.generators) for g in self.generators[n]]

    def face(self, ref: SimplexRef, i: int) -> SimplexRef:
        n = self.dim_of(ref)
        if not 0 <= i <= n:
            raise ValueError(f"face index {i} out of range for dim {n}")
        j, word = face_through_word(i, ref.word)
        if j is None:
            return SimplexRef(ref.gen, word)
        if self._dims[ref.gen] == 0:
            raise ValueError("vertex has no faces")
        base = self.faces[ref.gen][j]
        return SimplexRef(base.gen, compose_words(word, base.word))

    def degeneracy(self, ref: SimplexRef, i: int) -> SimplexRef:
        n = self.dim_of(ref)
        if not 0 <= i <= n:
            raise ValueError(f"degeneracy index {i} out of range for dim {n}")
        return SimplexRef(ref.gen, push_degeneracy(i, ref.word))

    def faces_tuple(self, ref: SimplexRef) -> tuple[SimplexRef, ...]:
        n = self.dim_of(ref)
        return tuple(self.face(ref, i) for i in range(n + 1))

    def level(self, n: int) -> list[SimplexRef]:
        """All n-simplices, sorted by (generator, word)."""
        if n < 0:
            return []
        if n not in self._levels:
            refs = []
            for d in sorted(self.generators):
                if d > n:
                    break
                k = n - d
                for g in self.generators[d]:
                    for comb in itertools.combinations(range(n - 1, -1, -1), k):
                        refs.append(SimplexRef(g, comb))
            self._levels[n] = sorted(refs)
        return self._levels[n]

    def is_degenerate(self, ref: SimplexRef) -> bool:
        return bool(ref.word)

    def classify(self, gen: str, word: Iterable[int]) -> SimplexRef:
        """Normalize raw (generator, operator indices outermost first)."""
        if gen not in self._dims:
            raise ValueError(f"unknown generator {gen!r}")
        return SimplexRef(gen, normalize_word(word))

    def act(self, alpha: tuple[int, ...], ref: SimplexRef) -> SimplexRef:
        """Contravariant action of a monotone map alpha: [m] -> [n] on an
        n-simplex, giving an m-simplex."""
        n = self.dim_of(ref)
        if alpha and (min(alpha) < 0 or max(alpha) > n):
            raise ValueError("ordinal map out of range")
        if any(a > b for a, b in zip(alpha, alpha[1:])):
            raise ValueError("ordinal map not monotone")
        return self._act(alpha, n, ref)

    def _act(self, alpha, n, ref):
        m = len(alpha) - 1
        if alpha == tuple(range(n + 1)):
            return ref
        for j in range(m):
            if alpha[j] == alpha[j + 1]:
                inner = self._act(alpha[:j] + alpha[j + 1:], n, ref)
                return self.degeneracy(inner, j)
        # alpha injective, not surjective: peel the largest missing value
        image = set(alpha)
        c = max(v for v in range(n + 1) if v not in image)
        alpha2 = tuple(v if v < c else v - 1 for v in alpha)
        return self._act(alpha2, n - 1, self.face(ref, c))

    def divisors(self, ref: SimplexRef) -> list[int]:
        n = self.dim_of(ref)
        return [i for i in range(n) if self.degeneracy(self.face(ref, i), i) == ref]

    # -- verification -------------------------------------------------------

    def check_identities(self, max_dim: int) -> None:
        """Exhaustively verify d_i d_j = d_{j-1} d_i on all levels <= max_dim."""
        for n in range(2, max_dim + 1):
            for ref in self.level(n):
                for j in range(1, n + 1):
                    for i in range(j):
                        lhs = self.face(self.face(ref, j), i)
                        rhs = self.face(self.face(ref, i), j - 1)
                        if lhs != rhs:
                            raise AssertionError(
                                f"d_{i} d_{j} != d_{j-1} d_{i} at {ref} in {self.name or 'sset'}"
                            )

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "generators": {str(n): list(gs) for n, gs in self.generators.items()},
            "faces": {
                g: [{"gen": r.gen, "word": list(r.word)} for r in fs]
                for g, fs in sorted(self.faces.items())
            },
        }

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "SimplicialSet":
        gens = {int(n): list(gs) for n, gs in data["generators"].items()}
        faces = {
            g: tuple(SimplexRef(r["gen"], tuple(r["word"])) for r in fs)
            for g, fs in data.get("faces", {}).items()
        }
        return cls(gens, faces, name=name)

    def __repr__(self):
        counts = ",".join(str(len(self.generators.get(n, ()))) for n in range(self.dim + 1))
        return f"SimplicialSet({self.name or 'anon'}; gens=({counts}))"


def compose_words(outer: Word, inner: Word) -> Word:
    """Normal form of s_outer s_inner (outer applied last)."""
    word = inner
    for a in reversed(outer):
        word = push_degeneracy(a, word)
    return word


class SimplicialMap:
    """Map of simplicial sets, stored on generators."""

    def __init__(self, source: SimplicialSet, target: SimplicialSet, assignment: dict[str, SimplexRef], check: bool = True):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)
        if check:
            self.validate()

    def validate(self) -> None:
        for n in sorted(self.source.generators):
            for g in self.source.generators[n]:
                img = self.assignment.get(g)
                if img is None:
                    raise ValueError(f"no value assigned to generator {g!r}")
                if self.target.dim_of(img) != n:
                    raise ValueError(f"value of {g!r} has wrong dimension")
                for i in range(n + 1) if n > 0 else ():
                    lhs = self.apply(self.source.face(SimplexRef(g), i))
                    rhs = self.target.face(img, i)
                    if lhs != rhs:
                        raise ValueError(
                            f"map does not commute with d_{i} at {g!r}: {lhs} != {rhs}"
                        )

    def apply(self, ref: SimplexRef) -> SimplexRef:
        base = self.assignment[ref.gen]
        return SimplexRef(base.gen, compose_words(ref.word, base.word))

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """self after other."""
        if other.target is not self.source and other.target != self.source:
            raise ValueError("composition mismatch")
        assignment = {g: self.apply(r) for g, r in other.assignment.items()}
        return SimplicialMap(other.source, self.target, assignment, check=False)

    @classmethod
    def identity(cls, x: SimplicialSet) -> "SimplicialMap":
        return cls(x, x, {g: SimplexRef(g) for n in x.generators for g in x.generators[n]}, check=False)

    def is_injective(self, max_dim: int | None = None) -> bool:
        top = self.source.dim if max_dim is None else max_dim
        for n in range(top + 1):
            seen = set()
            for ref in self.source.level(n):
                img = self.apply(ref)
                if img in seen:
                    return False
                seen.add(img)
        return True

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialMap)
            and self.assignment == other.assignment
        )

    def __hash__(self):
        return hash(tuple(sorted(self.assignment.items())))

    def to_json(self) -> dict:
        return {
            "assignment": {
                g: {"gen": r.gen, "word": list(r.word)}
                for g, r in sorted(self.assignment.items())
            }
        }

    def __repr__(self):
        return f"SimplicialMap({self.source.name or '?'} -> {self.target.name or '?'})"


class MarkedSimplicialSet:
    """A simplicial set with a set of marked edges containing all
    degenerate edges.  Used only to record distinguished (e.g. Cartesian)
    edges; no marked model structure is implemented."""

    def __init__(self, underlying: SimplicialSet, marked: Iterable[SimplexRef] = ()):
        self.underlying = underlying
        degenerate = {r for r in underlying.level(1) if r.word}
        self.marked = degenerate | set(marked)
        for e in self.marked:
            if underlying.dim_of(e) != 1:
                raise ValueError("marked simplex is not an edge")


class BisimplicialSet:
    """Rows of simplicial sets with horizontal face/degeneracy maps."""

    def __init__(self, rows: list[SimplicialSet], hfaces: dict[tuple[int, int], SimplicialMap], hdegens: dict[tuple[int, int], SimplicialMap]):
        self.rows = rows
        self.hfaces = hfaces  # (m, i): row m -> row m-1
        self.hdegens = hdegens  # (m, i): row m -> row m+1

    def check_identities(self) -> None:
        """Horizontal simplicial identities as equalities of maps."""
        m_top = len(self.rows) - 1
        for m in range(2, m_top + 1):
            for j in range(1, m + 1):
                for i in range(j):
                    lhs = self.hfaces[(m - 1, i)].compose(self.hfaces[(m, j)])
                    rhs = self.hfaces[(m - 1, j - 1)].compose(self.hfaces[(m, i)])
                    if lhs != rhs:
                        raise AssertionError(f"horizontal d_{i} d_{j} fails at row {m}")
        for m in range(0, m_top):
            for j in range(m + 1):
                s = self.hdegens[(m, j)]
                for i in range(m + 2):
                    dcomp = self.hfaces[(m + 1, i)].compose(s)
                    if i == j or i == j + 1:
                        if dcomp != SimplicialMap.identity(self.rows[m]):
                            raise AssertionError(f"horizontal d_{i} s_{j} != id at row {m}")
                    elif i < j:
                        rhs = self.hdegens[(m - 1, j - 1)].compose(self.hfaces[(m, i)])
                        if dcomp != rhs:
                            raise AssertionError(f"horizontal d_{i} s_{j} fails at row {m}")
                    elif m >= 1:
                        rhs = self.hdegens[(m - 1, j)].compose(self.hfaces[(m, i - 1)])
                        if dcomp != rhs:
                            raise AssertionError(f"horizontal d_{i} s_{j} fails at row {m}")


# ---------------------------------------------------------------------------
# standard objects


def standard_simplex(n: int) -> SimplicialSet:
    """The n-simplex: one nondegenerate generator per nonempty subset of
    {0..n}, named by the vertex string, faces deleting vertices."""
    if n < 0:
        raise ValueError("n must be >= 0")
    gens: dict[int, list[str]] = {}
    faces: dict[str, tuple[SimplexRef, ...]] = {}
    for size in range(1, n + 2):
        for subset in itertools.combinations(range(n + 1), size):
            name = vertex_name(subset)
            gens.setdefault(size - 1, []).append(name)
            if size > 1:
                faces[name] = tuple(
                    SimplexRef(vertex_name(subset[:i] + subset[i + 1:]))
                    for i in range(size)
                )
    return SimplicialSet(gens, faces, name=f"Delta{n}")


def vertex_name(subset: Iterable[int]) -> str:
    return "[" + ",".join(str(v) for v in subset) + "]"


def simplex_subset(x: SimplicialSet, keep: Callable[[str], bool], name: str = "") -> tuple[SimplicialSet, SimplicialMap]:
    """Sub-simplicial set on the generators satisfying `keep` (the set must
    be closed under faces), with its inclusion map."""
    gens: dict[int, list[str]] = {}
    faces = {}
    for n, gs in x.generators.items():
        for g in gs:
            if keep(g):
                gens.setdefault(n, []).append(g)
                if n > 0:
                    for r in x.faces[g]:
                        if not keep(r.gen):
                            raise ValueError(f"{g!r} kept but its face {r.gen!r} is not")
                    faces[g] = x.faces[g]
    sub = SimplicialSet(gens, faces, name=name)
    incl = SimplicialMap(sub, x, {g: SimplexRef(g) for gs in gens.values() for g in gs}, check=False)
    return sub, incl


def boundary(n: int) -> tuple[SimplicialSet, SimplicialMap]:
    """The boundary of the n-simplex with its inclusion into Delta^n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    full = standard_simplex(n)
    top = vertex_name(range(n + 1))
    sub, incl = simplex_subset(full, lambda g: g != top, name=f"dDelta{n}")
    return sub, incl


def horn(n: int, k: int) -> tuple[SimplicialSet, SimplicialMap]:
    """The horn missing the k-th facet, with its inclusion into Delta^n."""
    if n < 1:
        raise ValueError("horns need n >= 1")
    if not 0 <= k <= n:
        raise ValueError(f"horn index {k} out of range")
    full = standard_simplex(n)
    banned = vertex_name([v for v in range(n + 1) if v != k])
    top = vertex_name(range(n + 1))

    def keep(g: str) -> bool:
        return g != top and g != banned

    sub, incl = simplex_subset(full, keep, name=f"Horn{n}_{k}")
    return sub, incl


def delta_ref(n: int, values: tuple[int, ...]) -> SimplexRef:
    """The simplex of Delta^n given by a monotone vertex string, in
    (generator, word) normal form."""
    if any(a > b for a, b in zip(values, values[1:])):
        raise ValueError("vertex string not monotone")
    word: list[int] = []
    vals = list(values)
    i = 0
    while i < len(vals) - 1:
        if vals[i] == vals[i + 1]:
            word.append(i)
            del vals[i + 1]
        else:
            i += 1
    return SimplexRef(vertex_name(vals), normalize_word(word))


def delta_values(ref: SimplexRef) -> tuple[int, ...]:
    """Inverse of delta_ref: the monotone vertex string of a Delta-simplex."""
    vals = [int(v) for v in ref.gen.strip("[]").split(",")]
    for i in reversed(ref.word):
        vals.insert(i + 1, vals[i])
    return tuple(vals)


# ---------------------------------------------------------------------------
# presenting a simplicial set from raw level data


class LevelData:
    """Abstract level description used to build presentations.

    levels(n) returns the (finite, deterministic) list of raw n-simplices;
    face(n, i, raw) and degen(n, i, raw) implement the operators.  Raws must
    be hashable and their listed order is the canonical one.
    """

    def __init__(self, levels, face, degen):
        self.levels = levels
        self.face = face
        self.degen = degen


def present(data: LevelData, max_dim: int, name: str = "", check_top: bool = True) -> tuple[SimplicialSet, dict, dict]:
    """Build a presented SimplicialSet from raw levels.

    Returns (sset, raw_to_ref, gen_to_raw) where raw_to_ref maps raws at each
    level <= max_dim to SimplexRefs.  If check_top is set, raises if level
    max_dim + 1 contains a nondegenerate raw (the bound would be dishonest).
    """
    level_raws: dict[int, list] = {}
    raw_to_ref: dict[tuple[int, object], SimplexRef] = {}
    gen_to_raw: dict[str, object] = {}
    gens: dict[int, list[str]] = {}
    faces: dict[str, list[SimplexRef]] = {}

    def classify(n: int, raw) -> SimplexRef:
        key = (n, raw)
        if key in raw_to_ref:
            return raw_to_ref[key]
        for i in range(n):
            f = data.face(n, i, raw)
            if data.degen(n - 1, i, f) == raw:
                inner = classify(n - 1, f)
                ref = SimplexRef(inner.gen, push_degeneracy(i, inner.word))
                raw_to_ref[key] = ref
                return ref
        raise ValueError(f"raw {raw!r} at level {n} is not in the presented range")

    for n in range(max_dim + 1):
        raws = list(data.levels(n))
        level_raws[n] = raws
        idx = 0
        for raw in raws:
            key = (n, raw)
            degenerate = False
            for i in range(n):
                f = data.face(n, i, raw)
                if data.degen(n - 1, i, f) == raw:
                    degenerate = True
                    break
            if degenerate:
                continue
            gname = f"{name or 'g'}~{n}.{idx:04d}"
            idx += 1
            gens.setdefault(n, []).append(gname)
            gen_to_raw[gname] = raw
            raw_to_ref[key] = SimplexRef(gname)
            if n > 0:
                faces[gname] = [classify(n - 1, data.face(n, i, raw)) for i in range(n + 1)]
    # degenerate raws resolve against lower generators
    for n in range(max_dim + 1):
        for raw in level_raws[n]:
            classify(n, raw)
    if check_top:
        for raw in data.levels(max_dim + 1):
            n = max_dim + 1
            if not any(
                data.degen(n - 1, i, data.face(n, i, raw)) == raw for i in range(n)
            ):
                raise ValueError(
                    f"nondegenerate raw above the requested bound {max_dim}"
                )
    sset = SimplicialSet(gens, {g: tuple(fs) for g, fs in faces.items()}, name=name)

    def classify_raw(n: int, raw) -> SimplexRef:
        """Classify a raw at any level, stripping degeneracies down into
        the presented range."""
        key = (n, raw)
        if key in raw_to_ref:
            return raw_to_ref[key]
        for i in range(n):
            f = data.face(n, i, raw)
            if data.degen(n - 1, i, f) == raw:
                inner = classify_raw(n - 1, f)
                ref = SimplexRef(inner.gen, push_degeneracy(i, inner.word))
                raw_to_ref[key] = ref
                return ref
        raise ValueError(f"nondegenerate raw {raw!r} at level {n} above bound")

    sset.classify_raw = classify_raw  # type: ignore[attr-defined]
    return sset, raw_to_ref, gen_to_raw


# ---------------------------------------------------------------------------
# products, joins, opposites


def product(k: SimplicialSet, l: SimplicialSet, max_dim: int | None = None, name: str = "") -> tuple[SimplicialSet, SimplicialMap, SimplicialMap]:
    """The product K x L with its two projections.

    Raw n-simplices are pairs of refs; nondegenerate pairs generate.  The
    product of finite presentations is finite of dimension dim K + dim L.
    """
    top = (k.dim + l.dim) if max_dim is None else max_dim

    def levels(n):
        return [(a, b) for a in k.level(n) for b in l.level(n)]

    def face(n, i, raw):
        return (k.face(raw[0], i), l.face(raw[1], i))

    def degen(n, i, raw):
        return (k.degeneracy(raw[0], i), l.degeneracy(raw[1], i))

    data = LevelData(levels, face, degen)
    prod, raw_to_ref, gen_to_raw = present(
        data, top, name=name or f"({k.name}x{l.name})", check_top=max_dim is None
    )
    pr1 = SimplicialMap(prod, k, {g: gen_to_raw[g][0] for g in gen_to_raw}, check=False)
    pr2 = SimplicialMap(prod, l, {g: gen_to_raw[g][1] for g in gen_to_raw}, check=False)
    prod.raw_to_ref = raw_to_ref  # type: ignore[attr-defined]
    prod.gen_to_raw = gen_to_raw  # type: ignore[attr-defined]
    return prod, pr1, pr2


def raw_ref(sset: SimplicialSet, n: int, raw) -> SimplexRef:
    """The ref of a raw simplex in a simplicial set built by `present`
    (product, join, twisted arrow, ...), at any level."""
    classify = getattr(sset, "classify_raw", None)
    if classify is not None:
        return classify(n, raw)
    table = sset.raw_to_ref  # type: ignore[attr-defined]
    try:
        return table[(n, raw)]
    except KeyError:
        raise ValueError(f"raw {raw!r} at level {n} not in presented range") from None


JOIN_EMPTY = SimplexRef("", ())


def join(k: SimplicialSet, l: SimplicialSet, name: str = "") -> tuple[SimplicialSet, SimplicialMap, SimplicialMap]:
    """The join K * L with the two inclusions.

    Raw n-simplices are pairs (x, y) with x an i-simplex of K (or the empty
    marker) and y an (n-1-i)-simplex of L (or empty); faces act on the
    factor owning the vertex, collapsing to the empty marker at dimension 0.
    """
    top = k.dim + l.dim + 1

    def levels(n):
        out = []
        for i in range(-1, n + 1):
            xs = [JOIN_EMPTY] if i == -1 else k.level(i)
            ys = [JOIN_EMPTY] if i == n else l.level(n - 1 - i)
            for x in xs:
                for y in ys:
                    out.append((i, x, y))
        return out

    def face(n, j, raw):
        i, x, y = raw
        if j <= i:
            if i == 0:
                return (-1, JOIN_EMPTY, y)
            return (i - 1, k.face(x, j), y)
        if n - 1 - i == 0:
            return (i, x, JOIN_EMPTY)
        return (i, x, l.face(y, j - i - 1))

    def degen(n, j, raw):
        i, x, y = raw
        if j <= i:
            return (i + 1, k.degeneracy(x, j), y)
        return (i, x, l.degeneracy(y, j - i - 1))

    data = LevelData(levels, face, degen)
    jn, raw_to_ref, gen_to_raw = present(data, top, name=name or f"({k.name}*{l.name})")
    incl_k = SimplicialMap(
        k, jn,
        {g: raw_to_ref[(k.gen_dim(g), (k.gen_dim(g), SimplexRef(g), JOIN_EMPTY))] for n in k.generators for g in k.generators[n]},
        check=False,
    )
    incl_l = SimplicialMap(
        l, jn,
        {g: raw_to_ref[(l.gen_dim(g), (-1, JOIN_EMPTY, SimplexRef(g)))] for n in l.generators for g in l.generators[n]},
        check=False,
    )
    jn.raw_to_ref = raw_to_ref  # type: ignore[attr-defined]
    jn.gen_to_raw = gen_to_raw  # type: ignore[attr-defined]
    return jn, incl_k, incl_l


def opposite_ref(x: SimplicialSet, ref: SimplexRef) -> SimplexRef:
    """Translate a ref of X to the corresponding ref of opposite(X)."""
    d = x.gen_dim(ref.gen)
    indices = []
    for pos, j in enumerate(reversed(ref.word)):
        level = d + pos  # dimension the operator is applied at
        indices.append(level - j)
    indices.reverse()
    return SimplexRef(ref.gen, normalize_word(indices))


def opposite(x: SimplicialSet, name: str = "") -> SimplicialSet:
    """The opposite simplicial set: same generators, faces reversed."""
    faces = {}
    for n, gs in x.generators.items():
        if n == 0:
            continue
        for g in gs:
            fs = x.faces[g]
            faces[g] = tuple(opposite_ref(x, fs[n - i]) for i in range(n + 1))
    return SimplicialSet(dict(x.generators), faces, name=name or f"{x.name}_op")


# ---------------------------------------------------------------------------
# nerves of finite categories


class FiniteCategory:
    """A finite category: objects, morphisms with source/target, a
    composition table, and identities."""

    def __init__(self, objects: Iterable[str], morphisms: dict[str, tuple[str, str]], compose: dict[tuple[str, str], str], identities: dict[str, str]):
        self.objects = tuple(sorted(objects))
        self.morphisms = dict(morphisms)  # name -> (source, target)
        self.compose_table = dict(compose)  # (g after f): (f, g) -> g∘f
        self.identities = dict(identities)  # object -> identity morphism name
        self.validate()

    def validate(self) -> None:
        for obj, ident in self.identities.items():
            s, t = self.morphisms[ident]
            if s != obj or t != obj:
                raise ValueError(f"identity of {obj!r} has wrong endpoints")
        for (f, g), h in self.compose_table.items():
            fs, ft = self.morphisms[f]
            gs, gt = self.morphisms[g]
            hs, ht = self.morphisms[h]
            if ft != gs or hs != fs or ht != gt:
                raise ValueError(f"composition ({f},{g})->{h} has wrong endpoints")
        for f, (s, t) in self.morphisms.items():
            if self.compose((self.identities[s], f)) != f or self.compose((f, self.identities[t])) != f:
                raise ValueError(f"identity laws fail at {f!r}")
        # associativity
        for f, (fs, ft) in self.morphisms.items():
            for g, (gs, gt) in self.morphisms.items():
                if ft != gs:
                    continue
                for h, (hs, ht) in self.morphisms.items():
                    if gt != hs:
                        continue
                    left = self.compose((self.compose((f, g)), h))
                    right = self.compose((f, self.compose((g, h))))
                    if left != right:
                        raise ValueError(f"associativity fails at ({f},{g},{h})")

    def compose(self, pair: tuple[str, str]) -> str:
        if pair not in self.compose_table:
            raise ValueError(f"missing composite for {pair}")
        return self.compose_table[pair]

    def is_identity(self, f: str) -> bool:
        return f in self.identities.values()

    def hom(self, x: str, y: str) -> list[str]:
        return sorted(f for f, (s, t) in self.morphisms.items() if s == x and t == y)

    def source(self, f: str) -> str:
        return self.morphisms[f][0]

    def target(self, f: str) -> str:
        return self.morphisms[f][1]

    def nonidentity(self) -> list[str]:
        return sorted(f for f in self.morphisms if not self.is_identity(f))


def nerve(cat: FiniteCategory, name: str = "", truncation: int | None = None) -> SimplicialSet:
    """Nerve of a finite category.

    n-simplices are composable chains of length n; generators are
    identity-free chains.  Rejects categories whose identity-free chains are
    unbounded (e.g. group-like ones) unless a truncation dimension is given,
    in which case the truncation keeps the chains with at most `truncation`
    non-identity entries (the skeleton of the nerve).
    """
    arrows = cat.nonidentity()
    if truncation is None:
        # unbounded iff the composability digraph on non-identity arrows
        # has a cycle
        graph = {f: [g for g in arrows if cat.source(g) == cat.target(f)] for f in arrows}
        state: dict[str, int] = {}

        def dfs(f):
            state[f] = 1
            for g in graph[f]:
                if state.get(g, 0) == 1:
                    raise ValueError(
                        f"identity-free chains are unbounded (cycle through {g!r}); "
                        "use truncated nerve for group-like categories"
                    )
                if state.get(g, 0) == 0:
                    dfs(g)
            state[f] = 2

        for f in arrows:
            if state.get(f, 0) == 0:
                dfs(f)
        max_len = _longest_chain(cat, arrows)
    else:
        max_len = truncation

    gens: dict[int, list[str]] = {0: [f"o:{x}" for x in cat.objects]}
    faces: dict[str, tuple[SimplexRef, ...]] = {}
    chains: dict[int, list[tuple[str, ...]]] = {}
    prev: list[tuple[str, ...]] = [()]
    for n in range(1, max_len + 1):
        level = sorted(
            ch + (f,)
            for ch in prev
            for f in arrows
            if not ch or cat.source(f) == cat.target(ch[-1])
        )
        if not level:
            break
        chains[n] = level
        gens[n] = ["c:" + "|".join(ch) for ch in level]
        prev = level

    def classify_chain(ch: tuple[str, ...], source_obj: str) -> SimplexRef:
        """Strip identity entries of a composable chain into a word."""
        word = []
        work = list(ch)
        pos = 0
        while pos < len(work):
            if cat.is_identity(work[pos]):
                word.append(pos)
                del work[pos]
            else:
                pos += 1
        if not work:
            return SimplexRef(f"o:{source_obj}", normalize_word(word))
        return SimplexRef("c:" + "|".join(work), normalize_word(word))

    for n, chs in chains.items():
        for ch in chs:
            fs = []
            for i in range(n + 1):
                if i == 0:
                    sub = ch[1:]
                    src = cat.target(ch[0])
                elif i == n:
                    sub = ch[:-1]
                    src = cat.source(ch[0])
                else:
                    sub = ch[: i - 1] + (cat.compose((ch[i - 1], ch[i])),) + ch[i + 1:]
                    src = cat.source(ch[0])
                if not sub:
                    fs.append(SimplexRef(f"o:{src}"))
                else:
                    fs.append(classify_chain(sub, src))
            faces["c:" + "|".join(ch)] = tuple(fs)
    return SimplicialSet(gens, faces, name=name or "N(C)")


def _longest_chain(cat: FiniteCategory, arrows: list[str]) -> int:
    graph = {f: [g for g in arrows if cat.source(g) == cat.target(f)] for f in arrows}
    memo: dict[str, int] = {}

    def longest(f):
        if f in memo:
            return memo[f]
        memo[f] = 1 + max((longest(g) for g in graph[f]), default=0)
        return memo[f]

    return max((longest(f) for f in arrows), default=0)


def nerve_ref_of_chain(ns: SimplicialSet, cat: FiniteCategory, chain: tuple[str, ...], source_obj: str) -> SimplexRef:
    """Classify a composable chain (possibly with identities) in a nerve."""
    word = []
    work = list(chain)
    pos = 0
    while pos < len(work):
        if cat.is_identity(work[pos]):
            word.append(pos)
            del work[pos]
        else:
            pos += 1
    if not work:
        return SimplexRef(f"o:{source_obj}", normalize_word(word))
    return SimplexRef("c:" + "|".join(work), normalize_word(word))


def nerve_functor_map(
    nsrc: SimplicialSet,
    csrc: FiniteCategory,
    ntgt: SimplicialSet,
    ctgt: FiniteCategory,
    on_obj: dict[str, str],
    on_mor: dict[str, str],
) -> SimplicialMap:
    """The map of nerves induced by a functor (given on names)."""
    assignment: dict[str, SimplexRef] = {}
    for n in nsrc.generators:
        for g in nsrc.generators[n]:
            if g.startswith("o:"):
                assignment[g] = SimplexRef(f"o:{on_obj[g[2:]]}")
            else:
                chain = tuple(on_mor[m] for m in g[2:].split("|"))
                src_obj = on_obj[csrc.source(g[2:].split("|")[0])]
                assignment[g] = nerve_ref_of_chain(ntgt, ctgt, chain, src_obj)
    return SimplicialMap(nsrc, ntgt, assignment)


def nerve_chain_of_ref(cat: FiniteCategory, ref: SimplexRef) -> tuple[str, ...]:
    """Inverse of nerve_ref_of_chain: expand the degeneracy word back into
    identity entries."""
    if ref.gen.startswith("o:"):
        chain: list[str] = []
        objs = [ref.gen[2:]]
    else:
        chain = ref.gen[2:].split("|")
        objs = [cat.source(chain[0])] + [cat.target(f) for f in chain]
    for i in reversed(ref.word):
        chain.insert(i, cat.identities[objs[i]])
        objs.insert(i + 1, objs[i])
    return tuple(chain)


# ---------------------------------------------------------------------------
# pushouts


def pushout(f: SimplicialMap, g: SimplicialMap, name: str = "") -> tuple[SimplicialSet, SimplicialMap, SimplicialMap]:
    """Pushout of B <-f- A -g-> X along an injective f.

    Returns (P, incl_B: B -> P as the cobase change of g, map_X: X -> P).
    Generators of P are the generators of X plus the B-generators not hit
    by f.
    """
    a, b, x = f.source, f.target, g.target
    if g.source is not f.source and g.source != f.source:
        raise ValueError("pushout legs must share their source")
    if not f.is_injective():
        raise ValueError("pushout requires an injective first leg")
    # generator-level image of f
    image: dict[str, str] = {}
    for n in a.generators:
        for ga in a.generators[n]:
            img = f.apply(SimplexRef(ga))
            if img.word:
                raise ValueError("injective map must send generators to generators")
            image[img.gen] = ga

    def translate(ref: SimplexRef) -> SimplexRef:
        """B-ref -> P-ref (through g when in the image of f)."""
        if ref.gen in image:
            via = g.apply(SimplexRef(image[ref.gen]))
            return SimplexRef(f"x:{via.gen}", compose_words(ref.word, via.word))
        return SimplexRef(f"b:{ref.gen}", ref.word)

    gens: dict[int, list[str]] = {}
    faces: dict[str, tuple[SimplexRef, ...]] = {}
    for n, gs in x.generators.items():
        for gx in gs:
            gens.setdefault(n, []).append(f"x:{gx}")
            if n > 0:
                faces[f"x:{gx}"] = tuple(SimplexRef(f"x:{r.gen}", r.word) for r in x.faces[gx])
    for n, gs in b.generators.items():
        for gb in gs:
            if gb in image:
                continue
            gens.setdefault(n, []).append(f"b:{gb}")
            if n > 0:
                faces[f"b:{gb}"] = tuple(translate(r) for r in b.faces[gb])
    p = SimplicialSet(gens, faces, name=name or "pushout")
    incl_b = SimplicialMap(
        b, p, {gb: translate(SimplexRef(gb)) for n in b.generators for gb in b.generators[n]}, check=False
    )
    map_x = SimplicialMap(
        x, p, {gx: SimplexRef(f"x:{gx}") for n in x.generators for gx in x.generators[n]}, check=False
    )
    return p, incl_b, map_x


# ---------------------------------------------------------------------------
# limits and assorted helpers


def empty_sset(name: str = "empty") -> SimplicialSet:
    return SimplicialSet({}, {}, name=name)


def point() -> SimplicialSet:
    return standard_simplex(0)


def terminal_map(x: SimplicialSet) -> SimplicialMap:
    """The unique map to the point."""
    pt = point()
    assignment = {}
    for n in x.generators:
        for g in x.generators[n]:
            assignment[g] = SimplexRef("[0]", tuple(range(n - 1, -1, -1)))
    return SimplicialMap(x, pt, assignment, check=False)


def map_from_simplex(x: SimplicialSet, ref: SimplexRef, n: int) -> SimplicialMap:
    """The map Delta^n -> X classifying an n-simplex."""
    if x.dim_of(ref) != n:
        raise ValueError("simplex dimension mismatch")
    src = standard_simplex(n)
    assignment = {}
    for m in src.generators:
        for g in src.generators[m]:
            vals = tuple(int(v) for v in g.strip("[]").split(","))
            assignment[g] = x.act(vals, ref)
    return SimplicialMap(src, x, assignment, check=False)


def apply_assignment(assignment: dict[str, SimplexRef], ref: SimplexRef) -> SimplexRef:
    base = assignment[ref.gen]
    return SimplexRef(base.gen, compose_words(ref.word, base.word))


def pullback_sets(f: SimplicialMap, g: SimplicialMap, max_dim: int, name: str = "", check_top: bool = True) -> tuple[SimplicialSet, SimplicialMap, SimplicialMap]:
    """Strict fibre product A x_C B of presented simplicial sets, with its
    two projections.  Levels are pairs with equal images; the requested
    max_dim is validated unless check_top is disabled."""
    a, b = f.source, g.source

    def levels(n):
        ga = {}
        for r in a.level(n):
            ga.setdefault(f.apply(r), []).append(r)
        out = []
        for s in b.level(n):
            for r in ga.get(g.apply(s), ()):
                out.append((r, s))
        return sorted(out)

    def face(n, i, raw):
        return (a.face(raw[0], i), b.face(raw[1], i))

    def degen(n, i, raw):
        return (a.degeneracy(raw[0], i), b.degeneracy(raw[1], i))

    data = LevelData(levels, face, degen)
    pb, raw_to_ref, gen_to_raw = present(
        data, max_dim, name=name or "pullback", check_top=check_top
    )
    pr1 = SimplicialMap(pb, a, {gn: gen_to_raw[gn][0] for gn in gen_to_raw}, check=False)
    pr2 = SimplicialMap(pb, b, {gn: gen_to_raw[gn][1] for gn in gen_to_raw}, check=False)
    pb.raw_to_ref = raw_to_ref  # type: ignore[attr-defined]
    pb.gen_to_raw = gen_to_raw  # type: ignore[attr-defined]
    return pb, pr1, pr2


def fibre_over_vertex(p: SimplicialMap, vertex: SimplexRef, name: str = "") -> tuple[SimplicialSet, SimplicialMap]:
    """Sub-simplicial set of the source of p on simplices lying over total
    degeneracies of the given base vertex."""
    x = p.source

    def keep(g: str) -> bool:
        img = p.assignment[g]
        n = x.gen_dim(g)
        return img == SimplexRef(vertex.gen, tuple(range(n - 1, -1, -1)))

    return simplex_subset(x, keep, name=name or "fibre")


# ---------------------------------------------------------------------------
# isomorphism search


def find_isomorphism(x: SimplicialSet, y: SimplicialSet) -> SimplicialMap | None:
    """Search for an isomorphism of presented simplicial sets.

    Backtracks over generator assignments dimension by dimension; generator
    counts per dimension must match.  Deterministic: first isomorphism in
    the canonical order is returned.
    """
    if {n: len(gs) for n, gs in x.generators.items()} != {
        n: len(gs) for n, gs in y.generators.items()
    }:
        return None
    xgens = [g for n in sorted(x.generators) for g in x.generators[n]]
    assignment: dict[str, SimplexRef] = {}
    used: set[str] = set()

    def extend(idx: int) -> bool:
        if idx == len(xgens):
            return True
        gx = xgens[idx]
        n = x.gen_dim(gx)
        expected = None
        if n > 0:
            expected = tuple(
                SimplexRef(assignment[r.gen].gen, compose_words(r.word, assignment[r.gen].word))
                for r in x.faces[gx]
            )
        for gy in y.generators.get(n, ()):
            if gy in used:
                continue
            if n > 0 and y.faces[gy] != expected:
                continue
            assignment[gx] = SimplexRef(gy)
            used.add(gy)
            if extend(idx + 1):
                return True
            del assignment[gx]
            used.remove(gy)
        return False

    if extend(0):
        return SimplicialMap(x, y, assignment, check=False)
    return None
