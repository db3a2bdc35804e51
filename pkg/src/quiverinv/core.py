"""Quivers, Euler forms, and representation-type classification.

A quiver is a finite directed multigraph.  The homological bilinear form of
its path algebra (or of a bound algebra given by relation counts) is carried
by :class:`EulerMatrix`; for a dimension vector ``d`` and weight ``theta``
all pairings are exact integer arithmetic.

Vertex ids are arbitrary strings.  Every matrix and tuple in this module is
indexed through the canonical sorted order of the vertex ids, exposed as
``EulerMatrix.order``, which makes all outputs independent of declaration
order.
"""

from dataclasses import dataclass, field

from . import linalg
from .errors import InputError, InvariantError, PreconditionError


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph with string vertex ids and arrow ids."""

    vertices: tuple
    arrows: tuple  # of (arrow_id, tail, head)
    name: str = ""

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex ids")
        ids = [a[0] for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise InputError("duplicate arrow ids")
        vset = set(self.vertices)
        for aid, tail, head in self.arrows:
            if tail not in vset or head not in vset:
                raise InputError(f"arrow {aid!r} uses an undeclared vertex")

    @property
    def order(self):
        """Canonical sorted vertex order used for all matrices."""
        return tuple(sorted(self.vertices))

    def arrow_count(self, tail, head):
        return sum(1 for _, t, h in self.arrows if t == tail and h == head)

    def arrows_from(self, v):
        return tuple(a for a in self.arrows if a[1] == v)

    def arrows_to(self, v):
        return tuple(a for a in self.arrows if a[2] == v)

    def is_acyclic(self):
        color = {v: 0 for v in self.vertices}
        adj = {v: [] for v in self.vertices}
        for _, t, h in self.arrows:
            adj[t].append(h)
        for start in self.vertices:
            if color[start]:
                continue
            stack = [(start, iter(adj[start]))]
            color[start] = 1
            while stack:
                v, it = stack[-1]
                advanced = False
                for w in it:
                    if color[w] == 1:
                        return False
                    if color[w] == 0:
                        color[w] = 1
                        stack.append((w, iter(adj[w])))
                        advanced = True
                        break
                if not advanced:
                    color[v] = 2
                    stack.pop()
        return True

    def topological_order(self):
        """Vertices in an arrow-compatible order (ties broken by sorted id)."""
        if not self.is_acyclic():
            raise PreconditionError("quiver has an oriented cycle")
        indeg = {v: 0 for v in self.vertices}
        for _, _, h in self.arrows:
            indeg[h] += 1
        ready = sorted(v for v in self.vertices if indeg[v] == 0)
        out = []
        while ready:
            v = ready.pop(0)
            out.append(v)
            changed = False
            for _, t, h in self.arrows:
                if t == v:
                    indeg[h] -= 1
                    if indeg[h] == 0:
                        ready.append(h)
                        changed = True
            if changed:
                ready.sort()
        return tuple(out)

    def is_connected(self):
        if not self.vertices:
            return True
        adj = {v: set() for v in self.vertices}
        for _, t, h in self.arrows:
            adj[t].add(h)
            adj[h].add(t)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def components(self):
        adj = {v: set() for v in self.vertices}
        for _, t, h in self.arrows:
            adj[t].add(h)
            adj[h].add(t)
        seen = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            seen.add(start)
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return comps

    def restrict(self, vertices):
        """Full subquiver on the given vertex set."""
        vset = set(vertices)
        if not vset <= set(self.vertices):
            raise InputError("restriction to non-vertices")
        return Quiver(
            tuple(v for v in self.vertices if v in vset),
            tuple(a for a in self.arrows if a[1] in vset and a[2] in vset),
        )


def _paths_of_length_two_or_more(quiver):
    """Set of (i, j) joined by some path of length >= 2."""
    verts = quiver.order
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = [[False] * n for _ in range(n)]
    for _, t, h in quiver.arrows:
        adj[idx[t]][idx[h]] = True
    closure = [row[:] for row in adj]
    for k in range(n):
        for i in range(n):
            if closure[i][k]:
                for j in range(n):
                    if closure[k][j]:
                        closure[i][j] = True
    out = set()
    for i in range(n):
        for j in range(n):
            if any(adj[i][k] and closure[k][j] for k in range(n)):
                out.add((verts[i], verts[j]))
    return out


@dataclass(frozen=True)
class BoundQuiver:
    """Quiver plus per-pair counts of independent relations.

    ``relation_counts[(i, j)]`` is the number of relations supported on paths
    from i to j; it enters the Euler matrix with a positive sign (the algebra
    is assumed to have global dimension at most two).
    """

    quiver: Quiver
    relation_counts: dict = field(default_factory=dict)

    def __post_init__(self):
        allowed = _paths_of_length_two_or_more(self.quiver)
        for (i, j), r in self.relation_counts.items():
            if r < 0:
                raise InputError("negative relation count")
            if r > 0 and (i, j) not in allowed:
                raise InputError(
                    f"relation count on ({i}, {j}) without a path of length >= 2"
                )


class EulerMatrix:
    """Bilinear Euler form of a (bound) quiver algebra.

    ``matrix[i][j] = delta_ij - #arrows(i -> j) + relations(i -> j)`` indexed
    in sorted vertex order, so that ``<d, e> = d^T E e`` counts homomorphisms
    minus extensions (minus relation corrections) for generic representations.
    Instances are immutable and safe to share across threads.
    """

    def __init__(self, source):
        if isinstance(source, Quiver):
            quiver = source
            relations = {}
        elif isinstance(source, BoundQuiver):
            quiver = source.quiver
            relations = dict(source.relation_counts)
        else:
            raise InputError("expected a Quiver or BoundQuiver")
        self.quiver = quiver
        self.relation_counts = relations
        self.order = quiver.order
        idx = {v: i for i, v in enumerate(self.order)}
        self.index = idx
        n = len(self.order)
        m = [[int(i == j) for j in range(n)] for i in range(n)]
        for _, t, h in quiver.arrows:
            m[idx[t]][idx[h]] -= 1
        for (i, j), r in relations.items():
            m[idx[i]][idx[j]] += r
        self.matrix = tuple(tuple(row) for row in m)
        self.n = n
        self.key = (self.order, self.matrix)

    def __eq__(self, other):
        return isinstance(other, EulerMatrix) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def is_path_algebra(self):
        return not any(self.relation_counts.values())

    def tup(self, vec):
        """Coerce a dict keyed by vertex id, or a sequence in sorted vertex
        order, to an internal tuple."""
        if isinstance(vec, dict):
            unknown = set(vec) - set(self.order)
            if unknown:
                raise InputError(f"unknown vertex ids: {sorted(unknown)}")
            return tuple(int(vec.get(v, 0)) for v in self.order)
        t = tuple(int(x) for x in vec)
        if len(t) != self.n:
            raise InputError(
                f"vector length {len(t)} does not match {self.n} vertices"
            )
        return t

    def as_dict(self, vec):
        return {v: x for v, x in zip(self.order, self.tup(vec))}

    def euler(self, d, e):
        d = self.tup(d)
        e = self.tup(e)
        return sum(
            d[i] * self.matrix[i][j] * e[j]
            for i in range(self.n)
            for j in range(self.n)
        )

    def tits(self, d):
        return self.euler(d, d)

    def weight_left(self, d):
        """The weight <d, -> as a tuple in sorted vertex order."""
        return linalg.vecmat(self.tup(d), self.matrix)

    def weight_right(self, d):
        """The weight <-, d> as a tuple in sorted vertex order."""
        return linalg.matvec(self.matrix, self.tup(d))

    def theta(self, d):
        """Canonical weight <d, -> - <-, d> attached to d."""
        left = self.weight_left(d)
        right = self.weight_right(d)
        return tuple(a - b for a, b in zip(left, right))

    def pair_weight(self, theta, d):
        theta = tuple(int(x) for x in theta)
        if len(theta) != self.n:
            raise InputError("weight length mismatch")
        return sum(t * x for t, x in zip(theta, self.tup(d)))

    def symmetrized(self):
        return tuple(
            tuple(self.matrix[i][j] + self.matrix[j][i] for j in range(self.n))
            for i in range(self.n)
        )

    def coxeter(self):
        """The Coxeter matrix Phi with <d, e> = -<e, Phi d> for all d, e."""
        inv = linalg.int_inverse(self.matrix)
        prod = linalg.matmul(inv, linalg.transpose(self.matrix))
        return tuple(tuple(-x for x in row) for row in prod)

    def solve_weight_left(self, theta):
        """The unique rational vector x with <x, -> = theta, as Fractions."""
        from fractions import Fraction

        theta = tuple(Fraction(x) for x in theta)
        inv = linalg.inverse(self.matrix)
        # x^T E = theta  <=>  x = E^(-T) theta
        return linalg.matvec(linalg.transpose(inv), theta)


# ---------------------------------------------------------------------------
# Representation type


@dataclass(frozen=True)
class Classification:
    type: str  # "finite" | "tame_infinite" | "wild"
    diagram: str | None


def _tree_code(adj, root, parent):
    children = sorted(
        _tree_code(adj, w, root) for w in adj[root] for _ in range(adj[root][w]) if w != parent
    )
    return "(" + "".join(children) + ")"


def _tree_centers(adj):
    degree = {v: sum(adj[v].values()) for v in adj}
    leaves = [v for v in adj if degree[v] <= 1]
    remaining = len(adj)
    while remaining > 2:
        new_leaves = []
        for leaf in leaves:
            for w in adj[leaf]:
                degree[w] -= adj[leaf][w]
                if degree[w] == 1:
                    new_leaves.append(w)
            degree[leaf] = 0
        remaining -= len(leaves)
        leaves = new_leaves
    return leaves


def _canonical_tree_code(edges, vertices):
    adj = {v: {} for v in vertices}
    for a, b in edges:
        adj[a][b] = adj[a].get(b, 0) + 1
        adj[b][a] = adj[b].get(a, 0) + 1
    centers = _tree_centers(adj)
    return min(_tree_code(adj, c, None) for c in centers)


def _star_edges(arm_lengths):
    """Tree made of paths of the given lengths glued at a common center."""
    edges = []
    for i, length in enumerate(arm_lengths):
        prev = "c"
        for j in range(length):
            node = f"{i}.{j}"
            edges.append((prev, node))
            prev = node
    vertices = {a for e in edges for a in e} | {"c"}
    return edges, vertices


def _dn_tilde_edges(n):
    """Extended D_n: central path with two extra leaves at each end."""
    path = [f"p{i}" for i in range(n - 3)]
    edges = []
    for a, b in zip(path, path[1:]):
        edges.append((a, b))
    edges += [("l1", path[0]), ("l2", path[0]), ("r1", path[-1]), ("r2", path[-1])]
    vertices = {a for e in edges for a in e}
    return edges, vertices


_FINITE_STARS = {
    "E6": (1, 2, 2),
    "E7": (1, 2, 3),
    "E8": (1, 2, 4),
}

_EXTENDED_STARS = {"E~6": (2, 2, 2), "E~7": (1, 3, 3), "E~8": (1, 2, 5)}


def _classify_tree(edges, vertices):
    """Name a tree as Dynkin or extended Dynkin, or return None."""
    code = _canonical_tree_code(edges, vertices)
    n = len(vertices)
    candidates = []
    candidates.append((f"A{n}", "finite", _star_edges([n - 1])))
    if n >= 4:
        candidates.append((f"D{n}", "finite", _star_edges([1, 1, n - 3])))
    if n in (6, 7, 8):
        candidates.append((f"E{n}", "finite", _star_edges(_FINITE_STARS[f"E{n}"])))
    if n >= 5:
        candidates.append((f"D~{n - 1}", "tame_infinite", _dn_tilde_edges(n - 1)))
    for name, arms in _EXTENDED_STARS.items():
        if n == sum(arms) + 1:
            candidates.append((name, "tame_infinite", _star_edges(arms)))
    for name, kind, (cedges, cverts) in candidates:
        if len(cverts) == n and _canonical_tree_code(cedges, cverts) == code:
            return kind, name
    return None


def _classify_component(quiver, comp):
    verts = sorted(comp)
    edges = [(t, h) for _, t, h in quiver.arrows if t in comp]
    nedges = len(edges)
    n = len(verts)
    loops = sum(1 for t, h in edges if t == h)
    if nedges == n - 1 and not loops:
        named = _classify_tree(edges, verts)
        if named:
            return named
        return "wild", None
    if nedges == n:
        degree = {v: 0 for v in verts}
        for t, h in edges:
            degree[t] += 1
            degree[h] += 1
        if all(degree[v] == 2 for v in verts):
            return "tame_infinite", f"A~{n - 1}" if n > 1 else "A~0"
        return "wild", None
    return "wild", None


def classify_path_algebra(quiver):
    """Representation type of the path algebra, with the diagram name.

    The verdict comes from recognizing the underlying graph against the
    Dynkin and extended Dynkin catalogues, and is cross-checked against the
    definiteness of the symmetrized Tits form; a disagreement raises an
    internal error.
    """
    if not quiver.is_connected():
        raise PreconditionError("classification requires a connected quiver")
    if not quiver.is_acyclic():
        raise PreconditionError("classification requires an acyclic quiver")
    kind, name = _classify_component(quiver, set(quiver.vertices))
    verdict = Classification(kind, name)

    euler = EulerMatrix(quiver)
    signature, corank = linalg.symmetric_signature(euler.symmetrized())
    expected_tame = 1 if kind == "tame_infinite" else 0
    if verdict.type == "finite" and signature != "positive_definite":
        raise InvariantError("Dynkin recognition disagrees with the Tits form")
    if verdict.type == "tame_infinite" and (
        signature != "positive_semidefinite" or corank != expected_tame
    ):
        raise InvariantError("Euclidean recognition disagrees with the Tits form")
    if verdict.type == "wild" and signature in (
        "positive_definite",
        "positive_semidefinite",
    ):
        raise InvariantError("wild verdict contradicts a nonnegative Tits form")
    return verdict


def null_root(quiver):
    """The minimal positive radical vector of a connected Euclidean quiver."""
    if not quiver.is_connected():
        raise PreconditionError("null root requires a connected quiver")
    if classify_path_algebra(quiver).type != "tame_infinite":
        raise PreconditionError("null root exists only for Euclidean quivers")
    euler = EulerMatrix(quiver)
    basis = linalg.kernel_basis(euler.symmetrized())
    if len(basis) != 1:
        raise InvariantError("Euclidean radical is not one dimensional")
    vec = basis[0]
    if all(x <= 0 for x in vec):
        vec = tuple(-x for x in vec)
    if any(x <= 0 for x in vec):
        raise InvariantError("null root is not strictly positive")
    return vec


# ---------------------------------------------------------------------------
# Catalogue quivers


def kronecker_quiver(k):
    """The k-arrow Kronecker quiver v1 => v2."""
    if k < 1:
        raise InputError("need at least one arrow")
    arrows = tuple((f"a{i}", "v1", "v2") for i in range(1, k + 1))
    return Quiver(("v1", "v2"), arrows, name=f"K{k}")


def _tree_quiver(edges, name):
    """Orient tree edges parent -> child as listed."""
    vertices = []
    for t, h in edges:
        for v in (t, h):
            if v not in vertices:
                vertices.append(v)
    arrows = tuple((f"a{i}", t, h) for i, (t, h) in enumerate(edges, start=1))
    return Quiver(tuple(vertices), arrows, name=name)


def dynkin_quiver(name):
    """A fixed acyclic orientation of a Dynkin diagram, e.g. ``A3``, ``D4``."""
    kind, num = name[0], name[1:]
    n = int(num)
    if kind == "A" and n >= 1:
        edges = [(f"v{i}", f"v{i + 1}") for i in range(1, n)]
        if n == 1:
            return Quiver(("v1",), (), name="A1")
    elif kind == "D" and n >= 4:
        edges = [(f"v{i}", f"v{i + 1}") for i in range(1, n - 1)]
        edges.append((f"v{n - 2}", f"v{n}"))
    elif kind == "E" and n in (6, 7, 8):
        edges = [(f"v{i}", f"v{i + 1}") for i in range(1, n - 1)]
        edges.append((f"v{n - 3}", f"v{n}"))
    else:
        raise InputError(f"unknown Dynkin diagram {name!r}")
    return _tree_quiver(edges, name)


def euclidean_quiver(name):
    """A fixed acyclic orientation of an extended Dynkin diagram.

    ``A~1`` is the Kronecker quiver; ``A~n`` is oriented with one source and
    one sink; trees are oriented away from the branch.
    """
    kind = name[0]
    n = int(name[2:])
    if kind == "A" and n >= 1:
        if n == 1:
            return kronecker_quiver(2)
        edges = [(f"v{i}", f"v{i + 1}") for i in range(1, n + 1)]
        edges.append(("v1", f"v{n + 1}"))
    elif kind == "D" and n >= 4:
        center = [f"c{i}" for i in range(1, n - 2)]
        edges = list(zip(center, center[1:]))
        edges += [("l1", center[0]), ("l2", center[0])]
        edges += [(center[-1], "r1"), (center[-1], "r2")]
    elif kind == "E" and n in (6, 7, 8):
        arms = _EXTENDED_STARS[f"E~{n}"]
        edges = []
        for i, length in enumerate(arms, start=1):
            prev = "c"
            for j in range(1, length + 1):
                node = f"w{i}{j}"
                edges.append((prev, node))
                prev = node
    else:
        raise InputError(f"unknown extended Dynkin diagram {name!r}")
    return _tree_quiver(edges, name)


# ---------------------------------------------------------------------------
# Text format


def parse_quiver(text):
    """Parse the plain text quiver format.

    Lines (``#`` starts a comment)::

        quiver
        vertices: 1 2 3
        arrow a: 1 -> 2

    Vertex declarations may be split over several ``vertices:`` lines.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0] != "quiver":
        raise InputError("quiver text must start with a 'quiver' line")
    vertices = []
    arrows = []
    for line in lines[1:]:
        if line.startswith("vertices:"):
            for v in line[len("vertices:"):].split():
                if v in vertices:
                    raise InputError(f"duplicate vertex id {v!r}")
                vertices.append(v)
        elif line.startswith("arrow "):
            body = line[len("arrow "):]
            if ":" not in body:
                raise InputError(f"malformed arrow line {line!r}")
            aid, rest = body.split(":", 1)
            aid = aid.strip()
            if "->" not in rest:
                raise InputError(f"malformed arrow line {line!r}")
            tail, head = (part.strip() for part in rest.split("->", 1))
            if not aid or not tail or not head:
                raise InputError(f"malformed arrow line {line!r}")
            arrows.append((aid, tail, head))
        else:
            raise InputError(f"unrecognized line {line!r}")
    return Quiver(tuple(vertices), tuple(arrows))


def format_quiver(quiver):
    """Inverse of :func:`parse_quiver` (canonical sorted order)."""
    out = ["quiver", "vertices: " + " ".join(quiver.order)]
    for aid, t, h in sorted(quiver.arrows):
        out.append(f"arrow {aid}: {t} -> {h}")
    return "\n".join(out) + "\n"
