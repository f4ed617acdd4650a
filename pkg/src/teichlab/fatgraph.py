r"""
Cubic fatgraphs, faces, Whitehead moves and closed edge-paths.

A fatgraph is stored as vertex triples of half-edge identifiers, each triple
listed in counterclockwise order, together with a table of edges mapping an
edge label to the ordered pair of its half-edges. The first half-edge of an
edge fixes its reference direction (the edge points away from it).

Two permutations are derived from this data: ``sigma`` rotates to the next
half-edge at a vertex and ``iota`` swaps the two ends of an edge. Faces are
the cycles of ``h -> sigma(iota(h))``.

EXAMPLES::

    >>> from teichlab.fatgraph import torus_spine
    >>> G = torus_spine()
    >>> G.num_vertices(), G.num_edges(), G.num_faces(), G.genus()
    (2, 3, 1, 1)
"""
import re
from collections import deque
from dataclasses import dataclass
from math import gcd

RIGHT = "R"
LEFT = "L"


class FatGraphError(ValueError):
    """``where`` names the offending token and the line kind (``"v"`` or ``"e"``)."""

    def __init__(self, msg, where=None):
        super().__init__(msg)
        self.where = where


class NotFlippable(FatGraphError):
    pass


class NotConstructible(FatGraphError):
    pass


class FatGraph:
    r"""
    Cubic fatgraph.

    INPUT:

    - ``vertices`` -- iterable of triples of half-edge ids (ccw order)
    - ``edges`` -- mapping ``label -> (h1, h2)``; ``h1`` is the reference end

    EXAMPLES::

        >>> G = FatGraph([("x0", "z0", "y0"), ("x1", "z1", "y1")],
        ...              {"X": ("x0", "x1"), "Y": ("y0", "y1"), "Z": ("z0", "z1")})
        >>> G.genus()
        1
        >>> FatGraph([("a", "b", "c")], {"E": ("a", "b")})
        Traceback (most recent call last):
        ...
        teichlab.fatgraph.FatGraphError: half-edge 'c' is not on any edge
    """

    def __init__(self, vertices, edges):
        self.vertices = tuple(tuple(v) for v in vertices)
        self.edges = {lab: tuple(pair) for lab, pair in dict(edges).items()}
        self._check()
        self.sigma = {}
        self.vertex_of = {}
        for i, v in enumerate(self.vertices):
            for k in range(3):
                self.sigma[v[k]] = v[(k + 1) % 3]
                self.vertex_of[v[k]] = i
        self.sigma_inv = {b: a for a, b in self.sigma.items()}
        self.iota = {}
        self.edge_of = {}
        for lab, (h1, h2) in self.edges.items():
            self.iota[h1] = h2
            self.iota[h2] = h1
            self.edge_of[h1] = lab
            self.edge_of[h2] = lab
        if not self._connected():
            raise FatGraphError("graph is not connected")
        if (2 - self.num_vertices() + self.num_edges() - self.num_faces()) % 2:
            raise FatGraphError("Euler relation gives a non-integral genus")

    def _check(self):
        seen = set()
        for v in self.vertices:
            if len(v) != 3:
                raise FatGraphError("vertex %r is not trivalent" % (v,), (v[0] if v else None, "v"))
            for h in v:
                if h in seen:
                    raise FatGraphError("half-edge %r appears twice in vertices" % (h,), (h, "v"))
                seen.add(h)
        on_edge = set()
        for lab, pair in self.edges.items():
            if len(pair) != 2:
                raise FatGraphError("edge %r must have two half-edges" % (lab,), (lab, "e"))
            for h in pair:
                if h in on_edge:
                    raise FatGraphError("half-edge %r lies on two edges" % (h,), (h, "e"))
                if h not in seen:
                    raise FatGraphError("half-edge %r is not at any vertex" % (h,), (h, "e"))
                on_edge.add(h)
        for h in seen - on_edge:
            raise FatGraphError("half-edge %r is not on any edge" % (h,), (h, "v"))

    def _connected(self):
        if not self.vertices:
            return False
        start = self.vertices[0][0]
        seen = {start}
        todo = [start]
        while todo:
            h = todo.pop()
            for k in (self.sigma[h], self.iota[h]):
                if k not in seen:
                    seen.add(k)
                    todo.append(k)
        return len(seen) == 2 * len(self.edges)

    # basic counts

    def half_edges(self):
        return [h for v in self.vertices for h in v]

    def edge_labels(self):
        return list(self.edges)

    def num_vertices(self):
        return len(self.vertices)

    def num_edges(self):
        return len(self.edges)

    def num_faces(self):
        return len(self.faces())

    def euler_characteristic(self):
        return self.num_vertices() - self.num_edges()

    def genus(self):
        return (2 - self.num_vertices() + self.num_edges() - self.num_faces()) // 2

    def is_reference(self, h):
        """Whether ``h`` is the first half-edge of its edge."""
        return self.edges[self.edge_of[h]][0] == h

    def face_step(self, h):
        return self.sigma[self.iota[h]]

    def faces(self):
        r"""
        Boundary cycles of the thickened graph.

        EXAMPLES::

            >>> from teichlab.fatgraph import torus_spine
            >>> [f.edges for f in torus_spine().faces()]
            [('X', 'Z', 'Y', 'X', 'Z', 'Y')]
        """
        seen = set()
        out = []
        for h in self.half_edges():
            if h in seen:
                continue
            cyc = []
            k = h
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self.face_step(k)
            out.append(Face(tuple(cyc), tuple(self.edge_of[x] for x in cyc)))
        return out

    def face_vectors(self):
        """Edge multiplicities of every face, in ``edge_labels()`` order."""
        labels = self.edge_labels()
        idx = {lab: i for i, lab in enumerate(labels)}
        vecs = []
        for f in self.faces():
            v = [0] * len(labels)
            for lab in f.edges:
                v[idx[lab]] += 1
            vecs.append(v)
        return vecs

    # moves

    def is_flippable(self, label):
        h1, h2 = self.edges[label]
        return self.vertex_of[h1] != self.vertex_of[h2]

    def flip_neighbors(self, label):
        r"""
        Half-edges around ``label`` in the slots used by the flip formula.

        Returns a dict with keys ``A, B, C, D`` mapping to half-edges. With
        ``h1, h2`` the ends of the edge, ``A`` and ``B`` sit at the vertex of
        ``h1`` (``B`` follows ``h1`` counterclockwise, ``A`` precedes it) and
        ``C``, ``D`` sit likewise at the vertex of ``h2``.
        """
        if not self.is_flippable(label):
            raise NotFlippable("edge %r is a loop and is not flippable" % (label,))
        h1, h2 = self.edges[label]
        s = self.sigma
        return {"A": s[s[h1]], "B": s[h1], "C": s[s[h2]], "D": s[h2]}

    def whitehead(self, label):
        r"""
        Contract ``label`` and expand it the other way.

        The half-edge ids and edge labels are preserved.

        EXAMPLES::

            >>> from teichlab.fatgraph import torus_spine
            >>> G = torus_spine()
            >>> G.whitehead("Z").is_isomorphic(G)
            True
            >>> G.whitehead("Z").whitehead("Z").is_isomorphic(G, labels=True)
            True
        """
        nb = self.flip_neighbors(label)
        h1, h2 = self.edges[label]
        a, b, c, d = nb["B"], nb["A"], nb["D"], nb["C"]
        u = self.vertex_of[h1]
        w = self.vertex_of[h2]
        verts = [v for i, v in enumerate(self.vertices) if i not in (u, w)]
        verts += [(h1, b, c), (h2, d, a)]
        return FatGraph(verts, self.edges)

    # isomorphism

    def _encoding(self, start, labels):
        num = {start: 0}
        order = [start]
        q = deque([start])
        while q:
            h = q.popleft()
            for k in (self.sigma[h], self.iota[h]):
                if k not in num:
                    num[k] = len(order)
                    order.append(k)
                    q.append(k)
        enc = []
        for h in order:
            row = (num[self.sigma[h]], num[self.iota[h]])
            if labels:
                row += (str(self.edge_of[h]),)
            enc.append(row)
        return tuple(enc)

    def canonical_form(self, labels=False):
        r"""
        Minimal breadth-first encoding over all starting half-edges.

        Two graphs are isomorphic (orientation preserving, and respecting edge
        labels when ``labels`` is set) iff their canonical forms agree.
        """
        return min(self._encoding(h, labels) for h in self.half_edges())

    def is_isomorphic(self, other, labels=False):
        if (self.num_edges(), self.num_vertices()) != (other.num_edges(), other.num_vertices()):
            return False
        return self.canonical_form(labels) == other.canonical_form(labels)

    # serialization

    def to_text(self):
        r"""
        Serialize in the ``fatgraph v1`` line format.

        EXAMPLES::

            >>> from teichlab.fatgraph import torus_spine
            >>> print(torus_spine().to_text())
            fatgraph v1
            v x0 z0 y0
            v x1 z1 y1
            e X x0 x1
            e Y y0 y1
            e Z z0 z1
        """
        lines = ["fatgraph v1"]
        lines += ["v %s %s %s" % v for v in self.vertices]
        lines += ["e %s %s %s" % (lab, h1, h2) for lab, (h1, h2) in self.edges.items()]
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text):
        r"""
        Parse the ``fatgraph v1`` line format.

        Errors carry the offending line and column.
        """
        lines = text.splitlines()
        if not lines or lines[0].strip() != "fatgraph v1":
            raise FatGraphError("line 1, column 1: expected header 'fatgraph v1'")
        verts = []
        edges = {}
        pos = {}
        for n, line in enumerate(lines[1:], start=2):
            toks = line.split()
            if not toks or toks[0].startswith("#"):
                continue
            if toks[0] in ("v", "e") and len(toks) == 4:
                cols = [m.start() + 1 for m in re.finditer(r"\S+", line)]
                for t, c in zip(toks[1:], cols[1:]):
                    pos[(t, toks[0])] = (n, c)
            if toks[0] == "v" and len(toks) == 4:
                verts.append(tuple(toks[1:]))
            elif toks[0] == "e" and len(toks) == 4:
                if toks[1] in edges:
                    raise FatGraphError("line %d, column %d: duplicate edge label %r"
                                        % (n, cols[1], toks[1]))
                edges[toks[1]] = (toks[2], toks[3])
            else:
                col = line.index(toks[0]) + 1
                raise FatGraphError("line %d, column %d: cannot parse %r" % (n, col, line.strip()))
        try:
            return cls(verts, edges)
        except FatGraphError as e:
            n, c = pos.get(e.where, (len(lines), 1))
            raise FatGraphError("line %d, column %d: %s" % (n, c, e)) from None

    def __eq__(self, other):
        return (isinstance(other, FatGraph) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(self.edges.items()))))

    def __repr__(self):
        return "FatGraph(v=%d, e=%d, f=%d, g=%d)" % (
            self.num_vertices(), self.num_edges(), self.num_faces(), self.genus())


@dataclass(frozen=True)
class Face:
    """A boundary cycle: its half-edges and the edge labels they lie on."""
    half_edges: tuple
    edges: tuple

    def multiplicity(self, label):
        return self.edges.count(label)


def torus_spine():
    r"""
    The cubic spine of the once-punctured torus.

    Vertex ``u`` carries ``(x0, z0, y0)`` and vertex ``v`` carries
    ``(x1, z1, y1)``, both counterclockwise.
    """
    return FatGraph([("x0", "z0", "y0"), ("x1", "z1", "y1")],
                    {"X": ("x0", "x1"), "Y": ("y0", "y1"), "Z": ("z0", "z1")})


def build_standard_spine(genus, holes):
    r"""
    Spine of a genus ``genus`` surface with ``holes`` boundary components.

    ``(1, 1)`` gives the torus spine. Otherwise ``genus`` handle blocks and
    ``holes - 1`` hole blocks hang off a line tree, handles first. A handle
    block has edges ``A_i`` (its stalk), ``B_i, C_i, D_i, E_i``; a hole block
    has stalk ``M_j`` and loop ``N_j``; line edges are ``X_i``.

    EXAMPLES::

        >>> G = build_standard_spine(2, 1)
        >>> G.num_vertices(), G.num_edges(), G.num_faces(), G.genus()
        (6, 9, 1, 2)
        >>> build_standard_spine(0, 3).num_faces()
        3
        >>> build_standard_spine(0, 1)
        Traceback (most recent call last):
        ...
        teichlab.fatgraph.NotConstructible: (genus, holes) = (0, 1) is not constructible in this family
    """
    if (not isinstance(genus, int) or not isinstance(holes, int) or genus < 0 or holes < 1
            or 2 * genus + 2 * holes <= 2 or (genus, holes) in ((0, 2),)):
        raise NotConstructible("(genus, holes) = (%r, %r) is not constructible in this family"
                               % (genus, holes))
    if (genus, holes) == (1, 1):
        return torus_spine()
    verts = []
    edges = {}
    stalks = []

    def edge(lab):
        edges[lab] = (lab + ".0", lab + ".1")
        return lab + ".0", lab + ".1"

    for i in range(1, genus + 1):
        a0, a1 = edge("A%d" % i)
        b0, b1 = edge("B%d" % i)
        c0, c1 = edge("C%d" % i)
        d0, d1 = edge("D%d" % i)
        e0, e1 = edge("E%d" % i)
        verts += [(a0, c0, b0), (b1, e0, d0), (c1, e1, d1)]
        stalks.append(a1)
    for j in range(1, holes):
        m0, m1 = edge("M%d" % j)
        n0, n1 = edge("N%d" % j)
        verts.append((m0, n0, n1))
        stalks.append(m1)
    k = len(stalks)
    if k == 2:
        # fuse the two stalks into a single edge
        lab0 = stalks[0].rsplit(".", 1)[0]
        lab1 = stalks[1].rsplit(".", 1)[0]
        edges[lab0] = (edges[lab0][0], edges[lab1][0])
        del edges[lab1]
        return FatGraph(verts, edges)
    xs = [edge("X%d" % i) for i in range(1, k - 2)]
    for i in range(k - 2):
        left = stalks[0] if i == 0 else xs[i - 1][1]
        right = stalks[k - 1] if i == k - 3 else xs[i][0]
        verts.append((left, stalks[i + 1], right))
    return FatGraph(verts, edges)


def transport_path(g, label, path):
    r"""
    The path on ``g.whitehead(label)`` homotopic to ``path`` on ``g``.

    Traversals of ``label`` are dropped and then reinserted wherever the
    arrival and departure half-edges no longer share a vertex.

    EXAMPLES::

        >>> G = torus_spine()
        >>> transport_path(G, "Z", EdgePath(("z0", "y1"))).half_edges
        ('y1', 'z1')
    """
    h1, h2 = g.edges[label]
    g2 = g.whitehead(label)
    hs = [h for h in path.half_edges if h not in (h1, h2)]
    if not hs:
        raise FatGraphError("path runs only along the flipped edge")
    out = []
    n = len(hs)
    for i, h in enumerate(hs):
        out.append(h)
        arr = g2.iota[h]
        nxt = hs[(i + 1) % n]
        if g2.vertex_of[arr] != g2.vertex_of[nxt]:
            out.append(h1 if g2.vertex_of[arr] == g2.vertex_of[h1] else h2)
    return EdgePath(tuple(out))


def random_closed_path(g, rng, steps):
    r"""
    A random closed path with no turning back: ``steps`` random turns from a
    random start, closed up by a shortest continuation.
    """
    hs = g.half_edges()
    start = hs[rng.integers(len(hs))]
    path = [start]
    for _ in range(steps - 1):
        arr = g.iota[path[-1]]
        path.append(g.sigma[arr] if rng.random() < 0.5 else g.sigma_inv[arr])
    # shortest non-backtracking continuation from the last step back to start
    prev = {path[-1]: None}
    q = deque([path[-1]])
    found = None
    while q and found is None:
        h = q.popleft()
        arr = g.iota[h]
        for nxt in (g.sigma[arr], g.sigma_inv[arr]):
            if nxt == start:
                found = h
                break
            if nxt not in prev:
                prev[nxt] = h
                q.append(nxt)
    tail = []
    h = found
    while h != path[-1]:
        tail.append(h)
        h = prev[h]
    return EdgePath(tuple(path + tail[::-1]))


@dataclass(frozen=True)
class EdgePath:
    r"""
    Closed edge-path given by its outgoing half-edges, basepoint first.

    Step ``i`` leaves through ``half_edges[i]``; the turn after it is read
    off from where ``half_edges[i+1]`` sits at the arrival vertex.
    """
    half_edges: tuple

    def __len__(self):
        return len(self.half_edges)

    def __add__(self, other):
        return EdgePath(self.half_edges + other.half_edges)

    def rotate(self, k):
        k %= max(len(self), 1)
        return EdgePath(self.half_edges[k:] + self.half_edges[:k])


def path_turns(g, path):
    r"""
    Turn after each step of ``path``; raises if the path is not closed,
    turns back, or leaves the graph.

    EXAMPLES::

        >>> G = torus_spine()
        >>> path_turns(G, EdgePath(("z0", "y1")))
        ['R', 'L']
    """
    hs = path.half_edges
    n = len(hs)
    out = []
    for i, h in enumerate(hs):
        if h not in g.iota:
            raise FatGraphError("half-edge %r is not in the graph" % (h,))
        arr = g.iota[h]
        nxt = hs[(i + 1) % n]
        if g.sigma[arr] == nxt:
            out.append(RIGHT)
        elif g.sigma_inv[arr] == nxt:
            out.append(LEFT)
        elif nxt == arr:
            raise FatGraphError("path turns back at step %d" % i)
        else:
            raise FatGraphError("steps %d and %d are not incident" % (i, (i + 1) % n))
    return out


def path_steps(g, path):
    """The ``(edge label, turn)`` sequence of a path."""
    return list(zip((g.edge_of[h] for h in path.half_edges), path_turns(g, path)))


def path_from_steps(g, steps):
    r"""
    Rebuild a path from ``(label, turn)`` pairs.

    The direction of the first edge is the one consistent with the whole
    sequence; the reference direction wins when both are.

    EXAMPLES::

        >>> G = torus_spine()
        >>> path_from_steps(G, [("Z", "R"), ("Y", "L")]).half_edges
        ('z0', 'y1')
    """
    steps = [(lab, t) for lab, t in steps]
    if not steps:
        return EdgePath(())
    for h in g.edges[steps[0][0]]:
        hs = [h]
        ok = True
        for i, (lab, t) in enumerate(steps):
            arr = g.iota[hs[-1]]
            if t == RIGHT:
                nxt = g.sigma[arr]
            elif t == LEFT:
                nxt = g.sigma_inv[arr]
            else:
                raise FatGraphError("turn must be 'L' or 'R', got %r" % (t,))
            if g.edge_of[hs[-1]] != lab:
                ok = False
                break
            if i == len(steps) - 1:
                ok = nxt == hs[0]
            else:
                hs.append(nxt)
        if ok:
            return EdgePath(tuple(hs))
    raise FatGraphError("steps do not form a closed path on this graph")


def face_path(g, face):
    """The all-right-turn path running around ``face``."""
    return EdgePath(face.half_edges)


def graph_length(path, weights=None, g=None):
    r"""
    Weighted number of edges traversed.

    ``weights`` maps edge labels to positive reals; unit weights by default.

    EXAMPLES::

        >>> G = torus_spine()
        >>> graph_length(slope_path(3, 2), g=G)
        10
        >>> graph_length(slope_path(3, 2), {"X": 1.0, "Y": 2.0, "Z": 0.5}, g=G)
        9.5
    """
    if g is None:
        g = torus_spine()
    if weights is None:
        return len(path)
    for lab, w in weights.items():
        if not w > 0:
            raise ValueError("weight of %r must be positive" % (lab,))
    return sum(weights[g.edge_of[h]] for h in path.half_edges)


# torus words

# blocks start at z0, so any concatenation is a closed path
TORUS_BLOCKS = {"a": ("z0", "y1"), "b": ("z0", "x1")}


def torus_word_path(word):
    r"""
    Path of a word in the blocks ``a`` (the ``G_X`` block) and ``b`` (the
    ``G_Y`` block), written in matrix-product order: the rightmost block is
    traversed first.

    EXAMPLES::

        >>> torus_word_path("ab").half_edges
        ('z0', 'x1', 'z0', 'y1')
    """
    hs = ()
    for ch in reversed(word):
        try:
            hs += TORUS_BLOCKS[ch]
        except KeyError:
            raise FatGraphError("torus word letters are 'a' and 'b', got %r" % (ch,))
    return EdgePath(hs)


def tilde_word(w):
    r"""
    Swap the first two blocks met by the path, which are the last two
    letters of the matrix-product word.

    EXAMPLES::

        >>> tilde_word("abaab")
        'ababa'
    """
    return w[:-2] + w[-1] + w[-2] if len(w) > 1 else w


def cf_word(cf, x="a", y="b"):
    r"""
    The word ``L_n`` built from partial quotients ``cf = [a_1, ..., a_n]``.

    ``L_1 = x^{a_1} y``, ``tilde L_0 = x`` and for ``i >= 1``::

        L_{2i}   = L_{2i-1}^{a_{2i}-1} tilde L_{2i-2} L_{2i-1}
        L_{2i+1} = tilde L_{2i}^{a_{2i+1}-1} L_{2i-1} L_{2i}

    where tilde swaps the first two letters in path order, i.e. the last
    two of the matrix-product word. Returns the list ``[L_1, ..., L_n]``;
    each word is in matrix-product order.

    EXAMPLES::

        >>> cf_word([2, 3])
        ['aab', 'aabaabaaab']
        >>> cf_word([1, 1, 1])
        ['ab', 'aab', 'abaab']
    """
    if any(int(a) < 1 for a in cf):
        raise ValueError("partial quotients must be positive")
    words = []
    tilde = tilde_word
    prev_tilde0 = x
    for i, a in enumerate(cf, start=1):
        if i == 1:
            w = x * a + y
        elif i == 2:
            w = words[-1] * (a - 1) + prev_tilde0 + words[-1]
        elif i % 2 == 0:
            w = words[-1] * (a - 1) + tilde(words[-2]) + words[-1]
        else:
            w = tilde(words[-1]) * (a - 1) + words[-2] + words[-1]
        words.append(w)
    return words


def letter_counts(word):
    return word.count("a"), word.count("b")


def slope_path(m1, m2):
    r"""
    Closed path on the torus spine for the multicurve ``(m1, m2, m1 + m2)``.

    ``m1`` counts traversals of edge ``X`` (the number of ``G_Y`` blocks)
    and ``m2`` those of edge ``Y`` (the number of ``G_X`` blocks).

    EXAMPLES::

        >>> slope_path(1, 0).half_edges
        ('z0', 'x1')
        >>> w = slope_word(7, 3); (w.count("b"), w.count("a"))
        (7, 3)
        >>> slope_path(2, 4)
        Traceback (most recent call last):
        ...
        ValueError: (2, 4) is not coprime; reduce to (1, 2) first
    """
    return torus_word_path(slope_word(m1, m2))


def slope_word(m1, m2):
    """Block word of ``slope_path`` in matrix-product order."""
    m1, m2 = int(m1), int(m2)
    if m1 < 0 or m2 < 0 or (m1, m2) == (0, 0):
        raise ValueError("(m1, m2) must be nonnegative and not both zero")
    d = gcd(m1, m2)
    if d != 1:
        raise ValueError("(%d, %d) is not coprime; reduce to (%d, %d) first"
                         % (m1, m2, m1 // d, m2 // d))
    if m2 == 0:
        return "b"
    if m1 == 0:
        return "a"
    if m1 < m2:
        return cf_word(_partial_quotients(m2, m1), "a", "b")[-1]
    return cf_word(_partial_quotients(m1, m2), "b", "a")[-1]


def _partial_quotients(p, q):
    out = []
    while q:
        out.append(p // q)
        p, q = q, p % q
    return out
