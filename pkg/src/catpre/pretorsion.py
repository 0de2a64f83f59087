"""Prekernels, precokernels and short preexact sequences in Cat.

The precokernel of ``F: A -> A'`` is the free category on the graph whose
nodes are the classes of the equivalence generated by ``F`` on ``obj(A')`` and
whose edges are all morphisms of ``A'``, divided by the least congruence that
turns the projection ``A' -> quotient`` into a functor.  It is represented by
presentation: morphisms are path words reduced to normal form by two rules,

    R1  delete a letter that is an identity of A'
    R2  replace adjacent letters f, g with the single letter g o f whenever
        cod(f) = dom(g) in A'

Both rules shorten the word, so reduction terminates; overlaps resolve by
the associativity and identity laws of A', so normal forms are unique.

Words are diagrammatic: letters run from source to target.
"""

import graphlib
import random
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from catpre.core import (
    FiniteCategory,
    Functor,
    inclusion,
    is_symmetric,
    wide_subcategory,
)
from catpre.errors import (
    InfinitePresentation,
    InternalAssertionFailure,
    MalformedWord,
    NotComposable,
    UnknownNode,
)


@dataclass(frozen=True)
class ZetaPartition:
    ground: Tuple[str, ...]
    blocks: Tuple[Tuple[str, ...], ...]
    class_of: Mapping[str, str] = field(compare=False)

    __hash__ = None

    def representatives(self):
        return tuple(b[0] for b in self.blocks)

    def block(self, rep):
        for b in self.blocks:
            if b[0] == rep:
                return b
        raise UnknownNode(rep)

    def related(self, x, y):
        return self.class_of[x] == self.class_of[y]


def _partition(ground, pairs) -> ZetaPartition:
    parent = {x: x for x in ground}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            # least identifier becomes the root, so roots are representatives
            if ry < rx:
                rx, ry = ry, rx
            parent[ry] = rx
    class_of = {x: find(x) for x in ground}
    blocks: Dict[str, List[str]] = {}
    for x in sorted(ground):
        blocks.setdefault(class_of[x], []).append(x)
    return ZetaPartition(
        tuple(ground),
        tuple(tuple(blocks[r]) for r in sorted(blocks)),
        class_of,
    )


def zeta(F) -> ZetaPartition:
    """Equivalence on the target objects generated by ``(F(A1), F(A2))`` for
    every source morphism ``A1 -> A2``; unreached objects stay singletons."""
    pairs = [(F.obj(d), F.obj(c)) for d, c in F.source.morphisms.values()]
    return _partition(F.target.objects, pairs)


@dataclass(frozen=True)
class QuotientGraph:
    partition: ZetaPartition
    nodes: Tuple[str, ...]
    edges: Mapping[str, Tuple[str, str]]
    edge_meta: Mapping[str, Tuple[str, str, bool]]

    __hash__ = None

    def non_identity_edges(self):
        return [e for e in sorted(self.edges) if not self.edge_meta[e][2]]


def quotient_graph(F, z: ZetaPartition) -> QuotientGraph:
    A = F.target
    edges = {f: (z.class_of[d], z.class_of[c]) for f, (d, c) in A.morphisms.items()}
    meta = {f: (d, c, A.is_identity(f)) for f, (d, c) in A.morphisms.items()}
    return QuotientGraph(z, z.representatives(), edges, meta)


@dataclass(frozen=True)
class PathWord:
    """A path in the quotient graph.  ``anchor`` is the start node; it is the
    whole story for the empty word."""

    anchor: str
    letters: Tuple[str, ...] = ()

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return f"ε[{self.anchor}]"
        return "<" + ", ".join(self.letters) + ">"


@dataclass(frozen=True)
class PresentedCategory:
    graph: QuotientGraph
    source: FiniteCategory
    name: str = field(default="Q", compare=False)

    __hash__ = None

    @property
    def nodes(self):
        return self.graph.nodes

    def node_of(self, obj):
        return self.graph.partition.class_of[obj]

    def _check_node(self, n):
        if n not in self.graph.partition.class_of or self.graph.partition.class_of[n] != n:
            raise UnknownNode(f"{n!r} is not a node of {self.name}")

    def word(self, *letters, anchor=None) -> PathWord:
        if letters:
            anchor = self.graph.edges[letters[0]][0]
        elif anchor is None:
            raise MalformedWord("the empty word needs an anchor node")
        w = PathWord(anchor, tuple(letters))
        check_word(self, w)
        return w

    def empty(self, node) -> PathWord:
        self._check_node(node)
        return PathWord(node)

    def dom(self, w: PathWord):
        return w.anchor

    def cod(self, w: PathWord):
        return self.graph.edges[w.letters[-1]][1] if w.letters else w.anchor

    def rules(self):
        """R1 instances (identity letters) and R2 instances ``((f, g), g o f)``
        over non-identity letters."""
        A = self.source
        r1 = sorted(i for i in A.morphisms if A.is_identity(i))
        r2 = sorted(
            ((f, g), h)
            for (g, f), h in A.composition.items()
            if not A.is_identity(f) and not A.is_identity(g)
        )
        return r1, r2


def check_word(Q: PresentedCategory, w: PathWord):
    edges = Q.graph.edges
    if w.anchor not in Q.nodes:
        raise MalformedWord(f"anchor {w.anchor!r} is not a node")
    here = w.anchor
    for i, e in enumerate(w.letters):
        if e not in edges:
            raise MalformedWord(f"letter {e!r} is not an edge")
        if edges[e][0] != here:
            raise MalformedWord(f"letter {i} ({e}) starts at [{edges[e][0]}], expected [{here}]")
        here = edges[e][1]


def reduce(Q: PresentedCategory, w: PathWord) -> PathWord:
    """Normal form of ``w``: left-to-right stack reduction under R1/R2."""
    check_word(Q, w)
    A = Q.source
    stack: List[str] = []
    for e in w.letters:
        if A.is_identity(e):
            continue
        while stack and A.cod(stack[-1]) == A.dom(e):
            e = A.compose(e, stack.pop())
            if A.is_identity(e):
                e = None
                break
        if e is not None:
            stack.append(e)
    return PathWord(w.anchor, tuple(stack))


def redexes(Q: PresentedCategory, w: PathWord):
    """All rule applications available in ``w`` as ``(rule, position)``."""
    A = Q.source
    out = [("R1", i) for i, e in enumerate(w.letters) if A.is_identity(e)]
    out += [
        ("R2", i)
        for i in range(len(w.letters) - 1)
        if A.cod(w.letters[i]) == A.dom(w.letters[i + 1])
    ]
    return out


def rewrite(Q: PresentedCategory, w: PathWord, redex) -> PathWord:
    rule, i = redex
    letters = list(w.letters)
    if rule == "R1":
        del letters[i]
    else:
        letters[i : i + 2] = [Q.source.compose(letters[i + 1], letters[i])]
    return PathWord(w.anchor, tuple(letters))


def reduce_randomly(Q: PresentedCategory, w: PathWord, rng: random.Random):
    """Reduce by applying a uniformly chosen redex at each step.

    Returns ``(normal_form, steps)``.  Independent of :func:`reduce`.
    """
    check_word(Q, w)
    steps = 0
    while True:
        options = redexes(Q, w)
        if not options:
            return w, steps
        w = rewrite(Q, w, rng.choice(options))
        steps += 1


def is_normal(Q: PresentedCategory, w: PathWord) -> bool:
    return not redexes(Q, w)


def compose_words(Q: PresentedCategory, w2: PathWord, w1: PathWord) -> PathWord:
    """``w2 o w1``: first ``w1``, then ``w2``."""
    if Q.cod(w1) != Q.dom(w2):
        raise NotComposable(f"{w1} ends at [{Q.cod(w1)}] but {w2} starts at [{Q.dom(w2)}]")
    return reduce(Q, PathWord(w1.anchor, w1.letters + w2.letters))


@dataclass(frozen=True)
class Projection:
    """The canonical functor from ``A'`` onto its presented quotient."""

    name: str
    source: FiniteCategory
    target: PresentedCategory

    def obj(self, a):
        return self.target.node_of(a)

    def mor(self, f):
        Q = self.target
        return reduce(Q, PathWord(Q.node_of(self.source.dom(f)), (f,)))


def presentation(F, name=None) -> PresentedCategory:
    z = zeta(F)
    return PresentedCategory(quotient_graph(F, z), F.target, name or f"precoker_{F.name}")


def precokernel(F) -> Tuple[PresentedCategory, Projection]:
    Q = presentation(F)
    pi = Projection(f"pi_{F.name}", F.target, Q)
    A = F.target
    for a in A.objects:
        if pi.mor(A.identity(a)) != Q.empty(pi.obj(a)):
            raise InternalAssertionFailure(f"projection does not preserve the identity of {a}")
    for (g, f), h in A.composition.items():
        if pi.mor(h) != compose_words(Q, pi.mor(g), pi.mor(f)):
            raise InternalAssertionFailure(f"projection does not preserve {g} . {f}")
    for d, c in F.source.morphisms.values():
        if pi.obj(F.obj(d)) != pi.obj(F.obj(c)):
            raise InternalAssertionFailure("pi o F is not trivial")
    return Q, pi


def prekernel(F) -> Tuple[FiniteCategory, Functor]:
    """Wide subcategory of the source keeping the morphisms whose endpoints
    ``F`` identifies, with its inclusion.  ``F`` may be a Functor or a
    Projection."""
    A = F.source
    keep = [f for f, (d, c) in A.morphisms.items() if F.obj(d) == F.obj(c)]
    X = wide_subcategory(A, keep, f"preker_{F.name}")
    return X, inclusion(X, A, f"K_{F.name}")


def hom_inhabited(Q: PresentedCategory, n1, n2) -> bool:
    Q._check_node(n1)
    Q._check_node(n2)
    seen = {n1}
    frontier = [n1]
    while frontier:
        n = frontier.pop()
        if n == n2:
            return True
        for e in Q.graph.non_identity_edges():
            d, c = Q.graph.edges[e]
            if d == n and c not in seen:
                seen.add(c)
                frontier.append(c)
    return False


def _successors(Q: PresentedCategory, e):
    """Letters that may follow ``e`` in a normal form."""
    A = Q.source
    node = Q.graph.edges[e][1]
    return [
        e2
        for e2 in Q.graph.non_identity_edges()
        if Q.graph.edges[e2][0] == node and A.cod(e) != A.dom(e2)
    ]


def enumerate_hom(Q: PresentedCategory, n1, n2, max_len: int) -> List[PathWord]:
    """Normal forms from ``n1`` to ``n2`` of length at most ``max_len``,
    shortest first, then lexicographic."""
    Q._check_node(n1)
    Q._check_node(n2)
    found = []
    if n1 == n2:
        found.append(PathWord(n1))
    level = [(e,) for e in Q.graph.non_identity_edges() if Q.graph.edges[e][0] == n1]
    length = 1
    while level and length <= max_len:
        level.sort()
        found += [PathWord(n1, w) for w in level if Q.graph.edges[w[-1]][1] == n2]
        level = [w + (e,) for w in level for e in _successors(Q, w[-1])]
        length += 1
    return found


def is_finite(Q: PresentedCategory) -> bool:
    """Finitely many normal forms iff the letter-succession graph is acyclic."""
    sorter = graphlib.TopologicalSorter(
        {e: _successors(Q, e) for e in Q.graph.non_identity_edges()}
    )
    try:
        sorter.prepare()
    except graphlib.CycleError:
        return False
    return True


def word_name(w: PathWord) -> str:
    if not w.letters:
        return f"id_{w.anchor}"
    return "__".join(w.letters)


def materialize(Q: PresentedCategory, name=None) -> FiniteCategory:
    """Convert a finite presentation into an explicit FiniteCategory.

    Nodes become objects, normal forms become morphisms (named by joining
    their letters with ``__``; one-letter words keep the letter's name).
    """
    if not is_finite(Q):
        raise InfinitePresentation(f"{Q.name} has infinitely many morphisms")
    bound = len(Q.graph.non_identity_edges())
    words: Dict[str, PathWord] = {}
    for n1 in Q.nodes:
        for n2 in Q.nodes:
            for w in enumerate_hom(Q, n1, n2, bound):
                words[word_name(w)] = w
    morphisms = {k: (Q.dom(w), Q.cod(w)) for k, w in words.items()}
    composition = {}
    for kf, wf in words.items():
        for kg, wg in words.items():
            if Q.cod(wf) == Q.dom(wg):
                composition[(kg, kf)] = word_name(compose_words(Q, wg, wf))
    identities = {n: f"id_{n}" for n in Q.nodes}
    return FiniteCategory(name or Q.name, Q.nodes, morphisms, identities, composition)


def torsion_part(Aprime: FiniteCategory) -> Tuple[FiniteCategory, Functor]:
    """Largest symmetric wide subcategory: keep hom(X, Y) exactly when there
    are morphisms both ways between X and Y."""
    keep = [
        f
        for f, (d, c) in Aprime.morphisms.items()
        if Aprime.hom(d, c) and Aprime.hom(c, d)
    ]
    A = wide_subcategory(Aprime, keep, f"tors_{Aprime.name}")
    return A, inclusion(A, Aprime, f"incl_{A.name}")


@dataclass(frozen=True)
class PreexactSequence:
    A: FiniteCategory
    F: Functor
    Aprime: FiniteCategory
    pi: Projection
    Q: PresentedCategory

    __hash__ = None


def two_way_partition(C: FiniteCategory) -> ZetaPartition:
    pairs = [(a, b) for a in C.objects for b in C.objects if C.hom(a, b) and C.hom(b, a)]
    return _partition(C.objects, pairs)


def short_preexact(Aprime: FiniteCategory) -> PreexactSequence:
    A, F = torsion_part(Aprime)
    Q, pi = precokernel(F)
    if not is_symmetric(A):
        raise InternalAssertionFailure(f"{A.name} is not symmetric")
    for n1 in Q.nodes:
        for n2 in Q.nodes:
            if n1 < n2 and hom_inhabited(Q, n1, n2) and hom_inhabited(Q, n2, n1):
                raise InternalAssertionFailure(f"[{n1}] and [{n2}] are connected both ways")
    z = Q.graph.partition
    two_way = two_way_partition(Aprime)
    if z != two_way:
        raise InternalAssertionFailure("zeta differs from the two-way hom relation")
    for x in Aprime.objects:
        for y in Aprime.objects:
            shared = z.related(x, y)
            if (A.hom(x, y) == Aprime.hom(x, y)) != shared and Aprime.hom(x, y):
                raise InternalAssertionFailure(f"hom({x}, {y}) kept/dropped inconsistently")
    X, K = prekernel(pi)
    if X != A or K != F:
        raise InternalAssertionFailure("the prekernel of pi is not the torsion part")
    return PreexactSequence(A, F, Aprime, pi, Q)
