"""Finite categories and functors as validated, immutable data.

A category is stored as explicit tables: objects, morphisms with their
endpoints, one identity per object and a composition table defined exactly on
composable pairs.  Identities are never written by hand; they are generated as
``id_<object>`` and every composite that involves an identity is filled in
automatically.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from catpre.errors import (
    NotTrivial,
    SourceTargetMismatch,
    UnknownObject,
    ValidationError,
    Violation,
)


def identity_name(obj: str) -> str:
    return f"id_{obj}"


@dataclass
class RawCategory:
    """Unvalidated category description, as produced by a parser or by hand.

    ``morphisms`` lists non-identity morphisms as ``(id, dom, cod)``;
    ``compositions`` lists ``(g, f, h)`` meaning ``h = g o f``.  ``lines``
    optionally maps ``("object", id)``, ``("morphism", id)`` and
    ``("compose", g, f)`` to source line numbers for diagnostics.
    """

    name: str
    objects: List[str] = field(default_factory=list)
    morphisms: List[Tuple[str, str, str]] = field(default_factory=list)
    compositions: List[Tuple[str, str, str]] = field(default_factory=list)
    lines: Dict[tuple, int] = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    name: str
    objects: Tuple[str, ...]
    morphisms: Mapping[str, Tuple[str, str]]
    identities: Mapping[str, str]
    composition: Mapping[Tuple[str, str], str]
    _homs: Mapping[Tuple[str, str], Tuple[str, ...]] = field(init=False, repr=False)

    def __post_init__(self):
        homs = {(a, b): [] for a in self.objects for b in self.objects}
        for f in sorted(self.morphisms):
            homs[self.morphisms[f]].append(f)
        object.__setattr__(self, "_homs", {k: tuple(v) for k, v in homs.items()})

    def __eq__(self, other):
        # structural equality; the name is a label, not structure
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        return (
            set(self.objects) == set(other.objects)
            and dict(self.morphisms) == dict(other.morphisms)
            and dict(self.identities) == dict(other.identities)
            and dict(self.composition) == dict(other.composition)
        )

    __hash__ = None

    def __repr__(self):
        return f"<FiniteCategory {self.name}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    def dom(self, f):
        return self.morphisms[f][0]

    def cod(self, f):
        return self.morphisms[f][1]

    def identity(self, a):
        return self.identities[a]

    def is_identity(self, f):
        dom, cod = self.morphisms[f]
        return dom == cod and self.identities[dom] == f

    def compose(self, g, f):
        """``g o f``; raises KeyError when the pair is not composable."""
        return self.composition[(g, f)]

    def composable(self, g, f):
        return self.morphisms[f][1] == self.morphisms[g][0]

    def hom(self, a, b):
        try:
            return self._homs[(a, b)]
        except KeyError:
            bad = a if a not in self.identities else b
            raise UnknownObject(f"{bad!r} is not an object of {self.name}") from None

    def non_identities(self):
        return [f for f in sorted(self.morphisms) if not self.is_identity(f)]

    def composable_pairs(self):
        for f in sorted(self.morphisms):
            for g in self.out_of(self.cod(f)):
                yield g, f

    def out_of(self, a):
        return [g for b in self.objects for g in self._homs[(a, b)]]


def validate_category(raw: RawCategory) -> FiniteCategory:
    """Check a raw description and build the category, or raise ValidationError.

    Every violation found is reported; associativity is only examined once the
    table is otherwise complete.
    """
    out: List[Violation] = []
    lines = raw.lines

    def report(kind, message, key=None):
        out.append(Violation(kind, message, lines.get(key) if key else None))

    objects: List[str] = []
    for a in raw.objects:
        if a in objects:
            report("DuplicateId", f"object {a!r} declared twice", ("object", a))
        else:
            objects.append(a)
    object_set = set(objects)

    morphisms: Dict[str, Tuple[str, str]] = {}
    identities = {a: identity_name(a) for a in objects}
    for a, i in identities.items():
        morphisms[i] = (a, a)
    for f, dom, cod in raw.morphisms:
        key = ("morphism", f)
        if f in morphisms:
            what = "a reserved identity name" if f in identities.values() else "declared twice"
            report("DuplicateId", f"morphism {f!r} is {what}", key)
            continue
        missing = [x for x in (dom, cod) if x not in object_set]
        if missing:
            report("DanglingReference", f"morphism {f!r} refers to unknown object {missing[0]!r}", key)
            continue
        morphisms[f] = (dom, cod)

    composition: Dict[Tuple[str, str], str] = {}
    for g, f, h in raw.compositions:
        key = ("compose", g, f)
        unknown = [x for x in (g, f, h) if x not in morphisms]
        if unknown:
            report("DanglingReference", f"compose {g} . {f} = {h}: unknown morphism {unknown[0]!r}", key)
            continue
        if morphisms[f][1] != morphisms[g][0]:
            report("NotComposable", f"compose {g} . {f}: cod({f}) != dom({g})", key)
            continue
        if morphisms[h] != (morphisms[f][0], morphisms[g][1]):
            report(
                "TypeMismatch",
                f"compose {g} . {f} = {h}: expected {morphisms[f][0]} -> {morphisms[g][1]}, "
                f"{h} is {morphisms[h][0]} -> {morphisms[h][1]}",
                key,
            )
            continue
        if (g, f) in composition and composition[(g, f)] != h:
            report("DuplicateId", f"compose {g} . {f} declared twice with different results", key)
            continue
        if g == identities[morphisms[g][0]] and h != f or f == identities[morphisms[f][0]] and h != g:
            report("IdentityLawViolation", f"compose {g} . {f} = {h} breaks the identity law", key)
            continue
        composition[(g, f)] = h

    for f, (dom, cod) in morphisms.items():
        composition.setdefault((identities[cod], f), f)
        composition.setdefault((f, identities[dom]), f)

    by_dom: Dict[str, List[str]] = {a: [] for a in objects}
    for f in sorted(morphisms):
        by_dom[morphisms[f][0]].append(f)
    for f in sorted(morphisms):
        for g in by_dom[morphisms[f][1]]:
            if (g, f) not in composition:
                report("MissingComposite", f"no composite declared for ({g}, {f})", ("morphism", g))

    if not out:
        for f in sorted(morphisms):
            for g in by_dom[morphisms[f][1]]:
                gf = composition[(g, f)]
                for h in by_dom[morphisms[g][1]]:
                    if composition[(h, gf)] != composition[(composition[(h, g)], f)]:
                        report("AssociativityViolation", f"({h} . {g}) . {f} != {h} . ({g} . {f})")

    if out:
        raise ValidationError(out)
    return FiniteCategory(raw.name, tuple(objects), morphisms, identities, composition)


def category(name, objects, morphisms=None, compose=None) -> FiniteCategory:
    """Shorthand constructor: ``morphisms`` maps id -> (dom, cod), ``compose``
    maps (g, f) -> g o f for non-identity pairs."""
    morphisms = morphisms or {}
    compose = compose or {}
    raw = RawCategory(
        name,
        list(objects),
        [(f, d, c) for f, (d, c) in morphisms.items()],
        [(g, f, h) for (g, f), h in compose.items()],
    )
    return validate_category(raw)


def hom_set(C: FiniteCategory, a, b) -> frozenset:
    return frozenset(C.hom(a, b))


def _connected(C):
    return {(a, b) for a in C.objects for b in C.objects if C.hom(a, b)}


def is_symmetric(C: FiniteCategory) -> bool:
    conn = _connected(C)
    return all((b, a) in conn for a, b in conn)


def is_antisymmetric(C: FiniteCategory) -> bool:
    conn = _connected(C)
    return all(a == b for a, b in conn if (b, a) in conn)


def is_monoid_class(C: FiniteCategory) -> bool:
    return all(a == b for a, b in _connected(C))


def wide_subcategory(C: FiniteCategory, keep: Iterable[str], name: str) -> FiniteCategory:
    """Restrict C to a set of morphisms closed under composition, keeping all
    objects and identities.  The caller guarantees closure."""
    keep = set(keep) | set(C.identities.values())
    morphisms = {f: C.morphisms[f] for f in C.morphisms if f in keep}
    composition = {(g, f): h for (g, f), h in C.composition.items() if g in keep and f in keep}
    assert all(h in keep for h in composition.values()), "kept morphisms are not closed"
    return FiniteCategory(name, C.objects, morphisms, dict(C.identities), composition)


def endo_subcategory(C: FiniteCategory) -> FiniteCategory:
    keep = [f for f, (d, c) in C.morphisms.items() if d == c]
    return wide_subcategory(C, keep, f"{C.name}_endo")


# -- functors ---------------------------------------------------------------


@dataclass
class RawFunctor:
    name: str
    object_map: List[Tuple[str, str]] = field(default_factory=list)
    morphism_map: List[Tuple[str, str]] = field(default_factory=list)
    lines: Dict[tuple, int] = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class Functor:
    name: str
    source: FiniteCategory
    target: FiniteCategory
    object_map: Mapping[str, str]
    morphism_map: Mapping[str, str]

    def __eq__(self, other):
        if not isinstance(other, Functor):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.object_map) == dict(other.object_map)
            and dict(self.morphism_map) == dict(other.morphism_map)
        )

    __hash__ = None

    def __repr__(self):
        return f"<Functor {self.name}: {self.source.name} -> {self.target.name}>"

    def obj(self, a):
        return self.object_map[a]

    def mor(self, f):
        return self.morphism_map[f]

    def key(self):
        """Hashable fingerprint of the maps, for deduplication."""
        return (tuple(sorted(self.object_map.items())), tuple(sorted(self.morphism_map.items())))


def validate_functor(raw: RawFunctor, source: FiniteCategory, target: FiniteCategory) -> Functor:
    out: List[Violation] = []
    lines = raw.lines

    def report(kind, message, key=None):
        out.append(Violation(kind, message, lines.get(key) if key else None))

    obj_map: Dict[str, str] = {}
    for a, x in raw.object_map:
        key = ("object", a)
        if a not in source.identities:
            report("DanglingReference", f"{a!r} is not an object of {source.name}", key)
        elif x not in target.identities:
            report("DanglingReference", f"{x!r} is not an object of {target.name}", key)
        elif a in obj_map and obj_map[a] != x:
            report("DuplicateId", f"object {a!r} mapped twice", key)
        else:
            obj_map[a] = x
    for a in source.objects:
        if a not in obj_map:
            report("IncompleteMap", f"no image given for object {a!r}")

    mor_map: Dict[str, str] = {}
    for f, u in raw.morphism_map:
        key = ("morphism", f)
        if f not in source.morphisms:
            report("DanglingReference", f"{f!r} is not a morphism of {source.name}", key)
        elif u not in target.morphisms:
            report("DanglingReference", f"{u!r} is not a morphism of {target.name}", key)
        elif f in mor_map and mor_map[f] != u:
            report("DuplicateId", f"morphism {f!r} mapped twice", key)
        else:
            mor_map[f] = u
    for a, i in source.identities.items():
        if a not in obj_map:
            continue
        expected = target.identity(obj_map[a])
        if mor_map.setdefault(i, expected) != expected:
            report("NotFunctorial", f"{i} must map to {expected}", ("morphism", i))
    for f in source.non_identities():
        if f not in mor_map:
            report("IncompleteMap", f"no image given for morphism {f!r}")

    if not out:
        for f, u in mor_map.items():
            d, c = source.morphisms[f]
            if target.morphisms[u] != (obj_map[d], obj_map[c]):
                report(
                    "NotFunctorial",
                    f"{f}: {d} -> {c} maps to {u}: {target.dom(u)} -> {target.cod(u)}, "
                    f"expected {obj_map[d]} -> {obj_map[c]}",
                    ("morphism", f),
                )
    if not out:
        for (g, f), h in source.composition.items():
            if mor_map[h] != target.compose(mor_map[g], mor_map[f]):
                report("NotFunctorial", f"F({g} . {f}) != F({g}) . F({f})")

    if out:
        raise ValidationError(out)
    return Functor(raw.name, source, target, obj_map, mor_map)


def functor(name, source, target, objects, morphisms=None) -> Functor:
    raw = RawFunctor(name, list(objects.items()), list((morphisms or {}).items()))
    return validate_functor(raw, source, target)


def identity_functor(C: FiniteCategory) -> Functor:
    return Functor(f"id_{C.name}", C, C, {a: a for a in C.objects}, {f: f for f in C.morphisms})


def inclusion(sub: FiniteCategory, C: FiniteCategory, name=None) -> Functor:
    """Inclusion of a wide subcategory (same objects, subset of morphisms)."""
    return Functor(
        name or f"incl_{sub.name}",
        sub,
        C,
        {a: a for a in sub.objects},
        {f: f for f in sub.morphisms},
    )


def compose_functors(G: Functor, F: Functor) -> Functor:
    """``G o F``."""
    if F.target != G.source:
        raise SourceTargetMismatch(f"target of {F.name} is not the source of {G.name}")
    return Functor(
        f"{G.name}_o_{F.name}",
        F.source,
        G.target,
        {a: G.object_map[x] for a, x in F.object_map.items()},
        {f: G.morphism_map[u] for f, u in F.morphism_map.items()},
    )


def is_trivial_functor(F: Functor) -> bool:
    """A functor is trivial iff it identifies the endpoints of every morphism."""
    return all(F.obj(d) == F.obj(c) for d, c in F.source.morphisms.values())


def trivial_factorization(F: Functor) -> Tuple[Functor, FiniteCategory, Functor]:
    """Factor a trivial functor as ``H o G`` through the endomorphism
    subcategory of its target, which has no morphisms between distinct objects."""
    if not is_trivial_functor(F):
        raise NotTrivial(f"{F.name} is not trivial: it separates the endpoints of some morphism")
    C = endo_subcategory(F.target)
    G = Functor(f"{F.name}_corestricted", F.source, C, dict(F.object_map), dict(F.morphism_map))
    H = inclusion(C, F.target)
    return G, C, H


# -- constructions used for generating examples ---------------------------


def relabel(C: FiniteCategory, name: str, objects=None, morphisms=None) -> FiniteCategory:
    """Rename objects and non-identity morphisms; identities follow objects.

    Defaults to canonical names ``o0, o1, ...`` and ``f0, f1, ...`` in the
    existing object order and sorted morphism order.
    """
    if objects is None:
        objects = {a: f"o{i}" for i, a in enumerate(C.objects)}
    if morphisms is None:
        morphisms = {f: f"f{i}" for i, f in enumerate(C.non_identities())}
    mor = dict(morphisms)
    for a, i in C.identities.items():
        mor[i] = identity_name(objects[a])
    return FiniteCategory(
        name,
        tuple(objects[a] for a in C.objects),
        {mor[f]: (objects[d], objects[c]) for f, (d, c) in C.morphisms.items()},
        {objects[a]: mor[i] for a, i in C.identities.items()},
        {(mor[g], mor[f]): mor[h] for (g, f), h in C.composition.items()},
    )


def _from_tables(name, objects, morphisms, identities, composition):
    # intermediate names are tuples; canonical relabelling gives identifiers
    temp = FiniteCategory(name, tuple(objects), morphisms, identities, composition)
    return relabel(temp, name)


def product(C: FiniteCategory, D: FiniteCategory, name=None) -> FiniteCategory:
    objects = list(itertools.product(C.objects, D.objects))
    morphisms = {}
    for f, g in itertools.product(sorted(C.morphisms), sorted(D.morphisms)):
        morphisms[(f, g)] = ((C.dom(f), D.dom(g)), (C.cod(f), D.cod(g)))
    identities = {(a, b): (C.identity(a), D.identity(b)) for a, b in objects}
    composition = {}
    for (g1, f1), h1 in C.composition.items():
        for (g2, f2), h2 in D.composition.items():
            composition[((g1, g2), (f1, f2))] = (h1, h2)
    return _from_tables(name or f"{C.name}_x_{D.name}", objects, morphisms, identities, composition)


def disjoint_union(C: FiniteCategory, D: FiniteCategory, name=None) -> FiniteCategory:
    def tag(i, X):
        return (
            [(i, a) for a in X.objects],
            {(i, f): ((i, d), (i, c)) for f, (d, c) in X.morphisms.items()},
            {(i, a): (i, f) for a, f in X.identities.items()},
            {((i, g), (i, f)): (i, h) for (g, f), h in X.composition.items()},
        )

    parts = [tag(0, C), tag(1, D)]
    objects = parts[0][0] + parts[1][0]
    morphisms = {**parts[0][1], **parts[1][1]}
    identities = {**parts[0][2], **parts[1][2]}
    composition = {**parts[0][3], **parts[1][3]}
    return _from_tables(name or f"{C.name}_u_{D.name}", objects, morphisms, identities, composition)


def check_category(C: FiniteCategory) -> Optional[List[Violation]]:
    """Re-run full validation on an already built category; None when valid."""
    raw = RawCategory(
        C.name,
        list(C.objects),
        [(f, *C.morphisms[f]) for f in C.non_identities()],
        [(g, f, h) for (g, f), h in C.composition.items() if not (C.is_identity(g) or C.is_identity(f))],
    )
    try:
        validate_category(raw)
    except ValidationError as err:
        return err.violations
    return None
