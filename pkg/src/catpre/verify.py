"""Brute-force oracles and law suites.

Universal properties quantify over all categories; here they are checked
against a finite family of probe categories by enumerating every functor
between small categories.  A passing report is evidence at desk scale, not a
proof.
"""

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from catpre import fixtures
from catpre.core import (
    FiniteCategory,
    Functor,
    category,
    compose_functors,
    disjoint_union,
    endo_subcategory,
    identity_functor,
    is_antisymmetric,
    is_monoid_class,
    is_symmetric,
    is_trivial_functor,
    product,
    relabel,
    trivial_factorization,
)
from catpre.errors import (
    BoundExceeded,
    InternalAssertionFailure,
    NoFunctorExists,
    PreconditionViolated,
)
from catpre.pretorsion import (
    PathWord,
    compose_words,
    enumerate_hom,
    hom_inhabited,
    precokernel,
    prekernel,
    reduce,
    reduce_randomly,
    short_preexact,
    two_way_partition,
    zeta,
)

MAX_OBJECTS = 4
MAX_MORPHISMS = 12
MAX_CANDIDATES = 20000


@dataclass
class Counterexample:
    message: str
    categories: Tuple[FiniteCategory, ...] = ()
    functors: Tuple[Functor, ...] = ()

    def __str__(self):
        return self.message


@dataclass
class VerificationReport:
    claim: str
    instances_checked: int = 0
    failures: List[Counterexample] = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def fail(self, message, categories=(), functors=()):
        self.failures.append(Counterexample(message, tuple(categories), tuple(functors)))

    def merge(self, other: "VerificationReport"):
        self.instances_checked += other.instances_checked
        self.failures.extend(other.failures)
        return self

    def __str__(self):
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.claim}: {status}, {self.instances_checked} instances"


@dataclass
class ProbeSuite:
    categories: Sequence[FiniteCategory] = field(
        default_factory=lambda: list(fixtures.FIXTURES.values())
    )
    max_objects: int = MAX_OBJECTS
    max_morphisms: int = MAX_MORPHISMS
    max_candidates: int = MAX_CANDIDATES

    def __post_init__(self):
        for C in self.categories:
            if len(C.objects) > self.max_objects or len(C.morphisms) > self.max_morphisms:
                raise BoundExceeded(f"probe {C.name} exceeds the suite bounds")

    def bounds(self):
        return dict(
            max_objects=self.max_objects,
            max_morphisms=self.max_morphisms,
            max_candidates=self.max_candidates,
        )

    def restricted(self, names):
        return ProbeSuite(
            [C for C in self.categories if C.name in names],
            self.max_objects,
            self.max_morphisms,
            self.max_candidates,
        )


# -- functor enumeration ----------------------------------------------------


def generating_set(C: FiniteCategory) -> List[str]:
    """Non-identity morphisms that generate C under composition (greedy)."""
    closure = set(C.identities.values())
    gens = []
    for f in C.non_identities():
        if f in closure:
            continue
        gens.append(f)
        closure.add(f)
        grown = True
        while grown:
            grown = False
            for (g, h), gh in C.composition.items():
                if g in closure and h in closure and gh not in closure:
                    closure.add(gh)
                    grown = True
    return gens


def _extend(Y, A, obj_map, assignment):
    """Propagate generator images through Y's composition table.  Returns the
    full morphism map, or None when two derivations disagree."""
    mor = {i: A.identity(obj_map[a]) for a, i in Y.identities.items()}
    for f, u in assignment.items():
        if mor.get(f, u) != u:
            return None
        mor[f] = u
    table = list(Y.composition.items())
    changed = True
    while changed:
        changed = False
        for (g, f), h in table:
            if g in mor and f in mor:
                value = A.compose(mor[g], mor[f])
                if h not in mor:
                    mor[h] = value
                    changed = True
                elif mor[h] != value:
                    return None
    if len(mor) != len(Y.morphisms):
        return None
    return mor


def _check_bounds(C, max_objects, max_morphisms):
    if len(C.objects) > max_objects or len(C.morphisms) > max_morphisms:
        raise BoundExceeded(
            f"{C.name} has {len(C.objects)} objects / {len(C.morphisms)} morphisms, "
            f"bounds are {max_objects} / {max_morphisms}"
        )


def enumerate_functors(
    Y: FiniteCategory,
    A: FiniteCategory,
    max_objects=MAX_OBJECTS,
    max_morphisms=MAX_MORPHISMS,
    max_candidates=MAX_CANDIDATES,
) -> List[Functor]:
    """Every functor ``Y -> A``, without duplicates.

    A functor is fixed by its object map and its values on a generating set
    of Y, so candidates are enumerated there and the rest is derived and
    checked against the full composition table.
    """
    _check_bounds(Y, max_objects, max_morphisms)
    _check_bounds(A, max_objects, max_morphisms)
    gens = generating_set(Y)
    found = []
    for images in itertools.product(A.objects, repeat=len(Y.objects)):
        obj_map = dict(zip(Y.objects, images))
        choices = [A.hom(obj_map[Y.dom(f)], obj_map[Y.cod(f)]) for f in gens]
        size = math.prod(len(c) for c in choices)
        if size > max_candidates:
            raise BoundExceeded(f"{size} candidate morphism maps {Y.name} -> {A.name} for one object map")
        for pick in itertools.product(*choices):
            mor = _extend(Y, A, obj_map, dict(zip(gens, pick)))
            if mor is None:
                continue
            if any(A.morphisms[mor[f]] != (obj_map[d], obj_map[c]) for f, (d, c) in Y.morphisms.items()):
                continue
            if any(mor[h] != A.compose(mor[g], mor[f]) for (g, f), h in Y.composition.items()):
                continue
            found.append(Functor(f"{Y.name}_to_{A.name}_{len(found)}", Y, A, obj_map, mor))
    return found


def count_functors_naive(Y: FiniteCategory, A: FiniteCategory) -> int:
    """Count functors by trying every object map and every morphism map.

    Deliberately shares nothing with :func:`enumerate_functors`.  Only
    intended for sources with at most two objects.
    """
    if len(Y.objects) > 2:
        raise BoundExceeded("naive count is limited to sources with <= 2 objects")
    ys = sorted(Y.morphisms)
    count = 0
    for images in itertools.product(A.objects, repeat=len(Y.objects)):
        om = dict(zip(Y.objects, images))
        for values in itertools.product(sorted(A.morphisms), repeat=len(ys)):
            mm = dict(zip(ys, values))
            ok = all(A.morphisms[mm[f]] == (om[Y.dom(f)], om[Y.cod(f)]) for f in ys)
            ok = ok and all(mm[Y.identity(a)] == A.identity(om[a]) for a in Y.objects)
            ok = ok and all(
                A.composition.get((mm[g], mm[f])) == mm[h] for (g, f), h in Y.composition.items()
            )
            count += ok
    return count


def is_trivial_bruteforce(F: Functor, **bounds) -> bool:
    """Search for ``G: A -> C`` and ``H: C -> B`` with ``H o G = F``, where C is
    the endomorphism subcategory of the target (a CatMon object)."""
    C = endo_subcategory(F.target)
    Gs = enumerate_functors(F.source, C, **bounds)
    Hs = enumerate_functors(C, F.target, **bounds)
    target_key = F.key()
    for G in Gs:
        for H in Hs:
            if any(H.obj(G.obj(a)) != x for a, x in F.object_map.items()):
                continue
            if compose_functors(H, G).key() == target_key:
                return True
    return False


# -- universal properties ---------------------------------------------------


def _composite_trivial(F, lam) -> bool:
    """Constant-on-components triviality of ``F o lam`` without building the composite;
    ``F`` may be a Functor or a projection onto a presentation."""
    return all(F.obj(lam.obj(d)) == F.obj(lam.obj(c)) for d, c in lam.source.morphisms.values())


def check_prekernel_universal(F, X: FiniteCategory, K: Functor, suite: ProbeSuite) -> VerificationReport:
    report = VerificationReport(f"prekernel-universal[{F.name}]")
    A = F.source
    if K.source != X or K.target != A:
        report.fail(f"{K.name} is not a functor {X.name} -> {A.name}", [X, A], [K])
        return report
    report.instances_checked += 1
    if not _composite_trivial(F, K):
        report.fail(f"{F.name} o {K.name} is not trivial", [X, A], [K])
    for Y in suite.categories:
        lifts = {}
        for lift in enumerate_functors(Y, X, **suite.bounds()):
            k = compose_functors(K, lift).key()
            lifts[k] = lifts.get(k, 0) + 1
        for lam in enumerate_functors(Y, A, **suite.bounds()):
            if not _composite_trivial(F, lam):
                continue
            report.instances_checked += 1
            n = lifts.get(lam.key(), 0)
            if n != 1:
                report.fail(
                    f"probe {Y.name}: {lam.name} has {n} factorizations through {K.name}",
                    [Y, A, X],
                    [lam],
                )
    return report


def _words_upto(Q, n):
    """Every path word of length <= n, identity letters included."""
    edges = sorted(Q.graph.edges)
    words = [PathWord(node) for node in Q.nodes]
    frontier = [PathWord(Q.graph.edges[e][0], (e,)) for e in edges]
    for _ in range(n):
        words += frontier
        frontier = [
            PathWord(w.anchor, w.letters + (e,))
            for w in frontier
            for e in edges
            if Q.graph.edges[e][0] == Q.cod(w)
        ]
    return words


def check_precokernel_universal(F, Q, pi, suite: ProbeSuite, word_len=2) -> VerificationReport:
    """For each probe B and each ``F': A' -> B`` with ``F' o F`` trivial, build
    the induced ``H': Q -> B`` on generators and check it is well defined,
    factors ``F'`` through ``pi`` and is forced by ``F'``."""
    report = VerificationReport(f"precokernel-universal[{F.name}]")
    Ap = F.target
    report.instances_checked += 1
    if not _composite_trivial(pi, F):
        report.fail(f"{pi.name} o {F.name} is not trivial", [F.source, Ap], [F])
    # generators: every node is the image of an object, every edge the image
    # of its own morphism, so H' is determined by H' o pi
    for n in Q.nodes:
        if pi.obj(n) != n:
            report.fail(f"node [{n}] is not pi of its representative")
    for e in Q.graph.non_identity_edges():
        if pi.mor(e) != PathWord(Q.node_of(Ap.dom(e)), (e,)):
            report.fail(f"edge {e} is not the image of the morphism {e}")
    words = _words_upto(Q, word_len)
    normal = [w for n1 in Q.nodes for n2 in Q.nodes for w in enumerate_hom(Q, n1, n2, word_len)]

    for B in suite.categories:
        for Fp in enumerate_functors(Ap, B, **suite.bounds()):
            if not is_trivial_functor(compose_functors(Fp, F)):
                continue
            report.instances_checked += 1
            bad = _induced_failure(Q, pi, Fp, B, words, normal)
            if bad:
                report.fail(f"probe {B.name}, {Fp.name}: {bad}", [F.source, Ap, B], [F, Fp])
    return report


def _induced_failure(Q, pi, Fp, B, words, normal) -> Optional[str]:
    Ap = Q.source
    node_image = {}
    for n in Q.nodes:
        images = {Fp.obj(a) for a in Q.graph.partition.block(n)}
        if len(images) != 1:
            return f"F' is not constant on the class [{n}]"
        node_image[n] = images.pop()
    for a, i in Ap.identities.items():
        if Fp.mor(i) != B.identity(node_image[Q.node_of(a)]):
            return f"R1 instance {i} not respected"
    for (g, f), h in Ap.composition.items():
        if B.compose(Fp.mor(g), Fp.mor(f)) != Fp.mor(h):
            return f"R2 instance ({f}, {g}) not respected"

    def H(w):
        out = B.identity(node_image[w.anchor])
        for e in w.letters:
            out = B.compose(Fp.mor(e), out)
        return out

    for a in Ap.objects:
        if node_image[pi.obj(a)] != Fp.obj(a):
            return f"H'(pi({a})) != F'({a})"
    for f in Ap.morphisms:
        if H(pi.mor(f)) != Fp.mor(f):
            return f"H'(pi({f})) != F'({f})"
    for w in words:
        if H(reduce(Q, w)) != H(w):
            return f"H' not constant on the congruence class of {w}"
    for w1 in normal:
        for w2 in normal:
            if Q.cod(w1) == Q.dom(w2):
                if H(compose_words(Q, w2, w1)) != B.compose(H(w2), H(w1)):
                    return f"H' does not preserve {w2} o {w1}"
    return None


def check_galois_prekernel(F) -> VerificationReport:
    report = VerificationReport(f"galois-prekernel[{F.name}]", 1)
    X, K = prekernel(F)
    _, pi2 = precokernel(K)
    X2, K2 = prekernel(pi2)
    if X2 != X or K2 != K:
        report.fail(f"preker(precoker(preker {F.name})) differs from preker {F.name}", [X, X2], [F])
    return report


def check_galois_precokernel(F) -> VerificationReport:
    report = VerificationReport(f"galois-precokernel[{F.name}]", 1)
    Q, pi = precokernel(F)
    _, Kp = prekernel(pi)
    Q2, _ = precokernel(Kp)
    if zeta(F) != zeta(Kp):
        report.fail(f"zeta partitions differ for {F.name}", [F.target], [F])
    elif Q2.graph != Q.graph:
        report.fail(f"quotient graphs differ for {F.name}", [F.target], [F])
    elif Q2.rules() != Q.rules() or Q2 != Q:
        report.fail(f"rule sets differ for {F.name}", [F.target], [F])
    return report


def check_condition1(T: FiniteCategory, Fc: FiniteCategory, suite: Optional[ProbeSuite] = None) -> VerificationReport:
    if not is_symmetric(T):
        raise PreconditionViolated(f"{T.name} is not symmetric")
    if not is_antisymmetric(Fc):
        raise PreconditionViolated(f"{Fc.name} is not antisymmetric")
    bounds = (suite or ProbeSuite()).bounds()
    report = VerificationReport(f"condition-1[{T.name}, {Fc.name}]")
    for F in enumerate_functors(T, Fc, **bounds):
        report.instances_checked += 1
        if not is_trivial_functor(F):
            report.fail(f"{F.name} is not trivial", [T, Fc], [F])
    return report


def check_short_preexact(Aprime: FiniteCategory, suite: ProbeSuite) -> VerificationReport:
    report = VerificationReport(f"short-preexact[{Aprime.name}]", 1)
    try:
        seq = short_preexact(Aprime)
    except InternalAssertionFailure as err:
        report.fail(str(err), [Aprime])
        return report
    if not is_symmetric(seq.A):
        report.fail(f"{seq.A.name} is not symmetric", [Aprime])
    Q = seq.Q
    for n1, n2 in itertools.combinations(Q.nodes, 2):
        report.instances_checked += 1
        if hom_inhabited(Q, n1, n2) and hom_inhabited(Q, n2, n1):
            report.fail(f"[{n1}] and [{n2}] are reachable from each other", [Aprime])
    if Q.graph.partition != two_way_partition(Aprime):
        report.fail("zeta is not the two-way hom relation", [Aprime])
    report.merge(check_prekernel_universal(seq.pi, seq.A, seq.F, suite))
    report.merge(check_precokernel_universal(seq.F, Q, seq.pi, suite))
    return report


# -- generators -------------------------------------------------------------


def _thin(k, rng, density=0.4):
    objects = [f"x{i}" for i in range(k)]
    rel = {(i, j) for i in range(k) for j in range(k) if i == j or rng.random() < density}
    for m in range(k):
        for i in range(k):
            for j in range(k):
                if (i, m) in rel and (m, j) in rel:
                    rel.add((i, j))
    morphisms = {f"r{i}_{j}": (objects[i], objects[j]) for i, j in sorted(rel) if i != j}

    def name(i, j):
        return f"id_x{i}" if i == j else f"r{i}_{j}"

    compose = {}
    for i, j in rel:
        for j2, l in rel:
            if j == j2 and i != j and j != l:
                compose[(name(j, l), name(i, j))] = name(i, l)
    return category(f"thin{k}", objects, morphisms, compose)


def cyclic_monoid(n):
    """One-object category of the cyclic group of order ``n``."""
    morphisms = {f"s{k}": ("m", "m") for k in range(1, n)}

    def name(k):
        k %= n
        return f"s{k}" if k else "id_m"

    compose = {(name(i), name(j)): name(i + j) for i in range(1, n) for j in range(1, n)}
    return category(f"z{n}", ["m"], morphisms, compose)


IDEMPOTENT = category("idem", ["m"], {"e": ("m", "m")}, {("e", "e"): "e"})
MONOIDS = [cyclic_monoid(1), cyclic_monoid(2), cyclic_monoid(3), cyclic_monoid(4), IDEMPOTENT]


def _atom(rng, max_objects):
    if rng.random() < 0.5:
        return _thin(rng.randint(1, max_objects), rng)
    return rng.choice(MONOIDS)


def gen_category(seed: int, max_objects=MAX_OBJECTS, max_morphisms=MAX_MORPHISMS, mode=None) -> FiniteCategory:
    """Random valid category, deterministic in ``seed``.

    Built from thin categories (random preorders) and small monoids, combined
    by products and disjoint unions; valid by construction.  ``mode`` forces
    one of ``thin``, ``monoid``, ``product``, ``union``.
    """
    if max_objects < 1 or max_morphisms < 1:
        raise ValueError("bounds must be positive")
    rng = random.Random(seed)
    for _ in range(64):
        kind = mode or rng.choice(["thin", "monoid", "product", "union"])
        if kind == "thin":
            C = _thin(rng.randint(1, max_objects), rng)
        elif kind == "monoid":
            C = rng.choice(MONOIDS)
        elif kind == "product":
            C = product(_atom(rng, max_objects), _atom(rng, max_objects))
        else:
            C = disjoint_union(_atom(rng, max_objects), _atom(rng, max_objects))
        if len(C.objects) <= max_objects and len(C.morphisms) <= max_morphisms:
            return relabel(C, f"gen{seed}")
    return relabel(fixtures.ONE, f"gen{seed}")


def gen_functor(seed: int, C: FiniteCategory, D: FiniteCategory, **bounds) -> Functor:
    candidates = enumerate_functors(C, D, **bounds)
    if not candidates:
        raise NoFunctorExists(f"no functor {C.name} -> {D.name}")
    return random.Random(seed).choice(candidates)


# -- law suites -------------------------------------------------------------


def fixture_functors(categories, **bounds) -> List[Functor]:
    """All functors between every ordered pair of the given categories."""
    out = []
    for Y in categories:
        for A in categories:
            out += enumerate_functors(Y, A, **bounds)
    return out


def random_functors(seed: int, count: int, max_objects=MAX_OBJECTS, max_morphisms=MAX_MORPHISMS) -> List[Functor]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        s = rng.randrange(2**32)
        C = gen_category(s, max_objects, max_morphisms)
        # endofunctors half the time; random pairs are almost always constant
        D = C if rng.random() < 0.5 else gen_category(s + 1, max_objects, max_morphisms)
        try:
            out.append(gen_functor(s, C, D, max_objects=max_objects, max_morphisms=max_morphisms))
        except BoundExceeded:
            continue
    return out


def random_word(Q, rng: random.Random, max_len=8) -> PathWord:
    node = rng.choice(Q.nodes)
    letters = []
    edges = sorted(Q.graph.edges)
    for _ in range(rng.randint(0, max_len)):
        e = rng.choice([e for e in edges if Q.graph.edges[e][0] == (Q.graph.edges[letters[-1]][1] if letters else node)])
        letters.append(e)
    return PathWord(node, tuple(letters))


def check_rewriting(Q, n_words=1000, seed=0, max_len=8) -> VerificationReport:
    """Confluence, termination and idempotence of reduction on random words."""
    report = VerificationReport(f"rewriting[{Q.name}]")
    rng = random.Random(seed)
    for _ in range(n_words):
        w = random_word(Q, rng, max_len)
        report.instances_checked += 1
        nf1, steps1 = reduce_randomly(Q, w, random.Random(rng.random()))
        nf2, steps2 = reduce_randomly(Q, w, random.Random(rng.random()))
        nf = reduce(Q, w)
        if not nf1 == nf2 == nf:
            report.fail(f"{w} reduces to {nf1}, {nf2} and {nf}")
        if max(steps1, steps2) > len(w):
            report.fail(f"{w} took more than {len(w)} steps")
        if reduce(Q, nf) != nf:
            report.fail(f"reduce is not idempotent on {w}")
        if Q.dom(nf) != Q.dom(w) or Q.cod(nf) != Q.cod(w):
            report.fail(f"reduce moved the endpoints of {w}")
    return report


def check_category_laws(categories) -> VerificationReport:
    report = VerificationReport("catmon-iff-symmetric-and-antisymmetric")
    for C in categories:
        report.instances_checked += 1
        if is_monoid_class(C) != (is_symmetric(C) and is_antisymmetric(C)):
            report.fail(f"{C.name}: CatMon membership disagrees with the predicates", [C])
    return report


def check_trivial_ideal(functors, **bounds) -> VerificationReport:
    """Composites with a trivial factor are trivial, and trivial functors
    factor through their target's endomorphism subcategory."""
    report = VerificationReport("trivial-ideal")
    by_source = {}
    for F in functors:
        by_source.setdefault(F.source.name, []).append(F)
    for F in functors:
        if is_trivial_functor(F):
            G, C, H = trivial_factorization(F)
            report.instances_checked += 1
            if compose_functors(H, G) != F or not is_monoid_class(C):
                report.fail(f"bad factorization of {F.name}", functors=[F])
        for G in by_source.get(F.target.name, []):
            if G.source != F.target:
                continue
            report.instances_checked += 1
            if (is_trivial_functor(F) or is_trivial_functor(G)) and not is_trivial_functor(compose_functors(G, F)):
                report.fail(f"{G.name} o {F.name} is not trivial", functors=[F, G])
    return report


def check_triviality_oracle(functors, **bounds) -> VerificationReport:
    report = VerificationReport("triviality-oracle")
    for F in functors:
        report.instances_checked += 1
        if is_trivial_functor(F) != is_trivial_bruteforce(F, **bounds):
            report.fail(f"{F.name}: characterization and factorization search disagree", functors=[F])
    return report


def check_roundtrip(categories) -> VerificationReport:
    from catpre.catio import parse_category, serialize_category

    report = VerificationReport("round-trip")
    for C in categories:
        report.instances_checked += 1
        back = parse_category(serialize_category(C))
        if back != C or back.name != C.name:
            report.fail(f"{C.name} does not survive serialize/parse", [C])
    return report


def check_functor_counts(categories) -> VerificationReport:
    report = VerificationReport("functor-count")
    for Y in categories:
        if len(Y.objects) > 2:
            continue
        for A in categories:
            report.instances_checked += 1
            listed = enumerate_functors(Y, A)
            keys = {F.key() for F in listed}
            naive = count_functors_naive(Y, A)
            if len(keys) != len(listed) or len(listed) != naive:
                report.fail(f"{Y.name} -> {A.name}: enumerated {len(listed)}, naive count {naive}", [Y, A])
    return report


@dataclass
class SuiteConfig:
    seed: int = 0
    generated_categories: int = 50
    random_functors: int = 400
    rewrite_words: int = 1000
    max_objects: int = MAX_OBJECTS
    max_morphisms: int = MAX_MORPHISMS


def run_suite(config: SuiteConfig = None, progress=None) -> List[VerificationReport]:
    """Run every law and return one merged report per law, in fixed order."""
    config = config or SuiteConfig()
    bounds = dict(max_objects=config.max_objects, max_morphisms=config.max_morphisms)
    probes = [
        C
        for C in fixtures.FIXTURES.values()
        if len(C.objects) <= config.max_objects and len(C.morphisms) <= config.max_morphisms
    ]
    suite = ProbeSuite(probes, **bounds)
    coker_suite = suite.restricted({"one", "two", "mon", "disc2"})
    generated = [
        gen_category(config.seed * 1000 + i, **bounds) for i in range(config.generated_categories)
    ]
    functors = fixture_functors(probes, **bounds)
    functors += random_functors(config.seed, config.random_functors, **bounds)

    def law(claim, parts):
        report = VerificationReport(claim)
        for part in parts:
            report.merge(part)
        if progress:
            progress(report)
        return report

    reports = [
        law("triviality-oracle", [check_triviality_oracle(functors, **bounds)]),
        law("prekernel-universal", (check_prekernel_universal(F, *prekernel(F), suite) for F in functors)),
        law(
            "precokernel-universal",
            (check_precokernel_universal(F, *precokernel(F), coker_suite) for F in functors),
        ),
        law("galois-prekernel", (check_galois_prekernel(F) for F in functors)),
        law("galois-precokernel", (check_galois_precokernel(F) for F in functors)),
        law(
            "condition-1",
            (
                check_condition1(T, Fc, suite)
                for T in probes
                if is_symmetric(T)
                for Fc in probes
                if is_antisymmetric(Fc)
            ),
        ),
        law("short-preexact", (check_short_preexact(C, suite) for C in probes + generated)),
        law(
            "rewriting",
            (
                check_rewriting(Q, config.rewrite_words, config.seed)
                for C in probes
                for Q in (precokernel(identity_functor(C))[0], short_preexact(C).Q)
            ),
        ),
        law("round-trip", [check_roundtrip(probes + generated)]),
        law("functor-count", [check_functor_counts(probes)]),
        law("catmon-iff-symmetric-and-antisymmetric", [check_category_laws(probes + generated)]),
        law("trivial-ideal", [check_trivial_ideal(functors)]),
    ]
    return reports
