"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary (and directly with ``pytest -s``)."""

import pytest

from catpre import fixtures
from catpre.core import identity_functor, is_antisymmetric, is_symmetric
from catpre.pretorsion import PathWord, compose_words, enumerate_hom, precokernel, prekernel, short_preexact
from catpre.verify import (
    ProbeSuite,
    VerificationReport,
    check_condition1,
    check_galois_precokernel,
    check_galois_prekernel,
    check_triviality_oracle,
    check_precokernel_universal,
    check_prekernel_universal,
    check_rewriting,
    check_roundtrip,
    check_short_preexact,
    count_functors_naive,
    enumerate_functors,
    fixture_functors,
    gen_category,
    random_functors,
)

RESULTS = []
SEED = 0
FIXTURES = list(fixtures.FIXTURES.values())
ALL_PROBES = ProbeSuite(FIXTURES)
COKER_PROBES = ALL_PROBES.restricted({"one", "two", "mon", "disc2"})


@pytest.fixture(scope="module")
def suite_functors():
    fs = fixture_functors(FIXTURES) + random_functors(SEED, 400)
    return fs


@pytest.fixture(scope="module")
def generated():
    return [gen_category(SEED * 1000 + i) for i in range(50)]


def record(criterion, report: VerificationReport, extra=""):
    line = f"[{'PASS' if report.passed else 'FAIL'}] {criterion}: {report.instances_checked} instances, {len(report.failures)} failures{extra}"
    RESULTS.append(line)
    print(line)
    assert report.passed, [str(f) for f in report.failures[:5]]


def merged(claim, reports):
    out = VerificationReport(claim)
    for r in reports:
        out.merge(r)
    return out


def test_1_triviality_oracle_equivalence(suite_functors):
    report = check_triviality_oracle(suite_functors)
    if len(suite_functors) < 500:
        report.fail(f"only {len(suite_functors)} functors")
    record("1 triviality characterization == factorization search (>=500 functors)", report)


def test_2_prekernel_universal(suite_functors):
    report = merged(
        "prekernel", (check_prekernel_universal(F, *prekernel(F), ALL_PROBES) for F in suite_functors)
    )
    record("2 prekernel universal property, probes one/two/iso/mon/disc2/span", report)


def test_3_precokernel_universal(suite_functors):
    report = merged(
        "precokernel",
        (check_precokernel_universal(F, *precokernel(F), COKER_PROBES) for F in suite_functors),
    )
    Q, _ = precokernel(identity_functor(fixtures.ISO))
    forms = enumerate_hom(Q, "a", "a", 4)
    expected = {PathWord("a", (x,) * n) for x in "uv" for n in range(1, 5)} | {PathWord("a")}
    report.instances_checked += 1
    if len(forms) != 9 or set(forms) != expected:
        report.fail(f"precokernel(id_iso) normal forms up to length 4: {[str(w) for w in forms]}")
    u, v, eps = Q.word("u"), Q.word("v"), PathWord("a")
    if compose_words(Q, v, u) != eps or compose_words(Q, u, v) != eps:
        report.fail("u and v do not cancel in precokernel(id_iso)")
    record("3 precokernel universal property, probes one/two/mon/disc2; integer groupoid instance", report)


def test_4_galois_identities(suite_functors):
    report = merged(
        "galois",
        [check_galois_prekernel(F) for F in suite_functors] + [check_galois_precokernel(F) for F in suite_functors],
    )
    record("4 preker(precoker(preker F)) = preker F and dual, exact equality", report)


def test_5_condition_one():
    pairs = [(T, Fc) for T in FIXTURES if is_symmetric(T) for Fc in FIXTURES if is_antisymmetric(Fc)]
    report = merged("condition1", (check_condition1(T, Fc) for T, Fc in pairs))
    record(f"5 every functor symmetric -> antisymmetric is trivial ({len(pairs)} pairs)", report)


def test_6_short_preexact(generated):
    report = merged("short-preexact", (check_short_preexact(C, ALL_PROBES) for C in FIXTURES + generated))
    record("6 short preexact sequence for 6 fixtures + 50 generated categories", report)


def test_7_rewriting():
    presentations = []
    for C in FIXTURES:
        presentations.append(precokernel(identity_functor(C))[0])
        presentations.append(short_preexact(C).Q)
    report = merged("rewriting", (check_rewriting(Q, 1000, SEED) for Q in presentations))
    record(f"7 confluence/termination/idempotence, 1000 words x {len(presentations)} presentations", report)


def test_8_round_trip(generated):
    record("8 parse(serialize(C)) == C on fixtures + generated", check_roundtrip(FIXTURES + generated))


def test_9_counting():
    report = VerificationReport("counting")
    for Y, A, expected in ((fixtures.TWO, fixtures.TWO, 3), (fixtures.ISO, fixtures.MON, 2)):
        report.instances_checked += 1
        listed = len(enumerate_functors(Y, A))
        naive = count_functors_naive(Y, A)
        if not listed == naive == expected:
            report.fail(f"{Y.name} -> {A.name}: enumerated {listed}, naive {naive}, expected {expected}")
    record("9 functor counts two->two = 3, iso->mon = 2 on two code paths", report)
