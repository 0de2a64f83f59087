import pytest

from catpre import fixtures
from catpre.catio import (
    parse_category,
    parse_document,
    parse_functor,
    serialize_category,
    serialize_functor,
    serialize_presentation,
    to_dot,
)
from catpre.core import identity_functor, is_trivial_functor
from catpre.errors import ParseError, UnknownCategory, ValidationError
from catpre.pretorsion import precokernel, quotient_graph, zeta
from catpre.verify import gen_category

TWO_DOC = """\
category two
object a
object b
morphism u : a -> b
"""

ISO_DOC = """\
category iso   # two mutually inverse arrows
object a
object b
morphism u : a -> b
morphism v : b -> a
compose v . u = id_a
compose u . v = id_b
"""


class TestParseCategory:
    def test_two(self, two):
        C = parse_category(TWO_DOC)
        assert C == two and C.name == "two"

    def test_comments_and_blank_lines(self, iso):
        assert parse_category("\n# header\n" + ISO_DOC + "\n\n") == iso

    def test_missing_composite(self):
        text = ISO_DOC.replace("compose v . u = id_a\n", "")
        with pytest.raises(ValidationError) as exc:
            parse_category(text)
        (v,) = exc.value.violations
        assert v.kind == "MissingComposite"
        assert v.line == 5  # the declaration of v

    def test_dangling_reference_has_line(self):
        with pytest.raises(ValidationError) as exc:
            parse_category("category c\nobject a\nmorphism u : a -> c\n")
        (v,) = exc.value.violations
        assert v.kind == "DanglingReference" and v.line == 3

    @pytest.mark.parametrize(
        "text, line, column",
        [
            ("category two\nobject a b\n", 2, 10),
            ("category two\nobject a\nmorphism u a -> a\n", 3, 12),
            ("category two\nobject a\nmorphism u : a => a\n", 3, 17),
            ("object a\n", 1, 1),
            ("category two\nobjekt a\n", 2, 1),
            ("category two\nobject a$\n", 2, 9),
            ("category two\ncompose u . = u\n", 2, 13),
            ("category two\nobject\n", 2, 7),
        ],
    )
    def test_syntax_errors_carry_position(self, text, line, column):
        with pytest.raises(ParseError) as exc:
            parse_category(text)
        assert (exc.value.line, exc.value.column) == (line, column)

    def test_identities_usable_in_compose(self, mon):
        text = "category mon\nobject m\nmorphism s : m -> m\ncompose s . s = id_m\ncompose s . id_m = s\n"
        assert parse_category(text) == mon

    def test_identity_not_redeclarable(self):
        with pytest.raises(ValidationError) as exc:
            parse_category("category c\nobject a\nmorphism id_a : a -> a\n")
        assert exc.value.kinds == {"DuplicateId"}


class TestParseFunctor:
    def test_unique_functor_to_terminal(self, two_to_one):
        text = "functor T : two -> one\nobject a |-> star\nobject b |-> star\nmorphism u |-> id_star\n"
        F = parse_functor(text, fixtures.FIXTURES)
        assert F == two_to_one

    def test_categories_from_same_document(self):
        text = TWO_DOC + "functor F : two -> two\nobject a |-> a\nobject b |-> a\nmorphism u |-> id_a\n"
        F = parse_functor(text)
        assert is_trivial_functor(F)

    def test_wrong_endpoints(self):
        text = "functor F : two -> iso\nobject a |-> a\nobject b |-> b\nmorphism u |-> v\n"
        with pytest.raises(ValidationError) as exc:
            parse_functor(text, fixtures.FIXTURES)
        assert exc.value.kinds == {"NotFunctorial"}
        assert exc.value.violations[0].line == 4

    def test_missing_clause(self):
        text = "functor F : two -> iso\nobject a |-> a\nobject b |-> b\n"
        with pytest.raises(ValidationError) as exc:
            parse_functor(text, fixtures.FIXTURES)
        (v,) = exc.value.violations
        assert v.kind == "IncompleteMap" and "'u'" in v.message

    def test_unknown_category(self):
        with pytest.raises(UnknownCategory):
            parse_functor("functor F : nope -> two\n", fixtures.FIXTURES)

    def test_compose_not_allowed_in_functor(self):
        with pytest.raises(ParseError):
            parse_functor("functor F : two -> two\ncompose u . u = u\n", fixtures.FIXTURES)


class TestRoundTrip:
    @pytest.mark.parametrize("name", sorted(fixtures.FIXTURES))
    def test_fixtures(self, name):
        C = fixtures.FIXTURES[name]
        back = parse_category(serialize_category(C))
        assert back == C and back.name == C.name

    @pytest.mark.parametrize("seed", range(30))
    def test_generated(self, seed):
        C = gen_category(seed)
        assert parse_category(serialize_category(C)) == C

    def test_functor(self, iso_to_mon):
        text = serialize_functor(iso_to_mon)
        assert parse_functor(text, fixtures.FIXTURES) == iso_to_mon
        assert parse_document(serialize_functor(iso_to_mon, with_categories=True)).functors == [iso_to_mon]

    def test_canonical(self, iso):
        lines = ISO_DOC.replace("   # two mutually inverse arrows", "").splitlines()
        lines[-2:] = sorted(lines[-2:])  # compose clauses sorted by (g, f)
        assert serialize_category(iso) == "\n".join(lines) + "\n"


class TestPresentation:
    def test_free_monoid(self, id_two):
        text = serialize_presentation(precokernel(id_two)[0], 2)
        body = text.split("hom [a] -> [a]\n")[1].split("normal-form-count")[0]
        assert body.split() == ["ε", "<u>", "<u,", "u>"]
        assert text.rstrip().endswith("finite: no")

    def test_discrete_into_two(self, disc_in_two):
        text = serialize_presentation(precokernel(disc_in_two)[0], 3)
        assert "normal-form-count: 3\n" in text
        assert "finite: yes" in text

    def test_integers(self, id_iso):
        text = serialize_presentation(precokernel(id_iso)[0], 3)
        assert "normal-form-count: 7\n" in text
        assert "rule R2 <u, v> => <id_a>" in text

    def test_deterministic(self, id_iso):
        Q = precokernel(id_iso)[0]
        assert serialize_presentation(Q, 4) == serialize_presentation(precokernel(id_iso)[0], 4)

    def test_negative_length(self, id_iso):
        with pytest.raises(ValueError):
            serialize_presentation(precokernel(id_iso)[0], -1)


class TestDot:
    def test_two(self, two):
        assert to_dot(two) == 'digraph "two" {\n  "a";\n  "b";\n  "a" -> "b" [label="u"];\n}\n'

    def test_discrete(self, disc2):
        text = to_dot(disc2)
        assert text.count(";") == 2 and "->" not in text

    def test_quotient_graph(self, id_iso):
        text = to_dot(quotient_graph(id_iso, zeta(id_iso)))
        assert text.count('"[a]";') == 1
        assert '"[a]" -> "[a]" [label="u"];' in text
        assert '"[a]" -> "[a]" [label="v"];' in text
        assert "id_a" not in text

    def test_byte_identical(self, span):
        assert to_dot(span) == to_dot(parse_category(serialize_category(span)))
