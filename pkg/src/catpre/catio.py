"""Line-oriented text formats for categories (``.cat``) and functors (``.fun``),
canonical serializers and DOT export.

Category documents::

    category iso
    object a
    object b
    morphism u : a -> b
    morphism v : b -> a
    compose v . u = id_a     # h = g o f is written  compose g . f = h
    compose u . v = id_b

Functor documents::

    functor F : iso -> mon
    object a |-> m
    object b |-> m
    morphism u |-> s
    morphism v |-> s

``#`` starts a comment.  Identities are implicit (``id_<object>``).  A
document may hold several blocks; functors may refer to categories defined
earlier in the same document or supplied in a registry.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from catpre.core import (
    FiniteCategory,
    Functor,
    RawCategory,
    RawFunctor,
    validate_category,
    validate_functor,
)
from catpre.errors import ParseError, UnknownCategory, ValidationError, Violation
from catpre.pretorsion import PresentedCategory, QuotientGraph, enumerate_hom, is_finite

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_TOKEN = re.compile(r"\s*(?:(\|->|->|[:.=])|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


@dataclass
class Token:
    text: str
    kind: str  # "ident" | "punct"
    line: int
    column: int


def tokenize_line(text: str, lineno: int) -> List[Token]:
    text = text.split("#", 1)[0]
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        punct, ident, bad = m.groups()
        column = m.start(m.lastindex) + 1
        if bad is not None:
            raise ParseError(f"unexpected character {bad!r}", lineno, column)
        if punct is not None:
            tokens.append(Token(punct, "punct", lineno, column))
        else:
            tokens.append(Token(ident, "ident", lineno, column))
        pos = m.end()
    return tokens


class _Line:
    def __init__(self, tokens, lineno, length):
        self.tokens = tokens
        self.lineno = lineno
        self.end_column = length + 1
        self.pos = 0

    def _here(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos].column
        return self.end_column

    def ident(self, what):
        if self.pos >= len(self.tokens) or self.tokens[self.pos].kind != "ident":
            found = self.tokens[self.pos].text if self.pos < len(self.tokens) else "end of line"
            raise ParseError(f"found {found!r}", self.lineno, self._here(), what)
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok.text

    def punct(self, text):
        if self.pos >= len(self.tokens) or self.tokens[self.pos].text != text:
            found = self.tokens[self.pos].text if self.pos < len(self.tokens) else "end of line"
            raise ParseError(f"found {found!r}", self.lineno, self._here(), repr(text))
        self.pos += 1

    def end(self):
        if self.pos < len(self.tokens):
            raise ParseError(
                f"unexpected {self.tokens[self.pos].text!r}", self.lineno, self._here(), "end of line"
            )


@dataclass
class Document:
    categories: Dict[str, FiniteCategory] = field(default_factory=dict)
    functors: List[Functor] = field(default_factory=list)


def parse_document(text: str, registry: Optional[Mapping[str, FiniteCategory]] = None) -> Document:
    doc = Document()
    known = dict(registry or {})
    block = None  # ("category", RawCategory) | ("functor", RawFunctor, src, tgt)

    def close():
        if block is None:
            return
        if block[0] == "category":
            C = validate_category(block[1])
            doc.categories[C.name] = C
            known[C.name] = C
        else:
            doc.functors.append(validate_functor(block[1], block[2], block[3]))

    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        tokens = tokenize_line(raw_line, lineno)
        if not tokens:
            continue
        line = _Line(tokens, lineno, len(raw_line.split("#", 1)[0].rstrip()))
        keyword = line.ident("a keyword")
        if keyword == "category":
            name = line.ident("a category name")
            line.end()
            close()
            if name in doc.categories:
                raise ValidationError([Violation("DuplicateId", f"category {name!r} defined twice", lineno)])
            block = ("category", RawCategory(name, lines={("header",): lineno}))
        elif keyword == "functor":
            name = line.ident("a functor name")
            line.punct(":")
            src_col = line._here()
            src = line.ident("a source category")
            line.punct("->")
            tgt_col = line._here()
            tgt = line.ident("a target category")
            line.end()
            close()
            for cname, col in ((src, src_col), (tgt, tgt_col)):
                if cname not in known:
                    raise UnknownCategory(f"{lineno}:{col}: unknown category {cname!r}")
            block = ("functor", RawFunctor(name), known[src], known[tgt])
        elif block is None:
            raise ParseError(f"{keyword!r} outside a block", lineno, 1, "'category' or 'functor'")
        elif block[0] == "category":
            raw = block[1]
            if keyword == "object":
                a = line.ident("an object id")
                line.end()
                raw.objects.append(a)
                raw.lines.setdefault(("object", a), lineno)
            elif keyword == "morphism":
                f = line.ident("a morphism id")
                line.punct(":")
                d = line.ident("a domain object")
                line.punct("->")
                c = line.ident("a codomain object")
                line.end()
                raw.morphisms.append((f, d, c))
                raw.lines.setdefault(("morphism", f), lineno)
            elif keyword == "compose":
                g = line.ident("a morphism id")
                line.punct(".")
                f = line.ident("a morphism id")
                line.punct("=")
                h = line.ident("a morphism id")
                line.end()
                raw.compositions.append((g, f, h))
                raw.lines.setdefault(("compose", g, f), lineno)
            else:
                raise ParseError(f"unknown statement {keyword!r}", lineno, 1, "'object', 'morphism' or 'compose'")
        else:
            raw = block[1]
            if keyword not in ("object", "morphism"):
                raise ParseError(f"unknown statement {keyword!r}", lineno, 1, "'object' or 'morphism'")
            x = line.ident(f"a source {keyword}")
            line.punct("|->")
            y = line.ident(f"a target {keyword}")
            line.end()
            (raw.object_map if keyword == "object" else raw.morphism_map).append((x, y))
            raw.lines.setdefault((keyword, x), lineno)
    close()
    return doc


def parse_category(text: str) -> FiniteCategory:
    doc = parse_document(text)
    if len(doc.categories) != 1 or doc.functors:
        raise ParseError("expected exactly one category block", 1, 1, "'category <name>'")
    return next(iter(doc.categories.values()))


def parse_functor(text: str, registry: Optional[Mapping[str, FiniteCategory]] = None) -> Functor:
    doc = parse_document(text, registry)
    if len(doc.functors) != 1:
        raise ParseError("expected exactly one functor block", 1, 1, "'functor <name> : <A> -> <B>'")
    return doc.functors[0]


def _ident(name: str) -> str:
    name = re.sub(r"[^A-Za-z0-9_]", "_", name)
    return name if IDENT.match(name) else f"_{name}"


def serialize_category(C: FiniteCategory) -> str:
    lines = [f"category {_ident(C.name)}"]
    lines += [f"object {a}" for a in sorted(C.objects)]
    lines += [f"morphism {f} : {C.dom(f)} -> {C.cod(f)}" for f in C.non_identities()]
    for g, f in sorted(C.composition):
        if not (C.is_identity(g) or C.is_identity(f)):
            lines.append(f"compose {g} . {f} = {C.compose(g, f)}")
    return "\n".join(lines) + "\n"


def serialize_functor(F: Functor, with_categories=False) -> str:
    lines = []
    if with_categories:
        lines.append(serialize_category(F.source))
        if F.target is not F.source:
            lines.append(serialize_category(F.target))
    lines.append(f"functor {_ident(F.name)} : {_ident(F.source.name)} -> {_ident(F.target.name)}")
    lines += [f"object {a} |-> {F.obj(a)}" for a in sorted(F.source.objects)]
    lines += [f"morphism {f} |-> {F.mor(f)}" for f in F.source.non_identities()]
    return "\n".join(lines) + "\n"


def _word_text(w):
    return "ε" if not w.letters else "<" + ", ".join(w.letters) + ">"


def serialize_presentation(Q: PresentedCategory, max_len: int) -> str:
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    A = Q.source
    g = Q.graph
    lines = [f"presentation {_ident(Q.name)}", f"source {_ident(A.name)}"]
    for n in Q.nodes:
        lines.append(f"node [{n}] = {{{', '.join(g.partition.block(n))}}}")
    for e in sorted(g.edges):
        d, c, ident = g.edge_meta[e]
        nd, nc = g.edges[e]
        suffix = " identity" if ident else ""
        lines.append(f"edge {e} : [{nd}] -> [{nc}] from {d} -> {c}{suffix}")
    r1, r2 = Q.rules()
    lines += [f"rule R1 <{i}> => ε" for i in r1]
    lines += [f"rule R2 <{f}, {h}> => <{gf}>" for (f, h), gf in r2]
    lines.append(f"normal-forms max-len {max_len}")
    total = 0
    for n1 in Q.nodes:
        for n2 in Q.nodes:
            words = enumerate_hom(Q, n1, n2, max_len)
            if not words:
                continue
            total += len(words)
            lines.append(f"hom [{n1}] -> [{n2}]")
            lines += [f"  {_word_text(w)}" for w in words]
    lines.append(f"normal-form-count: {total}")
    lines.append(f"finite: {'yes' if is_finite(Q) else 'no'}")
    return "\n".join(lines) + "\n"


def _q(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(x) -> str:
    """DOT digraph of a category, a quotient graph or a presentation.

    Identities and identity edges are left out.
    """
    if isinstance(x, PresentedCategory):
        x, name = x.graph, x.name
    else:
        name = getattr(x, "name", "quotient")
    lines = [f"digraph {_q(name)} {{"]
    if isinstance(x, QuotientGraph):
        lines += [f"  {_q(f'[{n}]')};" for n in x.nodes]
        for e in x.non_identity_edges():
            d, c = x.edges[e]
            lines.append(f"  {_q(f'[{d}]')} -> {_q(f'[{c}]')} [label={_q(e)}];")
    else:
        lines += [f"  {_q(a)};" for a in sorted(x.objects)]
        for f in x.non_identities():
            lines.append(f"  {_q(x.dom(f))} -> {_q(x.cod(f))} [label={_q(f)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
