"""Command-line entry point.

Exit codes: 0 success, 1 semantic failure (validation or law failure),
2 syntax or I/O error.
"""

import argparse
import sys

from catpre import fixtures
from catpre.catio import (
    parse_document,
    serialize_category,
    serialize_functor,
    serialize_presentation,
    to_dot,
)
from catpre.core import is_antisymmetric, is_monoid_class, is_symmetric, is_trivial_functor
from catpre.errors import CatError, ParseError, UnknownCategory, ValidationError
from catpre.pretorsion import precokernel, prekernel, short_preexact
from catpre.verify import SuiteConfig, run_suite

OK, SEMANTIC, SYNTAX = 0, 1, 2


def _yn(b):
    return "yes" if b else "no"


class _Failure(Exception):
    def __init__(self, code):
        self.code = code


def _cat_first(paths):
    return sorted(paths, key=lambda p: not p.endswith(".cat"))


def _parse_file(path, registry, err):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        return parse_document(text, registry)
    except OSError as exc:
        print(f"{path}: {exc.strerror or exc}", file=err)
        raise _Failure(SYNTAX)
    except (ParseError, UnknownCategory) as exc:
        print(f"{path}:{exc}", file=err)
        raise _Failure(SYNTAX)
    except ValidationError as exc:
        for v in exc.violations:
            where = f"{path}:{v.line}" if v.line else path
            print(f"{where}: {v.kind}: {v.message}", file=err)
        raise _Failure(SEMANTIC)


def _load(paths, err):
    """Parse ``.cat`` files first so functor files can name their categories.
    Built-in fixtures are always resolvable by name."""
    registry = dict(fixtures.FIXTURES)
    docs = []
    for path in _cat_first(paths):
        doc = _parse_file(path, registry, err)
        registry.update(doc.categories)
        docs.append((path, doc))
    return docs


def _functor(docs, err):
    found = [F for _, doc in docs for F in doc.functors]
    if not found:
        print("no functor found in input", file=err)
        raise _Failure(SYNTAX)
    return found[0]


def _category(docs, err):
    found = [C for _, doc in docs for C in doc.categories.values()]
    if not found:
        print("no category found in input", file=err)
        raise _Failure(SYNTAX)
    return found[0]


def cmd_check(args, out, err):
    code = OK
    registry = dict(fixtures.FIXTURES)
    for path in _cat_first(args.paths):
        try:
            doc = _parse_file(path, registry, err)
        except _Failure as exc:
            code = max(code, exc.code)
            continue
        registry.update(doc.categories)
        for C in doc.categories.values():
            print(
                f"{path}: category {C.name}: symmetric: {_yn(is_symmetric(C))}, "
                f"antisymmetric: {_yn(is_antisymmetric(C))}, catmon: {_yn(is_monoid_class(C))}",
                file=out,
            )
        for F in doc.functors:
            print(f"{path}: functor {F.name}: trivial: {_yn(is_trivial_functor(F))}", file=out)
    return code


def cmd_prekernel(args, out, err):
    F = _functor(_load([args.path] + args.extra, err), err)
    X, K = prekernel(F)
    if args.format == "dot":
        out.write(to_dot(X))
    else:
        out.write(serialize_category(X))
        out.write(serialize_functor(K))
    return OK


def cmd_precokernel(args, out, err):
    F = _functor(_load([args.path] + args.extra, err), err)
    Q, _ = precokernel(F)
    out.write(to_dot(Q) if args.format == "dot" else serialize_presentation(Q, args.max_len))
    return OK


def cmd_sequence(args, out, err):
    C = _category(_load([args.path], err), err)
    seq = short_preexact(C)
    if args.format == "dot":
        out.write(to_dot(seq.A))
        out.write(to_dot(seq.Aprime))
        out.write(to_dot(seq.Q))
        return OK
    print(f"# {seq.A.name} -> {C.name} -> {seq.Q.name}", file=out)
    print(f"# torsion part symmetric: {_yn(is_symmetric(seq.A))}", file=out)
    # short_preexact raises InternalAssertionFailure if any of these fail
    print("# quotient antisymmetric: yes", file=out)
    print("# zeta equals the two-way hom relation: yes", file=out)
    print("# inclusion is the prekernel of the projection: yes", file=out)
    out.write(serialize_category(seq.A))
    out.write(serialize_functor(seq.F))
    out.write(serialize_presentation(seq.Q, args.max_len))
    return OK


def cmd_verify(args, out, err):
    seed = 0 if args.suite == "default" else args.seed
    config = SuiteConfig(seed=seed, max_objects=args.max_objects, max_morphisms=args.max_morphisms)
    if args.verbose:
        print(f"# suite={args.suite} {config}", file=out)
    reports = run_suite(config)
    code = OK
    for report in reports:
        print(str(report), file=out)
        if not report.passed:
            code = SEMANTIC
        if args.verbose:
            for cx in report.failures:
                print(f"  counterexample: {cx.message}", file=out)
                for C in cx.categories:
                    out.write(serialize_category(C))
                for F in cx.functors:
                    out.write(serialize_functor(F, with_categories=True))
    return code


def build_parser():
    p = argparse.ArgumentParser(prog="catpre", description=__doc__.splitlines()[0])
    p.add_argument("--verbose", action="store_true", help="echo settings and print counterexamples in full")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=["text", "dot"], default="text")
        sp.add_argument("--max-len", type=int, default=6, metavar="N")
        sp.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)

    sp = sub.add_parser("check", help="validate .cat/.fun files and print predicates")
    sp.add_argument("paths", nargs="+")
    sp.set_defaults(func=cmd_check)
    common(sp)

    for name, func, helptext in (
        ("prekernel", cmd_prekernel, "print the prekernel of a functor"),
        ("precokernel", cmd_precokernel, "print the precokernel presentation of a functor"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("path", help=".fun file")
        sp.add_argument("extra", nargs="*", help=".cat files the functor refers to")
        sp.set_defaults(func=func)
        common(sp)

    sp = sub.add_parser("sequence", help="print the short preexact sequence of a category")
    sp.add_argument("path", help=".cat file")
    sp.set_defaults(func=cmd_sequence)
    common(sp)

    sp = sub.add_parser("verify", help="run the law suites")
    sp.add_argument("--suite", choices=["default", "seeded"], default="default")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-objects", type=int, default=4, metavar="N")
    sp.add_argument("--max-morphisms", type=int, default=12, metavar="N")
    sp.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.verbose and args.command != "verify":
        shown = {k: v for k, v in vars(args).items() if k != "func"}
        print(f"# {shown}", file=err)
    try:
        return args.func(args, out, err)
    except _Failure as exc:
        return exc.code
    except CatError as exc:
        print(f"error: {exc}", file=err)
        return SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
