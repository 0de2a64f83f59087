import io
import shutil
from pathlib import Path

import pytest

from catpre.cli import main

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def samples(tmp_path):
    for p in SAMPLES.iterdir():
        shutil.copy(p, tmp_path / p.name)
    return tmp_path


def test_check_category(samples):
    code, out, _ = run("check", samples / "two.cat")
    assert code == 0
    assert "symmetric: no, antisymmetric: yes, catmon: no" in out


def test_check_broken(samples):
    code, _, err = run("check", samples / "broken.cat")
    assert code == 1
    assert "MissingComposite" in err and "broken.cat:3" in err


def test_check_syntax_error(samples):
    (samples / "bad.cat").write_text("category x\nobject\n")
    code, _, err = run("check", samples / "bad.cat")
    assert code == 2 and "2:7" in err


def test_check_missing_file(samples):
    assert run("check", samples / "nope.cat")[0] == 2


def test_check_trivial_functor(samples):
    code, out, _ = run("check", samples / "iso_to_mon.fun")
    assert code == 0 and "trivial: yes" in out


def test_check_functor_using_file_category(samples):
    (samples / "mine.cat").write_text("category mine\nobject p\nobject q\nmorphism r : p -> q\n")
    (samples / "f.fun").write_text("functor G : mine -> two\nobject p |-> a\nobject q |-> b\nmorphism r |-> u\n")
    code, out, _ = run("check", samples / "f.fun", samples / "mine.cat")
    assert code == 0 and "functor G: trivial: no" in out


def test_prekernel(samples):
    code, out, _ = run("prekernel", samples / "id_two.fun")
    assert code == 0
    assert out.startswith("category preker_id_two\nobject a\nobject b\nfunctor")
    code, out, _ = run("prekernel", samples / "two_to_one.fun")
    assert "morphism u : a -> b" in out
    code, out, _ = run("prekernel", samples / "id_iso.fun")
    assert "morphism" not in out.split("functor")[0]


def test_precokernel(samples):
    code, out, _ = run("precokernel", samples / "id_iso.fun", "--max-len", 3)
    assert code == 0
    assert "normal-form-count: 7" in out and "finite: no" in out
    _, out, _ = run("precokernel", samples / "disc_in_two.fun")
    assert "normal-form-count: 3" in out and "finite: yes" in out
    _, out, _ = run("precokernel", samples / "id_mon.fun")
    assert "hom [m] -> [m]\n  ε\n  <s>\n" in out and "finite: yes" in out


def test_precokernel_dot(samples):
    code, out, _ = run("precokernel", samples / "id_iso.fun", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_sequence(samples):
    code, out, _ = run("sequence", samples / "two.cat")
    assert code == 0 and "finite: yes" in out and "normal-form-count: 3" in out
    code, out, _ = run("sequence", samples / "iso.cat")
    assert "finite: no" in out
    code, out, _ = run("sequence", samples / "span.cat")
    assert out.count("\nnode [") == 3


def test_verify_small_bounds():
    code, out, _ = run("verify", "--max-objects", 1)
    assert code == 0
    lines = out.strip().splitlines()
    assert all("PASS" in line for line in lines)


def test_verify_seeded_is_deterministic():
    a = run("verify", "--suite", "seeded", "--seed", 42, "--max-objects", 2, "--max-morphisms", 6)
    b = run("verify", "--suite", "seeded", "--seed", 42, "--max-objects", 2, "--max-morphisms", 6)
    assert a == b and a[0] == 0


def test_verbose_echo(samples):
    code, _, err = run("--verbose", "check", samples / "two.cat")
    assert code == 0 and "'command': 'check'" in err


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
