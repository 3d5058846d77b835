"""Golden-output and exit-code tests for every subcommand."""

import io
import os
from contextlib import redirect_stderr, redirect_stdout

import pytest

from reflab.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def path(name):
    return os.path.join(DATA, name)


class TestGolden:
    def test_analyze_group_s3(self):
        code, out, _ = run_cli("analyze-group", path("s3_2d.grp"))
        assert code == 0
        body = out.splitlines()[1:]
        assert body == [
            "order=6",
            "dim=2",
            "conductor=6",
            "reflections=3",
            "hyperplanes=3",
            "rank=2",
            "fixed_dim=0",
            "irreducible=true",
            "reflection_group=true",
            "degrees=2,3",
            "coxeter_number=3",
            "well_generated=true",
            "witness=2,4",
            "coxeter_element=1",
        ]

    def test_invariants_z2(self):
        code, out, _ = run_cli("invariants", path("z2.grp"))
        assert code == 0
        lines = out.splitlines()
        assert "a[0]=1" in lines and "a[2]=1" in lines
        assert "hh[0]=1" in lines and "hh[2]=1" in lines
        assert "a0=1" in lines

    def test_orbifold_descriptor_file(self):
        code, out, _ = run_cli("orbifold", "--group", path("z2.grp"),
                               "--descriptor", path("z2_line.orb"))
        assert code == 0
        lines = out.splitlines()
        assert "H^-0=1" in lines and "H^-2=1" in lines
        assert "chi_top=1" in lines and "chi_hh=2" in lines
        assert "identity_check=true" in lines

    def test_orbifold_linear_s3(self):
        code, out, _ = run_cli("orbifold", "--group", path("s3_2d.grp"), "--linear")
        assert code == 0
        lines = out.splitlines()
        for key in ("H^-0=1", "H^-2=1", "H^-4=1", "chi_hh=6", "identity_check=true"):
            assert key in lines

    def test_dunkl_check_z2(self):
        code, out, _ = run_cli("dunkl-check", "--group", path("z2.grp"),
                               "--t", "1", "--c", "1/3", "--degree", "6")
        assert code == 0
        lines = out.splitlines()
        for key in ("dunkl_commutativity=PASS", "equivariance=PASS",
                    "mixed_commutator_shape=PASS", "t_fit=1*z^0",
                    "kappa_ratio[1]=-1*z^0"):
            assert key in lines

    def test_dunkl_check_class_keyed_c(self):
        code, out, _ = run_cli("dunkl-check", "--group", path("z3.grp"),
                               "--t", "1", "--c", "1=1/2,2=1/3", "--degree", "4")
        assert code == 0
        assert "c[1]=1/2" in out.splitlines()
        assert "c[2]=1/3" in out.splitlines()

    def test_hochschild_check_cycle_1(self):
        code, out, _ = run_cli("hochschild-check", "--cycle", "1", "--cap", "2")
        assert code == 0
        lines = out.splitlines()
        assert "signed_normalized_boundary_zero=true" in lines
        assert "unnormalized_boundary=-1*1(x)1" in lines
        assert "unsigned_variant_is_cycle=false" in lines

    def test_hochschild_check_algebra_file(self):
        code, out, _ = run_cli("hochschild-check", "--cycle", "1",
                               "--algebra", path("small.alg"))
        assert code == 0
        assert "algebra_dim=2" in out.splitlines()

    def test_index_density_worked_example(self):
        code, out, _ = run_cli("index-density", "--n", "1", "--l", "0",
                               "--tangent-roots", "0", "--theta", "th",
                               "--moments", "1")
        assert code == 0
        lines = out.splitlines()
        assert "term=-1 * th * hbar^0" in lines
        assert "ahat_spellings_agree=true" in lines

    def test_index_density_tangent_only(self):
        code, out, _ = run_cli("index-density", "--n", "2", "--l", "0",
                               "--tangent-roots", "t", "--theta", "0",
                               "--moments", "1,0,0")
        assert code == 0
        assert "term=-1/24 * t^2 * hbar^2" in out.splitlines()

    def test_table_format(self):
        code, out, _ = run_cli("invariants", path("z2.grp"), "--format", "table")
        assert code == 0
        assert any(line.startswith("a[0]") and line.endswith("1")
                   for line in out.splitlines())


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ("analyze-group", "s3_2d.grp"),
        ("invariants", "z2.grp"),
    ])
    def test_reruns_are_byte_identical(self, argv):
        cmd = [argv[0]] + [path(a) if a.endswith(".grp") else a for a in argv[1:]]
        first = run_cli(*cmd)
        second = run_cli(*cmd)
        assert first == second

    def test_header_canonicalized(self):
        _, out, _ = run_cli("invariants", path("z2.grp"))
        header = out.splitlines()[0]
        assert header.startswith("# reflab invariants ")
        keys = [kv.split("=")[0] for kv in header.split()[3:]]
        assert keys == sorted(keys)


class TestExitCodes:
    def test_missing_file_is_2(self):
        code, _, err = run_cli("analyze-group", path("nope.grp"))
        assert code == 2 and "error=" in err

    def test_malformed_descriptor_is_2(self, tmp_path):
        bad = tmp_path / "bad.orb"
        bad.write_text("orbifold\nambient_dim 1\nclass 1\ncomponent codim=1 betti=1\n")
        code, _, err = run_cli("orbifold", "--group", path("z2.grp"),
                               "--descriptor", str(bad))
        assert code == 2 and "error=" in err

    def test_domain_error_is_1(self, tmp_path):
        infinite = tmp_path / "infinite.grp"
        infinite.write_text("dim 1\nconductor 1\ngen\n2\n")
        code, _, err = run_cli("analyze-group", str(infinite), "--cap", "64")
        assert code == 1 and "CapExceeded" in err

    def test_usage_error_is_2(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("no-such-subcommand")
        assert exc.value.code == 2
