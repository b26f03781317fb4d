from __future__ import annotations

import io
import json
import shutil
import subprocess
import sys

import pytest

from conftest import DEFAULT_CORPUS
from extauto.cli import EXIT_CAP, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, VERIFIERS, run
from extauto.compat import SequenceReport
from extauto.constructors import dihedral
from extauto.corpus_io import parse, serialize


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    return code, (json.loads(out) if out.strip() else None), err


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_CAP}) == 4
    assert (EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_CAP) == (0, 1, 2, 3)


def test_verify_all_d4_center():
    code, out, _ = call("verify", "all", "--example", "d4_center")
    assert code == 0
    assert "orbit sizes 1, 1, 3, 3" in out
    code, data, _ = call_json("verify", "all", "--example", "d4_center")
    assert code == 0 and data["orbit_sizes"] == [1, 1, 3, 3]
    assert len(data["reports"]) == len(VERIFIERS) and all(r["ok"] for r in data["reports"])


def test_ext_classes_d4_over_z2():
    code, data, _ = call_json("ext", "classes", "--example", "d4_over_z2")
    assert code == 0
    classes = data["data"]["classes"]
    assert len(classes) == 2 and all(c["split"] for c in classes)


def test_group_aut_trivial():
    code, data, _ = call_json("group", "aut", "--spec", "cyclic(1)")
    assert code == 0 and data["data"]["order"] == 1
    code, data, _ = call_json("group", "aut", "--spec", "quaternion(8)")
    assert data["data"]["order"] == 24 and data["data"]["out_order"] == 6


def test_group_info_and_iso():
    code, data, _ = call_json("group", "info", "--spec", "dihedral(8)")
    assert code == 0 and data["data"]["center_order"] == 2
    code, data, _ = call_json("group", "iso", "--spec", "dihedral(8)", "--spec", "quaternion(8)")
    assert code == 0 and data["data"]["isomorphic"] is False


def test_group_from_file(tmp_path):
    path = tmp_path / "d4.txt"
    path.write_bytes(serialize(dihedral(8), "text"))
    code, data, _ = call_json("group", "aut", "--group", str(path))
    assert code == 0 and data["data"]["order"] == 8


def test_extension_from_subgroup_generators():
    # element 2 of dihedral(8) is the half turn, which generates the centre
    code, data, _ = call_json("ext", "analyze", "--spec", "dihedral(8)", "--subgroup", "2")
    assert code == 0
    assert data["data"]["H_order"] == 2 and data["data"]["phi_trivial"] is True
    assert data["data"]["orbit_sizes"] == [1, 1, 3, 3]


def test_ext_orbits_and_split_orbits():
    code, data, _ = call_json("ext", "orbits", "--example", "d4_center")
    assert code == 0 and data["data"]["sizes"] == [1, 1, 3, 3]
    code, data, _ = call_json("explore", "split-orbits", "--example", "d4_center")
    assert code == 0 and data["data"]["split_classes"] == 1
    code, data, _ = call_json("ext", "split-orbits", "--example", "d4_over_z2")
    assert data["data"]["all_split_if_one_is"] is True


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
def test_verify_all_over_default_corpus(name):
    code, _, err = call("verify", "all", "--example", name)
    assert code == 0, err


@pytest.mark.parametrize("check", sorted(VERIFIERS))
def test_single_verifiers_round_trip(check):
    code, out, _ = call("verify", check, "--example", "q8_center", "--format", "json")
    assert code == 0
    rep = parse(out)
    assert isinstance(rep, SequenceReport) and rep.ok


@pytest.mark.parametrize(
    "argv",
    [
        ("group", "info", "--spec", "cyclic(4)"),
        ("ext", "analyze", "--example", "s3_a3"),
        ("corpus", "list"),
        ("verify", "all", "--example", "z4_z2"),
    ],
)
def test_json_output_parses(argv):
    code, out, _ = call(*argv, "--format", "json")
    assert code == 0
    parse(out)
    assert json.loads(out)["kind"] in {"record", "report_set"}


def test_usage_errors_exit_one():
    assert call("verify", "all", "--example", "no_such")[0] == EXIT_USAGE
    assert call("frobnicate")[0] == EXIT_USAGE
    assert call("group", "info")[0] == EXIT_USAGE
    assert call("ext", "analyze", "--spec", "dihedral(8)")[0] == EXIT_USAGE
    assert call("group", "aut", "--spec", "nonsense(2)")[0] == EXIT_USAGE


def test_heavy_example_needs_flag():
    assert call("verify", "all", "--example", "a5_x_z7")[0] == EXIT_USAGE
    code, data, _ = call_json("verify", "solvability", "--example", "a5_x_z7", "--heavy")
    assert code == 0 and data["ok"]


def test_cap_exit_code():
    assert call("group", "aut", "--spec", "dihedral(8)", "--cap-order", "4")[0] == EXIT_CAP


def test_corpus_run_and_export(tmp_path):
    code, data, _ = call_json("corpus", "run", "d4_center", "s3_a3")
    assert code == 0
    assert [r["status"] for r in data["data"]["results"]] == ["ok", "ok"]
    code, data, _ = call_json("corpus", "export", str(tmp_path / "corpus"))
    assert code == 0 and len(data["data"]["written"]) >= len(DEFAULT_CORPUS)


def test_corpus_run_default_catalog():
    code, out, err = call("corpus", "run")
    assert code == 0, out + err


def test_console_entry_point():
    exe = shutil.which("extauto")
    argv = [exe] if exe else [sys.executable, "-m", "extauto"]
    proc = subprocess.run(argv + ["group", "aut", "--spec", "cyclic(1)"], capture_output=True, text=True)
    assert proc.returncode == 0 and "order: 1" in proc.stdout


def test_verification_failure_exits_two(monkeypatch):
    def broken(E):
        rep = SequenceReport("broken")
        rep.junction("X", False, 1, 2)
        return rep

    monkeypatch.setitem(VERIFIERS, "cycle", broken)
    code, out, _ = call("verify", "cycle", "--example", "d4_center")
    assert code == EXIT_VERIFY and "FAILED" in out
