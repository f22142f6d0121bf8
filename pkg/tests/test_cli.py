"""SpaceFile interchange format and the command-line front end."""

import json

import pytest

from liesdit.fields import GF
from liesdit.liealg import MatrixSpace
from liesdit.linalg import Matrix
from liesdit.spacefile import (SpaceFileError, format_entry, parse_space,
                               write_space)
from liesdit.families import lambda_space
from liesdit.cli import main


class TestSpaceFile:
    def test_round_trip(self):
        S = lambda_space(3)
        text = write_space(S, metadata={"family": "lambda", "params": ["3"]})
        S2, meta, warns = parse_space(text)
        assert warns == []
        assert meta["family"] == "lambda"
        assert S2.dim == 3 and S2.n == 3
        assert write_space(S2, metadata=meta) == text

    def test_gf_field(self):
        F = GF(3)
        S = MatrixSpace([Matrix(F, [[0, 1], [2, 0]])])
        S2, _, _ = parse_space(write_space(S))
        assert S2.field == F and S2.basis == S.basis

    def test_non_canonical_entry_rejected(self):
        doc = {"format_version": "1", "field": "Q", "n": 1, "basis": [[["2/4"]]]}
        with pytest.raises(SpaceFileError):
            parse_space(json.dumps(doc))
        S, _, warns = parse_space(json.dumps(doc), lenient=True)
        assert any("2/4" in w for w in warns)
        assert format_entry(S.basis[0].entries[0][0]) == "1/2"

    def test_bad_rational_syntax(self):
        doc = {"format_version": "1", "field": "Q", "n": 1, "basis": [[["1/-2"]]]}
        with pytest.raises(SpaceFileError):
            parse_space(json.dumps(doc))

    def test_shape_errors(self):
        doc = {"format_version": "1", "field": "Q", "n": 2,
               "basis": [[["1", "0"], ["0", "1"]], [["1"]]]}
        with pytest.raises(SpaceFileError):
            parse_space(json.dumps(doc))

    def test_malformed_json(self):
        with pytest.raises(SpaceFileError):
            parse_space("{not json")

    def test_bad_field_and_version(self):
        with pytest.raises(SpaceFileError):
            parse_space(json.dumps({"format_version": "2", "field": "Q",
                                    "n": 1, "basis": [[["1"]]]}))
        with pytest.raises(SpaceFileError):
            parse_space(json.dumps({"format_version": "1", "field": "R",
                                    "n": 1, "basis": [[["1"]]]}))

    def test_dependent_basis_warns(self):
        doc = {"format_version": "1", "field": "Q", "n": 1,
               "basis": [[["1"]], [["2"]]]}
        S, _, warns = parse_space(json.dumps(doc))
        assert S.dim == 1
        assert any("reduced" in w for w in warns)


@pytest.fixture
def spacefile(tmp_path):
    def make(family, params=(), seed=0):
        path = tmp_path / ("%s.json" % family)
        rc = main(["gen", family, *map(str, params), "--seed", str(seed),
                   "-o", str(path)])
        assert rc == 0
        return str(path)
    return make


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    return rc, json.loads(out)


class TestCli:
    def test_check(self, capsys, spacefile):
        rc, rep = run(capsys, ["check", spacefile("lambda", [3])])
        assert rc == 0 and rep["closed"] is True

    def test_sdit_singular(self, capsys, spacefile):
        rc, rep = run(capsys, ["sdit", spacefile("lambda", [3])])
        assert rc == 0
        assert rep["verdict"] == "Singular"
        assert rep["max_rank_over_hits"] == 2

    def test_sdit_nonsingular_witness(self, capsys, spacefile):
        rc, rep = run(capsys, ["sdit", spacefile("sl-standard", [2])])
        assert rc == 0
        assert rep["verdict"] == "NonSingular"
        assert rep["witness_rank"] == 2

    def test_maxrank(self, capsys, spacefile):
        rc, rep = run(capsys, ["maxrank", spacefile("lambda", [3])])
        assert rc == 0 and rep["max_rank"] == 2

    def test_maxrank_rejects_non_semisimple(self, capsys, spacefile):
        rc, rep = run(capsys, ["maxrank", spacefile("heisenberg")])
        assert rc == 1 and rep["error"] == "not-semisimple"

    def test_cartan(self, capsys, spacefile):
        rc, rep = run(capsys, ["cartan", spacefile("sl-standard", [3])])
        assert rc == 0
        assert rep["dim"] == 2 and rep["verified"] is True

    def test_weights(self, capsys, spacefile):
        rc, rep = run(capsys, ["weights", spacefile("adjoint", ["sl2"])])
        assert rc == 0
        vals = sorted(w["weight"][0] for w in rep["weights"])
        assert vals == ["-2", "0", "2"]
        assert rep["verdict"] == "Singular"

    def test_weights_unsupported_spectrum(self, capsys, spacefile):
        rc, rep = run(capsys, ["weights", spacefile("lambda", [3])])
        assert rc == 1 and rep["error"] == "unsupported-spectrum"

    def test_shrunk_yes(self, capsys, spacefile):
        rc, rep = run(capsys, ["shrunk", spacefile("middle-trivial")])
        assert rc == 0
        assert rep["answer"] == "yes" and rep["trivial_factor_index"] == 1

    def test_shrunk_undetermined_exit_code(self, capsys, tmp_path):
        doc = {"format_version": "1", "field": "Q", "n": 2,
               "basis": [[["0", "1"], ["-1", "0"]]]}
        path = tmp_path / "rot.json"
        path.write_text(json.dumps(doc))
        rc, rep = run(capsys, ["shrunk", str(path)])
        assert rc == 2 and rep["answer"] == "undetermined"

    def test_ncrk_bf(self, capsys, spacefile):
        rc, rep = run(capsys, ["ncrk-bf", spacefile("lambda", [3]), "--field", "gf3"])
        assert rc == 0
        assert rep["ncrk"] == 3 and rep["max_deficit"] == 0

    def test_compseries(self, capsys, spacefile):
        rc, rep = run(capsys, ["compseries", spacefile("middle-trivial")])
        assert rc == 0
        assert rep["chain_dims"] == [0, 1, 2, 3]
        assert [f["trivial"] for f in rep["factors"]] == [False, True, False]

    def test_linker(self, capsys, spacefile):
        rc, rep = run(capsys, ["linker", spacefile("adjoint", ["sl2"]),
                               "--degree", "1", "--side", "r"])
        assert rc == 0
        assert rep["found"] is True and rep["verified"] is True

    def test_linker_none(self, capsys, spacefile):
        rc, rep = run(capsys, ["linker", spacefile("sl-standard", [2])])
        assert rc == 0 and rep["found"] is False

    def test_input_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{broken")
        rc, rep = run(capsys, ["sdit", str(path)])
        assert rc == 1 and rep["error"] == "input-error"

    def test_missing_file(self, capsys):
        rc, rep = run(capsys, ["sdit", "/nonexistent/space.json"])
        assert rc == 1 and rep["error"] == "input-error"

    def test_not_lie_algebra(self, capsys, spacefile):
        rc, rep = run(capsys, ["sdit", spacefile("example2-random", [4], seed=1)])
        assert rc == 1 and rep["error"] == "not-lie-algebra"

    def test_gen_to_stdout(self, capsys):
        rc = main(["gen", "lambda", "3"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["n"] == 3 and len(doc["basis"]) == 3

    def test_stdin_pipe(self, capsys, monkeypatch):
        import io
        rc = main(["gen", "sl-standard", "2"])
        text = capsys.readouterr().out
        monkeypatch.setattr("sys.stdin", io.StringIO(text))
        rc, rep = run(capsys, ["sdit", "-"])
        assert rc == 0 and rep["verdict"] == "NonSingular"

    def test_deterministic_reports(self, capsys, spacefile):
        path = spacefile("lambda", [4])
        _, rep1 = run(capsys, ["sdit", path])
        _, rep2 = run(capsys, ["sdit", path])
        rep1.pop("timing_ms")
        rep2.pop("timing_ms")
        assert rep1 == rep2
