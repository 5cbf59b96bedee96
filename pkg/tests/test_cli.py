"""Command-line interface: output formats, exit codes, cache behavior, and
byte-exact agreement with the frozen reference tables."""

from __future__ import annotations

import json
import os
from pathlib import Path

import pytest

from ennola.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestPair:
    def test_split_unipotent_text(self, capsys, cache_dir):
        rc, out, _ = run(
            capsys, "pair", "--which", "U", "--mu", "1^4,1^4,1^4",
            "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        assert out == "q^3 + 2*q + 1\n"

    def test_interpolation_text(self, capsys, cache_dir):
        rc, out, _ = run(
            capsys, "pair", "--which", "T", "--mu", "2,2,2",
            "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        assert out == "u\n"

    def test_kronecker_needs_no_context(self, capsys, tmp_path):
        # point the cache at a fresh directory: nothing may be created
        cache = str(tmp_path / "kron-cache")
        rc, out, _ = run(
            capsys, "pair", "--which", "kron", "--mu", "2.1,2.1,2.1",
            "--cache-dir", cache,
        )
        assert rc == EXIT_OK
        assert out == "1\n"
        assert not os.path.exists(cache)

    def test_generic_with_type_literal(self, capsys, cache_dir):
        rc, out, _ = run(
            capsys, "pair", "--which", "V", "--type", "2:1,2:1,2:1",
            "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        # a polynomial in q came out; sanity: it evaluates to an integer
        assert out.strip()

    def test_json_format(self, capsys, cache_dir):
        rc, out, _ = run(
            capsys, "pair", "--which", "V", "--mu", "1^3,1^3,2.1",
            "--format", "json", "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        obj = json.loads(out)
        assert obj["which"] == "V"
        assert obj["k"] == 3
        assert obj["n"] == 3
        assert obj["mu"] == ["1^3", "1^3", "2.1"]
        assert obj["text"] == "1"
        assert obj["poly"] == [["1", 0, 0]]

    def test_csv_format(self, capsys, cache_dir):
        rc, out, _ = run(
            capsys, "pair", "--which", "V", "--mu", "1^3,1^3,2.1",
            "--format", "csv", "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "mu1,mu2,mu3,polynomial"
        assert lines[1] == "1^3,1^3,2.1,1"

    def test_tex_format(self, capsys, cache_dir):
        rc, out, _ = run(
            capsys, "pair", "--which", "U", "--mu", "1^4,1^4,1^4",
            "--format", "tex", "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        assert out == "$q^3 + 2q + 1$\n"


class TestPairErrors:
    def test_bad_partition_literal(self, capsys, cache_dir):
        rc, _, err = run(
            capsys, "pair", "--which", "U", "--mu", "1.2,3,3",
            "--cache-dir", cache_dir,
        )
        assert rc == EXIT_USAGE
        assert "error:" in err

    def test_size_mismatch(self, capsys, cache_dir):
        rc, _, err = run(
            capsys, "pair", "--which", "kron", "--mu", "2.1,2",
            "--cache-dir", cache_dir,
        )
        assert rc == EXIT_USAGE
        assert "error:" in err

    def test_k_mismatch(self, capsys, cache_dir):
        rc, _, err = run(
            capsys, "pair", "--which", "kron", "--mu", "2.1,2.1,2.1",
            "--k", "4", "--cache-dir", cache_dir,
        )
        assert rc == EXIT_USAGE
        assert "does not match" in err

    def test_type_only_for_generic(self, capsys, cache_dir):
        rc, _, err = run(
            capsys, "pair", "--which", "U", "--type", "1:1,1:1,1:1",
            "--cache-dir", cache_dir,
        )
        assert rc == EXIT_USAGE
        assert "only valid" in err

    def test_missing_mu(self, capsys, cache_dir):
        rc, _, err = run(capsys, "pair", "--which", "U", "--cache-dir", cache_dir)
        assert rc == EXIT_USAGE

    def test_unknown_which_is_argparse_error(self, cache_dir):
        with pytest.raises(SystemExit) as exc:
            main(["pair", "--which", "W", "--mu", "1,1,1", "--cache-dir", cache_dir])
        assert exc.value.code == EXIT_USAGE


class TestTable:
    def test_text_table_generic_n3(self, capsys, cache_dir):
        rc, out, _ = run(
            capsys, "table", "--which", "V", "--n", "3",
            "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        lines = out.splitlines()
        # every nonzero row is printed; n=3 has exactly these 2 rows
        assert lines == [
            "(1,1,1), (1,1,1), (1,1,1) → q",
            "(1,1,1), (1,1,1), (2,1) → 1",
        ]

    def test_csv_table(self, capsys, cache_dir):
        rc, out, _ = run(
            capsys, "table", "--which", "V", "--n", "3", "--format", "csv",
            "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "mu1,mu2,mu3,polynomial"
        assert len(lines) == 3

    def test_json_table(self, capsys, cache_dir):
        rc, out, _ = run(
            capsys, "table", "--which", "V", "--n", "2", "--format", "json",
            "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        obj = json.loads(out)
        assert obj["which"] == "V"
        assert obj["k"] == 3 and obj["n"] == 2
        assert obj["rows"]
        for row in obj["rows"]:
            assert set(row) >= {"mu", "poly", "text"}

    def test_jobs_output_identical(self, capsys, cache_dir):
        rc1, out1, _ = run(
            capsys, "table", "--which", "U", "--n", "3",
            "--cache-dir", cache_dir,
        )
        rc2, out2, _ = run(
            capsys, "table", "--which", "U", "--n", "3", "--jobs", "4",
            "--cache-dir", cache_dir,
        )
        assert rc1 == rc2 == EXIT_OK
        assert out1 == out2

    def test_kron_table(self, capsys, cache_dir):
        rc, out, _ = run(
            capsys, "table", "--which", "kron", "--n", "2",
            "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        # the only nonzero size-2 entries are the four symmetric-square rows
        lines = out.splitlines()
        assert lines
        for line in lines:
            assert line.endswith("→ 1")


class TestTexGoldens:
    """CLI tex output must agree byte-for-byte with the frozen reference
    files for every table small enough to recompute quickly here; the n = 5
    tables are covered through the acceptance tests."""

    @pytest.mark.parametrize(
        "which,n",
        [("V", 2), ("V", 3), ("V", 4)]
        + [("U", n) for n in range(1, 5)]
        + [("Uprime", n) for n in range(1, 5)],
    )
    def test_matches_reference_file(self, capsys, cache_dir, which, n):
        rc, out, _ = run(
            capsys, "table", "--which", which, "--n", str(n),
            "--format", "tex", "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        expected = (DATA / f"{which}_n{n}.tex").read_text()
        assert out == expected

    def test_reference_files_match_transcribed_tables(self):
        # the .tex files are a straight rendering of the transcribed dicts;
        # regenerating them in memory must reproduce the files exactly
        import regenerate_goldens

        for which, n, text in regenerate_goldens.render_all():
            path = DATA / f"{which}_n{n}.tex"
            assert path.read_text() == text, (which, n)


class TestVerify:
    def test_green_run(self, capsys, cache_dir):
        rc, out, _ = run(capsys, "verify", "--n", "2", "--cache-dir", cache_dir)
        assert rc == EXIT_OK
        assert "7 identity families, 0 failures" in out
        assert out.count("ok ") == 7

    def test_json_format(self, capsys, cache_dir):
        rc, out, _ = run(
            capsys, "verify", "--n", "2", "--format", "json",
            "--cache-dir", cache_dir,
        )
        assert rc == EXIT_OK
        obj = json.loads(out)
        assert obj["ok"] is True

    def test_detects_seeded_fault(self, capsys, cache_dir, monkeypatch):
        # negative control: corrupt one polynomial family and expect a
        # nonzero exit with a counterexample in the report
        import ennola.multiplicities as mult

        real = mult.Uprime_poly
        monkeypatch.setattr(
            mult, "Uprime_poly", lambda ctx, mu: real(ctx, mu).scale(-1) + mult.ONE
        )
        rc, out, _ = run(capsys, "verify", "--n", "2", "--cache-dir", cache_dir)
        assert rc == EXIT_VERIFY
        assert "FAIL" in out
        assert "failures" in out.splitlines()[-1]
        assert "0 failures" not in out.splitlines()[-1]


class TestCache:
    def test_build_then_reuse(self, capsys, tmp_path):
        cache = str(tmp_path / "c")
        rc, out, _ = run(capsys, "cache", "build", "--n", "2", "--cache-dir", cache)
        assert rc == EXIT_OK
        assert out.count("wrote ") == 2
        files = sorted(os.listdir(cache))
        assert files == ["psi_k3_n1.json", "psi_k3_n2.json"]
        before = {f: (Path(cache) / f).read_bytes() for f in files}
        rc2, _, _ = run(capsys, "cache", "build", "--n", "2", "--cache-dir", cache)
        assert rc2 == EXIT_OK
        after = {f: (Path(cache) / f).read_bytes() for f in files}
        assert before == after  # rebuilding is byte-idempotent

    def test_clear(self, capsys, tmp_path):
        cache = str(tmp_path / "c")
        run(capsys, "cache", "build", "--n", "1", "--cache-dir", cache)
        rc, out, _ = run(capsys, "cache", "clear", "--cache-dir", cache)
        assert rc == EXIT_OK
        assert "removed 1" in out
        assert os.listdir(cache) == []

    def test_clear_scoped_to_k(self, capsys, tmp_path):
        cache = str(tmp_path / "c")
        run(capsys, "cache", "build", "--n", "1", "--cache-dir", cache)
        run(capsys, "cache", "build", "--n", "1", "--k", "4", "--cache-dir", cache)
        rc, out, _ = run(capsys, "cache", "clear", "--k", "4", "--cache-dir", cache)
        assert rc == EXIT_OK
        assert os.listdir(cache) == ["psi_k3_n1.json"]

    def test_build_requires_n(self, capsys, tmp_path):
        rc, _, err = run(capsys, "cache", "build", "--cache-dir", str(tmp_path))
        assert rc == EXIT_USAGE
        assert "--n is required" in err

    def test_unwritable_cache_dir_is_io_error(self, capsys, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("")
        rc, _, err = run(
            capsys, "cache", "build", "--n", "1",
            "--cache-dir", str(blocker / "nested"),
        )
        assert rc == EXIT_IO
        assert "error:" in err

    def test_corrupt_cache_warns_and_recomputes(self, capsys, tmp_path):
        from ennola.multiplicities import cache_path

        cache = str(tmp_path / "c")
        os.makedirs(cache)
        with open(cache_path(cache, 3, 2), "w") as fh:
            fh.write('{"version": -99}')
        rc, out, err = run(
            capsys, "pair", "--which", "V", "--mu", "1^2,1^2,2",
            "--cache-dir", cache,
        )
        assert rc == EXIT_OK
        assert out.strip()  # answer still produced
        assert "ignoring incompatible cache file" in err
