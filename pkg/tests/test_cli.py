import json
import logging
from importlib import resources

import pytest

from wellcovered.cache import CensusCache
from wellcovered.circulant import ConnectionSet, build_circulant, members
from wellcovered.classify import ClassificationRecord, classify
from wellcovered.cli import (EXIT_DIFF, EXIT_NO_GOLDEN, EXIT_OK, EXIT_PARSE, EXIT_UNKNOWN, collect,
                             main)
from wellcovered.decomp import find_shelling, format_certificate, parse_certificate
from wellcovered.simplex import independence_complex
from wellcovered.table import golden_path, load_golden

PRINTED = resources.files("wellcovered") / "data" / "c16_1_4_8_shelling.txt"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def prefix_oracle(facets):
    """First (i, j) with no k < i such that F_i minus F_k is one vertex outside F_j."""
    for i in range(1, len(facets)):
        fi = set(facets[i])
        for j in range(i):
            ok = False
            for k in range(i):
                diff = fi - set(facets[k])
                if len(diff) == 1 and not diff & set(facets[j]):
                    ok = True
                    break
            if not ok:
                return i + 1, j + 1
    return None


class TestClassifyCommand:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "classify", "16:1,4,8")
        assert code == EXIT_OK
        assert "label            S" in out and "1-well-covered   True" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "classify", "4:1", "--json")
        d = json.loads(out)
        assert code == EXIT_OK
        assert (d["label"], d["connected"], d["well_covered"], d["alpha"]) == ("B", True, True, 2)

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "classify", "5:7")
        assert code == EXIT_PARSE
        assert "generator 7 exceeds floor(5/2)" in err and "position" in err

    def test_budget_unknown(self, capsys):
        code, out, _ = run(capsys, "classify", "16:1,4,8", "--budget", "3")
        assert code == EXIT_UNKNOWN and "hit budget" in out

    def test_field_flag(self, capsys):
        code, out, _ = run(capsys, "classify", "10:1,4", "--field", "GF(2)", "--json")
        assert json.loads(out)["field"] == "GF(2)" and code == EXIT_OK


class TestCensusCommand:
    def test_first_rows(self, capsys):
        code, out, _ = run(capsys, "census", "--n-min", "3", "--n-max", "5", "--well-covered-only", "--json")
        rows = [json.loads(line) for line in out.splitlines()]
        assert code == EXIT_OK
        assert [(r["n"], r["s"]) for r in rows] == [(3, [1]), (4, [1]), (4, [2]), (4, [1, 2]),
                                                     (5, [1]), (5, [1, 2])]

    def test_n8(self, capsys):
        _, out, _ = run(capsys, "census", "--n-min", "8", "--n-max", "8", "--json")
        labels = {tuple(r["s"]): r["label"] for r in map(json.loads, out.splitlines())}
        assert labels[(2,)] == "N" and labels[(1, 4)] == "B"

    def test_n3(self, capsys):
        _, out, _ = run(capsys, "census", "--n-min", "3", "--n-max", "3")
        assert out.splitlines() == [out.splitlines()[0]]
        assert out.startswith("C_3(1)") and " V " in out and " 1  " in out

    def test_bad_range(self, capsys):
        assert run(capsys, "census", "--n-min", "6", "--n-max", "4")[0] == EXIT_PARSE

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "census", "--n-min", "3", "--n-max", "9", "--json", "--no-cache")
        for line in out.splitlines():
            rec = ClassificationRecord.from_dict(json.loads(line))
            assert rec == classify(build_circulant(rec.spec))
            assert json.dumps(rec.to_dict(), sort_keys=True) == line

    def test_jobs_deterministic(self, capsys):
        outs = [run(capsys, "census", "--n-min", "3", "--n-max", "10", "--json", "--no-cache",
                    "--jobs", str(k))[1] for k in (1, 2, 3)]
        assert outs[0] == outs[1] == outs[2]


class TestCache:
    def test_cold_and_warm_identical(self, tmp_path):
        cache = CensusCache(tmp_path)
        cold = collect(3, 10, cache=cache)
        warm_cache = CensusCache(tmp_path)
        assert len(warm_cache) == len(cold)
        assert collect(3, 10, cache=warm_cache) == cold

    def test_corrupt_line_discarded(self, tmp_path, caplog):
        cache = CensusCache(tmp_path)
        collect(3, 6, cache=cache)
        lines = cache.path.read_text().splitlines()
        lines[2] = lines[2].replace('"label":"', '"label":"X')
        cache.path.write_text("\n".join(lines) + "\n")
        with caplog.at_level(logging.WARNING):
            reread = CensusCache(tmp_path)
        assert reread.discarded == 1 and len(reread) == len(lines) - 1
        assert "discarded" in caplog.text
        assert collect(3, 6, cache=reread) == collect(3, 6)

    def test_env_var(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("WELLCOVERED_CACHE_DIR", str(tmp_path / "envcache"))
        run(capsys, "census", "--n-min", "3", "--n-max", "4")
        assert (tmp_path / "envcache" / "census.jsonl").exists()

    def test_force_recomputes(self, tmp_path, capsys):
        run(capsys, "census", "--n-min", "3", "--n-max", "4", "--cache-dir", str(tmp_path))
        size = (tmp_path / "census.jsonl").stat().st_size
        run(capsys, "census", "--n-min", "3", "--n-max", "4", "--cache-dir", str(tmp_path))
        assert (tmp_path / "census.jsonl").stat().st_size == size
        run(capsys, "census", "--n-min", "3", "--n-max", "4", "--cache-dir", str(tmp_path), "--force")
        assert (tmp_path / "census.jsonl").stat().st_size == 2 * size


class TestTableCommand:
    def test_n12(self, capsys):
        code, out, _ = run(capsys, "table", "--n-max", "12")
        assert code == EXIT_OK
        assert out.splitlines()[-1] == f"{len(load_golden(n_max=12))} rows compared, 0 differences"

    def test_perturbed_label(self, tmp_path, capsys):
        text = golden_path().read_text().replace("8:1,4\t-\tB", "8:1,4\t-\tV")
        path = tmp_path / "golden.tsv"
        path.write_text(text)
        code, out, _ = run(capsys, "table", "--n-max", "8", "--golden", str(path))
        assert code == EXIT_DIFF
        changed = [line for line in out.splitlines()
                   if line[:1] in "+-" and not line.startswith(("+++", "---"))]
        assert changed == ["-8:1,4\t-\tV\t-", "+8:1,4\t-\tB\t-"]
        assert out.splitlines()[-1].endswith("1 differences")

    def test_missing_golden(self, tmp_path, capsys):
        code, _, err = run(capsys, "table", "--golden", str(tmp_path / "nope.tsv"))
        assert code == EXIT_NO_GOLDEN and "not found" in err


class TestVerifyShellingCommand:
    @pytest.fixture
    def certificate(self, tmp_path):
        c = independence_complex(build_circulant(ConnectionSet(16, (1, 4, 8))))
        path = tmp_path / "found.txt"
        path.write_text(format_certificate(find_shelling(c)))
        return path

    def test_found_certificate_passes(self, capsys, certificate):
        code, out, _ = run(capsys, "verify-shelling", "16:1,4,8", str(certificate))
        assert code == EXIT_OK and out.startswith("PASS: 80 facets")

    @pytest.mark.parametrize("source", ["found", "printed"])
    def test_swapped_matches_oracle(self, capsys, certificate, tmp_path, source):
        text = certificate.read_text() if source == "found" else PRINTED.read_text()
        facets = [members(f) for f in parse_certificate(text, 4)]
        facets[0], facets[1] = facets[1], facets[0]
        path = tmp_path / "swapped.txt"
        path.write_text("\n".join(" ".join(map(str, f)) for f in facets) + "\n")
        code, out, _ = run(capsys, "verify-shelling", "16:1,4,8", str(path))
        want = prefix_oracle(facets)
        if want is None:
            assert code == EXIT_OK
        else:
            assert code == EXIT_DIFF
            assert out.startswith(f"FAIL: facet {want[0]} ") and f"outside facet {want[1]}" in out

    def test_printed_matches_oracle(self, capsys):
        code, out, _ = run(capsys, "verify-shelling", "16:1,4,8", str(PRINTED))
        want = prefix_oracle([members(f) for f in parse_certificate(PRINTED.read_text(), 4)])
        assert want == (10, 1)
        assert code == EXIT_DIFF and out.startswith("FAIL: facet 10 ") and "outside facet 1" in out

    def test_missing_facet(self, capsys, tmp_path):
        lines = [" ".join(map(str, members(f))) for f in parse_certificate(PRINTED.read_text(), 4)]
        path = tmp_path / "short.txt"
        path.write_text("\n".join(lines[:-1]))
        code, _, err = run(capsys, "verify-shelling", "16:1,4,8", str(path))
        assert code == EXIT_PARSE and "79 facets given, 80 expected" in err

    def test_bad_size(self, capsys, tmp_path):
        path = tmp_path / "odd.txt"
        path.write_text("0 1 2 3 4")
        code, _, err = run(capsys, "verify-shelling", "16:1,4,8", str(path))
        assert code == EXIT_PARSE and "facets of size 4" in err

    def test_not_well_covered(self, capsys, tmp_path):
        path = tmp_path / "x.txt"
        path.write_text("0 2 4")
        assert run(capsys, "verify-shelling", "6:1", str(path))[0] == EXIT_PARSE
