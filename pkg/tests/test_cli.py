"""Command line behavior: output shape, exit codes, error reporting.

Runs the argument-to-exit-code path in process; the shipped fixture
collection gets a separate end-to-end subprocess test.
"""
import re

import pytest

from swvm.cli import run


@pytest.fixture
def collection(tmp_path):
    (tmp_path / "a.html").write_text(
        "<title>Optimize Disk</title><p>check</p>", encoding="utf-8"
    )
    (tmp_path / "b.html").write_text("<p>optimize check disk</p>", encoding="utf-8")
    (tmp_path / "c.html").write_text("<p>filler</p>", encoding="utf-8")
    (tmp_path / "docs.tsv").write_text(
        "a\twww.com\ta.html\nb\twww.com\tb.html\nc\twww.com\tc.html\n",
        encoding="utf-8",
    )
    (tmp_path / "syn.txt").write_text("optimize: improve\n", encoding="utf-8")
    (tmp_path / "none.txt").write_text("# no synonyms\n", encoding="utf-8")
    return tmp_path


def cli(capsys, *argv):
    code = run([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def build(capsys, collection, out="col.idx", thesaurus="syn.txt", *extra):
    code, _, err = cli(
        capsys,
        "index",
        "--manifest", collection / "docs.tsv",
        "--thesaurus", collection / thesaurus,
        "--out", collection / out,
        *extra,
    )
    assert code == 0, err
    return collection / out


def test_index_reports_what_it_wrote(collection, capsys):
    code, out, err = cli(
        capsys,
        "index",
        "--manifest", collection / "docs.tsv",
        "--thesaurus", collection / "syn.txt",
        "--out", collection / "col.idx",
    )
    assert code == 0
    assert err == ""
    assert out == f"indexed 3 documents -> {collection / 'col.idx'}\n"
    assert (collection / "col.idx").is_file()


def test_index_warns_about_skipped_documents(collection, capsys):
    with (collection / "docs.tsv").open("a", encoding="utf-8") as f:
        f.write("d\twww.com\tmissing.html\n")
    code, out, err = cli(
        capsys,
        "index",
        "--manifest", collection / "docs.tsv",
        "--thesaurus", collection / "syn.txt",
        "--out", collection / "col.idx",
    )
    assert code == 0
    assert "warning: skipped d: cannot read" in err
    assert out.startswith("indexed 3 documents")


def test_query_emits_ranked_tab_separated_lines(collection, capsys):
    idx = build(capsys, collection)
    code, out, err = cli(capsys, "query", "--index", idx, "--top", "5", "improve disk")
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert len(lines) == 2  # c never matches
    assert re.fullmatch(r"1\t0\.\d{4}\ta\twww\.com", lines[0])
    assert re.fullmatch(r"2\t0\.\d{4}\tb\twww\.com", lines[1])


def test_query_respects_top(collection, capsys):
    idx = build(capsys, collection)
    code, out, _ = cli(capsys, "query", "--index", idx, "--top", "1", "check")
    assert code == 0
    assert len(out.splitlines()) == 1


def test_query_with_no_match_prints_nothing(collection, capsys):
    idx = build(capsys, collection)
    code, out, err = cli(capsys, "query", "--index", idx, "--top", "5", "nonsense")
    assert (code, out, err) == (0, "", "")


def test_explain_prints_header_and_one_row_per_group(collection, capsys):
    idx = build(capsys, collection)
    code, out, err = cli(capsys, "explain", "--index", idx, "--doc", "a")
    assert code == 0, err
    lines = out.splitlines()
    assert lines[0] == "doc\ta"
    assert lines[1] == "url\twww.com"
    assert lines[2] == "scheme\tbtf-idf"
    assert re.fullmatch(r"norm\t\d+\.\d{4}", lines[3])
    assert lines[4] == "term\tsynonyms\tzones\tbtf\tidf\tweight"
    rows = [line.split("\t") for line in lines[5:]]
    assert len(rows) == 3  # optimize, disk, check
    assert all(len(row) == 6 for row in rows)
    by_term = {row[0]: row for row in rows}
    assert by_term["optimize"][1] == "improve"
    assert by_term["disk"][1] == "-"
    # an index loaded from disk has no per-zone counts to show
    assert all(row[2] == "-" for row in rows)


def test_explain_unknown_document_is_a_data_error(collection, capsys):
    idx = build(capsys, collection)
    code, out, err = cli(capsys, "explain", "--index", idx, "--doc", "zzz")
    assert code == 2
    assert out == ""
    assert err.startswith("error: unknown document id")


def test_compare_prefixes_results_for_each_index(collection, capsys):
    flat = build(capsys, collection, out="flat.idx", thesaurus="none.txt")
    boosted = build(capsys, collection, out="boosted.idx")
    code, out, err = cli(
        capsys,
        "compare", "--index-a", flat, "--index-b", boosted, "--top", "5", "improve",
    )
    assert code == 0, err
    lines = out.splitlines()
    # without the thesaurus nothing matches "improve", so only b lines
    assert lines and all(line.startswith("b\t") for line in lines)
    assert re.fullmatch(r"b\t1\t0\.\d{4}\ta\twww\.com", lines[0])


def test_compare_rejects_indexes_of_different_collections(collection, capsys):
    idx = build(capsys, collection)
    (collection / "small.tsv").write_text("a\twww.com\ta.html\n", encoding="utf-8")
    code, _, err = cli(
        capsys,
        "index",
        "--manifest", collection / "small.tsv",
        "--thesaurus", collection / "syn.txt",
        "--out", collection / "small.idx",
    )
    assert code == 0
    code, out, err = cli(
        capsys,
        "compare",
        "--index-a", idx,
        "--index-b", collection / "small.idx",
        "--top", "3", "disk",
    )
    assert code == 2
    assert err == "error: indexes cover different collections\n"


def test_boost_override_is_saved_in_the_index(collection, capsys):
    build(capsys, collection, "tuned.idx", "syn.txt", "--boost", "title=20,other=2")
    text = (collection / "tuned.idx").read_text(encoding="utf-8")
    assert "BOOST\ttitle=20.0\tmeta=16.0\th1=14.0\turl=18.0\tother=2.0" in text


def test_scheme_flag_selects_flat_weighting(collection, capsys):
    build(capsys, collection, "flat.idx", "syn.txt", "--scheme", "tf-idf")
    assert "SCHEME\ttf-idf" in (collection / "flat.idx").read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "argv,needle",
    [
        ([], "required"),
        (["bogus"], "invalid choice"),
        (["query", "--top", "5", "q"], "--index"),
        (["query", "--index", "x.idx", "q"], "--top"),
        (["query", "--index", "x.idx", "--top", "0", "q"], "at least 1"),
        (["query", "--index", "x.idx", "--top", "five", "q"], "not an integer"),
        (["index", "--manifest", "m", "--thesaurus", "t", "--out", "o",
          "--scheme", "bm25"], "invalid choice"),
        (["index", "--manifest", "m", "--thesaurus", "t", "--out", "o",
          "--boost", "title=0"], "must be positive"),
        (["index", "--manifest", "m", "--thesaurus", "t", "--out", "o",
          "--boost", "bogus=3"], "expected zone=value"),
        (["index", "--manifest", "m", "--thesaurus", "t", "--out", "o",
          "--boost", "title=x"], "not a number"),
    ],
)
def test_usage_errors_exit_1(capsys, argv, needle):
    code, out, err = cli(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err.startswith("error: ")
    assert needle in err


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["query", "--index", "missing.idx", "--top", "5", "q"], "cannot read index"),
        (["index", "--manifest", "missing.tsv", "--thesaurus", "t.txt",
          "--out", "o.idx"], "cannot read manifest"),
    ],
)
def test_data_errors_exit_2(tmp_path, capsys, argv, needle, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, err = cli(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error: ")
    assert needle in err


def test_corrupt_index_is_a_data_error(tmp_path, capsys):
    bad = tmp_path / "bad.idx"
    bad.write_text("garbage\n", encoding="utf-8")
    code, out, err = cli(capsys, "query", "--index", bad, "--top", "5", "q")
    assert code == 2
    assert "not an index file" in err


def test_help_exits_zero(capsys):
    code, out, _ = cli(capsys, "--help")
    assert code == 0
    assert "usage" in out
    code, out, _ = cli(capsys, "query", "--help")
    assert code == 0
    assert "--top" in out
