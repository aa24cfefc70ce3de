import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyceq import document
from cyceq.cli import WordSyntaxError, format_word, main, parse_word
from cyceq.equalizer import equalize
from cyceq.insertion import verify_certificate
from cyceq.words import Word

import worked_examples as P


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


# ---------- word syntax ----------


class TestParseWord:
    def test_auto_chars(self):
        assert parse_word("12344") == Word("12344")

    def test_auto_tokens(self):
        assert parse_word("0 1, 2 ,3") == Word("0123")
        assert parse_word("ab cd") == Word(["ab", "cd"])

    def test_forced_modes(self):
        assert parse_word("ab", "tokens") == Word(["ab"])
        assert parse_word("ab", "chars") == Word("ab")

    def test_graphemes(self):
        # e + combining acute is one letter
        assert len(parse_word("éa", "chars")) == 2

    def test_empty(self):
        assert parse_word("") == Word()
        assert parse_word("   ", "tokens") == Word()

    def test_empty_token(self):
        with pytest.raises(WordSyntaxError) as exc:
            parse_word("a,,b")
        assert exc.value.position == 1

    def test_separator_in_chars(self):
        with pytest.raises(WordSyntaxError) as exc:
            parse_word("ab c", "chars")
        assert exc.value.position == 2

    @given(st.lists(st.sampled_from(["a", "bc", "0", "12", "é"]), max_size=8))
    def test_tokens_roundtrip(self, tokens):
        w = Word(tokens)
        assert parse_word(format_word(w, "tokens"), "tokens") == w

    @given(st.text(alphabet="abc01", max_size=10))
    def test_chars_roundtrip(self, text):
        w = parse_word(text, "chars")
        assert format_word(w, "chars") == text
        assert parse_word(format_word(w, "chars"), "chars") == w


# ---------- check ----------


def test_check_yes():
    code, out, _ = run("check", "12344", "42431")
    assert code == 0
    assert "YES" in out
    assert "Parikh(u) = {1:1, 2:1, 3:1, 4:2}" in out


def test_check_no():
    code, out, _ = run("check", "01", "11")
    assert code == 1
    assert out.strip().endswith("NO")


def test_check_empty():
    code, out, _ = run("check", "", "")
    assert code == 0 and "YES" in out


def test_check_length_mismatch():
    assert run("check", "01", "011")[0] == 1


def test_check_parse_error():
    code, _, err = run("check", "a,,b", "ab")
    assert code == 2
    assert "token 1" in err


def test_usage_error():
    assert run("check", "01")[0] == 2
    assert run("frobnicate")[0] == 2


# ---------- equalize ----------


def test_equalize_tables_example1():
    code, out, _ = run("equalize", "0 1 2 3 4", "3 0 4 2 1", "--tables")
    assert code == 0
    block_rows = [line for line in out.splitlines() if line.startswith("u' ")]
    cells = [c.rstrip("*") for c in block_rows[-1].split("|", 1)[1].replace("|", " ").split()]
    assert cells == list(P.EX1_U)
    a_rows = [line for line in out.splitlines() if line.startswith("a[1]_i")]
    cells = [c.rstrip("*") for c in a_rows[0].split("|", 1)[1].replace("|", " ").split()]
    assert cells == list(P.EX1_A)
    assert "0*" in block_rows[-1]


def test_equalize_marker():
    code, out, _ = run("equalize", "012", "120", "--tables", "--marker", "!")
    assert code == 0
    assert "!" in out and "*" not in out


def test_equalize_single_letter(tmp_path):
    path = tmp_path / "cert.json"
    code, _, _ = run("equalize", "0", "0", "--json", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["offset"] == 0
    assert doc["expanded_length"] == 1


def test_equalize_example2_stdout():
    code, out, _ = run("equalize", "0 1 2 3 4", "3 4 0 2 1", "--json", "-")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == "1"
    assert doc["expanded_length"] == 50
    assert doc["offset"] == 12
    assert "".join(doc["u_expanded"]) == P.EX2_U
    assert doc["construction"]["cycles"] == [[0, 3, 2], [1, 4]]


def test_equalize_mismatch():
    code, out, err = run("equalize", "aab", "abb")
    assert code == 1
    assert "'a'" in err


# ---------- verify ----------


@pytest.fixture
def example1_doc(tmp_path):
    path = tmp_path / "ex1.json"
    assert run("equalize", "01234", "30421", "--json", str(path))[0] == 0
    return path


def test_verify_roundtrip(example1_doc):
    code, out, _ = run("verify", str(example1_doc))
    assert code == 0
    assert out.strip() == "valid"


def test_verify_perturbed_offset(example1_doc):
    doc = json.loads(example1_doc.read_text())
    doc["offset"] += 1
    example1_doc.write_text(json.dumps(doc))
    code, out, _ = run("verify", str(example1_doc))
    assert code == 1
    assert "shift mismatch" in out


def test_verify_truncated(example1_doc):
    text = example1_doc.read_text()
    example1_doc.write_text(text[: len(text) // 2])
    assert run("verify", str(example1_doc))[0] == 2


@pytest.mark.parametrize(
    "edit",
    [
        lambda d: d.pop("u"),
        lambda d: d.update(schema_version="2"),
        lambda d: d.update(distinguished=["x"]),
        lambda d: d.update(expanded_length=3),
        lambda d: d.update(offset=-1),
        lambda d: d.update(u_expanded=["a b"]),
    ],
)
def test_verify_malformed(example1_doc, edit):
    doc = json.loads(example1_doc.read_text())
    edit(doc)
    example1_doc.write_text(json.dumps(doc))
    assert run("verify", str(example1_doc))[0] == 2


def test_verify_missing_file(tmp_path):
    assert run("verify", str(tmp_path / "nope.json"))[0] == 2


def test_verify_handwritten(tmp_path):
    doc = {
        "schema_version": "1",
        "u": list("12344"),
        "v": list("42431"),
        "u_expanded": list("123124424"),
        "v_expanded": list("424123124"),
        "distinguished": [0, 1, 2, 5, 6],
        "insertion_segments": [[], [], [], ["1", "2"], [], ["2", "4"]],
        "offset": 6,
        "expanded_length": 9,
    }
    path = tmp_path / "handwritten.json"
    path.write_text(json.dumps(doc))
    assert run("verify", str(path))[0] == 0


@given(st.lists(st.sampled_from(["a", "b", "cc"]), max_size=6), st.randoms(use_true_random=False))
def test_document_roundtrip(letters, rnd):
    v = letters[:]
    rnd.shuffle(v)
    cert = equalize(letters, v)
    back = document.loads(document.dumps(cert))
    assert back == cert
    assert verify_certificate(back)


# ---------- oracle ----------


def test_oracle_found():
    code, out, _ = run("oracle", "123", "132", "--max-insert", "2")
    assert code == 0
    assert "found: 1 inserted" in out


def test_oracle_zero():
    code, out, _ = run("oracle", "01", "10", "--max-insert", "0")
    assert code == 0
    assert "found: 0 inserted" in out


def test_oracle_not_found():
    code, out, _ = run("oracle", "01", "11", "--max-insert", "3")
    assert code == 1
    assert "not found" in out


def test_oracle_alphabet():
    code, out, _ = run("oracle", "123", "132", "--max-insert", "1", "--alphabet", "9")
    assert code == 1
    code, out, _ = run("oracle", "123", "132", "--max-insert", "1", "--alphabet", "1,9")
    assert code == 0


def test_oracle_infeasible():
    code, _, err = run("oracle", "01234567", "76543210", "--max-insert", "9", "--node-limit", "1000")
    assert code == 2
    assert "nodes" in err


def test_oracle_length_mismatch():
    assert run("oracle", "01", "0")[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cyceq.cli", "check", "12344", "42431"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "YES" in proc.stdout
