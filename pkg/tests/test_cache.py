import logging

import pytest

from klarner import cache
from klarner.enumeration import census
from klarner.recurrences import compute_fg
from klarner.tables import CountTable


@pytest.fixture
def a_table():
    return census(10, classify=False).table("A")


def test_round_trip(tmp_path, a_table):
    cache.store(a_table, tmp_path)
    assert cache.load("A", 10, tmp_path) == a_table


def test_file_format(tmp_path, a_table):
    path = cache.store(a_table, tmp_path)
    lines = path.read_text().splitlines()
    label, max_n, digest = lines[0].split()
    assert (label, max_n, len(digest)) == ("A", "10", 64)
    assert lines[1] == "1\t1"
    assert lines[-1] == "10\t36446"


def test_tampered_digit_is_ignored(tmp_path, a_table, caplog):
    path = cache.store(a_table, tmp_path)
    path.write_text(path.read_text().replace("36446", "36447"))
    with caplog.at_level(logging.WARNING):
        assert cache.load("A", 10, tmp_path) is None
    assert "checksum mismatch" in caplog.text


@pytest.mark.parametrize(
    "text",
    [
        "",
        "A 2\n1\t1\n",
        "Q 1 00\n1\t1\n",
        "garbage",
    ],
)
def test_malformed_files_rejected(tmp_path, text):
    (tmp_path / "A-fixed.tsv").write_text(text)
    assert cache.load("A", 1, tmp_path) is None


def test_valid_checksum_but_bad_body_rejected():
    import hashlib

    body = "1\t1\n3\t6\n"
    text = f"A 3 {hashlib.sha256(body.encode()).hexdigest()}\n{body}"
    with pytest.raises(cache.CacheError):
        cache.loads(text)
    body = "1\tx\n"
    with pytest.raises(cache.CacheError):
        cache.loads(f"A 1 {hashlib.sha256(body.encode()).hexdigest()}\n{body}")


def test_prefix_reuse(tmp_path):
    F, G = compute_fg(50)
    cache.store(G, tmp_path)
    assert cache.load("G", 20, tmp_path) == G.prefix(20)
    assert cache.load("G", 51, tmp_path) is None


def test_store_keeps_longer_table(tmp_path):
    _, G = compute_fg(30)
    cache.store(G, tmp_path)
    cache.store(G.prefix(10), tmp_path)
    assert cache.load("G", 30, tmp_path) == G


def test_env_var(tmp_path, monkeypatch, a_table):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path / "envdir"))
    cache.store(a_table)
    assert (tmp_path / "envdir" / "A-fixed.tsv").exists()
    assert cache.load("A", 5) == a_table.prefix(5)


def test_f_and_F_use_distinct_files(tmp_path):
    F, _ = compute_fg(5)
    f = CountTable("f", (1, 1, 3, 10))
    cache.store(F, tmp_path)
    cache.store(f, tmp_path)
    assert cache.load("F", 5, tmp_path) == F
    assert cache.load("f", 3, tmp_path) == f


def test_count_table_validation():
    with pytest.raises(ValueError):
        CountTable("A", (1, 0))
    with pytest.raises(ValueError):
        CountTable("Z", (1,))
    with pytest.raises(ValueError):
        CountTable.from_mapping("A", {1: 1, 3: 6})
    t = CountTable.from_mapping("A", {1: 1, 2: 2})
    assert t.base == 1 and t.max_n == 2 and t[2] == 2
    with pytest.raises(KeyError):
        t[0]
