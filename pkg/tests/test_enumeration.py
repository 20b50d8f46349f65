import pytest

from qshadow import errors, fixtures as fx, search, shadows as sh


def canonical_set(found):
    return {sh.canonical_shadow(a).rows for a in found}


def test_counts_n3():
    assert len(search.enumerate_shadows(3, "basic_tame")) == 5
    assert len(search.enumerate_shadows(3, "essential")) == 4


def test_counts_n4():
    assert len(search.enumerate_shadows(4, "basic_tame")) == 12
    assert len(search.enumerate_shadows(4, "essential")) == 7


def test_sets_match_reference_n3():
    assert canonical_set(search.enumerate_shadows(3, "basic_tame")) == fx.basic_reference(3)
    assert canonical_set(search.enumerate_shadows(3, "essential")) == fx.essential_reference(3)


def test_sets_match_reference_n4():
    assert canonical_set(search.enumerate_shadows(4, "basic_tame")) == fx.basic_reference(4)
    assert canonical_set(search.enumerate_shadows(4, "essential")) == fx.essential_reference(4)


def test_small_sizes():
    assert len(search.enumerate_shadows(1, "basic_tame")) == 1
    # a 2x2 skew-symmetric matrix has a one-signed nonzero row, so only
    # the zero matrix survives the sign tests
    found = search.enumerate_shadows(2, "basic_tame")
    assert [a.rows for a in found] == [((0, 0), (0, 0))]


def test_out_of_range():
    with pytest.raises(errors.TooLarge):
        search.enumerate_shadows(0, "basic_tame")
    with pytest.raises(errors.TooLarge):
        search.enumerate_shadows(7, "basic_tame")
    with pytest.raises(ValueError):
        search.enumerate_shadows(3, "everything")


def test_results_are_canonical_and_sorted():
    found = search.enumerate_shadows(4, "essential")
    rows = [a.rows for a in found]
    assert rows == sorted(rows)
    for a in found:
        assert sh.canonical_shadow(a).rows == a.rows


def test_enumerated_essentials_pass_report():
    for a in search.enumerate_shadows(4, "essential"):
        assert sh.full_report(a).is_essential


def test_thread_determinism():
    single = search.enumerate_shadows(4, "essential", threads=1)
    multi = search.enumerate_shadows(4, "essential", threads=2)
    assert [a.rows for a in single] == [a.rows for a in multi]


def test_write_result(tmp_path):
    found = search.enumerate_shadows(3, "essential")
    path = tmp_path / "out.json"
    search.write_result(path, 3, "essential", found)
    text = path.read_text()
    assert '"count": 4' in text
    search.write_result(tmp_path / "again.json", 3, "essential", found)
    assert (tmp_path / "again.json").read_text() == text
