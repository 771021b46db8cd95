"""PD parsing, orientation, regions, and diagram predicates."""

import pytest

from tauknot.diagram import PlanarDiagram, decorate, mirror, parse_pd

from conftest import TREFOIL_PD, load_diagram


def test_parse_trefoil():
    d = parse_pd(TREFOIL_PD)
    assert d.n == 3
    assert d.edge_count == 6
    assert d.signs == [1, 1, 1]
    assert d.writhe == 3


def test_parse_unknot_token():
    d = parse_pd("U")
    assert d.n == 0
    assert d.writhe == 0
    assert d.is_alternating()
    assert d.is_reduced()


def test_parse_name_header():
    d = parse_pd("name: tref\n" + TREFOIL_PD)
    assert d.name == "tref"
    assert d.n == 3


def test_parse_json_forms():
    d = parse_pd('{"name": "k", "pd": [[1,4,2,5],[3,6,4,1],[5,2,6,3]]}')
    assert d.name == "k" and d.n == 3
    d2 = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]")
    assert d2.crossings == d.crossings


def test_malformed_token_named_in_error():
    with pytest.raises(ValueError) as e:
        parse_pd("X[1,4,2,5] X[3,6,oops,1]")
    assert "X[3,6,oops,1]" in str(e.value)


def test_empty_input_rejected():
    with pytest.raises(ValueError):
        parse_pd("   ")


def test_bad_label_multiplicity_rejected():
    # edge 4 appears three times
    with pytest.raises(Exception):
        PlanarDiagram([(1, 4, 2, 5), (3, 6, 4, 1), (5, 4, 6, 3)])


def test_single_component_required():
    # granny-square union: two trefoils with disjoint labels share no edge
    quads = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3),
             (7, 10, 8, 11), (9, 12, 10, 7), (11, 8, 12, 9)]
    with pytest.raises(Exception):
        PlanarDiagram(quads)


def test_region_count_is_euler():
    for name in ("3_1", "4_1", "7_6", "10_139"):
        d = load_diagram(name)
        assert len(d.regions) == d.n + 2


def test_edge_sides_are_distinct_regions():
    d = load_diagram("6_2")
    for e in d.incidences:
        left = d.edge_side_region[(e, "L")]
        right = d.edge_side_region[(e, "R")]
        assert left != right


def test_traversal_visits_every_edge_once(trefoil):
    dec = decorate(trefoil, 1)
    assert sorted(dec.eps) == sorted(trefoil.incidences)
    assert len(dec.eps) == trefoil.edge_count


def test_mirror_negates_signs_and_writhe(trefoil):
    m = mirror(trefoil)
    assert m.signs == [-1, -1, -1]
    assert m.writhe == -3
    assert mirror(m).crossings == trefoil.crossings


def test_kink_is_unreduced():
    k = parse_pd("X[1,1,2,2]")
    assert k.n == 1
    assert not k.is_reduced()


def test_alternating_predicate():
    assert load_diagram("7_4").is_alternating()
    assert not load_diagram("10_139").is_alternating()
    assert not load_diagram("10_161").is_alternating()


def test_reduced_predicate_on_corpus():
    for name in ("3_1", "4_1", "9_42", "10_139", "10_161"):
        assert load_diagram(name).is_reduced()


def test_pd_text_round_trip():
    for name in ("3_1", "9_42", "10_152"):
        d = load_diagram(name)
        assert parse_pd(d.to_pd_text()).crossings == d.crossings


def test_decorate_rejects_unknown_edge(trefoil):
    with pytest.raises(ValueError):
        decorate(trefoil, 99)


def test_next_edge_cycles(trefoil):
    e = 1
    seen = []
    for _ in range(trefoil.edge_count):
        seen.append(e)
        e = trefoil.next_edge(e)
    assert e == 1
    assert sorted(seen) == sorted(trefoil.incidences)
