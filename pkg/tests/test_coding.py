import pytest

from cyclesmith.coding import (
    NORMALIZE,
    CodeError,
    CyclicCode,
    decode_code,
    decode_ucycle,
    emit_ucycle,
    encode_poset,
    format_symbols,
    parse_symbols,
    window_read,
)
from cyclesmith.poset import NLPoset, drop_max, drop_min, enumerate_posets
from cyclesmith.posetcycle import build_arc_digraph, circuit_posets

KNOWN_CYCLE = CyclicCode(3, (0, 3, 1, 2, 0, 2, 1))


def test_encode_six_poset(six_poset):
    assert encode_poset(six_poset) == (1, 0, 4, 5, 5)


def test_decode_six_poset(six_poset):
    assert decode_code((1, 0, 4, 5, 5)) == six_poset


def test_encode_small(size3):
    assert encode_poset(NLPoset.chain(3)) == (1, 1)
    assert encode_poset(size3["d"]) == (0, 3)


@pytest.mark.parametrize("letter, code", [("a", "11"), ("b", "12"), ("c", "10"), ("d", "03"),
                                          ("e", "01"), ("f", "00"), ("g", "02")])
def test_edge_labels_of_size3(size3, letter, code):
    assert format_symbols(encode_poset(size3[letter])) == code


def test_encode_needs_two_elements():
    with pytest.raises(CodeError):
        encode_poset(NLPoset(1))


def test_all_zero_code_is_antichain():
    assert decode_code((0, 0, 0, 0)) == NLPoset.antichain(5)


def test_strict_rejects_non_cover():
    # a_3 = 3 names (1,3) although 1 < 2 < 3
    with pytest.raises(CodeError):
        decode_code((1, 3))
    assert decode_code((1, 3), NORMALIZE) == NLPoset.chain(3)


def test_out_of_range_symbol():
    with pytest.raises(CodeError):
        decode_code((2,))
    with pytest.raises(ValueError):
        decode_code((1,), mode="loose")


@pytest.mark.parametrize("k", range(2, 7))
def test_round_trip(k):
    for P in enumerate_posets(k):
        assert decode_code(encode_poset(P)) == P


@pytest.mark.parametrize("window, code", [((3, 1), (1, 1)), ((0, 3), (0, 3)), ((1, 0), (1, 0))])
def test_window_read(window, code):
    assert window_read(window) == code


def test_emit_known_circuit(size3):
    circuit = [size3[x] for x in "dabfgec"]
    assert emit_ucycle(circuit) == KNOWN_CYCLE


def test_emit_rejects_non_overlapping(size3):
    with pytest.raises(CodeError):
        emit_ucycle([size3["a"], size3["f"]])


def test_decode_known_cycle(size3):
    posets = decode_ucycle(KNOWN_CYCLE, 3)
    assert posets == [size3[x] for x in "dabfgec"]
    assert set(posets) == set(enumerate_posets(3))


@pytest.mark.parametrize("r", range(7))
def test_rotations_decode_to_same_set(r):
    assert set(decode_ucycle(KNOWN_CYCLE.rotate(r))) == set(enumerate_posets(3))


def test_perturbed_cycle_has_duplicate():
    posets = decode_ucycle(CyclicCode(3, (0, 3, 1, 2, 0, 2, 0)))
    assert len(set(posets)) < len(posets)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_window_consistency_along_edges(k):
    arc = build_arc_digraph(k)
    for v in range(arc.graph.n):
        for e_in in arc.graph.in_edges(v):
            for e_out in arc.graph.out_edges(v):
                P, Q = arc.edges[e_in], arc.edges[e_out]
                assert drop_min(P) == drop_max(Q)
                assert encode_poset(Q)[-2] == encode_poset(P)[-1] % 2 ** (k - 2)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_emit_decode_reproduces_circuit(k):
    circuit = circuit_posets(k)
    assert decode_ucycle(emit_ucycle(circuit)) == circuit


def test_text_and_json_formats():
    assert KNOWN_CYCLE.to_text() == "k=3;0,3,1,2,0,2,1"
    assert CyclicCode.from_text("k=3;0,3,1,2,0,2,1") == KNOWN_CYCLE
    assert CyclicCode.from_json(KNOWN_CYCLE.to_json()) == KNOWN_CYCLE
    with pytest.raises(CodeError):
        CyclicCode.from_text("0312021")


def test_symbol_rendering():
    assert format_symbols((1, 0, 4, 5, 5)) == "10455"
    assert format_symbols((1, 12, 3)) == "1,12,3"
    assert parse_symbols("10455") == (1, 0, 4, 5, 5)
    assert parse_symbols("1,12,3") == (1, 12, 3)


def test_canonical_rotation():
    assert KNOWN_CYCLE.rotate(3).canonical().symbols == (0, 2, 1, 0, 3, 1, 2)
