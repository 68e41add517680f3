import pytest

from squareice.ice import (InvalidAsm, MalformedSpec, all_asms, asm_count_oracle, asm_to_state,
                           build_dwbc, build_ht_even, build_ht_odd, build_tangle, check_state,
                           enumerate_states, format_asm, htasm_count_oracle, parse_asm,
                           state_to_asm)

# frozen oracle values
ASM_COUNTS = [1, 2, 7, 42, 429, 7436, 218348]
HTASM_COUNTS = {1: 1, 2: 2, 3: 3, 4: 10, 5: 25, 6: 140}


def test_monotone_triangle_oracle():
    assert [asm_count_oracle(n) for n in range(1, 8)] == ASM_COUNTS


def test_htasm_oracle_filters_full_lists():
    assert {k: htasm_count_oracle(k) for k in HTASM_COUNTS} == HTASM_COUNTS


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_dwbc_states_are_asms(n):
    g = build_dwbc(n)
    mats = [state_to_asm(g, s) for s in enumerate_states(g)]
    assert len(mats) == ASM_COUNTS[n - 1]
    key = lambda m: tuple(map(tuple, m))  # noqa: E731
    assert sorted(map(key, mats)) == sorted(map(key, all_asms(n)))


def test_asm_state_roundtrip():
    g = build_dwbc(3)
    for m in all_asms(3):
        s = asm_to_state(g, m)
        check_state(g, s)
        assert state_to_asm(g, s) == m


def test_invalid_asm_rejected():
    with pytest.raises(InvalidAsm):
        asm_to_state(build_dwbc(2), [[1, 1], [0, 0]])


def test_asm_text_format():
    m = [[0, 1, 0], [1, -1, 1], [0, 1, 0]]
    assert parse_asm(format_asm(m)) == m


@pytest.mark.parametrize("n", [1, 2, 3])
def test_half_turn_counts(n):
    assert sum(1 for _ in enumerate_states(build_ht_even(n))) == HTASM_COUNTS[2 * n]
    assert sum(1 for _ in enumerate_states(build_ht_odd(n - 1))) == HTASM_COUNTS[2 * n - 1]


def test_every_state_obeys_ice_rule():
    for g in (build_dwbc(3), build_ht_even(2), build_ht_odd(1)):
        for s in enumerate_states(g):
            check_state(g, s)


def test_tangle_spec_validation():
    with pytest.raises(MalformedSpec):
        build_tangle({"vertices": [{"name": "v", "param": {}, "slots": {"W": "e"}}]})


def test_tangle_with_fixed_boundary():
    spec = {"vertices": [{"name": "z", "param": {"z": 1},
                          "slots": {"W": "top", "S": "bottom", "E": "arc", "N": "arc"}}],
            "fixed": {"top": "in", "bottom": "out"}}
    states = list(enumerate_states(build_tangle(spec)))
    assert len(states) == 2   # the arc can circulate either way
