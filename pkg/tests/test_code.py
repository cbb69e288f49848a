import random

import pytest

from addmds.code import (
    AdditiveCode,
    EquivalenceMove,
    apply_move,
    code_from_dict,
    code_to_dict,
    compose_moves,
    identity_move,
    inverse_move,
    is_mds,
    linear_equivalence_witness,
    min_distance,
    project,
    random_move,
    rs_code,
    to_interpolation_form,
    to_standard_form,
    weight_enumerator,
)
from addmds.errors import BudgetExceeded, NonInvertibleMap, NotMds
from addmds.linpoly import LinearizedPoly

import oracles


def test_rs_shape_and_distance(f4, f9):
    c4 = rs_code(f4, 2)
    assert (c4.n, c4.k_fq, c4.message_length()) == (5, 4, 2)
    assert min_distance(c4) == 4 and is_mds(c4)
    c9 = rs_code(f9, 3)
    assert (c9.n, c9.k_fq, c9.message_length()) == (10, 6, 3)
    assert min_distance(c9) == 8 and is_mds(c9)


def test_rs_rejects_bad_k(f4):
    with pytest.raises(ValueError):
        rs_code(f4, 0)
    with pytest.raises(ValueError):
        rs_code(f4, 5)


def test_rs_row_structure(f4):
    code = rs_code(f4, 2)
    # row (i*h + l) = omega^l * (evaluations of X^i, then infinity column)
    for i in range(2):
        for l in range(2):
            row = code.gen[i * 2 + l]
            w = f4.omega_powers[l]
            for x in range(4):
                assert row[x] == f4.mul(w, f4.pow_int(x, i))
            assert row[4] == (w if i == 1 else 0)


def test_min_distance_matches_bruteforce(f4, f9):
    rng = random.Random(10)
    codes = [rs_code(f4, 2), rs_code(f4, 3), project(rs_code(f4, 2), {0}),
             rs_code(f9, 2), project(rs_code(f9, 3), {1, 4})]
    for code in codes:
        scr = apply_move(code, random_move(code.tower, code.n, rng))
        for c in (code, scr):
            assert min_distance(c) == oracles.brute_min_distance(c)


def test_weight_enumerator(f9):
    code = rs_code(f9, 2)
    enum = weight_enumerator(code)
    assert enum[0] == 1
    assert sum(enum) == f9.q ** code.k_fq
    assert all(enum[w] == 0 for w in range(1, code.n - 1))  # d = n - k + 1


def test_codeword_budget(f9):
    code = rs_code(f9, 3)
    with pytest.raises(BudgetExceeded):
        min_distance(code, budget=100)


def test_generator_validation(f4):
    with pytest.raises(ValueError):
        AdditiveCode(f4, [(1, 2), (1, 2, 3)])
    with pytest.raises(ValueError):
        AdditiveCode(f4, [(1, 2), (1, 2)])  # dependent rows
    with pytest.raises(ValueError):
        AdditiveCode(f4, [], n=None)
    empty = AdditiveCode(f4, [], n=4)
    assert empty.k_fq == 0 and not is_mds(empty)


def test_equality_ignores_basis_choice(f4):
    code = rs_code(f4, 2)
    rows = list(code.gen)
    mixed = [rows[0], tuple(f4.add(a, b) for a, b in zip(rows[1], rows[0]))] + rows[2:]
    other = AdditiveCode(f4, mixed)
    assert other == code
    assert hash(other) == hash(code)
    assert AdditiveCode(f4, rows[:2]) != code


def test_message_length_requires_h_divisor(f4):
    code = AdditiveCode(f4, [(1, 0, 1)])
    with pytest.raises(NotMds):
        code.message_length()
    assert not is_mds(code)


def test_project_matches_bruteforce_shortening(f9):
    code = rs_code(f9, 2)
    for positions in [{0}, {3}, {0, 5}]:
        short = project(code, positions)
        keep = [j for j in range(code.n) if j not in positions]
        want = {tuple(w[j] for j in keep)
                for w in oracles.brute_codewords(code)
                if all(w[j] == 0 for j in positions)}
        got = set(oracles.brute_codewords(short))
        assert got == want
    with pytest.raises(ValueError):
        project(code, {99})


def test_field_linearity_detection(f4):
    assert rs_code(f4, 2).is_field_linear()
    assert not AdditiveCode(f4, [(1, 1)]).is_field_linear()
    # scrambling a linear code by a non-scalar map breaks closure
    move = EquivalenceMove((0, 1, 2, 3, 4),
                           (LinearizedPoly(f4, (0, 1)),) +
                           (LinearizedPoly.identity(f4),) * 4)
    assert not apply_move(rs_code(f4, 2), move).is_field_linear()


def test_structured_basis(f9):
    code = rs_code(f9, 2)
    again = code.structured_basis()
    assert again == code
    rows = code.field_linear_rows()
    assert len(rows) == 2


def test_moves_roundtrip(f9):
    rng = random.Random(11)
    code = rs_code(f9, 2)
    for _ in range(10):
        mv = random_move(f9, code.n, rng)
        moved = apply_move(code, mv)
        assert min_distance(moved) == min_distance(code)
        back = apply_move(moved, inverse_move(mv))
        assert back == code
        two = compose_moves(inverse_move(mv), mv)
        assert apply_move(code, two) == code
    assert apply_move(code, identity_move(f9, code.n)).gen == code.gen


def test_move_validation(f9):
    ident = LinearizedPoly.identity(f9)
    with pytest.raises(ValueError):
        EquivalenceMove((0, 0), (ident, ident))
    with pytest.raises(NonInvertibleMap):
        EquivalenceMove((0, 1), (ident, LinearizedPoly.zero(f9)))


def test_interpolation_form_roundtrip(f9):
    rng = random.Random(12)
    code = rs_code(f9, 2)
    form = to_interpolation_form(code)
    assert form.build_code() == code
    scr = apply_move(code, random_move(f9, code.n, rng))
    assert to_interpolation_form(scr).build_code() == scr


def test_interpolation_rejects_non_mds(f4):
    # repetition rows only on the first two coordinates: distance 1 < n
    rows = [(1, 1, 0), (f4.omega, f4.omega, 0), (0, 0, 1),
            (0, 0, f4.omega)]
    code = AdditiveCode(f4, rows)
    with pytest.raises(NotMds):
        to_interpolation_form(code)


def test_standard_form_structure(f9):
    rng = random.Random(13)
    code = apply_move(rs_code(f9, 2), random_move(f9, 10, rng))
    std, move = to_standard_form(code)
    assert apply_move(code, move) == std
    ident = LinearizedPoly.identity(f9)
    form = to_interpolation_form(std)
    assert all(m == ident for m in form.maps[0])          # row k all identity
    assert all(row[0] == ident for row in form.maps)      # column 0 identity
    assert min_distance(std) == min_distance(code)


def test_witness_on_linear_code_is_identity_map(f4):
    wit = linear_equivalence_witness(rs_code(f4, 2))
    assert wit is not None
    assert wit.g == LinearizedPoly.identity(f4)


def test_witness_recovers_scrambled_linear(f9):
    rng = random.Random(14)
    code = rs_code(f9, 3)
    for _ in range(5):
        scr = apply_move(code, random_move(f9, code.n, rng))
        wit = linear_equivalence_witness(scr)
        assert wit is not None
        moved = apply_move(scr, wit.linearizing_move())
        assert moved.is_field_linear()


def test_witness_candidate_budget(f9):
    with pytest.raises(BudgetExceeded):
        linear_equivalence_witness(rs_code(f9, 2), budget=2)


def test_code_json_roundtrip(f9):
    code = rs_code(f9, 2)
    data = code_to_dict(code)
    again = code_from_dict(data)
    assert again == code and again.gen == code.gen
    assert code_from_dict(data, f9).gen == code.gen
