import random

import pytest

from addmds import linalg
from addmds.code import AdditiveCode, apply_move, min_distance, project, random_move, rs_code
from addmds.errors import BudgetExceeded, DimensionMismatch, SpanFailure
from addmds.geometry import (
    ProjectiveHSystem,
    code_from_system,
    desarguesian_block,
    desarguesian_membership,
    is_pseudo_arc,
    multiplication_matrix,
    project_system,
    system_from_code,
    system_from_dict,
    system_min_distance,
    system_to_dict,
)


def test_roundtrip_code_system_code(f9):
    code = rs_code(f9, 2)
    system = system_from_code(code)
    assert system.n == code.n and system.dim == code.k_fq
    again = code_from_system(system)
    assert again.gen == code.gen


def test_system_validation(f9):
    with pytest.raises(ValueError):
        ProjectiveHSystem(f9, 2, [((1, 2, 3),)])  # wrong length
    with pytest.raises(ValueError):
        ProjectiveHSystem(f9, 2, [((1, 4),)])  # 4 is outside F_3
    sys_a = ProjectiveHSystem(f9, 2, [((1, 0), (0, 1)), ((1, 1),)])
    sys_b = ProjectiveHSystem(f9, 2, [((1, 1), (1, 2)), ((2, 2),)])
    assert sys_a == sys_b  # same subspaces, different generators
    assert hash(sys_a) == hash(sys_b)


def test_code_from_system_errors(f4):
    with pytest.raises(ValueError):
        code_from_system(ProjectiveHSystem(f4, 2, [((1, 0), (0, 1), (1, 1))]))
    with pytest.raises(SpanFailure):
        code_from_system(ProjectiveHSystem(f4, 2, [((1, 0),), ((1, 0),)]))


def test_distance_bridge(f4, f9):
    rng = random.Random(20)
    codes = [rs_code(f4, 2), rs_code(f9, 2), project(rs_code(f9, 3), {1})]
    codes += [apply_move(c, random_move(c.tower, c.n, rng)) for c in list(codes)]
    for code in codes:
        assert system_min_distance(system_from_code(code)) == min_distance(code)


def test_distance_bridge_budget(f9):
    system = system_from_code(rs_code(f9, 3))
    with pytest.raises(BudgetExceeded):
        system_min_distance(system, budget=10)


def test_pseudo_arc_iff_mds(f4, f9):
    assert is_pseudo_arc(system_from_code(rs_code(f4, 2)))
    assert is_pseudo_arc(system_from_code(project(rs_code(f9, 3), {0})))
    # repetition-style code is far from MDS
    bad = AdditiveCode(f9, [(1, 1, 0), (3, 3, 0), (0, 0, 1), (0, 0, 3)])
    assert not is_pseudo_arc(system_from_code(bad))
    with pytest.raises(DimensionMismatch):
        is_pseudo_arc(ProjectiveHSystem(f9, 3, [((1, 0, 0),)]))


def test_multiplication_matrix(f9):
    for alpha in f9.elements():
        m = multiplication_matrix(f9, alpha)
        for x in f9.elements():
            want = list(f9.coords(f9.mul(alpha, x)))
            got = linalg.vec_mat(f9, list(f9.coords(x)), m)
            assert got == want


def test_rs_blocks_lie_in_spread_with_moment_points(f4):
    code = rs_code(f4, 2)
    system = system_from_code(code)
    for j in range(4):
        pt = desarguesian_membership(f4, system.blocks[j])
        assert pt == (1, j)  # (1, x) at the evaluation point x
    assert desarguesian_membership(f4, system.blocks[4]) == (0, 1)


def test_membership_is_move_invariant(f9):
    rng = random.Random(21)
    code = rs_code(f9, 2)
    system = system_from_code(code)
    points = [desarguesian_membership(f9, blk) for blk in system.blocks]
    mv = random_move(f9, code.n, rng)
    moved_system = system_from_code(apply_move(code, mv))
    for j in range(code.n):
        assert desarguesian_membership(f9, moved_system.blocks[j]) == points[mv.perm[j]]


def test_membership_depends_on_generator_basis(f4):
    code = rs_code(f4, 2)
    rows = list(code.gen)
    rows[1], rows[2] = rows[2], rows[1]  # mix the two message blocks
    mixed = AdditiveCode(f4, rows)
    assert mixed == code  # same code
    mixed_system = system_from_code(mixed)
    members = [desarguesian_membership(f4, blk) for blk in mixed_system.blocks]
    assert any(pt is None for pt in members)


def test_membership_rejections(f9):
    assert desarguesian_membership(f9, [(1, 0, 0, 0)]) is None  # rank 1 < h
    with pytest.raises(ValueError):
        desarguesian_membership(f9, [(1, 0, 0), (0, 1, 0)])  # length not h*k
    with pytest.raises(ValueError):
        desarguesian_membership(f9, [(1, 0, 0, 0), (0, 1, 0, 0)], point_len=3)
    assert desarguesian_membership(f9, []) is None


def test_desarguesian_block_inverts_membership(f9):
    pts = [(1, 0), (1, 7), (0, 1), (1, 5), (5, 8)]
    for pt in pts:
        blk = desarguesian_block(f9, pt)
        assert len(blk) == f9.h
        got = desarguesian_membership(f9, blk)
        from addmds.geometry import _normalize_point
        assert got == _normalize_point(f9, pt)
    with pytest.raises(ValueError):
        desarguesian_block(f9, (0, 0))


def test_project_system_matches_code_shortening(f9):
    code = rs_code(f9, 2)
    system = system_from_code(code)
    for j in (0, 3, 9):
        via_system = project_system(system, j)
        via_code = system_from_code(project(code, {j}))
        assert via_system.dim == via_code.dim == code.k_fq - f9.h
        assert system_min_distance(via_system) == system_min_distance(via_code)
        assert is_pseudo_arc(via_system) == is_pseudo_arc(via_code)
    with pytest.raises(ValueError):
        project_system(system, 10)


def test_system_json_roundtrip(f4):
    system = system_from_code(rs_code(f4, 2))
    data = system_to_dict(system)
    again = system_from_dict(data)
    assert again == system and again.blocks == system.blocks
    assert system_from_dict(data, f4).blocks == system.blocks
