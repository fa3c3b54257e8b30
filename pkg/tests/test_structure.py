from __future__ import annotations

import pytest

from factorix.group import bits_of
from factorix.perm import parse_cycles
from factorix.structure import (
    NotASubgroup, NotNormal, coset_index_map, conjugate_intersection_trivial,
    double_cosets, find_subgroup_of_order, is_normal, left_transversal,
    quotient_group, right_coset_bits, right_transversal, subgroup_from_indices,
    subgroup_from_perms, subgroup_generated, sylow_subgroup,
)


def sub(group, *texts):
    return subgroup_from_perms(group, [parse_cycles(t, group.degree) for t in texts])


def test_subgroup_from_indices(s3):
    a3 = sub(s3, "(1,2,3)")
    again = subgroup_from_indices(s3, a3.indices)
    assert again.indices == a3.indices
    assert len(a3) == 3
    assert a3.index_in_group() == 2


def test_subgroup_from_indices_rejects_junk(s3):
    t = s3.index_of(parse_cycles("(1,2)", 3))
    r = s3.index_of(parse_cycles("(1,2,3)", 3))
    with pytest.raises(NotASubgroup):
        subgroup_from_indices(s3, (t, r))  # missing identity
    with pytest.raises(NotASubgroup):
        subgroup_from_indices(s3, (0, r))  # not closed


def test_subgroup_generators_regenerate(s4):
    d8 = sylow_subgroup(s4, 2)
    gens = d8.generators()
    assert len(subgroup_from_perms(s4, gens)) == len(d8)


def test_standalone_table(s4):
    c4 = sub(s4, "(1,2,3,4)")
    table = c4.standalone_table()
    assert table.order == 4
    assert sorted(table.element_orders) == [1, 2, 4, 4]


def test_right_transversal_covers(a4):
    v4 = sub(a4, "(1,2)(3,4)", "(1,3)(2,4)")
    reps = right_transversal(v4)
    assert len(reps) == 3
    assert reps[0] == 0
    covered = 0
    for r in reps:
        block = right_coset_bits(v4, r)
        assert covered & block == 0
        assert min(b for b in range(a4.order) if block >> b & 1) == r
        covered |= block
    assert covered == (1 << a4.order) - 1


def test_left_transversal_covers(a4):
    c3 = sub(a4, "(1,2,3)")
    reps = left_transversal(c3)
    assert len(reps) == 4
    covered = 0
    for r in reps:
        row = a4.row(r)
        block = bits_of(row[x] for x in c3.indices)
        assert covered & block == 0
        covered |= block
    assert covered == (1 << a4.order) - 1


def test_coset_index_map(s4):
    c4 = sub(s4, "(1,2,3,4)")
    reps = right_transversal(c4)
    where = coset_index_map(c4, reps)
    assert all(w >= 0 for w in where)
    for pos, r in enumerate(reps):
        assert where[r] == pos


def test_double_cosets_partition(a5):
    c2 = sub(a5, "(1,2)(3,4)")
    c5 = sub(a5, "(1,2,3,4,5)")
    dc = double_cosets(c2, c5)
    assert len(dc) == 6
    assert sum(dc.sizes) == a5.order
    assert dc.all_full_size
    assert dc.representatives[0] == 0


def test_double_cosets_not_full_size(s3):
    c2 = sub(s3, "(1,2)")
    dc = double_cosets(c2, c2)
    assert sum(dc.sizes) == 6
    assert not dc.all_full_size  # the identity coset C2*e*C2 has size 2


def test_conjugate_intersection(a5, s3):
    assert conjugate_intersection_trivial(sub(a5, "(1,2)(3,4)"), sub(a5, "(1,2,3,4,5)"))
    assert not conjugate_intersection_trivial(sub(s3, "(1,2)"), sub(s3, "(1,3)"))


def test_is_normal(a4, s3):
    assert is_normal(sub(a4, "(1,2)(3,4)", "(1,3)(2,4)"))
    assert is_normal(sub(s3, "(1,2,3)"))
    assert not is_normal(sub(s3, "(1,2)"))


def test_quotient_s3_mod_a3(s3):
    a3 = sub(s3, "(1,2,3)")
    q, proj = quotient_group(a3)
    assert q.order == 2
    assert sorted(set(proj)) == [0, 1]
    assert [proj[i] for i in a3.indices] == [0, 0, 0]


def test_quotient_a4_mod_v4(a4):
    v4 = sub(a4, "(1,2)(3,4)", "(1,3)(2,4)")
    q, proj = quotient_group(v4)
    assert q.order == 3
    # the projection is a homomorphism
    for a in range(a4.order):
        for b in range(0, a4.order, 5):
            assert proj[a4.mul_idx(a, b)] == q.mul_idx(proj[a], proj[b])


def test_quotient_requires_normal(s3):
    with pytest.raises(NotNormal):
        quotient_group(sub(s3, "(1,2)"))


def test_find_subgroup_of_order(s4, a4):
    assert find_subgroup_of_order(s4, 1).indices == (0,)
    assert len(find_subgroup_of_order(s4, 8)) == 8
    assert len(find_subgroup_of_order(s4, 12)) == 12
    assert find_subgroup_of_order(s4, 5) is None  # not a divisor
    assert find_subgroup_of_order(a4, 6) is None  # divisor, but no such subgroup


def test_sylow_subgroups(a5, s4):
    assert len(sylow_subgroup(a5, 2)) == 4
    assert len(sylow_subgroup(a5, 3)) == 3
    assert len(sylow_subgroup(a5, 5)) == 5
    assert len(sylow_subgroup(s4, 2)) == 8
    with pytest.raises(ValueError):
        sylow_subgroup(a5, 7)


def test_subgroup_generated_caches_nothing_weird(a5):
    h = subgroup_generated(a5, [a5.index_of(parse_cycles("(1,2,3)", 5))])
    assert len(h) == 3
    assert 0 in h
