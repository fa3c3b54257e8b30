"""Subgroups and coset structure: transversals, double cosets, quotients,
normality, and bounded subgroup discovery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import FactorSet, GroupTable, bits_of, generate_group, iter_bits
from .perm import Perm


class NotASubgroup(ValueError):
    pass


class NotNormal(ValueError):
    pass


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a tabulated group, held as its sorted member indices."""

    group: GroupTable
    indices: tuple[int, ...]

    @property
    def members(self) -> FactorSet:
        return FactorSet(self.group, self.indices)

    @property
    def bits(self) -> int:
        return bits_of(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, idx: int) -> bool:
        return bool(self.bits >> idx & 1)

    def index_in_group(self) -> int:
        return self.group.order // len(self.indices)

    def generators(self) -> list[Perm]:
        """A small generating set, grown greedily over the member list."""
        g = self.group
        have = [0]
        gens: list[int] = []
        for x in self.indices:
            if x in set(have):
                continue
            gens.append(x)
            have = g.closure_indices(gens)
            if len(have) == len(self.indices):
                break
        return [g.elements[i] for i in gens]

    def standalone_table(self) -> GroupTable:
        """Re-tabulate this subgroup as a group in its own right."""
        gens = self.generators()
        if not gens:
            gens = [self.group.elements[0]]
        return generate_group(gens)


def subgroup_from_indices(group: GroupTable, indices) -> Subgroup:
    idx = tuple(sorted(set(indices)))
    if not idx or idx[0] != 0:
        raise NotASubgroup("missing identity")
    memb = set(idx)
    for a in idx:
        row = group.row(a)
        for b in idx:
            if row[b] not in memb:
                raise NotASubgroup("not closed under products")
    return Subgroup(group, idx)


def subgroup_generated(group: GroupTable, gen_indices) -> Subgroup:
    closed = group.closure_indices(list(gen_indices))
    assert closed is not None
    return Subgroup(group, tuple(closed))


def subgroup_from_perms(group: GroupTable, perms: list[Perm]) -> Subgroup:
    return subgroup_generated(group, [group.index_of(p) for p in perms])


def right_transversal(h: Subgroup) -> list[int]:
    """One representative per right coset Hx, the smallest index in each,
    listed in increasing order (so the identity represents H itself)."""
    g = h.group
    seen = 0
    reps = []
    for x in range(g.order):
        if seen >> x & 1:
            continue
        reps.append(x)
        row_targets = [g.row(a)[x] for a in h.indices]
        seen |= bits_of(row_targets)
    return reps


def left_transversal(h: Subgroup) -> list[int]:
    """One representative per left coset xH, smallest index first."""
    g = h.group
    seen = 0
    reps = []
    for x in range(g.order):
        if seen >> x & 1:
            continue
        reps.append(x)
        row = g.row(x)
        seen |= bits_of(row[a] for a in h.indices)
    return reps


def right_coset_bits(h: Subgroup, x: int) -> int:
    g = h.group
    return bits_of(g.row(a)[x] for a in h.indices)


def coset_index_map(h: Subgroup, reps: list[int]) -> list[int]:
    """Map element index -> position of its right-H-coset in ``reps``."""
    g = h.group
    where = [-1] * g.order
    for pos, r in enumerate(reps):
        for a in h.indices:
            where[g.row(a)[r]] = pos
    return where


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    group: GroupTable
    left: Subgroup
    right: Subgroup
    representatives: tuple[int, ...]
    sizes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.representatives)

    @property
    def all_full_size(self) -> bool:
        full = len(self.left) * len(self.right)
        return all(s == full for s in self.sizes)


def double_cosets(a: Subgroup, b: Subgroup) -> DoubleCosetDecomposition:
    """Decompose G into A x B double cosets; representatives are the
    smallest element index in each coset, in increasing order."""
    g = a.group
    if b.group is not g:
        raise ValueError("subgroups of different groups")
    seen = 0
    reps, sizes = [], []
    for x in range(g.order):
        if seen >> x & 1:
            continue
        mask = 0
        for p in a.indices:
            px = g.row(p)[x]
            row = g.row(px)
            mask |= bits_of(row[q] for q in b.indices)
        reps.append(x)
        sizes.append(mask.bit_count())
        seen |= mask
    return DoubleCosetDecomposition(g, a, b, tuple(reps), tuple(sizes))


def conjugate_intersection_trivial(a: Subgroup, b: Subgroup) -> bool:
    """True when x^-1 A x meets B only in the identity, for every x in G."""
    g = a.group
    b_bits = b.bits
    nontrivial_a = [p for p in a.indices if p != 0]
    for x in range(g.order):
        for p in nontrivial_a:
            if b_bits >> g.conjugate_idx(p, x) & 1:
                return False
    return True


def is_normal(h: Subgroup) -> bool:
    g = h.group
    hb = h.bits
    for x in range(g.order):
        for p in h.indices:
            if not hb >> g.conjugate_idx(p, x) & 1:
                return False
    return True


def quotient_group(h: Subgroup) -> tuple[GroupTable, list[int]]:
    """Quotient G/H for normal H, tabulated on the left-transversal cosets.

    Returns (quotient table, projection) where projection[i] is the index in
    the quotient of element i's coset.  The quotient is realized as a
    permutation group acting on its own coset positions (1-based).
    """
    if not is_normal(h):
        raise NotNormal("subgroup is not normal")
    g = h.group
    reps = left_transversal(h)
    m = len(reps)
    where = [-1] * g.order
    for pos, r in enumerate(reps):
        row = g.row(r)
        for a in h.indices:
            where[row[a]] = pos
    # each coset acts on coset positions by right multiplication
    perms = []
    for r in reps:
        images = tuple(where[g.row(rep)[r]] + 1 for rep in reps)
        perms.append(Perm(images))
    qgens = [perms[where[g.index_of(p)]] for p in g.generators] or [perms[0]]
    qtable = generate_group([p for p in qgens if not p.is_identity()] or [perms[0]])
    if qtable.order != m:
        raise NotNormal("coset action did not close on the cosets")
    reindex = [qtable.index_of(p) for p in perms]
    projection = [reindex[where[i]] for i in range(g.order)]
    return qtable, projection


def find_subgroup_of_order(group: GroupTable, m: int, max_generators: int = 2) -> Subgroup | None:
    """Bounded search for a subgroup of order m: all cyclic subgroups first,
    then closures of generator pairs.  Returns the one with the canonically
    least member tuple, or None if the bounded search exhausts."""
    if group.order % m:
        return None
    cache = group._subgroup_cache.setdefault("by_order", {})
    if m in cache:
        return cache[m]
    found: tuple[int, ...] | None = None
    if m == 1:
        found = (0,)
    cyclic: dict[int, list[int]] = {}
    if found is None:
        for x in range(1, group.order):
            if m % group.element_orders[x]:
                continue
            closed = group.closure_indices([x], cap=m)
            if closed is None:
                continue
            cyclic[x] = closed
            if len(closed) == m:
                t = tuple(closed)
                if found is None or t < found:
                    found = t
    if found is None and max_generators >= 2:
        candidates = sorted(cyclic)
        for i, x in enumerate(candidates):
            x_members = set(cyclic[x])
            for y in candidates[i + 1:]:
                if y in x_members:
                    continue
                closed = group.closure_indices([x, y], cap=m)
                if closed is not None and len(closed) == m:
                    t = tuple(closed)
                    if found is None or t < found:
                        found = t
    result = Subgroup(group, found) if found is not None else None
    cache[m] = result
    return result


def sylow_subgroup(group: GroupTable, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown from a p-element through its normalizer."""
    n = group.order
    pk = 1
    while n % (pk * p) == 0:
        pk *= p
    if pk == 1:
        raise ValueError(f"{p} does not divide the group order")
    seed = next(x for x in range(1, n) if group.element_orders[x] == p)
    members = group.closure_indices([seed])
    while len(members) < pk:
        mbits = bits_of(members)
        grown = False
        for y in _normalizer_elements(group, members, mbits):
            if mbits >> y & 1 or not _is_p_power(group.element_orders[y], p):
                continue
            closed = group.closure_indices(members + [y], cap=pk)
            if closed is not None and _is_p_power(len(closed), p):
                members = closed
                grown = True
                break
        if not grown:
            raise RuntimeError("sylow growth stalled")
    return Subgroup(group, tuple(members))


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _normalizer_elements(group: GroupTable, members: list[int], mbits: int):
    for x in range(group.order):
        if all(mbits >> group.conjugate_idx(h, x) & 1 for h in members):
            yield x
