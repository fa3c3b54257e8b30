"""Search engines for group factorizations.

Three anchored engines cover the productive configurations:

* case1: both end factors are subgroups, middle factors are enumerated
  over punctured transversals.
* case2: one end is a subgroup, the other a fixed small set; middle
  factors are enumerated with coset-mask prefix pruning.
* case3: subgroup end, fixed set end, one enumerated middle factor; the
  remaining factor is an independent set in a compatibility graph.

A generic normalized backtracker handles any pattern on small groups, and
``refute`` adds algebraic reductions for 2-...-2 patterns.  Every emitted
certificate passes the verifier before it is reported; engines never trust
their own constructions.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb, prod
import multiprocessing

from .certify import (
    Certificate,
    certificate,
    divisibility_prune,
    product_distinct,
    reverse,
)
from .group import FactorSet, GroupTable, bits_of, iter_bits
from .indset import independent_sets_of_size
from .structure import (
    Subgroup,
    coset_index_map,
    left_transversal,
    right_transversal,
    subgroup_from_indices,
)


class AnchorInvalid(ValueError):
    pass


@dataclass
class SearchReport:
    engine: str
    pattern: tuple[int, ...]
    candidate_space: int
    candidates_examined: int
    solutions: tuple[Certificate, ...]
    exhaustive: bool
    find_all: bool
    graph_builds: int = 0
    wall_s: float = 0.0
    notes: str = ""
    budget_hit: bool = False

    @property
    def solution_count(self) -> int:
        return len(self.solutions)


@dataclass
class RefutationRecord:
    pattern: tuple[int, ...]
    verdict: str  # FOUND | NONE | UNKNOWN
    strategy: str
    instances_examined: int
    certificate: Certificate | None = None
    wall_s: float = 0.0
    notes: str = ""


class _Deadline:
    def __init__(self, budget_s: float | None):
        self.t0 = time.monotonic()
        self.limit = None if budget_s is None else self.t0 + budget_s
        self.hit = False

    def expired(self) -> bool:
        if self.limit is not None and time.monotonic() > self.limit:
            self.hit = True
        return self.hit

    def elapsed(self) -> float:
        return time.monotonic() - self.t0


def _sorted_certs(group: GroupTable, raw: list[tuple[tuple[int, ...], ...]]) -> tuple[Certificate, ...]:
    certs = []
    for factors in sorted(set(raw)):
        cert = certificate(group, factors)
        verdict = cert.verify()
        if not verdict.valid:
            raise AssertionError(f"engine produced an invalid certificate: {verdict}")
        certs.append(cert)
    return tuple(certs)


# ---------------------------------------------------------------- case 1


def case1_search(
    a: Subgroup,
    d: Subgroup,
    middle_sizes: tuple[int, ...],
    find_all: bool = True,
    budget_s: float | None = None,
    threads: int = 1,
) -> SearchReport:
    """Enumerate G = A*B*C*D with subgroups A, D anchored and the middle
    factors drawn from punctured transversals of A (right) and D (left)."""
    g = a.group
    if d.group is not g:
        raise AnchorInvalid("anchors live in different groups")
    if len(middle_sizes) != 2:
        raise AnchorInvalid("case1 expects exactly two middle factors")
    b_size, c_size = middle_sizes
    m_total = len(a) * b_size * c_size * len(d)
    if m_total != g.order:
        raise AnchorInvalid("pattern does not multiply to the group order")
    deadline = _Deadline(budget_s)

    w_reps = right_transversal(a)
    coset_of = coset_index_map(a, w_reps)
    blocked = {coset_of[x] for x in d.indices}
    if len(blocked) != len(d):
        raise AnchorInvalid("right A-cosets of D elements are not distinct")
    w_free = [w for w in w_reps if coset_of[w] not in blocked]

    v_reps = left_transversal(d)
    lcoset_of = [-1] * g.order
    for posn, r in enumerate(v_reps):
        row = g.row(r)
        for x in d.indices:
            lcoset_of[row[x]] = posn
    vblocked = {lcoset_of[x] for x in a.indices}
    if len(vblocked) != len(a):
        raise AnchorInvalid("left D-cosets of A elements are not distinct")
    v_free = [v for v in v_reps if lcoset_of[v] not in vblocked]

    space = comb(len(w_free), b_size - 1) * comb(len(v_free), c_size - 1)
    a_mask = a.bits
    coset_mask = {w: bits_of(g.row(x)[w] for x in a.indices) for w in w_reps}
    d_elems = d.indices

    examined = 0
    raw: list[tuple[tuple[int, ...], ...]] = []
    stop = False
    for b_extra in combinations(w_free, b_size - 1):
        if stop or deadline.expired():
            break
        ab_mask = a_mask
        for w in b_extra:
            ab_mask |= coset_mask[w]
        ab = list(iter_bits(ab_mask))
        for c_extra in combinations(v_free, c_size - 1):
            if deadline.expired():
                break
            examined += 1
            abc_mask = ab_mask
            ok = True
            for c in c_extra:
                step = 0
                for x in ab:
                    step |= 1 << g.row(x)[c]
                if step & abc_mask:
                    ok = False
                    break
                abc_mask |= step
            if not ok:
                continue
            final = abc_mask
            for dd in d_elems:
                if dd == 0:
                    continue
                step = 0
                for x in iter_bits(abc_mask):
                    step |= 1 << g.row(x)[dd]
                if step & final:
                    ok = False
                    break
                final |= step
            if ok and final.bit_count() == g.order:
                raw.append(
                    (
                        a.indices,
                        tuple(sorted((0,) + b_extra)),
                        tuple(sorted((0,) + c_extra)),
                        d.indices,
                    )
                )
                if not find_all:
                    stop = True
                    break
    solutions = _sorted_certs(g, raw)
    return SearchReport(
        engine="case1",
        pattern=(len(a), b_size, c_size, len(d)),
        candidate_space=space,
        candidates_examined=examined,
        solutions=solutions,
        exhaustive=not deadline.hit and (find_all or bool(solutions)),
        find_all=find_all,
        wall_s=deadline.elapsed(),
        budget_hit=deadline.hit,
    )


# ---------------------------------------------------------------- case 2

_PAR_CTX: dict = {}


def _case2_context(a: Subgroup, last: FactorSet, middle_sizes, find_all):
    g = a.group
    if last.group is not g:
        raise AnchorInvalid("anchors live in different groups")
    if not last.contains_identity():
        raise AnchorInvalid("last-factor anchor must contain the identity")
    sizes = tuple(middle_sizes)
    if len(sizes) not in (1, 2):
        raise AnchorInvalid("case2 expects one or two middle factors")
    if len(a) * prod(sizes) * len(last) != g.order:
        raise AnchorInvalid("pattern does not multiply to the group order")
    w_reps = right_transversal(a)
    coset_of = coset_index_map(a, w_reps)
    blocked = {coset_of[x] for x in last.indices}
    if len(blocked) != len(last):
        raise AnchorInvalid("right A-cosets of the anchor elements are not distinct")
    w_free = [w for w in w_reps if coset_of[w] not in blocked]
    n_cosets = len(w_reps)
    # cosets swept by w*D for each candidate w (first entry is w's own coset)
    wd_cosets = {}
    for w in [0] + w_free:
        row = g.row(w)
        wd_cosets[w] = tuple(coset_of[row[x]] for x in last.indices)
    coset_elem_mask = [bits_of(g.row(x)[w_reps[j]] for x in a.indices) for j in range(n_cosets)]
    return {
        "group": g,
        "a": a,
        "last": last,
        "sizes": sizes,
        "w_free": w_free,
        "coset_of": coset_of,
        "n_cosets": n_cosets,
        "wd_cosets": wd_cosets,
        "coset_elem_mask": coset_elem_mask,
        "find_all": find_all,
    }


def _case2_chunk(first_index: int) -> tuple[int, int, list[tuple[tuple[int, ...], ...]]]:
    """Enumerate every middle-factor choice whose least non-identity B
    element is w_free[first_index]; returns (examined, leaves, raw certs)."""
    ctx = _PAR_CTX
    g: GroupTable = ctx["group"]
    a: Subgroup = ctx["a"]
    last: FactorSet = ctx["last"]
    b_size = ctx["sizes"][0]
    c_size = ctx["sizes"][1] if len(ctx["sizes"]) == 2 else None
    w_free: list[int] = ctx["w_free"]
    coset_of: list[int] = ctx["coset_of"]
    wd = ctx["wd_cosets"]
    n_cosets: int = ctx["n_cosets"]
    find_all: bool = ctx["find_all"]

    base_mask = 0
    for j in wd[0]:
        base_mask |= 1 << j

    examined = 0
    leaves = 0
    raw: list[tuple[tuple[int, ...], ...]] = []

    def emit(b_extra: tuple[int, ...], c_extra: tuple[int, ...]) -> None:
        factors = [a.indices, tuple(sorted((0,) + b_extra))]
        if c_size is not None:
            factors.append(tuple(sorted((0,) + c_extra)))
        factors.append(last.indices)
        raw.append(tuple(factors))

    def leaf(b_extra: tuple[int, ...], mask: int) -> bool:
        nonlocal examined, leaves
        leaves += 1
        if c_size is None:
            examined += 1
            if mask.bit_count() == n_cosets:
                emit(b_extra, ())
                return not find_all
            return False
        # candidates for the next factor: elements outside A*B*D
        abd_elems = 0
        for j in iter_bits(mask):
            abd_elems |= ctx["coset_elem_mask"][j]
        b_full = (0,) + b_extra
        found_stop = False
        for x in iter_bits(((1 << g.order) - 1) ^ abd_elems):
            examined += 1
            if c_size == 2:
                step = 0
                ok = True
                row_cache = g.row
                for w in b_full:
                    wx = row_cache(w)[x]
                    rowwx = row_cache(wx)
                    for dd in last.indices:
                        j = coset_of[rowwx[dd]]
                        bit = 1 << j
                        if (mask | step) & bit:
                            ok = False
                            break
                        step |= bit
                    if not ok:
                        break
                if ok and (mask | step).bit_count() == n_cosets:
                    emit(b_extra, (x,))
                    if not find_all:
                        found_stop = True
                        break
            else:
                raise AnchorInvalid("case2 middle factors beyond (b,) and (b,2) not supported")
        return found_stop

    def extend(b_extra: tuple[int, ...], mask: int, start: int) -> bool:
        if len(b_extra) == b_size - 1:
            return leaf(b_extra, mask)
        lo = start if b_extra else first_index
        hi = first_index + 1 if not b_extra else len(w_free)
        for i in range(lo, hi):
            w = w_free[i]
            step = 0
            ok = True
            for j in wd[w]:
                bit = 1 << j
                if (mask | step) & bit:
                    ok = False
                    break
                step |= bit
            if not ok:
                continue
            if extend(b_extra + (w,), mask | step, i + 1):
                return True
        return False

    if b_size == 1:
        leaf((), base_mask)
    else:
        extend((), base_mask, first_index)
    return examined, leaves, raw


def case2_search(
    a: Subgroup,
    last: FactorSet,
    middle_sizes: tuple[int, ...],
    find_all: bool = True,
    budget_s: float | None = None,
    threads: int = 1,
) -> SearchReport:
    """Enumerate G = A*B*D or A*B*C*D with subgroup A first and the set D
    anchored last.  B runs over punctured-transversal subsets with coset
    prefix pruning; C (size 2) runs over the complement of A*B*D."""
    global _PAR_CTX
    deadline = _Deadline(budget_s)
    ctx = _case2_context(a, last, middle_sizes, find_all)
    g = ctx["group"]
    sizes = ctx["sizes"]
    w_free = ctx["w_free"]
    b_size = sizes[0]
    space = comb(len(w_free), b_size - 1)
    if len(sizes) == 2:
        space *= comb(g.order - len(a) * b_size * len(last), sizes[1] - 1)

    chunk_count = len(w_free) if b_size > 1 else 1
    chunks = list(range(chunk_count))
    _PAR_CTX = ctx
    examined = 0
    raw: list[tuple[tuple[int, ...], ...]] = []
    if threads > 1 and find_all and chunk_count > 1:
        mp_ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=threads, mp_context=mp_ctx) as pool:
            for exa, _leaves, part in pool.map(_case2_chunk, chunks):
                examined += exa
                raw.extend(part)
    else:
        for chunk in chunks:
            if deadline.expired():
                break
            exa, _leaves, part = _case2_chunk(chunk)
            examined += exa
            raw.extend(part)
            if part and not find_all:
                break
    solutions = _sorted_certs(g, raw)
    pattern = (len(a),) + sizes + (len(last),)
    return SearchReport(
        engine="case2",
        pattern=pattern,
        candidate_space=space,
        candidates_examined=examined,
        solutions=solutions,
        exhaustive=not deadline.hit and (find_all or bool(solutions)),
        find_all=find_all,
        wall_s=deadline.elapsed(),
        budget_hit=deadline.hit,
    )


def case2_search_reversed(
    first: FactorSet,
    d: Subgroup,
    middle_sizes: tuple[int, ...],
    find_all: bool = True,
    budget_s: float | None = None,
    threads: int = 1,
) -> SearchReport:
    """Set anchored first, subgroup last: run the reversed task (subgroup
    first) and reverse every solution back."""
    report = case2_search(
        d,
        first.inverse(),
        tuple(reversed(middle_sizes)),
        find_all=find_all,
        budget_s=budget_s,
        threads=threads,
    )
    solutions = tuple(
        sorted(
            (reverse(c) for c in report.solutions),
            key=lambda c: tuple(f.indices for f in c.factors),
        )
    )
    for cert in solutions:
        assert cert.verify().valid
    return SearchReport(
        engine="case2",
        pattern=(len(first),) + tuple(middle_sizes) + (len(d),),
        candidate_space=report.candidate_space,
        candidates_examined=report.candidates_examined,
        solutions=solutions,
        exhaustive=report.exhaustive,
        find_all=find_all,
        wall_s=report.wall_s,
        notes="ran as the reversed task " + str(report.pattern),
        budget_hit=report.budget_hit,
    )


# ---------------------------------------------------------------- case 3


@dataclass(frozen=True)
class CompatibilityGraph:
    """Vertices are elements x with |A*B*x*D| = |A||B||D|; two vertices are
    adjacent when their A*B*x*D blocks overlap (blocks are unions of right
    A-cosets, so masks over coset positions decide everything)."""

    group: GroupTable
    vertices: tuple[int, ...]
    masks: tuple[int, ...]
    block_size: int

    def adjacency(self) -> list[int]:
        k = len(self.vertices)
        adj = [0] * k
        for i in range(k):
            mi = self.masks[i]
            for j in range(i + 1, k):
                if mi & self.masks[j]:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return adj


def case3_build_graph(a: Subgroup, b: FactorSet, d: FactorSet) -> CompatibilityGraph:
    g = a.group
    w_reps = right_transversal(a)
    coset_of = coset_index_map(a, w_reps)
    bd_pairs = [(x, y) for x in b.indices for y in d.indices]
    m = len(a) * len(b) * len(d)
    need = len(b) * len(d)
    vertices = []
    masks = []
    for x in range(g.order):
        row_x = g.row(x)
        mask = 0
        ok = True
        for bb, dd in bd_pairs:
            j = coset_of[g.row(g.row(bb)[x])[dd]]
            bit = 1 << j
            if mask & bit:
                ok = False
                break
            mask |= bit
        if ok and mask.bit_count() == need:
            vertices.append(x)
            masks.append(mask)
    return CompatibilityGraph(g, tuple(vertices), tuple(masks), m)


def case3_search(
    a: Subgroup,
    d: FactorSet,
    b_size: int,
    c_size: int,
    find_all: bool = False,
    budget_s: float | None = None,
    threads: int = 1,
    max_solutions: int | None = None,
) -> SearchReport:
    """Enumerate B over a punctured transversal; for each B satisfying the
    block-size condition, hunt an independent set C of compatible elements
    with |A||B||C||D| = |G|."""
    g = a.group
    if d.group is not g or not d.contains_identity():
        raise AnchorInvalid("last-factor anchor must contain the identity")
    m = len(a) * b_size * len(d)
    if g.order % m:
        raise AnchorInvalid("block size does not divide the group order")
    s = g.order // m
    if s != c_size:
        raise AnchorInvalid("independent-set size inconsistent with pattern")
    deadline = _Deadline(budget_s)
    w_reps = right_transversal(a)
    coset_of = coset_index_map(a, w_reps)
    blocked = {coset_of[x] for x in d.indices}
    if len(blocked) != len(d):
        raise AnchorInvalid("right A-cosets of the anchor elements are not distinct")
    w_free = [w for w in w_reps if coset_of[w] not in blocked]
    space = comb(len(w_free), b_size - 1)

    examined = 0
    builds = 0
    raw: list[tuple[tuple[int, ...], ...]] = []
    stop = False
    for b_extra in combinations(w_free, b_size - 1):
        if stop or deadline.expired():
            break
        examined += 1
        b_set = FactorSet(g, tuple(sorted((0,) + b_extra)))
        abd = product_distinct(a.members, b_set)
        if abd is not None:
            abd = product_distinct(abd, d)
        if abd is None:
            continue
        builds += 1
        graph = case3_build_graph(a, b_set, d)
        adj = graph.adjacency()
        limit = None if find_all else 1
        if max_solutions is not None:
            limit = max_solutions - len(raw)
        for combo in independent_sets_of_size(adj, len(graph.vertices), s, find_all=find_all, limit=limit):
            c_set = tuple(sorted(graph.vertices[i] for i in combo))
            raw.append((a.indices, b_set.indices, c_set, d.indices))
            if not find_all:
                stop = True
                break
        if max_solutions is not None and len(raw) >= max_solutions:
            break
    solutions = _sorted_certs(g, raw)
    capped = max_solutions is not None and len(raw) >= max_solutions
    return SearchReport(
        engine="case3",
        pattern=(len(a), b_size, c_size, len(d)),
        candidate_space=space,
        candidates_examined=examined,
        solutions=solutions,
        exhaustive=not deadline.hit and not capped,
        find_all=find_all,
        graph_builds=builds,
        wall_s=deadline.elapsed(),
        budget_hit=deadline.hit,
    )


# ---------------------------------------------------------------- generic


def generic_search(
    group: GroupTable,
    pattern: tuple[int, ...],
    find_all: bool = False,
    budget_s: float | None = None,
    cap: int = 60,
) -> SearchReport:
    """Normalized backtracking over all factor tuples: every factor contains
    the identity, remaining elements ascend, prefix products stay distinct,
    and end factors must generate a subgroup of compatible order."""
    n = group.order
    if prod(pattern) != n:
        raise AnchorInvalid("pattern does not multiply to the group order")
    if n > cap:
        raise AnchorInvalid(f"group order {n} above generic cap {cap}")
    deadline = _Deadline(budget_s)
    k = len(pattern)
    raw: list[tuple[tuple[int, ...], ...]] = []
    nodes = 0
    stack: list[tuple[int, ...]] = []

    def factor_ok_at_ends(fi: int, factor: tuple[int, ...]) -> bool:
        if fi not in (0, k - 1) or len(factor) == 1:
            return True
        return divisibility_prune(FactorSet(group, factor))

    def place(fi: int, prefix: tuple[int, ...], prefix_mask: int) -> bool:
        if fi == k:
            raw.append(tuple(stack))
            return not find_all
        target = pattern[fi]

        def grow(factor: tuple[int, ...], acc_mask: int, start: int) -> bool:
            nonlocal nodes
            nodes += 1
            if nodes % 4096 == 0 and deadline.expired():
                return True
            if len(factor) == target:
                if not factor_ok_at_ends(fi, factor):
                    return False
                stack.append(factor)
                done = place(fi + 1, tuple(iter_bits(acc_mask)), acc_mask)
                stack.pop()
                return done
            for x in range(start, n):
                step = 0
                ok = True
                for p in prefix:
                    y = group.row(p)[x]
                    bit = 1 << y
                    if (acc_mask | step) & bit:
                        ok = False
                        break
                    step |= bit
                if not ok:
                    continue
                if grow(factor + (x,), acc_mask | step, x + 1):
                    return True
            return False

        return grow((0,), prefix_mask, 1)

    place(0, (0,), 1)
    solutions = _sorted_certs(group, raw)
    return SearchReport(
        engine="generic",
        pattern=tuple(pattern),
        candidate_space=0,
        candidates_examined=nodes,
        solutions=solutions,
        exhaustive=not deadline.hit,
        find_all=find_all,
        wall_s=deadline.elapsed(),
        notes="normalized backtracking",
        budget_hit=deadline.hit,
    )


# ------------------------------------------------------------- refutation


def conjugacy_class(group: GroupTable, x: int) -> tuple[int, ...]:
    seen = 1 << x
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for gidx in range(group.order):
                z = group.conjugate_idx(y, gidx)
                if not seen >> z & 1:
                    seen |= 1 << z
                    nxt.append(z)
        frontier = nxt
    return tuple(iter_bits(seen))


def involution_class_reps(group: GroupTable) -> list[int]:
    reps = []
    covered = 0
    for x in range(1, group.order):
        if group.element_orders[x] != 2 or covered >> x & 1:
            continue
        cls = conjugacy_class(group, x)
        covered |= bits_of(cls)
        reps.append(x)
    return reps


def _two_ended(group: GroupTable) -> bool:
    """True when every even-order element is an involution: then any
    normalized factorization with size-2 end factors has ends {e, t} with
    t an involution.  (A size-2 end {e, x} forces x of even order: the
    complementary block is invariant under x**2, and odd order would make
    it invariant under x itself.)"""
    return all(o == 2 for o in group.element_orders if o % 2 == 0 and o > 1)


def _involutions(group: GroupTable) -> list[int]:
    return [x for x in range(group.order) if group.element_orders[x] == 2]


def _coset_translation(group: GroupTable, a: Subgroup, d: int) -> list[int]:
    """pi_d on right A-coset positions: position of A*r -> position of A*r*d."""
    reps = right_transversal(a)
    coset_of = coset_index_map(a, reps)
    return [coset_of[group.row(r)[d]] for r in reps]


def _scan_parity(group: GroupTable, a_rep: int, m: int, deadline: _Deadline) -> tuple[str, int, Certificate | None]:
    """Pattern (2, m, 2): a factorization exists for last factor {e, d} iff
    every cycle of pi_d on the right-A cosets is even; build one by
    alternating along the cycles."""
    a = subgroup_from_indices(group, (0, a_rep))
    n_pos = group.order // 2
    if 2 * m != n_pos:
        raise AnchorInvalid("middle size incompatible with (2, m, 2)")
    examined = 0
    for d in _involutions(group):
        if deadline.expired():
            return "UNKNOWN", examined, None
        examined += 1
        pi = _coset_translation(group, a, d)
        seen = [False] * n_pos
        chosen: list[int] = []
        feasible = True
        for start in range(n_pos):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = pi[j]
            if len(cyc) % 2:
                feasible = False
                break
            # keep the identity's coset on the chosen side when present
            offset = 1 if 0 in cyc and cyc.index(0) % 2 else 0
            chosen.extend(cyc[i] for i in range(offset, len(cyc), 2))
        if not feasible:
            continue
        reps = right_transversal(a)
        b_set = tuple(sorted(reps[j] for j in chosen))
        cert = certificate(group, (a.indices, b_set, (0, d)))
        if cert.verify().valid:
            return "FOUND", examined, cert
        raise AssertionError("parity construction failed verification")
    return "NONE", examined, None


def _scan_block_cover(
    group: GroupTable,
    a_rep: int,
    b_size: int,
    c_size: int,
    deadline: _Deadline,
) -> tuple[str, int, Certificate | None]:
    """Pattern (2, b, c, 2): for each involution d and each candidate B of
    coset representatives containing e, a factorization exists iff the
    block-compatibility graph has an independent set of size c."""
    a = subgroup_from_indices(group, (0, a_rep))
    reps = right_transversal(a)
    examined = 0
    for d in _involutions(group):
        d_set = FactorSet(group, (0, d))
        for extra in combinations(reps[1:], b_size - 1):
            if deadline.expired():
                return "UNKNOWN", examined, None
            examined += 1
            b_set = FactorSet(group, tuple(sorted((0,) + extra)))
            if product_distinct(a.members, b_set) is None:
                continue
            graph = case3_build_graph(a, b_set, d_set)
            if len(graph.vertices) < c_size:
                continue
            adj = graph.adjacency()
            for combo in independent_sets_of_size(adj, len(graph.vertices), c_size, find_all=False):
                c_set = tuple(sorted(graph.vertices[i] for i in combo))
                cert = certificate(group, (a.indices, b_set.indices, c_set, d_set.indices))
                if cert.verify().valid:
                    return "FOUND", examined, cert
                raise AssertionError("block-cover construction failed verification")
    return "NONE", examined, None


def refute(
    group: GroupTable,
    pattern: tuple[int, ...],
    budget_s: float | None = None,
    cap_generic: int = 60,
    strategy: str = "auto",
) -> RefutationRecord:
    """Decide whether G admits a factorization with the given pattern.

    Verdicts: FOUND carries a verified certificate, NONE means the full
    normalized space was covered, UNKNOWN means the budget ran out.  The
    2-...-2 reductions conjugate the first end factor to a fixed involution
    class representative, which is harmless because conjugating an entire
    factorization by any element yields another factorization.

    strategy selects the engine: "auto" picks the cheapest sound route,
    "generic" forces the exhaustive normalized search, "reduction" forces
    the 2-...-2 coset scans and fails if they do not apply.
    """
    if strategy not in ("auto", "generic", "reduction"):
        raise ValueError(f"unknown refutation strategy: {strategy!r}")
    deadline = _Deadline(budget_s)
    pattern = tuple(pattern)
    if prod(pattern) != group.order:
        raise AnchorInvalid("pattern does not multiply to the group order")
    two_ended = (
        strategy != "generic"
        and len(pattern) in (3, 4)
        and pattern[0] == 2
        and pattern[-1] == 2
        and _two_ended(group)
        and group.order % 4 == 0
    )
    if strategy == "reduction" and not two_ended:
        raise AnchorInvalid("pattern does not admit the 2-...-2 reduction")
    if two_ended:
        strategy = "coset-parity" if len(pattern) == 3 else "block-cover"
        total = 0
        best: tuple[str, Certificate | None] = ("NONE", None)
        for a_rep in involution_class_reps(group):
            if len(pattern) == 3:
                verdict, examined, cert = _scan_parity(group, a_rep, pattern[1], deadline)
            else:
                b_size, c_size = pattern[1], pattern[2]
                if b_size > c_size:
                    # scan the reversed pattern instead: smaller middle first
                    verdict, examined, cert = _scan_block_cover(group, a_rep, c_size, b_size, deadline)
                    if cert is not None:
                        cert = reverse(cert)
                        assert cert.verify().valid
                    strategy = "block-cover (reversed)"
                else:
                    verdict, examined, cert = _scan_block_cover(group, a_rep, b_size, c_size, deadline)
            total += examined
            if verdict == "FOUND":
                return RefutationRecord(pattern, "FOUND", strategy, total, cert, deadline.elapsed())
            if verdict == "UNKNOWN":
                best = ("UNKNOWN", None)
        return RefutationRecord(pattern, best[0], strategy, total, None, deadline.elapsed())
    if strategy == "generic" or group.order <= cap_generic:
        cap = max(cap_generic, group.order) if strategy == "generic" else cap_generic
        report = generic_search(group, pattern, find_all=False, budget_s=budget_s, cap=cap)
        if report.solutions:
            return RefutationRecord(
                pattern, "FOUND", "generic", report.candidates_examined,
                report.solutions[0], deadline.elapsed(),
            )
        verdict = "NONE" if report.exhaustive else "UNKNOWN"
        return RefutationRecord(pattern, verdict, "generic", report.candidates_examined, None, deadline.elapsed())
    return RefutationRecord(pattern, "UNKNOWN", "none-applicable", 0, None, deadline.elapsed(), notes="group too large for the generic engine")
