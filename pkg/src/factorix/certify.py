"""Factorization certificates: a group plus an ordered list of factor sets
whose left-to-right product hits every group element exactly once.

Verification is the ground truth for everything downstream; transformations
(reverse, normalize, lifts, sandwich composition, factor surgery) construct
candidate certificates but never bypass the verifier.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .group import FactorSet, GroupTable, generate_group, iter_bits
from .perm import parse_cycles
from .structure import (
    Subgroup,
    double_cosets,
    conjugate_intersection_trivial,
    left_transversal,
    right_transversal,
)


class MalformedCertificate(ValueError):
    pass


class ConditionFailed(ValueError):
    """A construction hypothesis (trivial conjugate intersection, set
    equality, coset distinctness) does not hold."""


class InvalidPosition(IndexError):
    pass


@dataclass(frozen=True)
class Verdict:
    valid: bool
    failing_prefix: int | None
    product_size: int
    message: str = ""


@dataclass(frozen=True)
class Certificate:
    group: GroupTable
    factors: tuple[FactorSet, ...]
    _verdict: Verdict | None = field(default=None, compare=False, repr=False)

    @property
    def pattern(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.factors)

    @property
    def is_normalized(self) -> bool:
        return all(f.contains_identity() for f in self.factors)

    @property
    def is_verified(self) -> bool:
        return self._verdict is not None and self._verdict.valid

    def verify(self) -> Verdict:
        if self._verdict is None:
            object.__setattr__(self, "_verdict", verify_certificate(self))
        return self._verdict  # type: ignore[return-value]


def certificate(group: GroupTable, index_sets) -> Certificate:
    return Certificate(group, tuple(FactorSet(group, tuple(s)) for s in index_sets))


def product_distinct(s: FactorSet, t: FactorSet) -> FactorSet | None:
    """The product set s*t when all |s|*|t| products are distinct, else None.

    A None is a pruning signal for searches, not an error.
    """
    g = s.group
    mask = 0
    count = 0
    for a in s.indices:
        row = g.row(a)
        for b in t.indices:
            mask |= 1 << row[b]
        # break early once a collision is certain
        count += len(t.indices)
        if mask.bit_count() != count:
            return None
    return FactorSet(g, tuple(iter_bits(mask)))


def verify_certificate(cert: Certificate) -> Verdict:
    """Left fold of product_distinct; valid iff no prefix collides and the
    final product is the whole group."""
    g = cert.group
    for f in cert.factors:
        if len(f) == 0:
            return Verdict(False, None, 0, "empty factor")
    acc = FactorSet(g, (0,))
    for k, f in enumerate(cert.factors, start=1):
        nxt = product_distinct(acc, f)
        if nxt is None:
            return Verdict(False, k, len(acc), f"prefix of length {k} collides")
        acc = nxt
    if len(acc) != g.order:
        return Verdict(False, None, len(acc), f"product covers {len(acc)} of {g.order}")
    return Verdict(True, None, len(acc))


def reverse(cert: Certificate) -> Certificate:
    """G = A1...Ak gives G = Ak^-1 ... A1^-1."""
    return Certificate(cert.group, tuple(f.inverse() for f in reversed(cert.factors)))


def normalize(cert: Certificate) -> Certificate:
    """Slide each factor so that every factor contains the identity.

    With a_i the least-index element of A_i and c_i = a_1*...*a_i, the
    factors B_i = c_{i-1} * A_i * c_i^-1 multiply to the same group.
    """
    g = cert.group
    new_factors = []
    c_prev = 0
    for f in cert.factors:
        a = f.indices[0]
        c_cur = g.mul_idx(c_prev, a)
        inv_c = g.inv[c_cur]
        row_prev = g.row(c_prev)
        new_factors.append(tuple(sorted(g.mul_idx(row_prev[x], inv_c) for x in f.indices)))
        c_prev = c_cur
    return certificate(g, new_factors)


def merge_adjacent(cert: Certificate, position: int) -> Certificate:
    """Fuse factors at position and position+1 into their product set."""
    if not 0 <= position < len(cert.factors) - 1:
        raise InvalidPosition(position)
    fused = product_distinct(cert.factors[position], cert.factors[position + 1])
    if fused is None:
        raise ConditionFailed("adjacent factors do not multiply distinctly")
    factors = (
        cert.factors[:position] + (fused,) + cert.factors[position + 2:]
    )
    return Certificate(cert.group, factors)


def replace_factor(cert: Certificate, position: int, parts: list[FactorSet]) -> Certificate:
    """Split the factor at ``position`` into several whose distinct product
    equals it; the certificate stays valid."""
    if not 0 <= position < len(cert.factors):
        raise InvalidPosition(position)
    acc = parts[0]
    for p in parts[1:]:
        nxt = product_distinct(acc, p)
        if nxt is None:
            raise ConditionFailed("replacement parts collide")
        acc = nxt
    if acc.bits != cert.factors[position].bits:
        raise ConditionFailed("replacement parts do not multiply to the factor")
    factors = cert.factors[:position] + tuple(parts) + cert.factors[position + 1:]
    return Certificate(cert.group, factors)


def strip_singletons(cert: Certificate) -> Certificate:
    """Remove size-1 factors by merging them into a neighbour."""
    factors = list(cert.factors)
    i = 0
    while i < len(factors) and len(factors) > 1:
        if len(factors[i]) == 1:
            j = i + 1 if i + 1 < len(factors) else i - 1
            lo, hi = min(i, j), max(i, j)
            fused = product_distinct(factors[lo], factors[hi])
            assert fused is not None  # a singleton product cannot collide
            factors[lo:hi + 1] = [fused]
            i = 0
        else:
            i += 1
    return Certificate(cert.group, tuple(factors))


def _embed(parent: GroupTable, cert: Certificate) -> list[tuple[int, ...]]:
    """Map each factor of a certificate on a standalone table into parent
    element indices.  A lower-degree certificate embeds through its cycle
    strings, acting trivially on the extra points."""
    out = []
    for f in cert.factors:
        indices = []
        for p in f.perms():
            if p.degree != parent.degree:
                p = parse_cycles(str(p), parent.degree)
            indices.append(parent.index_of(p))
        out.append(tuple(sorted(indices)))
    return out


def lift_by_transversal(cert: Certificate, h: Subgroup, side: str = "right") -> Certificate:
    """From H = A1...Ak and a transversal T of H in G, build G = A1...Ak*T
    (side="right") or G = T*A1...Ak (side="left")."""
    g = h.group
    factors = _embed(g, cert)
    if side == "right":
        reps = tuple(right_transversal(h))
        factors = factors + [reps]
    elif side == "left":
        reps = tuple(left_transversal(h))
        factors = [reps] + factors
    else:
        raise ValueError(f"side must be left or right, not {side!r}")
    return certificate(g, factors)


def lift_by_quotient(
    quotient_cert: Certificate,
    h: Subgroup,
    projection: list[int],
    position: int,
) -> Certificate:
    """Pull a certificate of G/H back to G, inserting H as the factor at
    ``position`` (0..k).  Normality of H makes every position work with the
    canonically least coset representatives."""
    g = h.group
    k = len(quotient_cert.factors)
    if not 0 <= position <= k:
        raise InvalidPosition(position)
    qorder = quotient_cert.group.order
    reps = [-1] * qorder
    for i in range(g.order):
        q = projection[i]
        if reps[q] < 0:
            reps[q] = i
    factors: list[tuple[int, ...]] = []
    for f in quotient_cert.factors:
        factors.append(tuple(sorted(reps[q] for q in f.indices)))
    factors.insert(position, h.indices)
    return certificate(g, factors)


def compose_sandwich(
    a: Subgroup,
    b: Subgroup,
    a_cert: Certificate | None = None,
    b_cert: Certificate | None = None,
) -> Certificate:
    """G = A*T*B for a double-coset transversal T, valid exactly when every
    conjugate of A meets B trivially; optional certificates of A and B are
    spliced in place of the subgroup factors.  Size-1 transversals are
    stripped."""
    g = a.group
    if not conjugate_intersection_trivial(a, b):
        raise ConditionFailed("some conjugate of A meets B beyond the identity")
    dc = double_cosets(a, b)
    if not dc.all_full_size:
        raise ConditionFailed("double cosets are not all of size |A|*|B|")
    a_factors = [a.indices] if a_cert is None else _embed(g, a_cert)
    b_factors = [b.indices] if b_cert is None else _embed(g, b_cert)
    cert = certificate(g, a_factors + [dc.representatives] + b_factors)
    return strip_singletons(cert) if len(dc) == 1 else cert


def divisibility_prune(factor: FactorSet) -> bool:
    """Keep an end factor only if |<F>| is a multiple of |F|; the first and
    last factor of any valid certificate generate such a subgroup."""
    g = factor.group
    closed = g.closure_indices(list(factor.indices))
    return len(closed) % len(factor) == 0


def to_dict(cert: Certificate) -> dict:
    g = cert.group
    return {
        "group": {
            "degree": g.degree,
            "generators": [str(p) for p in g.generators] or ["()"],
        },
        "pattern": list(cert.pattern),
        "factors": [[str(p) for p in f.perms()] for f in cert.factors],
        "normalized": cert.is_normalized,
    }


def from_dict(data: dict) -> Certificate:
    try:
        degree = int(data["group"]["degree"])
        gen_texts = list(data["group"]["generators"])
        pattern = [int(m) for m in data["pattern"]]
        factor_texts = list(data["factors"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCertificate(f"bad certificate structure: {exc}") from exc
    gens = [parse_cycles(t, degree) for t in gen_texts]
    table = generate_group([p for p in gens if not p.is_identity()], degree=degree)
    if len(factor_texts) != len(pattern):
        raise MalformedCertificate("pattern and factor list lengths differ")
    index_sets = []
    for m, texts in zip(pattern, factor_texts):
        perms = [parse_cycles(t, degree) for t in texts]
        indices = tuple(sorted({table.index_of(p) for p in perms}))
        if len(indices) != len(perms):
            raise MalformedCertificate("repeated element inside a factor")
        if len(indices) != m:
            raise MalformedCertificate(
                f"declared factor size {m} but {len(indices)} elements given"
            )
        index_sets.append(indices)
    return certificate(table, index_sets)


def dump_json(cert: Certificate) -> str:
    return json.dumps(to_dict(cert), indent=2, sort_keys=True) + "\n"


def load_json(text: str) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedCertificate(f"not JSON: {exc}") from exc
    return from_dict(data)
