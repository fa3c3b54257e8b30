"""Pattern bookkeeping: prime words of n, palindromes, reversal classes,
and the discard step licensed by a prime-index subgroup.

A prime word of n is an ordering of its prime factors with multiplicity;
words w and reverse(w) certify each other, so plans work on reversal
classes represented by min(w, reversed(w)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial


def prime_factors(n: int) -> list[int]:
    """Prime factors of n in nondecreasing order, with multiplicity."""
    if n < 2:
        return []
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def omega_reduction(n: int) -> int:
    """Number of prime factors of n counted with multiplicity."""
    return len(prime_factors(n))


def _multiplicities(n: int) -> list[int]:
    primes = prime_factors(n)
    return [primes.count(p) for p in sorted(set(primes))]


def word_count(n: int) -> int:
    """Distinct prime words of n: omega! over the multiplicity factorials."""
    ks = _multiplicities(n)
    total = factorial(sum(ks))
    for k in ks:
        total //= factorial(k)
    return total


def palindrome_count(n: int) -> int:
    """Prime words of n equal to their own reversal.

    Zero when two or more prime multiplicities are odd; otherwise the half
    length multinomial, with the single odd prime forced onto the centre.
    """
    ks = _multiplicities(n)
    odd = [k for k in ks if k % 2]
    if len(odd) > 1:
        return 0
    halves = [(k - 1) // 2 if k % 2 else k // 2 for k in ks]
    total = factorial(sum(halves))
    for h in halves:
        total //= factorial(h)
    return total


def reversal_class_count(n: int) -> int:
    """Words counted up to reversal: (words + palindromes) / 2."""
    return (word_count(n) + palindrome_count(n)) // 2


def _distinct_permutations(items: list[int]):
    if not items:
        yield ()
        return
    prev = None
    for i, x in enumerate(items):
        if x == prev:
            continue
        prev = x
        rest = items[:i] + items[i + 1:]
        for tail in _distinct_permutations(rest):
            yield (x,) + tail


def enumerate_words(n: int) -> list[tuple[int, ...]]:
    """All prime words of n in lexicographic order."""
    return sorted(_distinct_permutations(prime_factors(n)))


def class_representative(word: tuple[int, ...]) -> tuple[int, ...]:
    return min(word, tuple(reversed(word)))


def enumerate_reversal_classes(n: int) -> list[tuple[int, ...]]:
    """One representative per reversal class: the lexicographic minimum of
    the word and its reversal, listed in lexicographic order."""
    return sorted({class_representative(w) for w in enumerate_words(n)})


@dataclass
class PatternPlan:
    """Reversal classes still to be certified, plus those already
    discharged with the reason."""

    n: int
    classes: list[tuple[int, ...]]
    discarded: list[tuple[tuple[int, ...], str]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "omega": omega_reduction(self.n),
            "classes": [list(w) for w in self.classes],
            "discarded": [
                {"word": list(w), "reason": reason} for w, reason in self.discarded
            ],
        }


def pattern_plan(n: int) -> PatternPlan:
    return PatternPlan(n, enumerate_reversal_classes(n))


def prime_index_discard(plan: PatternPlan, p: int, *, subgroup_multifold_asserted: bool = False) -> PatternPlan:
    """Drop classes whose word starts or ends with the prime p.

    Sound when G has a multifold-factorizable subgroup of index p: those
    words lift from the subgroup through a transversal.  The caller must
    assert that hypothesis explicitly.
    """
    if not subgroup_multifold_asserted:
        raise ValueError(
            "refusing to discard: assert the index-p subgroup hypothesis"
        )
    if plan.n % p:
        return plan
    kept, dropped = [], list(plan.discarded)
    reason = f"lifts from an index-{p} subgroup"
    for w in plan.classes:
        if w[0] == p or w[-1] == p:
            dropped.append((w, reason))
        else:
            kept.append(w)
    return PatternPlan(plan.n, kept, dropped)


def enumerate_ordered_factorizations(n: int, k: int) -> list[tuple[int, ...]]:
    """Ordered k-tuples of integers > 1 with product n, lexicographic."""
    if k == 0:
        return [()] if n == 1 else []
    if k == 1:
        return [(n,)] if n > 1 else []
    out = []
    for d in range(2, n + 1):
        if n % d == 0:
            for tail in enumerate_ordered_factorizations(n // d, k - 1):
                out.append((d,) + tail)
    return sorted(out)
