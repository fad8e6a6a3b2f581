"""Brute-force ground truth for the permutation class.

The class at size (n, k) consists of the permutations a_1 ... a_n of
{1..n} whose first n-k entries increase and whose longest increasing
subsequence has length at most n-k.  Splitting by the first entry a_1
gives the components B(1), ..., B(k+1); the class is empty beyond
prefix k+1 because the values below a_1 all have to fit into the k
trailing positions.

Everything else in the package (closed formula, recursion, matrix
solves) is validated against the enumeration implemented here, so this
module stays deliberately direct: generate the binom(n, k) * k!
candidates with an increasing prefix and filter by subsequence length.
The full n! search space is never touched.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterator, Sequence

from .report import CheckResult, failed, passed

Perm = tuple[int, ...]


def check_size(n: int, k: int) -> None:
    """Validate a problem size.

    Requires n >= 2k and k >= 0.  n = 0 (forcing k = 0) is admitted as
    the degenerate seed of the k = 0 recursion: the class then holds
    exactly the empty permutation.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got k={k}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got n={n}")
    if n < 2 * k:
        raise ValueError(f"n >= 2k violated: n={n}, k={k}")


def check_permutation(mu: Sequence[int]) -> None:
    n = len(mu)
    if sorted(mu) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {tuple(mu)}")


def lis_length(mu: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence.

    Patience sorting: ``tails[t]`` is the smallest value that can end an
    increasing subsequence of length t+1 seen so far.  O(n log n).
    """
    tails: list[int] = []
    for a in mu:
        pos = bisect_left(tails, a)
        if pos == len(tails):
            tails.append(a)
        else:
            tails[pos] = a
    return len(tails)


def is_member(mu: Sequence[int], n: int, k: int) -> bool:
    """Membership test straight from the definition."""
    check_size(n, k)
    check_permutation(mu)
    if len(mu) != n:
        raise ValueError(f"permutation has length {len(mu)}, expected n={n}")
    target = n - k
    if any(mu[i] >= mu[i + 1] for i in range(target - 1)):
        return False
    return lis_length(mu) <= target


def candidate_count(n: int, k: int) -> int:
    """Size of the generation space: binom(n, k) suffix choices times k!."""
    return comb(n, k) * factorial(k)


def _iter_members(n: int, k: int) -> Iterator[Perm]:
    """Yield class members in no particular order.

    Chooses the k suffix values, takes the sorted complement as the
    increasing prefix, and keeps a candidate when no suffix value starts
    an increasing subsequence longer than n-k.
    """
    target = n - k
    values = range(1, n + 1)
    for suffix_values in combinations(values, k):
        taken = set(suffix_values)
        prefix = tuple(v for v in values if v not in taken)
        for tail in permutations(suffix_values):
            mu = prefix + tail
            if lis_length(mu) <= target:
                yield mu


def enumerate_class(n: int, k: int) -> list[Perm]:
    """All members at size (n, k), in lexicographic order."""
    check_size(n, k)
    return sorted(_iter_members(n, k))


def enumerate_with_prefix(n: int, k: int, i: int) -> list[Perm]:
    """Members whose first entry is i, in lexicographic order.

    Empty for every i > k+1.  i outside 1..n is a domain error.
    """
    check_size(n, k)
    if not 1 <= i <= n:
        raise ValueError(f"prefix must lie in 1..{n}, got {i}")
    if i > k + 1:
        return []
    return sorted(mu for mu in _iter_members(n, k) if mu[0] == i)


@lru_cache(maxsize=None)
def _component_counts(n: int, k: int) -> tuple[int, ...]:
    if n == 0:
        # the empty permutation occupies the single slot of the k = 0 vector
        return (1,)
    counts = Counter(mu[0] for mu in _iter_members(n, k))
    return tuple(counts.get(i, 0) for i in range(1, k + 2))


def component_counts(n: int, k: int) -> list[int]:
    """The vector [#B(1), ..., #B(k+1)] by direct counting."""
    check_size(n, k)
    return list(_component_counts(n, k))


def insert_prefix(mu: Sequence[int], i: int) -> Perm:
    """Prepend i after shifting every entry >= i up by one.

    Maps a member with first entry r >= i at size (n, k) to a member
    with first entry i and second entry r+1 at size (n+1, k); this is
    the step behind the column recursion.  Defined only for i <= r.
    """
    check_permutation(mu)
    if not mu:
        raise ValueError("cannot insert into the empty permutation")
    r = mu[0]
    if not 1 <= i <= r:
        raise ValueError(f"prefix insertion needs 1 <= i <= first entry {r}, got i={i}")
    return (i,) + tuple(a + 1 if a >= i else a for a in mu)


def check_insertion_bijection(n: int, k: int) -> CheckResult:
    """Verify that prefix insertion is a bijection onto the next column.

    For each target prefix i, the images of the components r = i..k+1 at
    size n must be pairwise disjoint (they have distinct second entries)
    and their union must equal the component i at size n+1.
    """
    check_size(n, k)
    if n == 0:
        raise ValueError("insertion is undefined from the empty permutation; need n >= 1")
    name = f"insertion-bijection k={k} n={n}->{n + 1}"
    by_first: dict[int, list[Perm]] = {r: [] for r in range(1, k + 2)}
    for mu in _iter_members(n, k):
        by_first[mu[0]].append(mu)
    target: dict[int, set[Perm]] = {i: set() for i in range(1, k + 2)}
    for mu in _iter_members(n + 1, k):
        if mu[0] <= k + 1:
            target[mu[0]].add(mu)
    for i in range(1, k + 2):
        images: set[Perm] = set()
        total = 0
        for r in range(i, k + 2):
            for mu in by_first[r]:
                img = insert_prefix(mu, i)
                if img[1] != r + 1:
                    return failed(
                        name,
                        f"image {format_perm(img)} of {format_perm(mu)} has second "
                        f"entry {img[1]}, expected {r + 1}",
                        group="bijection",
                    )
                images.add(img)
                total += 1
        if len(images) != total:
            return failed(name, f"images for target prefix {i} collide", group="bijection")
        if images != target[i]:
            diff = sorted(images.symmetric_difference(target[i]))
            return failed(
                name,
                f"target prefix {i}: image set and enumeration differ at "
                f"{format_perm(diff[0])}",
                group="bijection",
            )
    return passed(name, group="bijection")


def format_perm(mu: Sequence[int]) -> str:
    """Digit string for n <= 9, comma-separated values otherwise."""
    if len(mu) <= 9:
        return "".join(str(a) for a in mu)
    return ",".join(str(a) for a in mu)
