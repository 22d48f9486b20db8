"""Set partitions, non-crossing partitions and the moment-cumulant recursion.

Cumulant sequences are 1-based: ``c[k - 1]`` is the ``k``-th cumulant.
Moment sequences are 0-based with ``m[0] == 1``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .params import Framework

MAX_CLASSICAL = 12
MAX_FREE = 14

Partition = tuple  # tuple of blocks, each a sorted tuple of 1-based indices


def _check_range(n: int, cap: int) -> None:
    if not 1 <= n <= cap:
        raise ValueError(f"n = {n} outside 1..{cap}")


def set_partitions(n: int) -> list[Partition]:
    """All set partitions of ``{1..n}`` in restricted-growth-string order."""
    _check_range(n, MAX_CLASSICAL)
    out = []
    rgs = [0] * n

    def rec(i: int, top: int) -> None:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for pos, label in enumerate(rgs, start=1):
                blocks[label].append(pos)
            out.append(tuple(tuple(b) for b in blocks))
            return
        for label in range(top + 2):
            rgs[i] = label
            rec(i + 1, max(top, label))

    rgs[0] = 0
    rec(1, 0)
    return out


def is_noncrossing(blocks: Partition) -> bool:
    """No ``x1 < y1 < x2 < y2`` with the x's in one block and the y's in another."""
    for i, A in enumerate(blocks):
        for B in blocks[i + 1 :]:
            for x1 in A:
                for x2 in A:
                    if x2 <= x1:
                        continue
                    inside = any(x1 < y < x2 for y in B)
                    outside = any(y < x1 or y > x2 for y in B)
                    if inside and outside:
                        return False
    return True


def _nc_interval(lo: int, hi: int) -> list[list[tuple]]:
    """Non-crossing partitions of ``{lo..hi}`` as lists of blocks."""
    if lo > hi:
        return [[]]
    out = []
    rest = list(range(lo + 1, hi + 1))
    # choose the other members of the block containing lo; the gaps between
    # consecutive members are partitioned independently
    for mask in range(1 << len(rest)):
        members = [lo] + [v for k, v in enumerate(rest) if mask >> k & 1]
        gaps = [(members[k] + 1, members[k + 1] - 1) for k in range(len(members) - 1)]
        gaps.append((members[-1] + 1, hi))
        partials = [[tuple(members)]]
        for a, b in gaps:
            partials = [p + q for p in partials for q in _nc_interval(a, b)]
        out.extend(partials)
    return out


def noncrossing_partitions(n: int) -> list[Partition]:
    """All non-crossing partitions of ``{1..n}``, generated directly (count is Catalan(n))."""
    _check_range(n, MAX_FREE)
    return [tuple(sorted(p)) for p in _nc_interval(1, n)]


def _merge(sizes: tuple, extra: tuple) -> tuple:
    return tuple(sorted(sizes + extra))


@lru_cache(maxsize=None)
def _classical_profile(n: int) -> tuple:
    # the block holding element 1 has size k, chosen in C(n-1, k-1) ways;
    # the remaining n-k elements are partitioned freely
    if n == 0:
        return (((), 1),)
    acc: Counter = Counter()
    for k in range(1, n + 1):
        ways = comb(n - 1, k - 1)
        for sizes, count in _classical_profile(n - k):
            acc[_merge(sizes, (k,))] += ways * count
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _gap_profiles(total: int, gaps: int) -> tuple:
    # profiles of `gaps` consecutive intervals of total length `total`,
    # each partitioned non-crossingly on its own
    if gaps == 0:
        return (((), 1),) if total == 0 else ()
    acc: Counter = Counter()
    for first in range(total + 1):
        for s1, c1 in _free_profile(first):
            for s2, c2 in _gap_profiles(total - first, gaps - 1):
                acc[_merge(s1, s2)] += c1 * c2
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _free_profile(n: int) -> tuple:
    # the block holding element 1 has k members; the k gaps after its
    # members are non-crossing partitions of disjoint intervals
    if n == 0:
        return (((), 1),)
    acc: Counter = Counter()
    for k in range(1, n + 1):
        for sizes, count in _gap_profiles(n - k, k):
            acc[_merge(sizes, (k,))] += count
    return tuple(sorted(acc.items()))


def block_profile(framework: Framework, n: int) -> dict:
    """``{sorted block sizes: number of partitions}`` over P_n or NC(n).

    Counted by splitting off the block that contains 1, which yields the
    same tallies as enumerating the partitions without materializing them.
    """
    framework = Framework(framework)
    table = _classical_profile(n) if framework is Framework.CLASSICAL else _free_profile(n)
    return dict(table)


def enumerated_profile(framework: Framework, n: int) -> dict:
    """Same tallies as :func:`block_profile`, by brute-force enumeration."""
    framework = Framework(framework)
    parts = set_partitions(n) if framework is Framework.CLASSICAL else noncrossing_partitions(n)
    return dict(Counter(tuple(sorted(len(b) for b in p)) for p in parts))


def _cap(framework: Framework) -> int:
    return MAX_CLASSICAL if framework is Framework.CLASSICAL else MAX_FREE


def _profile_sum(profile: dict, c: Sequence, skip_single: int | None = None):
    total = Fraction(0)
    for sizes, count in profile.items():
        if skip_single is not None and sizes == (skip_single,):
            continue
        term = Fraction(count)
        for s in sizes:
            term = term * c[s - 1]
            if term == 0:
                break
        total = total + term
    return total


def moments_to_cumulants(framework: Framework, m: Sequence, n: int) -> list:
    """Cumulants ``C_1..C_n`` from moments ``m(0..n)``.

    ``m(k) = sum over partitions of prod_{blocks} C_{|block|}``, with
    ``P_k`` classically and ``NC(k)`` in the free case; the one-block term is
    isolated to solve for ``C_k``.
    """
    framework = Framework(framework)
    _check_range(n, _cap(framework))
    if len(m) < n + 1:
        raise ValueError(f"insufficient moments: need m(0..{n}), have {len(m)}")
    c: list = []
    for k in range(1, n + 1):
        c.append(Fraction(0))
        c[k - 1] = m[k] - _profile_sum(block_profile(framework, k), c, skip_single=k)
    return c


def cumulants_to_moments(framework: Framework, c: Sequence, n: int) -> list:
    """Moments ``m(0..n)`` from cumulants ``C_1, C_2, ...`` (missing ones are 0)."""
    framework = Framework(framework)
    _check_range(n, _cap(framework))
    cc = list(c[:n]) + [Fraction(0)] * max(0, n - len(c))
    return [Fraction(1)] + [_profile_sum(block_profile(framework, k), cc) for k in range(1, n + 1)]
