"""
Partitions, multipartitions and their statistics.

Partitions index conjugacy classes and irreducible characters of the
symmetric group; m-tuples of partitions do the same for G(m,1,n). This module
also carries the integer side of the combinatorics: z_lambda, class sizes,
Stirling numbers of the first kind and p-adic valuations.
"""

from __future__ import annotations

import threading
from collections import Counter
from functools import lru_cache
from math import comb, factorial, prod
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from sympy import isprime, multiplicity

from ..utils.logging import get_logger
from .errors import DomainError, NotApplicableError

EMPTY_COMPONENT = "-"


class Partition:
    """An integer partition with weakly decreasing positive parts."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        values = [int(p) for p in parts]
        if any(p <= 0 for p in values):
            raise DomainError(f"Partition parts must be positive, got {values}")
        self.parts: Tuple[int, ...] = tuple(sorted(values, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,2,1"``; ``""`` and ``"-"`` give the empty partition."""
        text = text.strip()
        if text in ("", EMPTY_COMPONENT):
            return cls()
        try:
            return cls(int(part) for part in text.split(","))
        except ValueError as e:
            raise DomainError(f"Malformed partition '{text}': {e}") from e

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def multiplicities(self) -> Dict[int, int]:
        """Map part value -> number of occurrences."""
        return dict(Counter(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def cells(self) -> Iterator[Tuple[int, int]]:
        """Cells ``(row, column)``, zero-based, in row-major order."""
        for i, part in enumerate(self.parts):
            for j in range(part):
                yield i, j

    @property
    def sign(self) -> int:
        """Sign of a permutation of this cycle type."""
        return -1 if (self.size - self.length) % 2 else 1

    def dimension(self) -> int:
        """Number of standard Young tableaux (hook length formula)."""
        return factorial(self.size) // prod(hooks_and_contents(self).hooks)

    def has_even_part_with_odd_multiplicity(self) -> bool:
        return any(part % 2 == 0 and mult % 2 == 1 for part, mult in self.multiplicities().items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts)


class MultiPartition:
    """An m-tuple of partitions ``(lambda^(0), ..., lambda^(m-1))``."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Iterable[int]]):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if not comps:
            raise DomainError("A multipartition needs at least one component")
        self.components: Tuple[Partition, ...] = comps

    @classmethod
    def parse(cls, text: str) -> "MultiPartition":
        """Parse ``"2,1;-;1"``."""
        return cls(Partition.parse(chunk) for chunk in text.split(";"))

    @classmethod
    def trivial(cls, m: int, n: int) -> "MultiPartition":
        """``((n), (), ..., ())``."""
        return cls([Partition([n] if n else [])] + [Partition()] * (m - 1))

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def __getitem__(self, i: int) -> Partition:
        return self.components[i]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.components)

    def shift(self, times: int = 1) -> "MultiPartition":
        """Apply ``sh``: ``(l0, l1, ..., l_{m-1}) -> (l1, ..., l_{m-1}, l0)``."""
        t = times % self.m
        return MultiPartition(self.components[t:] + self.components[:t])

    def dimension(self) -> int:
        """Degree of the irreducible character of G(m,1,n) labelled by this tuple."""
        sizes = [c.size for c in self.components]
        multinomial = factorial(self.size) // prod(factorial(s) for s in sizes)
        return multinomial * prod(c.dimension() for c in self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPartition):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(("MultiPartition", self.components))

    def __lt__(self, other: "MultiPartition") -> bool:
        return tuple(c.parts for c in self.components) < tuple(c.parts for c in other.components)

    def __repr__(self) -> str:
        return f"MultiPartition({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        return ";".join(c.to_text() or EMPTY_COMPONENT for c in self.components)


class CellData(NamedTuple):
    """Hook lengths and contents of the cells of a Young diagram (row-major)."""
    hooks: Tuple[int, ...]
    contents: Tuple[int, ...]
    n_statistic: int


# Enumeration


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, max_part: int, max_length: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if max_length == 0:
        return ()
    result = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_bounded(n - first, first, max_length - 1):
            result.append((first,) + rest)
    return tuple(result)


def enumerate_partitions(n: int, max_length: Optional[int] = None) -> List[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise DomainError(f"Cannot partition a negative integer ({n})")
    bound = n if max_length is None else max(0, max_length)
    return [Partition(parts) for parts in _partitions_bounded(n, n, bound)]


def enumerate_multipartitions(n: int, m: int) -> List[MultiPartition]:
    """All m-tuples of partitions of total size n."""
    if n < 0 or m < 1:
        raise DomainError(f"Invalid multipartition parameters n={n}, m={m}")

    def compositions(total: int, slots: int) -> Iterator[Tuple[int, ...]]:
        if slots == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, slots - 1):
                yield (first,) + rest

    result: List[MultiPartition] = []
    for sizes in compositions(n, m):
        pools = [enumerate_partitions(s) for s in sizes]
        for combo in _product(pools):
            result.append(MultiPartition(combo))
    return result


def _product(pools: List[List[Partition]]) -> Iterator[Tuple[Partition, ...]]:
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for tail in _product(pools[1:]):
            yield (head,) + tail


# Cell statistics


def hooks_and_contents(partition: Partition) -> CellData:
    """Hook lengths, contents (column - row) and ``n(lambda) = sum (i-1) lambda_i``."""
    conj = partition.conjugate()
    hooks = []
    contents = []
    for i, j in partition.cells():
        arm = partition[i] - j - 1
        leg = conj[j] - i - 1
        hooks.append(arm + leg + 1)
        contents.append(j - i)
    n_stat = sum(i * part for i, part in enumerate(partition.parts))
    return CellData(tuple(hooks), tuple(contents), n_stat)


def z_lambda(mu: Partition) -> int:
    """``z_mu = prod_i i^{m_i} m_i!``, the centralizer order in S_n."""
    return prod(part ** mult * factorial(mult) for part, mult in mu.multiplicities().items())


def class_size(mu: Partition) -> int:
    """Size of the conjugacy class of cycle type mu in S_|mu|."""
    return factorial(mu.size) // z_lambda(mu)


# Stirling numbers

_STIRLING_CACHE: Dict[Tuple[int, int], int] = {}
_STIRLING_LOCK = threading.Lock()


def stirling_first(n: int, j: int) -> int:
    """Signless Stirling number of the first kind c(n, j)."""
    if n < 0 or j < 0 or j > n:
        raise DomainError(f"Stirling number c({n},{j}) needs 0 <= j <= n")
    cached = _STIRLING_CACHE.get((n, j))
    if cached is not None:
        return cached
    # fill the table row by row up to n
    rows: Dict[Tuple[int, int], int] = {(0, 0): 1}
    for a in range(1, n + 1):
        for b in range(0, a + 1):
            left = rows.get((a - 1, b - 1), 0) if b >= 1 else 0
            right = rows.get((a - 1, b), 0) if b <= a - 1 else 0
            rows[(a, b)] = left + (a - 1) * right
    with _STIRLING_LOCK:
        for key, value in rows.items():
            _STIRLING_CACHE.setdefault(key, value)
    return _STIRLING_CACHE[(n, j)]


def stirling_divisibility_check(n: int) -> bool:
    """``binom(n,2) | c(n,j)`` for every j with ``n - j`` odd."""
    if n < 2:
        raise DomainError(f"Stirling divisibility needs n >= 2, got {n}")
    b = comb(n, 2)
    ok = all(stirling_first(n, j) % b == 0 for j in range(n + 1) if (n - j) % 2 == 1)
    get_logger().debug(f"Stirling divisibility n={n}: {ok}")
    return ok


def class_divisibility_check(partition: Partition) -> bool:
    """``binom(n,2)`` divides the size of the class of cycle type lambda.

    Only defined for partitions with an even part of odd multiplicity.
    """
    if not partition.has_even_part_with_odd_multiplicity():
        raise NotApplicableError(
            f"{partition.to_text()} has no even part with odd multiplicity"
        )
    return class_size(partition) % comb(partition.size, 2) == 0


def eligible_classes(n: int) -> List[Partition]:
    """Partitions of n with an even part of odd multiplicity."""
    return [lam for lam in enumerate_partitions(n) if lam.has_even_part_with_odd_multiplicity()]


# Valuations


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise DomainError(f"{p} is not prime")


def padic_valuation(p: int, x: int) -> int:
    """Largest e with ``p**e | x``."""
    _require_prime(p)
    if x == 0:
        raise DomainError("The p-adic valuation of 0 is infinite")
    return int(multiplicity(p, abs(x)))


def kummer_valuation(p: int, m: int, r: int) -> int:
    """``nu_p(binom(m, r))`` as the number of borrows in ``m - r`` base p."""
    _require_prime(p)
    if r < 0 or r > m:
        raise DomainError(f"Need 0 <= r <= m, got m={m}, r={r}")
    borrows = 0
    borrow = 0
    a, b = m, r
    while a or b:
        digit = a % p - b % p - borrow
        borrow = 1 if digit < 0 else 0
        borrows += borrow
        a //= p
        b //= p
    return borrows
