"""Exact arithmetic in Z_k, word/index encoding, and permutation tables.

Conventions used everywhere in the package:

* residues are plain ints in [0, k), words are tuples of residues;
* word indices are lexicographic mixed-radix with coordinate 0 most
  significant, so index(w) = ((w[0]*k + w[1])*k + ...);
* composition is diagram order: perm_compose(f, g) applies f first.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidPermutation, NotAUnit, SizeGuardExceeded

Word = tuple[int, ...]

# Operations that materialize all k^n words refuse beyond this many entries.
DEFAULT_SIZE_GUARD = 10_000_000


def check_modulus(k: int) -> None:
    if k < 2:
        raise ValueError(f"modulus must be at least 2, got {k}")


def is_odd_modulus(k: int) -> bool:
    return k % 2 == 1


def guarded_size(k: int, n: int, cap: int = DEFAULT_SIZE_GUARD) -> int:
    """k^n, or SizeGuardExceeded when a dense table of that size is too big."""
    check_modulus(k)
    if n < 1:
        raise ValueError(f"wire count must be at least 1, got {n}")
    size = k**n
    if size > cap:
        raise SizeGuardExceeded(f"k^n = {size} exceeds the size guard cap {cap}")
    return size


def res_add(a: int, b: int, k: int) -> int:
    return (a + b) % k


def res_neg(a: int, k: int) -> int:
    return -a % k


def res_mul(a: int, b: int, k: int) -> int:
    return a * b % k


def is_unit(a: int, k: int) -> bool:
    return math.gcd(a, k) == 1


def units_of(k: int) -> list[int]:
    return [a for a in range(1, k) if math.gcd(a, k) == 1]


def res_inverse(a: int, k: int) -> int:
    """Multiplicative inverse of a mod k, or NotAUnit when gcd(a, k) > 1."""
    try:
        return pow(a, -1, k)
    except ValueError:
        raise NotAUnit(f"{a} is not a unit mod {k} (gcd {math.gcd(a, k)})") from None


def word_encode(w: Word, k: int) -> int:
    idx = 0
    for x in w:
        idx = idx * k + x
    return idx


def word_decode(idx: int, k: int, n: int) -> Word:
    if not 0 <= idx < k**n:
        raise ValueError(f"index {idx} out of range for k={k}, n={n}")
    coords = [0] * n
    for pos in range(n - 1, -1, -1):
        idx, coords[pos] = divmod(idx, k)
    return tuple(coords)


@dataclass(frozen=True)
class PermTable:
    """A bijection of [0, k^n), stored densely; validated on construction."""

    k: int
    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        check_modulus(self.k)
        if self.n < 1:
            raise ValueError(f"wire count must be at least 1, got {self.n}")
        size = self.k**self.n
        if len(self.table) != size:
            raise InvalidPermutation(
                f"table has {len(self.table)} entries, expected k^n = {size}"
            )
        seen = bytearray(size)
        for x, y in enumerate(self.table):
            if not 0 <= y < size:
                raise InvalidPermutation(f"image {y} of {x} out of range [0, {size})")
            if seen[y]:
                raise InvalidPermutation(f"duplicate image {y}")
            seen[y] = 1

    @property
    def size(self) -> int:
        return len(self.table)

    def apply_word(self, w: Word) -> Word:
        return word_decode(self.table[word_encode(w, self.k)], self.k, self.n)


def perm_validate(table, k: int, n: int) -> PermTable:
    """Build a PermTable from raw entries, rejecting non-bijections."""
    return PermTable(k, n, tuple(table))


def identity_perm(k: int, n: int, cap: int = DEFAULT_SIZE_GUARD) -> PermTable:
    return PermTable(k, n, tuple(range(guarded_size(k, n, cap))))


def _check_same_space(f: PermTable, g: PermTable) -> None:
    if (f.k, f.n) != (g.k, g.n):
        raise DimensionMismatch(
            f"(k={f.k}, n={f.n}) does not match (k={g.k}, n={g.n})"
        )


def perm_compose(f: PermTable, g: PermTable) -> PermTable:
    """Diagram-order composition: (f then g)(x) = g(f(x))."""
    _check_same_space(f, g)
    return PermTable(f.k, f.n, tuple(g.table[y] for y in f.table))


def perm_invert(f: PermTable) -> PermTable:
    inv = [0] * f.size
    for x, y in enumerate(f.table):
        inv[y] = x
    return PermTable(f.k, f.n, tuple(inv))


def random_perm(k: int, n: int, seed: int, cap: int = DEFAULT_SIZE_GUARD) -> PermTable:
    """Uniformly random bijection via seeded shuffle; deterministic per seed."""
    size = guarded_size(k, n, cap)
    table = list(range(size))
    random.Random(seed).shuffle(table)
    return PermTable(k, n, tuple(table))
