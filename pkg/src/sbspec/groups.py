"""Finite groups as Cayley tables over {0, ..., n-1} with identity 0.

A table is a tuple of n row tuples; table[a][b] is the product of a and b.
All exhaustive searches in this module are bounded to order 6, where a
direct backtracking sweep over row-Latin tables is still instant.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import NotAGroupError, OrderBoundError

Table = tuple[tuple[int, ...], ...]

ENUMERATION_BOUND = 6


def as_table(rows) -> Table:
    return tuple(tuple(row) for row in rows)


def table_shape_error(table: Table) -> str | None:
    """Return a message if the table is not n x n over 0..n-1, else None."""
    n = len(table)
    if n == 0:
        return "table is empty"
    for a, row in enumerate(table):
        if len(row) != n:
            return f"row {a} has length {len(row)}, expected {n}"
        for b, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                return f"entry [{a}][{b}] = {v!r} is not in 0..{n - 1}"
    return None


def find_identity(table: Table) -> int | None:
    n = len(table)
    for e in range(n):
        if all(table[e][a] == a and table[a][e] == a for a in range(n)):
            return e
    return None


def group_violation(table: Table) -> tuple[str, tuple] | None:
    """First group-axiom failure for a well-shaped table, or None.

    The identity is required to sit at index 0; a group with its identity
    elsewhere is reported as an identity failure, not as a non-group.
    """
    n = len(table)
    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            return ("identity", (a,))
    for a in range(n):
        if 0 not in table[a]:
            return ("inverse", (a,))
        left = [table[b][a] for b in range(n)]
        if 0 not in left:
            return ("inverse", (a,))
    rows = table
    for a in range(n):
        for b in range(n):
            # associativity, stated on whole rows: row(a) after row(b)
            # must be row(a*b)
            target = rows[table[a][b]]
            row_a = rows[a]
            row_b = rows[b]
            for c in range(n):
                if row_a[row_b[c]] != target[c]:
                    return ("associativity", (a, b, c))
    return None


def is_group_table(table: Table) -> bool:
    return table_shape_error(table) is None and group_violation(table) is None


def check_group(table: Table, which: str = "table") -> None:
    """Raise NotAGroupError if the table fails the group axioms."""
    msg = table_shape_error(table)
    if msg is not None:
        raise NotAGroupError(which, "bad shape", msg)
    bad = group_violation(table)
    if bad is not None:
        raise NotAGroupError(which, bad[0], bad[1])


def cyclic_table(n: int) -> Table:
    return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))


def product_table(s: Table, t: Table) -> Table:
    """Direct product, element (a, b) encoded as a * len(t) + b."""
    m = len(t)
    pairs = [(a, b) for a in range(len(s)) for b in range(m)]
    return tuple(
        tuple(s[a1][a2] * m + t[b1][b2] for (a2, b2) in pairs) for (a1, b1) in pairs
    )


def klein_table() -> Table:
    return product_table(cyclic_table(2), cyclic_table(2))


def symmetric_table(m: int) -> Table:
    """Cayley table of all permutations of m letters, identity first.

    Elements are the permutations in lexicographic order, so the identity
    permutation lands at index 0.  Product p*q acts by q first, then p.
    """
    perms = sorted(itertools.permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    return tuple(
        tuple(index[tuple(p[q[x]] for x in range(m))] for q in perms) for p in perms
    )


def relabel_table(table: Table, perm: tuple[int, ...]) -> Table:
    """Transport the table along the bijection a -> perm[a]."""
    n = len(table)
    new = [[0] * n for _ in range(n)]
    for a in range(n):
        pa = perm[a]
        row = table[a]
        target = new[pa]
        for b in range(n):
            target[perm[b]] = perm[row[b]]
    return as_table(new)


def identity_fixing_perms(n: int):
    for rest in itertools.permutations(range(1, n)):
        yield (0,) + rest


@lru_cache(maxsize=None)
def canonical_group_table(table: Table) -> Table:
    """Lexicographically least relabeling of the table; identity stays at 0."""
    return min(relabel_table(table, p) for p in identity_fixing_perms(len(table)))


def automorphisms(table: Table) -> tuple[tuple[int, ...], ...]:
    n = len(table)
    found = []
    for p in identity_fixing_perms(n):
        if all(p[table[a][b]] == table[p[a]][p[b]] for a in range(n) for b in range(n)):
            found.append(p)
    return tuple(found)


def _row_candidates(partial: list[tuple[int, ...]], r: int, n: int):
    """All valid next rows for a table whose rows 0..r-1 are fixed.

    Row r must start with r (column 0 is forced by the identity) and keep
    every column a partial permutation.
    """
    col_used = [{partial[i][c] for i in range(r)} for c in range(n)]

    def extend(row: list[int], used: int):
        c = len(row)
        if c == n:
            yield tuple(row)
            return
        forced = r if c == 0 else None
        choices = (forced,) if forced is not None else range(n)
        for v in choices:
            if used >> v & 1 or v in col_used[c]:
                continue
            # row 0 of any identity table is 0..n-1, so column c cannot
            # repeat value row[c] either; col_used already covers it.
            row.append(v)
            yield from extend(row, used | 1 << v)
            row.pop()

    yield from extend([], 0)


@lru_cache(maxsize=None)
def all_group_tables(n: int) -> tuple[Table, ...]:
    """Every group Cayley table on {0..n-1} with identity 0, in lex order."""
    if n > ENUMERATION_BOUND:
        raise OrderBoundError(
            f"group table search is bounded to order {ENUMERATION_BOUND}, got {n}"
        )
    if n == 0:
        return ()
    first = tuple(range(n))
    results = []

    def fill(partial: list[tuple[int, ...]]):
        r = len(partial)
        if r == n:
            table = tuple(partial)
            if group_violation(table) is None:
                results.append(table)
            return
        for row in _row_candidates(partial, r, n):
            partial.append(row)
            fill(partial)
            partial.pop()

    fill([first])
    return tuple(results)


@lru_cache(maxsize=None)
def group_representatives(n: int) -> tuple[Table, ...]:
    """One canonical table per isomorphism class of groups of order n."""
    seen = {}
    for table in all_group_tables(n):
        seen.setdefault(canonical_group_table(table), None)
    return tuple(sorted(seen))


def group_fingerprint(table: Table) -> str:
    """Short stable identifier of the isomorphism class of a group table."""
    import hashlib

    canon = canonical_group_table(table)
    flat = bytes(v for row in canon for v in row)
    return hashlib.sha256(flat).hexdigest()[:12]
