"""Finite skew braces on {0, ..., n-1}.

A skew brace is one carrier set with two group structures, written a + b
and a ∘ b, whose shared identity is element 0 and which satisfy
a ∘ (b + c) = a ∘ b - a + a ∘ c for all triples.  Both operations are
stored as full Cayley tables; a SkewBrace is immutable once built and
safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import groups
from .errors import (
    IdentityMismatchError,
    NotAGroupError,
    OrderBoundError,
    ParseError,
    SkewLawError,
)
from .groups import Table

CANONICAL_BOUND = 8


@dataclass(frozen=True)
class SkewBrace:
    """Two compatible group tables.  Use validate() for untrusted input.

    Derived tables are cached on first use:
      neg[a]     additive inverse of a
      inv[a]     multiplicative inverse of a
      lam[a][b]  the twist -a + a∘b, an additive automorphism for each a
      star[a][b] the product -a + a∘b - b, i.e. lam[a][b] - b
    """

    add: Table
    mul: Table

    @property
    def order(self) -> int:
        return len(self.add)

    @cached_property
    def neg(self) -> tuple[int, ...]:
        return tuple(self.add[a].index(0) for a in range(self.order))

    @cached_property
    def inv(self) -> tuple[int, ...]:
        return tuple(self.mul[a].index(0) for a in range(self.order))

    @cached_property
    def lam(self) -> Table:
        add, mul, neg = self.add, self.mul, self.neg
        return tuple(
            tuple(add[neg[a]][mul[a][b]] for b in range(self.order))
            for a in range(self.order)
        )

    @cached_property
    def star(self) -> Table:
        add, lam, neg = self.add, self.lam, self.neg
        return tuple(
            tuple(add[lam[a][b]][neg[b]] for b in range(self.order))
            for a in range(self.order)
        )

    def describe(self) -> str:
        return f"skew brace of order {self.order}"


def validate(add, mul) -> SkewBrace:
    """Check every axiom and return the brace, or raise with a witness."""
    add = groups.as_table(add)
    mul = groups.as_table(mul)
    msg = groups.table_shape_error(add)
    if msg is None and len(mul) != len(add):
        msg = f"mul has {len(mul)} rows, add has {len(add)}"
    if msg is None:
        msg = groups.table_shape_error(mul)
    if msg is not None:
        raise ParseError(msg)

    e_add = groups.find_identity(add)
    e_mul = groups.find_identity(mul)
    if e_add is None:
        raise NotAGroupError("add", "no two-sided identity")
    if e_mul is None:
        raise NotAGroupError("mul", "no two-sided identity")
    if e_add != 0 or e_mul != 0:
        raise IdentityMismatchError(e_add, e_mul)

    groups.check_group(add, "add")
    groups.check_group(mul, "mul")

    n = len(add)
    neg = tuple(add[a].index(0) for a in range(n))
    for a in range(n):
        row_a = mul[a]
        na = neg[a]
        for b in range(n):
            left_part = add[row_a[b]][na]
            for c in range(n):
                if row_a[add[b][c]] != add[left_part][row_a[c]]:
                    raise SkewLawError(a, b, c)

    brace = SkewBrace(add, mul)
    # the twist maps are additive automorphisms by the axioms above; the
    # direct check stays as a guard against table corruption
    for a in range(n):
        lam_a = brace.lam[a]
        if sorted(lam_a) != list(range(n)):
            raise SkewLawError(a, 0, 0)
        for b in range(n):
            for c in range(n):
                if lam_a[add[b][c]] != add[lam_a[b]][lam_a[c]]:
                    raise SkewLawError(a, b, c)
    return brace


def trivial_brace(table) -> SkewBrace:
    """Both operations equal: a ∘ b = a + b."""
    t = groups.as_table(table)
    return validate(t, t)


def almost_trivial_brace(table) -> SkewBrace:
    """Multiplication is the opposite group: a ∘ b = b + a."""
    t = groups.as_table(table)
    n = len(t)
    opposite = tuple(tuple(t[b][a] for b in range(n)) for a in range(n))
    return validate(t, opposite)


def direct_product(x: SkewBrace, y: SkewBrace) -> SkewBrace:
    """Componentwise operations; pair (a, b) is encoded as a*|y| + b."""
    return SkewBrace(
        groups.product_table(x.add, y.add), groups.product_table(x.mul, y.mul)
    )


def relabel(brace: SkewBrace, perm: tuple[int, ...]) -> SkewBrace:
    return SkewBrace(
        groups.relabel_table(brace.add, perm), groups.relabel_table(brace.mul, perm)
    )


def _serialize(brace: SkewBrace) -> bytes:
    flat = [v for row in brace.add for v in row]
    flat += [v for row in brace.mul for v in row]
    return bytes(flat)


def canonicalize(brace: SkewBrace, bound: int = CANONICAL_BOUND) -> SkewBrace:
    """Relabeled copy whose serialized tables are lexicographically least.

    Any isomorphism fixes the identity, so only permutations keeping 0 in
    place are tried.  Exhaustive over (n-1)! relabelings, hence the bound.
    """
    n = brace.order
    if n > bound:
        raise OrderBoundError(f"canonical form is bounded to order {bound}, got {n}")
    best = None
    best_key = None
    for perm in groups.identity_fixing_perms(n):
        cand = relabel(brace, perm)
        key = _serialize(cand)
        if best_key is None or key < best_key:
            best, best_key = cand, key
    return best


def canonical_form(brace: SkewBrace, bound: int = CANONICAL_BOUND) -> bytes:
    return _serialize(canonicalize(brace, bound))


def _element_orders(table: Table) -> tuple[int, ...]:
    n = len(table)
    orders = []
    for a in range(n):
        k, x = 1, a
        while x != 0:
            x = table[x][a]
            k += 1
        orders.append(k)
    return tuple(orders)


def is_isomorphic(x: SkewBrace, y: SkewBrace) -> tuple[int, ...] | None:
    """A bijection carrying both tables of x onto y, or None.

    Brute force over identity-fixing permutations with an order-profile
    prefilter; fine for the catalog sizes this package targets.
    """
    if x.order != y.order:
        return None
    if sorted(_element_orders(x.add)) != sorted(_element_orders(y.add)):
        return None
    if sorted(_element_orders(x.mul)) != sorted(_element_orders(y.mul)):
        return None
    n = x.order
    x_add, x_mul, y_add, y_mul = x.add, x.mul, y.add, y.mul
    for perm in groups.identity_fixing_perms(n):
        ok = True
        for a in range(n):
            pa = perm[a]
            xa_row, xm_row = x_add[a], x_mul[a]
            ya_row, ym_row = y_add[pa], y_mul[pa]
            for b in range(n):
                pb = perm[b]
                if perm[xa_row[b]] != ya_row[pb] or perm[xm_row[b]] != ym_row[pb]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return perm
    return None
