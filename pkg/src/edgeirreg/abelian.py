"""Finite Abelian groups as direct sums of cyclic groups.

A group is stored as the list of its cyclic factor orders, e.g. ``Z4xZ2``.
Elements are residue vectors.  Every element also has an integer *index*
(mixed radix, first factor most significant), so iterating ``range(order)``
walks the elements in lexicographic residue order.  The search code works
with indices and the addition table; the public API works with
:class:`GroupElement`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product

import numpy as np

__all__ = [
    "AbelianGroup",
    "GroupElement",
    "GroupMismatch",
    "cyclic",
    "enumerate_groups",
    "factorize",
    "integer_partitions",
    "parse_group",
    "parse_element",
]

# largest order for which the full addition table is materialized
TABLE_LIMIT = 2048


class GroupMismatch(ValueError):
    """Raised when elements of different groups are combined."""


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def integer_partitions(n: int, largest: int | None = None):
    """Yield partitions of n as non-increasing tuples, largest parts first."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class AbelianGroup:
    """Direct sum Z_{n_1} x ... x Z_{n_k}.  The empty product is the trivial group."""

    factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = tuple(int(f) for f in self.factors)
        if any(f < 2 for f in fs):
            raise ValueError(f"cyclic factors must be >= 2, got {fs}")
        object.__setattr__(self, "factors", fs)

    # -- structure ---------------------------------------------------------

    @cached_property
    def order(self) -> int:
        return math.prod(self.factors)

    def __len__(self):
        return self.order

    def __str__(self):
        if not self.factors:
            return "Z1"
        return "x".join(f"Z{f}" for f in self.factors)

    def __repr__(self):
        return f"AbelianGroup({str(self)})"

    @property
    def spec(self) -> str:
        return str(self)

    @cached_property
    def elementary_divisors(self) -> tuple[int, ...]:
        """Prime powers of the primary decomposition, sorted."""
        out = []
        for f in self.factors:
            for p, e in factorize(f).items():
                out.append(p**e)
        return tuple(sorted(out))

    @cached_property
    def invariant_factors(self) -> tuple[int, ...]:
        """Canonical form n_1 | n_2 | ... | n_k."""
        by_prime: dict[int, list[int]] = {}
        for q in self.elementary_divisors:
            p = min(factorize(q))
            by_prime.setdefault(p, []).append(q)
        for lst in by_prime.values():
            lst.sort(reverse=True)
        k = max((len(v) for v in by_prime.values()), default=0)
        inv = []
        for i in range(k):
            inv.append(math.prod(v[i] for v in by_prime.values() if i < len(v)))
        return tuple(reversed(inv))

    def canonical(self) -> AbelianGroup:
        return AbelianGroup(self.invariant_factors)

    def is_isomorphic(self, other: AbelianGroup) -> bool:
        return self.invariant_factors == other.invariant_factors

    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def sylow_two_is_z2(self) -> bool:
        """True iff the 2-part of the group is a single Z_2, i.e. order = 2 mod 4."""
        twos = [q for q in self.elementary_divisors if q % 2 == 0]
        return twos == [2]

    # -- elements ----------------------------------------------------------

    @cached_property
    def _radix(self) -> tuple[int, ...]:
        r, acc = [], 1
        for f in reversed(self.factors):
            r.append(acc)
            acc *= f
        return tuple(reversed(r))

    def element(self, residues) -> GroupElement:
        if isinstance(residues, (int, np.integer)):
            residues = (residues,)
        res = tuple(int(r) for r in residues)
        if len(res) != len(self.factors):
            raise GroupMismatch(f"{res} has wrong length for {self}")
        return GroupElement(self, tuple(r % f for r, f in zip(res, self.factors)))

    def __call__(self, *residues) -> GroupElement:
        return self.element(residues)

    @property
    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self.factors))

    def index(self, a: GroupElement) -> int:
        self._check(a)
        return sum(r * w for r, w in zip(a.residues, self._radix))

    def from_index(self, i: int) -> GroupElement:
        return GroupElement(self, self._residues_of(i))

    def _residues_of(self, i: int) -> tuple[int, ...]:
        if not 0 <= i < self.order:
            raise IndexError(i)
        return tuple((i // w) % f for w, f in zip(self._radix, self.factors))

    def elements(self) -> list[GroupElement]:
        """All elements in lexicographic residue order."""
        return [GroupElement(self, r) for r in product(*(range(f) for f in self.factors))]

    def __iter__(self):
        return iter(self.elements())

    def __contains__(self, a) -> bool:
        return isinstance(a, GroupElement) and a.group == self

    def _check(self, *xs):
        for x in xs:
            if not isinstance(x, GroupElement) or x.group != self:
                raise GroupMismatch(f"{x!r} is not an element of {self}")

    # -- arithmetic --------------------------------------------------------

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check(a, b)
        return GroupElement(
            self, tuple((x + y) % f for x, y, f in zip(a.residues, b.residues, self.factors))
        )

    def neg(self, a: GroupElement) -> GroupElement:
        self._check(a)
        return GroupElement(self, tuple((-x) % f for x, f in zip(a.residues, self.factors)))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.add(a, self.neg(b))

    def mul(self, k: int, a: GroupElement) -> GroupElement:
        self._check(a)
        return GroupElement(self, tuple((k * x) % f for x, f in zip(a.residues, self.factors)))

    def element_sum(self) -> GroupElement:
        """Sum of all elements of the group."""
        # coordinate i sums to (order/n_i) * n_i(n_i-1)/2
        out = []
        for f in self.factors:
            out.append(((self.order // f) * (f * (f - 1) // 2)) % f)
        return GroupElement(self, tuple(out))

    # -- index arithmetic (used by the searches) ----------------------------

    @cached_property
    def _residue_matrix(self) -> np.ndarray:
        if not self.factors:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.indices(self.factors).reshape(len(self.factors), -1).T
        return grids.astype(np.int64)

    def _encode(self, res: np.ndarray) -> np.ndarray:
        return res @ np.asarray(self._radix, dtype=np.int64)

    @cached_property
    def add_table(self) -> list[list[int]]:
        """add_table[i][j] = index of from_index(i) + from_index(j)."""
        if self.order > TABLE_LIMIT:
            raise MemoryError(f"addition table for order {self.order} exceeds {TABLE_LIMIT}")
        R = self._residue_matrix
        mod = np.asarray(self.factors, dtype=np.int64)
        S = (R[:, None, :] + R[None, :, :]) % mod if self.factors else np.zeros((1, 1, 0), np.int64)
        return self._encode(S).tolist()

    @cached_property
    def neg_table(self) -> list[int]:
        R = self._residue_matrix
        mod = np.asarray(self.factors, dtype=np.int64)
        return self._encode((-R) % mod if self.factors else R).tolist()

    def index_adder(self):
        """Return a fast ``f(i, j) -> index`` for this group."""
        if self.order <= TABLE_LIMIT:
            t = self.add_table
            return lambda i, j: t[i][j]
        radix, fs = self._radix, self.factors

        def add(i, j):
            return sum(((i // w + j // w) % f) * w for w, f in zip(radix, fs))

        return add

    def index_negator(self):
        if self.order <= TABLE_LIMIT:
            t = self.neg_table
            return t.__getitem__
        radix, fs = self._radix, self.factors
        return lambda i: sum(((-(i // w)) % f) * w for w, f in zip(radix, fs))

    # -- subgroups ---------------------------------------------------------

    def closure(self, gens) -> list[GroupElement]:
        """Subgroup generated by ``gens``, sorted lexicographically."""
        idx = self._closure_idx([self.index(g) for g in gens])
        return [self.from_index(i) for i in sorted(idx)]

    def _closure_idx(self, gens: list[int], base: frozenset[int] | None = None) -> frozenset[int]:
        add = self.index_adder()
        H = set(base) if base else {0}
        for g in gens:
            if g in H:
                continue
            # H + <g> = union of H + k g, stop once k g lands back in H
            layer, step = set(H), g
            while step not in H:
                layer.update(add(h, step) for h in H)
                step = add(step, g)
            H = layer
        return frozenset(H)

    def subgroup_of_order(self, k: int) -> list[GroupElement]:
        """A subgroup of order k, built greedily from lexicographically least generators."""
        if k < 1 or self.order % k:
            raise ValueError(f"{k} does not divide |{self}| = {self.order}")
        H = frozenset({0})
        i = 1
        while len(H) < k:
            if i not in H:
                cand = self._closure_idx([i], H)
                if k % len(cand) == 0:
                    H = cand
            i += 1
        return [self.from_index(j) for j in sorted(H)]

    def is_subgroup(self, elems) -> bool:
        elems = list(elems)
        self._check(*elems)
        S = {self.index(a) for a in elems}
        if 0 not in S:
            return False
        add, neg = self.index_adder(), self.index_negator()
        return all(neg(a) in S for a in S) and all(add(a, b) in S for a in S for b in S)

    def coset_representatives(self, h) -> list[GroupElement]:
        """Lexicographically least transversal of ``self / h``."""
        h = list(h)
        if not self.is_subgroup(h):
            raise ValueError("argument is not a subgroup")
        add = self.index_adder()
        H = [self.index(a) for a in h]
        covered = bytearray(self.order)
        reps = []
        for r in range(self.order):
            if covered[r]:
                continue
            reps.append(self.from_index(r))
            for x in H:
                covered[add(r, x)] = 1
        return reps

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.factors) if self.factors else 1

    def unit_orbit_representatives(self) -> list[int]:
        """Least index in each orbit of x -> kx, gcd(k, exponent) = 1.

        These maps are automorphisms of every finite Abelian group.
        """
        e = self.exponent
        units = [k for k in range(1, e) if math.gcd(k, e) == 1] or [1]
        R = self._residue_matrix
        mod = np.asarray(self.factors, dtype=np.int64)
        images = [self._encode((k * R) % mod) if self.factors else np.zeros(1, np.int64) for k in units]
        seen = bytearray(self.order)
        reps = []
        for x in range(self.order):
            if not seen[x]:
                reps.append(x)
                for img in images:
                    seen[int(img[x])] = 1
        return reps

    def two_torsion_transversal(self) -> list[int]:
        """Indices of a transversal of G modulo {t : 2t = 0}."""
        add = self.index_adder()
        T = [t for t in range(self.order) if add(t, t) == 0]
        covered = bytearray(self.order)
        reps = []
        for r in range(self.order):
            if not covered[r]:
                reps.append(r)
                for t in T:
                    covered[add(r, t)] = 1
        return reps


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup
    residues: tuple[int, ...]

    def __add__(self, other):
        return self.group.add(self, other)

    def __sub__(self, other):
        return self.group.sub(self, other)

    def __neg__(self):
        return self.group.neg(self)

    def __rmul__(self, k: int):
        return self.group.mul(k, self)

    def is_zero(self) -> bool:
        return not any(self.residues)

    @property
    def index(self) -> int:
        return self.group.index(self)

    def __str__(self):
        if len(self.residues) == 1:
            return str(self.residues[0])
        return "(" + ",".join(map(str, self.residues)) + ")"

    def __repr__(self):
        return f"<{self.group}:{self}>"


def cyclic(n: int) -> AbelianGroup:
    return AbelianGroup((n,) if n > 1 else ())


def direct_sum(*groups: AbelianGroup) -> AbelianGroup:
    return AbelianGroup(reduce(lambda a, b: a + b, (g.factors for g in groups), ()))


def enumerate_groups(order: int) -> list[AbelianGroup]:
    """One group per isomorphism class of Abelian groups of the given order.

    Each group is returned in primary-decomposition form; the cyclic group
    comes first.
    """
    if order < 1:
        raise ValueError("order must be positive")
    per_prime = []
    for p, e in sorted(factorize(order).items()):
        per_prime.append([tuple(p**k for k in part) for part in integer_partitions(e)])
    return [AbelianGroup(sum(combo, ())) for combo in product(*per_prime)]


_FACTOR = re.compile(r"^z(\d+)$")


def parse_group(spec: str) -> AbelianGroup:
    """Parse ``"Z6"``, ``"Z2xZ3"``, ``"z4xz2"``; ``"Z1"`` or ``"trivial"`` is the trivial group."""
    s = spec.strip().lower().replace(" ", "")
    if s in ("", "trivial", "0", "1"):
        return AbelianGroup(())
    factors = []
    for part in s.split("x"):
        m = _FACTOR.match(part)
        if not m:
            raise ValueError(f"bad group spec {spec!r}")
        f = int(m.group(1))
        if f == 0:
            raise ValueError(f"bad group spec {spec!r}")
        if f > 1:
            factors.append(f)
    return AbelianGroup(tuple(factors))


def parse_element(group: AbelianGroup, text: str) -> GroupElement:
    """Parse ``"(1,2)"`` or a bare integer for cyclic groups."""
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    parts = [p for p in t.split(",") if p.strip()]
    res = tuple(int(p) for p in parts)
    if any(r < 0 or r >= f for r, f in zip(res, group.factors)) or len(res) != len(group.factors):
        raise ValueError(f"{text!r} is not an element of {group}")
    return group.element(res)
