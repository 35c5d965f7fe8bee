"""Concrete finite groups with dense element indices.

Every group is realized as a set of permutations: constructors take
permutation generators and enumerate the closure breadth-first, so the
element at index 0 is always the identity and enumeration order is
deterministic for a fixed generator list.  Groups built from an abstract
multiplication table (quotients) store the rows of that table as their
permutations -- the left-regular representation -- which keeps a single
code path for everything downstream.

Element orders come from permutation cycle structure; a full
multiplication table is materialized lazily and only for groups small
enough to need one (subgroup lattices, quotients, isomorphism search).
All objects are immutable after construction, so concurrent reads are
safe.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property

from .exactmath import euler_phi, is_prime

CLOSURE_CAP = 2_000_000
TABLE_CAP = 4096
SUBGROUP_CAP = 200
ISO_CAP = 256
PRODUCT_CAP = 65_536

Perm = tuple[int, ...]


class CapExceeded(RuntimeError):
    """An enumeration exceeded its configured size cap."""


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: (p.q)[i] = p[q[i]]."""
    return tuple(map(p.__getitem__, q))


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def perm_order(p: Perm) -> int:
    """lcm of cycle lengths."""
    seen = bytearray(len(p))
    order = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            x = p[x]
            length += 1
        order = math.lcm(order, length)
    return order


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def is_permutation(images, degree: int) -> bool:
    return len(images) == degree and sorted(images) == list(range(degree))


@dataclass(frozen=True)
class OrderSpectrum:
    """Multiset of element orders: ((d1, n1), (d2, n2), ...), d1 < d2 < ..."""

    entries: tuple[tuple[int, int], ...]

    @classmethod
    def from_orders(cls, orders) -> "OrderSpectrum":
        counts: dict[int, int] = {}
        for o in orders:
            counts[o] = counts.get(o, 0) + 1
        return cls(tuple(sorted(counts.items())))

    def __iter__(self):
        return iter(self.entries)

    def total(self) -> int:
        return sum(n for _, n in self.entries)

    def exponent(self) -> int:
        return math.lcm(*(d for d, _ in self.entries)) if self.entries else 1

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def cyclic_counts(self) -> tuple[tuple[int, int], ...]:
        """Per order d, the number n_d / phi(d) of cyclic subgroups of order d."""
        out = []
        for d, n in self.entries:
            phi = euler_phi(d)
            if n % phi:
                raise ValueError(f"phi({d}) = {phi} does not divide n_{d} = {n}")
            out.append((d, n // phi))
        return tuple(out)

    def cyclic_count(self) -> int:
        """|C(G)|, the trivial subgroup included (the d = 1 term)."""
        return sum(c for _, c in self.cyclic_counts())


@dataclass(frozen=True)
class Subgroup:
    parent: "Group"
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, idx: int) -> bool:
        return idx in set(self.members)

    def is_trivial(self) -> bool:
        return self.members == (0,)

    def is_whole_group(self) -> bool:
        return len(self.members) == self.parent.size

    def is_cyclic(self) -> bool:
        return any(self.parent.element_order(i) == len(self.members)
                   for i in self.members)

    def as_group(self, label: str | None = None) -> "Group":
        g = self.parent
        pos = {x: k for k, x in enumerate(self.members)}
        rows = [tuple(pos[g.op(a, b)] for b in self.members) for a in self.members]
        return Group.from_table(rows, label=label or f"{g.label}|sub{len(self)}")


class Group:
    """Finite group on indices 0..size-1, index 0 the identity."""

    def __init__(self, perms: list[Perm], label: str | None = None,
                 gen_indices: tuple[int, ...] = ()):
        self.perms = tuple(perms)
        self.degree = len(perms[0]) if perms else 0
        self.label = label or f"G{len(perms)}"
        self._index = {p: i for i, p in enumerate(self.perms)}
        if len(self._index) != len(self.perms):
            raise ValueError("duplicate permutations in element list")
        if self.perms[0] != identity_perm(self.degree):
            raise ValueError("element 0 must be the identity")
        self._gen_indices = tuple(gen_indices)
        self._table: list[Perm] | None = None

    # -- construction ----------------------------------------------------

    @classmethod
    def from_generators(cls, degree: int, gens, label: str | None = None,
                        closure_cap: int = CLOSURE_CAP) -> "Group":
        """BFS closure of permutation generators; deterministic ordering."""
        gen_perms = []
        for k, g in enumerate(gens):
            g = tuple(g)
            if not is_permutation(g, degree):
                raise ValueError(
                    f"generator {k} is not a permutation of 0..{degree - 1}: {g}")
            gen_perms.append(g)
        ident = identity_perm(degree)
        elems = [ident]
        index = {ident: 0}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gen_perms:
                    q = compose(p, g)
                    if q not in index:
                        index[q] = len(elems)
                        elems.append(q)
                        nxt.append(q)
                        if len(elems) > closure_cap:
                            raise CapExceeded(
                                f"closure exceeds cap of {closure_cap} elements")
            frontier = nxt
        gen_idx = tuple(index[g] for g in gen_perms)
        return cls(elems, label=label, gen_indices=gen_idx)

    @classmethod
    def from_table(cls, rows, label: str | None = None) -> "Group":
        """Group from a multiplication table; rows become the permutations."""
        perms = [tuple(r) for r in rows]
        n = len(perms)
        for i, r in enumerate(perms):
            if not is_permutation(r, n):
                raise ValueError(f"table row {i} is not a permutation of 0..{n - 1}")
        g = cls(perms, label=label)
        g._table = perms
        return g

    # -- basic structure -------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.perms)

    def __len__(self) -> int:
        return len(self.perms)

    def __repr__(self) -> str:
        return f"<Group {self.label}: order {self.size}, degree {self.degree}>"

    def op(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self._index[compose(self.perms[i], self.perms[j])]

    def inverse(self, i: int) -> int:
        return self._index[perm_inverse(self.perms[i])]

    def _ensure_table(self):
        if self._table is None:
            if self.size > TABLE_CAP:
                raise CapExceeded(
                    f"multiplication table for order {self.size} exceeds cap {TABLE_CAP}")
            idx = self._index
            self._table = [
                tuple(idx[compose(p, q)] for q in self.perms) for p in self.perms
            ]

    def element_order(self, i: int) -> int:
        return perm_order(self.perms[i])

    @cached_property
    def _orders(self) -> tuple[int, ...]:
        return tuple(perm_order(p) for p in self.perms)

    def order_spectrum(self) -> OrderSpectrum:
        return OrderSpectrum.from_orders(self._orders)

    def exponent(self) -> int:
        return self.order_spectrum().exponent()

    def is_abelian(self) -> bool:
        gens = self._gen_indices or tuple(range(self.size))
        return all(self.op(a, b) == self.op(b, a) for a in gens for b in gens)

    def is_cyclic(self) -> bool:
        return self.size == 1 or max(self._orders) == self.size

    # -- cyclic subgroups ------------------------------------------------

    def cyclic_subgroup_count(self) -> int:
        """|C(G)| from the spectrum: sum over d of n_d / phi(d)."""
        return self.order_spectrum().cyclic_count()

    def cyclic_subgroups(self) -> list[tuple[int, ...]]:
        """Distinct sets <a>, sorted; the independent count of C(G)."""
        seen = set()
        for i in range(self.size):
            members = [0]
            x = i
            while x != 0:
                members.append(x)
                x = self.op(x, i)
            seen.add(tuple(sorted(members)))
        return sorted(seen, key=lambda t: (len(t), t))

    # -- subgroup lattice ------------------------------------------------

    def generated_subgroup(self, gens: tuple[int, ...]) -> tuple[int, ...]:
        """Members of <gens>, sorted."""
        members = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.op(x, g)
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(members))

    def all_subgroups(self, cap: int = SUBGROUP_CAP) -> list[Subgroup]:
        """Every subgroup, as the join-closure of the cyclic subgroups."""
        if self.size > cap:
            raise CapExceeded(f"subgroup enumeration capped at order {cap}")
        self._ensure_table()
        subs = set(self.cyclic_subgroups())
        worklist = sorted(subs)
        while worklist:
            fresh = []
            current = sorted(subs)
            for a in worklist:
                for b in current:
                    if a is b:
                        continue
                    join = self.generated_subgroup(tuple(set(a) | set(b)))
                    if join not in subs:
                        subs.add(join)
                        fresh.append(join)
            worklist = fresh
        return [Subgroup(self, m) for m in sorted(subs, key=lambda t: (len(t), t))]

    def subgroup(self, members) -> Subgroup:
        """Wrap a member list as a Subgroup after checking closure."""
        mem = tuple(sorted(set(members)))
        mset = set(mem)
        if 0 not in mset:
            raise ValueError("subgroup must contain the identity")
        for a in mem:
            if self.inverse(a) not in mset:
                raise ValueError("subgroup not closed under inverse")
            for b in mem:
                if self.op(a, b) not in mset:
                    raise ValueError("subgroup not closed under multiplication")
        return Subgroup(self, mem)

    def is_normal(self, sub: Subgroup) -> bool:
        mset = set(sub.members)
        for g in range(self.size):
            ginv = self.inverse(g)
            for h in sub.members:
                if self.op(self.op(g, h), ginv) not in mset:
                    return False
        return True

    def quotient(self, sub: Subgroup, label: str | None = None) -> "Group":
        """Group on the cosets of a normal subgroup."""
        if sub.parent is not self:
            raise ValueError("subgroup belongs to a different group")
        if not self.is_normal(sub):
            raise ValueError("quotient requires a normal subgroup")
        coset_of = [-1] * self.size
        reps: list[int] = []
        for x in range(self.size):
            if coset_of[x] == -1:
                cid = len(reps)
                reps.append(x)
                for h in sub.members:
                    coset_of[self.op(x, h)] = cid
        rows = [
            tuple(coset_of[self.op(a, b)] for b in reps) for a in reps
        ]
        return Group.from_table(rows, label=label or f"{self.label}/H{sub.size}")

    def center(self) -> Subgroup:
        members = [z for z in range(self.size)
                   if all(self.op(z, g) == self.op(g, z) for g in range(self.size))]
        return Subgroup(self, tuple(members))

    def is_nilpotent(self) -> bool:
        """Every pair of elements of coprime orders commutes."""
        orders = self._orders
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if math.gcd(orders[i], orders[j]) == 1 and self.op(i, j) != self.op(j, i):
                    return False
        return True

    def sylow_subgroups(self, p: int, cap: int = SUBGROUP_CAP) -> list[Subgroup]:
        """All subgroups of order p^k where p^k exactly divides |G|."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if self.size % p != 0:
            raise ValueError(f"{p} does not divide the group order {self.size}")
        pk = 1
        n = self.size
        while n % p == 0:
            n //= p
            pk *= p
        return [s for s in self.all_subgroups(cap=cap) if s.size == pk]

    # -- generators and words ----------------------------------------------

    def generating_set(self) -> tuple[int, ...]:
        """Small generating set, greedily preferring high-order elements."""
        if self.size == 1:
            return ()
        if self._gen_indices:
            base = [g for g in self._gen_indices if g != 0]
        else:
            base = []
        chosen: list[int] = []
        closure: set[int] = {0}
        candidates = base + sorted(range(1, self.size),
                                   key=lambda i: (-self._orders[i], i))
        for c in candidates:
            if c not in closure:
                chosen.append(c)
                closure = set(self.generated_subgroup(tuple(chosen)))
                if len(closure) == self.size:
                    break
        # drop generators made redundant by later picks
        k = 0
        while k < len(chosen):
            trimmed = chosen[:k] + chosen[k + 1:]
            if trimmed and len(self.generated_subgroup(tuple(trimmed))) == self.size:
                chosen = trimmed
            else:
                k += 1
        return tuple(chosen)

    def bfs_words(self, gens: tuple[int, ...]):
        """BFS order, parent and generator index for each element of <gens>.

        Returns (order, parent, genix) where element order[k] was first
        reached as order[parent-position] * gens[genix].
        """
        order = [0]
        parent = {0: -1}
        genix = {0: -1}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for gi, g in enumerate(gens):
                    y = self.op(x, g)
                    if y not in parent:
                        parent[y] = x
                        genix[y] = gi
                        order.append(y)
                        nxt.append(y)
            frontier = nxt
        return order, parent, genix

    # -- validation ------------------------------------------------------

    def validate(self, exhaustive_limit: int = 128, samples: int = 512) -> list[str]:
        """Check group axioms on the realized elements; returns problems found.

        Associativity is exhaustive up to `exhaustive_limit` elements and
        randomly sampled above.
        """
        problems = []
        n = self.size
        for i in range(n):
            if self.op(0, i) != i or self.op(i, 0) != i:
                problems.append(f"identity fails at element {i}")
            try:
                if self.op(i, self.inverse(i)) != 0:
                    problems.append(f"inverse fails at element {i}")
            except KeyError:
                problems.append(f"element {i} has no inverse in the element set")
        if n <= 512:
            self._ensure_table()
            full = set(range(n))
            for i in range(n):
                if set(self._table[i]) != full:
                    problems.append(f"row {i} is not a permutation")
                if {self._table[j][i] for j in range(n)} != full:
                    problems.append(f"column {i} is not a permutation")
        if n <= exhaustive_limit:
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(samples))
        for a, b, c in triples:
            if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)):
                problems.append(f"associativity fails at ({a},{b},{c})")
                break
        return problems


# -- two-group operations ---------------------------------------------------


def direct_product(a: Group, b: Group, label: str | None = None,
                   cap: int = PRODUCT_CAP) -> Group:
    """Componentwise product on pairs, realized on the disjoint point sets."""
    if a.size * b.size > cap:
        raise CapExceeded(
            f"direct product of orders {a.size} x {b.size} exceeds cap {cap}")
    da = a.degree
    shifted = [tuple(x + da for x in p) for p in b.perms]
    perms = [pa + pb for pa in a.perms for pb in shifted]
    # pair (i, j) sits at index i*|B| + j; embedded generators stay generators
    if (a.size == 1 or a._gen_indices) and (b.size == 1 or b._gen_indices):
        gen_indices = tuple(g * b.size for g in a._gen_indices) + tuple(b._gen_indices)
    else:
        gen_indices = ()
    return Group(perms, label=label or f"{a.label} x {b.label}",
                 gen_indices=gen_indices)


def _invariants_differ(a: Group, b: Group) -> bool:
    if a.size != b.size:
        return True
    if a.order_spectrum() != b.order_spectrum():
        return True
    if a.is_abelian() != b.is_abelian():
        return True
    return False


def is_isomorphic(a: Group, b: Group, cap: int = ISO_CAP) -> bool:
    """Backtracking over generator images, pruning on element orders."""
    if a.size > cap or b.size > cap:
        raise CapExceeded(f"isomorphism test capped at order {cap}")
    if _invariants_differ(a, b):
        return False
    if a.size == 1:
        return True
    a._ensure_table()
    b._ensure_table()

    gens = a.generating_set()
    bfs_order, parent, genix = a.bfs_words(gens)
    prefix_sizes = [len(a.generated_subgroup(gens[:k + 1])) for k in range(len(gens))]
    b_orders = b._orders
    candidates = [
        [y for y in range(b.size) if b_orders[y] == a._orders[g]] for g in gens
    ]

    def extends(images: list[int]) -> bool:
        phi = [-1] * a.size
        phi[0] = 0
        for x in bfs_order[1:]:
            phi[x] = b.op(phi[parent[x]], images[genix[x]])
        if len(set(phi)) != a.size:
            return False
        for x in range(a.size):
            for gi, g in enumerate(gens):
                if phi[a.op(x, g)] != b.op(phi[x], images[gi]):
                    return False
        return True

    def backtrack(k: int, images: list[int]) -> bool:
        if k == len(gens):
            return extends(images)
        for y in candidates[k]:
            if len(b.generated_subgroup(tuple(images[:k]) + (y,))) != prefix_sizes[k]:
                continue
            images.append(y)
            if backtrack(k + 1, images):
                return True
            images.pop()
        return False

    return backtrack(0, [])
