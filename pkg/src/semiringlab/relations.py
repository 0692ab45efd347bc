"""Green's relations on the additive reduct, starred variants through least
regular multiples, and semiring congruence machinery."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExceeded, NotBiIdeal, NotCongruence, NotEquivalence
from .kernel import FiniteSemiring
from .elements import additive_idempotents, least_regular_multiple

GREEN_KINDS = ("L", "R", "H", "D", "J")

CONGRUENCE_BOUND = 6


@dataclass(frozen=True)
class Partition:
    """Equivalence relation on 0..n-1; block ids dense, numbered by first
    occurrence, so equal partitions compare equal."""

    block_of: tuple[int, ...]

    @staticmethod
    def from_block_of(block_of) -> Partition:
        relabel = {}
        normal = []
        for b in block_of:
            if b not in relabel:
                relabel[b] = len(relabel)
            normal.append(relabel[b])
        return Partition(block_of=tuple(normal))

    @staticmethod
    def from_blocks(n: int, blocks) -> Partition:
        block_of = [None] * n
        for i, block in enumerate(blocks):
            for x in block:
                block_of[x] = i
        if any(b is None for b in block_of):
            raise ValueError("blocks do not cover the carrier")
        return Partition.from_block_of(block_of)

    @staticmethod
    def identity(n: int) -> Partition:
        return Partition(block_of=tuple(range(n)))

    @staticmethod
    def universal(n: int) -> Partition:
        return Partition(block_of=(0,) * n)

    @property
    def n(self) -> int:
        return len(self.block_of)

    @property
    def num_blocks(self) -> int:
        return max(self.block_of) + 1 if self.block_of else 0

    def blocks(self) -> tuple[frozenset[int], ...]:
        out = [set() for _ in range(self.num_blocks)]
        for x, b in enumerate(self.block_of):
            out[b].add(x)
        return tuple(frozenset(b) for b in out)

    def same(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]

    def refines(self, other: Partition) -> bool:
        """self finer-or-equal: every self-block sits inside an other-block."""
        if self.n != other.n:
            raise ValueError("partitions of different carriers")
        rep = {}
        for x, b in enumerate(self.block_of):
            if b in rep and other.block_of[rep[b]] != other.block_of[x]:
                return False
            rep.setdefault(b, x)
        return True


@dataclass(frozen=True)
class Congruence:
    partition: Partition
    is_semiring_congruence: bool


def _partition_from_keys(keys) -> Partition:
    ids = {}
    block_of = []
    for key in keys:
        if key not in ids:
            ids[key] = len(ids)
        block_of.append(ids[key])
    return Partition(block_of=tuple(block_of))


def _principal_sets(s: FiniteSemiring) -> dict[str, list[frozenset[int]]]:
    """Principal additive ideals with a formal identity adjoined, so x itself
    always belongs to its own ideal even without additive idempotents."""
    add = s.add
    n = s.order
    left = [frozenset({x} | {add[t][x] for t in range(n)}) for x in range(n)]
    right = [frozenset({x} | {add[x][t] for t in range(n)}) for x in range(n)]
    two = []
    for x in range(n):
        ideal = {x}
        ideal.update(add[t][x] for t in range(n))
        ideal.update(add[x][t] for t in range(n))
        ideal.update(add[add[t][x]][u] for t in range(n) for u in range(n))
        two.append(frozenset(ideal))
    return {"L": left, "R": right, "J": two}


def green_plus(s: FiniteSemiring, kind: str) -> Partition:
    """Green's relation of (S, +): L/R/J via principal ideals, H = L meet R,
    D = L o R (equal to the join on a finite semigroup)."""
    if kind not in GREEN_KINDS:
        raise ValueError(f"unknown Green relation kind {kind!r}")
    sets = _principal_sets(s)
    if kind in ("L", "R", "J"):
        return _partition_from_keys(sets[kind])
    left = _partition_from_keys(sets["L"])
    right = _partition_from_keys(sets["R"])
    if kind == "H":
        return _partition_from_keys(zip(left.block_of, right.block_of))
    return _compose_equivalence(left, right, strict=False)


def _compose_equivalence(p: Partition, q: Partition, strict: bool) -> Partition:
    """p o q as a relation; with strict=True a non-equivalence composite is
    an error instead of being silently closed."""
    n = p.n
    related = [[False] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            related[a][b] = any(p.same(a, c) and q.same(c, b) for c in range(n))
    for a in range(n):
        if not related[a][a]:
            raise NotEquivalence(f"composite not reflexive at {a}")
        for b in range(n):
            if related[a][b] != related[b][a]:
                if strict:
                    raise NotEquivalence(f"composite not symmetric at ({a},{b})")
                related[a][b] = related[b][a] = True
    changed = True
    while changed:
        changed = False
        for a in range(n):
            for b in range(n):
                if not related[a][b] and any(related[a][c] and related[c][b] for c in range(n)):
                    if strict:
                        raise NotEquivalence(f"composite not transitive at ({a},{b})")
                    related[a][b] = related[b][a] = True
                    changed = True
    return _partition_from_keys(tuple(row) for row in related)


def green_star_plus(s: FiniteSemiring, kind: str) -> Partition:
    """a related to b iff pa related to qb under the plain relation, where p
    and q are the least indices making pa and qb additively regular."""
    if kind not in GREEN_KINDS:
        raise ValueError(f"unknown Green relation kind {kind!r}")
    rm = [least_regular_multiple(s, a)[1] for a in s.elements()]
    if kind in ("L", "R", "J"):
        base = green_plus(s, kind)
        return _partition_from_keys(base.block_of[r] for r in rm)
    lstar = green_star_plus(s, "L")
    rstar = green_star_plus(s, "R")
    if kind == "H":
        return _partition_from_keys(zip(lstar.block_of, rstar.block_of))
    return _compose_equivalence(lstar, rstar, strict=True)


def is_semiring_congruence_partition(s: FiniteSemiring, p: Partition) -> bool:
    """Compatible with both tables: a ~ a' forces a+b ~ a'+b, b+a ~ b+a',
    ab ~ a'b and ba ~ ba' for every b."""
    add, mul = s.add, s.mul
    n = s.order
    for a in range(n):
        for a2 in range(a + 1, n):
            if not p.same(a, a2):
                continue
            for b in range(n):
                if not (
                    p.same(add[a][b], add[a2][b])
                    and p.same(add[b][a], add[b][a2])
                    and p.same(mul[a][b], mul[a2][b])
                    and p.same(mul[b][a], mul[b][a2])
                ):
                    return False
    return True


def _restricted_growth_strings(n: int):
    # a[0] = 0 and a[i] <= 1 + max(a[:i]); one string per set partition
    a = [0] * n
    while True:
        yield tuple(a)
        i = n - 1
        while i >= 1:
            if a[i] <= max(a[:i]):
                a[i] += 1
                for j in range(i + 1, n):
                    a[j] = 0
                break
            i -= 1
        else:
            return


def enumerate_congruences(s: FiniteSemiring, bound: int = CONGRUENCE_BOUND) -> list[Congruence]:
    """All semiring congruences, finest first, ties broken lexicographically
    on the block-id string."""
    n = s.order
    if n > bound:
        raise BoundExceeded(f"order {n} exceeds congruence enumeration bound {bound}")
    found = []
    for rgs in _restricted_growth_strings(n):
        p = Partition(block_of=rgs)
        if is_semiring_congruence_partition(s, p):
            found.append(p)
    found.sort(key=lambda p: (n - p.num_blocks, p.block_of))
    return [Congruence(partition=p, is_semiring_congruence=True) for p in found]


def is_idempotent_separating(s: FiniteSemiring, c: Congruence) -> bool:
    """No two distinct additive idempotents share a class."""
    idems = sorted(additive_idempotents(s))
    return all(
        not c.partition.same(e, f)
        for i, e in enumerate(idems)
        for f in idems[i + 1:]
    )


def rees_congruence(s: FiniteSemiring, ideal) -> Congruence:
    from .structure import is_bi_ideal  # local import keeps modules acyclic

    ideal = frozenset(ideal)
    if not is_bi_ideal(s, ideal):
        raise NotBiIdeal(f"{sorted(s.names[i] for i in ideal)} is not a bi-ideal")
    marker = min(ideal)
    p = Partition.from_block_of([marker if i in ideal else i for i in s.elements()])
    assert is_semiring_congruence_partition(s, p), "Rees partition of a bi-ideal is a congruence"
    return Congruence(partition=p, is_semiring_congruence=True)


def quotient(s: FiniteSemiring, c: Congruence) -> FiniteSemiring:
    """Block semiring; block names join member names with '|'."""
    p = c.partition
    if not c.is_semiring_congruence or not is_semiring_congruence_partition(s, p):
        raise NotCongruence("partition is not compatible with both tables")
    blocks = p.blocks()
    reps = [min(b) for b in blocks]
    names = tuple("|".join(s.names[i] for i in sorted(b)) for b in blocks)
    add = tuple(
        tuple(p.block_of[s.add[ra][rb]] for rb in reps) for ra in reps
    )
    mul = tuple(
        tuple(p.block_of[s.mul[ra][rb]] for rb in reps) for ra in reps
    )
    return FiniteSemiring(names=names, add=add, mul=mul)
