"""Finite (partial) semirings as Cayley tables, and the axiom checks.

Elements are dense indices 0..n-1 carrying display names; all reports speak
in names. Every value here is immutable after construction and every
operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DimensionMismatch, OutOfRange

Row = tuple[int, ...]
Table = tuple[Row, ...]

ADD = "add"
MUL = "mul"

LAW_ADD_ASSOC = "add-associativity"
LAW_MUL_ASSOC = "mul-associativity"
LAW_LEFT_DIST = "left-distributivity"
LAW_RIGHT_DIST = "right-distributivity"
LAWS = (LAW_ADD_ASSOC, LAW_MUL_ASSOC, LAW_LEFT_DIST, LAW_RIGHT_DIST)


def freeze_table(rows) -> Table:
    return tuple(tuple(row) for row in rows)


def check_table(table: Table, n: int, what: str) -> None:
    if len(table) != n:
        raise DimensionMismatch(f"{what} table has {len(table)} rows, expected {n}")
    for i, row in enumerate(table):
        if len(row) != n:
            raise DimensionMismatch(f"{what} table row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise OutOfRange(f"{what} table entry at ({i},{j}) is {v!r}, expected 0..{n - 1}")


def check_names(names: tuple[str, ...]) -> None:
    if len(names) == 0:
        raise DimensionMismatch("carrier must be nonempty")
    seen = set()
    for name in names:
        if not name or any(ch.isspace() for ch in name):
            raise ValueError(f"element name {name!r} must be nonempty and whitespace-free")
        if name in seen:
            raise ValueError(f"duplicate element name {name!r}")
        seen.add(name)


@dataclass(frozen=True)
class FiniteSemiring:
    """Carrier plus two total Cayley tables (row = left operand).

    Construction checks shapes, ranges and names; the semiring *laws* are
    checked separately by validate_semiring, so candidate tables can be
    represented before being judged.
    """

    names: tuple[str, ...]
    add: Table
    mul: Table

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "add", freeze_table(self.add))
        object.__setattr__(self, "mul", freeze_table(self.mul))
        check_names(self.names)
        n = len(self.names)
        check_table(self.add, n, "add")
        check_table(self.mul, n, "mul")

    @property
    def order(self) -> int:
        return len(self.names)

    def elements(self) -> range:
        return range(self.order)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise OutOfRange(f"unknown element name {name!r}") from None

    def table(self, which: str) -> Table:
        if which == ADD:
            return self.add
        if which == MUL:
            return self.mul
        raise ValueError(f"expected {ADD!r} or {MUL!r}, got {which!r}")

    def is_closed(self, subset) -> bool:
        sub = frozenset(subset)
        return all(self.add[a][b] in sub and self.mul[a][b] in sub for a in sub for b in sub)

    def restrict(self, subset) -> FiniteSemiring:
        """Subsemiring on a closed subset, carrier order preserved."""
        sub = sorted(set(subset))
        if not self.is_closed(sub):
            raise ValueError(f"subset {sorted(self.names[i] for i in sub)} is not closed")
        back = {old: new for new, old in enumerate(sub)}
        return FiniteSemiring(
            names=tuple(self.names[i] for i in sub),
            add=tuple(tuple(back[self.add[a][b]] for b in sub) for a in sub),
            mul=tuple(tuple(back[self.mul[a][b]] for b in sub) for a in sub),
        )

    def relabel(self, perm) -> FiniteSemiring:
        """Isomorphic copy with new index i holding old element perm[i]."""
        n = self.order
        perm = tuple(perm)
        if sorted(perm) != list(range(n)):
            raise OutOfRange(f"not a permutation of 0..{n - 1}: {perm!r}")
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        return FiniteSemiring(
            names=tuple(self.names[p] for p in perm),
            add=tuple(tuple(inv[self.add[perm[i]][perm[j]]] for j in range(n)) for i in range(n)),
            mul=tuple(tuple(inv[self.mul[perm[i]][perm[j]]] for j in range(n)) for i in range(n)),
        )

    def __repr__(self):
        return f"FiniteSemiring({'/'.join(self.names)})"


@dataclass(frozen=True)
class PartialSemiring:
    """Cayley tables with possibly-undefined (None) entries.

    Models the nil part of a quasi skew-ring; no closure is attempted, an
    undefined cell simply stays undefined.
    """

    names: tuple[str, ...]
    add: tuple[tuple[int | None, ...], ...]
    mul: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "add", freeze_table(self.add))
        object.__setattr__(self, "mul", freeze_table(self.mul))
        n = len(self.names)
        if n:
            check_names(self.names)
        for what, table in ((ADD, self.add), (MUL, self.mul)):
            if len(table) != n:
                raise DimensionMismatch(f"{what} table has {len(table)} rows, expected {n}")
            for i, row in enumerate(table):
                if len(row) != n:
                    raise DimensionMismatch(f"{what} table row {i} has {len(row)} entries, expected {n}")
                for j, v in enumerate(row):
                    if v is not None and (not isinstance(v, int) or not 0 <= v < n):
                        raise OutOfRange(f"{what} table entry at ({i},{j}) is {v!r}, expected 0..{n - 1} or undefined")

    @property
    def order(self) -> int:
        return len(self.names)


@dataclass(frozen=True)
class LawFailure:
    law: str
    witness: tuple[str, ...]


@dataclass(frozen=True)
class ValidationReport:
    verdict: bool
    failures: tuple[LawFailure, ...]

    @staticmethod
    def from_failures(failures) -> ValidationReport:
        failures = tuple(failures)
        return ValidationReport(verdict=not failures, failures=failures)


def validate_semiring(elements, add, mul) -> ValidationReport:
    """Check both associativity laws and both distributivity laws on all
    triples; the first witness per law, in row-major (a, b, c) order."""
    s = FiniteSemiring(names=tuple(elements), add=freeze_table(add), mul=freeze_table(mul))
    return validate(s)


def validate(s: FiniteSemiring) -> ValidationReport:
    n = s.order
    add, mul, names = s.add, s.mul, s.names
    checks = (
        (LAW_ADD_ASSOC, lambda a, b, c: add[add[a][b]][c] == add[a][add[b][c]]),
        (LAW_MUL_ASSOC, lambda a, b, c: mul[mul[a][b]][c] == mul[a][mul[b][c]]),
        (LAW_LEFT_DIST, lambda a, b, c: mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]),
        (LAW_RIGHT_DIST, lambda a, b, c: mul[add[b][c]][a] == add[mul[b][a]][mul[c][a]]),
    )
    failures = []
    for law, holds in checks:
        witness = next(
            ((a, b, c) for a in range(n) for b in range(n) for c in range(n) if not holds(a, b, c)),
            None,
        )
        if witness is not None:
            failures.append(LawFailure(law, tuple(names[x] for x in witness)))
    return ValidationReport.from_failures(failures)


def _partial_value(table, x: int | None, y: int | None) -> tuple[bool, int | None]:
    """Evaluate a two-step partial product; (defined, value)."""
    if x is None or y is None:
        return False, None
    v = table[x][y]
    return (v is not None), v


def validate_partial(p: PartialSemiring) -> ValidationReport:
    """Partial-law contract: if one grouping of an associative product is
    defined so is the other and they agree; a distributive law only binds
    when both of its sides are defined."""
    n = p.order
    failures = []
    first = {law: None for law in LAWS}

    def note(law, a, b, c):
        if first[law] is None:
            first[law] = (a, b, c)

    for law, table in ((LAW_ADD_ASSOC, p.add), (LAW_MUL_ASSOC, p.mul)):
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    bc = table[b][c]
                    ldef, lval = _partial_value(table, ab, c)
                    rdef, rval = _partial_value(table, a, bc)
                    if ldef != rdef or (ldef and lval != rval):
                        note(law, a, b, c)
    for law, lhs, rhs in (
        (LAW_LEFT_DIST, lambda a, b, c: _partial_value(p.mul, a, p.add[b][c]),
         lambda a, b, c: _partial_value(p.add, p.mul[a][b], p.mul[a][c])),
        (LAW_RIGHT_DIST, lambda a, b, c: _partial_value(p.mul, p.add[b][c], a),
         lambda a, b, c: _partial_value(p.add, p.mul[b][a], p.mul[c][a])),
    ):
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    ldef, lval = lhs(a, b, c)
                    rdef, rval = rhs(a, b, c)
                    if ldef and rdef and lval != rval:
                        note(law, a, b, c)
    for law in LAWS:
        if first[law] is not None:
            failures.append(LawFailure(law, tuple(p.names[x] for x in first[law])))
    return ValidationReport.from_failures(failures)


class ReductFlag(Enum):
    GROUP = "group"
    BAND = "band"
    SEMILATTICE = "semilattice"
    INVERSE = "inverse"
    PLAIN = "plain"


def _identity_of(table: Table, n: int) -> int | None:
    for e in range(n):
        if all(table[e][x] == x == table[x][e] for x in range(n)):
            return e
    return None


def semigroup_inverses(table: Table, n: int, a: int) -> frozenset[int]:
    """{x : a*x*a = a and x*a*x = x} for the single semigroup operation."""
    return frozenset(
        x for x in range(n)
        if table[table[a][x]][a] == a and table[table[x][a]][x] == x
    )


def reduct_kind(s: FiniteSemiring, which: str) -> frozenset[ReductFlag]:
    """All structural flags of the chosen reduct; {PLAIN} when none hold."""
    table = s.table(which)
    n = s.order
    flags = set()
    band = all(table[a][a] == a for a in range(n))
    if band:
        flags.add(ReductFlag.BAND)
        if all(table[a][b] == table[b][a] for a in range(n) for b in range(n)):
            flags.add(ReductFlag.SEMILATTICE)
    e = _identity_of(table, n)
    if e is not None and all(
        any(table[a][x] == e == table[x][a] for x in range(n)) for a in range(n)
    ):
        flags.add(ReductFlag.GROUP)
    if all(len(semigroup_inverses(table, n, a)) == 1 for a in range(n)):
        flags.add(ReductFlag.INVERSE)
    return frozenset(flags) if flags else frozenset({ReductFlag.PLAIN})


def is_b_lattice(s: FiniteSemiring) -> bool:
    """Additive reduct a semilattice and multiplicative reduct a band."""
    return (
        ReductFlag.SEMILATTICE in reduct_kind(s, ADD)
        and ReductFlag.BAND in reduct_kind(s, MUL)
    )


def is_idempotent_semiring(s: FiniteSemiring) -> bool:
    """Both reducts are bands (commutativity of addition not required)."""
    return all(s.add[a][a] == a and s.mul[a][a] == a for a in s.elements())


@dataclass(frozen=True)
class Orbit:
    """The eventually periodic sequence a, 2a, 3a, ... (or powers under MUL).

    values[i] holds the (i+1)-fold combination; preperiod mu and period lam
    satisfy mu + lam == len(values), so indices 0..mu+lam-1 cover every
    distinct multiple and each predicate over "some positive n" is decided
    completely by scanning that window.
    """

    values: tuple[int, ...]
    mu: int
    lam: int

    def value_at(self, k: int) -> int:
        # k is 1-based: value_at(1) == a
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        i = k - 1
        if i < len(self.values):
            return self.values[i]
        return self.values[self.mu + (i - self.mu) % self.lam]


def orbit(s: FiniteSemiring, a: int, which: str = ADD) -> Orbit:
    table = s.table(which)
    values = [a]
    seen = {a: 0}
    while True:
        nxt = table[values[-1]][a]
        if nxt in seen:
            mu = seen[nxt]
            return Orbit(values=tuple(values), mu=mu, lam=len(values) - mu)
        seen[nxt] = len(values)
        values.append(nxt)


def repeat(s: FiniteSemiring, a: int, k: int, which: str = ADD) -> int:
    """k-fold sum ka (or power a^k); cycle detection keeps k unbounded."""
    return orbit(s, a, which).value_at(k)
