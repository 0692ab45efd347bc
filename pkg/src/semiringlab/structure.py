"""Ideal predicates, quasi skew-ring verification, the decomposition of a
quasi completely regular semiring into classes with skew-ring kernels, and
the retraction map onto the additively regular part.

The decomposition re-verifies every invariant eagerly before returning; the
cost is a few O(n^2) table scans and buys trustworthy theorem tests
downstream.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    DecompositionInvariantViolation,
    EmptySubset,
    InternalTheoremViolation,
    NotBiIdeal,
    NotQuasiCompletelyRegular,
    NotQuasiSkewRing,
    PreconditionFailed,
    TheoremViolationWarning,
)
from .kernel import (
    ADD,
    FiniteSemiring,
    PartialSemiring,
    is_b_lattice,
    is_idempotent_semiring,
    orbit,
    validate_partial,
)
from .elements import (
    additive_idempotents,
    is_quasi_completely_regular_semiring,
    reg_plus,
)
from .relations import Congruence, Partition, green_plus, green_star_plus, is_semiring_congruence_partition, quotient


def _check_subset(s: FiniteSemiring, subset) -> frozenset[int]:
    sub = frozenset(subset)
    if not sub:
        raise EmptySubset("subset must be nonempty")
    for i in sub:
        if not 0 <= i < s.order:
            raise EmptySubset(f"element index {i} outside carrier")
    return sub


def is_ideal(s: FiniteSemiring, subset) -> bool:
    sub = _check_subset(s, subset)
    return all(s.add[a][b] in sub for a in sub for b in sub) and all(
        s.mul[x][a] in sub and s.mul[a][x] in sub for a in sub for x in s.elements()
    )


def is_k_ideal(s: FiniteSemiring, subset) -> bool:
    sub = _check_subset(s, subset)
    if not is_ideal(s, sub):
        return False
    for a in sub:
        for x in s.elements():
            if (s.add[a][x] in sub or s.add[x][a] in sub) and x not in sub:
                return False
    return True


def is_bi_ideal(s: FiniteSemiring, subset) -> bool:
    sub = _check_subset(s, subset)
    return all(
        s.add[a][x] in sub and s.add[x][a] in sub
        and s.mul[a][x] in sub and s.mul[x][a] in sub
        for a in sub
        for x in s.elements()
    )


def _orbit_windows(s: FiniteSemiring) -> list[frozenset[int]]:
    return [frozenset(orbit(s, a, ADD).values) for a in s.elements()]


def is_nil_extension(s: FiniteSemiring, ideal) -> bool:
    """Every element has some additive multiple inside the bi-ideal."""
    sub = _check_subset(s, ideal)
    if not is_bi_ideal(s, sub):
        raise NotBiIdeal(f"{sorted(s.names[i] for i in sub)} is not a bi-ideal")
    return all(window & sub for window in _orbit_windows(s))


def additive_h_class(s: FiniteSemiring, a: int) -> frozenset[int]:
    h = green_plus(s, "H")
    return frozenset(x for x in s.elements() if h.same(x, a))


def _skew_subring_candidates(s: FiniteSemiring):
    """Sub-skew-rings of s: additively and multiplicatively closed subsets of
    the maximal additive subgroup at some idempotent. Any subgroup of (S,+)
    with identity e lives inside the H+-class of e, so this search is
    complete."""
    for e in sorted(additive_idempotents(s)):
        h_class = sorted(additive_h_class(s, e) - {e})
        for k in range(len(h_class) + 1):
            for rest in combinations(h_class, k):
                cand = frozenset({e, *rest})
                if s.is_closed(cand):
                    yield cand


@dataclass(frozen=True)
class QuasiSkewRingReport:
    """The three equivalent shapes of a quasi skew-ring, each checked on its
    own definition."""

    unique_additive_idempotent: bool
    skew_ring_absorbs_multiples: bool
    nil_extension_of_skew_ring: bool
    kernel: frozenset[int] | None

    @property
    def verdict(self) -> bool:
        return self.unique_additive_idempotent


def quasi_skew_ring_check(s: FiniteSemiring) -> QuasiSkewRingReport:
    windows = _orbit_windows(s)
    idems = additive_idempotents(s)
    cond_i = len(idems) == 1  # additive quasi regularity is automatic on a finite carrier
    cond_ii = False
    cond_iii = False
    for cand in _skew_subring_candidates(s):
        if all(window & cand for window in windows):
            cond_ii = True
            if is_bi_ideal(s, cand):
                cond_iii = True
                break
    if not (cond_i == cond_ii == cond_iii):
        raise InternalTheoremViolation(
            f"quasi-skew-ring conditions disagree on {s!r}: "
            f"unique-idempotent={cond_i} skew-ring-multiples={cond_ii} nil-extension={cond_iii}"
        )
    kernel = None
    if cond_i:
        e = next(iter(idems))
        kernel = additive_h_class(s, e)
        if not s.is_closed(kernel):
            raise InternalTheoremViolation(
                f"kernel of {s!r} (H+-class of {s.names[e]}) is not closed under both operations"
            )
    return QuasiSkewRingReport(
        unique_additive_idempotent=cond_i,
        skew_ring_absorbs_multiples=cond_ii,
        nil_extension_of_skew_ring=cond_iii,
        kernel=kernel,
    )


def skew_ring_kernel(t: FiniteSemiring) -> frozenset[int]:
    """The maximal sub-skew-ring of a quasi skew-ring: the additive H-class
    of its unique additive idempotent."""
    report = quasi_skew_ring_check(t)
    if not report.verdict:
        raise NotQuasiSkewRing(f"{t!r} is not a quasi skew-ring")
    return report.kernel


@dataclass(frozen=True)
class Decomposition:
    """A quasi completely regular semiring split along its starred additive
    H-relation: classes T_alpha indexed by the quotient Y, each a quasi
    skew-ring with kernel R_alpha around the class idempotent e_alpha and a
    partial-semiring nil part."""

    base: FiniteSemiring
    hstar: Partition
    blattice: FiniteSemiring
    classes: tuple[frozenset[int], ...]
    kernels: tuple[frozenset[int], ...]
    idempotents: tuple[int, ...]
    nil_parts: tuple[PartialSemiring, ...]

    @property
    def y_order(self) -> int:
        return self.blattice.order

    def class_of(self, a: int) -> int:
        return self.hstar.block_of[a]

    def class_semiring(self, alpha: int) -> FiniteSemiring:
        return self.base.restrict(self.classes[alpha])

    def nil_indices(self, alpha: int) -> tuple[int, ...]:
        return tuple(sorted(self.classes[alpha] - self.kernels[alpha]))

    def quotient_is_b_lattice(self) -> bool:
        return is_b_lattice(self.blattice)


def _nil_partial(s: FiniteSemiring, cls: frozenset[int], kernel: frozenset[int]) -> PartialSemiring:
    nil = sorted(cls - kernel)
    local = {g: i for i, g in enumerate(nil)}

    def entry(table, a, b):
        v = table[a][b]
        return local.get(v)  # defined only when the result stays in the nil part

    return PartialSemiring(
        names=tuple(s.names[g] for g in nil),
        add=tuple(tuple(entry(s.add, a, b) for b in nil) for a in nil),
        mul=tuple(tuple(entry(s.mul, a, b) for b in nil) for a in nil),
    )


def _fail(invariant: str):
    raise DecompositionInvariantViolation(invariant)


def decompose(s: FiniteSemiring) -> Decomposition:
    if not is_quasi_completely_regular_semiring(s):
        raise NotQuasiCompletelyRegular(
            "some element has no completely regular additive multiple"
        )
    hstar = green_star_plus(s, "H")
    if not is_semiring_congruence_partition(s, hstar):
        _fail("starred additive H-relation is not a semiring congruence")
    y = quotient(s, Congruence(partition=hstar, is_semiring_congruence=True))
    if not is_idempotent_semiring(y):
        _fail("quotient by the starred H-relation is not an idempotent semiring")
    classes = hstar.blocks()
    kernels = []
    idempotents = []
    nil_parts = []
    for alpha, cls in enumerate(classes):
        if not s.is_closed(cls):
            _fail(f"class {alpha} is not closed under both operations")
        t = s.restrict(cls)
        ordered = sorted(cls)
        try:
            local_kernel = skew_ring_kernel(t)
        except NotQuasiSkewRing:
            _fail(f"class {alpha} is not a quasi skew-ring")
        kernel = frozenset(ordered[i] for i in local_kernel)
        idems = additive_idempotents(t)
        if len(idems) != 1:
            _fail(f"class {alpha} has {len(idems)} additive idempotents")
        e = ordered[next(iter(idems))]
        local_reg = frozenset(ordered[i] for i in reg_plus(t))
        if kernel != local_reg:
            _fail(f"kernel of class {alpha} differs from its additively regular part")
        if not is_nil_extension(t, local_kernel):
            _fail(f"class {alpha} is not a nil-extension of its kernel")
        nil = _nil_partial(s, cls, kernel)
        if not validate_partial(nil).verdict:
            _fail(f"nil part of class {alpha} violates the partial semiring laws")
        kernels.append(kernel)
        idempotents.append(e)
        nil_parts.append(nil)
    if frozenset().union(*kernels) != reg_plus(s):
        _fail("union of class kernels differs from the additively regular part")
    # membership compatibility: T_alpha + T_beta lands in T_{alpha+beta}, same for products
    for a in s.elements():
        for b in s.elements():
            alpha, beta = hstar.block_of[a], hstar.block_of[b]
            if hstar.block_of[s.add[a][b]] != y.add[alpha][beta]:
                _fail("class membership is not compatible with addition")
            if hstar.block_of[s.mul[a][b]] != y.mul[alpha][beta]:
                _fail("class membership is not compatible with multiplication")
    return Decomposition(
        base=s,
        hstar=hstar,
        blattice=y,
        classes=classes,
        kernels=tuple(kernels),
        idempotents=tuple(idempotents),
        nil_parts=tuple(nil_parts),
    )


def commuting_additive_idempotents(s: FiniteSemiring) -> tuple[int, int] | None:
    """First non-commuting pair of additive idempotents, or None."""
    idems = sorted(additive_idempotents(s))
    for i, e in enumerate(idems):
        for f in idems[i + 1:]:
            if s.add[e][f] != s.add[f][e]:
                return e, f
    return None


def is_strongly_additively_quasi_completely_inverse(s: FiniteSemiring) -> bool:
    return (
        commuting_additive_idempotents(s) is None
        and is_quasi_completely_regular_semiring(s)
    )


@dataclass(frozen=True)
class PsiMap:
    """a |-> a + e_alpha, the retraction of each class onto its kernel."""

    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    def fixed_points(self) -> frozenset[int]:
        return frozenset(a for a, img in enumerate(self.images) if a == img)


def psi(s: FiniteSemiring, d: Decomposition) -> PsiMap:
    bad = commuting_additive_idempotents(s)
    if bad is not None:
        raise PreconditionFailed(
            f"additive idempotents {s.names[bad[0]]} and {s.names[bad[1]]} do not commute"
        )
    images = tuple(s.add[a][d.idempotents[d.class_of(a)]] for a in s.elements())
    regs = reg_plus(s)
    for a, img in enumerate(images):
        if img not in regs:
            raise InternalTheoremViolation(
                f"psi({s.names[a]}) = {s.names[img]} is not additively regular"
            )
    for alpha, kernel in enumerate(d.kernels):
        for r in kernel:
            if images[r] != r:
                raise InternalTheoremViolation(
                    f"psi moves kernel element {s.names[r]} of class {alpha}"
                )
    return PsiMap(images=images)


def psi_tilde(s: FiniteSemiring, d: Decomposition) -> Partition:
    """Kernel partition of psi: fibers of a |-> a + e_alpha."""
    p = psi(s, d)
    fibers = Partition.from_block_of(p.images)
    regs = sorted(reg_plus(s))
    for i, r in enumerate(regs):
        for r2 in regs[i + 1:]:
            if fibers.same(r, r2):
                raise InternalTheoremViolation(
                    f"psi-fibers identify regular elements {s.names[r]} and {s.names[r2]}"
                )
    return fibers


def check_psi_homomorphism(s: FiniteSemiring, d: Decomposition) -> bool:
    """True iff psi respects both operations; the theory says it must, so a
    False return also emits a theorem-violation warning."""
    if not is_strongly_additively_quasi_completely_inverse(s):
        raise PreconditionFailed(
            "psi homomorphism check needs a strongly additively quasi completely inverse semiring"
        )
    p = psi(s, d)
    ok = all(
        p(s.add[a][b]) == s.add[p(a)][p(b)] and p(s.mul[a][b]) == s.mul[p(a)][p(b)]
        for a in s.elements()
        for b in s.elements()
    )
    if not ok:
        warnings.warn(
            TheoremViolationWarning(
                f"psi is not a homomorphism on {s!r}",
                payload={"theorem": "psi-homomorphism", "semiring": s},
            )
        )
    return ok
