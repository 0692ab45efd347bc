"""Exhaustive generation of small semirings up to isomorphism, a sampling
mode for orders where the full sweep is out of reach, corpus persistence,
and counterexample search over class implications.

Generation interleaves table construction with associativity pruning, then
pairs associative tables through a vectorized distributivity filter;
canonicalization minimizes the row-major encoding over all carrier
permutations, which is plenty at this scale.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import BoundExceeded, UnknownClassName
from .kernel import FiniteSemiring
from .classify import CLASS_KEYS, classify

FULL_ENUMERATION_BOUND = 4
SAMPLE_BOUND = 6
CANONICAL_BOUND = 8


def _element_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(n))


def canonical_form(s: FiniteSemiring) -> bytes:
    """Minimal byte encoding of (add, mul) over all carrier permutations; two
    semirings share it exactly when some single bijection carries both tables
    onto each other."""
    n = s.order
    if n > CANONICAL_BOUND:
        raise BoundExceeded(f"order {n} exceeds canonicalization bound {CANONICAL_BOUND}")
    best = None
    for p in permutations(range(n)):
        inv = [0] * n
        for i in range(n):
            inv[p[i]] = i
        enc = bytearray([n])
        for table in (s.add, s.mul):
            for i in range(n):
                row = table[p[i]]
                enc.extend(inv[row[p[j]]] for j in range(n))
        enc = bytes(enc)
        if best is None or enc < best:
            best = enc
    return best


def canonical_hash(s: FiniteSemiring) -> str:
    return hashlib.sha256(canonical_form(s)).hexdigest()[:16]


def _semiring_from_canonical(form: bytes) -> FiniteSemiring:
    n = form[0]
    flat = list(form[1:])
    add = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
    mul = tuple(tuple(flat[n * n + i * n:n * n + (i + 1) * n]) for i in range(n))
    return FiniteSemiring(names=_element_names(n), add=add, mul=mul)


def _partial_assoc_ok(t, n: int) -> bool:
    for a in range(n):
        ta = t[a]
        for b in range(n):
            ab = ta[b]
            if ab is None:
                continue
            tab = t[ab]
            tb = t[b]
            for c in range(n):
                bc = tb[c]
                if bc is None:
                    continue
                left = tab[c]
                right = ta[bc]
                if left is not None and right is not None and left != right:
                    return False
    return True


@lru_cache(maxsize=None)
def _assoc_tables(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All associative tables on n elements, lexicographic in row-major
    order. Candidates die as soon as any completed triple fails."""
    out = []
    t = [[None] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]

    def fill(k: int):
        if k == len(cells):
            out.append(tuple(tuple(row) for row in t))
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = v
            if _partial_assoc_ok(t, n):
                fill(k + 1)
        t[i][j] = None

    fill(0)
    return tuple(out)


def _distributive_mask(add, muls: np.ndarray) -> np.ndarray:
    """Boolean mask over a stack of multiplication tables: which satisfy both
    distributivity laws against the given addition table."""
    a = np.asarray(add, dtype=np.int64)
    ms = muls
    lhs1 = ms[:, :, a]                                # m[k, x, a[y, z]]
    rhs1 = a[ms[:, :, :, None], ms[:, :, None, :]]    # a[m[k,x,y], m[k,x,z]]
    mst = ms.transpose(0, 2, 1)
    lhs2 = mst[:, :, a]                               # m[k, a[y, z], x]
    rhs2 = a[mst[:, :, :, None], mst[:, :, None, :]]  # a[m[k,y,x], m[k,z,x]]
    return ((lhs1 == rhs1) & (lhs2 == rhs2)).all(axis=(1, 2, 3))


def _class_key(name: str) -> str:
    key = name.strip().lower().replace("_", "-")
    if key not in CLASS_KEYS:
        raise UnknownClassName(f"unknown class {name!r}; expected one of {', '.join(CLASS_KEYS)}")
    return key


def _batch_canonical_forms(adds: np.ndarray, muls: np.ndarray, n: int) -> set[bytes]:
    """Canonical forms of many (add, mul) pairs at once: per permutation a
    vectorized relabel, then a per-row lexicographic running minimum."""
    k = adds.shape[0]
    best = None
    rows = np.arange(k)
    for p in permutations(range(n)):
        p = np.array(p)
        inv = np.empty(n, dtype=np.uint8)
        inv[p] = np.arange(n, dtype=np.uint8)
        ra = inv[adds[:, p][:, :, p]]
        rm = inv[muls[:, p][:, :, p]]
        enc = np.concatenate([ra.reshape(k, -1), rm.reshape(k, -1)], axis=1)
        if best is None:
            best = enc.copy()
            continue
        diff = enc != best
        has_diff = diff.any(axis=1)
        first = np.argmax(diff, axis=1)
        take = has_diff & (enc[rows, first] < best[rows, first])
        best[take] = enc[take]
    prefix = bytes([n])
    return {prefix + row.tobytes() for row in best}


def enumerate_semirings(n: int, filter_class: str | None = None) -> list[FiniteSemiring]:
    """Canonical representatives of all semirings of order n, sorted by
    canonical form."""
    if n > FULL_ENUMERATION_BOUND:
        raise BoundExceeded(
            f"full enumeration is bounded at order {FULL_ENUMERATION_BOUND}; "
            f"use sampling for larger orders"
        )
    key = _class_key(filter_class) if filter_class is not None else None
    assocs = _assoc_tables(n)
    muls = np.array(assocs, dtype=np.int64)
    add_stack = []
    mul_stack = []
    for add in assocs:
        hits = np.flatnonzero(_distributive_mask(add, muls))
        if hits.size:
            add_stack.append(np.repeat(np.asarray(add, dtype=np.uint8)[None], hits.size, axis=0))
            mul_stack.append(muls[hits].astype(np.uint8))
    canons = _batch_canonical_forms(np.concatenate(add_stack), np.concatenate(mul_stack), n)
    reps = [_semiring_from_canonical(form) for form in sorted(canons)]
    if key is not None:
        reps = [s for s in reps if classify(s).holds(key)]
    return reps


def count_labeled_semirings(n: int) -> int:
    """Brute count of valid (add, mul) table pairs, not up to isomorphism."""
    if n > FULL_ENUMERATION_BOUND:
        raise BoundExceeded(f"full enumeration is bounded at order {FULL_ENUMERATION_BOUND}")
    assocs = _assoc_tables(n)
    muls = np.array(assocs, dtype=np.int64)
    return sum(int(_distributive_mask(add, muls).sum()) for add in assocs)


def _block_cells(n: int) -> list[tuple[int, int]]:
    # grow the leading k x k block; contradictions surface far earlier than
    # with row-major fill
    cells = []
    for k in range(n):
        for j in range(k + 1):
            cells.append((k, j))
        for i in range(k):
            cells.append((i, k))
    return cells


def _assoc_ok_at(t, n: int, i: int, j: int) -> bool:
    """Associativity of the partial table restricted to triples whose
    evaluation can involve the newly set cell (i, j)."""

    def ok(a, b, c):
        ab = t[a][b]
        if ab is None:
            return True
        bc = t[b][c]
        if bc is None:
            return True
        left = t[ab][c]
        right = t[a][bc]
        return left is None or right is None or left == right

    for c in range(n):
        if not ok(i, j, c) or not ok(c, i, j):
            return False
    for a in range(n):
        row = t[a]
        for b in range(n):
            if row[b] == i and not ok(a, b, j):
                return False
    for b in range(n):
        tb = t[b]
        for c in range(n):
            if tb[c] == j and not ok(i, b, c):
                return False
    return True


def _distrib_ok_at(add, mul, n: int, i: int, j: int, add_pre) -> bool:
    """Both distributive laws restricted to triples whose evaluation can
    involve the newly set multiplication cell (i, j); add_pre maps a value to
    the (b, c) pairs summing to it."""

    def ok_left(a, b, c):
        m_ab = mul[a][b]
        if m_ab is None:
            return True
        m_ac = mul[a][c]
        if m_ac is None:
            return True
        lhs = mul[a][add[b][c]]
        return lhs is None or lhs == add[m_ab][m_ac]

    def ok_right(a, b, c):
        m_ba = mul[b][a]
        if m_ba is None:
            return True
        m_ca = mul[c][a]
        if m_ca is None:
            return True
        lhs = mul[add[b][c]][a]
        return lhs is None or lhs == add[m_ba][m_ca]

    for c in range(n):
        if not ok_left(i, j, c) or not ok_left(i, c, j):
            return False
        if not ok_right(j, i, c) or not ok_right(j, c, i):
            return False
    for b, c in add_pre[j]:
        if not ok_left(i, b, c):
            return False
    for b, c in add_pre[i]:
        if not ok_right(j, b, c):
            return False
    return True


class _BudgetExhausted(Exception):
    pass


_NODE_BUDGET = 40_000


def _random_assoc_table(n: int, rng: random.Random, budget: int = _NODE_BUDGET):
    """One random associative table, or None when the node budget runs out
    (the caller restarts; random backtracking has heavy-tailed runtimes)."""
    t = [[None] * n for _ in range(n)]
    cells = _block_cells(n)
    nodes = 0

    def fill(k: int):
        nonlocal nodes
        if k == len(cells):
            return tuple(tuple(row) for row in t)
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        i, j = cells[k]
        values = list(range(n))
        rng.shuffle(values)
        for v in values:
            t[i][j] = v
            if _assoc_ok_at(t, n, i, j):
                got = fill(k + 1)
                if got is not None:
                    return got
        t[i][j] = None
        return None

    try:
        return fill(0)
    except _BudgetExhausted:
        return None


def _random_compatible_mul(add, n: int, rng: random.Random, budget: int = _NODE_BUDGET):
    add_pre = [[] for _ in range(n)]
    for b in range(n):
        for c in range(n):
            add_pre[add[b][c]].append((b, c))
    t = [[None] * n for _ in range(n)]
    cells = _block_cells(n)
    nodes = 0

    def fill(k: int):
        nonlocal nodes
        if k == len(cells):
            return tuple(tuple(row) for row in t)
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        i, j = cells[k]
        values = list(range(n))
        rng.shuffle(values)
        for v in values:
            t[i][j] = v
            if _assoc_ok_at(t, n, i, j) and _distrib_ok_at(add, t, n, i, j, add_pre):
                got = fill(k + 1)
                if got is not None:
                    return got
        t[i][j] = None
        return None

    try:
        return fill(0)
    except _BudgetExhausted:
        return None


def sample_semirings(n: int, count: int, seed: int = 0,
                     filter_class: str | None = None) -> list[FiniteSemiring]:
    """Deterministic seeded sample of distinct canonical semirings of order
    n; the draw is not uniform, just varied."""
    if n > SAMPLE_BOUND:
        raise BoundExceeded(f"sampling is bounded at order {SAMPLE_BOUND}")
    key = _class_key(filter_class) if filter_class is not None else None
    rng = random.Random(seed)
    names = _element_names(n)
    canons = set()
    attempts = 0
    max_attempts = max(200, count * 200)
    while len(canons) < count and attempts < max_attempts:
        attempts += 1
        add = _random_assoc_table(n, rng)
        if add is None:
            continue
        mul = _random_compatible_mul(add, n, rng)
        if mul is None:
            continue
        s = FiniteSemiring(names=names, add=add, mul=mul)
        form = canonical_form(s)
        if key is not None and not classify(_semiring_from_canonical(form)).holds(key):
            continue
        canons.add(form)
    return [_semiring_from_canonical(form) for form in sorted(canons)]


@dataclass(frozen=True)
class ImplicationQuery:
    premise: str
    conclusion: str
    max_order: int


def find_counterexample(query: ImplicationQuery) -> FiniteSemiring | None:
    """First canonical semiring satisfying the premise class but not the
    conclusion class, orders ascending; None when the implication survives."""
    premise = _class_key(query.premise)
    conclusion = _class_key(query.conclusion)
    if query.max_order > FULL_ENUMERATION_BOUND:
        raise BoundExceeded(
            f"counterexample search sweeps full enumerations, bounded at order "
            f"{FULL_ENUMERATION_BOUND}"
        )
    for n in range(1, query.max_order + 1):
        for s in enumerate_semirings(n):
            report = classify(s)
            if report.holds(premise) and not report.holds(conclusion):
                return s
    return None


def manifest_line(s: FiniteSemiring) -> str:
    flags = classify(s).true_classes()
    return f"{canonical_hash(s)} {s.order} {','.join(flags) if flags else '-'}"


def write_corpus(semirings, outdir) -> str:
    """Persist one .srt per semiring named by canonical hash, plus the
    manifest text (also written to MANIFEST); returns the manifest."""
    from pathlib import Path

    from .formats import save_srt

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    lines = []
    for s in semirings:
        save_srt(s, outdir / f"{canonical_hash(s)}.srt")
        lines.append(manifest_line(s))
    manifest = "\n".join(lines) + ("\n" if lines else "")
    (outdir / "MANIFEST").write_text(manifest, encoding="utf-8")
    return manifest
