import pytest

import semiringlab as sl
from semiringlab.enumeration import enumerate_semirings, sample_semirings


def ring(names, add, mul):
    return sl.FiniteSemiring(names=tuple(names), add=add, mul=mul)


# canonical 3-element quasi skew-ring: nil part {a, b} over the zero kernel,
# both Cayley tables identical
QSR3_TEXT = """\
elements: a b 0
add:
b 0 0
0 0 0
0 0 0
mul:
b 0 0
0 0 0
0 0 0
"""


@pytest.fixture(scope="session")
def qsr3():
    return sl.parse_srt(QSR3_TEXT)


@pytest.fixture(scope="session")
def boolean():
    # ({0,1}, max, min)
    return ring("01", ((0, 1), (1, 1)), ((0, 0), (0, 1)))


@pytest.fixture(scope="session")
def z2():
    # the ring Z_2: XOR addition, AND multiplication
    return ring("01", ((0, 1), (1, 0)), ((0, 0), (0, 1)))


@pytest.fixture(scope="session")
def z3():
    return ring(
        "012",
        ((0, 1, 2), (1, 2, 0), (2, 0, 1)),
        ((0, 0, 0), (0, 1, 2), (0, 2, 1)),
    )


@pytest.fixture(scope="session")
def left_zero():
    # both operations left projection: completely regular but not
    # additively quasi inverse (every x inverts every a)
    return ring("01", ((0, 0), (1, 1)), ((0, 0), (1, 1)))


@pytest.fixture(scope="session")
def min_const():
    # + = min, * = const 0: additively regular everywhere yet not quasi
    # completely regular (1*1 = 0 breaks the multiplicative leg)
    return ring("01", ((0, 0), (0, 1)), ((0, 0), (0, 0)))


@pytest.fixture(scope="session")
def nil2():
    # {x, z}: x+x = z with z absorbing; kernel {z}, nil part {x}
    return ring("xz", ((1, 1), (1, 1)), ((1, 1), (1, 1)))


ZUNION_Z2_SBL = """\
blattice:
elements: p q
add:
p q
q q
mul:
p p
p q
component p:
elements: z
add:
z
mul:
z
component q:
elements: 0 1
add:
0 1
1 0
mul:
0 0
0 1
map p q:
z -> 0
"""


@pytest.fixture(scope="session")
def zunion_z2_spec():
    return sl.parse_sbl(ZUNION_Z2_SBL)


@pytest.fixture(scope="session")
def composed_gc(zunion_z2_spec):
    return sl.compose(zunion_z2_spec)


@pytest.fixture(scope="session")
def corpus_small():
    """Full canonical corpora of orders 1 through 3."""
    return enumerate_semirings(1) + enumerate_semirings(2) + enumerate_semirings(3)


@pytest.fixture(scope="session")
def corpus_order4():
    return sample_semirings(4, 500, seed=20260810)


@pytest.fixture(scope="session")
def corpus_order5():
    return sample_semirings(5, 120, seed=20260810)


@pytest.fixture(scope="session")
def corpus(corpus_small, corpus_order4):
    return corpus_small + corpus_order4


Z3_SRT = """\
elements: t0 t1 t2
add:
t0 t1 t2
t1 t2 t0
t2 t0 t1
mul:
t0 t0 t0
t0 t1 t2
t0 t2 t1
"""

TWO_CHAIN_Y = """\
elements: p q
add:
p q
q q
mul:
p p
p q
"""

# the 3-element quasi skew-ring embedded under an isomorphic copy on a 2-chain
QSR3_CHAIN_SBL = (
    "blattice:\n" + TWO_CHAIN_Y
    + "component p:\n" + QSR3_TEXT
    + "component q:\nelements: A B O\nadd:\nB O O\nO O O\nO O O\nmul:\nB O O\nO O O\nO O O\n"
    + "map p q:\na -> A\nb -> B\n0 -> O\n"
)

ZUNION_QSR3_SBL = (
    "blattice:\n" + TWO_CHAIN_Y
    + "component p:\nelements: w\nadd:\nw\nmul:\nw\n"
    + "component q:\n" + QSR3_TEXT
    + "map p q:\nw -> 0\n"
)

NIL2_CHAIN_SBL = (
    "blattice:\n" + TWO_CHAIN_Y
    + "component p:\nelements: x z\nadd:\nz z\nz z\nmul:\nz z\nz z\n"
    + "component q:\nelements: X Z\nadd:\nZ Z\nZ Z\nmul:\nZ Z\nZ Z\n"
    + "map p q:\nx -> X\nz -> Z\n"
)

ZUNION_Z3_SBL = (
    "blattice:\n" + TWO_CHAIN_Y
    + "component p:\nelements: w\nadd:\nw\nmul:\nw\n"
    + "component q:\n" + Z3_SRT
    + "map p q:\nw -> t0\n"
)

# multiplication on the index b-lattice is max here: cross products route to
# the top component, where the diagonal image need not be an ideal
Z2_INTO_Z2Z2_SBL = (
    "blattice:\nelements: p q\nadd:\np q\nq q\nmul:\np q\nq q\n"
    + "component p:\nelements: g0 g1\nadd:\ng0 g1\ng1 g0\nmul:\ng0 g0\ng0 g1\n"
    + "component q:\nelements: h00 h01 h10 h11\n"
    + "add:\nh00 h01 h10 h11\nh01 h00 h11 h10\nh10 h11 h00 h01\nh11 h10 h01 h00\n"
    + "mul:\nh00 h00 h00 h00\nh00 h01 h00 h01\nh00 h00 h10 h10\nh00 h01 h10 h11\n"
    + "map p q:\ng0 -> h00\ng1 -> h11\n"
)

THREE_CHAIN_SBL = """\
blattice:
elements: p q r
add:
p q r
q q r
r r r
mul:
p p p
p q q
p q r
component p:
elements: u1
add:
u1
mul:
u1
component q:
elements: u2
add:
u2
mul:
u2
component r:
elements: u3
add:
u3
mul:
u3
map p q:
u1 -> u2
map p r:
u1 -> u3
map q r:
u2 -> u3
"""

DIAMOND_SBL = """\
blattice:
elements: b l r t
add:
b l r t
l l t t
r t r t
t t t t
mul:
b b b b
b l b l
b b r r
b l r t
component b:
elements: zb
add:
zb
mul:
zb
component l:
elements: zl
add:
zl
mul:
zl
component r:
elements: zr
add:
zr
mul:
zr
component t:
elements: zt
add:
zt
mul:
zt
map b l:
zb -> zl
map b r:
zb -> zr
map b t:
zb -> zt
map l t:
zl -> zt
map r t:
zr -> zt
"""

HAND_SBL_TEXTS = {
    "zunion-z2": ZUNION_Z2_SBL,
    "qsr3-chain": QSR3_CHAIN_SBL,
    "zunion-qsr3": ZUNION_QSR3_SBL,
    "nil2-chain": NIL2_CHAIN_SBL,
    "zunion-z3": ZUNION_Z3_SBL,
    "z2-into-z2z2": Z2_INTO_Z2Z2_SBL,
    "three-chain": THREE_CHAIN_SBL,
    "diamond": DIAMOND_SBL,
}


def derive_spec_text(s):
    """Decompose, search for a presenting family, reserialize as .sbl."""
    from semiringlab.blattice import family_spec
    from semiringlab.structure import is_strongly_additively_quasi_completely_inverse

    if not is_strongly_additively_quasi_completely_inverse(s):
        return None
    try:
        d = sl.decompose(s)
    except sl.errors.SemiringError:
        return None
    m = sl.search_structure_maps(s)
    if m is None:
        return None
    return sl.serialize_sbl(family_spec(d, m))


@pytest.fixture(scope="session")
def generated_sbl_texts(corpus_small):
    """At least ten machine-derived .sbl specs, multi-class members first."""
    candidates = [s for s in corpus_small if s.order >= 2]
    candidates.sort(key=lambda s: -sl.green_star_plus(s, "H").num_blocks)
    texts = []
    for s in candidates:
        text = derive_spec_text(s)
        if text is not None:
            texts.append(text)
        if len(texts) >= 12:
            break
    return texts


@pytest.fixture(scope="session")
def spec_test_set(generated_sbl_texts):
    texts = list(HAND_SBL_TEXTS.values()) + generated_sbl_texts
    return [sl.parse_sbl(text) for text in texts]


@pytest.fixture(scope="session")
def corpus_order6():
    return sample_semirings(6, 40, seed=20260810)
