"""Module labels, dimensions, induction, and the two matrices."""

import math
from collections import Counter

import pytest

from cycloribbon.hopf import mr_to_sym, sym_to_qmr
from cycloribbon.lincomb import LinComb, MR_R
from cycloribbon.reptheory import (
    Character,
    cartan_matrix,
    decomposition_matrix,
    dim_projective,
    induce_hecke_projective,
    induce_projectives,
    induce_simples,
    projective_labels,
    projective_simple_quotient,
    restrict_simple,
    ribbon_from_character,
    simple_character,
    simple_labels,
)
from cycloribbon.ribbons import (
    ColoredComposition,
    ColoredRibbon,
    colored_composition_literal,
    descent_class_size,
    multipartition_literal,
    multipartitions,
    ribbon_literal,
)

CC = ColoredComposition
RIB = ColoredRibbon


def test_simple_character_examples():
    assert simple_character(RIB((2,), (1, 2))) == Character((1, 2), (-1,))
    assert simple_character(RIB((1, 1), (2, 1))) == Character((2, 1), (0,))
    assert simple_character(RIB((4,), (3, 3, 3, 3))) == \
        Character((3, 3, 3, 3), (0, 0, 0))


def test_simple_character_rejects_noncycloribbon():
    with pytest.raises(ValueError):
        simple_character(RIB((2,), (2, 1)))


def test_character_bijection():
    for n in range(1, 6):
        for r in (1, 2, 3):
            labels = simple_labels(n, r)
            chars = {simple_character(rib) for rib in labels}
            assert len(chars) == len(labels) == r * (r + 1) ** (n - 1)
            for rib in labels:
                assert ribbon_from_character(simple_character(rib)) == rib


def test_induce_simples_pinned():
    got = induce_simples(RIB((1, 1), (2, 1)), RIB((2,), (1, 2)))
    assert got == Counter({
        RIB((1, 3), (2, 1, 1, 2)): 1,
        RIB((1, 1, 2), (2, 1, 1, 2)): 1,
        RIB((2, 2), (1, 2, 1, 2)): 1,
        RIB((1, 2, 1), (2, 1, 2, 1)): 1,
        RIB((3, 1), (1, 2, 2, 1)): 1,
        RIB((2, 1, 1), (1, 2, 2, 1)): 1,
    })


def test_induce_simples_edge_cases():
    empty = RIB((), ())
    x = RIB((2, 1), (1, 2, 1))
    assert induce_simples(x, empty) == Counter({x: 1})
    assert induce_simples(RIB((1,), (1,)), RIB((1,), (1,))) == \
        Counter({RIB((2,), (1, 1)): 1, RIB((1, 1), (1, 1)): 1})


def test_restrict_simple():
    rib = RIB((1, 3), (2, 1, 1, 2))
    assert restrict_simple(rib, 2) == [(RIB((1, 1), (2, 1)), RIB((2,), (1, 2)))]
    assert restrict_simple(rib, 0) == [(RIB((), ()), rib)]
    assert restrict_simple(rib, 4) == [(rib, RIB((), ()))]


def test_restrict_then_induce_bookkeeping():
    # every split of each factor of the pinned induction re-induces to the
    # right number of factors, and the original label reappears
    factors = induce_simples(RIB((1, 1), (2, 1)), RIB((2,), (1, 2)))
    for rib in factors:
        for m in range(5):
            (left, right), = restrict_simple(rib, m)
            back = induce_simples(left, right)
            assert sum(back.values()) == math.comb(4, m)
            assert back[rib] >= 1


def test_induce_projectives():
    assert induce_projectives(CC((2,), (1,)), CC((1,), (1,))) == \
        Counter({CC((2, 1), (1, 1)): 1, CC((3,), (1,)): 1})
    assert induce_projectives(CC((2,), (1,)), CC((1,), (2,))) == \
        Counter({CC((2, 1), (1, 2)): 1})


def test_induce_projectives_dimensions():
    for a, b in [(CC((2,), (1,)), CC((1,), (1,))),
                 (CC((1, 1), (1, 2)), CC((2,), (2,))),
                 (CC((1,), (2,)), CC((1, 2), (2, 1)))]:
        m, n = a.size, b.size
        summands = induce_projectives(a, b)
        total = sum(dim_projective(cc) * mult for cc, mult in summands.items())
        assert total == math.comb(m + n, m) * dim_projective(a) * dim_projective(b)


def test_dim_projective_examples():
    assert dim_projective(CC((1, 1, 1), (2, 1, 2))) == 6
    assert dim_projective(CC((2, 1), (2, 2))) == 2
    assert dim_projective(CC((5,), (3,))) == 1


def test_induce_hecke_projective_shape_21():
    summands = induce_hecke_projective((2, 1), 2)
    assert sorted(d for _, d in summands) == [2, 2, 3, 3, 6]
    assert sum(d for _, d in summands) == 16
    labels = {cc for cc, _ in summands}
    assert labels == {CC((1, 1, 1), (2, 1, 1)), CC((1, 1, 1), (2, 1, 2)),
                      CC((2, 1), (1, 2)), CC((2, 1), (2, 2)),
                      CC((2, 1), (1, 1))}


def test_induce_hecke_projective_one_color():
    assert induce_hecke_projective((4,), 1) == [(CC((4,), (1,)), 1)]
    for shape in [(3,), (1, 2), (2, 2)]:
        n = sum(shape)
        for r in (1, 2):
            total = sum(d for _, d in induce_hecke_projective(shape, r))
            assert total == r ** n * descent_class_size(shape)


def test_dimension_identity():
    for n in range(1, 5):
        for r in (1, 2, 3):
            total = sum(dim_projective(cc) for cc in projective_labels(n, r))
            assert total == r ** n * math.factorial(n)


def test_projective_simple_quotient_bijective():
    for n in range(4):
        for r in (1, 2):
            quotients = [projective_simple_quotient(cc)
                         for cc in projective_labels(n, r)]
            assert sorted(quotients) == sorted(simple_labels(n, r))


# ---------------------------------------------------------------------------
# Cartan matrix

def test_cartan_identity_in_degree_one():
    for r in (1, 2, 3):
        m = cartan_matrix(1, r)
        assert [list(row) for row in m.entries] == \
            [[1 if i == j else 0 for j in range(r)] for i in range(r)]


def test_cartan_2_2_pinned():
    m = cartan_matrix(2, 2)
    rows = {colored_composition_literal(l): list(e)
            for l, e in zip(m.row_labels, m.entries)}
    cols = [ribbon_literal(l) for l in m.col_labels]
    assert cols == ["2|1,1", "2|1,2", "2|2,2", "1,1|1,1", "1,1|2,1", "1,1|2,2"]
    assert rows == {
        "2^1": [1, 0, 0, 0, 0, 0],
        "2^2": [0, 0, 1, 0, 0, 0],
        "1^1.1^1": [0, 0, 0, 1, 0, 0],
        "1^1.1^2": [0, 1, 0, 0, 1, 0],
        "1^2.1^1": [0, 1, 0, 0, 1, 0],
        "1^2.1^2": [0, 0, 0, 0, 0, 1],
    }
    assert sorted(m.row_sums()) == [1, 1, 1, 1, 2, 2]


def test_cartan_row_sums_are_dimensions():
    for n in range(1, 4):
        for r in (1, 2):
            m = cartan_matrix(n, r)
            assert m.row_sums() == [dim_projective(cc) for cc in m.row_labels]


def test_cartan_factorizes():
    from cycloribbon.hopf import colored_partitions
    from cycloribbon.lincomb import SYM_H
    n, r = 3, 2
    monomials = colored_partitions(n, r)
    mono_index = {m: k for k, m in enumerate(monomials)}
    rows = projective_labels(n, r)
    cols = simple_labels(n, r)
    e_mat = [[0] * len(monomials) for _ in rows]
    for i, cc in enumerate(rows):
        for mono, coeff in mr_to_sym(LinComb.single(MR_R, cc)).terms.items():
            e_mat[i][mono_index[mono]] = coeff
    d_mat = [[0] * len(cols) for _ in monomials]
    col_index = {lab: k for k, lab in enumerate(cols)}
    for k, mono in enumerate(monomials):
        image = sym_to_qmr(LinComb.single(SYM_H, mono))
        for lab, coeff in image.terms.items():
            d_mat[k][col_index[lab]] = coeff
    product = [[sum(e_mat[i][k] * d_mat[k][j] for k in range(len(monomials)))
                for j in range(len(cols))]
               for i in range(len(rows))]
    cartan = cartan_matrix(n, r)
    assert [list(row) for row in cartan.entries] == product


# ---------------------------------------------------------------------------
# decomposition matrix

def test_decomposition_pinned_rows():
    m = decomposition_matrix(2, 2)
    row = dict(zip(m.row_labels, m.entries))
    entries = row[((1, 1), ())]
    nonzero = {m.col_labels[j]: v for j, v in enumerate(entries) if v}
    assert nonzero == {RIB((1, 1), (1, 1)): 1}
    entries = row[((2,), ())]
    nonzero = {m.col_labels[j]: v for j, v in enumerate(entries) if v}
    assert nonzero == {RIB((2,), (1, 1)): 1}


def test_decomposition_entries_nonnegative():
    for n in range(1, 4):
        for r in (1, 2):
            m = decomposition_matrix(n, r)
            assert len(m.row_labels) == len(multipartitions(n, r))
            for row in m.entries:
                assert all(isinstance(v, int) and v >= 0 for v in row)


# ---------------------------------------------------------------------------
# exports

def test_matrix_exports():
    m = cartan_matrix(1, 2)
    csv = m.to_csv(colored_composition_literal, ribbon_literal)
    assert csv == ",1|1,1|2\n1^1,1,0\n1^2,0,1\n"
    obj = m.to_json_dict(colored_composition_literal, ribbon_literal)
    assert obj == {"rows": ["1^1", "1^2"], "cols": ["1|1", "1|2"],
                   "entries": [[1, 0], [0, 1]]}
    d = decomposition_matrix(1, 2)
    assert d.to_json_dict(multipartition_literal, ribbon_literal)["rows"] == \
        [";1", "1;"]
