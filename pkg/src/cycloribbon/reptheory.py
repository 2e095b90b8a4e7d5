"""Simple and projective module bookkeeping.

Simple modules are one-dimensional and labelled by cycloribbons; the
character records the color of each ``xi`` eigenvalue and the 0/-1
eigenvalue of each Hecke generator.  Indecomposable projectives are
labelled by colored compositions (equivalently anticycloribbons, or,
through the flip involution, by the cycloribbon of their unique simple
quotient).

Induction products translate to products in the two Grothendieck rings:
fundamental functions for simples, colored ribbons for projectives.
The Cartan matrix tabulates the composite "commutative image then embed"
map on the ribbon basis; the decomposition matrix tabulates the image of
Schur-function products under the embedding.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .hopf import (
    cartan_map,
    mr_product_R,
    mr_to_ncsf,
    multipartition_class,
    split_ribbon,
    projective_fundamental_partner,
    qmr_product_F,
    sym_to_qmr,
)
from .lincomb import LinComb, MR_R, QMR_F
from .ribbons import (
    ColoredComposition,
    ColoredRibbon,
    anticycloribbon_to_colored_comp,
    colored_compositions,
    composition_from_descents,
    descent_class_size,
    descent_set,
    enumerate_anticycloribbons,
    enumerate_cycloribbons,
    flip_ribbon,
    is_cycloribbon,
    multipartitions,
)


class Character(NamedTuple):
    """Eigenvalue data of a one-dimensional module: the color index of
    each xi eigenvalue and the 0/-1 value of each Hecke generator."""

    xi_colors: tuple
    t_values: tuple


def simple_character(rib: ColoredRibbon) -> Character:
    """Character of the simple module of a cycloribbon: xi sees the cell
    colors, and a Hecke generator acts by -1 exactly on the descents of
    the flipped ribbon's shape."""
    if not is_cycloribbon(rib):
        raise ValueError(f"{rib} is not a cycloribbon")
    flipped_ds = descent_set(flip_ribbon(rib).shape)
    t = tuple(-1 if i in flipped_ds else 0 for i in range(1, len(rib.colors)))
    return Character(rib.colors, t)


def ribbon_from_character(char: Character) -> ColoredRibbon:
    """Inverse of :func:`simple_character`."""
    n = len(char.xi_colors)
    ds = {i for i, t in enumerate(char.t_values, start=1) if t == -1}
    return flip_ribbon(ColoredRibbon(composition_from_descents(n, ds),
                                     char.xi_colors))


def simple_labels(n: int, r: int) -> list:
    return enumerate_cycloribbons(n, r)


def projective_labels(n: int, r: int) -> list:
    return colored_compositions(n, r)


def projective_simple_quotient(cc: ColoredComposition) -> ColoredRibbon:
    """Cycloribbon labelling the unique simple quotient of a projective."""
    return projective_fundamental_partner(cc)


def induce_simples(a: ColoredRibbon, b: ColoredRibbon, *,
                   negate_colors: bool = False, r: int = None) -> Counter:
    """Composition factors of the induction product of two simples, as a
    multiset of cycloribbons of total size; there are binomial(m+n, m)
    of them counted with multiplicity."""
    prod = qmr_product_F(LinComb.single(QMR_F, a), LinComb.single(QMR_F, b),
                         negate_colors=negate_colors, r=r)
    return Counter(dict(prod.terms))


def restrict_simple(rib: ColoredRibbon, m: int) -> list:
    """Restriction of a simple to the parabolic with first block of size
    ``m``: the single split of the cycloribbon at that cell."""
    return [split_ribbon(rib, m)]


def induce_projectives(a: ColoredComposition, b: ColoredComposition) -> Counter:
    """Indecomposable summands of the induction product of two
    projectives: the colored ribbon product rule on their labels."""
    prod = mr_product_R(LinComb.single(MR_R, a), LinComb.single(MR_R, b))
    return Counter(dict(prod.terms))


def dim_projective(cc: ColoredComposition) -> int:
    """Dimension of an indecomposable projective: restrict to the
    colorless subalgebra and add up descent class sizes."""
    image = mr_to_ncsf(LinComb.single(MR_R, cc))
    return sum(coeff * descent_class_size(parts)
               for parts, coeff in image.terms.items())


def induce_hecke_projective(shape, r: int) -> list:
    """Decomposition of the module induced from an indecomposable
    projective of the colorless subalgebra: one summand per
    anticycloribbon of the given shape, with its dimension."""
    out = []
    for rib in enumerate_anticycloribbons(sum(shape), r, shape=tuple(shape)):
        cc = anticycloribbon_to_colored_comp(rib)
        out.append((cc, dim_projective(cc)))
    return out


# ---------------------------------------------------------------------------
# Cartan and decomposition matrices

@dataclass(frozen=True)
class LabeledMatrix:
    row_labels: tuple
    col_labels: tuple
    entries: tuple  # tuple of row tuples, exact ints

    def row_sums(self):
        return [sum(row) for row in self.entries]

    def to_json_dict(self, row_fmt, col_fmt) -> dict:
        return {"rows": [row_fmt(l) for l in self.row_labels],
                "cols": [col_fmt(l) for l in self.col_labels],
                "entries": [list(row) for row in self.entries]}

    def to_csv(self, row_fmt, col_fmt) -> str:
        lines = ["," + ",".join(col_fmt(l) for l in self.col_labels)]
        for label, row in zip(self.row_labels, self.entries):
            lines.append(row_fmt(label) + "," + ",".join(map(str, row)))
        return "\n".join(lines) + "\n"


def _as_int(x):
    if isinstance(x, int):
        return x
    if x.denominator != 1:
        raise ValueError(f"non-integral matrix entry {x}")
    return int(x)


def cartan_matrix(n: int, r: int) -> LabeledMatrix:
    """Multiplicities of the simples in the projectives: rows are colored
    compositions, columns cycloribbons, entries the fundamental
    coefficients of the Cartan map on the ribbon basis."""
    rows = projective_labels(n, r)
    cols = simple_labels(n, r)
    col_index = {lab: k for k, lab in enumerate(cols)}
    entries = []
    for cc in rows:
        image = cartan_map(LinComb.single(MR_R, cc))
        row = [0] * len(cols)
        for lab, coeff in image.terms.items():
            row[col_index[lab]] = _as_int(coeff)
        entries.append(tuple(row))
    return LabeledMatrix(tuple(rows), tuple(cols), tuple(entries))


def decomposition_matrix(n: int, r: int) -> LabeledMatrix:
    """Images of Schur-function products on the fundamental basis: rows
    are r-tuples of partitions of total size n, columns cycloribbons."""
    rows = multipartitions(n, r)
    cols = simple_labels(n, r)
    col_index = {lab: k for k, lab in enumerate(cols)}
    entries = []
    for mp in rows:
        image = sym_to_qmr(multipartition_class(mp))
        row = [0] * len(cols)
        for lab, coeff in image.terms.items():
            row[col_index[lab]] = _as_int(coeff)
        entries.append(tuple(row))
    return LabeledMatrix(tuple(rows), tuple(cols), tuple(entries))
