"""Formal sums over tagged basis labels, with exact coefficients.

A :class:`LinComb` stores a basis tag and a map from labels to nonzero
coefficients (Python ints, or :class:`fractions.Fraction` when a value
is not integral).  The tags in use are:

======== ===============================================================
MR-S     complete basis of the colored noncommutative symmetric
         functions; labels are colored compositions
MR-R     colored ribbon basis of the same algebra
QMR-F    fundamental basis of the colored quasi-symmetric functions;
         labels are cycloribbons
SYM-h    monomials in the complete homogeneous functions of r variable
         sets; labels are sorted tuples of (color, degree) pairs
SYM-s    products of Schur functions, one per variable set; labels are
         r-tuples of partitions
NCSF-R   ordinary ribbon basis of noncommutative symmetric functions;
         labels are compositions
======== ===============================================================

JSON serialization keeps coefficients as exact decimal strings (``"p/q"``
when not integral) so that round trips are bit-exact.
"""

from __future__ import annotations

from fractions import Fraction

from .ribbons import (
    ColoredComposition,
    ColoredRibbon,
    colored_composition_sort_key,
    descent_bitmask,
    multipartition_sort_key,
    ribbon_sort_key,
)

MR_S = "MR-S"
MR_R = "MR-R"
QMR_F = "QMR-F"
SYM_H = "SYM-h"
SYM_S = "SYM-s"
NCSF_R = "NCSF-R"

BASES = (MR_S, MR_R, QMR_F, SYM_H, SYM_S, NCSF_R)


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def label_sort_key(basis, label):
    if basis in (MR_S, MR_R):
        return colored_composition_sort_key(label)
    if basis == QMR_F:
        return ribbon_sort_key(label)
    if basis == SYM_H:
        return (sum(d for _, d in label), label)
    if basis == SYM_S:
        return multipartition_sort_key(label)
    if basis == NCSF_R:
        return (sum(label), descent_bitmask(label), label)
    raise ValueError(f"unknown basis {basis!r}")


def label_grade(basis, label):
    if basis in (MR_S, MR_R):
        return sum(label.parts)
    if basis == QMR_F:
        return len(label.colors)
    if basis == SYM_H:
        return sum(d for _, d in label)
    if basis == SYM_S:
        return sum(sum(comp) for comp in label)
    if basis == NCSF_R:
        return sum(label)
    raise ValueError(f"unknown basis {basis!r}")


class LinComb:
    """A formal sum of basis labels with exact coefficients."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for label, coeff in items:
            coeff = data.get(label, 0) + coeff
            if coeff:
                data[label] = _norm_coeff(coeff)
            else:
                data.pop(label, None)
        self.terms = data

    @classmethod
    def single(cls, basis, label, coeff=1):
        return cls(basis, [(label, coeff)])

    @classmethod
    def zero(cls, basis):
        return cls(basis)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: label_sort_key(self.basis, kv[0]))

    def coefficient(self, label):
        return self.terms.get(label, 0)

    def map_labels(self, basis, fn):
        """New combination on ``basis`` with every label sent through fn."""
        return LinComb(basis, [(fn(l), c) for l, c in self.terms.items()])

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, LinComb) and self.basis == other.basis
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def _check_same_basis(self, other):
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other):
        self._check_same_basis(other)
        out = dict(self.terms)
        for label, coeff in other.terms.items():
            coeff = out.get(label, 0) + coeff
            if coeff:
                out[label] = _norm_coeff(coeff)
            else:
                out.pop(label, None)
        result = LinComb.zero(self.basis)
        result.terms = out
        return result

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        if not scalar:
            return LinComb.zero(self.basis)
        result = LinComb.zero(self.basis)
        result.terms = {l: _norm_coeff(scalar * c) for l, c in self.terms.items()}
        return result

    def __repr__(self):
        if not self.terms:
            return f"LinComb({self.basis}, 0)"
        bits = " + ".join(f"{c}*{l}" for l, c in self.sorted_terms())
        return f"LinComb({self.basis}, {bits})"


class TensorComb:
    """A formal sum of pairs of labels, one basis tag per tensor factor."""

    __slots__ = ("bases", "terms")

    def __init__(self, bases, terms=()):
        self.bases = tuple(bases)
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for pair, coeff in items:
            coeff = data.get(pair, 0) + coeff
            if coeff:
                data[pair] = _norm_coeff(coeff)
            else:
                data.pop(pair, None)
        self.terms = data

    def sorted_terms(self):
        b1, b2 = self.bases
        return sorted(self.terms.items(),
                      key=lambda kv: (label_sort_key(b1, kv[0][0]),
                                      label_sort_key(b2, kv[0][1])))

    def __eq__(self, other):
        return (isinstance(other, TensorComb) and self.bases == other.bases
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.bases, frozenset(self.terms.items())))

    def __add__(self, other):
        if self.bases != other.bases:
            raise ValueError("tensor basis mismatch")
        out = dict(self.terms)
        for pair, coeff in other.terms.items():
            coeff = out.get(pair, 0) + coeff
            if coeff:
                out[pair] = _norm_coeff(coeff)
            else:
                out.pop(pair, None)
        result = TensorComb(self.bases)
        result.terms = out
        return result

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        result = TensorComb(self.bases)
        if scalar:
            result.terms = {p: _norm_coeff(scalar * c) for p, c in self.terms.items()}
        return result

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        bits = " + ".join(f"{c}*{l}x{m}" for (l, m), c in self.sorted_terms())
        return f"TensorComb({self.bases}, {bits or 0})"


def tensor_of(a: LinComb, b: LinComb) -> TensorComb:
    return TensorComb((a.basis, b.basis),
                      [((la, lb), ca * cb)
                       for la, ca in a.terms.items()
                       for lb, cb in b.terms.items()])


def tensor_multiply(t1: TensorComb, t2: TensorComb, mul) -> TensorComb:
    """Componentwise product of tensors, multiplying each side with ``mul``
    (a function of two single-label LinCombs)."""
    b1, b2 = t1.bases
    out = TensorComb(t1.bases)
    for (l1, m1), c1 in t1.terms.items():
        for (l2, m2), c2 in t2.terms.items():
            left = mul(LinComb.single(b1, l1), LinComb.single(b1, l2))
            right = mul(LinComb.single(b2, m1), LinComb.single(b2, m2))
            out = out + (c1 * c2) * tensor_of(left, right)
    return out


def tensor_map_sides(t: TensorComb, bases, fn_left, fn_right) -> TensorComb:
    """Apply LinComb->LinComb maps to the two sides of every term."""
    out = TensorComb(bases)
    for (l, m), c in t.terms.items():
        left = fn_left(LinComb.single(t.bases[0], l))
        right = fn_right(LinComb.single(t.bases[1], m))
        out = out + c * tensor_of(left, right)
    return out


# ---------------------------------------------------------------------------
# JSON codecs

def coeff_to_str(c) -> str:
    return str(_norm_coeff(Fraction(c)))


def coeff_from_str(s: str):
    return _norm_coeff(Fraction(s))


def label_to_json(basis, label):
    if basis in (MR_S, MR_R):
        return {"parts": list(label.parts), "colors": list(label.colors)}
    if basis == QMR_F:
        return {"shape": list(label.shape), "colors": list(label.colors)}
    if basis == SYM_H:
        return {"factors": [[c, d] for c, d in label]}
    if basis == SYM_S:
        return {"components": [list(comp) for comp in label]}
    if basis == NCSF_R:
        return {"parts": list(label)}
    raise ValueError(f"unknown basis {basis!r}")


def label_from_json(basis, obj):
    if basis in (MR_S, MR_R):
        return ColoredComposition(tuple(obj["parts"]), tuple(obj["colors"]))
    if basis == QMR_F:
        return ColoredRibbon(tuple(obj["shape"]), tuple(obj["colors"]))
    if basis == SYM_H:
        return tuple((c, d) for c, d in obj["factors"])
    if basis == SYM_S:
        return tuple(tuple(comp) for comp in obj["components"])
    if basis == NCSF_R:
        return tuple(obj["parts"])
    raise ValueError(f"unknown basis {basis!r}")


def lincomb_to_json(lc: LinComb) -> dict:
    return {"basis": lc.basis,
            "terms": [{"coeff": coeff_to_str(c),
                       "label": label_to_json(lc.basis, l)}
                      for l, c in lc.sorted_terms()]}


def lincomb_from_json(obj: dict) -> LinComb:
    basis = obj["basis"]
    return LinComb(basis, [(label_from_json(basis, t["label"]),
                            coeff_from_str(t["coeff"]))
                           for t in obj["terms"]])


def tensorcomb_to_json(tc: TensorComb) -> dict:
    b1, b2 = tc.bases
    return {"bases": [b1, b2],
            "terms": [{"coeff": coeff_to_str(c),
                       "left": label_to_json(b1, l),
                       "right": label_to_json(b2, m)}
                      for (l, m), c in tc.sorted_terms()]}


def tensorcomb_from_json(obj: dict) -> TensorComb:
    b1, b2 = obj["bases"]
    return TensorComb((b1, b2),
                      [((label_from_json(b1, t["left"]),
                         label_from_json(b2, t["right"])),
                        coeff_from_str(t["coeff"]))
                       for t in obj["terms"]])
