"""Ground-truth construction of the colored 0-Hecke algebras.

The algebra on ``n`` strands with ``r`` colors is presented by Hecke
generators ``T_1..T_{n-1}`` and commuting color generators
``xi_1..xi_n`` whose joint spectrum is a fixed list of distinct rational
parameters ``u_1..u_r``.  Writing ``L_c`` for the product of Lagrange
interpolation projectors picking eigenvalue ``u_{c_j}`` for ``xi_j``,
the elements ``B[c, w] = L_c T_w`` (``c`` a color word, ``w`` a
permutation) form a basis, and left multiplication by the generators
acts by

* ``xi_j . B[c, w]  =  u[c_j] B[c, w]``
* ``T_i . B[c, w]   =  L_{c.s_i} (T_i T_w)`` plus a correction term:
  ``-B[c, w]`` when ``c_i < c_{i+1}``, nothing when equal, and
  ``+B[c.s_i, w]`` when ``c_i > c_{i+1}``,

with ``T_i T_w`` simplified by the usual 0-Hecke rule (``T_i`` squares
to ``-T_i``).  Everything in this module is derived from these two
displayed rules plus exact rational linear algebra; no combinatorial
shortcut from the rest of the package is assumed, which is what makes
it an oracle for them.

Induced modules are built as quotients of the left regular
representation by the left ideal generated by ``g - chi(g)`` over the
generators ``g`` of the inducing subalgebra.  For a parabolic character
the color constraints are applied first: they cut the regular
representation down to the right ideal generated by the single basis
element ``B[a, id]`` (``a`` the concatenated color word), inside which
the Hecke constraints are a small closure/quotient computation.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import (
    SparseEchelon,
    kernel_basis,
    mat_add,
    mat_identity,
    mat_is_zero,
    mat_mul,
    mat_scale,
    mat_sub,
    reduce_mod_rref,
    rref,
)
from .reptheory import Character, simple_character
from .ribbons import (
    ColoredRibbon,
    descent_set,
    enumerate_cycloribbons,
    fillings_below,
    inverse_perm,
    is_cycloribbon,
)


class OracleError(Exception):
    """A structural expectation of the oracle failed; the message carries
    the diagnostic that would falsify the corresponding statement."""


@dataclass(frozen=True)
class AlgebraParams:
    """Size, number of colors, and the distinct spectral parameters."""

    n: int
    r: int
    u: tuple = ()

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError("need n >= 1 and r >= 1")
        u = tuple(Fraction(x) for x in (self.u or range(1, self.r + 1)))
        if len(u) != self.r or len(set(u)) != self.r:
            raise ValueError(f"need {self.r} pairwise distinct parameters, got {u}")
        object.__setattr__(self, "u", u)

    @property
    def dimension(self):
        return self.r ** self.n * math.factorial(self.n)


def basis_keys(params: AlgebraParams):
    """All (color word, permutation) basis indices, in lexicographic order."""
    for colors in itertools.product(range(1, params.r + 1), repeat=params.n):
        for perm in itertools.permutations(range(1, params.n + 1)):
            yield (colors, perm)


class AlgebraElement:
    """Sparse rational combination of the ``B[c, w]`` basis."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        items = terms.items() if hasattr(terms, "items") else terms
        self.terms = {k: c for k, c in items if c}

    @classmethod
    def basis(cls, colors, perm):
        return cls({(tuple(colors), tuple(perm)): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            nc = out.get(k, 0) + c
            if nc:
                out[k] = nc
            else:
                out.pop(k, None)
        res = AlgebraElement()
        res.terms = out
        return res

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        res = AlgebraElement()
        if scalar:
            res.terms = {k: scalar * c for k, c in self.terms.items()}
        return res

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        bits = " + ".join(f"{c}*B{k}" for k, c in sorted(self.terms.items()))
        return f"AlgebraElement({bits or 0})"


def one(params: AlgebraParams) -> AlgebraElement:
    """The unit: the Lagrange projectors resolve the identity."""
    ident = tuple(range(1, params.n + 1))
    return AlgebraElement({(c, ident): 1 for c in
                           itertools.product(range(1, params.r + 1),
                                             repeat=params.n)})


def left_mult_xi(params: AlgebraParams, j: int, x: AlgebraElement) -> AlgebraElement:
    """Color generators act diagonally through their Lagrange spectrum."""
    if not 1 <= j <= params.n:
        raise ValueError(f"xi index {j} outside 1..{params.n}")
    return AlgebraElement({k: params.u[k[0][j - 1] - 1] * c
                           for k, c in x.terms.items()})


def _swap_values(word, i):
    """Left multiplication by the i-th adjacent transposition."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in word)


def left_mult_T(params: AlgebraParams, i: int, x: AlgebraElement) -> AlgebraElement:
    if not 1 <= i <= params.n - 1:
        raise ValueError(f"T index {i} outside 1..{params.n - 1}")
    out = {}

    def add(key, coeff):
        nc = out.get(key, 0) + coeff
        if nc:
            out[key] = nc
        else:
            out.pop(key, None)

    for (c, w), coeff in x.terms.items():
        cs = c[:i - 1] + (c[i], c[i - 1]) + c[i + 1:]
        # commuting T_i through L_c leaves L_{c.s_i} T_i ...
        winv = inverse_perm(w)
        if winv[i - 1] < winv[i]:          # length goes up
            add((cs, _swap_values(w, i)), coeff)
        else:                              # T_i^2 = -T_i
            add((cs, w), -coeff)
        # ... plus the color correction term
        if c[i - 1] < c[i]:
            add((c, w), -coeff)
        elif c[i - 1] > c[i]:
            add((cs, w), coeff)
    return AlgebraElement(out)


def _sorting_word(perm):
    """Indices i_1, i_2, ... such that applying ``left_mult_T`` in that
    order to an element implements left multiplication by ``T_perm``."""
    w, word = list(perm), []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            return word


def multiply(params: AlgebraParams, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product in the algebra: expand ``x`` over its basis terms, apply
    each ``T_w`` to ``y`` letter by letter, then project on the color."""
    total = AlgebraElement()
    for (c, w), coeff in x.terms.items():
        z = y
        for i in _sorting_word(w):
            z = left_mult_T(params, i, z)
        picked = {(c2, w2): cf for (c2, w2), cf in z.terms.items() if c2 == c}
        total = total + coeff * AlgebraElement(picked)
    return total


@lru_cache(maxsize=None)
def lagrange_coeffs(u: tuple, k: int) -> tuple:
    """Coefficients (ascending degree) of the interpolation polynomial
    taking value 1 at u_k and 0 at the other parameters."""
    num = [Fraction(1)]
    denom = Fraction(1)
    for l, ul in enumerate(u, start=1):
        if l == k:
            continue
        num = [a - ul * b for a, b in
               zip([Fraction(0)] + num, num + [Fraction(0)])]
        denom *= u[k - 1] - ul
    return tuple(a / denom for a in num)


# ---------------------------------------------------------------------------
# the defining relations, checked both on the basis and on module matrices

def _relation_suite(params: AlgebraParams, T, XI, add, sub, scale):
    """All defining relations at q = 0 as residual maps ``v -> LHS - RHS``
    applied to an abstract vector; the caller supplies the generator
    actions and the vector arithmetic."""
    n, u = params.n, params.u

    def lagrange_apply(k, j, v):
        coeffs = lagrange_coeffs(u, k)
        acc = scale(coeffs[-1], v)
        for a in reversed(coeffs[:-1]):
            acc = add(XI(j, acc), scale(a, v))
        return acc

    checks = []
    for i in range(1, n):
        checks.append(("quadratic", f"i={i}",
                       lambda v, i=i: add(T(i, T(i, v)), T(i, v))))
    for i in range(1, n - 1):
        checks.append(("braid", f"i={i}",
                       lambda v, i=i: sub(T(i, T(i + 1, T(i, v))),
                                          T(i + 1, T(i, T(i + 1, v))))))
    for i in range(1, n):
        for j in range(i + 2, n):
            checks.append(("commute-T-T", f"i={i},j={j}",
                           lambda v, i=i, j=j: sub(T(i, T(j, v)), T(j, T(i, v)))))
    for j in range(1, n + 1):
        def charpoly(v, j=j):
            acc = v
            for ul in u:
                acc = sub(XI(j, acc), scale(ul, acc))
            return acc
        checks.append(("color-char-poly", f"j={j}", charpoly))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            checks.append(("commute-xi-xi", f"i={i},j={j}",
                           lambda v, i=i, j=j: sub(XI(i, XI(j, v)),
                                                   XI(j, XI(i, v)))))
    for i in range(1, n):
        def cross(v, i=i):
            res = sub(T(i, XI(i, v)), XI(i + 1, T(i, v)))
            for c1 in range(1, params.r + 1):
                for c2 in range(c1 + 1, params.r + 1):
                    term = lagrange_apply(c1, i, lagrange_apply(c2, i + 1, v))
                    res = sub(res, scale(u[c2 - 1] - u[c1 - 1], term))
            return res
        checks.append(("cross-commutation", f"i={i}", cross))
    for i in range(1, n):
        checks.append(("sum-commutation", f"i={i}",
                       lambda v, i=i: sub(
                           T(i, add(XI(i, v), XI(i + 1, v))),
                           add(XI(i, T(i, v)), XI(i + 1, T(i, v))))))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            checks.append(("commute-T-xi", f"i={i},j={j}",
                           lambda v, i=i, j=j: sub(T(i, XI(j, v)),
                                                   XI(j, T(i, v)))))
    return checks


def _algebra_checks(params):
    return _relation_suite(
        params,
        T=lambda i, v: left_mult_T(params, i, v),
        XI=lambda j, v: left_mult_xi(params, j, v),
        add=lambda a, b: a + b,
        sub=lambda a, b: a - b,
        scale=lambda s, v: s * v)


def verify_relations(params: AlgebraParams) -> list:
    """Check every defining relation on every basis element of the left
    regular representation.  Returns one report dict per relation
    instance, with a counterexample on failure."""
    keys = list(basis_keys(params))
    reports = []
    for name, instance, residual in _algebra_checks(params):
        bad = None
        for key in keys:
            res = residual(AlgebraElement.basis(*key))
            if res:
                bad = {"basis_element": {"colors": list(key[0]),
                                         "perm": list(key[1])},
                       "residual_terms": len(res.terms)}
                break
        reports.append({"check": name, "instance": instance,
                        "pass": bad is None, "counterexample": bad})
    return reports


@dataclass(frozen=True)
class ExplicitModule:
    """Concrete module: one square matrix per generator (columns act)."""

    t_mats: tuple
    xi_mats: tuple

    @property
    def dim(self):
        return len(self.xi_mats[0])


def _module_checks(params, module):
    return _relation_suite(
        params,
        T=lambda i, v: mat_mul(module.t_mats[i - 1], v),
        XI=lambda j, v: mat_mul(module.xi_mats[j - 1], v),
        add=mat_add, sub=mat_sub, scale=mat_scale)


def verify_module_relations(params: AlgebraParams, module: ExplicitModule) -> list:
    probe = mat_identity(module.dim)
    return [{"check": name, "instance": instance,
             "pass": mat_is_zero(residual(probe)), "counterexample": None}
            for name, instance, residual in _module_checks(params, module)]


def module_relations_ok(params: AlgebraParams, module: ExplicitModule) -> bool:
    probe = mat_identity(module.dim)
    return all(mat_is_zero(residual(probe))
               for _, _, residual in _module_checks(params, module))


def character_module(params: AlgebraParams, char: Character) -> ExplicitModule:
    return ExplicitModule(
        t_mats=tuple([[Fraction(t)]] for t in char.t_values),
        xi_mats=tuple([[params.u[c - 1]]] for c in char.xi_colors))


@lru_cache(maxsize=None)
def enumerate_one_dim_characters(params: AlgebraParams) -> tuple:
    """Brute force: all assignments of 0/-1 to the Hecke generators and a
    parameter to each color generator that satisfy every relation."""
    out = []
    for colors in itertools.product(range(1, params.r + 1), repeat=params.n):
        for tvals in itertools.product((0, -1), repeat=params.n - 1):
            char = Character(colors, tvals)
            if module_relations_ok(params, character_module(params, char)):
                out.append(char)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# induced modules by ideal-quotient linear algebra

def _left_closure(params: AlgebraParams, seeds) -> SparseEchelon:
    """Echelon basis of the left ideal generated by the seed elements:
    close their span under left multiplication by every generator."""
    ech = SparseEchelon()
    queue = []
    for s in seeds:
        idx = ech.insert(s.terms)
        if idx is not None:
            queue.append(idx)
    ops = ([lambda v, i=i: left_mult_T(params, i, v) for i in range(1, params.n)]
           + [lambda v, j=j: left_mult_xi(params, j, v) for j in range(1, params.n + 1)])
    at = 0
    while at < len(queue):
        row = AlgebraElement(dict(ech.rows[queue[at]]))
        at += 1
        for op in ops:
            idx = ech.insert(op(row).terms)
            if idx is not None:
                queue.append(idx)
    return ech


def _quotient_matrices(params, ambient: SparseEchelon, sub_rows):
    """Matrices of the generators on (span of ambient) / (span of sub_rows),
    in the coordinates given by the ambient echelon rows."""
    dim = len(ambient)
    coords = [ambient.coordinates(row) for row in sub_rows]
    sub_rref, pivots = rref(coords) if coords else ([], [])
    free = [c for c in range(dim) if c not in pivots]
    index_of = {f: k for k, f in enumerate(free)}

    def action(op):
        mat = [[Fraction(0)] * len(free) for _ in range(len(free))]
        for col, f in enumerate(free):
            vec = op(AlgebraElement(dict(ambient.rows[f])))
            rep = reduce_mod_rref(sub_rref, pivots, ambient.coordinates(vec.terms))
            for c, val in enumerate(rep):
                if val:
                    mat[index_of[c]][col] = val
        return mat

    t_mats = tuple(action(lambda v, i=i: left_mult_T(params, i, v))
                   for i in range(1, params.n))
    xi_mats = tuple(action(lambda v, j=j: left_mult_xi(params, j, v))
                    for j in range(1, params.n + 1))
    return ExplicitModule(t_mats=t_mats, xi_mats=xi_mats), len(free)


def induced_module_from_seeds(params: AlgebraParams, seeds,
                              expected_dim=None) -> ExplicitModule:
    """Reference construction: quotient of the whole left regular
    representation by the left ideal generated by the seeds.  Exponential
    in size, used to cross-validate the staged constructions."""
    ideal = _left_closure(params, seeds)
    ambient = SparseEchelon()
    for key in basis_keys(params):
        ambient.insert({key: 1})
    module, dim = _quotient_matrices(
        params, ambient, [dict(r) for r in ideal.rows])
    if expected_dim is not None and dim != expected_dim:
        raise OracleError(f"induced module has dimension {dim}, expected {expected_dim}")
    return module


def build_induced_module(params: AlgebraParams, chars) -> ExplicitModule:
    """Module induced from one one-dimensional character per tensor factor
    of a parabolic subalgebra (factor sizes must sum to ``params.n``).

    The color constraints identify the quotient with the right ideal of
    ``B[a, id]``; the remaining Hecke constraints are quotiented out
    there.  The result is checked against the defining relations and the
    multinomial dimension count.
    """
    sizes = [len(ch.xi_colors) for ch in chars]
    if sum(sizes) != params.n:
        raise ValueError(f"factor sizes {sizes} do not sum to {params.n}")
    a = tuple(c for ch in chars for c in ch.xi_colors)
    t_of = {}
    offset = 0
    for ch, size in zip(chars, sizes):
        for local, t in enumerate(ch.t_values, start=1):
            t_of[offset + local] = t
        offset += size

    ident = tuple(range(1, params.n + 1))
    cyclic = AlgebraElement.basis(a, ident)
    block = _left_closure(params, [cyclic])
    if len(block) != math.factorial(params.n):
        raise OracleError(
            f"right color block has rank {len(block)}, "
            f"expected {math.factorial(params.n)}")

    seeds = [left_mult_T(params, i, cyclic) - Fraction(t) * cyclic
             for i, t in t_of.items()]
    hecke_ideal = _left_closure(params, seeds)

    module, dim = _quotient_matrices(
        params, block, [dict(r) for r in hecke_ideal.rows])
    expected = math.factorial(params.n)
    for size in sizes:
        expected //= math.factorial(size)
    if dim != expected:
        raise OracleError(f"induced module has dimension {dim}, expected {expected}")
    if not module_relations_ok(params, module):
        raise OracleError("induced module violates the defining relations")
    return module


def build_shape_module(params: AlgebraParams, shape) -> ExplicitModule:
    """Module induced from the one-dimensional module of the colorless
    Hecke subalgebra attached to a descent composition: basis indexed by
    color words, explicit generator action."""
    if sum(shape) != params.n:
        raise ValueError(f"{shape} is not a composition of {params.n}")
    ds = descent_set(shape)
    words = list(itertools.product(range(1, params.r + 1), repeat=params.n))
    index = {w: k for k, w in enumerate(words)}
    dim = len(words)

    t_mats = []
    for i in range(1, params.n):
        t = -1 if i in ds else 0
        mat = [[Fraction(0)] * dim for _ in range(dim)]
        for w in words:
            col = index[w]
            ws = w[:i - 1] + (w[i], w[i - 1]) + w[i + 1:]
            if w[i - 1] < w[i]:
                mat[index[ws]][col] += t
                mat[col][col] += -1
            elif w[i - 1] == w[i]:
                mat[col][col] += t
            else:
                mat[index[ws]][col] += t + 1
        t_mats.append(mat)

    xi_mats = []
    for j in range(1, params.n + 1):
        mat = [[Fraction(0)] * dim for _ in range(dim)]
        for w in words:
            mat[index[w]][index[w]] = params.u[w[j - 1] - 1]
        xi_mats.append(mat)

    module = ExplicitModule(t_mats=tuple(t_mats), xi_mats=tuple(xi_mats))
    if not module_relations_ok(params, module):
        raise OracleError("shape module violates the defining relations")
    return module


# ---------------------------------------------------------------------------
# composition series by socle peeling

def _character_kernel(params, module, char):
    stacked = []
    dim = module.dim
    for i, t in enumerate(char.t_values, start=1):
        mat = mat_sub(module.t_mats[i - 1], mat_scale(Fraction(t), mat_identity(dim)))
        stacked.extend(mat)
    for j, c in enumerate(char.xi_colors, start=1):
        mat = mat_sub(module.xi_mats[j - 1],
                      mat_scale(params.u[c - 1], mat_identity(dim)))
        stacked.extend(mat)
    return kernel_basis(stacked, dim)


def composition_factors(params: AlgebraParams, module: ExplicitModule) -> Counter:
    """Multiset of one-dimensional characters in a composition series,
    by repeatedly splitting off the socle (the span of all joint
    eigenvectors) and passing to the quotient."""
    factors = Counter()
    original_dim = module.dim
    t_mats = [list(map(list, m)) for m in module.t_mats]
    xi_mats = [list(map(list, m)) for m in module.xi_mats]
    dim = module.dim
    candidates = enumerate_one_dim_characters(params)

    while dim > 0:
        current = ExplicitModule(tuple(t_mats), tuple(xi_mats))
        socle_rows, counts = [], {}
        for char in candidates:
            ker = _character_kernel(params, current, char)
            if ker:
                counts[char] = len(ker)
                socle_rows.extend(ker)
        if not socle_rows:
            raise OracleError(
                f"no one-dimensional submodule in a module of dimension {dim}; "
                "this would falsify the classification of the simples")
        sub_rref, pivots = rref(socle_rows)
        if len(sub_rref) != sum(counts.values()):
            raise OracleError("joint eigenspaces are not independent")
        factors.update(counts)

        free = [c for c in range(dim) if c not in pivots]

        def quotient(mat):
            out = [[Fraction(0)] * len(free) for _ in range(len(free))]
            for newcol, col in enumerate(free):
                column = [mat[row][col] for row in range(dim)]
                rep = reduce_mod_rref(sub_rref, pivots, column)
                for k, f in enumerate(free):
                    out[k][newcol] = rep[f]
            return out

        t_mats = [quotient(m) for m in t_mats]
        xi_mats = [quotient(m) for m in xi_mats]
        dim = len(free)

    if sum(factors.values()) != original_dim:
        raise OracleError("composition factor count does not match the dimension")
    return factors


# ---------------------------------------------------------------------------
# submodule order and socle of the shape modules

def _invariant_span(module: ExplicitModule, seed_vectors):
    """Row-echelon basis of the smallest submodule containing the seeds."""
    dim = module.dim
    mats = list(module.t_mats) + list(module.xi_mats)
    rows, pivots = rref(seed_vectors)
    grew = True
    while grew:
        grew = False
        for mat in mats:
            for row in list(rows):
                image = [sum(mat[i][j] * row[j] for j in range(dim))
                         for i in range(dim)]
                red = reduce_mod_rref(rows, pivots, image)
                if any(red):
                    rows, pivots = rref(rows + [red])
                    grew = True
    return rows, pivots


def check_submodule_order(params: AlgebraParams, shape) -> dict:
    """In the shape module, the cyclic submodule of one color-word basis
    vector contains the one of another exactly when the second word is
    below the first in the sorting order of fillings of the shape."""
    module = build_shape_module(params, shape)
    words = list(itertools.product(range(1, params.r + 1), repeat=params.n))
    index = {w: k for k, w in enumerate(words)}
    spans = {}
    for w in words:
        seed = [Fraction(0)] * len(words)
        seed[index[w]] = Fraction(1)
        spans[w] = _invariant_span(module, [seed])
    below = {w: fillings_below(shape, w) for w in words}

    for c in words:
        rows_c, _ = spans[c]
        for cp in words:
            rows_cp, pivots_cp = spans[cp]
            contained = all(
                not any(reduce_mod_rref(rows_cp, pivots_cp, row))
                for row in rows_c)
            expected = (c == cp) or (c in below[cp])
            if contained != expected:
                return {"check": "submodule-order",
                        "instance": f"shape={shape}", "pass": False,
                        "counterexample": {"c": list(c), "c_prime": list(cp),
                                           "contained": contained,
                                           "order": expected}}
    return {"check": "submodule-order", "instance": f"shape={shape}",
            "pass": True, "counterexample": None}


def check_socle(params: AlgebraParams, shape) -> dict:
    """The socle of a shape module is spanned exactly by the basis vectors
    whose color word makes the shape a cycloribbon."""
    module = build_shape_module(params, shape)
    words = list(itertools.product(range(1, params.r + 1), repeat=params.n))
    index = {w: k for k, w in enumerate(words)}

    socle_rows = []
    for char in enumerate_one_dim_characters(params):
        socle_rows.extend(_character_kernel(params, module, char))
    got = rref(socle_rows)[0] if socle_rows else []

    expected_rows = []
    for w in words:
        if is_cycloribbon(ColoredRibbon(tuple(shape), w)):
            row = [Fraction(0)] * len(words)
            row[index[w]] = Fraction(1)
            expected_rows.append(row)
    expected = rref(expected_rows)[0] if expected_rows else []

    ok = got == expected
    return {"check": "socle", "instance": f"shape={shape}", "pass": ok,
            "counterexample": None if ok else {
                "socle_dim": len(got), "cycloribbon_count": len(expected)}}


# ---------------------------------------------------------------------------
# arbitration: combinatorial induction against explicit induction

def cross_check_induction(r: int, max_grade: int, *,
                          negate_colors: bool = False, u=None) -> dict:
    """Compare, for every pair of simple labels with total size up to
    ``max_grade``, the combinatorial composition factors of their
    induction product with the factors computed from an explicitly
    induced module.  This is the test that pins down the color
    convention used when inverting colored permutations."""
    from .reptheory import induce_simples
    cases, failures = 0, []
    for total in range(2, max_grade + 1):
        params = AlgebraParams(total, r, u if u is None else tuple(u))
        for m in range(1, total):
            for a in enumerate_cycloribbons(m, r):
                for b in enumerate_cycloribbons(total - m, r):
                    cases += 1
                    expected = Counter()
                    for lab, mult in induce_simples(
                            a, b, negate_colors=negate_colors, r=r).items():
                        expected[simple_character(lab)] += mult
                    module = build_induced_module(
                        params, [simple_character(a), simple_character(b)])
                    got = composition_factors(params, module)
                    if got != expected:
                        failures.append({
                            "lhs": {"shape": list(a.shape), "colors": list(a.colors)},
                            "rhs": {"shape": list(b.shape), "colors": list(b.colors)},
                            "combinatorial": sorted(
                                (list(ch.xi_colors), list(ch.t_values), mult)
                                for ch, mult in expected.items()),
                            "oracle": sorted(
                                (list(ch.xi_colors), list(ch.t_values), mult)
                                for ch, mult in got.items())})
    return {"check": "induction-cross-check", "r": r, "max_grade": max_grade,
            "negate_colors": negate_colors, "cases": cases,
            "failures": failures, "pass": not failures}
