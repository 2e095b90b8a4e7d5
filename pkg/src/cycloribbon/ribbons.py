"""Colored ribbon combinatorics.

A composition ``I = (i_1, ..., i_p)`` of ``n`` is drawn as a ribbon: rows
of lengths ``i_k``, each row hanging below the last cell of the previous
one (French notation, rows read top to bottom).  Cells are numbered
``1..n`` in reading order, and the step from cell ``i`` to cell ``i+1``
goes down (a "column step") exactly when ``i`` lies in the descent set
``D(I) = {i_1, i_1+i_2, ...}``; otherwise it goes right (a "row step").
All predicates below are phrased in terms of ``D(shape)`` so that no
drawing is ever needed.

A colored ribbon fills the cells with colors from ``{1, ..., r}``.  Two
monotone families of fillings play dual roles:

* cycloribbons: colors never decrease across a row step and never
  increase across a column step;
* anticycloribbons: the reversed inequalities.

There are ``r*(r+1)**(n-1)`` of each: the first cell picks one of ``r``
colors and every later cell either repeats the previous color (two
possible steps) or changes it (the step direction is then forced).
The involution :func:`flip_ribbon` exchanges the two families.

Colored permutations (a permutation word plus one color per position)
drive the induction-product pipeline: see
:func:`inverse_colored_perm`, :func:`shifted_shuffle` and
:func:`colored_descent_composition`.

All values are immutable and all functions are pure, so everything here
is safe to use concurrently.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional, Sequence

Composition = tuple  # tuple of positive ints
ColorWord = tuple    # tuple of ints in 1..r


class ColoredRibbon(NamedTuple):
    """A ribbon shape together with one color per cell."""

    shape: Composition
    colors: ColorWord

    @property
    def size(self):
        return len(self.colors)


class ColoredComposition(NamedTuple):
    """A composition together with one color per part."""

    parts: Composition
    colors: ColorWord

    @property
    def size(self):
        return sum(self.parts)


class ColoredPermutation(NamedTuple):
    """A permutation word of 1..n with one color per position.

    Some operations (see :func:`inverse_colored_perm`) return the colors
    indexed by *value* instead; the docstrings say which convention a
    function expects or produces.
    """

    word: tuple
    colors: ColorWord

    @property
    def size(self):
        return len(self.word)


# ---------------------------------------------------------------------------
# compositions and descent sets

def descent_set(parts: Sequence[int]) -> set:
    """Partial sums of a composition, omitting the total.

    >>> sorted(descent_set((2, 1)))
    [2]
    >>> sorted(descent_set((1, 3)))
    [1]
    """
    out, total = set(), 0
    for p in parts[:-1]:
        total += p
        out.add(total)
    return out


def composition_from_descents(n: int, descents) -> Composition:
    """Inverse of :func:`descent_set` for subsets of ``{1, ..., n-1}``.

    >>> composition_from_descents(4, {1, 2})
    (1, 1, 2)
    """
    ds = sorted(descents)
    for d in ds:
        if not 1 <= d <= n - 1:
            raise ValueError(f"descent {d} outside 1..{n - 1}")
    prev, parts = 0, []
    for d in ds + [n]:
        parts.append(d - prev)
        prev = d
    if n == 0:
        return ()
    return tuple(parts)


def descent_bitmask(parts: Sequence[int]) -> int:
    """Descent set packed into an integer, bit ``i-1`` for descent ``i``."""
    mask, total = 0, 0
    for p in parts[:-1]:
        total += p
        mask |= 1 << (total - 1)
    return mask


def compositions(n: int) -> Iterator[Composition]:
    """All 2**(n-1) compositions of n, by increasing descent bitmask."""
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        yield composition_from_descents(
            n, [i + 1 for i in range(n - 1) if mask >> i & 1])


def coarsenings(parts: Composition) -> Iterator[Composition]:
    """All compositions obtained by merging adjacent parts (incl. the input)."""
    p = len(parts)
    if p == 0:
        yield ()
        return
    for mask in range(1 << (p - 1)):
        out, acc = [], parts[0]
        for i in range(1, p):
            if mask >> (i - 1) & 1:
                out.append(acc)
                acc = parts[i]
            else:
                acc += parts[i]
        out.append(acc)
        yield tuple(out)


def partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple]:
    """Partitions of n as weakly decreasing tuples, in descending lex order.

    >>> list(partitions(3))
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n == 0:
        yield ()
        return
    if largest is None:
        largest = n
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# ribbon predicates, enumeration, the flip involution

def validate_ribbon(rib: ColoredRibbon, r: Optional[int] = None) -> None:
    if sum(rib.shape) != len(rib.colors):
        raise ValueError(f"shape {rib.shape} does not match {len(rib.colors)} colors")
    if any(p < 1 for p in rib.shape):
        raise ValueError(f"non-positive part in {rib.shape}")
    if any(c < 1 or (r is not None and c > r) for c in rib.colors):
        raise ValueError(f"colors {rib.colors} outside 1..{r}")


def is_cycloribbon(rib: ColoredRibbon) -> bool:
    """Colors weakly increase across row steps, weakly decrease down columns."""
    ds = descent_set(rib.shape)
    c = rib.colors
    for i in range(1, len(c)):
        if i in ds:
            if c[i - 1] < c[i]:
                return False
        elif c[i - 1] > c[i]:
            return False
    return True


def is_anticycloribbon(rib: ColoredRibbon) -> bool:
    """Colors weakly decrease across row steps, weakly increase down columns."""
    ds = descent_set(rib.shape)
    c = rib.colors
    for i in range(1, len(c)):
        if i in ds:
            if c[i - 1] > c[i]:
                return False
        elif c[i - 1] < c[i]:
            return False
    return True


def _enumerate_fillings(n, r, shape, row_weakly_increasing):
    """Shared generator behind the cycloribbon/anticycloribbon enumerations."""
    if n == 0:
        yield ColoredRibbon((), ())
        return
    forced = None if shape is None else descent_set(shape)

    def extend(i, desc, colors):
        # i cells placed so far, desc = descent positions, colors reversed-built
        if i == n:
            yield ColoredRibbon(composition_from_descents(n, desc), tuple(colors))
            return
        last = colors[-1]
        for c in range(1, r + 1):
            if c == last:
                steps = (False, True)
            elif (c > last) == row_weakly_increasing:
                steps = (False,)  # row step forced
            else:
                steps = (True,)   # column step forced
            for down in steps:
                if forced is not None and (i in forced) != down:
                    continue
                if down:
                    desc.append(i)
                colors.append(c)
                yield from extend(i + 1, desc, colors)
                colors.pop()
                if down:
                    desc.pop()

    for c0 in range(1, r + 1):
        yield from extend(1, [], [c0])


def enumerate_cycloribbons(n: int, r: int, shape: Optional[Composition] = None) -> list:
    """All cycloribbons of size n with r colors, optionally of a fixed shape.

    The result is sorted by :func:`ribbon_sort_key`, hence deterministic.

    >>> [rib.colors for rib in enumerate_cycloribbons(3, 2, shape=(2, 1))]
    [(1, 1, 1), (1, 2, 1), (1, 2, 2), (2, 2, 1), (2, 2, 2)]
    """
    if shape is not None and sum(shape) != n:
        raise ValueError(f"shape {shape} is not a composition of {n}")
    return sorted(_enumerate_fillings(n, r, shape, True), key=ribbon_sort_key)


def enumerate_anticycloribbons(n: int, r: int, shape: Optional[Composition] = None) -> list:
    """Anticycloribbon counterpart of :func:`enumerate_cycloribbons`."""
    if shape is not None and sum(shape) != n:
        raise ValueError(f"shape {shape} is not a composition of {n}")
    return sorted(_enumerate_fillings(n, r, shape, False), key=ribbon_sort_key)


def flip_ribbon(rib: ColoredRibbon) -> ColoredRibbon:
    """Involution exchanging cycloribbons and anticycloribbons.

    The colors are kept and the ribbon is rebuilt cell by cell: a repeated
    color keeps the step of the input, a changed color toggles it.

    >>> flip_ribbon(ColoredRibbon((1, 1), (2, 1)))
    ColoredRibbon(shape=(2,), colors=(2, 1))
    """
    ds = descent_set(rib.shape)
    c = rib.colors
    new_ds = set()
    for i in range(1, len(c)):
        if (c[i - 1] == c[i]) == (i in ds):
            new_ds.add(i)
    return ColoredRibbon(composition_from_descents(len(c), new_ds), c)


# ---------------------------------------------------------------------------
# colored compositions <-> anticycloribbons

def colored_comp_to_anticycloribbon(cc: ColoredComposition) -> ColoredRibbon:
    """Fill part k with its color; a part boundary becomes a column step
    exactly when the next part's color is >= the current one.  Positions
    inside a part stay row steps.  The output is an anticycloribbon.
    """
    if len(cc.parts) != len(cc.colors):
        raise ValueError(f"{len(cc.parts)} parts but {len(cc.colors)} colors")
    colors, ds, pos = [], set(), 0
    for k, (p, col) in enumerate(zip(cc.parts, cc.colors)):
        colors.extend([col] * p)
        pos += p
        if k + 1 < len(cc.parts) and col <= cc.colors[k + 1]:
            ds.add(pos)
    n = sum(cc.parts)
    return ColoredRibbon(composition_from_descents(n, ds), tuple(colors))


def anticycloribbon_to_colored_comp(rib: ColoredRibbon) -> ColoredComposition:
    """Inverse of :func:`colored_comp_to_anticycloribbon`.

    Part boundaries are the color changes plus the column steps between
    equal colors.  Rejects ribbons that are not anticycloribbons.
    """
    validate_ribbon(rib)
    if not is_anticycloribbon(rib):
        raise ValueError(f"{rib} is not an anticycloribbon")
    c = rib.colors
    ds = descent_set(rib.shape)
    boundaries = [i for i in range(1, len(c))
                  if c[i - 1] != c[i] or i in ds]
    parts, colors, prev = [], [], 0
    for b in boundaries + [len(c)]:
        if b > prev:
            parts.append(b - prev)
            colors.append(c[prev])
        prev = b
    return ColoredComposition(tuple(parts), tuple(colors))


def colored_compositions(n: int, r: int) -> list:
    """All colored compositions of n with r colors, canonically sorted."""
    out = [ColoredComposition(parts, cols)
           for parts in compositions(n)
           for cols in itertools.product(range(1, r + 1), repeat=len(parts))]
    return sorted(out, key=colored_composition_sort_key)


# ---------------------------------------------------------------------------
# the sorting order on fillings of a fixed shape

def sorting_covers(shape: Composition, colors: ColorWord) -> list:
    """One-move sorts of a filling of ``shape``: sort an adjacent pair
    increasingly on a row step, decreasingly on a column step.  Each move
    produces a filling strictly below the input in the sorting order.

    >>> sorting_covers((1, 1), (1, 2))
    [(2, 1)]
    >>> sorting_covers((2,), (1, 2))
    []
    """
    ds = descent_set(shape)
    c = list(colors)
    out = []
    for i in range(1, len(c)):
        lo, hi = c[i - 1], c[i]
        if (i not in ds and lo > hi) or (i in ds and lo < hi):
            swapped = c[:]
            swapped[i - 1], swapped[i] = hi, lo
            out.append(tuple(swapped))
    return out


def fillings_below(shape: Composition, colors: ColorWord) -> set:
    """All fillings strictly below ``colors`` in the sorting order on
    fillings of ``shape`` (transitive closure of :func:`sorting_covers`)."""
    seen, stack = set(), [tuple(colors)]
    while stack:
        for cov in sorting_covers(shape, stack.pop()):
            if cov not in seen:
                seen.add(cov)
                stack.append(cov)
    return seen


# ---------------------------------------------------------------------------
# permutations

def inverse_perm(word: Sequence[int]) -> tuple:
    inv = [0] * len(word)
    for i, v in enumerate(word):
        inv[v - 1] = i + 1
    return tuple(inv)


def inversions(word: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(word)), 2)
               if word[i] > word[j])


def descent_composition(word: Sequence[int]) -> Composition:
    """Composition recording the descents of a permutation word.

    >>> descent_composition((2, 3, 1))
    (2, 1)
    """
    ds = {i for i in range(1, len(word)) if word[i - 1] > word[i]}
    return composition_from_descents(len(word), ds)


def max_inversion_perm(parts: Composition) -> tuple:
    """The permutation with the most inversions among those whose descent
    composition is ``parts``: each block takes the largest values still
    available, in increasing order.

    >>> max_inversion_perm((2, 1))
    (2, 3, 1)
    """
    out, hi = [], sum(parts)
    for p in parts:
        out.extend(range(hi - p + 1, hi + 1))
        hi -= p
    return tuple(out)


def negate_color(c: int, r: int) -> int:
    """Inverse of a color in the cyclic group on {1, ..., r}."""
    return 1 if c == 1 else r + 2 - c


def inverse_colored_perm(p: ColoredPermutation, r: Optional[int] = None,
                         negate: bool = False) -> ColoredPermutation:
    """Invert a position-colored permutation.

    The word becomes its inverse and the returned colors are indexed by
    *value*: entry ``j`` is the color the value ``j`` carried in ``p``
    (optionally negated in the cyclic color group, which needs ``r``).
    This is the form :func:`shifted_shuffle` consumes.

    >>> inverse_colored_perm(ColoredPermutation((2, 1), (2, 1)))
    ColoredPermutation(word=(2, 1), colors=(1, 2))
    """
    inv = inverse_perm(p.word)
    vals = tuple(p.colors[inv[j] - 1] for j in range(len(inv)))
    if negate:
        if r is None:
            raise ValueError("color negation needs the number of colors r")
        vals = tuple(negate_color(c, r) for c in vals)
    return ColoredPermutation(inv, vals)


def shifted_shuffle(a: ColoredPermutation, b: ColoredPermutation) -> list:
    """Shifted shuffle of two value-colored permutations.

    The letters of ``b`` are shifted up by ``len(a)`` and keep their
    colors; the result lists all interleavings that preserve both letter
    orders, as position-colored permutations (each position shows the
    color of the letter sitting there).

    >>> len(shifted_shuffle(ColoredPermutation((2, 1), (1, 2)),
    ...                     ColoredPermutation((1, 2), (1, 2))))
    6
    """
    m, n = len(a.word), len(b.word)
    letter_color = dict(enumerate(a.colors, start=1))
    letter_color.update((v + m, c) for v, c in enumerate(b.colors, start=1))
    shifted_b = [v + m for v in b.word]
    out = []
    for slots in itertools.combinations(range(m + n), m):
        word = [0] * (m + n)
        slot_set = set(slots)
        ai = bi = 0
        for pos in range(m + n):
            if pos in slot_set:
                word[pos] = a.word[ai]
                ai += 1
            else:
                word[pos] = shifted_b[bi]
                bi += 1
        out.append(ColoredPermutation(
            tuple(word), tuple(letter_color[v] for v in word)))
    return out


def colored_descent_composition(p: ColoredPermutation) -> ColoredRibbon:
    """Cycloribbon attached to a position-colored permutation: position i
    is a column step when the color strictly drops, or when the color
    repeats and the letter drops.

    >>> colored_descent_composition(ColoredPermutation((2, 1, 3, 4), (2, 1, 1, 2)))
    ColoredRibbon(shape=(1, 3), colors=(2, 1, 1, 2))
    """
    w, u = p.word, p.colors
    ds = {i for i in range(1, len(w))
          if u[i - 1] > u[i] or (u[i - 1] == u[i] and w[i - 1] > w[i])}
    return ColoredRibbon(composition_from_descents(len(w), ds), u)


@lru_cache(maxsize=None)
def descent_class_size(parts: Composition) -> int:
    """Number of permutations whose descent composition is ``parts``,
    by inclusion-exclusion over coarsenings.

    >>> descent_class_size((2, 1))
    2
    """
    n = sum(parts)
    total = 0
    for coarse in coarsenings(parts):
        term = math.factorial(n)
        for q in coarse:
            term //= math.factorial(q)
        total += (-1) ** (len(parts) - len(coarse)) * term
    return total


# ---------------------------------------------------------------------------
# canonical sort keys (shape as descent bitmask, then colors)

def ribbon_sort_key(rib: ColoredRibbon):
    return (rib.size, descent_bitmask(rib.shape), rib.colors)


def colored_composition_sort_key(cc: ColoredComposition):
    return (cc.size, descent_bitmask(cc.parts), cc.colors)


def multipartition_sort_key(mp):
    return (tuple(sum(comp) for comp in mp), mp)


def multipartitions(n: int, r: int) -> list:
    """r-tuples of partitions with total size n, sorted by the size vector
    and then componentwise."""
    def split(remaining, k):
        if k == 1:
            for lam in partitions(remaining):
                yield (lam,)
            return
        for here in range(remaining + 1):
            for lam in partitions(here):
                for rest in split(remaining - here, k - 1):
                    yield (lam,) + rest

    return sorted(split(n, r), key=multipartition_sort_key)


# ---------------------------------------------------------------------------
# text literals ("shape|colors" for ribbons, "len^color." for colored
# compositions); these are the grammars used by the command line tool

def _parse_int_list(text: str, what: str, offset: int = 0) -> tuple:
    if text == "":
        return ()
    out, pos = [], 0
    for piece in text.split(","):
        if not piece.strip().isdigit():
            raise ValueError(
                f"position {offset + pos}: expected a positive integer "
                f"{what}, got {piece!r}")
        out.append(int(piece))
        pos += len(piece) + 1
    return tuple(out)


def parse_composition(text: str) -> Composition:
    parts = _parse_int_list(text.strip(), "part")
    if any(p < 1 for p in parts):
        raise ValueError(f"non-positive part in {text!r}")
    return parts


def parse_ribbon(text: str) -> ColoredRibbon:
    """Parse a ``"shape|colors"`` literal, e.g. ``"1,3|2,1,1,2"``.

    >>> parse_ribbon("1,3|2,1,1,2")
    ColoredRibbon(shape=(1, 3), colors=(2, 1, 1, 2))
    """
    if "|" not in text:
        raise ValueError(f"position {len(text)}: expected '|' between shape and colors")
    shape_text, _, colors_text = text.partition("|")
    shape = parse_composition(shape_text)
    colors = _parse_int_list(colors_text.strip(), "color", offset=len(shape_text) + 1)
    rib = ColoredRibbon(shape, colors)
    validate_ribbon(rib)
    return rib


def ribbon_literal(rib: ColoredRibbon) -> str:
    return "{}|{}".format(",".join(map(str, rib.shape)),
                          ",".join(map(str, rib.colors)))


def parse_colored_composition(text: str) -> ColoredComposition:
    """Parse a ``"len^color."``-joined literal, e.g. ``"2^1.1^2.3^1"``.

    >>> parse_colored_composition("2^1.1^2")
    ColoredComposition(parts=(2, 1), colors=(1, 2))
    """
    if text.strip() == "":
        return ColoredComposition((), ())
    parts, colors, pos = [], [], 0
    for piece in text.split("."):
        if piece.count("^") != 1:
            raise ValueError(f"position {pos}: expected 'length^color', got {piece!r}")
        a, b = piece.split("^")
        if not a.isdigit() or not b.isdigit() or int(a) < 1 or int(b) < 1:
            raise ValueError(f"position {pos}: bad part {piece!r}")
        parts.append(int(a))
        colors.append(int(b))
        pos += len(piece) + 1
    return ColoredComposition(tuple(parts), tuple(colors))


def colored_composition_literal(cc: ColoredComposition) -> str:
    return ".".join(f"{p}^{c}" for p, c in zip(cc.parts, cc.colors))


def multipartition_literal(mp) -> str:
    """Partitions joined by ';', parts by ',': ((1,1),()) -> '1,1;'."""
    return ";".join(",".join(map(str, comp)) for comp in mp)
