"""Finite Coxeter groups with integer weight functions.

A datum bundles a Coxeter matrix, a weight function L on the generators
(constant on conjugate generators, i.e. L(s) = L(t) whenever m(s,t) is
odd), and the fully enumerated group: every element gets a ShortLex
normal word, and right multiplication by generators is tabulated once at
construction. The table build is the only mutation; afterwards a datum
is read-only and safe to share between threads.

Elements are identified through a faithful seed action chosen per type:
permutations for type A, signed permutations for type B, a dihedral
rotation/reflection index for G2, and for custom Coxeter matrices the
permutation action on the root system, with roots computed exactly over
Z[zeta_2M] (M = lcm of the bond orders).

Element order is deterministic: by length, then lexicographically by
ShortLex normal word. Words render as "s1.s2.s1" (generators are
1-based in text), the identity renders as "e".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .laurent import CyclotomicInt

__all__ = [
    "CoxeterDatum",
    "GroupElement",
    "InvalidWeights",
    "UnsupportedType",
    "GroupTooLarge",
    "build_datum",
    "datum_from_json_dict",
    "DEFAULT_GROUP_CAP",
]

DEFAULT_GROUP_CAP = 10**6


class InvalidWeights(ValueError):
    """Weight list malformed or not constant on odd-bonded generator pairs."""


class UnsupportedType(ValueError):
    """Unknown type tag, or a request this type cannot satisfy."""


class GroupTooLarge(ValueError):
    """Enumeration exceeded the configured group order cap."""


@dataclass(frozen=True)
class GroupElement:
    """An element of a fixed CoxeterDatum; equality means same datum object
    and same ShortLex normal form."""

    datum: "CoxeterDatum" = field(repr=False)
    index: int

    def __repr__(self) -> str:
        return f"<{self.datum.render_element(self)}>"


def _seed_type_a(rank: int):
    identity = tuple(range(rank + 1))

    def apply(value: tuple, s: int) -> tuple:
        out = list(value)
        out[s], out[s + 1] = out[s + 1], out[s]
        return tuple(out)

    return identity, apply


def _seed_type_b(rank: int):
    identity = tuple(range(1, rank + 1))

    def apply(value: tuple, s: int) -> tuple:
        out = list(value)
        if s == 0:
            out[0] = -out[0]
        else:
            out[s - 1], out[s] = out[s], out[s - 1]
        return tuple(out)

    return identity, apply


def _seed_g2():
    # Dihedral group of order 12 as maps j -> eps*j + k on Z/6;
    # the two generators are the reflections j -> -j and j -> 1 - j.
    identity = (1, 0)

    def apply(value: tuple, s: int) -> tuple:
        eps, k = value
        return (-eps, (eps * s + k) % 6)

    return identity, apply


def _root_system_seed(matrix: Sequence[Sequence[int]], rank: int, cap: int):
    """Generic fallback: generators act as permutations of the full root
    system, computed exactly over Z[zeta_2M]."""
    bond_orders = [
        matrix[s][t] for s in range(rank) for t in range(s + 1, rank)
    ]
    order = 2 * math.lcm(*bond_orders) if bond_orders else 2
    zero = CyclotomicInt.zero(order)
    two_cos = {}
    for s in range(rank):
        for t in range(rank):
            if s != t:
                m = matrix[s][t]
                k = order // (2 * m)
                two_cos[s, t] = CyclotomicInt.zeta(order, k) + CyclotomicInt.zeta(
                    order, -k
                )

    def reflect(s: int, vec: tuple) -> tuple:
        new_s = -vec[s]
        for t in range(rank):
            if t != s and vec[t]:
                new_s = new_s + two_cos[s, t] * vec[t]
        return vec[:s] + (new_s,) + vec[s + 1 :]

    simple = []
    for s in range(rank):
        coords = [zero] * rank
        coords[s] = CyclotomicInt.one(order)
        simple.append(tuple(coords))

    root_cap = 2 * cap + 2
    roots: list[tuple] = list(simple)
    seen = {r: i for i, r in enumerate(roots)}
    pos = 0
    while pos < len(roots):
        vec = roots[pos]
        pos += 1
        for s in range(rank):
            image = reflect(s, vec)
            if image not in seen:
                seen[image] = len(roots)
                roots.append(image)
                if len(roots) > root_cap:
                    raise GroupTooLarge(
                        f"root system exceeds {root_cap} roots; "
                        "the group is infinite or above the cap"
                    )
    perms = []
    for s in range(rank):
        perms.append(tuple(seen[reflect(s, r)] for r in roots))
    identity = tuple(range(len(roots)))

    def apply(value: tuple, s: int) -> tuple:
        perm = perms[s]
        return tuple(value[p] for p in perm)

    return identity, apply


class CoxeterDatum:
    """A finite Coxeter group with weights, fully enumerated.

    Do not call directly; use build_datum().
    """

    def __init__(
        self,
        type_tag: str,
        rank: int,
        coxeter_matrix: tuple[tuple[int, ...], ...],
        weights: tuple[int, ...],
        cap: int,
        seed: tuple,
    ):
        self.type_tag = type_tag
        self.rank = rank
        self.coxeter_matrix = coxeter_matrix
        self.weights = weights
        self.cap = cap
        identity, apply = seed
        # BFS in ShortLex order: processing elements in discovery order and
        # generators ascending yields normal words sorted by (length, word).
        words: list[tuple[int, ...]] = [()]
        values = [identity]
        index = {identity: 0}
        parents: list[tuple[int, int] | None] = [None]
        right_rows: list[list[int]] = []
        pos = 0
        while pos < len(words):
            row = [0] * rank
            value = values[pos]
            for s in range(rank):
                image = apply(value, s)
                j = index.get(image)
                if j is None:
                    j = len(words)
                    if j >= cap:
                        raise GroupTooLarge(
                            f"group order exceeds cap {cap} for type "
                            f"{type_tag!r} rank {rank}"
                        )
                    index[image] = j
                    words.append(words[pos] + (s,))
                    values.append(image)
                    parents.append((pos, s))
                row[s] = j
            right_rows.append(row)
            pos += 1
        self._words = words
        self._right = right_rows
        self._parents = parents
        self._left: list[list[int]] | None = None
        self.size = len(words)

    # ----- elements -------------------------------------------------------

    def element(self, index: int) -> GroupElement:
        if not 0 <= index < self.size:
            raise IndexError(f"element index {index} out of range")
        return GroupElement(self, index)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self, 0)

    def generator(self, s: int) -> GroupElement:
        if not 0 <= s < self.rank:
            raise IndexError(f"generator index {s} out of range")
        return GroupElement(self, self._right[0][s])

    def generators(self) -> list[GroupElement]:
        return [self.generator(s) for s in range(self.rank)]

    def elements(self) -> list[GroupElement]:
        """All elements, by length then lexicographic ShortLex normal word."""
        return [GroupElement(self, i) for i in range(self.size)]

    def longest_element(self) -> GroupElement:
        return GroupElement(self, self.size - 1)

    # ----- word structure ---------------------------------------------------

    def _own(self, x: GroupElement) -> int:
        if x.datum is not self:
            raise ValueError("element belongs to a different datum")
        return x.index

    def reduced_word(self, x: GroupElement) -> tuple[int, ...]:
        return self._words[self._own(x)]

    def length(self, x: GroupElement) -> int:
        return len(self._words[self._own(x)])

    def weight(self, x: GroupElement) -> int:
        return sum(self.weights[s] for s in self._words[self._own(x)])

    def multiply(self, x: GroupElement, y: GroupElement) -> GroupElement:
        i = self._own(x)
        for s in self._words[self._own(y)]:
            i = self._right[i][s]
        return GroupElement(self, i)

    def inverse(self, x: GroupElement) -> GroupElement:
        i = 0
        for s in reversed(self._words[self._own(x)]):
            i = self._right[i][s]
        return GroupElement(self, i)

    def right_descent(self, x: GroupElement, s: int) -> bool:
        """True iff length(x s) < length(x)."""
        i = self._own(x)
        j = self._right[i][s]
        return len(self._words[j]) < len(self._words[i])

    def left_multiply_generator(self, s: int, x: GroupElement) -> GroupElement:
        """s * x through the tabulated left action."""
        if self._left is None:
            left = []
            for i in range(self.size):
                row = [0] * self.rank
                for t in range(self.rank):
                    j = self._right[0][t]
                    for letter in self._words[i]:
                        j = self._right[j][letter]
                    row[t] = j
                left.append(row)
            self._left = left
        return GroupElement(self, self._left[self._own(x)][s])

    # ----- text and JSON -----------------------------------------------------

    def render_element(self, x: GroupElement) -> str:
        word = self._words[self._own(x)]
        if not word:
            return "e"
        return ".".join(f"s{s + 1}" for s in word)

    def parse_element(self, text: str) -> GroupElement:
        """Accepts any word "s1.s2..." (not necessarily reduced) or "e"."""
        text = text.strip()
        if text in ("", "e"):
            return self.identity
        i = 0
        for token in text.split("."):
            if not token.startswith("s"):
                raise ValueError(f"malformed generator token {token!r}")
            s = int(token[1:]) - 1
            if not 0 <= s < self.rank:
                raise ValueError(f"generator {token!r} out of range")
            i = self._right[i][s]
        return GroupElement(self, i)

    def to_json_dict(self) -> dict:
        return {
            "type": self.type_tag,
            "rank": self.rank,
            "weights": list(self.weights),
            "coxeterMatrix": [list(row) for row in self.coxeter_matrix],
        }

    def __repr__(self) -> str:
        return (
            f"CoxeterDatum(type={self.type_tag!r}, rank={self.rank}, "
            f"weights={self.weights}, size={self.size})"
        )


def _validate_matrix(matrix: Sequence[Sequence[int]], rank: int) -> tuple:
    if len(matrix) != rank or any(len(row) != rank for row in matrix):
        raise ValueError(f"Coxeter matrix must be {rank}x{rank}")
    for s in range(rank):
        if matrix[s][s] != 1:
            raise ValueError("Coxeter matrix diagonal must be 1")
        for t in range(rank):
            if s != t:
                m = matrix[s][t]
                if not isinstance(m, int) or m < 2:
                    raise ValueError(
                        f"off-diagonal bond orders must be integers >= 2, "
                        f"got m({s},{t}) = {m!r}"
                    )
                if matrix[t][s] != m:
                    raise ValueError("Coxeter matrix must be symmetric")
    return tuple(tuple(row) for row in matrix)


def _validate_weights(
    weights: Sequence[int], matrix: tuple, rank: int
) -> tuple[int, ...]:
    if len(weights) != rank:
        raise InvalidWeights(f"need {rank} weights, got {len(weights)}")
    out = []
    for w in weights:
        if not isinstance(w, int) or w < 0:
            raise InvalidWeights(f"weights must be nonnegative integers, got {w!r}")
        out.append(w)
    for s in range(rank):
        for t in range(s + 1, rank):
            if matrix[s][t] % 2 == 1 and out[s] != out[t]:
                raise InvalidWeights(
                    f"generators {s + 1} and {t + 1} are joined by an odd bond "
                    f"(m = {matrix[s][t]}) so their weights must agree; "
                    f"got {out[s]} and {out[t]}"
                )
    return tuple(out)


def build_datum(
    type_tag: str,
    rank: int,
    weights: Sequence[int],
    coxeter_matrix: Sequence[Sequence[int]] | None = None,
    cap: int = DEFAULT_GROUP_CAP,
) -> CoxeterDatum:
    """Validate and fully enumerate a weighted Coxeter group.

    type_tag: "a" (symmetric group on rank+1 letters), "b" (hyperoctahedral,
    generator 1 carries the 4-bond), "g2" (dihedral of order 12), or
    "custom" (coxeter_matrix required). For type "b" a weight pair (b, a)
    is accepted and expanded to (b, a, ..., a).
    """
    tag = type_tag.lower()
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    weights = list(weights)
    if tag == "a":
        matrix = [
            [1 if s == t else (3 if abs(s - t) == 1 else 2) for t in range(rank)]
            for s in range(rank)
        ]
        seed_builder = lambda m: _seed_type_a(rank)
    elif tag == "b":
        if rank < 2:
            raise UnsupportedType("type b needs rank >= 2")
        if len(weights) == 2 and rank > 2:
            weights = [weights[0]] + [weights[1]] * (rank - 1)
        matrix = [
            [
                1
                if s == t
                else (4 if {s, t} == {0, 1} else (3 if abs(s - t) == 1 else 2))
                for t in range(rank)
            ]
            for s in range(rank)
        ]
        seed_builder = lambda m: _seed_type_b(rank)
    elif tag == "g2":
        if rank != 2:
            raise UnsupportedType("type g2 has rank 2")
        matrix = [[1, 6], [6, 1]]
        seed_builder = lambda m: _seed_g2()
    elif tag == "custom":
        if coxeter_matrix is None:
            raise UnsupportedType("custom data require an explicit Coxeter matrix")
        matrix = coxeter_matrix
        seed_builder = lambda m: _root_system_seed(m, rank, cap)
    else:
        raise UnsupportedType(f"unknown type tag {type_tag!r}")
    if coxeter_matrix is not None and tag != "custom":
        if _validate_matrix(coxeter_matrix, rank) != _validate_matrix(matrix, rank):
            raise ValueError(
                f"explicit Coxeter matrix contradicts type {type_tag!r}"
            )
    matrix = _validate_matrix(matrix, rank)
    weights_t = _validate_weights(weights, matrix, rank)
    seed = seed_builder(matrix)
    return CoxeterDatum(tag, rank, matrix, weights_t, cap, seed)


def datum_from_json_dict(data: dict, cap: int = DEFAULT_GROUP_CAP) -> CoxeterDatum:
    return build_datum(
        data["type"],
        int(data["rank"]),
        [int(w) for w in data["weights"]],
        coxeter_matrix=data.get("coxeterMatrix"),
        cap=cap,
    )
