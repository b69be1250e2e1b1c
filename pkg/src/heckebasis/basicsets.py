"""Canonical basic sets from labeled decomposition matrices.

A labeled decomposition matrix carries nonnegative integer entries, row
labels with attached a-invariants (plus optional class labels and
d-invariants), and column labels. The canonical basic set of such a
matrix, when it exists, is the injective map iota sending each column mu
to the unique row of minimal a-invariant among the rows with a nonzero
entry in column mu; that entry must be 1, and every other nonzero entry
of the column must sit on a row of strictly larger a-invariant.

Also here: the pinned 6-row decomposition tables of the two-parameter
dihedral algebra of order 12 with weights (3, 1), the factorization
check D = D_e * D' together with the induced column correspondence
beta, closed-form catalogs of basic-set labels for the families where
a closed form is known, and two report-style verifiers (unitriangular
shape over partition labels; block-triangular shape by class and
d-invariant).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .partitions import (
    dominates,
    is_e_regular,
    list_bipartitions,
    list_partitions,
    n_invariant,
    parse_partition,
    render_bipartition,
    render_partition,
)

__all__ = [
    "DecompRow",
    "LabeledDecompMatrix",
    "BasicSet",
    "NoCanonicalSet",
    "ProductMismatch",
    "BetaNotUnique",
    "BasicSetsDiffer",
    "NotCatalogued",
    "canonical_basic_set",
    "g2_decomposition_table",
    "G2_EXPECTED_BASIC_SETS",
    "beta_factorization",
    "FactorizationReport",
    "basic_set_catalog",
    "verify_unitriangular",
    "TriangularReport",
    "verify_conjecture_shape",
    "ShapeReport",
    "ShapeViolation",
    "TriangularViolation",
]


class NoCanonicalSet(Exception):
    """The matrix admits no canonical basic set.

    reason is one of "tie" (the minimal a-invariant in the column is
    achieved by more than one nonzero row), "multiplicityNotOne" (the
    unique minimizing row carries an entry other than 1), or
    "secondConditionViolated" (a nonzero entry breaks the requirement
    that every non-image row have strictly larger a-invariant, or two
    columns share an image row)."""

    def __init__(self, column: str, reason: str, detail: str = ""):
        self.column = column
        self.reason = reason
        msg = f"column {column!r}: {reason}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ProductMismatch(Exception):
    """Full matrix does not equal the claimed product."""


class BetaNotUnique(Exception):
    """The column correspondence is not well defined for some column."""


class BasicSetsDiffer(Exception):
    """The two basic sets do not agree under the column correspondence."""


class NotCatalogued(Exception):
    """No closed-form catalog is implemented for these parameters.

    An explicit signal, not a failure."""


@dataclass(frozen=True)
class DecompRow:
    label: str
    a_invariant: int
    class_label: str | None = None
    d_invariant: int | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"label": self.label, "a": self.a_invariant}
        if self.class_label is not None:
            out["class"] = self.class_label
        if self.d_invariant is not None:
            out["d"] = self.d_invariant
        return out

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "DecompRow":
        return cls(
            label=str(data["label"]),
            a_invariant=int(data["a"]),
            class_label=(
                str(data["class"]) if data.get("class") is not None else None
            ),
            d_invariant=(
                int(data["d"]) if data.get("d") is not None else None
            ),
        )


class LabeledDecompMatrix:
    """Immutable nonnegative integer matrix with labeled rows and columns.

    Every column must contain at least one nonzero entry; rows must have
    distinct labels, as must columns."""

    def __init__(
        self,
        rows: Sequence[DecompRow],
        cols: Sequence[str],
        entries: Sequence[Sequence[int]],
    ):
        self.rows = tuple(rows)
        self.cols = tuple(str(c) for c in cols)
        if len(set(r.label for r in self.rows)) != len(self.rows):
            raise ValueError("duplicate row labels")
        if len(set(self.cols)) != len(self.cols):
            raise ValueError("duplicate column labels")
        if len(entries) != len(self.rows):
            raise ValueError(
                f"{len(self.rows)} rows but {len(entries)} entry rows"
            )
        grid = []
        for r, row in enumerate(entries):
            if len(row) != len(self.cols):
                raise ValueError(
                    f"entry row {r} has {len(row)} entries, "
                    f"expected {len(self.cols)}"
                )
            vals = tuple(int(x) for x in row)
            if any(x < 0 for x in vals):
                raise ValueError(f"negative entry in row {r}")
            grid.append(vals)
        self.entries = tuple(grid)
        for j in range(len(self.cols)):
            if all(row[j] == 0 for row in self.entries):
                raise ValueError(f"column {self.cols[j]!r} is identically zero")
        self._row_index = {r.label: i for i, r in enumerate(self.rows)}
        self._col_index = {c: j for j, c in enumerate(self.cols)}

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.cols)

    def entry(self, row_label: str, col_label: str) -> int:
        return self.entries[self._row_index[row_label]][
            self._col_index[col_label]
        ]

    def row_labels(self) -> tuple[str, ...]:
        return tuple(r.label for r in self.rows)

    def a_invariants(self) -> tuple[int, ...]:
        return tuple(r.a_invariant for r in self.rows)

    def to_json_dict(self) -> dict:
        return {
            "rows": [r.to_json_dict() for r in self.rows],
            "cols": list(self.cols),
            "entries": [list(row) for row in self.entries],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LabeledDecompMatrix":
        return cls(
            rows=[DecompRow.from_json_dict(r) for r in data["rows"]],
            cols=[str(c) for c in data["cols"]],
            entries=data["entries"],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledDecompMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return (
            f"LabeledDecompMatrix({self.n_rows} rows x {self.n_cols} cols)"
        )


@dataclass(frozen=True)
class BasicSet:
    """Injective column -> row assignment; image() is the basic set."""

    iota: tuple[tuple[str, str], ...]  # (column label, row label) pairs

    def as_dict(self) -> dict[str, str]:
        return dict(self.iota)

    def image(self) -> frozenset[str]:
        return frozenset(row for _, row in self.iota)

    def to_json_dict(self) -> dict:
        return {
            "iota": {col: row for col, row in self.iota},
            "image": sorted(self.image()),
        }


def canonical_basic_set(matrix: LabeledDecompMatrix) -> BasicSet:
    """Extract the canonical basic set, or raise NoCanonicalSet.

    Per column mu: among rows with a nonzero entry, the minimal
    a-invariant must be achieved exactly once, by an entry equal to 1;
    the map collecting these rows must be injective, and all other
    nonzero entries must sit strictly above the minimum."""
    assignments: list[tuple[str, str]] = []
    prime_a: dict[str, int] = {}
    for j, col in enumerate(matrix.cols):
        support = [
            (row.a_invariant, row.label, matrix.entries[i][j])
            for i, row in enumerate(matrix.rows)
            if matrix.entries[i][j] != 0
        ]
        min_a = min(a for a, _, _ in support)
        winners = [(lab, d) for a, lab, d in support if a == min_a]
        if len(winners) > 1:
            raise NoCanonicalSet(
                col,
                "tie",
                f"rows {[lab for lab, _ in winners]} all have a = {min_a}",
            )
        label, entry = winners[0]
        if entry != 1:
            raise NoCanonicalSet(
                col,
                "multiplicityNotOne",
                f"row {label!r} has entry {entry}",
            )
        for a, lab, _ in support:
            if lab != label and a <= min_a:
                raise NoCanonicalSet(
                    col,
                    "secondConditionViolated",
                    f"row {lab!r} has a = {a} <= {min_a}",
                )
        assignments.append((col, label))
        prime_a[col] = min_a
    seen: dict[str, str] = {}
    for col, label in assignments:
        if label in seen:
            raise NoCanonicalSet(
                col,
                "secondConditionViolated",
                f"columns {seen[label]!r} and {col!r} share image row "
                f"{label!r}",
            )
        seen[label] = col
    return BasicSet(iota=tuple(assignments))


# ----- the order-12 dihedral tables, weights (3, 1) --------------------------

_G2_ROWS = (
    ("ind", 0),
    ("eps1", 1),
    ("rho+", 3),
    ("rho-", 3),
    ("eps2", 7),
    ("eps", 12),
)

# entry rows listed in the fixed order ind, eps1, rho+, rho-, eps2, eps
_G2_TABLES: dict[int, tuple[tuple[int, ...], ...]] = {
    2: (
        (1, 0, 0),
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 0, 0),
        (1, 0, 0),
    ),
    3: (
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 1, 1, 0),
        (1, 0, 0, 1),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    ),
    6: (
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 0),
        (1, 0, 0),
        (0, 1, 0),
    ),
    12: (
        (1, 0, 0, 0, 0),
        (0, 1, 0, 0, 0),
        (1, 0, 1, 0, 0),
        (0, 0, 0, 1, 0),
        (0, 0, 0, 0, 1),
        (0, 0, 1, 0, 0),
    ),
}

G2_EXPECTED_BASIC_SETS: dict[int, frozenset[str]] = {
    2: frozenset({"ind", "rho+", "rho-"}),
    3: frozenset({"ind", "eps1", "rho+", "rho-"}),
    6: frozenset({"ind", "eps1", "rho+"}),
    12: frozenset({"ind", "eps1", "rho+", "rho-", "eps2"}),
}


def g2_decomposition_table(e: int) -> LabeledDecompMatrix:
    """Decomposition matrix of the weights-(3,1) dihedral algebra of order
    12 at a primitive e-th root of unity; identity for e outside
    {2, 3, 6, 12}. Columns are labelled positionally c1..ck."""
    if e < 2:
        raise ValueError(f"need e >= 2, got {e}")
    rows = [DecompRow(label, a) for label, a in _G2_ROWS]
    if e in _G2_TABLES:
        entries = _G2_TABLES[e]
    else:
        entries = tuple(
            tuple(1 if i == j else 0 for j in range(6)) for i in range(6)
        )
    cols = [f"c{j + 1}" for j in range(len(entries[0]))]
    return LabeledDecompMatrix(rows, cols, entries)


# ----- factorization through the root-of-unity matrix ------------------------


@dataclass(frozen=True)
class FactorizationReport:
    beta: tuple[tuple[str, str], ...]  # full column -> root column
    full_set: BasicSet
    root_set: BasicSet

    def to_json_dict(self) -> dict:
        return {
            "beta": {c: v for c, v in self.beta},
            "fullBasicSet": self.full_set.to_json_dict(),
            "rootBasicSet": self.root_set.to_json_dict(),
            "setsEqual": self.full_set.image() == self.root_set.image(),
        }


def beta_factorization(
    full: LabeledDecompMatrix,
    root: LabeledDecompMatrix,
    prime: Sequence[Sequence[int]],
) -> FactorizationReport:
    """Check full = root * prime and that the basic sets agree.

    root is the root-of-unity matrix, prime the second factor (supplied,
    never solved for). beta sends each column mu of full to the unique
    column nu of root with root[iota(mu), nu] != 0 and prime[nu, mu] != 0;
    the assignment iota of full must equal the assignment of root
    composed with beta. Raises ProductMismatch, BetaNotUnique, or
    BasicSetsDiffer accordingly; ValueError on malformed inputs."""
    if full.row_labels() != root.row_labels():
        raise ValueError("row labels differ between the two matrices")
    if full.a_invariants() != root.a_invariants():
        raise ValueError("row a-invariants differ between the two matrices")
    if full.n_cols != root.n_cols:
        raise ValueError(
            f"column counts differ: {full.n_cols} vs {root.n_cols}"
        )
    prime_grid = [tuple(int(x) for x in row) for row in prime]
    if len(prime_grid) != root.n_cols or any(
        len(row) != full.n_cols for row in prime_grid
    ):
        raise ValueError(
            f"second factor must be {root.n_cols} x {full.n_cols}"
        )
    if any(x < 0 for row in prime_grid for x in row):
        raise ValueError("second factor has a negative entry")

    for i in range(full.n_rows):
        for j in range(full.n_cols):
            got = sum(
                root.entries[i][k] * prime_grid[k][j]
                for k in range(root.n_cols)
            )
            if got != full.entries[i][j]:
                raise ProductMismatch(
                    f"entry ({full.rows[i].label!r}, {full.cols[j]!r}): "
                    f"product gives {got}, matrix has {full.entries[i][j]}"
                )

    full_set = canonical_basic_set(full)
    root_set = canonical_basic_set(root)
    iota = full_set.as_dict()
    iota_root = root_set.as_dict()

    beta: list[tuple[str, str]] = []
    for j, mu in enumerate(full.cols):
        i = full._row_index[iota[mu]]
        hits = [
            nu
            for k, nu in enumerate(root.cols)
            if root.entries[i][k] != 0 and prime_grid[k][j] != 0
        ]
        if len(hits) != 1:
            raise BetaNotUnique(
                f"column {mu!r}: candidate root columns {hits}"
            )
        beta.append((mu, hits[0]))

    for mu, nu in beta:
        if iota_root[nu] != iota[mu]:
            raise BasicSetsDiffer(
                f"column {mu!r}: assignment {iota[mu]!r} but the "
                f"root-of-unity assignment of {nu!r} is {iota_root[nu]!r}"
            )
    if full_set.image() != root_set.image():
        raise BasicSetsDiffer(
            f"images differ: {sorted(full_set.image())} vs "
            f"{sorted(root_set.image())}"
        )
    return FactorizationReport(
        beta=tuple(beta), full_set=full_set, root_set=root_set
    )


# ----- closed-form catalogs ---------------------------------------------------


def basic_set_catalog(
    type_tag: str, params: Mapping, e: int
) -> frozenset[str]:
    """Closed-form basic-set labels for the catalogued families.

    "g2" with weights (3, 1): the four pinned sets for e in {2, 3, 6, 12},
    all six labels otherwise. "a" with params {"n": n}: the e-regular
    partitions of n. "b" with params {"m": m, "s": s} (unitary weights
    (2s+1, 2, ..., 2)): the bipartitions of m with both components
    e-regular, available when e is odd > 2 or divisible by 4; e = 2 and
    e twice an odd number raise NotCatalogued (closed forms live in the
    literature: [GeJa Thm 3.4] and [FLOTW] respectively)."""
    if e < 2:
        raise ValueError(f"need e >= 2, got {e}")
    tag = type_tag.lower()
    if tag == "g2":
        weights = tuple(params.get("weights", (3, 1)))
        if weights != (3, 1):
            raise NotCatalogued(
                f"no catalogued basic sets for dihedral weights {weights}; "
                "only (3, 1) is tabulated"
            )
        if e in G2_EXPECTED_BASIC_SETS:
            return G2_EXPECTED_BASIC_SETS[e]
        return frozenset(label for label, _ in _G2_ROWS)
    if tag == "a":
        n = int(params["n"])
        return frozenset(
            render_partition(p)
            for p in list_partitions(n)
            if is_e_regular(p, e)
        )
    if tag == "b":
        m = int(params["m"])
        s = int(params["s"])
        if s not in (0, 1):
            raise ValueError(f"s must be 0 or 1, got {s}")
        if e == 2:
            raise NotCatalogued(
                "e = 2 has no closed form here; see [GeJa Thm 3.4]"
            )
        if e % 4 == 2:
            raise NotCatalogued(
                f"e = {e} is twice an odd number and has no closed form "
                "here; see [FLOTW]"
            )
        # remaining cases: e odd > 2, or e divisible by 4
        return frozenset(
            render_bipartition(b)
            for b in list_bipartitions(m)
            if is_e_regular(b[0], e) and is_e_regular(b[1], e)
        )
    raise ValueError(f"unknown type {type_tag!r}")


# ----- report-style verifiers -------------------------------------------------


@dataclass(frozen=True)
class TriangularViolation:
    row_label: str
    col_label: str
    entry: int
    phrasing: str  # "diagonal" | "dominance" | "nInvariant"
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "row": self.row_label,
            "col": self.col_label,
            "entry": self.entry,
            "phrasing": self.phrasing,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class TriangularReport:
    dominance_ok: bool
    n_ok: bool
    violations: tuple[TriangularViolation, ...]

    @property
    def ok(self) -> bool:
        return self.dominance_ok and self.n_ok

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "dominanceOk": self.dominance_ok,
            "nInvariantOk": self.n_ok,
            "violations": [v.to_json_dict() for v in self.violations],
        }


def verify_unitriangular(matrix: LabeledDecompMatrix) -> TriangularReport:
    """Check the unitriangular shape of a square matrix over partition
    labels, in both phrasings: entry(lam, mu) is 0 unless lam is dominated
    by mu (with 1 on the diagonal), and is 0 unless n(mu) < n(lam) or
    lam = mu. A pass of the dominance phrasing forces a pass of the
    n-invariant phrasing; that implication is asserted."""
    labels = matrix.row_labels()
    if labels != matrix.cols:
        raise ValueError("rows and columns must carry the same label list")
    parts = [parse_partition(lab) for lab in labels]
    sizes = {sum(p) for p in parts}
    if len(sizes) > 1:
        raise ValueError(f"labels are partitions of different sizes: {sizes}")

    violations: list[TriangularViolation] = []
    dominance_ok = n_ok = True
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            d = matrix.entries[i][j]
            if i == j:
                if d != 1:
                    dominance_ok = n_ok = False
                    violations.append(
                        TriangularViolation(
                            labels[i], labels[j], d, "diagonal",
                            f"diagonal entry is {d}, not 1",
                        )
                    )
                continue
            if d == 0:
                continue
            if not dominates(lam, mu):
                dominance_ok = False
                violations.append(
                    TriangularViolation(
                        labels[i], labels[j], d, "dominance",
                        f"{labels[i]} is not dominated by {labels[j]}",
                    )
                )
            if not n_invariant(mu) < n_invariant(lam):
                n_ok = False
                violations.append(
                    TriangularViolation(
                        labels[i], labels[j], d, "nInvariant",
                        f"n({labels[j]}) = {n_invariant(mu)} is not below "
                        f"n({labels[i]}) = {n_invariant(lam)}",
                    )
                )
    # dominance monotonicity: a strict dominance pass forces an n pass
    assert n_ok or not dominance_ok
    return TriangularReport(
        dominance_ok=dominance_ok,
        n_ok=n_ok,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class ShapeViolation:
    row_label: str
    col_label: str
    entry: int
    reason: str  # "aboveDiagonal" | "diagonalNotIdentity" | "structure"
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "row": self.row_label,
            "col": self.col_label,
            "entry": self.entry,
            "reason": self.reason,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class ShapeReport:
    ok: bool
    blocks: tuple[dict, ...]  # {"class","d","rows","cols"} in block order
    violations: tuple[ShapeViolation, ...]

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "blocks": [dict(b) for b in self.blocks],
            "violations": [v.to_json_dict() for v in self.violations],
        }


def verify_conjecture_shape(matrix: LabeledDecompMatrix) -> ShapeReport:
    """Check block-triangular shape by class label and d-invariant.

    Rows are grouped by class label (each class must carry one
    d-invariant); blocks are ordered by increasing d-invariant, breaking
    ties by first appearance, and consume columns sequentially. The
    diagonal blocks must be identity matrices, and an off-block entry is
    allowed only when the row's d-invariant strictly exceeds the
    column's."""
    for row in matrix.rows:
        if row.class_label is None or row.d_invariant is None:
            raise ValueError(
                f"row {row.label!r} is missing a class label or d-invariant"
            )
    if matrix.n_rows != matrix.n_cols:
        raise ValueError(
            f"matrix must be square, got {matrix.n_rows} x {matrix.n_cols}"
        )

    order: list[str] = []
    members: dict[str, list[int]] = {}
    d_of: dict[str, int] = {}
    violations: list[ShapeViolation] = []
    for i, row in enumerate(matrix.rows):
        c = row.class_label
        if c not in members:
            order.append(c)
            members[c] = []
            d_of[c] = row.d_invariant
        elif d_of[c] != row.d_invariant:
            raise ValueError(
                f"class {c!r} carries d-invariants {d_of[c]} and "
                f"{row.d_invariant}"
            )
        members[c].append(i)
    blocks = sorted(order, key=lambda c: (d_of[c], order.index(c)))

    col_block: dict[int, str] = {}
    col_pos: dict[int, int] = {}  # position of the column within its block
    cursor = 0
    block_info: list[dict] = []
    for c in blocks:
        size = len(members[c])
        cols = list(range(cursor, cursor + size))
        for pos, j in enumerate(cols):
            col_block[j] = c
            col_pos[j] = pos
        block_info.append(
            {
                "class": c,
                "d": d_of[c],
                "rows": [matrix.rows[i].label for i in members[c]],
                "cols": [matrix.cols[j] for j in cols],
            }
        )
        cursor += size

    for i, row in enumerate(matrix.rows):
        c = row.class_label
        pos_in_block = members[c].index(i)
        for j in range(matrix.n_cols):
            d = matrix.entries[i][j]
            if col_block[j] == c:
                want = 1 if col_pos[j] == pos_in_block else 0
                if d != want:
                    violations.append(
                        ShapeViolation(
                            row.label, matrix.cols[j], d,
                            "diagonalNotIdentity",
                            f"block {c!r} entry is {d}, expected {want}",
                        )
                    )
            elif d != 0 and not d_of[c] > d_of[col_block[j]]:
                violations.append(
                    ShapeViolation(
                        row.label, matrix.cols[j], d, "aboveDiagonal",
                        f"row class {c!r} (d = {d_of[c]}) hits column "
                        f"block {col_block[j]!r} "
                        f"(d = {d_of[col_block[j]]})",
                    )
                )

    return ShapeReport(
        ok=not violations,
        blocks=tuple(block_info),
        violations=tuple(violations),
    )
