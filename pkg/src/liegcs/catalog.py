"""Registry of the low-dimensional solvable Lie algebra families with
their verified example structures and cross-cutting consistency checks.

Each entry carries exact structure constants (expression strings in the
family parameters), constraint predicates with default rational samples,
classification flags with their literature sources, and per-row data:
the (b1, b3) pair of the cotangent algebra plus, for each type in
{0, 1, 2}, either nothing or a partially quoted action that this module
completes to a full verified matrix.

Completion rule: a quoted action e_a -> c e_b (or a mixed/dual variant)
forces the three companion directions through the pairing-compatibility
and involution constraints; a two-action quote therefore determines all
of an 8 x 8 matrix.  Every completed matrix is gate-kept by the full
verifier at every default sample.
"""

from __future__ import annotations

import json
import pathlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Set, Tuple

from .linalg import Matrix
from .lie import (LieAlgebra, cotangent, characteristic_subspaces, quotient,
                  validate_algebra)
from .poly import Polynomial, parse_expr, ExprError
from .gcs import GCSCandidate, verify
from .cohomology import betti, betti_vector, CEComplex

F = Fraction

CONVENTION = "Xi=(e_{i-1},0); X_{i+m}=(0,a^{i-1})"


class CatalogError(ValueError):
    pass


class ConstraintError(CatalogError):
    pass


Action = Tuple[int, Dict[int, str]]  # source index -> {target index: coeff expr}


@dataclass
class TableRow:
    """One row of the summary table: a parameter region of an entry with
    its cotangent Betti pair and the example structures per type."""
    label: str
    samples: List[Dict[str, Fraction]]
    b1: Optional[int] = None
    b3: Optional[int] = None
    cells: Dict[int, List[Action]] = field(default_factory=dict)
    extra_types: Set[int] = field(default_factory=set)
    in_table: bool = True

    @property
    def types_present(self) -> Set[int]:
        return set(self.cells) | self.extra_types

    @property
    def has_gcs(self) -> bool:
        return bool(self.types_present)


@dataclass
class CatalogEntry:
    name: str
    dim: int
    brackets: Dict[Tuple[int, int], Dict[int, str]]
    params: List[str] = field(default_factory=list)
    constraint_note: str = ""
    constraint: Optional[Callable[[Dict[str, Fraction]], bool]] = None
    nonzero: List[str] = field(default_factory=list)
    completely_solvable: bool = True
    has_complex: bool = False
    has_symplectic: bool = False
    complex_source: str = ""
    symplectic_source: str = ""
    rows: List[TableRow] = field(default_factory=list)

    def check_params(self, params: Mapping[str, Fraction]) -> Dict[str, Fraction]:
        vals = {}
        for p in self.params:
            if p not in params:
                raise ConstraintError(f"{self.name}: missing parameter {p}")
            vals[p] = Fraction(params[p])
        extra = set(params) - set(self.params)
        if extra:
            raise ConstraintError(f"{self.name}: unknown parameters {sorted(extra)}")
        if self.constraint and not self.constraint(vals):
            raise ConstraintError(
                f"{self.name}: parameters {vals} violate constraints "
                f"({self.constraint_note})")
        return vals

    def instantiate(self, params: Mapping[str, Fraction] | None = None) -> LieAlgebra:
        vals = self.check_params(params or {})
        table = {}
        for (i, j), coeffs in self.brackets.items():
            table[(i, j)] = {k: _as_fraction(expr, vals, self.params)
                             for k, expr in coeffs.items()}
        return LieAlgebra(self.dim, table, name=self.name)

    def symbolic(self) -> LieAlgebra:
        """Structure constants as polynomials in the declared parameters."""
        table = {}
        for (i, j), coeffs in self.brackets.items():
            table[(i, j)] = {
                k: parse_expr(expr, params=None, allowed=self.params)
                for k, expr in coeffs.items()}
        return LieAlgebra(self.dim, table, name=self.name, validate=False)

    def default_samples(self) -> List[Dict[str, Fraction]]:
        out = []
        for row in self.rows:
            for s in row.samples:
                if s not in out:
                    out.append(s)
        if not out:
            out = [{}]
        return out

    def structure(self, type_k: int, row: TableRow,
                  params: Mapping[str, Fraction] | None = None) -> GCSCandidate:
        if type_k not in row.cells:
            raise CatalogError(f"{self.name} [{row.label}]: no stored type-{type_k} structure")
        vals = self.check_params(params or {})
        return complete_structure(self.dim, row.cells[type_k], vals, self.params)


def _as_fraction(expr: str, vals: Mapping[str, Fraction], allowed: Sequence[str]) -> Fraction:
    v = parse_expr(expr, params=vals, allowed=allowed)
    if isinstance(v, Polynomial):
        raise ExprError(f"expression {expr!r} did not evaluate to a rational")
    return v


# ---------------------------------------------------------------------------
# structure completion from quoted actions
# ---------------------------------------------------------------------------

def complete_structure(m: int, actions: Sequence[Action],
                       params: Mapping[str, Fraction],
                       allowed: Sequence[str]) -> GCSCandidate:
    """Build the full 2m x 2m matrix from quoted actions.

    Fully specified lists (2m actions) are assembled directly.  Partial
    quotes must be single-term actions; each one determines its whole
    4-direction group (source, target, and their pairing partners) from
    the involution and pairing-compatibility constraints, and the groups
    of distinct actions must not overlap.
    """
    n = 2 * m
    cols: Dict[int, Dict[int, Fraction]] = {}

    def set_col(src: int, image: Dict[int, Fraction]):
        if src in cols:
            raise CatalogError(f"conflicting completion at basis index {src}")
        cols[src] = image

    inst_actions = []
    for src, image in actions:
        inst = {dst: _as_fraction(expr, params, allowed) for dst, expr in image.items()}
        inst_actions.append((src, {d: c for d, c in inst.items() if c}))

    if len(inst_actions) == n:
        for src, image in inst_actions:
            set_col(src, image)
    else:
        for src, image in inst_actions:
            if len(image) != 1:
                raise CatalogError("partial quotes must be single-term actions")
            (dst, c), = image.items()
            for s, img in _expand_group(m, src, dst, c):
                set_col(s, img)
        if set(cols) != set(range(n)):
            missing = sorted(set(range(n)) - set(cols))
            raise CatalogError(f"completion leaves directions {missing} unassigned")

    M = Matrix.zero(n, n)
    for src, image in cols.items():
        for dst, c in image.items():
            M.data[dst][src] = c
    return GCSCandidate(m, M)


def _expand_group(m: int, src: int, dst: int, c: Fraction):
    """The four column assignments forced by one single-term action."""
    if src == dst or not c:
        raise CatalogError("degenerate quoted action")
    s_vec, s_idx = (src < m), src % m
    d_vec, d_idx = (dst < m), dst % m
    a, b = s_idx, d_idx
    if s_vec and d_vec:
        # e_a -> c e_b
        return [(a, {b: c}), (b, {a: -1 / c}),
                (m + a, {m + b: 1 / c}), (m + b, {m + a: -c})]
    if s_vec and not d_vec:
        if a == b:
            raise CatalogError("action e_a -> alpha^a is incompatible with the pairing")
        # e_a -> c alpha^b
        return [(a, {m + b: c}), (b, {m + a: -c}),
                (m + b, {a: -1 / c}), (m + a, {b: 1 / c})]
    if not s_vec and d_vec:
        if a == b:
            raise CatalogError("action alpha^a -> e_a is incompatible with the pairing")
        # alpha^a -> c e_b  <=>  e_b -> -(1/c) alpha^a
        return _expand_group(m, b, m + a, -1 / c)
    # alpha^a -> c alpha^b  <=>  e_a -> (1/c) e_b
    return _expand_group(m, a, b, 1 / c)


# ---------------------------------------------------------------------------
# registry data
# ---------------------------------------------------------------------------

def _e(i):
    return i


def _al(i):
    # dual direction of e_i in a dim-4 entry
    return 4 + i


def _cell4(*acts) -> List[Action]:
    """Actions as ((src, dst, coeff_expr), ...) over dim-4 indices."""
    return [(src, {dst: expr}) for src, dst, expr in acts]


_REGISTRY: Dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry):
    if entry.name in _REGISTRY:
        raise CatalogError(f"duplicate entry {entry.name}")
    _REGISTRY[entry.name] = entry


def _build_registry():
    one = "1"

    # -- families without generalized complex structures ------------------
    _register(CatalogEntry(
        name="R x r3", dim=4,
        brackets={(1, 2): {2: one}, (1, 3): {2: one, 3: one}},
        rows=[TableRow("R x r3", [{}], b1=3, b3=5)]))

    _register(CatalogEntry(
        name="R x r3,lambda", dim=4,
        brackets={(1, 2): {2: one}, (1, 3): {3: "l"}},
        params=["l"], constraint_note="|l| < 1, l != 0",
        constraint=lambda v: -1 < v["l"] < 1 and v["l"] != 0,
        nonzero=["l", "l - 1", "l + 1"],
        rows=[TableRow("R x r3,lambda (|l|<1, l!=0)",
                       [{"l": F(1, 2)}, {"l": F(-1, 2)}], b1=3, b3=5)]))

    _register(CatalogEntry(
        name="r4", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {1: one, 2: one}, (0, 3): {2: one, 3: one}},
        rows=[TableRow("r4", [{}], b1=1, b3=2)]))

    _register(CatalogEntry(
        name="r4,lambda", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {2: "l"}, (0, 3): {2: one, 3: "l"}},
        params=["l"], constraint_note="l != -1, 0, 1",
        constraint=lambda v: v["l"] not in (F(-1), F(0), F(1)),
        nonzero=["l", "l - 1", "l + 1"],
        rows=[TableRow("r4,lambda (l != -1,0,1)",
                       [{"l": F(1, 3)}, {"l": F(2)}], b1=1, b3=2)]))

    _register(CatalogEntry(
        name="r4,mu,lambda", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {2: "mu"}, (0, 3): {3: "l"}},
        params=["mu", "l"],
        constraint_note="-1 < mu < l < 1, mu*l != 0, mu + l != 0",
        constraint=lambda v: (-1 < v["mu"] < v["l"] < 1
                              and v["mu"] * v["l"] != 0 and v["mu"] + v["l"] != 0),
        nonzero=["mu", "l", "mu - 1", "mu + 1", "l - 1", "l + 1",
                 "mu + l", "mu - l"],
        rows=[TableRow("r4,mu,lambda (-1<mu<l<1, mu*l!=0, mu+l!=0)",
                       [{"mu": F(-1, 2), "l": F(1, 3)},
                        {"mu": F(1, 4), "l": F(1, 2)}], b1=1, b3=2)]))

    # -- families with symplectic or complex structures --------------------
    _register(CatalogEntry(
        name="aff(R) x aff(R)", dim=4,
        brackets={(0, 1): {1: one}, (2, 3): {3: one}},
        has_complex=True, has_symplectic=True,
        complex_source="SJ, O1", symplectic_source="MR",
        rows=[TableRow("aff(R) x aff(R)", [{}], b1=2, b3=2, cells={
            0: _cell4((0, _al(1), one), (2, _al(3), one)),
            1: _cell4((0, _al(1), one), (2, 3, one)),
            2: _cell4((0, 1, one), (2, 3, one)),
        })]))

    _register(CatalogEntry(
        name="aff(C)", dim=4,
        brackets={(0, 2): {2: one}, (0, 3): {3: one},
                  (1, 2): {3: one}, (1, 3): {2: "-1"}},
        completely_solvable=False,
        has_complex=True, has_symplectic=True,
        complex_source="SJ, O1", symplectic_source="MR",
        rows=[TableRow("aff(C)", [{}], b1=2, b3=2, cells={
            0: _cell4((0, _al(3), one), (1, _al(2), one)),
            1: _cell4((0, _al(1), one), (2, 3, one)),
            2: _cell4((0, 3, one), (1, 2, "-1")),
        })]))

    _register(CatalogEntry(
        name="R x h3", dim=4,
        brackets={(1, 2): {3: one}},
        has_complex=True, has_symplectic=True,
        complex_source="SJ, O1", symplectic_source="MR",
        rows=[TableRow("R x h3", [{}], b1=5, b3=31, cells={
            0: _cell4((0, _al(2), one), (1, _al(3), one)),
            1: _cell4((0, 1, one), (2, _al(3), one)),
            2: _cell4((1, 2, one), (3, 0, one)),
        })]))

    _register(CatalogEntry(
        name="R x r3,-1", dim=4,
        brackets={(1, 2): {2: one}, (1, 3): {3: "-1"}},
        has_symplectic=True, symplectic_source="MR",
        rows=[TableRow("R x r3,-1", [{}], b1=3, b3=13, cells={
            0: _cell4((0, _al(1), one), (2, _al(3), one)),
            1: _cell4((0, 1, one), (2, _al(3), one)),
        })]))

    _register(CatalogEntry(
        name="R x r3,0", dim=4,
        brackets={(1, 2): {2: one}},
        has_complex=True, has_symplectic=True,
        complex_source="SJ, O1", symplectic_source="MR",
        rows=[TableRow("R x r3,0", [{}], b1=5, b3=11, cells={
            0: _cell4((0, _al(3), one), (1, _al(2), one)),
            1: _cell4((0, _al(3), one), (1, 2, one)),
            2: _cell4((0, 3, one), (1, 2, one)),
        })]))

    _register(CatalogEntry(
        name="R x r3,1", dim=4,
        brackets={(1, 2): {2: one}, (1, 3): {3: one}},
        has_complex=True, complex_source="SJ, O1",
        rows=[TableRow("R x r3,1", [{}], b1=3, b3=13, cells={
            1: _cell4((0, _al(1), one), (2, 3, one)),
            2: _cell4((0, 1, one), (2, 3, one)),
        })]))

    _register(CatalogEntry(
        name="r4,-1", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {2: "-1"}, (0, 3): {2: one, 3: "-1"}},
        has_symplectic=True, symplectic_source="MR",
        rows=[TableRow("r4,-1", [{}], b1=1, b3=4, cells={
            0: _cell4((0, _al(2), one), (1, _al(3), one)),
            1: _cell4((0, 3, one), (1, _al(2), one)),
        })]))

    _register(CatalogEntry(
        name="r4,0", dim=4,
        brackets={(0, 1): {1: one}, (0, 3): {2: one}},
        has_symplectic=True, symplectic_source="MR",
        rows=[TableRow("r4,0", [{}], b1=3, b3=7, cells={
            0: _cell4((0, _al(1), one), (2, _al(3), one)),
            1: _cell4((0, 1, one), (2, _al(3), one)),
        })]))

    _register(CatalogEntry(
        name="r4,1", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {2: one}, (0, 3): {2: one, 3: one}},
        has_complex=True, complex_source="SJ, O1",
        rows=[TableRow("r4,1", [{}], b1=1, b3=4, cells={
            1: _cell4((0, _al(2), one), (1, 3, one)),
            2: _cell4((0, 3, one), (1, 2, one)),
        })]))

    _register(CatalogEntry(
        name="r4,mu,1", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {2: "mu"}, (0, 3): {3: one}},
        params=["mu"], constraint_note="-1 < mu <= 1, mu != 0",
        constraint=lambda v: -1 < v["mu"] <= 1 and v["mu"] != 0,
        nonzero=["mu", "mu + 1"],
        has_complex=True, complex_source="SJ, O1",
        rows=[TableRow("r4,mu,1 (-1<mu<=1, mu!=0)",
                       [{"mu": F(1, 2)}, {"mu": F(-1, 2)}], b1=1, b3=4, cells={
            1: _cell4((0, _al(2), one), (1, 3, one)),
            2: _cell4((0, 2, one), (1, 3, one)),
        })]))

    _register(CatalogEntry(
        name="r4,mu,mu", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {2: "mu"}, (0, 3): {3: "mu"}},
        params=["mu"], constraint_note="-1 < mu < 1, mu != 0",
        constraint=lambda v: -1 < v["mu"] < 1 and v["mu"] != 0,
        nonzero=["mu", "mu - 1", "mu + 1"],
        has_complex=True, complex_source="SJ, O1",
        rows=[TableRow("r4,mu,mu (-1<mu<1, mu!=0)",
                       [{"mu": F(1, 3)}, {"mu": F(-2, 3)}], b1=1, b3=4, cells={
            1: _cell4((0, _al(1), one), (2, 3, one)),
            2: _cell4((0, 1, one), (2, 3, one)),
        })]))

    _register(CatalogEntry(
        name="r4,mu,-mu", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {2: "mu"}, (0, 3): {3: "-mu"}},
        params=["mu"], constraint_note="-1 < mu < 0",
        constraint=lambda v: -1 < v["mu"] < 0,
        nonzero=["mu", "mu - 1", "mu + 1"],
        has_symplectic=True, symplectic_source="MR",
        rows=[TableRow("r4,mu,-mu (-1<mu<0)",
                       [{"mu": F(-1, 2)}, {"mu": F(-1, 3)}],
                       cells={1: _cell4((0, 1, one), (2, _al(3), one))},
                       extra_types={0}, in_table=False)]))

    _register(CatalogEntry(
        name="r4,-1,lambda", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {2: "-1"}, (0, 3): {3: "l"}},
        params=["l"], constraint_note="-1 < l < 0",
        constraint=lambda v: -1 < v["l"] < 0,
        nonzero=["l", "l - 1", "l + 1"],
        has_symplectic=True, symplectic_source="MR",
        rows=[TableRow("r4,-1,lambda (-1<l<0)",
                       [{"l": F(-1, 2)}, {"l": F(-1, 3)}], b1=1, b3=4, cells={
            0: _cell4((0, _al(3), one), (1, _al(2), one)),
            1: _cell4((0, 3, one), (1, _al(2), one)),
        })]))

    _register(CatalogEntry(
        name="r4,-1,-1", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {2: "-1"}, (0, 3): {3: "-1"}},
        has_complex=True, has_symplectic=True,
        complex_source="SJ, O1", symplectic_source="MR",
        rows=[TableRow("r4,-1,-1", [{}], b1=1, b3=8, cells={
            0: _cell4((0, _al(3), one), (1, _al(2), one)),
            1: _cell4((0, _al(1), one), (2, 3, one)),
            2: _cell4((0, 1, one), (2, 3, one)),
        })]))

    _register(CatalogEntry(
        name="R x e(2)", dim=4,
        brackets={(1, 2): {3: "-1"}, (1, 3): {2: one}},
        completely_solvable=False,
        has_complex=True, has_symplectic=True,
        complex_source="SJ, O1", symplectic_source="MR",
        rows=[TableRow("R x r'3,0", [{}], b1=3, b3=13, cells={
            0: _cell4((1, _al(0), one), (2, _al(3), one)),
            1: _cell4((1, _al(0), one), (2, 3, one)),
            2: _cell4((1, 0, one), (2, 3, one)),
        })]))

    _register(CatalogEntry(
        name="R x r'3,lambda", dim=4,
        brackets={(1, 2): {2: "l", 3: "-1"}, (1, 3): {2: one, 3: "l"}},
        params=["l"], constraint_note="l > 0",
        constraint=lambda v: v["l"] > 0,
        nonzero=["l"],
        completely_solvable=False,
        has_complex=True, complex_source="SJ, O1",
        rows=[TableRow("R x r'3,lambda (l>0)",
                       [{"l": F(1)}, {"l": F(2)}], b1=3, b3=5, cells={
            1: _cell4((1, _al(0), one), (2, 3, one)),
            2: _cell4((1, 0, one), (2, 3, one)),
        })]))

    _register(CatalogEntry(
        name="n4", dim=4,
        brackets={(0, 1): {2: one}, (0, 2): {3: one}},
        has_symplectic=True, symplectic_source="MR",
        rows=[TableRow("n4", [{}], b1=3, b3=14, cells={
            0: _cell4((0, _al(3), one), (1, _al(2), one)),
            1: _cell4((0, 1, one), (2, _al(3), one)),
        })]))

    _register(CatalogEntry(
        name="r'4,mu,lambda", dim=4,
        brackets={(0, 1): {1: "mu"}, (0, 2): {2: "l", 3: "-1"},
                  (0, 3): {2: one, 3: "l"}},
        params=["mu", "l"], constraint_note="mu > 0",
        constraint=lambda v: v["mu"] > 0,
        nonzero=["mu"],
        completely_solvable=False,
        has_complex=True, has_symplectic=True,
        complex_source="SJ, O1", symplectic_source="MR",
        rows=[
            TableRow("r'4,mu,0 (mu>0)",
                     [{"mu": F(1), "l": F(0)}, {"mu": F(2), "l": F(0)}],
                     b1=1, b3=4, cells={
                0: _cell4((0, _al(1), one), (2, _al(3), one)),
                1: _cell4((0, 1, one), (2, _al(3), one)),
                2: _cell4((0, 1, one), (2, 3, one)),
            }),
            TableRow("r'4,mu,lambda (mu>0, l!=0)",
                     [{"mu": F(1), "l": F(1)}, {"mu": F(1), "l": F(-1)}],
                     b1=1, b3=2, cells={
                1: _cell4((0, _al(1), one), (2, 3, one)),
                2: _cell4((0, 1, one), (2, 3, one)),
            }),
        ]))

    _register(CatalogEntry(
        name="h4", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {1: one, 2: one},
                  (0, 3): {3: "2"}, (1, 2): {3: one}},
        has_complex=True, has_symplectic=True,
        complex_source="SJ, O1", symplectic_source="MR",
        rows=[TableRow("h4", [{}], b1=1, b3=1, cells={
            0: _cell4((0, _al(3), "2"), (1, _al(2), one)),
            2: _cell4((0, 2, one), (1, 3, one)),
        })]))

    _register(CatalogEntry(
        name="d4", dim=4,
        brackets={(0, 1): {1: one}, (0, 2): {2: "-1"}, (1, 2): {3: one}},
        has_complex=True, complex_source="SJ, O1",
        rows=[TableRow("d4", [{}], b1=2, b3=4, cells={
            2: _cell4((0, 1, one), (3, 2, one)),
        })]))

    _register(CatalogEntry(
        name="d4,lambda", dim=4,
        brackets={(0, 1): {1: "l"}, (0, 2): {2: "1 - l"}, (0, 3): {3: one},
                  (1, 2): {3: one}},
        params=["l"], constraint_note="l >= 1/2",
        constraint=lambda v: v["l"] >= F(1, 2),
        nonzero=["l"],
        has_complex=True, has_symplectic=True,
        complex_source="SJ, O1", symplectic_source="MR",
        rows=[
            TableRow("d4,lambda (l>1/2, l!=1,2)",
                     [{"l": F(3, 4)}, {"l": F(3)}], b1=1, b3=1, cells={
                0: _cell4((0, _al(3), one), (1, _al(2), one)),
                2: _cell4((0, 1, "l"), (2, 3, "-1")),
            }),
            TableRow("d4,1", [{"l": F(1)}], b1=2, b3=4, cells={
                0: _cell4((0, _al(3), one), (1, _al(2), one)),
                2: _cell4((0, 1, one), (2, 3, "-1")),
            }),
            TableRow("d4,1/2", [{"l": F(1, 2)}], b1=1, b3=3, cells={
                0: _cell4((0, _al(3), one), (1, _al(2), one)),
                1: _cell4((0, _al(3), one), (1, 2, one)),
                2: _cell4((0, 2, "1/2"), (1, 3, one)),
            }),
            TableRow("d4,2", [{"l": F(2)}], b1=1, b3=3, cells={
                0: _cell4((0, _al(3), one), (1, _al(2), one)),
                1: _cell4((0, 1, one), (2, _al(3), one)),
                2: _cell4((0, 1, one), (2, 3, "-1/2")),
            }),
        ]))

    _register(CatalogEntry(
        name="d'4,lambda", dim=4,
        brackets={(0, 1): {1: "l", 2: "-1"}, (0, 2): {1: one, 2: "l"},
                  (0, 3): {3: "2*l"}, (1, 2): {3: one}},
        params=["l"], constraint_note="l >= 0",
        constraint=lambda v: v["l"] >= 0,
        nonzero=[],
        completely_solvable=False,
        has_complex=True, has_symplectic=True,
        complex_source="SJ, O1", symplectic_source="MR",
        rows=[
            TableRow("d'4,0", [{"l": F(0)}], b1=2, b3=4, cells={
                1: _cell4((0, _al(3), one), (1, 2, one)),
                2: _cell4((0, 3, one), (1, 2, one)),
            }),
            TableRow("d'4,lambda (l>0)",
                     [{"l": F(1)}, {"l": F(1, 2)}], b1=1, b3=1, cells={
                0: _cell4((0, _al(3), "2*l"), (1, _al(2), one)),
                1: _cell4((0, _al(3), one), (1, 2, one)),
                2: _cell4((0, 3, one), (1, 2, one)),
            }),
        ]))

    # -- extras outside the dim-4 summary table -----------------------------
    _register(CatalogEntry(
        name="aff(R)", dim=2,
        brackets={(0, 1): {1: one}},
        has_complex=True, has_symplectic=True,
        complex_source="SJ, O1", symplectic_source="MR",
        rows=[TableRow("aff(R)", [{}], cells={
            0: [(0, {3: "1"})],
            1: [(0, {1: "-1"})],
        }, in_table=False)]))

    _register(CatalogEntry(
        name="g6", dim=6,
        brackets={(0, 1): {4: "-1"}, (0, 4): {4: "-mu", 5: "-1"},
                  (2, 3): {5: "-1"}},
        params=["mu"], constraint_note="mu != 0",
        constraint=lambda v: v["mu"] != 0,
        nonzero=["mu"],
        rows=[TableRow("g6 (mu != 0)", [{"mu": F(1)}, {"mu": F(-2)}],
                       in_table=False, cells={
            1: [
                (0, {11: "1"}), (1, {10: "1", 11: "-mu"}),
                (2, {3: "1"}), (3, {2: "-1"}),
                (4, {7: "-1"}), (5, {6: "-1", 7: "mu"}),
                (6, {4: "mu", 5: "1"}), (7, {4: "1"}),
                (8, {9: "1"}), (9, {8: "-1"}),
                (10, {0: "-mu", 1: "-1"}), (11, {0: "-1"}),
            ],
            2: [
                (0, {1: "1"}), (1, {0: "-1"}),
                (2, {3: "1"}), (3, {2: "-1"}),
                (4, {0: "-mu", 11: "-1"}), (5, {10: "1"}),
                (6, {7: "1", 10: "mu"}), (7, {6: "-1", 5: "mu"}),
                (8, {9: "1"}), (9, {8: "-1"}),
                (10, {5: "-1"}), (11, {1: "-mu", 4: "1"}),
            ],
        })]))


_build_registry()


def names() -> List[str]:
    return list(_REGISTRY)


def entry(name: str) -> CatalogEntry:
    if name not in _REGISTRY:
        raise CatalogError(f"unknown algebra {name!r}; see `list` for names")
    return _REGISTRY[name]


def get(name: str, params: Mapping[str, Fraction] | None = None) -> LieAlgebra:
    return entry(name).instantiate(params)


def table_rows() -> List[Tuple[CatalogEntry, TableRow]]:
    return [(e, r) for e in _REGISTRY.values() for r in e.rows if r.in_table]


def all_rows() -> List[Tuple[CatalogEntry, TableRow]]:
    return [(e, r) for e in _REGISTRY.values() for r in e.rows]


# ---------------------------------------------------------------------------
# cross-cutting reports
# ---------------------------------------------------------------------------

def table1_report() -> dict:
    """Recompute every summary-table row: the Betti pair of the cotangent
    algebra and the verification of every stored structure at every
    sample."""
    rows = []
    agree = True
    for e, row in table_rows():
        for sample in row.samples:
            L = e.instantiate(sample)
            T = cotangent(L).total
            b1, b3 = betti(T, 1), betti(T, 3)
            b_ok = (b1 == row.b1 and b3 == row.b3)
            cells = {}
            for k in sorted(row.cells):
                J = e.structure(k, row, sample)
                rep = verify(L, J)
                cells[k] = bool(rep.passed and rep.type_k == k)
            ok = b_ok and all(cells.values())
            agree = agree and ok
            rows.append({
                "entry": e.name, "row": row.label,
                "params": {p: str(v) for p, v in sample.items()},
                "b1": b1, "b3": b3,
                "b1_expected": row.b1, "b3_expected": row.b3,
                "betti_match": b_ok,
                "cells_verified": cells,
                "types_absent": sorted({0, 1, 2} - row.types_present),
                "agree": ok,
            })
    return {"rows": rows, "all_agree": agree}


def structures_report() -> dict:
    """Verification of every stored structure (including the entries
    outside the summary table) at every sample."""
    rows = []
    all_ok = True
    count = 0
    for e, row in all_rows():
        for sample in row.samples:
            L = e.instantiate(sample)
            ct = cotangent(L)
            for k in sorted(row.cells):
                J = e.structure(k, row, sample)
                rep = verify(L, J, ct=ct)
                restricts = _restricts_to_quote(e, row, k, sample, J)
                ok = bool(rep.passed and rep.type_k == k and restricts)
                all_ok = all_ok and ok
                count += 1
                rows.append({
                    "entry": e.name, "row": row.label, "type": k,
                    "params": {p: str(v) for p, v in sample.items()},
                    "verified": rep.passed, "computed_type": rep.type_k,
                    "restricts_to_quote": restricts, "ok": ok,
                })
    return {"rows": rows, "all_ok": all_ok, "checked": count}


def _restricts_to_quote(e: CatalogEntry, row: TableRow, k: int,
                        sample: Dict[str, Fraction], J: GCSCandidate) -> bool:
    """The completed matrix reproduces the quoted partial action."""
    for src, image in row.cells[k]:
        col = J.matrix.column(src)
        expected = [F(0)] * (2 * e.dim)
        for dst, expr in image.items():
            expected[dst] = _as_fraction(expr, sample, e.params)
        if col != expected:
            return False
    return True


def _condition_iii(e: CatalogEntry, row: TableRow, sample: Dict[str, Fraction],
                   interpretation: str) -> bool:
    if not e.completely_solvable:
        return False
    L = e.instantiate(sample)
    T = cotangent(L).total
    b1, b3 = betti(T, 1), betti(T, 3)
    if (b1, b3) == (1, 2):
        return True
    if (b1, b3) == (3, 5):
        subs = characteristic_subspaces(L)
        Q = quotient(L, subs[interpretation])
        return betti(Q, 1) == 1
    return False


def theorem_main_check(interpretation: Optional[str] = None) -> dict:
    """Equivalence of `no structure exists` with the Betti-number
    condition over the four-dimensional entries.

    The ambiguous subspace in the condition is resolved by trying both
    readings (centralizer of the derived algebra in the full algebra vs.
    the center of the derived algebra) and reporting the one with zero
    mismatches across all completely solvable entries.
    """
    readings = ([interpretation] if interpretation
                else ["centralizer_of_derived", "center_of_derived"])
    results = {}
    for reading in readings:
        rows = []
        mismatches = 0
        for e, row in all_rows():
            if e.dim != 4:
                continue
            for sample in row.samples:
                cond = _condition_iii(e, row, sample, reading)
                no_gcs = not row.has_gcs
                ok = (cond == no_gcs)
                if not ok:
                    mismatches += 1
                rows.append({
                    "entry": e.name, "row": row.label,
                    "params": {p: str(v) for p, v in sample.items()},
                    "completely_solvable": e.completely_solvable,
                    "condition_iii": cond, "no_gcs": no_gcs,
                    "match": ok,
                })
        results[reading] = {"rows": rows, "mismatches": mismatches}
    if interpretation:
        chosen = interpretation
    else:
        zero = [r for r in results if results[r]["mismatches"] == 0]
        chosen = zero[0] if zero else min(results, key=lambda r: results[r]["mismatches"])
    return {
        "interpretation": chosen,
        "mismatches": results[chosen]["mismatches"],
        "rows": results[chosen]["rows"],
        "mismatches_by_interpretation": {r: results[r]["mismatches"] for r in results},
    }


def corollary_type1_check() -> dict:
    """Across entries that admit some structure: absence of a type-1
    structure is equivalent to complete solvability together with the
    Betti pair being (1,1) or (2,4)."""
    rows = []
    mismatches = 0
    for e, row in all_rows():
        if e.dim != 4 or not row.has_gcs:
            continue
        for sample in row.samples:
            L = e.instantiate(sample)
            T = cotangent(L).total
            b1, b3 = betti(T, 1), betti(T, 3)
            cond = e.completely_solvable and ((b1 == 1 and b3 == 1)
                                              or (b1 == 2 and b3 == 4))
            no_type1 = 1 not in row.types_present
            ok = (cond == no_type1)
            if not ok:
                mismatches += 1
            rows.append({
                "entry": e.name, "row": row.label,
                "params": {p: str(v) for p, v in sample.items()},
                "completely_solvable": e.completely_solvable,
                "b1": b1, "b3": b3,
                "condition": cond, "no_type1": no_type1, "match": ok,
            })
    return {"rows": rows, "mismatches": mismatches}


# ---------------------------------------------------------------------------
# complete solvability evidence (exact real-root counting)
# ---------------------------------------------------------------------------

def _char_poly_coeffs(A: Matrix) -> List[Fraction]:
    """Coefficients of det(t I - A), ascending, by expansion over the
    polynomial ring."""
    n = A.rows
    t = Polynomial.var("t")
    M = Matrix([[t * (1 if i == j else 0) - A.data[i][j] for j in range(n)]
                for i in range(n)])
    p = _poly_det(M)
    coeffs = [F(0)] * (n + 1)
    for mono, c in p.terms.items():
        deg = dict(mono).get("t", 0)
        coeffs[deg] += c
    return coeffs


def _poly_det(M: Matrix) -> Polynomial:
    n = M.rows
    if n == 0:
        return Polynomial.constant(1)
    if n == 1:
        return Polynomial.of(M.data[0][0])
    acc = Polynomial()
    for j in range(n):
        a = Polynomial.of(M.data[0][j])
        if a.is_zero():
            continue
        sub = Matrix([[M.data[i][c] for c in range(n) if c != j]
                      for i in range(1, n)])
        term = a * _poly_det(sub)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _poly_divmod(a: List[Fraction], b: List[Fraction]):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    b = list(b)
    while b and not b[-1]:
        b.pop()
    if not b:
        raise ZeroDivisionError
    q = [F(0)] * max(0, len(a) - len(b) + 1)
    r = a
    while r and len(r) >= len(b):
        f = r[-1] / b[-1]
        d = len(r) - len(b)
        q[d] = f
        r = [c - f * b[i - d] if 0 <= i - d < len(b) else c
             for i, c in enumerate(r)]
        while r and not r[-1]:
            r.pop()
    return q, r


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while b and any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return a


def _deriv(a: List[Fraction]) -> List[Fraction]:
    return [c * i for i, c in enumerate(a)][1:]


def _sign_changes(seq: List[int]) -> int:
    seq = [s for s in seq if s]
    return sum(1 for x, y in zip(seq, seq[1:]) if x * y < 0)


def count_real_roots(coeffs: List[Fraction]) -> Tuple[int, int]:
    """(distinct real roots, degree of squarefree part) by Sturm chains."""
    p = list(coeffs)
    while p and not p[-1]:
        p.pop()
    if len(p) <= 1:
        return 0, 0
    g = _poly_gcd(p, _deriv(p))
    if len(g) > 1:
        p, _ = _poly_divmod(p, g)
    deg = len(p) - 1
    chain = [p, _deriv(p)]
    while chain[-1] and any(chain[-1]):
        _, r = _poly_divmod(chain[-2], chain[-1])
        r = [-c for c in r]
        if not any(r):
            break
        chain.append(r)
    def sign_at_inf(q, positive):
        if not q or not any(q):
            return 0
        lead = q[-1]
        s = 1 if lead > 0 else -1
        if not positive and (len(q) - 1) % 2 == 1:
            s = -s
        return s
    v_neg = _sign_changes([sign_at_inf(q, False) for q in chain])
    v_pos = _sign_changes([sign_at_inf(q, True) for q in chain])
    return v_neg - v_pos, deg


def completely_solvable_evidence(L: LieAlgebra, seed: int = 20230517,
                                 combos: int = 20) -> dict:
    """All-real-eigenvalue evidence: exact real-root counts of the
    characteristic polynomial of ad(x) for every basis vector and for
    deterministic random rational combinations."""
    rng = random.Random(seed)
    samples = []
    for i in range(L.dim):
        v = [F(0)] * L.dim
        v[i] = F(1)
        samples.append((f"e{i}", v))
    for c in range(combos):
        v = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(L.dim)]
        samples.append((f"combo{c}", v))
    verdicts = []
    all_real = True
    for label, v in samples:
        coeffs = _char_poly_coeffs(L.ad(v))
        roots, deg = count_real_roots(coeffs)
        ok = (roots == deg)
        all_real = all_real and ok
        verdicts.append({"sample": label, "all_real": ok})
    return {"all_real": all_real, "samples": verdicts}


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def export(directory: str) -> List[str]:
    """Write every entry as an algebra JSON file plus one structure JSON
    file per stored example and sample; returns the written paths."""
    out = pathlib.Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    def slug(s: str) -> str:
        keep = []
        for ch in s.lower():
            keep.append(ch if ch.isalnum() else "_")
        t = "".join(keep)
        while "__" in t:
            t = t.replace("__", "_")
        return t.strip("_")

    for e in _REGISTRY.values():
        adoc = {
            "name": e.name,
            "dim": e.dim,
            "params": {p: e.constraint_note for p in e.params},
            "brackets": [
                {"i": i, "j": j, "coeffs": {str(k): expr for k, expr in coeffs.items()}}
                for (i, j), coeffs in sorted(e.brackets.items())],
        }
        path = out / f"{slug(e.name)}.algebra.json"
        path.write_text(json.dumps(adoc, indent=1))
        written.append(str(path))
        for row in e.rows:
            for k in sorted(row.cells):
                for si, sample in enumerate(row.samples):
                    J = e.structure(k, row, sample)
                    sdoc = {
                        "algebra": e.name,
                        "params": {p: str(v) for p, v in sample.items()},
                        "matrix": [[str(x) for x in rw] for rw in J.matrix.tolist()],
                        "convention": CONVENTION,
                        "claimed_type": k,
                    }
                    path = out / f"{slug(e.name)}_type{k}_s{si}.structure.json"
                    path.write_text(json.dumps(sdoc, indent=1))
                    written.append(str(path))
    return written
