"""Chevalley-Eilenberg cohomology with trivial coefficients and the
closed-2-form / symplectic obstruction analysis.

k-forms are expanded in the lexicographically ordered wedge basis of
Lambda^k g*.  The differential extends d(alpha)(x,y) = -alpha([x,y]) as
an antiderivation, so d(alpha^k) = - sum_{i<j} c^k_{ij} alpha^i ^ alpha^j
in terms of structure constants.  Betti numbers come from exact ranks.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple

from .linalg import Matrix, pfaffian
from .lie import LieAlgebra
from .poly import Polynomial


def _wedge_basis(m: int, k: int) -> List[Tuple[int, ...]]:
    return list(itertools.combinations(range(m), k))


def _insert_index(tup: Tuple[int, ...], extra_pair: Tuple[int, int]):
    """Sort (i, j, rest...) into increasing order, tracking the sign; None
    when an index repeats."""
    out = []
    sign = 1
    for x in extra_pair + tup:
        pos = len(out)
        for p, y in enumerate(out):
            if x == y:
                return None, 0
            if x < y:
                pos = p
                break
        sign *= (-1) ** (len(out) - pos)
        out.insert(pos, x)
    return tuple(out), sign


class CEComplex:
    """All differentials of the Chevalley-Eilenberg complex of an algebra;
    d_{k+1} d_k = 0 is asserted on construction."""

    def __init__(self, L: LieAlgebra, check: bool = True):
        self.algebra = L
        self.differentials = [ce_differential(L, k) for k in range(L.dim + 1)]
        if check:
            for k in range(L.dim):
                dnext, dk = self.differentials[k + 1], self.differentials[k]
                if dnext.rows == 0:
                    continue
                if not (dnext * dk).is_zero():
                    raise AssertionError(f"d^2 != 0 between degrees {k} and {k + 1}")

    def betti(self, k: int) -> int:
        return betti(self.algebra, k, complex_=self)


def ce_differential(L: LieAlgebra, k: int) -> Matrix:
    """Matrix of d : Lambda^k g* -> Lambda^{k+1} g* in lex wedge bases."""
    m = L.dim
    if not 0 <= k <= m:
        raise ValueError(f"degree {k} out of range 0..{m}")
    dom = _wedge_basis(m, k)
    cod = _wedge_basis(m, k + 1) if k < m else []
    cod_index = {t: r for r, t in enumerate(cod)}
    D = Matrix.zero(len(cod), len(dom))
    if k == 0 or k == m:
        return D
    # d(alpha^t) = - sum_{i<j} c^t_{ij} alpha^i ^ alpha^j
    d1: Dict[int, Dict[Tuple[int, int], object]] = {}
    for (i, j), coeffs in L.brackets.items():
        for t, c in coeffs.items():
            d1.setdefault(t, {})[(i, j)] = -c
    for col, mono in enumerate(dom):
        for pos, t in enumerate(mono):
            rest = mono[:pos] + mono[pos + 1:]
            for (i, j), c in d1.get(t, {}).items():
                sorted_mono, sgn = _insert_index(rest, (i, j))
                if sorted_mono is None:
                    continue
                row = cod_index[sorted_mono]
                D.data[row][col] = D.data[row][col] + ((-1) ** pos) * sgn * c
    return D


def betti(L: LieAlgebra, k: int, complex_: Optional[CEComplex] = None) -> int:
    """b_k = C(m, k) - rank(d_k) - rank(d_{k-1}), exactly."""
    m = L.dim
    if not 0 <= k <= m:
        raise ValueError(f"degree {k} out of range 0..{m}")
    dk = complex_.differentials[k] if complex_ else ce_differential(L, k)
    rk = dk.rank()
    rk_prev = 0
    if k > 0:
        dprev = complex_.differentials[k - 1] if complex_ else ce_differential(L, k - 1)
        rk_prev = dprev.rank()
    return comb(m, k) - rk - rk_prev


def betti_vector(L: LieAlgebra) -> List[int]:
    cx = CEComplex(L, check=False)
    return [betti(L, k, complex_=cx) for k in range(L.dim + 1)]


def two_form_to_vector(L: LieAlgebra, w: Matrix) -> list:
    m = L.dim
    return [w.data[i][j] for (i, j) in _wedge_basis(m, 2)]


def vector_to_two_form(L: LieAlgebra, v: list) -> Matrix:
    m = L.dim
    W = Matrix.zero(m, m)
    for (i, j), c in zip(_wedge_basis(m, 2), v):
        W.data[i][j] = c
        W.data[j][i] = -c
    return W


def two_form_is_closed(L: LieAlgebra, w: Matrix) -> bool:
    d2 = ce_differential(L, 2)
    if d2.rows == 0:
        return True
    return not any(d2.apply(two_form_to_vector(L, w)))


def closed_two_forms(L: LieAlgebra) -> List[Matrix]:
    """Exact kernel basis of d on Lambda^2 g*, as skew matrices."""
    d2 = ce_differential(L, 2)
    return [vector_to_two_form(L, v) for v in d2.kernel_basis()]


class ObstructionVerdict:
    """Either a closed nondegenerate witness form or a proof that every
    closed 2-form is degenerate (identically vanishing Pfaffian)."""

    def __init__(self, closed_dim: int, witness: Optional[Matrix],
                 pfaffian_value, pfaffian_poly: Polynomial):
        self.closed_two_form_dim = closed_dim
        self.witness = witness
        self.pfaffian_value = pfaffian_value
        self.pfaffian_poly = pfaffian_poly

    @property
    def obstructed(self) -> bool:
        return self.witness is None

    def to_dict(self) -> dict:
        out = {"closed_two_form_dim": self.closed_two_form_dim,
               "outcome": "obstructed" if self.obstructed else "witness"}
        if self.witness is not None:
            out["witness"] = [[str(Fraction(x)) for x in row]
                              for row in self.witness.tolist()]
            out["pfaffian"] = str(Fraction(self.pfaffian_value))
        return out


def _coefficient_sweep(nvars: int, radius: int):
    """Deterministic spiral: tuples ordered by max-abs radius, then lex."""
    for r in range(radius + 1):
        for tup in itertools.product(range(-r, r + 1), repeat=nvars):
            if r == 0 or max(abs(t) for t in tup) == r:
                yield tup


def symplectic_obstruction(L: LieAlgebra, max_radius: int = 10) -> ObstructionVerdict:
    """Pfaffian analysis of the generic closed 2-form.

    Forms the generic combination sum c_i w_i over fresh variables,
    computes its Pfaffian as a polynomial, and either reports it
    identically zero or returns the first nondegenerate rational point of
    a deterministic integer sweep.  A grid wider than the Pfaffian degree
    must contain a nonzero point, so the sweep always terminates early.
    """
    m = L.dim
    if m % 2 != 0:
        raise ValueError("even dimension required")
    basis = closed_two_forms(L)
    d = len(basis)
    generic = Matrix.zero(m, m).map(lambda _: Polynomial())
    for idx, w in enumerate(basis):
        cv = Polynomial.var(f"c{idx + 1}")
        for i in range(m):
            for j in range(m):
                if w.data[i][j]:
                    generic.data[i][j] = generic.data[i][j] + cv * w.data[i][j]
    pf = Polynomial.of(pfaffian(generic)) if d else Polynomial()
    if pf.is_zero():
        return ObstructionVerdict(d, None, None, pf)
    names = [f"c{idx + 1}" for idx in range(d)]
    for tup in _coefficient_sweep(d, max_radius):
        val = pf.eval_full({nm: Fraction(t) for nm, t in zip(names, tup)})
        if val:
            W = Matrix.zero(m, m)
            for w, t in zip(basis, tup):
                if t:
                    W = W + w.scale(Fraction(t))
            return ObstructionVerdict(d, W, val, pf)
    raise AssertionError("nonzero Pfaffian but no witness in sweep "
                         f"radius {max_radius}; widen the sweep")
