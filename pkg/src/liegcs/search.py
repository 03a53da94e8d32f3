"""Floating-point feasibility search for generalized complex structures,
with exact certification by rational reconstruction.

The candidate is parameterized by the free variables of the generic
pairing-compatible shape (so compatibility holds by construction) and the
objective is the sum of squared involution and Nijenhuis residuals; both
are quadratic in the variables, so the gradient is closed form.  Gradient
descent with backtracking line search runs from deterministically seeded
random restarts; any point below the success threshold is handed to a
continued-fraction reconstruction and then to the exact verifier.  Floats
never appear in verdicts: only exactly verified structures are reported
as certified, and negative outcomes are evidence, not proof.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .linalg import Matrix
from .lie import LieAlgebra, cotangent, CotangentAlgebra
from .poly import Polynomial
from .gcs import (GCSCandidate, orthogonal_shape, nijenhuis,
                  symbolic_involution, verify, gcs_type)


@dataclass
class SearchConfig:
    restarts: int = 200
    max_iters: int = 500
    master_seed: int = 0
    success_residual: float = 1e-10
    type_constraint: Optional[int] = None

    def worker_seed(self, restart: int) -> int:
        digest = hashlib.sha256(f"{self.master_seed}:{restart}".encode()).digest()
        return int.from_bytes(digest[:8], "big")


@dataclass
class SearchReport:
    best_residual: float
    best_point: List[float]
    best_restart: int
    certified: Optional[GCSCandidate]
    certified_type: Optional[int]
    history: List[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "best_residual": self.best_residual,
            "best_point": [repr(x) for x in self.best_point],
            "best_restart": self.best_restart,
            "history": [repr(x) for x in self.history],
            "certified": None,
        }
        if self.certified is not None:
            out["certified"] = {
                "matrix": [[str(Fraction(v)) for v in row]
                           for row in self.certified.matrix.tolist()],
                "type": self.certified_type,
            }
        return out


class _CompiledResiduals:
    """Quadratic residual system r(a) = c + G a + (a^T H_t a)_t compiled
    to numpy arrays from the symbolic polynomials."""

    def __init__(self, polys: Sequence[Polynomial], names: Sequence[str]):
        index = {nm: i for i, nm in enumerate(names)}
        n, T = len(names), len(polys)
        self.n, self.T = n, T
        self.c = np.zeros(T)
        self.G = np.zeros((T, n))
        self.H = np.zeros((T, n, n))
        for t, p in enumerate(polys):
            for mono, coef in p.terms.items():
                fc = float(coef)
                degree = sum(e for _, e in mono)
                if degree == 0:
                    self.c[t] += fc
                elif degree == 1:
                    (nm, _), = mono
                    self.G[t, index[nm]] += fc
                elif degree == 2:
                    if len(mono) == 1:
                        (nm, _), = mono
                        u = v = index[nm]
                        self.H[t, u, v] += fc
                    else:
                        (n1, _), (n2, _) = mono
                        u, v = index[n1], index[n2]
                        self.H[t, u, v] += fc / 2.0
                        self.H[t, v, u] += fc / 2.0
                else:
                    raise ValueError("residuals must be quadratic")

    def value_and_grad(self, a: np.ndarray) -> Tuple[float, np.ndarray]:
        Ha = self.H @ a                      # (T, n)
        r = self.c + self.G @ a + Ha @ a     # (T,)
        grad = 2.0 * (self.G.T @ r) + 4.0 * (r[:, None] * Ha).sum(axis=0)
        return float(r @ r), grad

    def value(self, a: np.ndarray) -> float:
        r = self.c + self.G @ a + (self.H @ a) @ a
        return float(r @ r)


def residual_system(ct: CotangentAlgebra) -> Tuple[List[Polynomial], List[str], Matrix]:
    """All involution and Nijenhuis residual polynomials over the free
    variables of the generic shape on the given cotangent algebra."""
    m = ct.base.dim
    shape, names = orthogonal_shape(m)
    polys: List[Polynomial] = list(symbolic_involution(shape).values())
    polys.extend(nijenhuis(ct.total, shape).values())
    return polys, names, shape


class _ShapeMap:
    """Positions of each free variable inside the generic matrix."""

    def __init__(self, shape: Matrix, names: Sequence[str]):
        self.names = list(names)
        self.order = shape.rows
        occ: Dict[str, List[Tuple[int, int, float]]] = {nm: [] for nm in names}
        for i in range(shape.rows):
            for j in range(shape.cols):
                p = shape.data[i][j]
                if isinstance(p, Polynomial) and p.terms:
                    (mono, coef), = p.terms.items()
                    (nm, _), = mono
                    occ[nm].append((i, j, float(coef)))
        self.occurrences = occ
        m = self.order // 2
        self.j2_positions = {}
        for idx, nm in enumerate(names):
            for (i, j, s) in occ[nm]:
                if i < m and j >= m:
                    self.j2_positions.setdefault(idx, []).append((i, j - m, s))

    def matrix_float(self, a: np.ndarray) -> np.ndarray:
        M = np.zeros((self.order, self.order))
        for idx, nm in enumerate(self.names):
            for (i, j, s) in self.occurrences[nm]:
                M[i, j] = s * a[idx]
        return M

    def j2_float(self, a: np.ndarray) -> np.ndarray:
        return self.matrix_float(a)[: self.order // 2, self.order // 2:]

    def matrix_exact(self, fracs: Sequence[Fraction]) -> Matrix:
        M = Matrix.zero(self.order, self.order)
        for idx, nm in enumerate(self.names):
            for (i, j, s) in self.occurrences[nm]:
                M.data[i][j] = Fraction(int(s)) * fracs[idx]
        return M

    def j2_grad_to_vars(self, dJ2: np.ndarray) -> np.ndarray:
        g = np.zeros(len(self.names))
        for idx, positions in self.j2_positions.items():
            for (i, j, s) in positions:
                g[idx] += s * dJ2[i, j]
        return g


class _RankTerms:
    """Penalty pushing rank(J2) down to the target and a barrier
    rewarding the target-order minors, with cofactor gradients."""

    def __init__(self, smap: _ShapeMap, target_rank: int,
                 weight: float = 10.0, beta: float = 0.1, eps: float = 1e-2):
        self.smap = smap
        self.m = smap.order // 2
        self.kill_order = target_rank + 2
        self.keep_order = target_rank
        self.weight = weight
        self.beta = beta
        self.eps = eps

    @staticmethod
    def _minors_sq(J2: np.ndarray, order: int):
        """(sum of squared minors, gradient wrt J2 entries)."""
        m = J2.shape[0]
        total = 0.0
        grad = np.zeros_like(J2)
        if order <= 0:
            return 1.0, grad
        if order > m:
            return 0.0, grad
        for rows in itertools.combinations(range(m), order):
            for cols in itertools.combinations(range(m), order):
                sub = J2[np.ix_(rows, cols)]
                d = float(np.linalg.det(sub))
                total += d * d
                if d:
                    cof = _cofactor_matrix(sub)
                    for ri, rr in enumerate(rows):
                        for ci, cc in enumerate(cols):
                            grad[rr, cc] += 2.0 * d * cof[ri, ci]
        return total, grad

    def value_and_grad(self, a: np.ndarray) -> Tuple[float, np.ndarray]:
        J2 = self.smap.j2_float(a)
        val = 0.0
        dJ2 = np.zeros_like(J2)
        if self.kill_order <= self.m:
            pen, dpen = self._minors_sq(J2, self.kill_order)
            val += self.weight * pen
            dJ2 += self.weight * dpen
        if 0 < self.keep_order <= self.m:
            ssq, dssq = self._minors_sq(J2, self.keep_order)
            denom = self.eps + ssq
            val += self.beta / denom
            dJ2 += (-self.beta / denom ** 2) * dssq
        return val, self.smap.j2_grad_to_vars(dJ2)


def _cofactor_matrix(M: np.ndarray) -> np.ndarray:
    n = M.shape[0]
    if n == 1:
        return np.ones((1, 1))
    cof = np.zeros_like(M)
    for i in range(n):
        for j in range(n):
            sub = np.delete(np.delete(M, i, axis=0), j, axis=1)
            cof[i, j] = ((-1) ** (i + j)) * float(np.linalg.det(sub))
    return cof


def _descend(compiled: _CompiledResiduals, rank_terms: Optional[_RankTerms],
             a0: np.ndarray, max_iters: int) -> Tuple[np.ndarray, float]:
    a = a0.copy()

    def objective(x):
        f, g = compiled.value_and_grad(x)
        if rank_terms is not None:
            fr, gr = rank_terms.value_and_grad(x)
            f, g = f + fr, g + gr
        return f, g

    f, g = objective(a)
    for _ in range(max_iters):
        gn2 = float(g @ g)
        if gn2 < 1e-24 or f < 1e-26:
            break
        step = 1.0
        improved = False
        for _ in range(40):
            cand = a - step * g
            fc, gc = objective(cand)
            if fc <= f - 1e-4 * step * gn2:
                a, f, g = cand, fc, gc
                improved = True
                break
            step *= 0.5
        if not improved:
            break
    return a, compiled.value(a)


def _reconstruction_candidates(floats: Sequence[float], max_den: int):
    """Distinct best rational approximation tuples with denominator
    bounds increasing from 1 to max_den."""
    per_component = []
    for x in floats:
        fr = Fraction(x)
        cands = {}
        for b in range(1, max_den + 1):
            approx = fr.limit_denominator(b)
            if approx.denominator not in cands:
                cands[approx.denominator] = approx
        per_component.append(cands)
    bounds = sorted({d for cands in per_component for d in cands})
    prev = None
    for b in bounds:
        tup = tuple(
            cands[max(d for d in cands if d <= b)]
            for cands in per_component)
        if tup != prev:
            prev = tup
            yield b, tup


def _try_certify(L: LieAlgebra, ct: CotangentAlgebra, smap: _ShapeMap,
                 a: np.ndarray, type_constraint: Optional[int],
                 max_den: int = 10 ** 4) -> Tuple[Optional[GCSCandidate], Optional[int]]:
    n = ct.total.dim
    ident = Matrix.identity(n)
    for _, fracs in _reconstruction_candidates([float(x) for x in a], max_den):
        M = smap.matrix_exact(fracs)
        if not (M * M + ident).is_zero():
            continue
        if nijenhuis(ct.total, M):
            continue
        J = GCSCandidate(ct.base.dim, M)
        rep = verify(L, J, ct=ct)
        if not rep.passed:
            continue
        k = rep.type_k
        if type_constraint is not None and k != type_constraint:
            continue
        return J, k
    return None, None


def find_gcs(L: LieAlgebra, cfg: SearchConfig) -> SearchReport:
    """Random-restart descent on the involution + integrability residual;
    certifies exactly when a point lands below the success threshold."""
    if L.dim % 2 != 0:
        raise ValueError("search requires an even-dimensional algebra")
    ct = cotangent(L)
    polys, names, shape = residual_system(ct)
    compiled = _CompiledResiduals(polys, names)
    smap = _ShapeMap(shape, names)
    rank_terms = None
    if cfg.type_constraint is not None:
        k = cfg.type_constraint
        if not 0 <= k <= L.dim // 2:
            raise ValueError(f"type constraint {k} out of range")
        target_rank = 2 * (L.dim // 2 - k)
        rank_terms = _RankTerms(smap, target_rank)

    best = (np.inf, None, -1)
    history: List[float] = []
    certified: Optional[GCSCandidate] = None
    certified_type: Optional[int] = None
    for restart in range(cfg.restarts):
        rng = np.random.default_rng(cfg.worker_seed(restart))
        a0 = rng.uniform(-1.5, 1.5, size=compiled.n)
        a, f = _descend(compiled, rank_terms, a0, cfg.max_iters)
        history.append(f)
        if f < best[0]:
            best = (f, a, restart)
        if certified is None and f < cfg.success_residual:
            certified, certified_type = _try_certify(
                L, ct, smap, a, cfg.type_constraint)
            if certified is not None:
                best = (f, a, restart)
                break
    f, a, restart = best
    return SearchReport(
        best_residual=f,
        best_point=[float(x) for x in (a if a is not None else np.zeros(compiled.n))],
        best_restart=restart,
        certified=certified,
        certified_type=certified_type,
        history=history,
    )


def find_gcs_of_type(L: LieAlgebra, k: int, cfg: SearchConfig) -> SearchReport:
    cfg2 = SearchConfig(restarts=cfg.restarts, max_iters=cfg.max_iters,
                        master_seed=cfg.master_seed,
                        success_residual=cfg.success_residual,
                        type_constraint=k)
    return find_gcs(L, cfg2)
