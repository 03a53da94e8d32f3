"""Lie algebras over exact scalars: structure constants, structure
equations, semidirect products, the cotangent algebra with its neutral
pairing, and subspace machinery (derived algebra, center, centralizers,
ideals, quotients).

Structure constants live in any exact commutative ring (Fraction for
concrete algebras, Polynomial when family parameters are kept symbolic).
The sign convention tying structure equations to brackets is
d(alpha)(x, y) = -alpha([x, y]).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .linalg import Matrix, GaussianRational

BracketTable = Dict[Tuple[int, int], Dict[int, object]]


class JacobiError(ValueError):
    pass


class LieAlgebra:
    """Finite-dimensional Lie algebra given by structure constants.

    ``brackets`` maps (i, j) with i < j to the coefficient dict of
    [e_i, e_j]; antisymmetry is implicit in the storage.  The Jacobi
    identity is validated on construction unless ``validate=False``.
    """

    def __init__(self, dim: int, brackets: BracketTable, name: str = "",
                 basis_labels: Optional[Sequence[str]] = None, validate: bool = True):
        self.dim = dim
        self.name = name
        self.basis_labels = list(basis_labels) if basis_labels else [f"e{i}" for i in range(dim)]
        if len(self.basis_labels) != dim:
            raise ValueError("basis label count != dim")
        table: BracketTable = {}
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i},{j}) out of range")
            if i == j:
                continue
            if i > j:
                i, j, coeffs = j, i, {k: -c for k, c in coeffs.items()}
            clean = {k: c for k, c in coeffs.items() if c}
            if clean:
                merged = table.setdefault((i, j), {})
                for k, c in clean.items():
                    s = merged.get(k, 0) + c
                    if s:
                        merged[k] = s
                    else:
                        merged.pop(k, None)
                if not merged:
                    table.pop((i, j), None)
        self.brackets = table
        if validate:
            bad = self.jacobi_violations()
            if bad:
                (i, j, k), residual = bad[0]
                raise JacobiError(
                    f"Jacobi identity fails on ({i},{j},{k}): residual {residual}"
                    + (f" and {len(bad) - 1} more" if len(bad) > 1 else ""))

    # -- bracket evaluation ------------------------------------------------
    def bracket_basis(self, i: int, j: int) -> Dict[int, object]:
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, x: Sequence, y: Sequence) -> list:
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out[k] + xi * yj * c
        return out

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ad(x) = [x, .] in the basis (columns = images)."""
        cols = []
        for j in range(self.dim):
            ej = [0] * self.dim
            ej[j] = 1
            cols.append(self.bracket(x, ej))
        return Matrix.from_columns(cols)

    def ad_basis(self, i: int) -> Matrix:
        e = [0] * self.dim
        e[i] = 1
        return self.ad(e)

    def jacobi_violations(self) -> List[Tuple[Tuple[int, int, int], list]]:
        """All basis triples whose Jacobi cyclic sum is nonzero."""
        out = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    acc = [0] * self.dim
                    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.bracket_basis(b, c)
                        for m, cm in inner.items():
                            for n, cn in self.bracket_basis(a, m).items():
                                acc[n] = acc[n] + cm * cn
                    if any(acc):
                        out.append(((i, j, k), acc))
        return out

    def is_abelian(self) -> bool:
        return not self.brackets

    def subs(self, assignment: Mapping[str, Fraction]) -> "LieAlgebra":
        """Substitute parameters in polynomial structure constants."""
        table: BracketTable = {}
        for key, coeffs in self.brackets.items():
            table[key] = {k: _subs_coeff(c, assignment) for k, c in coeffs.items()}
        return LieAlgebra(self.dim, table, name=self.name,
                          basis_labels=self.basis_labels, validate=False)

    def __repr__(self):
        nz = ", ".join(
            f"[{self.basis_labels[i]},{self.basis_labels[j]}]="
            + "+".join(f"{c}*{self.basis_labels[k]}" for k, c in sorted(cs.items()))
            for (i, j), cs in sorted(self.brackets.items()))
        return f"LieAlgebra({self.name or self.dim}, {nz or 'abelian'})"


def _subs_coeff(c, assignment):
    from .poly import Polynomial
    if isinstance(c, Polynomial):
        r = c.subs(assignment)
        return r.constant_value() if r.is_constant() else r
    return c


def abelian(dim: int, name: str = "") -> LieAlgebra:
    return LieAlgebra(dim, {}, name=name or f"abelian{dim}")


def validate_algebra(L: LieAlgebra) -> List[Tuple[Tuple[int, int, int], list]]:
    """Report-style Jacobi check: empty list means valid."""
    return L.jacobi_violations()


# ---------------------------------------------------------------------------
# structure equations  (d alpha^k = sum_{i<j} c_k[i,j] alpha^i ^ alpha^j)
# ---------------------------------------------------------------------------

class StructureEquations:
    """Maurer-Cartan data: for each k, terms (i < j) -> coefficient."""

    def __init__(self, dim: int, terms: Mapping[int, Mapping[Tuple[int, int], object]]):
        self.dim = dim
        self.terms = {k: {ij: c for ij, c in d.items() if c}
                      for k, d in terms.items()}
        self.terms = {k: d for k, d in self.terms.items() if d}

    def __eq__(self, other):
        return (isinstance(other, StructureEquations)
                and self.dim == other.dim and self.terms == other.terms)


def brackets_to_mc(L: LieAlgebra) -> StructureEquations:
    terms: Dict[int, Dict[Tuple[int, int], object]] = {}
    for (i, j), coeffs in L.brackets.items():
        for k, c in coeffs.items():
            terms.setdefault(k, {})[(i, j)] = -c
    return StructureEquations(L.dim, terms)


def mc_to_brackets(S: StructureEquations, name: str = "",
                   basis_labels: Optional[Sequence[str]] = None,
                   validate: bool = True) -> LieAlgebra:
    table: BracketTable = {}
    for k, d in S.terms.items():
        for (i, j), c in d.items():
            if i >= j:
                raise ValueError("structure equation terms need i < j")
            slot = table.setdefault((i, j), {})
            slot[k] = slot.get(k, 0) - c
    return LieAlgebra(S.dim, table, name=name, basis_labels=basis_labels, validate=validate)


def mc_convert(x):
    """Convert between a LieAlgebra and its StructureEquations."""
    if isinstance(x, LieAlgebra):
        return brackets_to_mc(x)
    if isinstance(x, StructureEquations):
        return mc_to_brackets(x)
    raise TypeError(f"cannot convert {type(x)!r}")


# ---------------------------------------------------------------------------
# semidirect products and the cotangent algebra
# ---------------------------------------------------------------------------

class HomomorphismError(ValueError):
    pass


def semidirect(L: LieAlgebra, rho: Mapping[int, Matrix], module_dim: int,
               name: str = "") -> LieAlgebra:
    """Semidirect product of L with an abelian module via rho.

    ``rho`` maps each basis index of L to the matrix of its action.
    Checked precondition: rho([x,y]) = rho(x) rho(y) - rho(y) rho(x)
    on all basis pairs.
    """
    n, m = L.dim, module_dim
    mats = []
    for i in range(n):
        Mi = rho.get(i, Matrix.zero(m, m))
        if (Mi.rows, Mi.cols) != (m, m):
            raise ValueError(f"rho[{i}] has wrong shape")
        mats.append(Mi)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = Matrix.zero(m, m)
            for k, c in L.bracket_basis(i, j).items():
                lhs = lhs + mats[k].scale(c)
            comm = mats[i] * mats[j] - mats[j] * mats[i]
            if lhs != comm:
                raise HomomorphismError(
                    f"rho is not a homomorphism on basis pair ({i},{j})")
    table: BracketTable = {}
    for (i, j), coeffs in L.brackets.items():
        table[(i, j)] = dict(coeffs)
    for i in range(n):
        for v in range(m):
            col = mats[i].column(v)
            coeffs = {n + w: c for w, c in enumerate(col) if c}
            if coeffs:
                table[(i, n + v)] = coeffs
    return LieAlgebra(n + m, table, name=name or f"{L.name}|x|R^{m}",
                      basis_labels=L.basis_labels + [f"v{w}" for w in range(m)])


def coadjoint_rep(L: LieAlgebra) -> Dict[int, Matrix]:
    """Matrices of ad*(e_i) acting on g* in the dual basis."""
    out = {}
    for i in range(L.dim):
        ad_i = L.ad_basis(i)
        out[i] = -ad_i.transpose()
    return out


class CotangentAlgebra:
    """T*g = g semidirect g* via the coadjoint action.

    Basis convention: X_i = (e_{i-1}, 0) and X_{i+m} = (0, alpha^{i-1})
    for 1 <= i <= m, i.e. index k < m is e_k and index m+k is the dual
    of e_k.  Carries the ad-invariant neutral pairing of split signature.
    """

    def __init__(self, base: LieAlgebra):
        self.base = base
        m = base.dim
        labels = [f"X{i + 1}" for i in range(2 * m)]
        total = semidirect(base, coadjoint_rep(base), m, name=f"T*({base.name})")
        self.total = LieAlgebra(2 * m, total.brackets, name=total.name,
                                basis_labels=labels, validate=False)

    @property
    def dim(self) -> int:
        return self.total.dim

    def gram(self) -> Matrix:
        return neutral_gram(self.base.dim)


def cotangent(L: LieAlgebra) -> CotangentAlgebra:
    return CotangentAlgebra(L)


def neutral_gram(m: int) -> Matrix:
    """Gram matrix of the neutral pairing on g + g*: half-identity
    off-diagonal blocks, zero elsewhere; signature (m, m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    g = Matrix.zero(2 * m, 2 * m)
    for i in range(m):
        g.data[i][m + i] = Fraction(1, 2)
        g.data[m + i][i] = Fraction(1, 2)
    return g


def ad_invariance_check(L: LieAlgebra, G: Matrix) -> bool:
    """<[x,y],z> + <y,[x,z]> = 0 for all basis triples."""
    if not G.is_symmetric() or G.rows != L.dim:
        raise ValueError("G must be symmetric of order dim(L)")
    n = L.dim
    for x in range(n):
        for y in range(n):
            for z in range(n):
                acc = 0
                for k, c in L.bracket_basis(x, y).items():
                    acc = acc + c * G.data[k][z]
                for k, c in L.bracket_basis(x, z).items():
                    acc = acc + c * G.data[y][k]
                if acc:
                    return False
    return True


# ---------------------------------------------------------------------------
# subspaces, characteristic subspaces, quotients
# ---------------------------------------------------------------------------

class Subspace:
    """Subspace of the coordinate space, basis kept in reduced row
    echelon form so equal subspaces compare equal."""

    def __init__(self, ambient_dim: int, vectors: Sequence[Sequence]):
        self.ambient_dim = ambient_dim
        vecs = [list(v) for v in vectors if any(v)]
        if vecs:
            rank, R, _ = Matrix(vecs).rref()
            self.basis = [R.row(i) for i in range(rank)]
        else:
            self.basis = []

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def reduce(self, v: Sequence) -> list:
        """Remainder of v after elimination against the echelon basis."""
        r = list(v)
        for b in self.basis:
            p = _pivot(b)
            if p is None:
                continue
            f = r[p]
            if f:
                f = f / b[p]
                r = [a - f * c for a, c in zip(r, b)]
        return r

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and Matrix(self.basis or [[0] * self.ambient_dim])
                == Matrix(other.basis or [[0] * self.ambient_dim]))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient_dim})"


def _pivot(row: Sequence) -> Optional[int]:
    for idx, a in enumerate(row):
        if a:
            return idx
    return None


def span(ambient_dim: int, vectors: Sequence[Sequence]) -> Subspace:
    return Subspace(ambient_dim, vectors)


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    vecs = []
    for (i, j), coeffs in L.brackets.items():
        v = [0] * L.dim
        for k, c in coeffs.items():
            v[k] = c
        vecs.append(v)
    return Subspace(L.dim, vecs)


def center(L: LieAlgebra) -> Subspace:
    return centralizer(L, [_unit(L.dim, i) for i in range(L.dim)])


def centralizer(L: LieAlgebra, generators: Sequence[Sequence]) -> Subspace:
    """{x : [x, y] = 0 for all y in generators}, by exact kernel solve."""
    rows = []
    for y in generators:
        cols = []
        for i in range(L.dim):
            cols.append(L.bracket(_unit(L.dim, i), y))
        M = Matrix.from_columns(cols)
        rows.extend(M.tolist())
    if not rows:
        return Subspace(L.dim, [_unit(L.dim, i) for i in range(L.dim)])
    return Subspace(L.dim, Matrix(rows).kernel_basis())


def characteristic_subspaces(L: LieAlgebra) -> Dict[str, Subspace]:
    """Derived subalgebra, center, and the two readings of z(g'):
    the centralizer of g' inside g, and the center of g' as a subalgebra."""
    der = derived_subalgebra(L)
    cent_of_der = centralizer(L, der.basis) if der.dim else Subspace(
        L.dim, [_unit(L.dim, i) for i in range(L.dim)])
    center_of_der = _center_of_subalgebra(L, der)
    return {
        "derived": der,
        "center": center(L),
        "centralizer_of_derived": cent_of_der,
        "center_of_derived": center_of_der,
    }


def _center_of_subalgebra(L: LieAlgebra, S: Subspace) -> Subspace:
    """{x in S : [x, s] = 0 for all s in S}."""
    if not S.dim:
        return Subspace(L.dim, [])
    rows = []
    for y in S.basis:
        cols = [L.bracket(b, y) for b in S.basis]
        rows.extend(Matrix.from_columns(cols).tolist())
    ker = Matrix(rows).kernel_basis() if rows else []
    vecs = []
    for kv in ker:
        v = [0] * L.dim
        for coef, b in zip(kv, S.basis):
            v = [a + coef * c for a, c in zip(v, b)]
        vecs.append(v)
    return Subspace(L.dim, vecs)


def _unit(n: int, i: int) -> list:
    v = [0] * n
    v[i] = 1
    return v


class NotAnIdealError(ValueError):
    pass


def is_ideal(L: LieAlgebra, I: Subspace) -> Optional[Tuple[int, list]]:
    """None if [L, I] is contained in I, else a violating (basis index, vector)."""
    for i in range(L.dim):
        for b in I.basis:
            w = L.bracket(_unit(L.dim, i), b)
            if not I.contains(w):
                return (i, b)
    return None


def quotient(L: LieAlgebra, I: Subspace) -> LieAlgebra:
    """Quotient algebra L / I in the complement basis formed by the unit
    vectors at the non-pivot coordinates of I, in increasing index order."""
    bad = is_ideal(L, I)
    if bad is not None:
        i, b = bad
        raise NotAnIdealError(
            f"not an ideal: [e{i}, {b}] leaves the subspace")
    pivots = set()
    for b in I.basis:
        p = _pivot(b)
        if p is not None:
            pivots.add(p)
    complement = [i for i in range(L.dim) if i not in pivots]
    pos = {c: idx for idx, c in enumerate(complement)}
    q = len(complement)
    table: BracketTable = {}
    for a in range(q):
        for b in range(a + 1, q):
            w = L.bracket(_unit(L.dim, complement[a]), _unit(L.dim, complement[b]))
            w = I.reduce(w)
            coeffs = {}
            for idx, c in enumerate(w):
                if c:
                    coeffs[pos[idx]] = c
            if coeffs:
                table[(a, b)] = coeffs
    return LieAlgebra(q, table, name=f"{L.name}/I",
                      basis_labels=[L.basis_labels[c] for c in complement])


def complexify_vector(v: Sequence) -> list:
    return [GaussianRational.of(a) if not isinstance(a, GaussianRational) else a for a in v]


def is_unimodular(L: LieAlgebra) -> bool:
    """trace ad(x) = 0 for every basis x."""
    for i in range(L.dim):
        M = L.ad_basis(i)
        tr = 0
        for d in range(L.dim):
            tr = tr + M.data[d][d]
        if tr:
            return False
    return True
