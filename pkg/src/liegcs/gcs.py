"""Generalized complex structures on a Lie algebra via its cotangent
algebra: orthogonality / involution / integrability checks, the type
invariant, complex and symplectic lifts, B-field transforms, the
i-eigenspace correspondence with maximal isotropic subalgebras, and the
generalized Kaehler compatibility check.

A candidate structure is a 2m x 2m matrix acting on g + g* in the basis
X_i = (e_{i-1}, 0), X_{i+m} = (0, alpha^{i-1}); column j holds the image
of the j-th basis vector.  Integrability is always computed on the
cotangent algebra of the base, never on the base itself.

The module also hosts the symbolic machinery shared by the proof-replay
kernel and the numeric search: the generic orthogonal-shape matrix over
polynomial variables and fully symbolic Nijenhuis / involution residuals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import Matrix, GaussianRational, GAUSS_I, gauss_matrix
from .lie import (LieAlgebra, CotangentAlgebra, cotangent, neutral_gram,
                  Subspace, complexify_vector)
from .poly import Polynomial


class GCSError(ValueError):
    pass


class GCSCandidate:
    """Endomorphism of g + g* as an exact 2m x 2m matrix with block views
    J1 (g -> g), J2 (g* -> g), J3 (g -> g*), J4 (g* -> g*).

    No validity is enforced at construction; verification is explicit.
    """

    def __init__(self, base_dim: int, matrix: Matrix):
        if matrix.rows != matrix.cols or matrix.rows != 2 * base_dim:
            raise ValueError("matrix must be square of order 2*base_dim")
        self.base_dim = base_dim
        self.matrix = matrix

    @property
    def j1(self) -> Matrix:
        m = self.base_dim
        return self.matrix.block(0, m, 0, m)

    @property
    def j2(self) -> Matrix:
        m = self.base_dim
        return self.matrix.block(0, m, m, 2 * m)

    @property
    def j3(self) -> Matrix:
        m = self.base_dim
        return self.matrix.block(m, 2 * m, 0, m)

    @property
    def j4(self) -> Matrix:
        m = self.base_dim
        return self.matrix.block(m, 2 * m, m, 2 * m)

    def __eq__(self, other):
        return (isinstance(other, GCSCandidate)
                and self.base_dim == other.base_dim
                and self.matrix == other.matrix)

    def __repr__(self):
        return f"GCSCandidate(m={self.base_dim})"


class VerificationReport:
    """Outcome of the three structure checks plus the type invariant.

    ``type_k`` is present exactly when all three checks pass and the base
    dimension is even.
    """

    def __init__(self, orthogonal: bool, involutive: bool, integrable: bool,
                 type_k: Optional[int], failures: List[Tuple[str, tuple, object]]):
        self.orthogonal = orthogonal
        self.involutive = involutive
        self.integrable = integrable
        self.type_k = type_k
        self.failures = failures

    @property
    def passed(self) -> bool:
        return self.orthogonal and self.involutive and self.integrable

    def to_dict(self) -> dict:
        return {
            "orthogonal": self.orthogonal,
            "involutive": self.involutive,
            "integrable": self.integrable,
            "type": self.type_k,
            "failures": [{"condition": c, "where": list(w), "residual": str(r)}
                         for c, w, r in self.failures],
        }

    def __repr__(self):
        ok = "pass" if self.passed else "FAIL"
        return f"VerificationReport({ok}, type={self.type_k}, failures={len(self.failures)})"


# ---------------------------------------------------------------------------
# the three checks
# ---------------------------------------------------------------------------

def check_orthogonal(m: int, J: GCSCandidate) -> Tuple[bool, List[Tuple[str, tuple, object]]]:
    """Pairing compatibility via the block conditions J4 = -J1^*,
    J2 = -J2^*, J3 = -J3^* (the dual map is matrix transpose in dual
    bases), equivalently skew-adjointness J^T G + G J = 0.

    For an involution these are exactly Gram-orthogonality
    transpose(J) G J = G; the identity matrix preserves the pairing but
    fails here because it is not skew-adjoint.
    """
    if J.matrix.rows != 2 * m:
        raise ValueError("order mismatch")
    G = neutral_gram(m)
    failures: List[Tuple[str, tuple, object]] = []
    for label, res in (("J4+J1^T", J.j4 + J.j1.transpose()),
                       ("J2+J2^T", J.j2 + J.j2.transpose()),
                       ("J3+J3^T", J.j3 + J.j3.transpose())):
        for i in range(m):
            for j in range(m):
                if res.data[i][j]:
                    failures.append((label, (i, j), res.data[i][j]))
    R = J.matrix.transpose() * G + G * J.matrix
    for i in range(2 * m):
        for j in range(2 * m):
            if R.data[i][j]:
                failures.append(("skew_adjoint", (i, j), R.data[i][j]))
    return not failures, failures


def check_involution(J: GCSCandidate) -> Tuple[bool, Matrix]:
    """J*J + I = 0 exactly; returns the residual matrix."""
    n = J.matrix.rows
    R = J.matrix * J.matrix + Matrix.identity(n)
    return R.is_zero(), R


def nijenhuis(L2m: LieAlgebra, J: Matrix) -> Dict[Tuple[int, int, int], object]:
    """Nonzero coefficients of N(X_i, X_j) = [X_i,X_j] + J[JX_i,X_j]
    + J[X_i,JX_j] - [JX_i,JX_j], indexed by (i, j, k) with i < j.

    Works over any exact ring (Fraction entries for verification,
    Polynomial entries for the symbolic proofs); all brackets are taken
    in ``L2m`` which should be the cotangent algebra for GCS checks.
    """
    n = L2m.dim
    if J.rows != n or J.cols != n:
        raise ValueError("J order must match the algebra dimension")
    cols = [J.column(j) for j in range(n)]
    out: Dict[Tuple[int, int, int], object] = {}
    units = []
    for i in range(n):
        u = [0] * n
        u[i] = 1
        units.append(u)
    for i in range(n):
        for j in range(i + 1, n):
            t0 = L2m.bracket(units[i], units[j])
            t1 = J.apply(L2m.bracket(cols[i], units[j]))
            t2 = J.apply(L2m.bracket(units[i], cols[j]))
            t3 = L2m.bracket(cols[i], cols[j])
            for k in range(n):
                v = t0[k] + t1[k] + t2[k] - t3[k]
                if v:
                    out[(i, j, k)] = v
    return out


def gcs_type(J: GCSCandidate) -> int:
    """type k = n - rank(J2)/2 where the base has dimension 2n.

    k = n exactly for the complex-type block shape (J2 = 0); k = 0
    exactly when J2 is invertible (symplectic type)."""
    if J.base_dim % 2 != 0:
        raise GCSError("type is only defined for even-dimensional bases")
    n = J.base_dim // 2
    r = J.j2.rank()
    if r % 2 != 0:
        raise GCSError("rank(J2) must be even for a skew block")
    return n - r // 2


def verify(L: LieAlgebra, J: GCSCandidate,
           ct: Optional[CotangentAlgebra] = None) -> VerificationReport:
    """Full verification over cotangent(L): orthogonality, involution,
    integrability, and the type when everything passes."""
    if J.matrix.rows != 2 * L.dim:
        raise ValueError("J order must be 2*dim(L)")
    ct = ct or cotangent(L)
    ok_o, failures = check_orthogonal(L.dim, J)
    ok_i, R = check_involution(J)
    if not ok_i:
        for i in range(R.rows):
            for j in range(R.cols):
                if R.data[i][j]:
                    failures.append(("involution", (i, j), R.data[i][j]))
    nij = nijenhuis(ct.total, J.matrix)
    ok_n = not nij
    for (i, j, k), v in nij.items():
        failures.append(("nijenhuis", (i + 1, j + 1, k + 1), v))
    type_k = None
    if ok_o and ok_i and ok_n and L.dim % 2 == 0:
        type_k = gcs_type(J)
    return VerificationReport(ok_o, ok_i, ok_n, type_k, failures)


# ---------------------------------------------------------------------------
# lifts and transforms
# ---------------------------------------------------------------------------

def lift_complex(L: LieAlgebra, j: Matrix) -> GCSCandidate:
    """Block-diagonal candidate (x, a) -> (j x, -j^T a) from an integrable
    complex structure j on L itself."""
    m = L.dim
    if j.rows != m or j.cols != m:
        raise ValueError("j must have order dim(L)")
    if not (j * j + Matrix.identity(m)).is_zero():
        raise GCSError("j is not almost complex (j^2 != -id)")
    nz = nijenhuis(L, j)
    if nz:
        (i, jj, k), v = next(iter(sorted(nz.items())))
        raise GCSError(f"j is not integrable: N({i},{jj})^{k} = {v}")
    M = Matrix.zero(2 * m, 2 * m)
    jt = j.transpose()
    for a in range(m):
        for b in range(m):
            M.data[a][b] = j.data[a][b]
            M.data[m + a][m + b] = -jt.data[a][b]
    return GCSCandidate(m, M)


def cybe_check(L: LieAlgebra, w: Matrix) -> bool:
    """Closedness of the 2-form given by the skew matrix w, in the
    operator form w([x,y]) = w(x) ad(y) - w(y) ad(x) on basis pairs."""
    if not w.is_skew():
        raise ValueError("w must be skew-symmetric")
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            ei = [0] * n
            ei[i] = 1
            ej = [0] * n
            ej[j] = 1
            lhs = w.apply(L.bracket(ei, ej))
            adi = L.ad(ei)
            adj = L.ad(ej)
            rhs_a = adj.transpose().apply(w.apply(ei))
            rhs_b = adi.transpose().apply(w.apply(ej))
            if any(a - (b - c) for a, b, c in zip(lhs, rhs_a, rhs_b)):
                return False
    return True


def lift_symplectic(L: LieAlgebra, w: Matrix) -> GCSCandidate:
    """Candidate (x, a) -> (-w^{-1} a, w x) from a closed nondegenerate
    skew form; J2 = -w^{-1}, J3 = w."""
    m = L.dim
    if not w.is_skew():
        raise GCSError("w must be skew-symmetric")
    if not w.det():
        raise GCSError("w is degenerate")
    if not cybe_check(L, w):
        raise GCSError("w is not closed (compatibility identity fails)")
    winv = w.inverse()
    M = Matrix.zero(2 * m, 2 * m)
    for a in range(m):
        for b in range(m):
            M.data[a][m + b] = -winv.data[a][b]
            M.data[m + a][b] = w.data[a][b]
    return GCSCandidate(m, M)


def b_field(J: GCSCandidate, B: Matrix, L: LieAlgebra) -> GCSCandidate:
    """Conjugate by (x, a) -> (x, a + Bx) for a closed skew 2-form B;
    preserves the J2 block, hence the type."""
    from .cohomology import two_form_is_closed
    m = J.base_dim
    if not B.is_skew() or B.rows != m:
        raise GCSError("B must be skew of order dim(L)")
    if not two_form_is_closed(L, B):
        raise GCSError("B is not closed")
    E = Matrix.identity(2 * m)
    Einv = Matrix.identity(2 * m)
    for a in range(m):
        for b in range(m):
            E.data[m + a][b] = B.data[a][b]
            Einv.data[m + a][b] = -B.data[a][b]
    return GCSCandidate(m, E * J.matrix * Einv)


# ---------------------------------------------------------------------------
# i-eigenspace correspondence
# ---------------------------------------------------------------------------

class IsotropicSubalgebra:
    """Maximal isotropic complex subalgebra q of the complexified
    cotangent algebra with q and sigma(q) complementary."""

    def __init__(self, ct: CotangentAlgebra, basis: List[list]):
        self.ct = ct
        self.subspace = Subspace(ct.dim, [complexify_vector(v) for v in basis])

    @property
    def basis(self) -> List[list]:
        return self.subspace.basis

    @property
    def complex_dim(self) -> int:
        return self.subspace.dim


def _conj_vec(v: Sequence) -> list:
    return [GaussianRational.of(a).conjugate() for a in v]


def isotropic_invariant_failures(q: IsotropicSubalgebra) -> List[str]:
    """Check the defining invariants; returns human-readable failures."""
    ct = q.ct
    n = ct.dim
    m = ct.base.dim
    problems = []
    if q.complex_dim != m:
        problems.append(f"complex dimension is {q.complex_dim}, expected {m}")
    G = gauss_matrix(ct.gram())
    for a in q.basis:
        for b in q.basis:
            val = 0
            gb = G.apply(b)
            for x, y in zip(a, gb):
                val = val + x * y
            if val:
                problems.append("not isotropic for the complexified pairing")
                break
        else:
            continue
        break
    for a in q.basis:
        for b in q.basis:
            w = ct.total.bracket(a, b)
            if not q.subspace.contains(w):
                problems.append("not a subalgebra (bracket leaves the span)")
                break
        else:
            continue
        break
    stacked = q.basis + [_conj_vec(v) for v in q.basis]
    if stacked and Matrix(stacked).rank() != 2 * q.complex_dim:
        problems.append("q meets sigma(q) nontrivially")
    return problems


def i_eigenspace(L: LieAlgebra, J: GCSCandidate,
                 ct: Optional[CotangentAlgebra] = None) -> IsotropicSubalgebra:
    """The i-eigenspace of a verified structure inside the complexified
    cotangent algebra; postconditions are checked."""
    ct = ct or cotangent(L)
    rep = verify(L, J, ct=ct)
    if not rep.passed:
        raise GCSError(f"structure does not verify: {rep}")
    n = 2 * L.dim
    A = gauss_matrix(J.matrix)
    for d in range(n):
        A.data[d][d] = A.data[d][d] - GAUSS_I
    ker = A.kernel_basis()
    q = IsotropicSubalgebra(ct, ker)
    problems = isotropic_invariant_failures(q)
    if problems:
        raise GCSError("i-eigenspace invariants fail: " + "; ".join(problems))
    return q


def gcs_from_subalgebra(L: LieAlgebra, q: IsotropicSubalgebra) -> GCSCandidate:
    """Reconstruct the real structure with J z = i z on q and
    J sigma(z) = -i sigma(z); inverse of :func:`i_eigenspace`."""
    problems = isotropic_invariant_failures(q)
    if problems:
        raise GCSError("invalid isotropic subalgebra: " + "; ".join(problems))
    n = q.ct.dim
    cols = [list(v) for v in q.basis] + [_conj_vec(v) for v in q.basis]
    P = Matrix.from_columns(cols)
    images = ([[GAUSS_I * a for a in v] for v in q.basis]
              + [[-GAUSS_I * a for a in _conj_vec(v)] for v in q.basis])
    Timg = Matrix.from_columns(images)
    Jc = Timg * P.inverse()
    data = []
    for i in range(n):
        row = []
        for j in range(n):
            z = GaussianRational.of(Jc.data[i][j])
            if z.im:
                raise GCSError("reconstructed endomorphism is not real")
            row.append(z.re)
        data.append(row)
    return GCSCandidate(q.ct.base.dim, Matrix(data))


# ---------------------------------------------------------------------------
# generalized Kaehler check
# ---------------------------------------------------------------------------

def generalized_kahler_check(L: LieAlgebra, Ja: GCSCandidate, Jb: GCSCandidate) -> dict:
    """Compatibility of a verified pair: commutation, an involutive
    product, and positive definiteness of the induced metric, decided
    exactly by leading principal minors.

    The metric is the symmetric form v -> <(Ja Jb) v, v> in the neutral
    pairing; its sign is pinned by the canonical pair (symplectic lift +
    rotation lift on the abelian algebra) coming out positive.
    """
    for J in (Ja, Jb):
        if not verify(L, J).passed:
            raise GCSError("both structures must verify")
    P = Ja.matrix * Jb.matrix
    commute = P == (Jb.matrix * Ja.matrix)
    involution = (P * P) == Matrix.identity(P.rows)
    gram = neutral_gram(L.dim)
    S = gram * P
    Ssym = Matrix([[S.data[i][j] + S.data[j][i] for j in range(S.cols)]
                   for i in range(S.rows)]).scale(Fraction(1, 2))
    positive = all(Ssym.block(0, k, 0, k).det() > 0 for k in range(1, S.rows + 1))
    return {"commute": commute, "involution_G": involution,
            "positive_definite": positive}


# ---------------------------------------------------------------------------
# symbolic machinery (generic orthogonal shape + symbolic residuals)
# ---------------------------------------------------------------------------

def _entry_name(i: int, j: int) -> str:
    """Row/column variable names, 1-based; underscores only when an index
    needs two digits."""
    if i <= 9 and j <= 9:
        return f"a{i}{j}"
    return f"a{i}_{j}"


def symbolic_gcs(n: int) -> Tuple[Matrix, List[str]]:
    """The generic pairing-orthogonal matrix of order 4n over fresh
    polynomial variables: free top-left block, skew off-diagonal blocks,
    bottom-right locked to minus the transpose of the top-left.

    Returns the matrix and the ordered list of free variable names
    (16 + 6 + 6 = 28 for n = 2).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = 2 * n
    return orthogonal_shape(m)


def orthogonal_shape(m: int) -> Tuple[Matrix, List[str]]:
    """Same generic matrix for an arbitrary base dimension m (order 2m)."""
    names: List[str] = []
    M = Matrix.zero(2 * m, 2 * m).map(lambda _: Polynomial())
    for i in range(m):
        for j in range(m):
            nm = _entry_name(i + 1, j + 1)
            names.append(nm)
            v = Polynomial.var(nm)
            M.data[i][j] = v
            M.data[m + j][m + i] = -v
    for i in range(m):
        for j in range(i + 1, m):
            nm = _entry_name(i + 1, m + j + 1)
            names.append(nm)
            v = Polynomial.var(nm)
            M.data[i][m + j] = v
            M.data[j][m + i] = -v
    for i in range(m):
        for j in range(i + 1, m):
            nm = _entry_name(m + j + 1, i + 1)
            names.append(nm)
            v = Polynomial.var(nm)
            M.data[m + j][i] = v
            M.data[m + i][j] = -v
    return M, names


def free_square_shape(n: int) -> Tuple[Matrix, List[str]]:
    """Fully generic n x n matrix over variables a_{ij} named so that
    a_{ij} is the coefficient of the j-th basis vector in the image of
    the i-th one (the action-list convention)."""
    names = []
    M = Matrix.zero(n, n).map(lambda _: Polynomial())
    for i in range(n):
        for j in range(n):
            nm = _entry_name(i + 1, j + 1)
            names.append(nm)
            M.data[j][i] = Polynomial.var(nm)
    return M, names


def symbolic_nijenhuis(L2m: LieAlgebra, J: Optional[Matrix] = None
                       ) -> Dict[Tuple[int, int, int], Polynomial]:
    """Symbolic Nijenhuis coefficients of the generic orthogonal-shape
    matrix on an exact algebra (cotangent algebra of a catalog entry);
    each coefficient has total degree <= 2 in the shape variables."""
    if J is None:
        if L2m.dim % 2 != 0:
            raise ValueError("algebra dimension must be even")
        J, _ = orthogonal_shape(L2m.dim // 2)
    return nijenhuis(L2m, J)


def symbolic_involution(J: Matrix) -> Dict[Tuple[int, int], Polynomial]:
    """Nonzero entries of J^2 + I as polynomials, indexed (row, col)."""
    n = J.rows
    R = J * J + Matrix.identity(n)
    out = {}
    for i in range(n):
        for j in range(n):
            v = Polynomial.of(R.data[i][j])
            if not v.is_zero():
                out[(i, j)] = v
    return out
