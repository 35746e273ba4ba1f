"""Rank-2 logarithmic connections on the projective line in characteristic p.

A connection is d/dt + A(t) on a trivialized chart, with A a 2x2 matrix of
rational functions over GF(p) whose poles are simple and sit at the marked
points.  Marked points must be finite: move a configuration containing
infinity into the affine chart with a Moebius change of coordinate first.

The p-curvature is computed through the iterated-derivation recursion
M_1 = A, M_{k+1} = M_k' + A M_k, evaluated at k = p, which is (nabla_{d/dt})^p
applied to constant sections.  Internally denominators are cleared: with
D = prod (t - P_i) and B = D A, the numerators obey
N_{k+1} = N_k' D - k D' N_k + B N_k and M_p = N_p / D^p.
"""

from __future__ import annotations

from dataclasses import dataclass

from ramlab.fields import Field, FieldElement
from ramlab.poly import Poly
from ramlab.ratfunc import RatFunc


def _mat_map(M, fn):
    return tuple(tuple(fn(M[i][j]) for j in range(2)) for i in range(2))


def _pmat_mul(A, B):
    return tuple(
        tuple(A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2))
        for i in range(2)
    )


def _pmat_add(A, B):
    return tuple(tuple(A[i][j] + B[i][j] for j in range(2)) for i in range(2))


class LogConnection:
    """d/dt + A(t) with simple poles at finite marked points, plus the
    declared splitting type (a, b), a >= b, of the underlying bundle."""

    def __init__(self, field: Field, points, matrix, splitting=(0, 0)):
        if field.k != 1:
            raise ValueError("connections live over the prime field GF(p)")
        self.field = field
        self.p = field.p
        pts = [field.element(P).code for P in points]
        if len(set(pts)) != len(pts):
            raise ValueError("marked points must be pairwise distinct")
        self.points = tuple(pts)
        a, b = splitting
        if a < b:
            raise ValueError(f"splitting type must have a >= b, got {splitting}")
        self.splitting = (int(a), int(b))
        D = Poly.one(field)
        for P in self.points:
            D = D * Poly(field, [field.neg_code(P), 1])
        self._D = D
        A = _mat_map(matrix, self._coerce_entry)
        for i in range(2):
            for j in range(2):
                den = A[i][j].den
                if den.degree > 0 and not (D % den).is_zero():
                    raise ValueError(
                        f"entry ({i},{j}) = {A[i][j]!r} has a pole outside the marked "
                        f"points or of order > 1")
        self.matrix = A
        # B = D*A is a polynomial matrix
        self._B = _mat_map(A, lambda f: (f.num * (D // f.den)))

    def _coerce_entry(self, entry) -> RatFunc:
        if isinstance(entry, RatFunc):
            if entry.field != self.field:
                raise ValueError("matrix entry over the wrong field")
            return entry
        if isinstance(entry, Poly):
            return RatFunc(entry, Poly.one(self.field), reduced=True)
        if isinstance(entry, (int, FieldElement)):
            return RatFunc.constant(self.field.element(entry))
        raise TypeError(f"cannot use {entry!r} as a connection matrix entry")

    def trace(self) -> RatFunc:
        return self.matrix[0][0] + self.matrix[1][1]

    def twist(self, c: RatFunc) -> "LogConnection":
        """The connection with matrix A + c*I (same points, same splitting)."""
        new = (
            (self.matrix[0][0] + c, self.matrix[0][1]),
            (self.matrix[1][0], self.matrix[1][1] + c),
        )
        return LogConnection(self.field, self.points, new, self.splitting)


# ---------------------------------------------------------------------------
# Residues and radii
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResidueMatrix:
    """((t - P) A)(P): the residue of the connection at the marked point P."""

    p: int
    point: int
    entries: tuple  # 2x2 of GF(p) codes

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.entries for c in row)

    def trace(self) -> int:
        return (self.entries[0][0] + self.entries[1][1]) % self.p


def residue_matrix(conn: LogConnection, point) -> ResidueMatrix:
    field = conn.field
    P = field.element(point).code
    if P not in conn.points:
        raise ValueError(f"{point} is not a marked point of this connection")
    lin = Poly(field, [field.neg_code(P), 1])

    def res_entry(f: RatFunc) -> int:
        # poles are simple, so den = (t-P) * den2 with den2(P) != 0 and the
        # value of (t-P) f at P is num(P) / den2(P)
        if f.den.eval_code(P) != 0:
            return 0
        den2 = f.den // lin
        n = f.num.eval_code(P)
        return field.mul_codes(n, field.inv_code(den2.eval_code(P)))

    entries = tuple(tuple(res_entry(conn.matrix[i][j]) for j in range(2)) for i in range(2))
    return ResidueMatrix(conn.p, P, entries)


@dataclass(frozen=True)
class Radius:
    """rho^2 = Tr(R^2)/2 with the canonical representative in [0, (p-1)/2].

    When rho^2 is a non-square mod p the representative lives in GF(p^2);
    that case is flagged as non_split, not embedded.
    """

    point: int
    rho_squared: int
    rho: int | None
    non_split: bool
    residue_nonzero: bool


def _sqrt_mod_p(a: int, p: int) -> int | None:
    for r in range((p + 1) // 2):
        if (r * r) % p == a:
            return r
    return None


def radius_at(conn: LogConnection, point) -> Radius:
    R = residue_matrix(conn, point)
    p = conn.p
    e = R.entries
    tr_sq = (e[0][0] * e[0][0] + 2 * e[0][1] * e[1][0] + e[1][1] * e[1][1]) % p
    rho_sq = (tr_sq * pow(2, p - 2, p)) % p
    r = _sqrt_mod_p(rho_sq, p)
    return Radius(
        point=R.point,
        rho_squared=rho_sq,
        rho=r,
        non_split=r is None,
        residue_nonzero=not R.is_zero(),
    )


# ---------------------------------------------------------------------------
# p-curvature
# ---------------------------------------------------------------------------

class PCurvature:
    """(nabla_{d/dt})^p as a 2x2 matrix of rational functions (O-linear)."""

    def __init__(self, matrix):
        self.matrix = matrix

    def is_zero(self) -> bool:
        return all(self.matrix[i][j].is_zero() for i in range(2) for j in range(2))

    def trace(self) -> RatFunc:
        return self.matrix[0][0] + self.matrix[1][1]

    def traceless_part(self) -> "PCurvature":
        """M - (Tr M / 2) I; valid since p is odd."""
        field = self.matrix[0][0].field
        half = RatFunc.constant(FieldElement(field, pow(2, field.p - 2, field.p)))
        s = self.trace() * half
        return PCurvature((
            (self.matrix[0][0] - s, self.matrix[0][1]),
            (self.matrix[1][0], self.matrix[1][1] - s),
        ))

    def __eq__(self, other):
        if not isinstance(other, PCurvature):
            return NotImplemented
        return self.matrix == other.matrix


def p_curvature(conn: LogConnection) -> PCurvature:
    field, p = conn.field, conn.p
    D, B = conn._D, conn._B
    Dp = D.derivative()
    N = B
    for k in range(1, p):
        dN = _mat_map(N, lambda f: f.derivative() * D)
        kDp = Dp.scale(field.element(k))
        N = _pmat_add(_pmat_add(dN, _mat_map(N, lambda f: -(f * kDp))), _pmat_mul(B, N))
    den = D ** p
    return PCurvature(_mat_map(N, lambda f: RatFunc(f, den)))


def is_dormant(conn: LogConnection) -> bool:
    return p_curvature(conn).is_zero()


def check_p_trivial_determinant(conn: LogConnection) -> bool:
    """The trace connection d/dt + Tr A must be regular everywhere and have
    vanishing p-curvature (scalar recursion m_{k+1} = m_k' + Tr A * m_k)."""
    tr = conn.trace()
    if not tr.is_polynomial():
        return False
    tau = tr.as_polynomial()
    m = tau
    for _ in range(1, conn.p):
        m = m.derivative() + tau * m
    return m.is_zero()


# ---------------------------------------------------------------------------
# Kodaira-Spencer and level
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KodairaSpencer:
    """The induced map from the degree-a summand to the quotient line.

    entry is the lower-left matrix entry; iso_at[i] says whether it has a
    genuine simple pole at the i-th marked point.
    """

    entry: RatFunc
    nonzero: bool
    iso_at: tuple


def kodaira_spencer(conn: LogConnection) -> KodairaSpencer:
    a, b = conn.splitting
    if a == b:
        raise ValueError("semistable; Kodaira-Spencer undefined for level 0 convention")
    field = conn.field
    entry = conn.matrix[1][0]
    flags = []
    for P in conn.points:
        if entry.is_zero():
            flags.append(False)
            continue
        if entry.den.eval_code(P) != 0:
            flags.append(False)  # regular at P, not an isomorphism there
            continue
        lin = Poly(field, [field.neg_code(P), 1])
        den2 = entry.den // lin
        val = field.mul_codes(entry.num.eval_code(P), field.inv_code(den2.eval_code(P)))
        flags.append(val != 0)
    return KodairaSpencer(entry=entry, nonzero=not entry.is_zero(), iso_at=tuple(flags))


@dataclass(frozen=True)
class Level:
    """Half-integer level, stored doubled: two_ell = a - b.

    indigenous is the g = 0 maximal-level test two_ell == r - 2, and ks
    carries the Kodaira-Spencer flags entering the level conditions (None
    in the semistable case).
    """

    two_ell: int
    indigenous: bool
    ks: KodairaSpencer | None


def level(conn: LogConnection) -> Level:
    a, b = conn.splitting
    two_ell = a - b
    r = len(conn.points)
    ks = kodaira_spencer(conn) if a > b else None
    return Level(two_ell=two_ell, indigenous=(two_ell == r - 2), ks=ks)


def traceless_part(M: PCurvature) -> PCurvature:
    return M.traceless_part()


# ---------------------------------------------------------------------------
# The connection input format
# ---------------------------------------------------------------------------

def connection_from_dict(data: dict) -> LogConnection:
    """Build a connection from the JSON input document.

    Schema: {"p": odd prime, "points": [ints], "splitting": [a, b],
    "matrix": 2x2 of {"num": [ascending ints], "den": [ascending ints]}},
    with "den" defaulting to [1] and integers reduced mod p.
    """
    if not isinstance(data, dict):
        raise ValueError("connection document must be a JSON object")
    for key in ("p", "points", "matrix"):
        if key not in data:
            raise ValueError(f"connection document is missing {key!r}")
    p = data["p"]
    if not isinstance(p, int):
        raise ValueError(f"p must be an integer, got {p!r}")
    field = Field(p)
    points = data["points"]
    if not isinstance(points, list) or not all(isinstance(P, int) for P in points):
        raise ValueError("points must be a list of integers (finite marked points)")
    splitting = data.get("splitting", [0, 0])
    if (not isinstance(splitting, list) or len(splitting) != 2
            or not all(isinstance(x, int) for x in splitting)):
        raise ValueError("splitting must be a pair of integers [a, b]")
    matrix = data["matrix"]
    if not (isinstance(matrix, list) and len(matrix) == 2
            and all(isinstance(row, list) and len(row) == 2 for row in matrix)):
        raise ValueError("matrix must be a 2x2 array of entries")

    def entry(obj, i, j) -> RatFunc:
        if not isinstance(obj, dict) or "num" not in obj:
            raise ValueError(f"matrix entry ({i},{j}) must be an object with 'num'")
        num = obj["num"]
        den = obj.get("den", [1])
        if not all(isinstance(c, int) for c in num + den):
            raise ValueError(f"matrix entry ({i},{j}) has non-integer coefficients")
        den_poly = Poly.from_ints(field, den)
        if den_poly.is_zero():
            raise ValueError(f"matrix entry ({i},{j}) has a zero denominator")
        return RatFunc(Poly.from_ints(field, num), den_poly)

    A = tuple(tuple(entry(matrix[i][j], i, j) for j in range(2)) for i in range(2))
    return LogConnection(field, points, A, tuple(splitting))


# ---------------------------------------------------------------------------
# Random connections for the property suites
# ---------------------------------------------------------------------------

def random_connection(p: int, rng, max_points: int = 3, max_extra_deg: int = 2,
                      splitting=(0, 0), traceless: bool = False) -> LogConnection:
    """A random connection with simple poles at random finite marked points.

    traceless=True forces A_22 = -A_11, giving a p-trivial determinant."""
    field = Field(p)
    r = rng.randint(1, min(max_points, p))
    points = rng.sample(range(p), r)

    def entry():
        den = Poly.one(field)
        for P in points:
            if rng.random() < 0.5:
                den = den * Poly(field, [field.neg_code(P), 1])
        num = Poly(field, [rng.randrange(p) for _ in range(den.degree + 1 + max_extra_deg)])
        return RatFunc(num, den)

    a11 = entry()
    a22 = -a11 if traceless else entry()
    return LogConnection(field, points, ((a11, entry()), (entry(), a22)), splitting)
