"""Post-composition orbits of self-maps under PGL2(F_q).

The canonical orbit representative is the minimum, in a fixed total order,
over all q^3 - q Moebius post-compositions.  The order: pad numerator and
denominator coefficients to length d+1, concatenate, scale so the first
nonzero entry is 1, compare lexicographically by integer codes.  Two maps
get the same canonical form exactly when they lie in one orbit.
"""

from __future__ import annotations

from ramlab import _kernels
from ramlab.fields import Field
from ramlab.poly import Poly
from ramlab.ratfunc import RatFunc


def pgl2_order(q: int) -> int:
    return q ** 3 - q


def iter_pgl2(field: Field):
    """One matrix of FieldElements per element of PGL2, with the first
    nonzero entry normalized to 1."""
    q = field.q
    one, zero = field.one, field.zero
    for b in range(q):
        eb = field.from_code(b)
        for c in range(q):
            ec = field.from_code(c)
            bc = field.mul_codes(b, c)
            for d in range(q):
                if d == bc:
                    continue
                yield ((one, eb), (ec, field.from_code(d)))
    for c in range(1, q):
        ec = field.from_code(c)
        for d in range(q):
            yield ((zero, one), (ec, field.from_code(d)))


def _map_vectors(f: RatFunc):
    L = f.degree + 1
    return f.num.padded(L), f.den.padded(L)


def canonical_form(f: RatFunc) -> RatFunc:
    """Canonical representative of the post-composition orbit of f."""
    if f.is_constant():
        raise ValueError("orbit canonicalization is for nonconstant maps")
    field = f.field
    num, den = _map_vectors(f)
    add_t, mul_t, _, inv_t = field.tables()
    vec = _kernels.pgl2_min_vec(num, den, field.q, add_t, mul_t, inv_t)
    L = len(vec) // 2
    return RatFunc(Poly(field, vec[:L]), Poly(field, vec[L:]), reduced=True)


def stabilizer_order(f: RatFunc) -> int:
    """Number of Moebius transformations fixing f under post-composition."""
    if f.is_constant():
        raise ValueError("stabilizers are about nonconstant maps")
    field = f.field
    num, den = _map_vectors(f)
    add_t, mul_t, _, inv_t = field.tables()
    return int(_kernels.pgl2_stab_count(num, den, field.q, add_t, mul_t, inv_t))


def orbit_size(f: RatFunc) -> int:
    q = f.field.q
    size, rem = divmod(pgl2_order(q), stabilizer_order(f))
    assert rem == 0
    return size
