"""Structure-preserving maps and their verification.

Diagonal and dual isomorphisms of the split families, cube-root-of-unity
automorphisms, isometry-lifted maps of the hermitian families, skew maps
``x |-> h(u,x)v - h(v,x)u``, unitary / special-unitary membership, and the
generic homomorphism / derivation checkers.

A linear map on a rank-3 module is a plain 3x3 matrix (row tuples) acting by
left multiplication, over R for the split families and over S for the
hermitian ones.  ``AlgebraMap`` wraps an element-level function together with
its domain and codomain handles; ``is_homomorphism`` / ``is_derivation``
treat failures as data (a report with a counterexample), never as errors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebras import (
    CayElement,
    CayleyAlgebra,
    ColHermAlgebra,
    ColHermElement,
    ColSplitAlgebra,
    ColSplitElement,
    WHermAlgebra,
    WHermElement,
    ZornAlgebra,
    ZornElement,
)
from .checks import CheckReport, Sampler
from .errors import (
    MorphismConditionFailed,
    NotCubeRoot,
    NotIsometry,
    NotSLinear,
    SuiteNotApplicable,
)
from .trivec import (
    HermitianSpace,
    mat_conj,
    mat_det,
    mat_inv,
    mat_mul,
    mat_transpose,
    mat_vec,
    vec_neg,
    vec_sub,
)

__all__ = [
    "AlgebraMap",
    "diagonal_iso",
    "dual_iso",
    "cube_root_auto",
    "lift_isometry",
    "vector_restriction",
    "custom_map",
    "lambda_map",
    "is_isometry",
    "in_unitary",
    "in_lie_unitary",
    "is_homomorphism",
    "is_derivation",
]


@dataclass
class AlgebraMap:
    kind: str
    domain: object
    codomain: object
    fn: Callable
    data: dict = field(default_factory=dict)

    def apply(self, x):
        return self.fn(x)


# ----------------------------------------------------------- split maps


def diagonal_iso(domain, phi, lam_prime, check: bool = True) -> AlgebraMap:
    """(a, u, ud) |-> (a, phi u, phi^-T ud) into the lam_prime-twisted algebra.

    Requires det(phi) * lam_prime = lam (so the trivializations correspond);
    the same data transports both the rank-7 and the rank-8 split family.
    ``check=False`` skips the condition, producing a deliberately broken map
    for negative tests.
    """
    R = domain.ring
    det = mat_det(R, phi)
    if check and R.mul(det, lam_prime) != domain.lam:
        raise MorphismConditionFailed(
            f"det(phi) * lam' = {R.format(R.mul(det, lam_prime))}, expected lam = {R.format(domain.lam)}"
        )
    phi_inv_t = mat_transpose(mat_inv(R, phi))
    codomain = type(domain)(R, lam_prime)

    if isinstance(domain, ZornAlgebra):
        def fn(x):
            return ZornElement(x.a, mat_vec(R, phi, x.u), mat_vec(R, phi_inv_t, x.ud), x.ap)
    else:
        def fn(x):
            return ColSplitElement(x.a, mat_vec(R, phi, x.u), mat_vec(R, phi_inv_t, x.ud))

    return AlgebraMap("diagonal", domain, codomain, fn, {"phi": phi, "lam_prime": lam_prime})


def dual_iso(domain: ColSplitAlgebra) -> AlgebraMap:
    """(a, u, ud) |-> (a, -ud, -u) into the dual-trivialized algebra."""
    R = domain.ring
    codomain = ColSplitAlgebra(R, R.inv(domain.lam))

    def fn(x):
        return ColSplitElement(x.a, vec_neg(R, x.ud), vec_neg(R, x.u))

    return AlgebraMap("dual", domain, codomain, fn, {})


def cube_root_auto(domain, mu) -> AlgebraMap:
    """(a, u, ud) |-> (a, mu u, mu^-1 ud) for a cube root of unity mu."""
    R = domain.ring
    if R.mul(mu, R.mul(mu, mu)) != R.one:
        raise NotCubeRoot(f"{R.format(mu)}^3 != 1 in {R.kind}")
    z = R.zero
    phi = ((mu, z, z), (z, mu, z), (z, z, mu))
    m = diagonal_iso(domain, phi, domain.lam)
    m.kind = "cube-root"
    m.data = {"mu": mu}
    return m


# -------------------------------------------------------- hermitian maps


def _validate_s_matrix(S, phi):
    try:
        rows = tuple(tuple(phi[i][j] for j in range(3)) for i in range(3))
        for row in rows:
            for e in row:
                if len(e) != 2:
                    raise TypeError
    except (TypeError, IndexError, KeyError):
        raise NotSLinear("map data is not a 3x3 matrix over S") from None
    return rows


def is_isometry(P: HermitianSpace, P2: HermitianSpace, phi) -> bool:
    """h'(phi u, phi v) = h(u, v), i.e. conj(phi)^T H' phi = H."""
    S = P.S
    lhs = mat_mul(S, mat_mul(S, mat_transpose(mat_conj(S, phi)), P2.gram), phi)
    return lhs == P.gram


def lift_isometry(P: HermitianSpace, P2: HermitianSpace, phi, target: str) -> AlgebraMap:
    """Lift an isometry (P,h,alpha) -> (P',h',alpha') to the rank-7 or rank-8
    hermitian family, as (a, u) |-> (a, phi u).

    Raises ``NotIsometry`` when the Gram matrices do not correspond and
    ``MorphismConditionFailed`` when det(phi) * alpha' != alpha.
    """
    S = P.S
    phi = _validate_s_matrix(S, phi)
    if not is_isometry(P, P2, phi):
        raise NotIsometry("phi does not carry h' back to h")
    det = mat_det(S, phi)
    if S.mul(det, P2.alpha) != P.alpha:
        raise MorphismConditionFailed(
            f"det(phi) * alpha' = {S.format(S.mul(det, P2.alpha))}, expected alpha = {S.format(P.alpha)}"
        )
    if target == "colour":
        dom, cod = ColHermAlgebra(P), ColHermAlgebra(P2)

        def fn(x):
            return ColHermElement(x.a, mat_vec(S, phi, x.u))

        return AlgebraMap("G-phi", dom, cod, fn, {"phi": phi})
    if target == "cayley":
        dom, cod = CayleyAlgebra(P), CayleyAlgebra(P2)

        def fn(x):
            return CayElement(x.a, mat_vec(S, phi, x.u))

        return AlgebraMap("H-phi", dom, cod, fn, {"phi": phi})
    raise SuiteNotApplicable(f"unknown lift target {target!r}")


def vector_restriction(m: AlgebraMap) -> AlgebraMap:
    """Restrict a lifted map to the rank-6 vector algebra."""
    if m.kind not in ("G-phi", "H-phi"):
        raise SuiteNotApplicable(f"cannot restrict a {m.kind} map")
    P, P2 = m.domain.space, m.codomain.space
    phi = m.data["phi"]
    S = P.S

    def fn(x):
        return WHermElement(mat_vec(S, phi, x.u))

    return AlgebraMap("w-phi", WHermAlgebra(P), WHermAlgebra(P2), fn, {"phi": phi})


def custom_map(domain, codomain, table) -> AlgebraMap:
    """An arbitrary R-linear map given by a rank x rank coordinate matrix.

    Column j of ``table`` holds the codomain coordinates of the image of the
    j-th domain basis element.  No structure is assumed; feed the result to
    ``is_homomorphism`` to find out what it preserves.
    """
    R = domain.ring
    n, m = codomain.rank, domain.rank
    if len(table) != n or any(len(row) != m for row in table):
        raise NotSLinear(f"custom table must be {n} x {m}")

    def fn(x):
        c = domain.coords(x)
        out = [R.zero] * n
        for i in range(n):
            acc = R.zero
            for j in range(m):
                acc = R.add(acc, R.mul(table[i][j], c[j]))
            out[i] = acc
        return codomain.from_coords(out)

    return AlgebraMap("custom", domain, codomain, fn, {"table": table})


def lambda_map(P: HermitianSpace, u, v):
    """The S-linear skew map x |-> h(u,x) v - h(v,x) u, as a matrix.

    (The form is linear in its second slot, so this is the S-linear member
    of the family; it lies in the h-skew Lie algebra u(P,h).)
    """
    S = P.S
    cols = []
    for e in P.basis():
        hu = P.h(u, e)
        hv = P.h(v, e)
        cols.append(vec_sub(S, tuple(S.mul(hu, c) for c in v), tuple(S.mul(hv, c) for c in u)))
    return tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))


def in_unitary(P: HermitianSpace, f, special: bool = False) -> bool:
    """Membership in U(P,h) (isometries), or SU(P,h) when ``special``."""
    S = P.S
    if not S.is_unit(mat_det(S, f)):
        return False
    if not is_isometry(P, P, f):
        return False
    if special and mat_det(S, f) != S.one:
        return False
    return True


def in_lie_unitary(P: HermitianSpace, f, special: bool = False) -> bool:
    """Membership in u(P,h): h(f u, v) + h(u, f v) = 0 on the basis;
    su(P,h) additionally requires trace_S(f) = 0."""
    S = P.S
    basis = P.basis()
    for ei in basis:
        fei = mat_vec(S, f, ei)
        for ej in basis:
            fej = mat_vec(S, f, ej)
            if S.add(P.h(fei, ej), P.h(ei, fej)) != S.zero:
                return False
    if special:
        tr = S.add(S.add(f[0][0], f[1][1]), f[2][2])
        if tr != S.zero:
            return False
    return True


# ------------------------------------------------------------- checkers


def is_homomorphism(m: AlgebraMap, sampler: Sampler) -> CheckReport:
    """Unit preservation, linearity and multiplicativity.

    Seeded mode draws element pairs plus a scalar for the linearity probe;
    exhaustive mode checks every ordered pair of basis products (which pins
    a linear map completely).
    """
    A, B = m.domain, m.codomain
    name = f"homomorphism:{m.kind}"
    checked = 0
    if getattr(A, "unital", False) and getattr(B, "unital", False):
        checked += 1
        if m.apply(A.one()) != B.one():
            return CheckReport(name, checked, False, {"part": "unit"})
    if sampler.mode == "exhaustive":
        basis = A.basis()
        for x in basis:
            for y in basis:
                checked += 1
                if m.apply(A.mul(x, y)) != B.mul(m.apply(x), m.apply(y)):
                    return CheckReport(
                        name,
                        checked,
                        False,
                        {"x": A.element_to_json(x), "y": A.element_to_json(y)},
                    )
        return CheckReport(name, checked, True, None)
    rng = sampler.rng()
    for i in range(sampler.count):
        x, y = A.sample(rng), A.sample(rng)
        r = A.ring.sample(rng)
        checked += 1
        ok = (
            m.apply(A.add(x, y)) == B.add(m.apply(x), m.apply(y))
            and m.apply(A.smul(r, x)) == B.smul(r, m.apply(x))
            and m.apply(A.mul(x, y)) == B.mul(m.apply(x), m.apply(y))
        )
        if not ok:
            return CheckReport(
                name,
                checked,
                False,
                {"index": i, "x": A.element_to_json(x), "y": A.element_to_json(y)},
            )
    return CheckReport(name, checked, True, None)


def _extend_derivation(A, d):
    """Extend a matrix acting on P by zero on the scalar slot."""
    S = A.S

    if isinstance(A, WHermAlgebra):
        def fn(x):
            return WHermElement(mat_vec(S, d, x.u))
    elif isinstance(A, ColHermAlgebra):
        def fn(x):
            return ColHermElement(A.ring.zero, mat_vec(S, d, x.u))
    elif isinstance(A, CayleyAlgebra):
        def fn(x):
            return CayElement(S.zero, mat_vec(S, d, x.u))
    else:
        raise SuiteNotApplicable(f"derivation checks are not defined for {A.family}")
    return fn


def is_derivation(d, A, sampler: Sampler) -> CheckReport:
    """Leibniz rule d(xy) = d(x) y + x d(y) against the family product.

    ``d`` is a 3x3 matrix over S acting on the vector slot; it is extended by
    zero on the scalar slot of the rank-7 and rank-8 hermitian families.
    """
    d = _validate_s_matrix(A.S, d)
    fn = _extend_derivation(A, d)
    name = f"derivation:{A.family}"
    checked = 0
    if sampler.mode == "exhaustive":
        basis = A.basis()
        pairs = [(x, y) for x in basis for y in basis]
    else:
        rng = sampler.rng()
        pairs = []
        for _ in range(sampler.count):
            pairs.append((A.sample(rng), A.sample(rng)))
    for i, (x, y) in enumerate(pairs):
        checked += 1
        lhs = fn(A.mul(x, y))
        rhs = A.add(A.mul(fn(x), y), A.mul(x, fn(y)))
        if lhs != rhs:
            return CheckReport(
                name,
                checked,
                False,
                {"index": i, "x": A.element_to_json(x), "y": A.element_to_json(y)},
            )
    return CheckReport(name, checked, True, None)
