"""The algebra families built from trivialized rank-3 modules.

Split families over (R, lam), writing x (cross) for the lam-twisted product
on T and its lam^-1-twisted dual on dual(T):

* ``ColSplitAlgebra``  rank 7 on R + T + dual(T)::

      (a,u,ud)(b,v,vd) = (ab + (1/2)(<u,vd> + <v,ud>),
                          av + bu - ud x vd,
                          b ud + a vd + u x v)

  with norm a^2 - <u,ud> and trace 2a.  The half weight on the pairing terms
  is what makes the quadratic relation x^2 - t(x)x + n(x)1 = 0 hold.

* ``ZornAlgebra``  rank 8 vector matrices [[a, u], [ud, a']] with norm
  aa' - <u,ud>; the split octonion algebra (norm composes).

* ``WSplitAlgebra``  rank 6, the multiplication of the split colour algebra
  projected onto T + dual(T): (u,ud)(v,vd) = (-(ud x vd), u x v), with
  norm -<u,ud>.

Hermitian families over a space (S, P, h, alpha) with cross product x:

* ``CayleyAlgebra``    rank 8 on S + P:
  (a,u)(b,v) = (ab - h(v,u), av + conj(b)u + u x v), norm n_S(a) + h(u,u);
  an octonion algebra with scalar involution (conj(a), -u).
* ``ColHermAlgebra``   rank 7 on R + P:
  (a,u)(b,v) = (ab - (1/2)(h(u,v)+conj h(u,v)), av + bu + u x v),
  norm a^2 + h(u,u), trace 2a.
* ``WHermAlgebra``     rank 6, (P, x) with norm h(v,v).

Every handle exposes the same protocol (family, ring, rank, unital, zero/one,
add/sub/neg/smul/mul, norm/trace, basis/coords, sample, JSON) so the identity
harness stays generic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotTraceZero, WrongRing
from .etale import EtaleAlgebra
from .rings import Ring
from .trivec import (
    HermitianSpace,
    Trivialization,
    pairing,
    vec_add,
    vec_neg,
    vec_smul,
    vec_sub,
)

__all__ = [
    "ColSplitElement",
    "ZornElement",
    "CayElement",
    "ColHermElement",
    "WSplitElement",
    "WHermElement",
    "ColSplitAlgebra",
    "ZornAlgebra",
    "CayleyAlgebra",
    "ColHermAlgebra",
    "WSplitAlgebra",
    "WHermAlgebra",
    "quadratic_decompose",
    "vector_product_of_quadratic",
]


# ------------------------------------------------------------- elements


@dataclass(frozen=True)
class ColSplitElement:
    a: object
    u: tuple
    ud: tuple


@dataclass(frozen=True)
class ZornElement:
    a: object
    u: tuple
    ud: tuple
    ap: object


@dataclass(frozen=True)
class CayElement:
    a: tuple
    u: tuple


@dataclass(frozen=True)
class ColHermElement:
    a: object
    u: tuple


@dataclass(frozen=True)
class WSplitElement:
    u: tuple
    ud: tuple


@dataclass(frozen=True)
class WHermElement:
    u: tuple


def _zvec(K):
    return (K.zero, K.zero, K.zero)


def _basis_vecs(K):
    z, o = K.zero, K.one
    return [(o, z, z), (z, o, z), (z, z, o)]


# ------------------------------------------------------------- split base


class _SplitBase:
    """Shared plumbing for the algebras over (R, lam)."""

    def __init__(self, ring: Ring, lam):
        self.ring = ring
        self.alpha = Trivialization(ring, lam)
        self.beta = self.alpha.dual()
        self.lam = lam
        self._half = ring.inv(ring.of_int(2))

    def _cross_t(self, u, v):
        return self.alpha.cross(u, v)

    def _cross_d(self, ud, vd):
        return self.beta.cross(ud, vd)

    @property
    def size(self):
        return None if self.ring.size is None else self.ring.size ** self.rank

    def enumerate_elements(self):
        coords = [self.ring.zero] * self.rank

        def rec(i):
            if i == self.rank:
                yield self.from_coords(coords)
                return
            for c in self.ring.elements():
                coords[i] = c
                yield from rec(i + 1)

        yield from rec(0)

    def eq(self, x, y):
        return x == y


class ColSplitAlgebra(_SplitBase):
    family = "col_split"
    rank = 7
    unital = True

    def zero(self):
        R = self.ring
        return ColSplitElement(R.zero, _zvec(R), _zvec(R))

    def one(self):
        R = self.ring
        return ColSplitElement(R.one, _zvec(R), _zvec(R))

    def add(self, x, y):
        R = self.ring
        return ColSplitElement(R.add(x.a, y.a), vec_add(R, x.u, y.u), vec_add(R, x.ud, y.ud))

    def sub(self, x, y):
        R = self.ring
        return ColSplitElement(R.sub(x.a, y.a), vec_sub(R, x.u, y.u), vec_sub(R, x.ud, y.ud))

    def neg(self, x):
        R = self.ring
        return ColSplitElement(R.neg(x.a), vec_neg(R, x.u), vec_neg(R, x.ud))

    def smul(self, r, x):
        R = self.ring
        return ColSplitElement(R.mul(r, x.a), vec_smul(R, r, x.u), vec_smul(R, r, x.ud))

    def mul(self, x, y):
        R = self.ring
        diag = R.add(
            R.mul(x.a, y.a),
            R.mul(self._half, R.add(pairing(R, x.u, y.ud), pairing(R, y.u, x.ud))),
        )
        t_part = vec_sub(
            R,
            vec_add(R, vec_smul(R, x.a, y.u), vec_smul(R, y.a, x.u)),
            self._cross_d(x.ud, y.ud),
        )
        d_part = vec_add(
            R,
            vec_add(R, vec_smul(R, y.a, x.ud), vec_smul(R, x.a, y.ud)),
            self._cross_t(x.u, y.u),
        )
        return ColSplitElement(diag, t_part, d_part)

    def norm(self, x):
        R = self.ring
        return R.sub(R.mul(x.a, x.a), pairing(R, x.u, x.ud))

    def trace(self, x):
        R = self.ring
        return R.add(x.a, x.a)

    def norm_trace(self, x):
        return (self.norm(x), self.trace(x))

    def involution(self, x):
        return ColSplitElement(x.a, vec_neg(self.ring, x.u), vec_neg(self.ring, x.ud))

    def basis(self):
        R = self.ring
        out = [self.one()]
        for e in _basis_vecs(R):
            out.append(ColSplitElement(R.zero, e, _zvec(R)))
        for e in _basis_vecs(R):
            out.append(ColSplitElement(R.zero, _zvec(R), e))
        return out

    def basis_labels(self):
        return ["1", "u1", "u2", "u3", "v1", "v2", "v3"]

    def coords(self, x):
        return (x.a,) + tuple(x.u) + tuple(x.ud)

    def from_coords(self, c):
        return ColSplitElement(c[0], tuple(c[1:4]), tuple(c[4:7]))

    def sample(self, rng):
        R = self.ring
        return ColSplitElement(
            R.sample(rng),
            tuple(R.sample(rng) for _ in range(3)),
            tuple(R.sample(rng) for _ in range(3)),
        )

    def element_to_json(self, x):
        R = self.ring
        return {
            "a": R.format(x.a),
            "u": [R.format(c) for c in x.u],
            "ud": [R.format(c) for c in x.ud],
        }

    def element_from_json(self, d):
        R = self.ring
        return ColSplitElement(
            R.parse(d["a"]),
            tuple(R.parse(c) for c in d["u"]),
            tuple(R.parse(c) for c in d["ud"]),
        )


class ZornAlgebra(_SplitBase):
    family = "zorn"
    rank = 8
    unital = True

    def zero(self):
        R = self.ring
        return ZornElement(R.zero, _zvec(R), _zvec(R), R.zero)

    def one(self):
        R = self.ring
        return ZornElement(R.one, _zvec(R), _zvec(R), R.one)

    def add(self, x, y):
        R = self.ring
        return ZornElement(
            R.add(x.a, y.a), vec_add(R, x.u, y.u), vec_add(R, x.ud, y.ud), R.add(x.ap, y.ap)
        )

    def sub(self, x, y):
        R = self.ring
        return ZornElement(
            R.sub(x.a, y.a), vec_sub(R, x.u, y.u), vec_sub(R, x.ud, y.ud), R.sub(x.ap, y.ap)
        )

    def neg(self, x):
        R = self.ring
        return ZornElement(R.neg(x.a), vec_neg(R, x.u), vec_neg(R, x.ud), R.neg(x.ap))

    def smul(self, r, x):
        R = self.ring
        return ZornElement(R.mul(r, x.a), vec_smul(R, r, x.u), vec_smul(R, r, x.ud), R.mul(r, x.ap))

    def mul(self, x, y):
        R = self.ring
        s1 = R.add(R.mul(x.a, y.a), pairing(R, x.u, y.ud))
        s2 = R.add(pairing(R, y.u, x.ud), R.mul(x.ap, y.ap))
        t_part = vec_sub(
            R,
            vec_add(R, vec_smul(R, x.a, y.u), vec_smul(R, y.ap, x.u)),
            self._cross_d(x.ud, y.ud),
        )
        d_part = vec_add(
            R,
            vec_add(R, vec_smul(R, y.a, x.ud), vec_smul(R, x.ap, y.ud)),
            self._cross_t(x.u, y.u),
        )
        return ZornElement(s1, t_part, d_part, s2)

    def norm(self, x):
        R = self.ring
        return R.sub(R.mul(x.a, x.ap), pairing(R, x.u, x.ud))

    def trace(self, x):
        return self.ring.add(x.a, x.ap)

    def norm_trace(self, x):
        return (self.norm(x), self.trace(x))

    def involution(self, x):
        """Canonical (scalar) involution: swap the diagonal, negate vectors."""
        R = self.ring
        return ZornElement(x.ap, vec_neg(R, x.u), vec_neg(R, x.ud), x.a)

    def basis(self):
        R = self.ring
        out = [
            ZornElement(R.one, _zvec(R), _zvec(R), R.zero),
            ZornElement(R.zero, _zvec(R), _zvec(R), R.one),
        ]
        for e in _basis_vecs(R):
            out.append(ZornElement(R.zero, e, _zvec(R), R.zero))
        for e in _basis_vecs(R):
            out.append(ZornElement(R.zero, _zvec(R), e, R.zero))
        return out

    def basis_labels(self):
        return ["e11", "e22", "u1", "u2", "u3", "v1", "v2", "v3"]

    def coords(self, x):
        return (x.a, x.ap) + tuple(x.u) + tuple(x.ud)

    def from_coords(self, c):
        return ZornElement(c[0], tuple(c[2:5]), tuple(c[5:8]), c[1])

    def sample(self, rng):
        R = self.ring
        return ZornElement(
            R.sample(rng),
            tuple(R.sample(rng) for _ in range(3)),
            tuple(R.sample(rng) for _ in range(3)),
            R.sample(rng),
        )

    def element_to_json(self, x):
        R = self.ring
        return {
            "a": R.format(x.a),
            "u": [R.format(c) for c in x.u],
            "ud": [R.format(c) for c in x.ud],
            "ap": R.format(x.ap),
        }

    def element_from_json(self, d):
        R = self.ring
        return ZornElement(
            R.parse(d["a"]),
            tuple(R.parse(c) for c in d["u"]),
            tuple(R.parse(c) for c in d["ud"]),
            R.parse(d["ap"]),
        )


class WSplitAlgebra(_SplitBase):
    """Anticommutative rank-6 algebra (u,ud)(v,vd) = (-(ud x vd), u x v)."""

    family = "w_split"
    rank = 6
    unital = False

    def zero(self):
        R = self.ring
        return WSplitElement(_zvec(R), _zvec(R))

    def add(self, x, y):
        R = self.ring
        return WSplitElement(vec_add(R, x.u, y.u), vec_add(R, x.ud, y.ud))

    def sub(self, x, y):
        R = self.ring
        return WSplitElement(vec_sub(R, x.u, y.u), vec_sub(R, x.ud, y.ud))

    def neg(self, x):
        R = self.ring
        return WSplitElement(vec_neg(R, x.u), vec_neg(R, x.ud))

    def smul(self, r, x):
        R = self.ring
        return WSplitElement(vec_smul(R, r, x.u), vec_smul(R, r, x.ud))

    def mul(self, x, y):
        R = self.ring
        return WSplitElement(
            vec_neg(R, self._cross_d(x.ud, y.ud)),
            self._cross_t(x.u, y.u),
        )

    def norm(self, x):
        return self.ring.neg(pairing(self.ring, x.u, x.ud))

    def basis(self):
        R = self.ring
        out = [WSplitElement(e, _zvec(R)) for e in _basis_vecs(R)]
        out += [WSplitElement(_zvec(R), e) for e in _basis_vecs(R)]
        return out

    def basis_labels(self):
        return ["u1", "u2", "u3", "v1", "v2", "v3"]

    def coords(self, x):
        return tuple(x.u) + tuple(x.ud)

    def from_coords(self, c):
        return WSplitElement(tuple(c[0:3]), tuple(c[3:6]))

    def sample(self, rng):
        R = self.ring
        return WSplitElement(
            tuple(R.sample(rng) for _ in range(3)),
            tuple(R.sample(rng) for _ in range(3)),
        )

    def element_to_json(self, x):
        R = self.ring
        return {"u": [R.format(c) for c in x.u], "ud": [R.format(c) for c in x.ud]}

    def element_from_json(self, d):
        R = self.ring
        return WSplitElement(
            tuple(R.parse(c) for c in d["u"]),
            tuple(R.parse(c) for c in d["ud"]),
        )


# --------------------------------------------------------- hermitian base


class _HermBase:
    def __init__(self, space: HermitianSpace):
        self.space = space
        self.S = space.S
        self.ring = space.ring

    @property
    def size(self):
        return None if self.ring.size is None else self.ring.size ** self.rank

    def enumerate_elements(self):
        coords = [self.ring.zero] * self.rank

        def rec(i):
            if i == self.rank:
                yield self.from_coords(coords)
                return
            for c in self.ring.elements():
                coords[i] = c
                yield from rec(i + 1)

        yield from rec(0)

    def eq(self, x, y):
        return x == y

    def _vec_coords(self, u):
        out = []
        for c in u:
            out.extend(c)
        return tuple(out)

    def _vec_from_coords(self, c):
        return ((c[0], c[1]), (c[2], c[3]), (c[4], c[5]))


class CayleyAlgebra(_HermBase):
    """Octonion algebra S + P from a rank-3 hermitian space."""

    family = "cay_hermitian"
    rank = 8
    unital = True

    def zero(self):
        S = self.S
        return CayElement(S.zero, _zvec(S))

    def one(self):
        S = self.S
        return CayElement(S.one, _zvec(S))

    def add(self, x, y):
        S = self.S
        return CayElement(S.add(x.a, y.a), vec_add(S, x.u, y.u))

    def sub(self, x, y):
        S = self.S
        return CayElement(S.sub(x.a, y.a), vec_sub(S, x.u, y.u))

    def neg(self, x):
        S = self.S
        return CayElement(S.neg(x.a), vec_neg(S, x.u))

    def smul(self, r, x):
        S = self.S
        s = S.scalar(r)
        return CayElement(S.mul(s, x.a), vec_smul(S, s, x.u))

    def smul_s(self, s, x):
        """Scale by an element of S (left module action on both slots)."""
        S = self.S
        return CayElement(S.mul(s, x.a), vec_smul(S, s, x.u))

    def mul(self, x, y):
        S, P = self.S, self.space
        sc = S.sub(S.mul(x.a, y.a), P.h(y.u, x.u))
        vec = vec_add(
            S,
            vec_add(S, vec_smul(S, x.a, y.u), vec_smul(S, S.conj(y.a), x.u)),
            P.cross(x.u, y.u),
        )
        return CayElement(sc, vec)

    def norm(self, x):
        return self.ring.add(self.S.norm(x.a), self.space.norm_vec(x.u))

    def trace(self, x):
        return self.S.trace(x.a)

    def norm_trace(self, x):
        return (self.norm(x), self.trace(x))

    def involution(self, x):
        return CayElement(self.S.conj(x.a), vec_neg(self.S, x.u))

    def involution_norm_trace(self, x):
        return (self.involution(x), self.norm(x), self.trace(x))

    def basis(self):
        S = self.S
        zs, os = self.ring.zero, self.ring.one
        out = [CayElement((os, zs), _zvec(S)), CayElement((zs, os), _zvec(S))]
        for comp in range(2):
            for i in range(3):
                vec = [[zs, zs], [zs, zs], [zs, zs]]
                vec[i][comp] = os
                out.append(CayElement(S.zero, tuple(tuple(c) for c in vec)))
        return out

    def basis_labels(self):
        s0, s1 = ("e1", "e2") if self.S.kind == "split" else ("1", "s")
        return [s0, s1] + [f"{p}{i}" for p in (s0 + ".", s1 + ".") for i in (1, 2, 3)]

    def coords(self, x):
        return tuple(x.a) + self._vec_coords(x.u)

    def from_coords(self, c):
        return CayElement((c[0], c[1]), self._vec_from_coords(c[2:8]))

    def sample(self, rng):
        return CayElement(self.S.sample(rng), self.space.sample_vec(rng))

    def element_to_json(self, x):
        S = self.S
        return {"a": S.to_json(x.a), "u": [S.to_json(c) for c in x.u]}

    def element_from_json(self, d):
        S = self.S
        return CayElement(S.from_json(d["a"]), tuple(S.from_json(c) for c in d["u"]))


class ColHermAlgebra(_HermBase):
    """Rank-7 flexible quadratic algebra R + P from a hermitian space."""

    family = "col_hermitian"
    rank = 7
    unital = True

    def __init__(self, space: HermitianSpace):
        super().__init__(space)
        self._half = self.ring.inv(self.ring.of_int(2))

    def zero(self):
        return ColHermElement(self.ring.zero, _zvec(self.S))

    def one(self):
        return ColHermElement(self.ring.one, _zvec(self.S))

    def add(self, x, y):
        return ColHermElement(self.ring.add(x.a, y.a), vec_add(self.S, x.u, y.u))

    def sub(self, x, y):
        return ColHermElement(self.ring.sub(x.a, y.a), vec_sub(self.S, x.u, y.u))

    def neg(self, x):
        return ColHermElement(self.ring.neg(x.a), vec_neg(self.S, x.u))

    def smul(self, r, x):
        return ColHermElement(self.ring.mul(r, x.a), vec_smul(self.S, self.S.scalar(r), x.u))

    def mul(self, x, y):
        R, S, P = self.ring, self.S, self.space
        sc = R.sub(R.mul(x.a, y.a), R.mul(self._half, P.bilinear(x.u, y.u)))
        vec = vec_add(
            S,
            vec_add(
                S,
                vec_smul(S, S.scalar(x.a), y.u),
                vec_smul(S, S.scalar(y.a), x.u),
            ),
            P.cross(x.u, y.u),
        )
        return ColHermElement(sc, vec)

    def norm(self, x):
        R = self.ring
        return R.add(R.mul(x.a, x.a), self.space.norm_vec(x.u))

    def trace(self, x):
        return self.ring.add(x.a, x.a)

    def norm_trace(self, x):
        return (self.norm(x), self.trace(x))

    def involution(self, x):
        return ColHermElement(x.a, vec_neg(self.S, x.u))

    def basis(self):
        S = self.S
        zs, os = self.ring.zero, self.ring.one
        out = [self.one()]
        for comp in range(2):
            for i in range(3):
                vec = [[zs, zs], [zs, zs], [zs, zs]]
                vec[i][comp] = os
                out.append(ColHermElement(zs, tuple(tuple(c) for c in vec)))
        return out

    def basis_labels(self):
        return ["1"] + [f"p{comp}{i}" for comp in (1, 2) for i in (1, 2, 3)]

    def coords(self, x):
        return (x.a,) + self._vec_coords(x.u)

    def from_coords(self, c):
        return ColHermElement(c[0], self._vec_from_coords(c[1:7]))

    def sample(self, rng):
        return ColHermElement(self.ring.sample(rng), self.space.sample_vec(rng))

    def element_to_json(self, x):
        return {"a": self.ring.format(x.a), "u": [self.S.to_json(c) for c in x.u]}

    def element_from_json(self, d):
        return ColHermElement(
            self.ring.parse(d["a"]), tuple(self.S.from_json(c) for c in d["u"])
        )


class WHermAlgebra(_HermBase):
    """The vector algebra (P, x) of the hermitian construction."""

    family = "w_hermitian"
    rank = 6
    unital = False

    def zero(self):
        return WHermElement(_zvec(self.S))

    def add(self, x, y):
        return WHermElement(vec_add(self.S, x.u, y.u))

    def sub(self, x, y):
        return WHermElement(vec_sub(self.S, x.u, y.u))

    def neg(self, x):
        return WHermElement(vec_neg(self.S, x.u))

    def smul(self, r, x):
        return WHermElement(vec_smul(self.S, self.S.scalar(r), x.u))

    def mul(self, x, y):
        return WHermElement(self.space.cross(x.u, y.u))

    def norm(self, x):
        return self.space.norm_vec(x.u)

    def basis(self):
        S = self.S
        zs, os = self.ring.zero, self.ring.one
        out = []
        for comp in range(2):
            for i in range(3):
                vec = [[zs, zs], [zs, zs], [zs, zs]]
                vec[i][comp] = os
                out.append(WHermElement(tuple(tuple(c) for c in vec)))
        return out

    def basis_labels(self):
        return [f"p{comp}{i}" for comp in (1, 2) for i in (1, 2, 3)]

    def coords(self, x):
        return self._vec_coords(x.u)

    def from_coords(self, c):
        return WHermElement(self._vec_from_coords(c))

    def sample(self, rng):
        return WHermElement(self.space.sample_vec(rng))

    def element_to_json(self, x):
        return {"u": [self.S.to_json(c) for c in x.u]}

    def element_from_json(self, d):
        return WHermElement(tuple(self.S.from_json(c) for c in d["u"]))


# --------------------------------------------- quadratic-algebra helpers


def quadratic_decompose(A, x):
    """Split x = r*1 + x0 with trace(x0) = 0; returns (r, x0) = (t(x)/2, ...)."""
    if not A.unital:
        raise WrongRing(f"{A.family} has no unit; cannot decompose")
    R = A.ring
    r = R.mul(R.inv(R.of_int(2)), A.trace(x))
    x0 = A.sub(x, A.smul(r, A.one()))
    return (r, x0)


def vector_product_of_quadratic(A, x0, y0):
    """Product of trace-zero parts projected back onto the trace-zero module.

    For trace-zero x0, y0 the product decomposes as
    x0*y0 = -(1/2) n(x0,y0) 1 + x0 X y0 with n the polarized norm.
    """
    R = A.ring
    if A.trace(x0) != R.zero or A.trace(y0) != R.zero:
        raise NotTraceZero("vector product requires trace-zero arguments")
    p = A.mul(x0, y0)
    _, proj = quadratic_decompose(A, p)
    return proj
