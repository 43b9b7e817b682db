"""Finite characteristic-p rings presented by field data.

A ring here is F + U + W as an F-module: F = GF(p^r), dim U = s, and
dim W = t + lambda, where the first t coordinates of W carry structural
matrices A_1..A_t and the remaining lambda coordinates are annihilator
coordinates.  Each U coordinate twists by a Frobenius power sigma_i, each
W coordinate by theta_k, and multiplication of x = (a, u, w) and
y = (a', u', w') is

    F part:  a a'
    U part:  a u'_i + u_i sigma_i(a')
    W part:  a w'_k + w_k theta_k(a') + sum_{ij} A_k[i,j] u_i sigma_i(u'_j)

with the structural sum present only for k <= t.  Elements are tuples of
1 + s + t + lambda field codes; batched operations take arrays with that
trailing axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gl, linalg
from .gf import GF

__all__ = [
    "AutomorphismConstraintError", "RingSpec", "Ring", "AxiomReport",
    "StructureReport", "check_axioms", "ring_structure", "IsoWitness",
    "iso_test", "verify_witness", "equivalent_spec",
]

_TABLE_LIMIT = 4096
_EXHAUSTIVE_TRIPLES = 1 << 26


class AutomorphismConstraintError(ValueError):
    """theta_k must equal sigma_i + sigma_j wherever A_k[i, j] is nonzero."""

    def __init__(self, i, j, k):
        self.indices = (i, j, k)
        super().__init__(
            f"structural entry A_{k}[{i},{j}] is nonzero but "
            f"theta_{k} != sigma_{i} + sigma_{j}"
        )


@dataclass
class RingSpec:
    field: GF
    s: int
    t: int
    lam: int
    matrices: np.ndarray      # (t, s, s) element codes
    sigma: tuple              # s Frobenius exponents
    theta: tuple              # t + lam Frobenius exponents

    @property
    def n(self) -> int:
        return 1 + self.s + self.t + self.lam

    @property
    def order(self) -> int:
        return self.field.q ** self.n

    def invariants(self) -> tuple:
        return (self.field.p, self.n, self.field.r, self.s, self.t, self.lam)

    def to_dict(self) -> dict:
        return {
            "p": self.field.p,
            "r": self.field.r,
            "modulus": list(self.field.modulus),
            "s": self.s,
            "t": self.t,
            "lambda": self.lam,
            "matrices": [[[int(x) for x in row] for row in M] for M in self.matrices],
            "sigma": [int(e) for e in self.sigma],
            "theta": [int(e) for e in self.theta],
        }

    @classmethod
    def from_dict(cls, d) -> "RingSpec":
        F = GF(int(d["p"]), int(d.get("r", 1)), d.get("modulus"))
        s = int(d["s"])
        t = int(d["t"])
        lam = int(d.get("lambda", 0))
        mats = np.asarray(d["matrices"], dtype=np.int64)
        sigma = tuple(int(e) for e in d.get("sigma", [0] * s))
        theta = tuple(int(e) for e in d.get("theta", [0] * (t + lam)))
        return cls(F, s, t, lam, mats, sigma, theta)


class Ring:
    """A validated ring; construction rejects malformed presentations."""

    def __init__(self, spec: RingSpec):
        F = spec.field
        s, t, lam = spec.s, spec.t, spec.lam
        if s < 1 or t < 1 or lam < 0:
            raise ValueError(f"need s >= 1, t >= 1, lambda >= 0, got {(s, t, lam)}")
        if t > s * s:
            raise ValueError(f"t must lie in [1, {s * s}], got {t}")
        mats = np.asarray(spec.matrices, dtype=np.int64)
        if mats.shape != (t, s, s):
            raise ValueError(
                f"expected {t} structural matrices of shape {s}x{s}, got {mats.shape}"
            )
        F._check_array(mats)
        if len(spec.sigma) != s or len(spec.theta) != t + lam:
            raise ValueError(
                f"need {s} sigma and {t + lam} theta exponents, "
                f"got {len(spec.sigma)} and {len(spec.theta)}"
            )
        sigma = tuple(int(e) % F.r for e in spec.sigma)
        theta = tuple(int(e) % F.r for e in spec.theta)
        if linalg.rank(F, mats.reshape(t, s * s)) != t:
            raise ValueError("structural matrices are linearly dependent")
        for k in range(t):
            for i in range(s):
                for j in range(s):
                    if mats[k, i, j] and theta[k] != (sigma[i] + sigma[j]) % F.r:
                        raise AutomorphismConstraintError(i + 1, j + 1, k + 1)
        self.spec = RingSpec(F, s, t, lam, mats, sigma, theta)
        self.field = F
        self.s, self.t, self.lam = s, t, lam
        self.sigma, self.theta = sigma, theta
        self.matrices = mats
        self.n = spec.n
        self.order = F.q ** self.n
        self._mul_t = None
        self._add_t = None

    # -- elements --

    def zero(self) -> tuple:
        return (0,) * self.n

    def one(self) -> tuple:
        return (1,) + (0,) * (self.n - 1)

    def element(self, i: int) -> tuple:
        return tuple(int(x) for x in linalg.decode_codes(np.int64(i), self.field.q, self.n))

    def index(self, x) -> int:
        return int(linalg.encode_rows(np.asarray(x, dtype=np.int64), self.field.q))

    def element_array(self) -> np.ndarray:
        if self.order > 10 ** 6:
            raise ValueError(f"refusing to materialize {self.order} elements")
        return linalg.decode_codes(np.arange(self.order), self.field.q, self.n)

    # -- arithmetic --

    def add(self, x, y):
        F = self.field
        xa = np.asarray(x, dtype=np.int64)
        ya = np.asarray(y, dtype=np.int64)
        out = F._add_raw(xa, ya)
        if isinstance(x, tuple) and isinstance(y, tuple):
            return tuple(int(v) for v in out)
        return out

    def neg(self, x):
        out = self.field._neg_raw(np.asarray(x, dtype=np.int64))
        if isinstance(x, tuple):
            return tuple(int(v) for v in out)
        return out

    def mul(self, x, y):
        out = self.mul_batch(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        if isinstance(x, tuple) and isinstance(y, tuple):
            return tuple(int(v) for v in out)
        return out

    def mul_batch(self, X, Y) -> np.ndarray:
        """Product on arrays of shape (..., n); broadcasts like numpy."""
        F = self.field
        s, t, lam = self.s, self.t, self.lam
        X = np.asarray(X, dtype=np.int64)
        Y = np.asarray(Y, dtype=np.int64)
        X, Y = np.broadcast_arrays(X, Y)
        out = np.zeros_like(X)
        x0, y0 = X[..., 0], Y[..., 0]
        mul, add, frob = F._mul_raw, F._add_raw, F._frob_raw
        out[..., 0] = mul(x0, y0)
        for i in range(s):
            xi, yi = X[..., 1 + i], Y[..., 1 + i]
            out[..., 1 + i] = add(mul(x0, yi), mul(xi, frob(y0, self.sigma[i])))
        # structural products u_i sigma_i(u'_j), reused across the k loop
        prods = [
            [mul(X[..., 1 + i], frob(Y[..., 1 + j], self.sigma[i])) for j in range(s)]
            for i in range(s)
        ]
        for k in range(t + lam):
            xw, yw = X[..., 1 + s + k], Y[..., 1 + s + k]
            acc = add(mul(x0, yw), mul(xw, frob(y0, self.theta[k])))
            if k < t:
                A = self.matrices[k]
                for i in range(s):
                    for j in range(s):
                        a = int(A[i, j])
                        if a:
                            acc = add(acc, mul(a, prods[i][j]))
            out[..., 1 + s + k] = acc
        return out

    def mul_table(self) -> np.ndarray:
        if self._mul_t is None:
            N = self.order
            if N > _TABLE_LIMIT:
                raise ValueError(
                    f"multiplication table capped at order {_TABLE_LIMIT}, ring has {N}"
                )
            E = self.element_array()
            prod = self.mul_batch(E[:, None, :], E[None, :, :])
            self._mul_t = linalg.encode_rows(prod, self.field.q).astype(np.int64)
        return self._mul_t

    def add_table(self) -> np.ndarray:
        if self._add_t is None:
            N = self.order
            if N > _TABLE_LIMIT:
                raise ValueError(
                    f"addition table capped at order {_TABLE_LIMIT}, ring has {N}"
                )
            E = self.element_array()
            tot = self.field._add_raw(E[:, None, :], E[None, :, :])
            self._add_t = linalg.encode_rows(tot, self.field.q).astype(np.int64)
        return self._add_t

    def __repr__(self):
        return (
            f"Ring(|R|={self.order}, F=GF({self.field.q}), s={self.s}, "
            f"t={self.t}, lambda={self.lam})"
        )


# -- axiom checking --

@dataclass
class AxiomReport:
    ok: bool
    mode: str
    checked: dict
    counterexample: dict | None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "mode": self.mode,
            "checked": dict(self.checked),
            "counterexample": self.counterexample,
        }


def _first_bad(ring, law, mask, x=None):
    """mask is a boolean failure array; report the first failing triple."""
    idx = np.argwhere(mask)
    if len(idx) == 0:
        return None
    first = idx[0]
    trip = [int(v) for v in ([x] if x is not None else []) + list(first)]
    return {"law": law, "elements": [ring.element(i) for i in trip]}


def check_axioms(ring: Ring, mode: str = "exhaustive", seed: int = 42,
                 samples: int = 20000) -> AxiomReport:
    """Associativity, both distributive laws, and characteristic p.

    Exhaustive mode walks every triple through the cached tables; sampled
    mode draws seeded random triples and evaluates the product formula
    directly, so the two modes exercise different code paths.
    """
    N = ring.order
    p = ring.field.p
    if mode == "exhaustive":
        if N ** 3 > _EXHAUSTIVE_TRIPLES:
            raise ValueError(
                f"{N}^3 triples exceed the exhaustive bound 2^26; use mode='sampled'"
            )
        T = ring.mul_table()
        S = ring.add_table()
        checked = {
            "associativity": N ** 3,
            "left_distributivity": N ** 3,
            "right_distributivity": N ** 3,
            "characteristic": N,
        }
        for x in range(N):
            tx = T[x]
            bad = T[T[x], :] != tx[T]
            if bad.any():
                return AxiomReport(False, mode, checked,
                                   _first_bad(ring, "associativity", bad, x))
            bad = T[x][S] != S[tx[:, None], tx[None, :]]
            if bad.any():
                return AxiomReport(False, mode, checked,
                                   _first_bad(ring, "left_distributivity", bad, x))
            cx = T[:, x]
            bad = T[S, x] != S[cx[:, None], cx[None, :]]
            if bad.any():
                return AxiomReport(False, mode, checked,
                                   _first_bad(ring, "right_distributivity", bad, x))
        acc = np.arange(N)
        for _ in range(p - 1):
            acc = S[acc, np.arange(N)]
        if (acc != 0).any():
            x = int(np.argwhere(acc != 0)[0][0])
            return AxiomReport(False, mode, checked,
                               {"law": "characteristic", "elements": [ring.element(x)]})
        return AxiomReport(True, mode, checked, None)

    if mode != "sampled":
        raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {mode!r}")
    rng = np.random.default_rng(seed)
    q, n = ring.field.q, ring.n
    X, Y, Z = (rng.integers(0, q, size=(samples, n), dtype=np.int64) for _ in range(3))
    checked = {
        "associativity": samples,
        "left_distributivity": samples,
        "right_distributivity": samples,
        "characteristic": samples,
    }

    def report(law, mask, *elems):
        i = int(np.argwhere(mask)[0][0])
        return AxiomReport(False, mode, checked, {
            "law": law,
            "elements": [tuple(int(v) for v in e[i]) for e in elems],
        })

    bad = (ring.mul_batch(ring.mul_batch(X, Y), Z)
           != ring.mul_batch(X, ring.mul_batch(Y, Z))).any(axis=1)
    if bad.any():
        return report("associativity", bad, X, Y, Z)
    YZ = ring.add(Y, Z)
    bad = (ring.mul_batch(X, YZ)
           != ring.add(ring.mul_batch(X, Y), ring.mul_batch(X, Z))).any(axis=1)
    if bad.any():
        return report("left_distributivity", bad, X, Y, Z)
    bad = (ring.mul_batch(YZ, X)
           != ring.add(ring.mul_batch(Y, X), ring.mul_batch(Z, X))).any(axis=1)
    if bad.any():
        return report("right_distributivity", bad, X, Y, Z)
    acc = X
    for _ in range(p - 1):
        acc = ring.add(acc, X)
    bad = (acc != 0).any(axis=1)
    if bad.any():
        return report("characteristic", bad, X)
    return AxiomReport(True, mode, checked, None)


# -- structure --

@dataclass
class StructureReport:
    order: int
    invariants: tuple        # (p, n, r, s, t, lambda)
    radical_dims: tuple      # (dim M, dim M^2, dim ann M) over F
    commutative: bool
    f_central: bool

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "invariants": list(self.invariants),
            "radical_dims": list(self.radical_dims),
            "commutative": self.commutative,
            "f_central": self.f_central,
        }


def _radical_basis(ring: Ring):
    """Z_p-basis elements of M = U + W, as element tuples."""
    F = ring.field
    out = []
    for slot in range(1, ring.n):
        for d in range(F.r):
            e = [0] * ring.n
            e[slot] = F.p ** d
            out.append(tuple(e))
    return out

def _to_zp_digits(F, codes):
    return np.concatenate([
        np.array([(c // F.p ** i) % F.p for i in range(F.r)]) for c in codes
    ])


def ring_structure(ring: Ring) -> StructureReport:
    F = ring.field
    s, t, lam = ring.s, ring.t, ring.lam
    basis = _radical_basis(ring)
    # dim of M^2: products of radical basis pairs span it additively
    Fp = GF(F.p) if F.r > 1 else F
    prods = []
    for b1 in basis:
        for b2 in basis:
            w = ring.mul(b1, b2)[1 + s:]
            prods.append(_to_zp_digits(F, w))
    rank_zp = linalg.rank(Fp, np.array(prods, dtype=np.int64))
    assert rank_zp % F.r == 0
    dim_m2 = rank_zp // F.r
    # ann(M): all of the W block, plus the U vectors killed on both sides
    kill = 0
    for a_code in range(F.q ** s):
        u = linalg.decode_codes(np.int64(a_code), F.q, s)
        x = (0,) + tuple(int(v) for v in u) + (0,) * (t + lam)
        if all(
            ring.mul(x, b) == ring.zero() and ring.mul(b, x) == ring.zero()
            for b in basis
        ):
            kill += 1
    dim_u_ann = 0
    while F.q ** (dim_u_ann + 1) <= kill:
        dim_u_ann += 1
    assert F.q ** dim_u_ann == kill, "annihilator solutions are not a subspace"
    # commutativity: table check when small, complete basis-pair check else
    if ring.order <= _TABLE_LIMIT:
        T = ring.mul_table()
        commutative = bool((T == T.T).all())
    else:
        full = [ring.one()] + basis
        commutative = all(
            ring.mul(b1, b2) == ring.mul(b2, b1) for b1 in full for b2 in full
        )
    f_central = all(e == 0 for e in ring.sigma) and all(e == 0 for e in ring.theta)
    return StructureReport(
        order=ring.order,
        invariants=ring.spec.invariants(),
        radical_dims=(s + t + lam, dim_m2, dim_u_ann + t + lam),
        commutative=commutative,
        f_central=f_central,
    )


# -- isomorphism testing --

@dataclass
class IsoWitness:
    sigma: int               # global Frobenius exponent
    C: np.ndarray            # base change on U (s x s, invertible)
    B: np.ndarray            # recombination on the structural W block (t x t)
    v_perm: tuple            # source tail slot -> target tail slot

    def to_dict(self) -> dict:
        return {
            "sigma": int(self.sigma),
            "C": [[int(x) for x in row] for row in self.C],
            "B": [[int(x) for x in row] for row in self.B],
            "v_perm": [int(i) for i in self.v_perm],
        }


def _tail_alignment(theta_a, theta_d, t):
    """Match equal tail exponents; None when the multisets differ."""
    tail_a = list(theta_a[t:])
    tail_d = list(theta_d[t:])
    if sorted(tail_a) != sorted(tail_d):
        return None
    perm = [-1] * len(tail_a)
    used = [False] * len(tail_d)
    for i, e in enumerate(tail_a):
        for j, f in enumerate(tail_d):
            if not used[j] and e == f:
                perm[i] = j
                used[j] = True
                break
    return tuple(perm)


def _psi_apply(ringA: Ring, witness: IsoWitness, X):
    """The element map induced by a witness, on arrays (..., n)."""
    F = ringA.field
    s, t, lam = ringA.s, ringA.t, ringA.lam
    E = linalg.inv_mat(F, witness.C)
    X = np.asarray(X, dtype=np.int64)
    out = np.zeros_like(X)
    sx = F._frob_raw(X, witness.sigma)
    out[..., 0] = sx[..., 0]
    for nu in range(s):
        acc = np.zeros_like(sx[..., 0])
        for i in range(s):
            acc = F._add_raw(acc, F._mul_raw(int(E[nu, i]), sx[..., 1 + i]))
        out[..., 1 + nu] = acc
    for rho in range(t):
        acc = np.zeros_like(sx[..., 0])
        for k in range(t):
            acc = F._add_raw(acc, F._mul_raw(int(witness.B[k, rho]), sx[..., 1 + s + k]))
        out[..., 1 + s + rho] = acc
    for mu in range(lam):
        out[..., 1 + s + t + witness.v_perm[mu]] = sx[..., 1 + s + t + mu]
    return out


def verify_witness(specA: RingSpec, specD: RingSpec, witness: IsoWitness,
                   exhaustive: bool = False) -> bool:
    """Check the witness map is a bijective homomorphism.

    The map is semilinear in every coordinate block, so additivity is
    structural; bijectivity needs C, B invertible and the tail aligned; and
    multiplicativity on all Z_p-basis pairs is complete by biadditivity.
    Exhaustive mode checks every element pair instead.
    """
    ringA, ringD = Ring(specA), Ring(specD)
    F = ringA.field
    if linalg.det(F, witness.C) == 0 or linalg.det(F, witness.B) == 0:
        return False
    if sorted(witness.v_perm) != list(range(ringA.lam)):
        return False
    one = np.array(ringA.one(), dtype=np.int64)
    if not (_psi_apply(ringA, witness, one) == one).all():
        return False
    if exhaustive:
        if ringA.order > 4096:
            raise ValueError("exhaustive witness check capped at order 4096")
        E = ringA.element_array()
        X = np.repeat(E, len(E), axis=0)
        Y = np.tile(E, (len(E), 1))
    else:
        basis = np.array([ringA.one()] + _radical_basis(ringA), dtype=np.int64)
        X = np.repeat(basis, len(basis), axis=0)
        Y = np.tile(basis, (len(basis), 1))
    lhs = _psi_apply(ringA, witness, ringA.mul_batch(X, Y))
    rhs = ringD.mul_batch(_psi_apply(ringA, witness, X), _psi_apply(ringA, witness, Y))
    return bool((lhs == rhs).all())


def _check_same_invariants(specA: RingSpec, specD: RingSpec):
    if specA.field != specD.field:
        raise ValueError(
            f"field presentations differ: {specA.field!r} vs {specD.field!r}"
        )
    if specA.invariants() != specD.invariants():
        raise ValueError(
            f"invariant mismatch: {specA.invariants()} vs {specD.invariants()}"
        )


def _row_twisted(F, Cs, sigma):
    """Row mu of each C twisted by sigma_mu (the experimental reading)."""
    out = Cs.copy()
    for mu, e in enumerate(sigma):
        if e:
            out[:, mu, :] = F._frob_raw(out[:, mu, :], e)
    return out


def iso_test(specA: RingSpec, specD: RingSpec, mode: str = "central",
             certify: bool = True,
             experimental_row_twist: bool = False) -> IsoWitness | None:
    """Search for an isomorphism witness; None means no certified witness.

    Modes:
      central      both presentations have identity automorphisms only
      global_twist automorphism lists match as multisets; candidate
                   witnesses must pass the element-map certification
      s1t1         s = t = 1, decided by the scalar criterion
    """
    ringA, ringD = Ring(specA), Ring(specD)
    _check_same_invariants(specA, specD)
    F = ringA.field
    s, t = ringA.s, ringA.t
    if experimental_row_twist and mode != "global_twist":
        raise ValueError("experimental_row_twist applies to mode 'global_twist' only")

    if mode == "s1t1":
        if s != 1 or t != 1:
            raise ValueError(f"mode 's1t1' needs s = t = 1, got s={s}, t={t}")
        if ringA.sigma != ringD.sigma:
            return None
        perm = _tail_alignment(ringA.theta, ringD.theta, t)
        if perm is None:
            return None
        a = int(ringA.matrices[0, 0, 0])
        d = int(ringD.matrices[0, 0, 0])
        witness = IsoWitness(
            sigma=0,
            C=linalg.identity(1),
            B=np.array([[F.mul(d, F.inv(a))]], dtype=np.int64),
            v_perm=perm,
        )
        if certify and not verify_witness(specA, specD, witness):
            return None
        return witness

    if mode == "central":
        idA = all(e == 0 for e in ringA.sigma + ringA.theta)
        idD = all(e == 0 for e in ringD.sigma + ringD.theta)
        if not (idA and idD):
            raise ValueError("mode 'central' requires identity automorphisms")
    elif mode == "global_twist":
        if sorted(ringA.sigma) != sorted(ringD.sigma):
            return None
        if sorted(ringA.theta[:t]) != sorted(ringD.theta[:t]):
            return None
    else:
        raise ValueError(f"unknown mode {mode!r}")
    perm = _tail_alignment(ringA.theta, ringD.theta, t)
    if perm is None:
        return None

    m = s * s
    VA = ringA.matrices.reshape(t, m)
    D_rows = ringD.matrices.reshape(t, m)
    target_R, _ = linalg.rref(F, D_rows)
    target_key = int(linalg.encode_rows(target_R.reshape(-1), F.q))
    Gmats = gl.enumerate_gl(F, s)
    if experimental_row_twist:
        right = _row_twisted(F, Gmats, ringA.sigma)
        P = _kron_pairs(F, Gmats, right)
    else:
        P = linalg.kron_batch(F, Gmats)
    for e in F.automorphism_exponents():
        Ve = F._frob_raw(VA, e)
        imgs = linalg.linmap_apply(F, Ve, P)            # (G, t, m)
        R, ranks = linalg.rref_batch(F, imgs)
        keys = linalg.encode_rows(R.reshape(len(Gmats), t * m), F.q)
        for ci in np.where((keys == target_key) & (ranks == t))[0]:
            C = Gmats[ci]
            X = imgs[ci]                                # t rows, the twisted A_k
            cols = []
            for rho in range(t):
                beta = linalg.solve(F, X.T, D_rows[rho])
                if beta is None:
                    break
                cols.append(beta)
            else:
                B = np.stack(cols, axis=1)
                if linalg.det(F, B) == 0:
                    continue
                witness = IsoWitness(sigma=e, C=C, B=B, v_perm=perm)
                if not certify or verify_witness(specA, specD, witness):
                    return witness
    return None


def _kron_pairs(F, left, right):
    L = np.asarray(left, dtype=np.int64)
    Rt = np.asarray(right, dtype=np.int64)
    G, s, _ = L.shape
    out = F._mul_raw(L[:, :, None, :, None], Rt[:, None, :, None, :])
    return out.reshape(G, s * s, s * s)


def equivalent_spec(spec: RingSpec, C, sigma_e: int = 0, B=None,
                    row_twist: bool = True, tail_perm=None) -> RingSpec:
    """The presentation reached by base change C, global Frobenius power
    sigma_e, and structural recombination B; the tail can be permuted.

    Row twisting applies sigma_i to row i of the right-hand C factor, which
    is what keeps the result a valid presentation whenever the sigma lists
    make that meaningful; the supported regimes are identity automorphisms,
    a shared sigma value with C over its fixed subfield, and s = t = 1.
    Validation happens in the Ring constructor of the result.
    """
    ring = Ring(spec)
    F = ring.field
    s, t, lam = ring.s, ring.t, ring.lam
    C = linalg.mat(F, C)
    if linalg.det(F, C) == 0:
        raise ValueError("C is singular")
    if B is None:
        B = linalg.identity(t)
    B = linalg.mat(F, B)
    if linalg.det(F, B) == 0:
        raise ValueError("B is singular")
    right = C
    if row_twist:
        right = np.stack([F.frobenius(C[mu], ring.sigma[mu]) for mu in range(s)])
    twisted = []
    for k in range(t):
        Ak = F.frobenius(ring.matrices[k], sigma_e)
        twisted.append(linalg.mat_mul(F, linalg.mat_mul(F, C.T, Ak), right))
    new_mats = []
    new_theta_head = []
    for rho in range(t):
        M = np.zeros((s, s), dtype=np.int64)
        for k in range(t):
            M = F._add_raw(M, F._mul_raw(int(B[k, rho]), twisted[k]))
        new_mats.append(M)
        need = {
            (ring.sigma[i] + ring.sigma[j]) % F.r
            for i in range(s)
            for j in range(s)
            if M[i, j]
        }
        if len(need) > 1:
            raise ValueError(
                "transformation leaves the supported regime: theta is overdetermined"
            )
        new_theta_head.append(need.pop() if need else ring.theta[rho])
    if tail_perm is None:
        tail_perm = tuple(range(lam))
    tail = list(ring.theta[t:])
    new_tail = [0] * lam
    for mu in range(lam):
        new_tail[tail_perm[mu]] = tail[mu]
    return RingSpec(
        F, s, t, lam,
        np.stack(new_mats) if new_mats else np.zeros((0, s, s), dtype=np.int64),
        ring.sigma,
        tuple(new_theta_head) + tuple(new_tail),
    )
