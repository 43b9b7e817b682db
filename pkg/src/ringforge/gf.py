"""Galois field arithmetic on integer element codes.

An element sum(c_i x^i) of GF(p^r) is stored as the integer sum(c_i p^i),
so the codes 0..q-1 enumerate the field and double as table indices.  All
operations accept either plain ints or numpy arrays of codes; scalar calls
go through python lists, batched calls through numpy gathers, both reading
the same precomputed tables.  Fields are immutable and safe to share.
"""

from __future__ import annotations

from itertools import product

import numpy as np

__all__ = ["GF", "is_prime"]

# full q x q add/mul tables (and their list twins for scalar calls) are only
# built below this size; larger fields fall back to log/exp and digit ops
_TABLE_LIMIT = 1024
_Q_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# polynomial helpers on ascending coefficient lists over Z_p

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    # m is monic
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    del a[dm:]
    return a


def _is_irreducible(coeffs, p):
    r = len(coeffs) - 1
    if r < 1 or coeffs[-1] != 1:
        return False
    if r == 1:
        return True
    for d in range(1, r // 2 + 1):
        for tail in product(range(p), repeat=d):
            div = list(tail) + [1]
            rem = _poly_mod(coeffs, div, p)
            # remainder of coeffs modulo the candidate divisor
            rem = _poly_trim(rem)
            if not rem:
                return False
    return True


def _default_modulus(p, r):
    # least monic irreducible, ordered by the integer encoding of the
    # non-leading coefficients
    for m in range(p ** r):
        coeffs = [(m // p ** i) % p for i in range(r)] + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class GF:
    """The field GF(p^r) with elements coded as integers in [0, p^r)."""

    def __init__(self, p: int, r: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if r < 1:
            raise ValueError(f"extension degree must be >= 1, got {r}")
        q = p ** r
        if q > _Q_LIMIT:
            raise ValueError(f"field order {q} exceeds supported bound {_Q_LIMIT}")
        self.p = p
        self.r = r
        self.q = q
        if modulus is None:
            self.modulus = _default_modulus(p, r)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != r + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree r")
            if not _is_irreducible(list(modulus), p):
                raise ValueError(f"modulus {list(modulus)} is reducible over Z_{p}")
            self.modulus = modulus
        self._build_tables()

    # -- construction of the arithmetic tables --

    def _code_mul(self, a, b):
        # polynomial multiplication used only while bootstrapping tables
        p = self.p
        pa = [(a // p ** i) % p for i in range(self.r)]
        pb = [(b // p ** i) % p for i in range(self.r)]
        prod = _poly_mod(_poly_mul(pa, pb, p), list(self.modulus), p)
        return sum(c * p ** i for i, c in enumerate(prod))

    def _build_tables(self):
        p, r, q = self.p, self.r, self.q
        if r == 1:
            self._exp = self._log = None
            inv = [0] * q
            for a in range(1, q):
                inv[a] = pow(a, p - 2, p)
            self._inv = np.array(inv, dtype=np.int64)
            self._neg = (-np.arange(q)) % p
            self._frob = None
            self._gen = None
        else:
            # find a multiplicative generator, then log/exp tables
            gen = None
            for g in range(1, q):
                x, n = g, 1
                while x != 1:
                    x = self._code_mul(x, g)
                    n += 1
                if n == q - 1:
                    gen = g
                    break
            assert gen is not None
            self._gen = gen
            exp = np.zeros(2 * (q - 1), dtype=np.int64)
            log = np.full(q, -1, dtype=np.int64)
            x = 1
            for i in range(q - 1):
                exp[i] = x
                log[x] = i
                x = self._code_mul(x, gen)
            exp[q - 1:] = exp[: q - 1]
            self._exp, self._log = exp, log
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
            self._inv = inv
            digits = np.stack(
                [(np.arange(q) // p ** i) % p for i in range(r)], axis=1
            )
            self._digits = digits
            self._pows = p ** np.arange(r, dtype=np.int64)
            self._neg = ((-digits) % p) @ self._pows
            frob = np.zeros((r, q), dtype=np.int64)
            frob[0] = np.arange(q)
            for e in range(1, r):
                prev = frob[e - 1]
                nxt = np.zeros(q, dtype=np.int64)
                nz = prev != 0
                nxt[nz] = exp[(log[prev[nz]] * p) % (q - 1)]
                frob[e] = nxt
            self._frob = frob
        if r > 1 and q <= _TABLE_LIMIT:
            codes = np.arange(q)
            add = (self._digits[:, None, :] + self._digits[None, :, :]) % p
            self._add_t = add @ self._pows
            with np.errstate(all="ignore"):
                lg = self._log
                mul = self._exp[lg[:, None] + lg[None, :]]
            mul[0, :] = 0
            mul[:, 0] = 0
            self._mul_t = mul
            self._add_l = self._add_t.tolist()
            self._mul_l = mul.tolist()
        else:
            self._add_t = self._mul_t = None
            self._add_l = self._mul_l = None
        self._neg_l = self._neg.tolist()
        self._inv_l = self._inv.tolist()
        self._frob_l = self._frob.tolist() if self._frob is not None else None
        self._squares = None

    # -- element validation --

    def _check(self, *codes):
        for a in codes:
            if not 0 <= a < self.q:
                raise ValueError(
                    f"element code {a} out of range for GF({self.q})"
                )

    def _check_array(self, a):
        if a.size and (a.min() < 0 or a.max() >= self.q):
            raise ValueError(f"element codes out of range for GF({self.q})")

    # -- arithmetic; int in -> int out, array in -> array out --

    def add(self, a, b):
        if isinstance(a, (int, np.integer)) and isinstance(b, (int, np.integer)):
            self._check(a, b)
            if self.r == 1:
                return (a + b) % self.p
            if self._add_l is not None:
                return self._add_l[a][b]
        a = np.asarray(a)
        b = np.asarray(b)
        self._check_array(a)
        self._check_array(b)
        return self._add_raw(a, b)

    def _add_raw(self, a, b):
        if self.r == 1:
            return (a + b) % self.p
        if self._add_t is not None:
            return self._add_t[a, b]
        d = (self._digits[a] + self._digits[b]) % self.p
        return d @ self._pows

    def neg(self, a):
        if isinstance(a, (int, np.integer)):
            self._check(a)
            return self._neg_l[a]
        a = np.asarray(a)
        self._check_array(a)
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if isinstance(a, (int, np.integer)) and isinstance(b, (int, np.integer)):
            self._check(a, b)
            if self.r == 1:
                return (a * b) % self.p
            if self._mul_l is not None:
                return self._mul_l[a][b]
            if a == 0 or b == 0:
                return 0
            return int(self._exp[self._log[a] + self._log[b]])
        a = np.asarray(a)
        b = np.asarray(b)
        self._check_array(a)
        self._check_array(b)
        return self._mul_raw(a, b)

    def _mul_raw(self, a, b):
        if self.r == 1:
            return (a * b) % self.p
        if self._mul_t is not None:
            return self._mul_t[a, b]
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        if isinstance(a, (int, np.integer)):
            self._check(a)
            if a == 0:
                raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
            return self._inv_l[a]
        a = np.asarray(a)
        self._check_array(a)
        if (a == 0).any():
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        """a**k for integer k; negative k inverts first."""
        if isinstance(a, (int, np.integer)):
            self._check(a)
            if a == 0:
                if k == 0:
                    return 1
                if k < 0:
                    raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
                return 0
            if k < 0:
                a, k = self.inv(a), -k
            out, base = 1, a
            while k:
                if k & 1:
                    out = self.mul(out, base)
                base = self.mul(base, base)
                k >>= 1
            return out
        a = np.asarray(a)
        self._check_array(a)
        if k < 0:
            a, k = self.inv(a), -k
        if self.r == 1:
            return np.vectorize(lambda x: pow(int(x), k, self.p) if x or k else 1)(a)
        if k == 0:
            return np.ones_like(a)
        out = self._exp[(self._log[a] * k) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def frobenius(self, a, e: int = 1):
        """Apply x -> x^(p^e); e reduces mod r."""
        e = e % self.r
        if isinstance(a, (int, np.integer)):
            self._check(a)
            if self.r == 1:
                return int(a)
            return self._frob_l[e][a]
        a = np.asarray(a)
        self._check_array(a)
        if self.r == 1:
            return a.copy()
        return self._frob[e][a]

    def _frob_raw(self, a, e):
        if self.r == 1:
            return a
        return self._frob[e % self.r][a]

    def _neg_raw(self, a):
        if self.r == 1:
            return (-a) % self.p
        return self._neg[a]

    def multiplicative_generator(self) -> int:
        """Least code generating the unit group."""
        if self._gen is None:
            for a in self.units():
                x, order = a, 1
                while x != 1:
                    x = self.mul(x, a)
                    order += 1
                if order == self.q - 1:
                    self._gen = a
                    break
        return self._gen

    # -- structure queries --

    def units(self):
        return range(1, self.q)

    def squares(self):
        """Sorted codes of all squares (including 0)."""
        if self._squares is None:
            s = {0}
            for a in self.units():
                s.add(self.mul(a, a))
            self._squares = tuple(sorted(s))
        return self._squares

    def least_nonsquare(self) -> int:
        """Least unit code that is not a square; undefined in char 2."""
        if self.p == 2:
            raise ValueError("every element of a characteristic-2 field is a square")
        sq = set(self.squares())
        for a in self.units():
            if a not in sq:
                return a
        raise AssertionError  # unreachable for odd p

    def sign_coset_reps(self):
        """Least-code representatives of the {1,-1} cosets in the unit group."""
        reps, seen = [], set()
        for a in self.units():
            if a not in seen:
                reps.append(a)
                seen.add(a)
                seen.add(self.neg(a))
        return reps

    def automorphism_exponents(self):
        """Frobenius exponents 0..r-1 enumerating Aut(GF(p^r))."""
        return range(self.r)

    # -- presentation --

    def element_digits(self, a):
        self._check(a)
        return tuple((a // self.p ** i) % self.p for i in range(self.r))

    def poly_str(self, a, var: str = "a") -> str:
        digits = self.element_digits(a)
        terms = []
        for i in range(self.r - 1, -1, -1):
            c = digits[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
        return "+".join(terms) if terms else "0"

    def to_dict(self):
        return {"p": self.p, "r": self.r, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d) -> "GF":
        return cls(int(d["p"]), int(d.get("r", 1)), d.get("modulus"))

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.q})"
        terms = []
        for i in range(self.r, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(f"{head}x" + (f"^{i}" if i > 1 else ""))
        return f"GF({self.q})[" + "+".join(terms) + "]"
