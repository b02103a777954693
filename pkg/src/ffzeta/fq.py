"""Finite fields F_q = F_p[t]/(h(t)) and Galois rings (Z/p^m)[t]/(H(t)).

Elements are plain ints ("codes").  A field element a_0 + a_1*t + ... +
a_{e-1}*t^{e-1} is encoded as the integer a_0 + a_1*p + ... + a_{e-1}*p^{e-1};
ring elements use base p^m digits instead.  Keeping elements as ints makes
them hashable, comparable and cheap, and lets hot paths run on flat lookup
tables or numpy arrays of codes.

For p = 2 the code is the bit-packed coefficient vector, so addition is XOR
at any size.  Small contexts additionally carry full q x q multiplication /
addition tables; large ones (used by the brute-force point counter) carry
discrete log / antilog tables built once and cached on the context.

A field behaves as the m = 1 degenerate case of a Galois ring: it exposes
the same `m`, `pm`, `base`, `char_mod`, `to_field`, `from_field` surface, so
code written against the ring protocol runs unchanged on fields.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import CompositeP, ReducibleModulus

_SCALAR_TABLE_CAP = 1024        # build q x q python tables up to this order
_P2_VECTOR_CAP = 1 << 22        # log/exp tables for p = 2 up to this order
_ODD_VECTOR_CAP = 3000          # log/exp + addition table for odd p up to this


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p (coefficient lists, little-endian),
# used only while constructing contexts


def _fp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_eval(c, x, p):
    acc = 0
    for a in reversed(c):
        acc = (acc * x + a) % p
    return acc


def _fp_divisible_batch(f, p, level):
    """True if some monic divisor of degree `level` divides f. Vectorized."""
    n = p ** level
    deg = len(f) - 1
    # rows: remainder-in-progress per candidate divisor
    divs = (np.arange(n, dtype=np.int64)[:, None]
            // p ** np.arange(level, dtype=np.int64)) % p
    rem = np.tile(np.array(f, dtype=np.int64), (n, 1))
    for i in range(deg, level - 1, -1):
        lead = rem[:, i].copy()
        rem[:, i] = 0
        rem[:, i - level:i] = (rem[:, i - level:i] - lead[:, None] * divs) % p
    return bool(np.any(np.all(rem[:, :level] == 0, axis=1)))


def _fp_is_irreducible(f, p):
    """Trial division of f by every monic polynomial of degree <= deg(f)//2."""
    deg = len(f) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if f[0] == 0:
        return False
    # root check doubles as the degree-1 pass
    for a in range(p):
        if _fp_eval(f, a, p) == 0:
            return False
    for level in range(2, deg // 2 + 1):
        if p ** level > (1 << 26):
            raise ReducibleModulus(
                "irreducibility check too large: p^%d candidates" % level)
        if _fp_divisible_batch(f, p, level):
            return False
    return True


def _lex_least_modulus(p, e):
    """Least monic irreducible of degree e, ordering coefficient tuples
    (c_{e-1}, ..., c_0) ascending."""
    if e == 1:
        return (0, 1)
    for j in range(p ** e):
        c = [(j // p ** i) % p for i in range(e)]
        if c[0] == 0:
            continue            # divisible by t
        f = c + [1]
        if p == 2 and sum(f) % 2 == 0:
            continue            # root at t = 1
        if _fp_is_irreducible(f, p):
            return tuple(f)
    raise ReducibleModulus("no irreducible of degree %d over F_%d" % (e, p))


def _reduction_rows(modulus, L, mod):
    """Rows expressing t^L .. t^{2L-2} in the basis 1..t^{L-1}, mod `mod`."""
    if L == 1:
        return ()
    base_row = [(-modulus[i]) % mod for i in range(L)]
    rows = [tuple(base_row)]
    cur = base_row
    for _ in range(L - 2):
        nxt = [0] + cur[:-1]
        top = cur[-1]
        if top:
            nxt = [(nxt[i] + top * base_row[i]) % mod for i in range(L)]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


def _gf2_mul_int(a, b, mod_int, k):
    """Product in F_{2^k} on bit-packed codes; mod_int includes the t^k bit."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> k:
            a ^= mod_int
    return r


def _gf2_mul_vec(arr, scalar, mod_int, k):
    """Vectorized product of an int64 code array by a fixed code."""
    acc = np.zeros_like(arr)
    i = 0
    while scalar:
        if scalar & 1:
            acc ^= arr << i
        scalar >>= 1
        i += 1
    for bit in range(2 * k - 2, k - 1, -1):
        mask = (acc >> bit) & 1
        acc ^= mask * (mod_int << (bit - k))
    return acc


def _factorize_int(n):
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class VectorKit:
    """Numpy-side arithmetic for one field: antilog/log tables plus either
    XOR addition (p = 2) or a full addition table (odd p)."""

    __slots__ = ("q", "p", "exp", "log", "exp_py", "log_py", "add_table")

    def __init__(self, q, p, exp, log, add_table):
        self.q = q
        self.p = p
        self.exp = exp
        self.log = log
        self.add_table = add_table
        if q <= 1 << 14:
            self.exp_py = exp.tolist()
            self.log_py = log.tolist()
        else:
            self.exp_py = None
            self.log_py = None

    def mul_vec(self, a, b):
        """Elementwise product of two code arrays."""
        la = self.log[a]
        lb = self.log[b]
        prod = self.exp[(la + lb) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, prod)

    def mul_vec_scalar(self, a, c):
        if c == 0:
            return np.zeros_like(a)
        lc = int(self.log[c])
        prod = self.exp[(self.log[a] + lc) % (self.q - 1)]
        return np.where(a == 0, 0, prod)

    def add_vec(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.add_table[a, b]

    def add_vec_scalar(self, a, c):
        if self.p == 2:
            return a ^ c
        return self.add_table[a, c]

    def pow_vec(self, a, u):
        """Elementwise a**u for u >= 1."""
        prod = self.exp[(self.log[a] * u) % (self.q - 1)]
        return np.where(a == 0, 0, prod) if u else np.ones_like(a)


class FiniteField:
    """Context for F_q, q = p^e.  Construct through make_field."""

    m = 1

    def __init__(self, p, e, modulus):
        self.p = p
        self.e = e
        self.q = p ** e
        self.pm = p
        self.size = self.q
        self.modulus = modulus          # length e+1, monic, entries mod p
        self.digits = e
        self.base = p
        self.char_mod = p
        self.reduction = _reduction_rows(modulus, e, p)
        self._mod_int = None
        if p == 2:
            self._mod_int = sum(b << i for i, b in enumerate(modulus))
        self._ppow = [p ** i for i in range(e)]
        self._kit = None
        self._np_mul = None
        self._np_add = None
        self._tables = None
        if self.q <= _SCALAR_TABLE_CAP:
            self._build_tables()

    # -- identity ----------------------------------------------------------

    def __repr__(self):
        return "GF(%d)" % self.q if self.e > 1 else "GF(%d)" % self.p

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and other.p == self.p and other.modulus == self.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    # -- element codecs ----------------------------------------------------

    def encode(self, coeffs):
        code = 0
        for i, c in enumerate(coeffs):
            code += (c % self.p) * self._ppow[i]
        return code

    def coeffs(self, code):
        p = self.p
        return tuple((code // self._ppow[i]) % p for i in range(self.e))

    def elements(self):
        return range(self.q)

    def is_unit(self, a):
        return a != 0

    def to_field(self, a):
        return a

    def from_field(self, a):
        return a

    # -- scalar arithmetic -------------------------------------------------

    def _build_tables(self):
        q = self.q
        mul = [0] * (q * q)
        for a in range(q):
            row = a * q
            for b in range(a, q):
                v = self._mul_generic(a, b)
                mul[row + b] = v
                mul[b * q + a] = v
        self._mul_table = mul
        if self.p == 2:
            self._add_table = None
        else:
            add = [0] * (q * q)
            for a in range(q):
                row = a * q
                for b in range(q):
                    add[row + b] = self._add_generic(a, b)
            self._add_table = add
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self._pow_generic(a, q - 2)
        self._inv_table = inv
        self._neg_table = [self._neg_generic(a) for a in range(q)]
        self._frob_table = [self._pow_generic(a, self.p) for a in range(q)]
        self._tables = True

    def _add_generic(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        code = 0
        for pw in self._ppow:
            code += (((a // pw) + (b // pw)) % p) * pw
        return code

    def _neg_generic(self, a):
        if self.p == 2:
            return a
        p = self.p
        code = 0
        for pw in self._ppow:
            code += ((-(a // pw)) % p) * pw
        return code

    def _mul_generic(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return a * b % self.p
        if self.p == 2:
            return _gf2_mul_int(a, b, self._mod_int, self.e)
        p = self.p
        da = self.coeffs(a)
        db = self.coeffs(b)
        conv = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:self.e]]
        for jj in range(len(conv) - 1, self.e - 1, -1):
            top = conv[jj] % p
            if top:
                row = self.reduction[jj - self.e]
                for i in range(self.e):
                    out[i] = (out[i] + top * row[i]) % p
        return self.encode(out)

    def _pow_generic(self, a, n):
        r = 1
        while n:
            if n & 1:
                r = self._mul_generic(r, a)
            a = self._mul_generic(a, a)
            n >>= 1
        return r

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._tables:
            return self._add_table[a * self.q + b]
        return self._add_generic(a, b)

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.p == 2:
            return a
        if self._tables:
            return self._neg_table[a]
        return self._neg_generic(a)

    def mul(self, a, b):
        if self._tables:
            return self._mul_table[a * self.q + b]
        kit = self._kit
        if kit is not None and kit.log_py is not None:
            if a == 0 or b == 0:
                return 0
            return kit.exp_py[(kit.log_py[a] + kit.log_py[b]) % (self.q - 1)]
        return self._mul_generic(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in %r" % self)
        if self._tables:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def frob(self, a):
        """a -> a^p, the absolute Frobenius."""
        if self._tables:
            return self._frob_table[a]
        return self.pow(a, self.p)

    def pth_root(self, a):
        """Inverse of frob; a -> a^(p^(e-1))."""
        for _ in range(self.e - 1):
            a = self.frob(a)
        return a

    # -- numpy-side tables -------------------------------------------------

    @property
    def np_mul(self):
        """q x q multiplication table as an int64 array (small fields)."""
        if self._np_mul is None:
            if not self._tables:
                raise TooBigForTables(self.q)
            self._np_mul = np.array(self._mul_table,
                                    dtype=np.int64).reshape(self.q, self.q)
        return self._np_mul

    @property
    def np_add(self):
        if self._np_add is None:
            if self.p == 2:
                a = np.arange(self.q, dtype=np.int64)
                self._np_add = a[:, None] ^ a[None, :]
            else:
                if not self._tables:
                    raise TooBigForTables(self.q)
                self._np_add = np.array(self._add_table,
                                        dtype=np.int64).reshape(self.q, self.q)
        return self._np_add

    @property
    def np_neg(self):
        if self.p == 2:
            return np.arange(self.q, dtype=np.int64)
        if not self._tables:
            raise TooBigForTables(self.q)
        return np.array(self._neg_table, dtype=np.int64)

    def vector_kit(self):
        """Log/antilog tables for vectorized evaluation, or None if the
        field is too large to tabulate."""
        if self._kit is not None:
            return self._kit
        q = self.q
        if self.p == 2:
            if q > _P2_VECTOR_CAP:
                return None
        elif q > _ODD_VECTOR_CAP:
            return None
        g = self._find_generator()
        exp = np.zeros(q - 1, dtype=np.int64)
        if self.p == 2 and q > 4096:
            block = 4096
            cur = 1
            vals = []
            for _ in range(block):
                vals.append(cur)
                cur = self.mul(cur, g)
            exp[:block] = vals
            step = cur          # g^block; each window is the previous one
            start = block       # scaled by it, so step never changes
            while start < q - 1:
                width = min(block, q - 1 - start)
                exp[start:start + width] = _gf2_mul_vec(
                    exp[start - block:start - block + width],
                    step, self._mod_int, self.e)
                start += width
        else:
            cur = 1
            vals = []
            for _ in range(q - 1):
                vals.append(cur)
                cur = self.mul(cur, g)
            exp[:] = vals
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)
        add_table = None
        if self.p != 2:
            add_table = np.empty((q, q), dtype=np.int64)
            digits = (np.arange(q, dtype=np.int64)[:, None]
                      // np.array(self._ppow)) % self.p
            pvec = np.array(self._ppow, dtype=np.int64)
            step = max(1, (1 << 22) // max(q, 1))
            for lo in range(0, q, step):
                hi = min(q, lo + step)
                s = (digits[lo:hi, None, :] + digits[None, :, :]) % self.p
                add_table[lo:hi] = s @ pvec
        self._kit = VectorKit(q, self.p, exp, log, add_table)
        return self._kit

    def _find_generator(self):
        q = self.q
        if q == 2:
            return 1
        primes = list(_factorize_int(q - 1))
        for g in range(2, q):
            if all(self.pow(g, (q - 1) // ell) != 1 for ell in primes):
                return g
        raise RuntimeError("no generator found for %r" % self)


class TooBigForTables(RuntimeError):
    def __init__(self, q):
        super().__init__("field of order %d has no dense tables" % q)


class GaloisRing:
    """Context for (Z/p^m)[t]/(H(t)) where H is the trivial lift of the
    field modulus.  q^m elements; codes use base p^m digits."""

    def __init__(self, field, m):
        self.field = field
        self.p = field.p
        self.e = field.e
        self.m = m
        self.q = field.q
        self.pm = field.p ** m
        self.size = self.pm ** field.e
        self.modulus = tuple(c % self.pm for c in field.modulus)
        self.digits = field.e
        self.base = self.pm
        self.char_mod = self.pm
        self.reduction = _reduction_rows(self.modulus, self.e, self.pm)
        self._bpow = [self.pm ** i for i in range(self.e)]
        self._tables = None
        if self.size <= _SCALAR_TABLE_CAP:
            self._build_tables()

    def __repr__(self):
        return "GR(%d^%d, %d)" % (self.p, self.m, self.e)

    def __eq__(self, other):
        return (isinstance(other, GaloisRing) and other.p == self.p
                and other.m == self.m and other.modulus == self.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def encode(self, coeffs):
        code = 0
        for i, c in enumerate(coeffs):
            code += (c % self.pm) * self._bpow[i]
        return code

    def coeffs(self, code):
        return tuple((code // b) % self.pm for b in self._bpow)

    def elements(self):
        return range(self.size)

    def to_field(self, a):
        """Reduction mod p onto the residue field."""
        f = self.field
        return f.encode(c % self.p for c in self.coeffs(a))

    def from_field(self, a):
        """Trivial (digit-preserving) lift."""
        return self.encode(self.field.coeffs(a))

    def is_unit(self, a):
        return self.to_field(a) != 0

    def _build_tables(self):
        n = self.size
        mul = [0] * (n * n)
        add = [0] * (n * n)
        for a in range(n):
            row = a * n
            for b in range(n):
                add[row + b] = self._add_generic(a, b)
                if b >= a:
                    v = self._mul_generic(a, b)
                    mul[row + b] = v
                    mul[b * n + a] = v
        self._mul_table = mul
        self._add_table = add
        self._neg_table = [self._neg_generic(a) for a in range(n)]
        self._tables = True

    def _add_generic(self, a, b):
        pm = self.pm
        code = 0
        for bp in self._bpow:
            code += (((a // bp) + (b // bp)) % pm) * bp
        return code

    def _neg_generic(self, a):
        pm = self.pm
        code = 0
        for bp in self._bpow:
            code += ((-(a // bp)) % pm) * bp
        return code

    def _mul_generic(self, a, b):
        if self.e == 1:
            return a * b % self.pm
        pm = self.pm
        da = self.coeffs(a)
        db = self.coeffs(b)
        conv = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        out = [c % pm for c in conv[:self.e]]
        for jj in range(len(conv) - 1, self.e - 1, -1):
            top = conv[jj] % pm
            if top:
                row = self.reduction[jj - self.e]
                for i in range(self.e):
                    out[i] = (out[i] + top * row[i]) % pm
        return self.encode(out)

    def add(self, a, b):
        if self._tables:
            return self._add_table[a * self.size + b]
        return self._add_generic(a, b)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self._tables:
            return self._neg_table[a]
        return self._neg_generic(a)

    def mul(self, a, b):
        if self._tables:
            return self._mul_table[a * self.size + b]
        return self._mul_generic(a, b)

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def inv(self, a):
        """Inverse of a unit, by lifting the residue-field inverse."""
        if not self.is_unit(a):
            raise ZeroDivisionError("%d is not a unit in %r" % (a, self))
        x = self.from_field(self.field.inv(self.to_field(a)))
        two = 2 % self.pm
        prec = 1
        while prec < self.m:
            x = self.mul(x, self.sub(two, self.mul(a, x)))
            prec *= 2
        return x


_FIELD_CACHE = {}
_RING_CACHE = {}


def split_prime_power(q):
    """(p, e) with q = p^e, or ValueError if q is not a prime power."""
    if q < 2:
        raise ValueError("%d is not a prime power" % q)
    p = 2
    while p * p <= q:
        if q % p == 0:
            e = 0
            rest = q
            while rest % p == 0:
                rest //= p
                e += 1
            if rest != 1:
                raise ValueError("%d is not a prime power" % q)
            return p, e
        p += 1
    return q, 1


def make_field(p, e=1, modulus=None):
    """Build (or fetch) the context for F_{p^e}.

    With modulus=None the modulus is the least monic irreducible of degree e,
    ordering coefficient tuples (c_{e-1}, ..., c_0) ascending.  A supplied
    modulus must be monic of degree e and irreducible over F_p.
    """
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if not _is_prime(p):
        raise CompositeP("p = %d is not prime" % p)
    key = (p, e, None if modulus is None else tuple(c % p for c in modulus))
    hit = _FIELD_CACHE.get(key)
    if hit is not None:
        return hit
    if modulus is None:
        mod = _lex_least_modulus(p, e)
    else:
        mod = tuple(c % p for c in modulus)
        if len(mod) != e + 1 or mod[-1] != 1:
            raise ReducibleModulus(
                "modulus must be monic of degree %d" % e)
        if not _fp_is_irreducible(list(mod), p):
            raise ReducibleModulus("modulus %s is reducible over F_%d"
                                   % (list(mod), p))
    ctx = _FIELD_CACHE.get((p, e, mod))
    if ctx is None:
        ctx = FiniteField(p, e, mod)
        _FIELD_CACHE[(p, e, mod)] = ctx
    _FIELD_CACHE[key] = ctx
    return ctx


def make_galois_ring(field, m):
    """Galois ring over `field` with precision m.  m = 1 returns the field
    itself (the degenerate case)."""
    if m < 1:
        raise ValueError("precision must be >= 1")
    if m == 1:
        return field
    key = (field, m)
    hit = _RING_CACHE.get(key)
    if hit is None:
        hit = GaloisRing(field, m)
        _RING_CACHE[key] = hit
    return hit
