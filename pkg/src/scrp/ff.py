"""Exact arithmetic in a tower F_p < F_q < F_{q^2} of desk-scale finite fields.

Every element is stored as an integer index: the coordinate vector over the
direct subfield read as base-|subfield| digits, lowest coordinate first.
With that encoding the embedded copy of F_q inside F_{q^2} is exactly the
indices 0..q-1, and for characteristic two, field addition is XOR of
indices at every level of the tower.

Each field context precomputes exp/log tables over its multiplicative
group (sizes are capped by the sweep bound), so the hot paths used by
exhaustive sweeps are plain table lookups on ints. Everything is immutable
after construction and safe to share across workers.
"""

from __future__ import annotations

import math
import os

DEFAULT_SWEEP_BOUND = 1 << 14

# odd-characteristic contexts at most this big get a flat addition table
_ADD_TABLE_MAX = 512


def oracle_bound() -> int:
    """Cap on |F_{q^2}| for exhaustive work; SCRP_ORACLE_BOUND overrides."""
    raw = os.environ.get("SCRP_ORACLE_BOUND")
    return int(raw) if raw else DEFAULT_SWEEP_BOUND


class FieldError(ValueError):
    """Invalid field construction or arithmetic request."""


class LevelMismatch(FieldError):
    """Operands live at different levels of the tower."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def factorize(m: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs stay below 2**28)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p**n with p prime, or raise."""
    f = factorize(q)
    if len(f) != 1:
        raise FieldError(f"{q} is not a prime power")
    [(p, n)] = f.items()
    return p, n


def _digits(v: int, base: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        v, r = divmod(v, base)
        out.append(r)
    return tuple(out)


class Ctx:
    """Arithmetic context for one field in the tower.

    Elements are indices in range(order). Subclasses provide addition,
    negation and a bootstrap multiplication; exp/log tables (and
    everything built on them) live here.
    """

    order: int
    char: int
    p: int
    dim: int  # degree over the prime field
    base: "Ctx | None"
    symbol: str | None

    def _init_tables(self) -> None:
        n = self.order
        m = n - 1
        if n == 2:
            g = 1
        else:
            g = None
            prime_parts = list(factorize(m))
            for cand in range(2, n):
                if all(self._raw_pow(cand, m // ell) != 1 for ell in prime_parts):
                    g = cand
                    break
            if g is None:  # not a field (reducible modulus slipped through)
                raise FieldError("multiplicative group is not cyclic of full order")
        exp = [1] * m
        cur = 1
        for k in range(1, m):
            cur = self._raw_mul(cur, g)
            exp[k] = cur
        log = [-1] * n
        for k, v in enumerate(exp):
            log[v] = k
        if min(log[1:], default=0) < 0:
            raise FieldError("generator does not span the multiplicative group")
        self.gen_idx = g
        self._exp = exp
        self._log = log
        self._frob_tab: list[int] | None = None
        self._trace_tab: list[int] | None = None
        self._as_pivots: dict[int, tuple[int, int]] | None = None
        self.spec: "FieldSpec | None" = None

    def _raw_pow(self, i: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self._raw_mul(acc, i)
            i = self._raw_mul(i, i)
            e >>= 1
        return acc

    # -- table-driven operations ------------------------------------

    def mul_idx(self, i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        m = self.order - 1
        return self._exp[(self._log[i] + self._log[j]) % m]

    def inv_idx(self, i: int) -> int:
        if i == 0:
            raise FieldError("division by zero")
        m = self.order - 1
        return self._exp[(m - self._log[i]) % m]

    def div_idx(self, i: int, j: int) -> int:
        return self.mul_idx(i, self.inv_idx(j))

    def pow_idx(self, i: int, e: int) -> int:
        if i == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise FieldError("zero raised to a negative power")
        m = self.order - 1
        return self._exp[(self._log[i] * e) % m]

    def sub_idx(self, i: int, j: int) -> int:
        return self.add_idx(i, self.neg_idx(j))

    def order_of(self, i: int) -> int:
        if i == 0:
            raise FieldError("zero has no multiplicative order")
        m = self.order - 1
        return m // math.gcd(self._log[i], m)

    def is_square_idx(self, i: int) -> bool:
        if self.char == 2:
            raise FieldError("square test is trivial in characteristic 2")
        if i == 0:
            return True
        return self._log[i] % 2 == 0

    def trace_to_prime(self, i: int) -> int:
        if self._trace_tab is None:
            tab = []
            for v in range(self.order):
                acc, c = 0, v
                for _ in range(self.dim):
                    acc = self.add_idx(acc, c)
                    c = self.pow_idx(c, self.p)
                tab.append(acc)
            if any(t >= self.p for t in tab):
                raise FieldError("trace escaped the prime field")
            self._trace_tab = tab
        return self._trace_tab[i]

    # x -> x^2 + x is F_2-linear on indices (char 2: index XOR is field
    # addition), so solve with a standard GF(2) xor basis.
    def _artin_schreier_pivots(self) -> dict[int, tuple[int, int]]:
        if self._as_pivots is None:
            if self.char != 2:
                raise FieldError("Artin-Schreier solver needs characteristic 2")
            piv: dict[int, tuple[int, int]] = {}
            for b in range(self.dim):
                v = self.mul_idx(1 << b, 1 << b) ^ (1 << b)
                x = 1 << b
                while v:
                    top = v.bit_length() - 1
                    if top not in piv:
                        piv[top] = (v, x)
                        break
                    pv, px = piv[top]
                    v ^= pv
                    x ^= px
            self._as_pivots = piv
        return self._as_pivots

    def artin_schreier_idx(self, v: int) -> tuple[int, int] | None:
        piv = self._artin_schreier_pivots()
        x = 0
        while v:
            top = v.bit_length() - 1
            if top not in piv:
                return None
            pv, px = piv[top]
            v ^= pv
            x ^= px
        return (x, x ^ 1) if x < (x ^ 1) else (x ^ 1, x)

    def element(self, i: int) -> "Element":
        return Element(self, i)

    def elements(self):
        for i in range(self.order):
            yield Element(self, i)

    def scalar_idx(self, c: int) -> int:
        return c % self.p

    def __repr__(self):
        return f"GF({self.order})"


class PrimeCtx(Ctx):
    """The prime field F_p with indices 0..p-1."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.order = p
        self.dim = 1
        self.base = None
        self.symbol = None
        self._init_tables()

    def add_idx(self, i: int, j: int) -> int:
        return (i + j) % self.p

    def neg_idx(self, i: int) -> int:
        return (self.p - i) % self.p

    def _raw_mul(self, i: int, j: int) -> int:
        return (i * j) % self.p

    def coords_of(self, i: int) -> tuple[int, ...]:
        return (i,)

    def from_coords(self, coords) -> int:
        return coords[0] % self.p

    def text(self, i: int) -> str:
        return str(i)


class ExtCtx(Ctx):
    """An extension of `base` by a monic modulus, coordinates over `base`."""

    def __init__(self, base: Ctx, modulus: tuple[int, ...], symbol: str):
        if len(modulus) < 2 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree >= 1")
        self.base = base
        self.modulus = tuple(modulus)
        self.k = len(modulus) - 1
        self.order = base.order ** self.k
        self.char = base.char
        self.p = base.p
        self.dim = base.dim * self.k
        self.symbol = symbol
        # t^k = -(m_0 + m_1 t + ...)
        self._red = tuple(base.neg_idx(c) for c in modulus[:-1])
        if self.char == 2:
            self.add_idx = lambda i, j: i ^ j
            self.neg_idx = lambda i: i
        else:
            neg = [self.from_coords([base.neg_idx(d) for d in self.coords_of(i)])
                   for i in range(self.order)]
            self.neg_idx = neg.__getitem__
            if self.order <= _ADD_TABLE_MAX:
                n = self.order
                tab = [0] * (n * n)
                for i in range(n):
                    ci = self.coords_of(i)
                    row = i * n
                    for j in range(n):
                        cj = self.coords_of(j)
                        tab[row + j] = self.from_coords(
                            [base.add_idx(a, b) for a, b in zip(ci, cj)])
                self.add_idx = lambda i, j, _t=tab, _n=n: _t[i * _n + j]
            elif self.k == 2:
                badd, q = base.add_idx, base.order
                self.add_idx = lambda i, j: (
                    badd(i % q, j % q) + q * badd(i // q, j // q))
            else:
                self.add_idx = self._add_digitwise
        self._init_tables()

    def _add_digitwise(self, i: int, j: int) -> int:
        q = self.base.order
        out, mult = 0, 1
        while i or j:
            out += self.base.add_idx(i % q, j % q) * mult
            i //= q
            j //= q
            mult *= q
        return out

    def coords_of(self, i: int) -> tuple[int, ...]:
        return _digits(i, self.base.order, self.k)

    def from_coords(self, coords) -> int:
        out = 0
        for c in reversed(list(coords)):
            out = out * self.base.order + c
        return out

    def _raw_mul(self, i: int, j: int) -> int:
        base, k = self.base, self.k
        a = self.coords_of(i)
        b = self.coords_of(j)
        prod = [0] * (2 * k - 1)
        for x, ax in enumerate(a):
            if ax == 0:
                continue
            for y, by in enumerate(b):
                if by:
                    prod[x + y] = base.add_idx(prod[x + y], base._raw_mul(ax, by))
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c == 0:
                continue
            prod[d] = 0
            for off, r in enumerate(self._red):
                if r:
                    prod[d - k + off] = base.add_idx(
                        prod[d - k + off], base._raw_mul(c, r))
        return self.from_coords(prod[:k])

    def frob_idx(self, i: int) -> int:
        """Frobenius relative to the direct subfield: x -> x^|base|."""
        if self._frob_tab is None:
            e = self.base.order
            self._frob_tab = [self.pow_idx(v, e) for v in range(self.order)]
        return self._frob_tab[i]

    def lies_in_base(self, i: int) -> bool:
        return i < self.base.order

    def text(self, i: int) -> str:
        coords = self.coords_of(i)
        parts = []
        for e in range(self.k - 1, -1, -1):
            c = coords[e]
            if c == 0:
                continue
            ct = self.base.text(c)
            if e == 0:
                parts.append(ct)
                continue
            if ct == "1":
                ct = ""
            elif not ct.isdigit():
                ct = f"({ct})"
            xt = self.symbol if e == 1 else f"{self.symbol}^{e}"
            parts.append(f"{ct}{xt}")
        return "+".join(parts) if parts else "0"


class Element:
    """A field element: an index bound to its tower level."""

    __slots__ = ("ctx", "idx")

    def __init__(self, ctx: Ctx, idx: int):
        if not 0 <= idx < ctx.order:
            raise FieldError(f"index {idx} out of range for {ctx!r}")
        self.ctx = ctx
        self.idx = idx

    def _coerce(self, other) -> int:
        if isinstance(other, Element):
            if other.ctx is not self.ctx:
                raise LevelMismatch(
                    f"cannot combine {self.ctx!r} and {other.ctx!r} elements")
            return other.idx
        if isinstance(other, int):
            return self.ctx.scalar_idx(other)
        return NotImplemented

    def __add__(self, other):
        j = self._coerce(other)
        if j is NotImplemented:
            return NotImplemented
        return Element(self.ctx, self.ctx.add_idx(self.idx, j))

    __radd__ = __add__

    def __sub__(self, other):
        j = self._coerce(other)
        if j is NotImplemented:
            return NotImplemented
        return Element(self.ctx, self.ctx.sub_idx(self.idx, j))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        j = self._coerce(other)
        if j is NotImplemented:
            return NotImplemented
        return Element(self.ctx, self.ctx.mul_idx(self.idx, j))

    __rmul__ = __mul__

    def __truediv__(self, other):
        j = self._coerce(other)
        if j is NotImplemented:
            return NotImplemented
        return Element(self.ctx, self.ctx.div_idx(self.idx, j))

    def __rtruediv__(self, other):
        j = self._coerce(other)
        if j is NotImplemented:
            return NotImplemented
        return Element(self.ctx, self.ctx.div_idx(j, self.idx))

    def __neg__(self):
        return Element(self.ctx, self.ctx.neg_idx(self.idx))

    def __pow__(self, e: int):
        return Element(self.ctx, self.ctx.pow_idx(self.idx, e))

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ctx is other.ctx and self.idx == other.idx
        if isinstance(other, int):
            return self.idx == self.ctx.scalar_idx(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.idx))

    def __bool__(self):
        return self.idx != 0

    def __int__(self):
        return self.idx

    def __repr__(self):
        return f"<{self.ctx.text(self.idx)} in {self.ctx!r}>"

    def __str__(self):
        return self.ctx.text(self.idx)


# ------------------------------------------------------------------
# polynomial helpers over a context (coefficient tuples, low degree first);
# used for modulus selection and the irreducibility test


def _ptrim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _pmul(ctx: Ctx, f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = ctx.add_idx(out[i + j], ctx.mul_idx(a, b))
    return _ptrim(out)


def _pmod(ctx: Ctx, f: list[int], g: list[int]) -> list[int]:
    f = list(f)
    dg = len(g) - 1
    inv_lead = ctx.inv_idx(g[-1])
    while len(f) - 1 >= dg and f:
        c = ctx.mul_idx(f[-1], inv_lead)
        shift = len(f) - 1 - dg
        for i, b in enumerate(g):
            if b:
                f[shift + i] = ctx.sub_idx(f[shift + i], ctx.mul_idx(c, b))
        _ptrim(f)
    return f


def _pgcd(ctx: Ctx, f: list[int], g: list[int]) -> list[int]:
    f, g = list(f), list(g)
    while g:
        f, g = g, _pmod(ctx, f, g)
    if f:
        inv = ctx.inv_idx(f[-1])
        f = [ctx.mul_idx(c, inv) for c in f]
    return f


def _pmodpow(ctx: Ctx, base: list[int], e: int, mod: list[int]) -> list[int]:
    acc = [1]
    base = _pmod(ctx, base, mod)
    while e:
        if e & 1:
            acc = _pmod(ctx, _pmul(ctx, acc, base), mod)
        base = _pmod(ctx, _pmul(ctx, base, base), mod)
        e >>= 1
    return acc


def poly_is_irreducible(coeffs, ctx: Ctx) -> bool:
    """Irreducibility over ctx: no factor of degree <= deg/2, detected via
    gcd(f, x^(|F|^i) - x) = 1 for each i."""
    f = _ptrim([int(c) for c in coeffs])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    r = [0, 1]
    for _ in range(m // 2):
        r = _pmodpow(ctx, r, ctx.order, f)
        diff = list(r)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = ctx.sub_idx(diff[1], 1)
        if len(_pgcd(ctx, f, _ptrim(diff))) > 1:
            return False
    return True


# ------------------------------------------------------------------


class FieldSpec:
    """The tower F_p < F_q < F_{q^2} with deterministic moduli."""

    __slots__ = ("p", "n", "q", "modulus_q", "modulus_q2",
                 "fp", "fq", "fq2", "_mu")

    def __init__(self, p, n, modulus_q, modulus_q2, fp, fq, fq2):
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus_q = tuple(modulus_q)
        self.modulus_q2 = tuple(modulus_q2)
        self.fp = fp
        self.fq = fq
        self.fq2 = fq2
        self._mu = None
        fp.spec = self
        fq.spec = self
        fq2.spec = self

    # -- element constructors ----------------------------------------

    def fp_elem(self, i: int) -> Element:
        return Element(self.fp, i % self.p)

    def fq_elem(self, i: int) -> Element:
        return Element(self.fq, i)

    def fq2_elem(self, i: int) -> Element:
        return Element(self.fq2, i)

    @property
    def one(self) -> Element:
        return Element(self.fq2, 1)

    @property
    def zero(self) -> Element:
        return Element(self.fq2, 0)

    @property
    def delta_canonical(self) -> Element:
        """First element of F_{q^2} not fixed by Frobenius (index q)."""
        return Element(self.fq2, self.q)

    # -- level plumbing ----------------------------------------------

    def in_fq(self, x: Element) -> bool:
        if x.ctx is self.fq or x.ctx is self.fp:
            return True
        if x.ctx is self.fq2:
            return x.idx < self.q
        raise LevelMismatch("element from a different tower")

    def lift(self, x: Element) -> Element:
        """Embed an F_q (or F_p) element into F_{q^2}; indices agree."""
        if x.ctx is self.fq2:
            return x
        if x.ctx is self.fq or x.ctx is self.fp:
            return Element(self.fq2, x.idx)
        raise LevelMismatch("element from a different tower")

    def lower(self, x: Element) -> Element:
        """View an F_{q^2} element lying in F_q at the F_q level."""
        if x.ctx is self.fq:
            return x
        if x.ctx is self.fp:
            return Element(self.fq, x.idx)
        if x.ctx is self.fq2:
            if x.idx >= self.q:
                raise LevelMismatch(f"{x!r} is not in the subfield F_q")
            return Element(self.fq, x.idx)
        raise LevelMismatch("element from a different tower")

    def elements(self, level: str = "q2") -> list[Element]:
        ctx = {"p": self.fp, "q": self.fq, "q2": self.fq2}[level]
        return [Element(ctx, i) for i in range(ctx.order)]

    def mu(self):
        from . import mu as _mu_mod
        return _mu_mod.mu_build(self)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "q": self.q,
            "modulus_q": list(self.modulus_q),
            "modulus_q2": list(self.modulus_q2),
        }

    def __repr__(self):
        return f"FieldSpec(p={self.p}, n={self.n}, q={self.q})"


def _canonical_modulus(ctx: Ctx, degree: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible: scan constant-first digit
    encodings in increasing order."""
    for v in range(ctx.order ** degree):
        cand = _digits(v, ctx.order, degree) + (1,)
        if poly_is_irreducible(cand, ctx):
            return cand
    raise FieldError("no irreducible modulus found")  # unreachable for fields


def build_field(p: int, n: int = 1, *, modulus_q=None, modulus_q2=None,
                bound: int | None = None) -> FieldSpec:
    """Construct the tower for q = p**n with reproducible moduli.

    Moduli default to the lexicographically smallest monic irreducibles;
    explicit coefficient lists (low degree first, including the leading 1)
    may be supplied instead and are validated.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if n < 1:
        raise FieldError("extension degree must be >= 1")
    cap = bound if bound is not None else oracle_bound()
    if p ** (2 * n) > cap:
        raise FieldError(
            f"q^2 = {p ** (2 * n)} exceeds the sweep bound {cap}")

    fp = PrimeCtx(p)
    if modulus_q is None:
        modulus_q = (0, 1) if n == 1 else _canonical_modulus(fp, n)
    else:
        modulus_q = tuple(int(c) for c in modulus_q)
        if len(modulus_q) != n + 1 or modulus_q[-1] != 1:
            raise FieldError("modulus_q must be monic of degree n")
        if not poly_is_irreducible(modulus_q, fp):
            raise FieldError("modulus_q is reducible over F_p")
    fq = fp if n == 1 else ExtCtx(fp, modulus_q, "u")

    if modulus_q2 is None:
        modulus_q2 = _canonical_modulus(fq, 2)
    else:
        modulus_q2 = tuple(int(c) for c in modulus_q2)
        if len(modulus_q2) != 3 or modulus_q2[-1] != 1:
            raise FieldError("modulus_q2 must be monic of degree 2")
        if not poly_is_irreducible(modulus_q2, fq):
            raise FieldError("modulus_q2 is reducible over F_q")
    fq2 = ExtCtx(fq, modulus_q2, "y")
    return FieldSpec(p, n, modulus_q, modulus_q2, fp, fq, fq2)


_canonical_cache: dict[tuple[int, int], FieldSpec] = {}


def field_for_q(q: int, *, bound: int | None = None) -> FieldSpec:
    """Canonical tower for a prime power q (cached)."""
    p, n = prime_power(q)
    key = (p, n)
    if key not in _canonical_cache:
        _canonical_cache[key] = build_field(p, n, bound=bound)
    return _canonical_cache[key]


# ------------------------------------------------------------------
# the operation surface used by the criteria


_ARITH_OPS = {"add", "sub", "mul", "div"}


def arith(a: Element, b: Element, op: str) -> Element:
    if op not in _ARITH_OPS:
        raise FieldError(f"unknown operation {op!r}")
    if not isinstance(b, Element) or b.ctx is not a.ctx:
        raise LevelMismatch("operands must share a field level")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a / b


def power(a: Element, e: int) -> Element:
    return a ** e


def frobenius_q(x: Element) -> Element:
    """x -> x^q on F_{q^2}; an involution fixing exactly F_q."""
    spec = x.ctx.spec
    if spec is None or x.ctx is not spec.fq2:
        raise LevelMismatch("frobenius_q expects an F_{q^2} element")
    return Element(x.ctx, x.ctx.frob_idx(x.idx))


def absolute_trace(x: Element) -> Element:
    """Sum of p-power conjugates down to F_p, at the element's own level."""
    spec = x.ctx.spec
    tr = x.ctx.trace_to_prime(x.idx)
    return Element(spec.fp if spec else x.ctx, tr)


def norm_q2_to_q(x: Element) -> Element:
    """x -> x^(q+1), landing in F_q."""
    spec = x.ctx.spec
    if spec is None or x.ctx is not spec.fq2:
        raise LevelMismatch("norm expects an F_{q^2} element")
    v = x.ctx.pow_idx(x.idx, spec.q + 1)
    if v >= spec.q:
        raise FieldError("norm left the subfield (broken tower)")
    return Element(spec.fq, v)


def is_square(x: Element) -> bool:
    """Euler criterion in the element's own field; zero counts as a square."""
    return x.ctx.is_square_idx(x.idx)


def is_cube_in(x: Element, which: str) -> bool:
    """Cube test in F_q (which="q") or F_{q^2} (which="q2")."""
    spec = x.ctx.spec
    if which == "q":
        y = spec.lower(x)
    elif which == "q2":
        y = spec.lift(x)
    else:
        raise FieldError(f"unknown field selector {which!r}")
    if y.idx == 0:
        raise FieldError("cube test is undefined at zero")
    m = y.ctx.order - 1
    e = m // math.gcd(3, m)
    return y.ctx.pow_idx(y.idx, e) == 1


def solve_artin_schreier(v: Element) -> tuple[Element, ...]:
    """Both solutions of x^2 + x = v in v's field, or () when Tr(v) = 1."""
    sols = v.ctx.artin_schreier_idx(v.idx)
    if sols is None:
        return ()
    return tuple(Element(v.ctx, s) for s in sols)


def multiplicative_order(x: Element) -> int:
    return x.ctx.order_of(x.idx)


def enumerate_field(ctx: Ctx) -> list[Element]:
    return [Element(ctx, i) for i in range(ctx.order)]
