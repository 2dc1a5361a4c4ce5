"""Dense polynomials over a tower field, the conjugate-reverse transform,
and detection of self-conjugate-reciprocal (SCR) polynomials.

A nonzero C over F_{q^2} of degree n is SCR when x^n * C^(q)(1/x) = beta*C(x)
for some unit beta; the unit then automatically satisfies beta^(q+1) = 1 and
the coefficients pair up as c_{n-i} = (beta * c_i)^q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ff import Ctx, Element, FieldError, LevelMismatch


class Poly:
    """Dense coefficient vector (indices, low degree first, trimmed)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: Ctx, coeffs=()):
        cs = [c.idx if isinstance(c, Element) else int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not 0 <= c < ctx.order:
                raise FieldError(f"coefficient index {c} out of range")
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Element:
        c = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return Element(self.ctx, c)

    def eval_idx(self, x: int) -> int:
        ctx = self.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add_idx(ctx.mul_idx(acc, x), c)
        return acc

    def __call__(self, x: Element) -> Element:
        if x.ctx is not self.ctx:
            raise LevelMismatch("evaluation point is at the wrong level")
        return Element(self.ctx, self.eval_idx(x.idx))

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ctx is not self.ctx:
                raise LevelMismatch("polynomials over different fields")
            return other
        if isinstance(other, Element):
            return Poly(self.ctx, (other,))
        if isinstance(other, int):
            return Poly(self.ctx, (self.ctx.scalar_idx(other),))
        return NotImplemented

    def __add__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        ctx = self.ctx
        a, b = self.coeffs, g.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add_idx(out[i], c)
        return Poly(ctx, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx.neg_idx
        return Poly(self.ctx, [neg(c) for c in self.coeffs])

    def __sub__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        return self + (-g)

    def __mul__(self, other):
        if isinstance(other, (Element, int)):
            k = other.idx if isinstance(other, Element) else self.ctx.scalar_idx(other)
            mul = self.ctx.mul_idx
            return Poly(self.ctx, [mul(c, k) for c in self.coeffs])
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        ctx = self.ctx
        a, b = self.coeffs, g.coeffs
        if not a or not b:
            return Poly(ctx, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = ctx.add_idx(out[i + j], ctx.mul_idx(ca, cb))
        return Poly(ctx, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise FieldError("negative polynomial power")
        acc = Poly(self.ctx, (1,))
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.ctx is self.ctx
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def to_index_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            ct = self.ctx.text(c)
            if not ct.isdigit():
                ct = f"({ct})"
            if e == 0:
                parts.append(ct)
            elif e == 1:
                parts.append(f"{ct}*x")
            else:
                parts.append(f"{ct}*x^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.ctx!r}, {list(self.coeffs)})"


@dataclass(frozen=True)
class ScrCertificate:
    """Witness that a polynomial is SCR: its degree and the pairing unit."""

    degree: int
    unit: Element


def poly_eval(f: Poly, x: Element) -> Element:
    return f(x)


def poly_ops(f: Poly, g: Poly, op: str) -> Poly:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise FieldError(f"unknown polynomial operation {op!r}")


def conjugate_lift(f: Poly) -> Poly:
    """Coefficientwise x -> x^q; the identity on F_q[x]."""
    spec = f.ctx.spec
    if spec is not None and f.ctx is spec.fq2:
        frob = f.ctx.frob_idx
        return Poly(f.ctx, [frob(c) for c in f.coeffs])
    return f


def conj_reverse(f: Poly, n: int) -> Poly:
    """x^n * f^(q)(1/x): the conjugated, reversed coefficient vector."""
    if n < f.degree:
        raise FieldError("reversal degree below the polynomial degree")
    spec = f.ctx.spec
    frob = f.ctx.frob_idx if (spec and f.ctx is spec.fq2) else (lambda c: c)
    padded = list(f.coeffs) + [0] * (n + 1 - len(f.coeffs))
    return Poly(f.ctx, [frob(c) for c in reversed(padded)])


def scr_unit(f: Poly, n: int) -> Element | None:
    """The unit beta with x^n f^(q)(1/x) = beta*f, if one exists.

    Solved from the lowest nonzero coefficient and verified on the whole
    vector, so no search over the unit group is needed.
    """
    if f.is_zero():
        raise FieldError("the zero polynomial is not SCR")
    rev = conj_reverse(f, n).coeffs
    rev = rev + (0,) * (n + 1 - len(rev))
    cs = f.coeffs + (0,) * (n + 1 - len(f.coeffs))
    j = next(i for i, c in enumerate(cs) if c)
    if rev[j] == 0:
        return None
    ctx = f.ctx
    beta = ctx.div_idx(rev[j], cs[j])
    for a, b in zip(cs, rev):
        if b != ctx.mul_idx(beta, a):
            return None
    return Element(ctx, beta)


def scr_check(f: Poly) -> ScrCertificate | None:
    """SCR certificate at the polynomial's own degree, or None."""
    unit = scr_unit(f, f.degree)
    if unit is None:
        return None
    spec = f.ctx.spec
    if spec is not None and f.ctx.pow_idx(unit.idx, spec.q + 1) != 1:
        raise FieldError("SCR unit escaped the unit subgroup (broken tower)")
    return ScrCertificate(f.degree, unit)
