"""The order-(q+1) subgroup of F_{q^2}^*, the fractional-linear bijection
from F_q plus infinity onto it, and the numerator-of-composition reduction.

The map inv(x) = beta*(d^q - x)/(d - x), for any d outside F_q, carries
F_q onto the subgroup minus {beta} and infinity onto beta. Composing a
unit-1 SCR polynomial with it and clearing denominators yields a
polynomial with coefficients in F_q, which converts "no root in the
subgroup" into "no root in F_q".
"""

from __future__ import annotations

from .ff import Element, FieldError, FieldSpec, LevelMismatch
from .poly import Poly, scr_unit


class _Infinity:
    """Point at infinity on the projective line over F_q."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


class MuGroup:
    """The q+1 solutions of x^(q+1) = 1, listed as powers of a canonical
    generator (g^(q-1) for the least primitive root g of F_{q^2}^*)."""

    __slots__ = ("spec", "generator", "elements", "_set")

    def __init__(self, spec: FieldSpec):
        ctx = spec.fq2
        m = ctx.order - 1
        step = spec.q - 1
        elems = tuple(ctx._exp[(step * k) % m] for k in range(spec.q + 1))
        self.spec = spec
        self.generator = Element(ctx, ctx._exp[step % m])
        self.elements = tuple(Element(ctx, i) for i in elems)
        self._set = frozenset(elems)
        if len(self._set) != spec.q + 1:
            raise FieldError("unit subgroup has the wrong order (broken tower)")

    def contains_idx(self, i: int) -> bool:
        return i in self._set

    def index_set(self) -> frozenset[int]:
        return self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def label(self, x: Element) -> str:
        """Serialized form: power of the canonical generator plus index."""
        ctx = self.spec.fq2
        k = (ctx._log[x.idx] // (self.spec.q - 1)) if self.spec.q > 1 else 0
        return f"mu^{k % (self.spec.q + 1)}#{x.idx}"


def mu_build(spec: FieldSpec) -> MuGroup:
    if spec._mu is None:
        spec._mu = MuGroup(spec)
    return spec._mu


def mu_contains(spec: FieldSpec, x: Element) -> bool:
    if x.ctx is not spec.fq2:
        x = spec.lift(x)
    return x.ctx.pow_idx(x.idx, spec.q + 1) == 1


def has_root_in_mu(f: Poly) -> Element | None:
    """First root of f on the subgroup in canonical order, or None."""
    if f.is_zero():
        raise FieldError("the zero polynomial has every root")
    mu = mu_build(f.ctx.spec)
    for x in mu.elements:
        if f.eval_idx(x.idx) == 0:
            return x
    return None


class MobiusMap:
    """Parameters (delta, beta) of the fractional-linear bijection."""

    __slots__ = ("spec", "delta", "beta")

    def __init__(self, spec: FieldSpec, delta: Element, beta: Element | None = None):
        delta = spec.lift(delta)
        if delta.idx < spec.q:
            raise FieldError("delta must lie outside F_q")
        if beta is None:
            beta = spec.one
        else:
            beta = spec.lift(beta)
            if not mu_contains(spec, beta):
                raise FieldError("beta must be a (q+1)-th root of unity")
        self.spec = spec
        self.delta = delta
        self.beta = beta

    def __repr__(self):
        return f"MobiusMap(delta={self.delta}, beta={self.beta})"


def mobius_inv_eval(m: MobiusMap, x) -> Element:
    """beta*(delta^q - x)/(delta - x) for x in F_q; infinity maps to beta."""
    spec = m.spec
    if x is INFINITY:
        return m.beta
    if not isinstance(x, Element):
        raise LevelMismatch("expected an F_q element or INFINITY")
    if not spec.in_fq(x):
        raise FieldError("argument must lie in F_q (or be INFINITY)")
    x = spec.lift(x)
    ctx = spec.fq2
    dq = Element(ctx, ctx.frob_idx(m.delta.idx))
    return m.beta * (dq - x) / (m.delta - x)


def compose_numerator(C: Poly, m: MobiusMap) -> Poly:
    """Numerator of C(inv(x)) as a polynomial over F_q.

    Requires a unit-1 SCR input and beta = 1; each coefficient of the
    numerator is then Frobenius-fixed, which is asserted before lowering.
    """
    spec = m.spec
    if C.ctx is not spec.fq2:
        raise LevelMismatch("composition expects a polynomial over F_{q^2}")
    if m.beta.idx != 1:
        raise FieldError("composition is defined for beta = 1")
    unit = scr_unit(C, C.degree)
    if unit is None or unit.idx != 1:
        raise FieldError("composition needs an SCR polynomial with unit 1")
    ctx = spec.fq2
    n = C.degree
    delta = m.delta.idx
    dq = ctx.frob_idx(delta)
    top = Poly(ctx, (dq, ctx.neg_idx(1)))     # delta^q - x
    bot = Poly(ctx, (delta, ctx.neg_idx(1)))  # delta - x
    top_pows = [Poly(ctx, (1,))]
    bot_pows = [Poly(ctx, (1,))]
    for _ in range(n):
        top_pows.append(top_pows[-1] * top)
        bot_pows.append(bot_pows[-1] * bot)
    h = Poly(ctx, ())
    for i, c in enumerate(C.coeffs):
        if c:
            h = h + (top_pows[i] * bot_pows[n - i]) * Element(ctx, c)
    for c in h.coeffs:
        if ctx.frob_idx(c) != c:
            raise FieldError("numerator coefficient escaped F_q "
                             "(the SCR unit-1 invariant is broken)")
    return Poly(spec.fq, h.coeffs)


def g0_permutes_mu(B: Poly, r: int) -> bool:
    """Whether x^r * B(x)^(q-1) permutes the subgroup.

    Exhaustive: the image always lies in the subgroup plus {0}, and it is
    a permutation exactly when the image set is the whole subgroup.
    """
    spec = B.ctx.spec
    if B.ctx is not spec.fq2:
        raise LevelMismatch("expected a polynomial over F_{q^2}")
    mu = mu_build(spec)
    ctx = spec.fq2
    q = spec.q
    image = set()
    for x in mu.elements:
        bx = B.eval_idx(x.idx)
        if bx == 0:
            return False
        image.add(ctx.mul_idx(ctx.pow_idx(x.idx, r), ctx.pow_idx(bx, q - 1)))
    return image == mu._set
