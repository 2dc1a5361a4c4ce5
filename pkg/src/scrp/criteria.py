"""Root-in-subgroup criteria for the SCR families, plus the two
constructive families (guaranteed root / guaranteed no root).

Every predicate here decides, without exhaustive search, whether the
relevant SCR polynomial has a root among the (q+1)-th roots of unity.
The exhaustive scan in mu.has_root_in_mu is kept strictly separate and
serves as the independent oracle in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .ff import (
    Element,
    FieldError,
    FieldSpec,
    absolute_trace,
    frobenius_q,
    is_cube_in,
    is_square,
    norm_q2_to_q,
    poly_is_irreducible,
    solve_artin_schreier,
)
from .mu import MobiusMap, compose_numerator, has_root_in_mu, mu_contains
from .poly import Poly


class HypothesisViolation(FieldError):
    """Parameters fall outside a criterion's stated hypotheses."""

    def __init__(self, code: str, message: str | None = None):
        super().__init__(message or code)
        self.code = code


@dataclass(frozen=True)
class CriterionVerdict:
    has_mu_root: bool
    witness: Element | None
    reason: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CubicReduction:
    """Depressed-cubic data for the even-characteristic degree-3 family."""

    sigma1: Element
    sigma2: Element
    sigma3: Element
    p_coef: Element
    q_coef: Element


def _spec_of(x: Element) -> FieldSpec:
    spec = x.ctx.spec
    if spec is None:
        raise FieldError("element is not attached to a field tower")
    return spec


def _verdict(spec: FieldSpec, C: Poly, has_root: bool, reason: dict) -> CriterionVerdict:
    witness = has_root_in_mu(C) if has_root else None
    return CriterionVerdict(has_root, witness, reason)


def _require_nonsub(spec: FieldSpec, a: Element, name: str = "a") -> Element:
    a = spec.lift(a)
    if a.idx < spec.q:
        raise HypothesisViolation(f"{name} in F_q", f"{name} must lie outside F_q")
    return a


def _require_fq_unit(spec: FieldSpec, b: Element, name: str = "b") -> Element:
    b = spec.lift(b)
    if b.idx >= spec.q:
        raise HypothesisViolation(f"{name} outside F_q", f"{name} must lie in F_q")
    if b.idx == 0:
        raise HypothesisViolation(f"{name} = 0", f"{name} must be nonzero")
    return b


# ------------------------------------------------------------------
# degree 1


def deg1_root(a1: Element, beta: Element | None = None) -> Element:
    """The guaranteed subgroup root -beta^q * a1^(q-1) of (beta*a1)^q + a1*x."""
    spec = _spec_of(a1)
    a1 = spec.lift(a1)
    if a1.idx == 0:
        raise HypothesisViolation("a1 = 0", "leading coefficient must be nonzero")
    beta = spec.one if beta is None else spec.lift(beta)
    if not mu_contains(spec, beta):
        raise HypothesisViolation("beta outside mu", "unit must be a (q+1)-th root of unity")
    alpha = -(frobenius_q(beta) * frobenius_q(a1) / a1)
    assert mu_contains(spec, alpha)
    assert frobenius_q(beta * a1) + a1 * alpha == spec.zero
    return alpha


def deg1_poly(a1: Element, beta: Element | None = None) -> Poly:
    spec = _spec_of(a1)
    a1 = spec.lift(a1)
    beta = spec.one if beta is None else spec.lift(beta)
    return Poly(spec.fq2, [frobenius_q(beta * a1).idx, a1.idx])


# ------------------------------------------------------------------
# degree 2


def deg2_poly(spec: FieldSpec, a: Element, b: Element) -> Poly:
    """C(x) = a^q + b*x + a*x^2 over F_{q^2}."""
    a = spec.lift(a)
    b = spec.lift(b)
    return Poly(spec.fq2, [frobenius_q(a).idx, b.idx, a.idx])


def char2_deg2_has_root(a: Element, b: Element) -> CriterionVerdict:
    """Even characteristic: a*x^2 + b*x + a^q has a subgroup root exactly
    when Tr(a^(q+1) / b^2) = 1."""
    spec = _spec_of(a)
    if spec.p != 2:
        raise HypothesisViolation("odd characteristic", "this test needs characteristic 2")
    a = spec.lift(a)
    b = _require_fq_unit(spec, b)
    arg = norm_q2_to_q(a) / (spec.lower(b) * spec.lower(b))
    tr = absolute_trace(arg)
    C = deg2_poly(spec, a, b)
    has_root = tr.idx == 1
    return _verdict(spec, C, has_root, {
        "criterion": "char2-deg2-trace",
        "trace_arg": arg.idx,
        "trace": tr.idx,
    })


def odd_deg2_no_root(a: Element, b: Element) -> CriterionVerdict:
    """Odd characteristic: a^q + b*x + a*x^2 has no subgroup root exactly
    when b^2 - 4a^(q+1) is a nonzero non-square in F_q."""
    spec = _spec_of(a)
    if spec.p == 2:
        raise HypothesisViolation("even characteristic", "this test needs odd characteristic")
    a = _require_nonsub(spec, a)
    b = _require_fq_unit(spec, b)
    aq = frobenius_q(a)
    if aq + b + a == spec.zero:
        raise HypothesisViolation("C(1) = 0")
    if aq - b + a == spec.zero:
        raise HypothesisViolation("C(-1) = 0")
    bl = spec.lower(b)
    disc = bl * bl - 4 * norm_q2_to_q(a)
    no_root = disc.idx != 0 and not is_square(disc)
    klass = "zero" if disc.idx == 0 else ("square" if is_square(disc) else "nonsquare")
    C = deg2_poly(spec, a, b)
    return _verdict(spec, C, not no_root, {
        "criterion": "odd-deg2-discriminant",
        "discriminant": disc.idx,
        "class": klass,
    })


def deg2_verdict(a: Element, b: Element) -> CriterionVerdict:
    spec = _spec_of(a)
    if spec.p == 2:
        return char2_deg2_has_root(a, b)
    return odd_deg2_no_root(a, b)


# ------------------------------------------------------------------
# degree 2q, reduced to degree 2 by x -> 1/x on the subgroup


def deg2q_poly(spec: FieldSpec, a: Element, b: Element) -> Poly:
    """C(x) = a^q * x^(2q) + b * x^q + a."""
    a = spec.lift(a)
    b = spec.lift(b)
    q = spec.q
    coeffs = [0] * (2 * q + 1)
    coeffs[0] = a.idx
    coeffs[q] = b.idx
    coeffs[2 * q] = frobenius_q(a).idx
    return Poly(spec.fq2, coeffs)


def deg2q_reduce(a: Element, b: Element) -> Poly:
    """Root-equivalent degree-2 form a*x^2 + b*x + a^q of the degree-2q SCR."""
    spec = _spec_of(a)
    a = spec.lift(a)
    b = spec.lift(b)
    return Poly(spec.fq2, [frobenius_q(a).idx, b.idx, a.idx])


def deg2q_verdict(a: Element, b: Element) -> CriterionVerdict:
    spec = _spec_of(a)
    inner = deg2_verdict(a, b)
    C = deg2q_poly(spec, a, b)
    reason = dict(inner.reason)
    reason["reduced_from"] = "deg-2q"
    return _verdict(spec, C, inner.has_mu_root, reason)


# ------------------------------------------------------------------
# binomial cubic


def binomial_deg3_poly(spec: FieldSpec, a: Element) -> Poly:
    a = spec.lift(a)
    return Poly(spec.fq2, [frobenius_q(a).idx, 0, 0, a.idx])


def binomial_deg3_no_root(a: Element) -> CriterionVerdict:
    """a*x^3 + a^q has a subgroup root exactly when -a^(q-1) lies in the
    subgroup of index gcd(q+1, 3) (the cubes of the unit subgroup)."""
    spec = _spec_of(a)
    a = _require_nonsub(spec, a)
    t = -(frobenius_q(a) / a)
    e = (spec.q + 1) // math.gcd(spec.q + 1, 3)
    has_root = t ** e == spec.one
    C = binomial_deg3_poly(spec, a)
    return _verdict(spec, C, has_root, {
        "criterion": "cubic-binomial-coset",
        "minus_a_pow": t.idx,
        "coset_exponent": e,
    })


# ------------------------------------------------------------------
# even-characteristic full cubic


def char2_cubic_poly(spec: FieldSpec, a: Element, b: Element) -> Poly:
    """C(x) = a^q + b*x + b*x^2 + a*x^3."""
    a = spec.lift(a)
    b = spec.lift(b)
    return Poly(spec.fq2, [frobenius_q(a).idx, b.idx, b.idx, a.idx])


def _check_cubic_hypotheses(spec, a, b):
    if spec.p != 2:
        raise HypothesisViolation("odd characteristic", "this family needs characteristic 2")
    a = _require_nonsub(spec, a)
    b = _require_fq_unit(spec, b)
    bl = spec.lower(b)
    if norm_q2_to_q(a) + bl * bl == Element(spec.fq, 0):
        raise HypothesisViolation("a^(q+1) + b^2 = 0")
    return a, b


def char2_cubic_reduction(a: Element, b: Element, delta: Element | None = None) -> CubicReduction:
    """Monicize the composition numerator of a^q + b*x + b*x^2 + a*x^3,
    depress it, and cross-check the closed forms of both coefficients."""
    spec = _spec_of(a)
    a, b = _check_cubic_hypotheses(spec, a, b)
    delta = spec.delta_canonical if delta is None else _require_nonsub(spec, delta, "delta")
    C = char2_cubic_poly(spec, a, b)
    h = compose_numerator(C, MobiusMap(spec, delta))
    if h.degree != 3:
        raise FieldError("composition numerator degenerated")
    lead = h.coefficient(3)
    s1 = h.coefficient(2) / lead
    s2 = h.coefficient(1) / lead
    s3 = h.coefficient(0) / lead
    p_coef = s2 + s1 * s1
    q_coef = s3 + s1 * s2

    dq = frobenius_q(delta)
    aq = frobenius_q(a)
    w = a + aq
    t = delta + dq
    closed_p = spec.lower((t * t * (aq + b) * (a + b)) / (w * w))
    nb2 = spec.lift(norm_q2_to_q(a)) + b * b
    closed_q = spec.lower((nb2 * t * t * t) / (w * w))
    if p_coef != closed_p or q_coef != closed_q:
        raise FieldError("depressed-cubic closed forms disagree with the "
                         "composition numerator")
    if p_coef.idx == 0 or q_coef.idx == 0:
        raise FieldError("depressed cubic is degenerate under the hypotheses")
    return CubicReduction(s1, s2, s3, p_coef, q_coef)


def char2_cubic_trace_arg(a: Element, b: Element, formula: str = "statement") -> Element:
    """The quantity fed to the trace test, in its two published spellings.

    "statement": (a^q+b)^3 (a+b)^3 / ((a+a^q)^2 (a^(q+1)+b^2)^2)
    "proof":     (a^q+a)^3 (a+b)^3 / ((a^q+a)^2 (a^(q+1)+b^2)^2)
    The first equals P^3/Q^2 of the depressed cubic; the second is kept
    behind this flag for the empirical comparison in the verify sweeps.
    """
    spec = _spec_of(a)
    a = spec.lift(a)
    b = spec.lift(b)
    aq = frobenius_q(a)
    w = a + aq
    nb2 = spec.lift(norm_q2_to_q(a)) + b * b
    if formula == "statement":
        num = (aq + b) ** 3 * (a + b) ** 3
    elif formula == "proof":
        num = w ** 3 * (a + b) ** 3
    else:
        raise FieldError(f"unknown trace formula {formula!r}")
    return spec.lower(num / (w * w * nb2 * nb2))


def char2_cubic_no_root(a: Element, b: Element, delta: Element | None = None,
                        trace_formula: str = "statement") -> CriterionVerdict:
    """Even characteristic: a^q + b*x + b*x^2 + a*x^3 has no subgroup root
    exactly when the depressed cubic has no F_q root, i.e. when
    Tr(P^3/Q^2) = Tr(1) and both roots of x^2 + Q*x + P^3 fail the cube
    test (in F_q for even extension degree, in F_{q^2} for odd)."""
    spec = _spec_of(a)
    red = char2_cubic_reduction(a, b, delta)
    arg = char2_cubic_trace_arg(a, b, trace_formula)
    tr = absolute_trace(arg)
    tr_one = absolute_trace(Element(spec.fq, 1))
    C = char2_cubic_poly(spec, a, b)
    reason = {
        "criterion": "char2-cubic",
        "trace_formula": trace_formula,
        "trace_arg": arg.idx,
        "trace": tr.idx,
        "trace_target": tr_one.idx,
        "p_coef": red.p_coef.idx,
        "q_coef": red.q_coef.idx,
    }
    if tr.idx != tr_one.idx:
        return _verdict(spec, C, True, reason)
    # roots of x^2 + Q*x + P^3 via z = x/Q:  z^2 + z = P^3/Q^2
    v = red.p_coef ** 3 / (red.q_coef * red.q_coef)
    m_odd = spec.n % 2 == 1
    if m_odd:
        v = spec.lift(v)
        qc = spec.lift(red.q_coef)
        which = "q2"
    else:
        qc = red.q_coef
        which = "q"
    sols = solve_artin_schreier(v)
    if not sols:
        raise FieldError("resolvent quadratic lost its roots (parity bug)")
    t1 = qc * sols[0]
    t2 = qc * sols[1]
    cubes = (is_cube_in(t1, which), is_cube_in(t2, which))
    reason["t_field"] = which
    reason["t_roots"] = (t1.idx, t2.idx)
    reason["t_cubes"] = cubes
    no_root = not cubes[0] and not cubes[1]
    return _verdict(spec, C, not no_root, reason)


# ------------------------------------------------------------------
# degree q+1, reduced to degree 2


def xq1_poly(spec: FieldSpec, a: Element, b: Element) -> Poly:
    """C(x) = a*x^(q+1) + b*x^q + b*x + a^q."""
    a = spec.lift(a)
    b = spec.lift(b)
    q = spec.q
    coeffs = [0] * (q + 2)
    coeffs[0] = frobenius_q(a).idx
    coeffs[1] = b.idx
    coeffs[q] = b.idx
    coeffs[q + 1] = a.idx
    return Poly(spec.fq2, coeffs)


def xq1_family_reduce(a: Element, b: Element) -> Poly:
    """Root-equivalent degree-2 form b*x^2 + (a+a^q)*x + b."""
    spec = _spec_of(a)
    a = spec.lift(a)
    b = _require_fq_unit(spec, b)
    w = a + frobenius_q(a)
    return Poly(spec.fq2, [b.idx, w.idx, b.idx])


def xq1_no_root(a: Element, b: Element) -> CriterionVerdict:
    """Criterion for a*x^(q+1) + b*x^q + b*x + a^q, both characteristics.

    Odd: no subgroup root exactly when (a+a^q)^2 - (2b)^2 is a nonzero
    non-square in F_q (for a in F_q this is 4(a^2-b^2), same square class
    as a^2 - b^2). Even: needs a outside F_q; no root exactly when
    Tr(b^2/(a+a^q)^2) is not 1.
    """
    spec = _spec_of(a)
    a = spec.lift(a)
    b = _require_fq_unit(spec, b)
    w = a + frobenius_q(a)
    C = xq1_poly(spec, a, b)
    if spec.p == 2:
        if w.idx == 0:
            raise HypothesisViolation("a in F_q", "even case needs a outside F_q")
        wl = spec.lower(w)
        bl = spec.lower(b)
        arg = (bl * bl) / (wl * wl)
        tr = absolute_trace(arg)
        return _verdict(spec, C, tr.idx == 1, {
            "criterion": "xq1-char2-trace",
            "trace_arg": arg.idx,
            "trace": tr.idx,
        })
    if w + 2 * b == spec.zero:
        raise HypothesisViolation("C'(1) = 0")
    if w - 2 * b == spec.zero:
        raise HypothesisViolation("C'(-1) = 0")
    wl = spec.lower(w)
    bl = spec.lower(b)
    disc = wl * wl - 4 * bl * bl
    no_root = disc.idx != 0 and not is_square(disc)
    klass = "zero" if disc.idx == 0 else ("square" if is_square(disc) else "nonsquare")
    return _verdict(spec, C, not no_root, {
        "criterion": "xq1-odd-discriminant",
        "discriminant": disc.idx,
        "class": klass,
        "a_in_fq": a.idx < spec.q,
    })


# ------------------------------------------------------------------
# constructive families


def linear_factor_family(delta: Element, beta: Element, n: int) -> tuple[Poly, Element]:
    """(delta*x - beta*delta^q)^n - (x - beta)^n together with its
    guaranteed subgroup root beta*(delta^q - 1)/(delta - 1).

    Needs gcd(n, q-1) = 1; the resulting polynomial then always has a
    subgroup root, so the assembled maps never permute F_{q^2}.
    """
    spec = _spec_of(delta)
    delta = _require_nonsub(spec, delta, "delta")
    beta = spec.lift(beta)
    if not mu_contains(spec, beta):
        raise HypothesisViolation("beta outside mu")
    if n < 1 or math.gcd(n, spec.q - 1) != 1:
        raise HypothesisViolation("gcd(n, q-1) != 1")
    ctx = spec.fq2
    dq = frobenius_q(delta)
    left = Poly(ctx, [(-(beta * dq)).idx, delta.idx])
    right = Poly(ctx, [(-beta).idx, 1])
    C = left ** n - right ** n
    alpha = beta * (dq - 1) / (delta - 1)
    assert mu_contains(spec, alpha)
    assert C.eval_idx(alpha.idx) == 0
    assert C.eval_idx(beta.idx) != 0
    return C, alpha


def irreducible_family(f: Poly, delta: Element, beta: Element) -> Poly:
    """Sum of b_i * (delta*x - beta*delta^q)^(m-i) * (x - beta)^i for a
    monic irreducible f = x^m + b_1 x^(m-1) + ... + b_m over F_q.

    A subgroup root would transport to an F_q root of f, so the result is
    guaranteed (and verified) to have none.
    """
    spec = _spec_of(delta)
    delta = _require_nonsub(spec, delta, "delta")
    beta = spec.lift(beta)
    if not mu_contains(spec, beta):
        raise HypothesisViolation("beta outside mu")
    if f.ctx is not spec.fq and f.ctx is not spec.fp:
        raise HypothesisViolation("f not over F_q")
    m = f.degree
    if m < 2:
        raise HypothesisViolation("deg f < 2",
                                  "degree-1 polynomials always have an F_q root")
    if f.coeffs[-1] != 1:
        raise HypothesisViolation("f not monic")
    if not poly_is_irreducible(f.coeffs, f.ctx):
        raise HypothesisViolation("f reducible")
    ctx = spec.fq2
    dq = frobenius_q(delta)
    left = Poly(ctx, [(-(beta * dq)).idx, delta.idx])
    right = Poly(ctx, [(-beta).idx, 1])
    left_pows = [Poly(ctx, (1,))]
    right_pows = [Poly(ctx, (1,))]
    for _ in range(m):
        left_pows.append(left_pows[-1] * left)
        right_pows.append(right_pows[-1] * right)
    C = Poly(ctx, ())
    for i in range(m + 1):
        b_i = f.coeffs[m - i] if m - i < len(f.coeffs) else 0
        if b_i:
            C = C + left_pows[m - i] * right_pows[i] * Element(ctx, b_i)
    assert has_root_in_mu(C) is None
    return C
