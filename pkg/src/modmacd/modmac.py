"""Headline assembly: modified Macdonald coefficient tables by three routes,
the Hall-Littlewood specialization, Kostka extraction, duality and the
Cauchy-identity test harness."""

from .combinat import Partition, conjugate, n_stat, partitions_of
from .errors import (InsufficientVariables, NegativeCoefficient,
                     TruncationTooSmall)
from .exactalg import (ExactPolynomial, ONE, P, RationalFunction,
                       ratfun_normalize, sym, ZERO)
from .lattice import partition_function_coeffs
from .qseries import c_functions
from .symoracle import (basis_convert, integral_J, macdonald_P,
                        modified_H_oracle, monomial_expand, schur_expand,
                        W_oracle, _expand_monomial)

Q = sym("q")
T = sym("t")

ROUTES = ("lattice_x", "lattice_dual", "oracle")


class HResult:
    """Monomial coefficient table of a modified Macdonald polynomial."""

    __slots__ = ("shape", "coeffs", "route")

    def __init__(self, shape, coeffs, route):
        self.shape = shape
        self.coeffs = dict(coeffs)
        self.route = route
        for mu, poly in self.coeffs.items():
            if mu.weight() != shape.weight():
                raise NegativeCoefficient(
                    "table key %r has the wrong weight" % (mu,))
            if not poly.is_nonnegative():
                raise NegativeCoefficient(
                    "coefficient at %r has a negative term" % (mu,))

    def __eq__(self, other):
        if not isinstance(other, HResult):
            return NotImplemented
        return self.shape == other.shape and self.coeffs == other.coeffs


def modified_H(lam, N=None, route="lattice_x"):
    """Coefficient of m_mu in H_lam, for partitions mu of length <= N."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    least = max(len(lam), lam.part(1), 1)
    if N is None:
        N = least
    if N < least:
        raise InsufficientVariables(
            "N must be at least max(ell(lambda), ell(lambda')) = %d" % least)
    if route not in ROUTES:
        raise ValueError("route must be one of %s" % (ROUTES,))
    if route == "oracle":
        table = modified_H_oracle(lam, nvars=N)
        coeffs = {}
        for mu, c in table.coeffs.items():
            coeffs[mu] = c.as_polynomial()
    else:
        formula = "x" if route == "lattice_x" else "z"
        coeffs = partition_function_coeffs(lam, N, formula=formula)
    return HResult(lam, coeffs, route)


def modified_HL(lam, N):
    """Kirillov coefficients of the modified Hall-Littlewood polynomial."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if N < len(lam):
        raise InsufficientVariables("N must be at least ell(lambda)")
    return partition_function_coeffs(lam, N, formula="hl")


def kostka_qt(lam):
    """Two-parameter Kostka coefficients of H_lam, keyed by Partition."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if lam.weight() == 0:
        return {Partition(): ONE}
    table = modified_H_oracle(lam, nvars=lam.weight())
    sch = schur_expand(table)
    out = {}
    for nu, c in sch.coeffs.items():
        poly = ratfun_normalize(c).as_polynomial()
        if poly is None or not poly.is_nonnegative():
            raise NegativeCoefficient(
                "Kostka coefficient at %r is not in N[q,t]" % (nu,))
        if not poly.is_zero():
            out[nu] = poly
    return out


def duality_check(lam):
    """Coefficientwise transpose duality of the monomial tables."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    conj = conjugate(lam)
    N = max(lam.weight(), 1)
    table = modified_H(lam, N, route="oracle").coeffs
    dual = modified_H(conj, N, route="oracle").coeffs
    pref = ExactPolynomial.monomial({"t": n_stat(lam), "q": n_stat(conj)})
    inv = {"q": ExactPolynomial.monomial({"t": -1}),
           "t": ExactPolynomial.monomial({"q": -1})}
    keys = set(table) | set(dual)
    for mu in keys:
        lhs = table.get(mu, ZERO)
        rhs = pref * dual.get(mu, ZERO).substitute(inv)
        if lhs != rhs:
            return False
    return True


def w_reduction_check(lam, N):
    """All four corner specializations of the two-alphabet W polynomial."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    conj = conjugate(lam)
    W = W_oracle(lam, N)
    xs = ["x%d" % i for i in range(1, N + 1)]
    zs = ["z%d" % i for i in range(1, N + 1)]
    swap_rename = {"q": T, "t": Q}
    swap_rename.update({x: sym(z) for x, z in zip(xs, zs)})

    # z_i = -t x_i  ->  c_lam(q, t) P_lam(x; q, t)
    spec = W.substitute({z: P(-1) * T * sym(x) for x, z in zip(xs, zs)})
    if spec != monomial_expand(integral_J(lam, N), N):
        return False
    # x_i = -q z_i  ->  c_{lam'}(t, q) P_{lam'}(z; t, q)
    spec = W.substitute({x: P(-1) * Q * sym(z) for x, z in zip(xs, zs)})
    dual_J = monomial_expand(integral_J(conj, N), N).substitute(swap_rename)
    if spec != dual_J:
        return False
    # z = 0  ->  H_lam(x; q, t)
    spec = W.substitute({z: P(0) for z in zs})
    if spec != monomial_expand(modified_H_oracle(lam, nvars=N), N):
        return False
    # x = 0  ->  H_{lam'}(z; t, q)
    spec = W.substitute({x: P(0) for x in xs})
    Hd = monomial_expand(modified_H_oracle(conj, nvars=N), N)
    return spec == Hd.substitute(swap_rename)


# ---------------------------------------------------------------------------
# Cauchy identities
# ---------------------------------------------------------------------------
#
# Truncated series live in a fixed variable frame: group A = x_1..x_nx,
# z_1..z_nx and group B = y_1..y_ny, w_1..w_ny.  A series is a dict mapping
# exponent tuples (over the frame) to RationalFunction coefficients in (q,t);
# terms whose group-A or group-B degree exceeds the truncation are dropped.

RF_ONE = RationalFunction(ONE)


class _Frame:
    def __init__(self, nx, ny, degree):
        self.names = tuple(["x%d" % i for i in range(1, nx + 1)]
                           + ["z%d" % i for i in range(1, nx + 1)]
                           + ["y%d" % j for j in range(1, ny + 1)]
                           + ["w%d" % j for j in range(1, ny + 1)])
        self.index = {n: i for i, n in enumerate(self.names)}
        self.na = 2 * nx
        self.degree = degree

    def admits(self, exp):
        return (sum(exp[:self.na]) <= self.degree
                and sum(exp[self.na:]) <= self.degree)

    def unit(self):
        return {(0,) * len(self.names): RF_ONE}


def _series_add(frame, a, b):
    out = dict(a)
    for e, c in b.items():
        got = out.get(e)
        tot = c if got is None else got + c
        if tot.is_zero():
            out.pop(e, None)
        else:
            out[e] = tot
    return out


def _series_mul(frame, a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(u + v for u, v in zip(ea, eb))
            if not frame.admits(e):
                continue
            c = ca * cb
            got = out.get(e)
            tot = c if got is None else got + c
            if tot.is_zero():
                out.pop(e, None)
            else:
                out[e] = tot
    return out


def _series_equal(a, b):
    keys = set(a) | set(b)
    zero = RationalFunction(ZERO)
    return all(a.get(e, zero) == b.get(e, zero) for e in keys)


def _series_from_poly(frame, poly):
    """Split an ExactPolynomial over frame symbols plus (q, t) into a series."""
    out = {}
    width = len(frame.names)
    for exp, coef in poly.terms.items():
        frame_exp = [0] * width
        qt = {}
        for name, e in zip(poly.vars, exp):
            if not e:
                continue
            if name in frame.index:
                frame_exp[frame.index[name]] = e
            else:
                qt[name] = e
        fe = tuple(frame_exp)
        if not frame.admits(fe):
            continue
        c = RationalFunction(P(coef) * ExactPolynomial.monomial(qt))
        got = out.get(fe)
        tot = c if got is None else got + c
        out[fe] = tot
    return {e: c for e, c in out.items() if not c.is_zero()}


def _expand_symexpr(frame, e, names):
    """Monomial-basis SymmetricExpr over the given frame symbols."""
    nvars = len(names)
    out = {}
    width = len(frame.names)
    for mu, c in e.coeffs.items():
        if len(mu) > nvars:
            continue
        for exp in _expand_monomial(mu, nvars):
            frame_exp = [0] * width
            for name, v in zip(names, exp):
                frame_exp[frame.index[name]] = v
            fe = tuple(frame_exp)
            if not frame.admits(fe):
                continue
            got = out.get(fe)
            out[fe] = c if got is None else got + c
    return {e2: c for e2, c in out.items() if not c.is_zero()}


def _swap_qt(e):
    """Exchange the roles of q and t in every coefficient."""
    swap = {"q": T, "t": Q}
    coeffs = {mu: c.substitute(swap) for mu, c in e.coeffs.items()}
    return type(e)(e.basis, coeffs, e.nvars)


def _pochhammer_list(base, k):
    """(b; b)_k as a polynomial, with b the base symbol."""
    b = sym(base)
    out = ONE
    for i in range(1, k + 1):
        out = out * (ONE - b ** i)
    return out


def _factor_coeffs(kind, degree):
    """Coefficients c_m of the per-pair factor f(u) = sum c_m u^m."""
    if kind == "one_plus":
        return [RF_ONE, RF_ONE] + [RationalFunction(ZERO)] * max(
            0, degree - 1)
    out = [RF_ONE]
    if kind == "pq":
        # (t u; q)_inf / (u; q)_inf
        num, den = ONE, ONE
        for m in range(1, degree + 1):
            num = num * (ONE - T * Q ** (m - 1))
            den = den * (ONE - Q ** m)
            out.append(RationalFunction(num, den))
        return out
    if kind in ("inv_q", "inv_t"):
        base = "q" if kind == "inv_q" else "t"
        for m in range(1, degree + 1):
            out.append(RationalFunction(ONE, _pochhammer_list(base, m)))
        return out
    if kind in ("neg_q", "neg_t"):
        base = "q" if kind == "neg_q" else "t"
        b = sym(base)
        for m in range(1, degree + 1):
            out.append(RationalFunction(b ** (m * (m - 1) // 2),
                                        _pochhammer_list(base, m)))
        return out
    if kind in ("inv_qt", "neg_qt"):
        # complete homogeneous / elementary functions of {q^a t^b: a,b >= 0}
        p = [None]
        for r in range(1, degree + 1):
            p.append(RationalFunction(
                ONE, (ONE - Q ** r) * (ONE - T ** r)))
        sign = 1 if kind == "inv_qt" else -1
        for m in range(1, degree + 1):
            acc = RationalFunction(ZERO)
            s = 1
            for r in range(1, m + 1):
                acc = acc + p[r] * out[m - r] * s
                s *= sign
            out.append(acc / m)
        return out
    raise ValueError("unknown factor kind %r" % (kind,))


def _product_side(frame, factors, degree):
    acc = frame.unit()
    width = len(frame.names)
    for va, vb, kind in factors:
        coeffs = _factor_coeffs(kind, degree)
        fac = {}
        for m, c in enumerate(coeffs):
            if c.is_zero():
                continue
            exp = [0] * width
            exp[frame.index[va]] = m
            exp[frame.index[vb]] = m
            fe = tuple(exp)
            if frame.admits(fe):
                fac[fe] = c
        acc = _series_mul(frame, acc, fac)
    return acc


def _scaled(series, scale):
    return {e: c * scale for e, c in series.items()}


def cauchy_check(identity, nx, ny, degree):
    """Verify one of the Cauchy identities at a fixed series truncation."""
    if degree < 1:
        raise TruncationTooSmall("degree must be at least 1")
    frame = _Frame(nx, ny, degree)
    xs = ["x%d" % i for i in range(1, nx + 1)]
    zs = ["z%d" % i for i in range(1, nx + 1)]
    ys = ["y%d" % j for j in range(1, ny + 1)]
    ws = ["w%d" % j for j in range(1, ny + 1)]

    lhs = frame.unit()
    shapes = [lam for d in range(1, degree + 1) for lam in partitions_of(d)]

    if identity == "PQ":
        for lam in shapes:
            if len(lam) > min(nx, ny):
                continue
            cf = c_functions(lam)
            px = _expand_symexpr(frame, macdonald_P(lam, nx), xs)
            qy = _scaled(_expand_symexpr(frame, macdonald_P(lam, ny), ys),
                         cf["b"])
            lhs = _series_add(frame, lhs, _series_mul(frame, px, qy))
        rhs = _product_side(
            frame, [(a, b, "pq") for a in xs for b in ys], degree)
    elif identity == "dual":
        for lam in shapes:
            if len(lam) > nx or lam.part(1) > ny:
                continue
            px = _expand_symexpr(frame, macdonald_P(lam, nx), xs)
            py = _expand_symexpr(
                frame, _swap_qt(macdonald_P(conjugate(lam), ny)), ys)
            lhs = _series_add(frame, lhs, _series_mul(frame, px, py))
        rhs = _product_side(
            frame, [(a, b, "one_plus") for a in xs for b in ys], degree)
    elif identity == "W":
        for lam in shapes:
            cf = c_functions(lam)
            wx = _series_from_poly(frame, W_oracle(lam, nx))
            rename = {}
            for j in range(1, ny + 1):
                rename["x%d" % j] = sym("y%d" % j)
                rename["z%d" % j] = sym("w%d" % j)
            wy = _series_from_poly(frame, W_oracle(lam, ny).substitute(rename))
            scale = RationalFunction(ONE, cf["c"] * cf["cprime"])
            lhs = _series_add(frame, lhs,
                              _scaled(_series_mul(frame, wx, wy), scale))
        rhs = _product_side(
            frame,
            [(a, b, "neg_qt") for a in zs for b in ys]
            + [(a, b, "neg_qt") for a in xs for b in ws]
            + [(a, b, "inv_qt") for a in xs for b in ys]
            + [(a, b, "inv_qt") for a in zs for b in ws], degree)
    elif identity == "mixedQ":
        for lam in shapes:
            if len(lam) > ny:
                continue
            cf = c_functions(lam)
            wx = _series_from_poly(frame, W_oracle(lam, nx))
            py = _expand_symexpr(frame, macdonald_P(lam, ny), ys)
            scale = RationalFunction(ONE, cf["cprime"])
            lhs = _series_add(frame, lhs,
                              _scaled(_series_mul(frame, wx, py), scale))
        rhs = _product_side(
            frame,
            [(a, b, "neg_q") for a in zs for b in ys]
            + [(a, b, "inv_q") for a in xs for b in ys], degree)
    elif identity == "mixedP":
        for lam in shapes:
            if lam.part(1) > ny:
                continue
            cf = c_functions(lam)
            wx = _series_from_poly(frame, W_oracle(lam, nx))
            pw = _expand_symexpr(
                frame, _swap_qt(macdonald_P(conjugate(lam), ny)), ws)
            scale = RationalFunction(ONE, cf["c"])
            lhs = _series_add(frame, lhs,
                              _scaled(_series_mul(frame, wx, pw), scale))
        rhs = _product_side(
            frame,
            [(a, b, "neg_t") for a in xs for b in ws]
            + [(a, b, "inv_t") for a in zs for b in ws], degree)
    else:
        raise ValueError(
            "identity must be one of W, PQ, dual, mixedQ, mixedP")
    return _series_equal(lhs, rhs)
