"""Ground-truth symmetric-function computations in explicit variables.

Macdonald P via the branching rule, integral form J, plethystic evaluations,
and triangular basis conversions (monomial / power-sum / Schur).  Rational
(q,t) coefficients are RationalFunction values; integer linear algebra uses
fractions.Fraction.
"""

from fractions import Fraction
from itertools import permutations

from .combinat import Partition, conjugate, partitions_of
from .errors import (NegativeCoefficient, NonPolynomialCoefficient,
                     SingularConversion, TooFewVariables)
from .exactalg import (ExactPolynomial, ONE, P, RationalFunction, RF_ONE,
                       RF_ZERO, ZERO, ratfun_normalize, sym)
from .qseries import c_functions


def _q(k):
    return ExactPolynomial.monomial({"q": k})


def _qt(qk, tk):
    return ExactPolynomial.monomial({"q": qk, "t": tk})


def horizontal_strip(lam, mu):
    """mu <= lam interlacing: lam_1 >= mu_1 >= lam_2 >= mu_2 >= ..."""
    n = max(len(lam), len(mu))
    for i in range(1, n + 1):
        if not (lam.part(i) >= mu.part(i) >= lam.part(i + 1)):
            return False
    return True


def _ratio_f(a, b, m):
    """(numerator, denominator) factor lists for f(q^a t^m)/f(q^b t^m)."""
    num, den = [], []
    lo, hi = (a, b) if a <= b else (b, a)
    for k in range(lo, hi):
        num.append(ONE - _qt(k, m + 1))
        den.append(ONE - _qt(k + 1, m))
    if a <= b:
        return num, den
    return den, num


def psi_coefficient(lam, mu):
    """Branching coefficient psi_{lam/mu}(q,t); 0 off horizontal strips."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if not isinstance(mu, Partition):
        mu = Partition(mu)
    if not horizontal_strip(lam, mu):
        return RF_ZERO
    num = ONE
    den = ONE
    for j in range(1, len(mu) + 1):
        for i in range(1, j + 1):
            m = j - i
            for a, b in ((mu.part(i) - mu.part(j), lam.part(i) - mu.part(j)),
                         (lam.part(i) - lam.part(j + 1),
                          mu.part(i) - lam.part(j + 1))):
                ns, ds = _ratio_f(a, b, m)
                for f in ns:
                    num = num * f
                for f in ds:
                    den = den * f
    return ratfun_normalize(RationalFunction(num, den))


_PSI_CACHE = {}


def _psi(lam, mu):
    key = (lam.parts, mu.parts)
    if key not in _PSI_CACHE:
        _PSI_CACHE[key] = psi_coefficient(lam, mu)
    return _PSI_CACHE[key]


def _strips_removing(lam, d):
    """Horizontal strips mu <= lam with |lam| - |mu| = d."""
    n = len(lam)
    out = []

    def rec(i, prefix, removed):
        if i > n:
            if removed == d:
                out.append(Partition(prefix))
            return
        lo = lam.part(i + 1)
        hi = lam.part(i)
        for v in range(lo, hi + 1):
            if removed + (hi - v) <= d:
                rec(i + 1, prefix + [v], removed + (hi - v))

    rec(1, [], 0)
    return out


_PCOEF_CACHE = {}


def _pcoef(lam, mu):
    """Coefficient of x^mu in P_lam(x_1..x_len(mu)); mu weakly decreasing."""
    while mu and mu[-1] == 0:
        mu = mu[:-1]
    key = (lam.parts, mu)
    got = _PCOEF_CACHE.get(key)
    if got is not None:
        return got
    if not mu:
        val = RF_ONE if not lam.parts else RF_ZERO
    elif sum(mu) != lam.weight() or len(lam) > len(mu):
        val = RF_ZERO
    else:
        val = RF_ZERO
        for kappa in _strips_removing(lam, mu[-1]):
            sub = _pcoef(kappa, mu[:-1])
            if not sub.is_zero():
                val = val + _psi(lam, kappa) * sub
        val = ratfun_normalize(val)
    _PCOEF_CACHE[key] = val
    return val


_KOSTKA_CACHE = {}


def kostka_number(lam, mu):
    """Number of semistandard tableaux of shape lam and content mu."""
    while mu and mu[-1] == 0:
        mu = mu[:-1]
    key = (lam.parts, mu)
    got = _KOSTKA_CACHE.get(key)
    if got is not None:
        return got
    if not mu:
        val = 1 if not lam.parts else 0
    elif sum(mu) != lam.weight() or len(lam) > len(mu):
        val = 0
    else:
        val = sum(kostka_number(kappa, mu[:-1])
                  for kappa in _strips_removing(lam, mu[-1]))
    _KOSTKA_CACHE[key] = val
    return val


class SymmetricExpr:
    """Finite combination of basis elements with rational coefficients."""

    __slots__ = ("basis", "coeffs", "nvars")

    def __init__(self, basis, coeffs, nvars):
        assert basis in ("monomial", "powersum", "schur")
        self.basis = basis
        self.coeffs = {k if isinstance(k, Partition) else Partition(k): v
                       for k, v in coeffs.items()
                       if not (isinstance(v, RationalFunction) and v.is_zero())}
        self.nvars = nvars

    def degree_parts(self):
        out = {}
        for lam, c in self.coeffs.items():
            out.setdefault(lam.weight(), {})[lam] = c
        return out


def macdonald_P(lam, nvars):
    """Macdonald polynomial P_lam in the monomial basis."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if nvars < len(lam):
        raise TooFewVariables("need at least ell(lambda) variables")
    coeffs = {}
    for mu in partitions_of(lam.weight()):
        if len(mu) > nvars:
            continue
        c = _pcoef(lam, mu.padded(nvars))
        if not c.is_zero():
            coeffs[mu] = c
    return SymmetricExpr("monomial", coeffs, nvars)


def integral_J(lam, nvars):
    """Integral form J = c_lam * P; coefficients must clear to polynomials."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    c = c_functions(lam)["c"]
    pexp = macdonald_P(lam, nvars)
    coeffs = {}
    for mu, v in pexp.coeffs.items():
        w = ratfun_normalize(v * c)
        if w.as_polynomial() is None:
            raise NonPolynomialCoefficient(
                "J coefficient at %r did not clear" % (mu,))
        coeffs[mu] = w
    return SymmetricExpr("monomial", coeffs, nvars)


# ---------------------------------------------------------------------------
# explicit expansion and basis transitions
# ---------------------------------------------------------------------------

def _expand_monomial(mu, nvars):
    """m_mu as an integer dict exponent-tuple -> 1 over x_1..x_nvars."""
    padded = mu.padded(nvars)
    return {e: 1 for e in set(permutations(padded))}


def _expand_powersum(lam, nvars):
    """p_lam as an integer dict exponent-tuple -> coefficient."""
    acc = {(0,) * nvars: 1}
    for r in lam.parts:
        new = {}
        for e, c in acc.items():
            for i in range(nvars):
                key = tuple(x + (r if j == i else 0) for j, x in enumerate(e))
                new[key] = new.get(key, 0) + c
        acc = new
    return acc


_TRANSITION_CACHE = {}


def _transitions(d):
    """Power-sum <-> monomial transition data at degree d.

    Returns (plist, p_in_m, m_in_p): p_in_m[lam][mu] integer coefficient of
    m_mu in p_lam; m_in_p[mu][lam] Fraction coefficient of p_lam in m_mu.
    """
    if d in _TRANSITION_CACHE:
        return _TRANSITION_CACHE[d]
    plist = partitions_of(d)
    p_in_m = {}
    for lam in plist:
        expansion = _expand_powersum(lam, d)
        row = {}
        for mu in plist:
            key = mu.padded(d)
            if key in expansion:
                row[mu] = expansion[key]
        p_in_m[lam] = row
    # invert over the rationals by Gaussian elimination
    idx = {lam: i for i, lam in enumerate(plist)}
    n = len(plist)
    mat = [[Fraction(p_in_m[plist[i]].get(plist[j], 0)) for j in range(n)]
           for i in range(n)]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col]), None)
        if piv is None:
            raise SingularConversion("transition matrix singular")
        mat[col], mat[piv] = mat[piv], mat[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = mat[col][col]
        mat[col] = [x / f for x in mat[col]]
        inv[col] = [x / f for x in inv[col]]
        for r in range(n):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    # p_in_m as matrix A with A[i][j] = coeff of m_j in p_i; m_mu = sum_lam
    # (A^{-1})[j][i] ... m-vector = A^T p-vector relation handled below.
    m_in_p = {}
    for mu in plist:
        j = idx[mu]
        m_in_p[mu] = {plist[i]: inv[j][i] for i in range(n) if inv[j][i]}
    out = (plist, p_in_m, m_in_p)
    _TRANSITION_CACHE[d] = out
    return out


def _rf_scale(rf, frac):
    return RationalFunction(rf.num * frac.numerator,
                            rf.den * frac.denominator)


def monomial_expand(e, nvars):
    """Explicit polynomial over x_1..x_nvars (polynomial coefficients only)."""
    if e.basis != "monomial":
        e = basis_convert(e, "monomial")
    names = tuple("x%d" % i for i in range(1, nvars + 1))
    out = ZERO
    for mu, c in e.coeffs.items():
        if len(mu) > nvars:
            raise TooFewVariables("partition %r needs more variables" % (mu,))
        poly = c.as_polynomial()
        if poly is None:
            raise NonPolynomialCoefficient(
                "coefficient at %r is not polynomial" % (mu,))
        for exp in _expand_monomial(mu, nvars):
            out = out + poly * ExactPolynomial.monomial(
                dict(zip(names, exp)))
    return out


def basis_convert(e, target):
    """Exact change of basis between monomial, powersum and schur."""
    if e.basis == target:
        return e
    if e.basis == "powersum" and target in ("monomial", "schur"):
        coeffs = {}
        for d, part in e.degree_parts().items():
            if d == 0:
                for lam, c in part.items():
                    coeffs[lam] = coeffs.get(lam, RF_ZERO) + c
                continue
            _, p_in_m, _ = _transitions(d)
            for lam, c in part.items():
                for mu, k in p_in_m[lam].items():
                    coeffs[mu] = coeffs.get(mu, RF_ZERO) + c * k
        mono = SymmetricExpr("monomial", coeffs, e.nvars)
        return mono if target == "monomial" else basis_convert(mono, "schur")
    if e.basis == "monomial" and target == "powersum":
        coeffs = {}
        for d, part in e.degree_parts().items():
            if d == 0:
                for lam, c in part.items():
                    coeffs[lam] = coeffs.get(lam, RF_ZERO) + c
                continue
            _, _, m_in_p = _transitions(d)
            for mu, c in part.items():
                for lam, frac in m_in_p[mu].items():
                    coeffs[lam] = coeffs.get(lam, RF_ZERO) + _rf_scale(c, frac)
        return SymmetricExpr("powersum", coeffs, e.nvars)
    if e.basis == "monomial" and target == "schur":
        coeffs = {}
        for d, part in e.degree_parts().items():
            remaining = dict(part)
            for nu in sorted(partitions_of(d), key=lambda p: p.parts,
                             reverse=True):
                c = remaining.get(nu, RF_ZERO)
                if isinstance(c, RationalFunction) and c.is_zero():
                    continue
                coeffs[nu] = c
                for mu in partitions_of(d):
                    k = kostka_number(nu, mu.padded(max(d, len(mu))))
                    if k:
                        remaining[mu] = remaining.get(mu, RF_ZERO) - c * k
            coeffs = {k: ratfun_normalize(v) for k, v in coeffs.items()}
        return SymmetricExpr("schur", coeffs, e.nvars)
    if e.basis == "schur":
        coeffs = {}
        for nu, c in e.coeffs.items():
            d = nu.weight()
            for mu in partitions_of(d):
                k = kostka_number(nu, mu.padded(max(d, len(mu), 1)))
                if k:
                    coeffs[mu] = coeffs.get(mu, RF_ZERO) + c * k
        mono = SymmetricExpr("monomial", coeffs, e.nvars)
        return mono if target == "monomial" \
            else basis_convert(mono, "powersum")
    raise ValueError("unsupported conversion %s -> %s" % (e.basis, target))


def schur_expand(e):
    return basis_convert(e, "schur")


# ---------------------------------------------------------------------------
# plethystic evaluations
# ---------------------------------------------------------------------------

def plethysm_eval(e, rule, nvars=None):
    """Apply a power-sum substitution rule.

    rule='modified': p_r -> p_r / (1 - t^r); returns a powersum-basis expr.
    rule='double': p_r -> (p_r(x-alphabet) + (-1)^{r+1} p_r(z-alphabet))
    / (1 - t^r); returns a dict exponent-tuple -> RationalFunction over the
    variables x_1..x_N, z_1..z_N (N = nvars).
    """
    ps = basis_convert(e, "powersum")
    if rule == "modified":
        coeffs = {}
        for lam, c in ps.coeffs.items():
            den = ONE
            for r in lam.parts:
                den = den * (ONE - ExactPolynomial.monomial({"t": r}))
            coeffs[lam] = c * RationalFunction(ONE, den)
        return SymmetricExpr("powersum", coeffs, ps.nvars)
    if rule == "double":
        if nvars is None:
            raise TooFewVariables("rule='double' needs nvars")
        nv = 2 * nvars
        zero = (0,) * nv
        total = {}
        for lam, c in ps.coeffs.items():
            acc = {zero: c}
            for r in lam.parts:
                gen = {}
                for i in range(nvars):
                    key = list(zero)
                    key[i] = r
                    gen[tuple(key)] = 1
                sign = 1 if r % 2 else -1
                for i in range(nvars):
                    key = list(zero)
                    key[nvars + i] = r
                    gen[tuple(key)] = sign
                scale = RationalFunction(
                    ONE, ONE - ExactPolynomial.monomial({"t": r}))
                new = {}
                for e1, c1 in acc.items():
                    for e2, c2 in gen.items():
                        key = tuple(a + b for a, b in zip(e1, e2))
                        cur = new.get(key, RF_ZERO) + c1 * (scale * c2)
                        new[key] = cur
                acc = new
            for k, v in acc.items():
                total[k] = total.get(k, RF_ZERO) + v
        return {k: v for k, v in total.items() if not v.is_zero()}
    raise ValueError("unknown rule %r" % (rule,))


def modified_H_oracle(lam, nvars=None):
    """Modified Macdonald polynomial via plethysm on the integral form."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    d = lam.weight()
    if nvars is None:
        nvars = d
    if nvars < d and nvars < len(lam):
        raise TooFewVariables("need nvars >= |lambda| for a faithful oracle")
    J = integral_J(lam, max(d, 1))
    H = plethysm_eval(J, "modified")
    mono = basis_convert(H, "monomial")
    coeffs = {}
    for mu, c in mono.coeffs.items():
        c = ratfun_normalize(c)
        poly = c.as_polynomial()
        if poly is None:
            raise NonPolynomialCoefficient(
                "H coefficient at %r not polynomial" % (mu,))
        if not poly.is_nonnegative():
            raise NegativeCoefficient(
                "H coefficient at %r has a negative term" % (mu,))
        if len(mu) <= nvars and not poly.is_zero():
            coeffs[mu] = RationalFunction(poly)
    return SymmetricExpr("monomial", coeffs, nvars)


def W_oracle(lam, N):
    """W polynomial over x_1..x_N, z_1..z_N, q, t with positive coefficients."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    J = integral_J(lam, max(lam.weight(), len(lam), 1))
    table = plethysm_eval(J, "double", nvars=N)
    names = tuple(["x%d" % i for i in range(1, N + 1)]
                  + ["z%d" % i for i in range(1, N + 1)])
    out = ZERO
    for exp, c in table.items():
        c = ratfun_normalize(c)
        poly = c.as_polynomial()
        if poly is None:
            raise NonPolynomialCoefficient("W coefficient not polynomial")
        if not poly.is_nonnegative():
            raise NegativeCoefficient("W coefficient has a negative term")
        out = out + poly * ExactPolynomial.monomial(dict(zip(names, exp)))
    return out


def schur_function(lam, nvars):
    """Schur polynomial via the Kostka expansion (branching with psi = 1)."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    coeffs = {}
    for mu in partitions_of(lam.weight()):
        if len(mu) > nvars:
            continue
        k = kostka_number(lam, mu.padded(nvars))
        if k:
            coeffs[mu] = RationalFunction(P(k))
    return SymmetricExpr("monomial", coeffs, nvars)
