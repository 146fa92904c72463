"""q-integer combinatorics and the two-variable q-commuting calculus.

Two flavors of q-integers coexist in this package.  The Fock-space
layer uses the symmetric flavor [m] = (q^m - q^{-m})/(q - q^{-1}),
while the vertex-algebra layer uses the asymmetric flavor
[m] = (qq^m - 1)/(qq - 1) built on the squared parameter qq = q^2.
Both are exact elements of Q(v).

The module also provides NCPoly, polynomials in two variables z, z0
subject to the single relation z0 * z = qq * z * z0, kept in the
normal form with all z-powers to the left of all z0-powers.
"""

from functools import lru_cache

from .scalars import one, zero, q, qq, vpow, is_zero

ASYM = "asymmetric"
SYM = "symmetric"


@lru_cache(maxsize=None)
def qint(m, flavor=ASYM):
    """The q-integer [m] in the requested flavor."""
    if flavor == ASYM:
        return (vpow(4 * m) - 1) / (qq - 1)
    if flavor == SYM:
        return (vpow(2 * m) - vpow(-2 * m)) / (q - 1 / q)
    raise ValueError("unknown flavor %r" % (flavor,))


@lru_cache(maxsize=None)
def qfact(m, flavor=ASYM):
    """The q-factorial [m]! = [m][m-1]...[1]."""
    if m < 0:
        raise ValueError("q-factorial of a negative integer")
    out = one
    for i in range(1, m + 1):
        out = out * qint(i, flavor)
    return out


@lru_cache(maxsize=None)
def qbinom(m, l, flavor=ASYM):
    """The q-binomial coefficient via the product form.

    [m][m-1]...[m-l+1]/[l]!; well-defined for negative m, and zero for
    0 <= m < l.
    """
    if l < 0:
        raise ValueError("lower index must be nonnegative")
    num = one
    for i in range(l):
        num = num * qint(m - i, flavor)
    return num / qfact(l, flavor)


class NCPoly:
    """Σ c_{a,b} z^a z0^b with z0 z = qq z z0, in normal form.

    The z-exponent a may be negative; the z0-exponent b may not.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for (a, b), c in coeffs.items():
                if b < 0:
                    raise ValueError("negative z0-exponent")
                if not is_zero(c):
                    cleaned[(a, b)] = c
        self.coeffs = cleaned

    @classmethod
    def monomial(cls, a, b, coeff=one):
        return cls({(a, b): coeff})

    def __eq__(self, other):
        if isinstance(other, int):
            other = NCPoly({(0, 0): one * other}) if other else NCPoly()
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = out.get(key, zero) + c
            if is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        return NCPoly(out)

    def __sub__(self, other):
        return self + other.scale(-one)

    def scale(self, coeff):
        return NCPoly({key: coeff * c for key, c in self.coeffs.items()})

    def __mul__(self, other):
        # (z^{a1} z0^{b1})(z^{a2} z0^{b2}) = qq^{b1 a2} z^{a1+a2} z0^{b1+b2}
        out = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                key = (a1 + a2, b1 + b2)
                c = c1 * c2 * vpow(4 * b1 * a2)
                s = out.get(key, zero) + c
                if is_zero(s):
                    out.pop(key, None)
                else:
                    out[key] = s
        return NCPoly(out)

    def coeff(self, a, b):
        return self.coeffs.get((a, b), zero)

    def __repr__(self):
        if not self.coeffs:
            return "NCPoly(0)"
        bits = ["(%s)*z^%d*z0^%d" % (c, a, b)
                for (a, b), c in sorted(self.coeffs.items())]
        return "NCPoly(" + " + ".join(bits) + ")"


def nc_binomial(m, cutoff=None):
    """The expansion Σ_{l≥0} qbinom(m,l) z^{m-l} z0^l of (z+z0)^m.

    For m >= 0 the sum is finite and cutoff is ignored.  For m < 0 the
    expansion (in nonnegative powers of z0) is infinite; a cutoff in
    z0-degree must be supplied.
    """
    if m >= 0:
        top = m
    else:
        if cutoff is None:
            raise ValueError("negative exponent needs a z0-degree cutoff")
        top = cutoff
    out = {}
    for l in range(top + 1):
        c = qbinom(m, l)
        if not is_zero(c):
            out[(m - l, l)] = c
    return NCPoly(out)


def qderiv(block):
    """The divided q-difference (a(z*qq) - a(z))/(z*(qq-1)) on a block."""
    return block.qqderiv()


def qderiv_poly(poly):
    """Same derivation on a plain Laurent polynomial {exponent: Scalar}."""
    out = {}
    for e, c in poly.items():
        factor = (vpow(4 * e) - 1) / (qq - 1)
        if not is_zero(factor):
            out[e - 1] = c * factor
    return out


def shift_poly(poly, k):
    """z -> z*qq^k on a plain Laurent polynomial."""
    return {e: c * vpow(4 * k * e) for e, c in poly.items()}


def mul_poly(p1, p2):
    out = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            s = out.get(e1 + e2, zero) + c1 * c2
            if is_zero(s):
                out.pop(e1 + e2, None)
            else:
                out[e1 + e2] = s
    return out
