"""Truncated Laurent series with certified windows.

Vertex operators produce formal series whose coefficients are vectors.
We never hold a whole series, only a finite block of coefficients
together with a window [lo, hi] on which the block is certified to
agree with the true series.  Exponents may be half-integers (the
bosonic screening operators live in z^{1/2}-series), so every exponent
is stored doubled: the block key E stands for the exponent E/2.

Coefficients are "vectors": dicts mapping hashable basis keys to
scalars in Q(v).  The zero vector is the empty dict and is never
stored.
"""

from .scalars import qq, vpow, is_zero


class WindowUnderflow(ValueError):
    """An operation needs series coefficients outside the known window."""


class UnboundedDiagonal(ValueError):
    """A diagonal sum has no certified finite support."""


# ---------------------------------------------------------------- vectors

def vec_iadd(acc, vec, coeff=None):
    """acc += coeff * vec, in place; zero entries are dropped."""
    for key, c in vec.items():
        if coeff is not None:
            c = coeff * c
        s = acc.get(key)
        s = c if s is None else s + c
        if is_zero(s):
            acc.pop(key, None)
        else:
            acc[key] = s
    return acc


def vec_scale(vec, coeff):
    if is_zero(coeff):
        return {}
    return {key: coeff * c for key, c in vec.items()}


def vec_eq(u, w):
    return u == w


# ----------------------------------------------------------------- blocks

class LaurentBlock:
    """A window of coefficients of a vector-valued Laurent series.

    coeffs maps doubled exponents E to vectors; lo <= E <= hi is the
    certified window (doubled ends).  lower_exact records that every
    coefficient below lo is known to vanish, so the block determines
    the whole series up to degree hi/2.
    """

    __slots__ = ("coeffs", "lo", "hi", "lower_exact")

    def __init__(self, coeffs, lo, hi, lower_exact=True):
        self.coeffs = {E: vec for E, vec in coeffs.items() if vec}
        self.lo = lo
        self.hi = hi
        self.lower_exact = lower_exact
        for E in self.coeffs:
            if not lo <= E <= hi:
                raise ValueError("coefficient at %s outside window [%s, %s]"
                                 % (E, lo, hi))

    def get(self, E):
        if E > self.hi or (E < self.lo and not self.lower_exact):
            raise WindowUnderflow("coefficient at doubled exponent %d unknown" % E)
        return self.coeffs.get(E, {})

    def support(self):
        return sorted(E for E in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentBlock):
            return NotImplemented
        return (self.coeffs == other.coeffs and self.lo == other.lo
                and self.hi == other.hi and self.lower_exact == other.lower_exact)

    def is_zero(self):
        return not self.coeffs

    def restrict(self, lo, hi):
        """Shrink the window to [lo, hi] (may widen below if lower_exact)."""
        if hi > self.hi or (lo < self.lo and not self.lower_exact):
            raise WindowUnderflow("cannot widen window [%s, %s] to [%s, %s]"
                                  % (self.lo, self.hi, lo, hi))
        return LaurentBlock({E: vec for E, vec in self.coeffs.items()
                             if lo <= E <= hi}, lo, hi, self.lower_exact)

    def add(self, other, coeff=None):
        lo = min(self.lo, other.lo)
        if not (self.lower_exact and other.lower_exact):
            lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        out = {}
        for E, vec in self.coeffs.items():
            if lo <= E <= hi:
                vec_iadd(out.setdefault(E, {}), vec)
        for E, vec in other.coeffs.items():
            if lo <= E <= hi:
                vec_iadd(out.setdefault(E, {}), vec, coeff)
        return LaurentBlock(out, lo, hi,
                            self.lower_exact and other.lower_exact)

    def scale(self, coeff):
        return LaurentBlock({E: vec_scale(vec, coeff)
                             for E, vec in self.coeffs.items()},
                            self.lo, self.hi, self.lower_exact)

    def zshift(self, E0):
        """Multiply by z^(E0/2): shifts every exponent up by E0."""
        return LaurentBlock({E + E0: vec for E, vec in self.coeffs.items()},
                            self.lo + E0, self.hi + E0, self.lower_exact)

    def arg_scale(self, p):
        """Substitute z -> z * v^p: coefficient at E picks up v^(p*E/2)."""
        out = {}
        for E, vec in self.coeffs.items():
            t = p * E
            if t % 2:
                raise ValueError("argument scaling by v^%d hits v^(%d/2)" % (p, t))
            out[E] = vec_scale(vec, vpow(t // 2))
        return LaurentBlock(out, self.lo, self.hi, self.lower_exact)

    def arg_qqshift(self, k):
        """Substitute z -> z * qq^k."""
        return self.arg_scale(4 * k)

    def qqderiv(self):
        """The divided difference (a(z*qq) - a(z)) / (z*(qq - 1)).

        Sends z^e to [e] * z^(e-1) with [e] = (qq^e - 1)/(qq - 1); the
        window drops by one whole exponent at both ends.
        """
        out = {}
        for E, vec in self.coeffs.items():
            factor = (vpow(2 * E) - 1) / (qq - 1)
            if not is_zero(factor):
                out[E - 2] = vec_scale(vec, factor)
        return LaurentBlock(out, self.lo - 2, self.hi - 2, self.lower_exact)

    def ratio_poly_mul(self, poly):
        """Not meaningful for one variable; see BiBlock.ratio_poly_mul."""
        raise TypeError("ratio polynomials act on bivariate blocks")

    def __repr__(self):
        return "LaurentBlock(%d coeffs on [%s/2, %s/2], lower_exact=%s)" % (
            len(self.coeffs), self.lo, self.hi, self.lower_exact)


class BiBlock:
    """A rectangular window of coefficients of a two-variable series.

    Keys are pairs (E1, E2) of doubled exponents of (z1, z2).  The
    certified window is the rectangle [lo1, hi1] x [lo2, hi2]; the
    lower_exact flag asserts vanishing below lo1 and below lo2.
    """

    __slots__ = ("coeffs", "lo1", "hi1", "lo2", "hi2", "lower_exact")

    def __init__(self, coeffs, lo1, hi1, lo2, hi2, lower_exact=True):
        self.coeffs = {key: vec for key, vec in coeffs.items() if vec}
        self.lo1, self.hi1 = lo1, hi1
        self.lo2, self.hi2 = lo2, hi2
        self.lower_exact = lower_exact
        for E1, E2 in self.coeffs:
            if not (lo1 <= E1 <= hi1 and lo2 <= E2 <= hi2):
                raise ValueError("coefficient outside window")

    def get(self, E1, E2):
        known1 = E1 <= self.hi1 and (E1 >= self.lo1 or self.lower_exact)
        known2 = E2 <= self.hi2 and (E2 >= self.lo2 or self.lower_exact)
        if not (known1 and known2):
            raise WindowUnderflow("coefficient at (%s, %s) unknown" % (E1, E2))
        return self.coeffs.get((E1, E2), {})

    def __eq__(self, other):
        if not isinstance(other, BiBlock):
            return NotImplemented
        return (self.coeffs == other.coeffs
                and (self.lo1, self.hi1, self.lo2, self.hi2, self.lower_exact)
                == (other.lo1, other.hi1, other.lo2, other.hi2, other.lower_exact))

    def is_zero(self):
        return not self.coeffs

    def add(self, other, coeff=None):
        lo1, lo2 = min(self.lo1, other.lo1), min(self.lo2, other.lo2)
        if not (self.lower_exact and other.lower_exact):
            lo1, lo2 = max(self.lo1, other.lo1), max(self.lo2, other.lo2)
        hi1, hi2 = min(self.hi1, other.hi1), min(self.hi2, other.hi2)
        out = {}
        for key, vec in self.coeffs.items():
            if lo1 <= key[0] <= hi1 and lo2 <= key[1] <= hi2:
                vec_iadd(out.setdefault(key, {}), vec)
        for key, vec in other.coeffs.items():
            if lo1 <= key[0] <= hi1 and lo2 <= key[1] <= hi2:
                vec_iadd(out.setdefault(key, {}), vec, coeff)
        return BiBlock(out, lo1, hi1, lo2, hi2,
                       self.lower_exact and other.lower_exact)

    def scale(self, coeff):
        return BiBlock({key: vec_scale(vec, coeff)
                        for key, vec in self.coeffs.items()},
                       self.lo1, self.hi1, self.lo2, self.hi2, self.lower_exact)

    def zshift(self, D1, D2):
        """Multiply by z1^(D1/2) * z2^(D2/2)."""
        return BiBlock({(E1 + D1, E2 + D2): vec
                        for (E1, E2), vec in self.coeffs.items()},
                       self.lo1 + D1, self.hi1 + D1,
                       self.lo2 + D2, self.hi2 + D2, self.lower_exact)

    def ratio_poly_mul(self, poly):
        """Multiply by a Laurent polynomial in the ratio z2/z1.

        poly maps integer ratio exponents d to scalars; the monomial
        (z2/z1)^d moves a coefficient from (E1, E2) to (E1-2d, E2+2d).
        The certified rectangle shrinks accordingly: the coefficient of
        the product at (a, b) needs inputs at (a+2d, b-2d) for every d
        in the support, which with lower exactness caps a at
        hi1 - 2*max(d) and b at hi2 + 2*min(d).
        """
        if not poly:
            return BiBlock({}, self.lo1, self.hi1, self.lo2, self.hi2,
                           self.lower_exact)
        dmin = min(poly)
        dmax = max(poly)
        lo1, lo2 = self.lo1 - 2 * dmax, self.lo2 + 2 * dmin
        hi1, hi2 = self.hi1 - 2 * dmax, self.hi2 + 2 * dmin
        out = {}
        for (E1, E2), vec in self.coeffs.items():
            for d, c in poly.items():
                key = (E1 - 2 * d, E2 + 2 * d)
                if lo1 <= key[0] <= hi1 and lo2 <= key[1] <= hi2:
                    vec_iadd(out.setdefault(key, {}), vec, c)
        if not self.lower_exact:
            # without lower exactness, coefficients near the low edge
            # would need unknown inputs; shrink from below as well
            lo1, lo2 = self.lo1 - 2 * dmin, self.lo2 + 2 * dmax
            out = {key: vec for key, vec in out.items()
                   if key[0] >= lo1 and key[1] >= lo2}
        return BiBlock(out, lo1, hi1, lo2, hi2, self.lower_exact)

    def diagonal(self, hi):
        """Set z1 = z2 = z: collect coefficients along anti-diagonals.

        Requires lower exactness in both variables, else no diagonal
        coefficient is a finite sum.  Returns a LaurentBlock on
        [lo1+lo2, hi]; the requested hi must satisfy
        hi <= min(hi1+lo2, hi2+lo1) so that every contributing pair
        lies inside the certified rectangle.
        """
        if not self.lower_exact:
            raise UnboundedDiagonal("diagonal of a block without certified "
                                    "lower bounds")
        cap = min(self.hi1 + self.lo2, self.hi2 + self.lo1)
        if hi > cap:
            raise WindowUnderflow("diagonal exact only up to %s, requested %s"
                                  % (cap, hi))
        out = {}
        for (E1, E2), vec in self.coeffs.items():
            E = E1 + E2
            if E <= hi:
                vec_iadd(out.setdefault(E, {}), vec)
        return LaurentBlock(out, self.lo1 + self.lo2, hi, True)

    def qqderiv1(self):
        """The divided q-difference in the first variable."""
        out = {}
        for (E1, E2), vec in self.coeffs.items():
            factor = (vpow(2 * E1) - 1) / (qq - 1)
            if not is_zero(factor):
                out[(E1 - 2, E2)] = vec_scale(vec, factor)
        return BiBlock(out, self.lo1 - 2, self.hi1 - 2, self.lo2, self.hi2,
                       self.lower_exact)

    def arg_scale1(self, p):
        """Substitute z1 -> z1 * v^p."""
        out = {}
        for (E1, E2), vec in self.coeffs.items():
            t = p * E1
            if t % 2:
                raise ValueError("argument scaling hits a half power of v")
            out[(E1, E2)] = vec_scale(vec, vpow(t // 2))
        return BiBlock(out, self.lo1, self.hi1, self.lo2, self.hi2,
                       self.lower_exact)

    def qqderiv2(self):
        """The divided q-difference in the second variable."""
        out = {}
        for (E1, E2), vec in self.coeffs.items():
            factor = (vpow(2 * E2) - 1) / (qq - 1)
            if not is_zero(factor):
                out[(E1, E2 - 2)] = vec_scale(vec, factor)
        return BiBlock(out, self.lo1, self.hi1, self.lo2 - 2, self.hi2 - 2,
                       self.lower_exact)

    def arg_scale2(self, p):
        """Substitute z2 -> z2 * v^p."""
        out = {}
        for (E1, E2), vec in self.coeffs.items():
            t = p * E2
            if t % 2:
                raise ValueError("argument scaling hits a half power of v")
            out[(E1, E2)] = vec_scale(vec, vpow(t // 2))
        return BiBlock(out, self.lo1, self.hi1, self.lo2, self.hi2,
                       self.lower_exact)

    def arg_qqshift1(self, k):
        """Substitute z1 -> z1 * qq^k."""
        return self.arg_scale1(4 * k)

    def arg_qqshift2(self, k):
        """Substitute z2 -> z2 * qq^k."""
        return self.arg_scale2(4 * k)

    def __repr__(self):
        return "BiBlock(%d coeffs on [%s,%s]x[%s,%s]/2, lower_exact=%s)" % (
            len(self.coeffs), self.lo1, self.hi1, self.lo2, self.hi2,
            self.lower_exact)
