"""Exact scalar arithmetic in the rational function field Q(v).

Every quantity in this package is a rational function of a single
indeterminate v.  We work with v rather than q so that half-integer
powers of q are honest field elements: q = v^2, and the "doubled"
deformation parameter qq = q^2 = v^4 used by the vertex-operator layer
is a plain monomial too.

Scalars are kept in a canonical factored form tailored to this
workload: a rational content and a monomial prefactor v^lo times a
primitive integer numerator polynomial with positive constant term,
over a denominator stored as a multiset of atom ids.  Atoms are the
(irreducible) cyclotomic polynomials, normalized to constant term 1 --
every denominator arising from quantum integers, factorials and
clearing factors is a product of 1 - v^k's, hence of cyclotomics.
Products and sums therefore never run a polynomial gcd: cancellation
is a handful of exact integer trial divisions by the atoms of the
denominator, each preceded by a cheap evaluation screen at a root of
the atom modulo a prime.  The numerator is kept coprime to every
denominator atom, which makes the representation unique, so equality
and hashing are structural.
"""

from fractions import Fraction
from math import gcd as _igcd

try:
    from gmpy2 import (mpq as _mpq, mpz as _mpz, gcd as _gcd,
                       lcm as _lcm, is_prime)
except ImportError:  # pragma: no cover
    _mpq = Fraction
    _mpz = int
    _gcd = _igcd

    def _lcm(a, b):
        return a * b // _igcd(a, b)

    def is_prime(n):
        if n < 4:
            return n > 1
        if n % 2 == 0:
            return False
        # Miller-Rabin with a deterministic base set for 64-bit inputs
        d, s = n - 1, 0
        while d % 2 == 0:
            d //= 2
            s += 1
        for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
            x = pow(a, d, n)
            if x in (1, n - 1):
                continue
            for _ in range(s - 1):
                x = x * x % n
                if x == n - 1:
                    break
            else:
                return False
        return True

_Q0 = _mpq(0)
_Q1 = _mpq(1)
_Z0 = _mpz(0)
_Z1 = _mpz(1)


class DenominatorVanishes(ZeroDivisionError):
    """Raised when a substitution would put a zero in a denominator."""


# ---------------------------------------------------------------------------
# dense integer polynomial helpers (tuples/lists of coefficients,
# index = exponent)

def _pmul(a, b):
    la, lb = len(a), len(b)
    if la == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if lb == 1:
        c = b[0]
        return tuple(c * x for x in a)
    out = [_Z0] * (la + lb - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return tuple(out)


def _padd_shifted(a, sa, b, sb):
    """a shifted up by sa plus b shifted up by sb (sa, sb >= 0)."""
    n = max(sa + len(a), sb + len(b))
    out = [_Z0] * n
    for i, x in enumerate(a):
        out[sa + i] += x
    for i, y in enumerate(b):
        out[sb + i] += y
    return out


def _pdivmod_low(f, p):
    """Divide f by p from the constant end; p[0] must be 1.

    Returns the quotient if the division is exact, else None.
    """
    dq = len(f) - len(p)
    if dq < 0:
        return None
    q = [_Z0] * (dq + 1)
    r = list(f)
    for i in range(dq + 1):
        c = r[i]
        q[i] = c
        if c:
            for j in range(1, len(p)):
                r[i + j] -= c * p[j]
    for i in range(dq + 1, len(f)):
        if r[i]:
            return None
    return q


def _pdiv_exact_rat(f, p):
    """Exact division of integer f by integer p with any p[0] != 0.

    Used only for the rare opaque atoms; returns the integer quotient
    or None.
    """
    dq = len(f) - len(p)
    if dq < 0:
        return None
    p0 = _mpq(p[0])
    q = [_Q0] * (dq + 1)
    r = [_mpq(c) for c in f]
    for i in range(dq + 1):
        c = r[i] / p0
        q[i] = c
        if c:
            for j in range(1, len(p)):
                r[i + j] -= c * p[j]
    for i in range(dq + 1, len(f)):
        if r[i]:
            return None
    if any(c.denominator != 1 for c in q):
        return None
    return [_mpz(c) for c in q]


def _pgcd(a, b):
    """Monic gcd, used only for the rare non-cyclotomic coprimality check."""
    a = [_mpq(c) for c in a]
    b = [_mpq(c) for c in b]
    while b:
        inv = 1 / b[-1]
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            c = a[-1] * inv
            if c:
                off = len(a) - 1 - db
                for i in range(db):
                    a[off + i] -= c * b[i]
            a.pop()
            while a and not a[-1]:
                a.pop()
        a, b = b, a
    inv = 1 / a[-1]
    return [c * inv for c in a]


# ---------------------------------------------------------------------------
# atom registry: denominators are products of these integer
# polynomials.  Ids below _OPAQUE_BASE are the cyclotomic polynomials
# (constant term 1) indexed by their order; opaque atoms (from
# inverting a scalar with a non-cyclotomic numerator) get fresh ids and
# are kept primitive with positive constant term.

_CYCLO_ATOMS = {}   # order d -> coefficient tuple of the d-th cyclotomic
_OPAQUE_BASE = 1 << 40
_OPAQUE_ATOMS = {}  # id -> coefficient tuple
_OPAQUE_IDS = {}    # coefficient tuple -> id


def _divisors(k):
    out = []
    d = 1
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            if d * d != k:
                out.append(k // d)
        d += 1
    return sorted(out)


def _totient(d):
    out = d
    p = 2
    while p * p <= d:
        if d % p == 0:
            out -= out // p
            while d % p == 0:
                d //= p
        p += 1
    if d > 1:
        out -= out // d
    return out


def _cyclotomic(d):
    got = _CYCLO_ATOMS.get(d)
    if got is not None:
        return got
    poly = [-_Z1] + [_Z0] * (d - 1) + [_Z1]  # v^d - 1
    if d == 1:
        poly = [_Z1, -_Z1]  # 1 - v, the constant-term-1 normalization
    else:
        poly = [-c for c in poly]  # (1 - v^d), constant term 1
        for e in _divisors(d)[:-1]:
            poly = _pdivmod_low(poly, _atom_poly(e))
        if poly[0] != 1:
            poly = [-c for c in poly]
    poly = tuple(poly)
    _CYCLO_ATOMS[d] = poly
    return poly


def _atom_poly(aid):
    if aid < _OPAQUE_BASE:
        return _cyclotomic(aid)
    return _OPAQUE_ATOMS[aid]


def _register_opaque(poly):
    poly = tuple(poly)
    got = _OPAQUE_IDS.get(poly)
    if got is not None:
        return got
    for other in _OPAQUE_ATOMS.values():
        if len(_pgcd(poly, other)) > 1:
            raise NotImplementedError(
                "denominator factor overlaps a previously seen one")
    aid = _OPAQUE_BASE + len(_OPAQUE_ATOMS)
    _OPAQUE_ATOMS[aid] = poly
    _OPAQUE_IDS[poly] = aid
    return aid


# ---------------------------------------------------------------------------
# divisibility screen: a polynomial is divisible by the d-th cyclotomic
# only if it vanishes at a d-th primitive root of unity modulo a prime
# p = 1 (mod d).  Evaluating the numerator at that root rules out
# almost every failing trial division cheaply; a passing screen is
# always confirmed by exact division.

_ROOTS = {}  # atom id -> (p, root) for cyclotomics, None for opaque atoms


def _prime_factors(d):
    out = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            out.append(p)
            while d % p == 0:
                d //= p
        p += 1
    if d > 1:
        out.append(d)
    return out


def _root_for(aid):
    got = _ROOTS.get(aid, 0)
    if got != 0:
        return got
    if aid >= _OPAQUE_BASE:
        _ROOTS[aid] = None
        return None
    d = aid
    t = (1 << 45) // d + 1
    while not is_prime(d * t + 1):
        t += 1
    p = d * t + 1
    if d == 1:
        w = 1
    else:
        qs = _prime_factors(d)
        a = 2
        while True:
            w = pow(a, t, p)
            if w != 1 and all(pow(w, d // f, p) != 1 for f in qs):
                break
            a += 1
    got = (p, w)
    _ROOTS[aid] = got
    return got


def _screen_zero(num, aid):
    """False rules out divisibility of the integer poly by the atom."""
    data = _root_for(aid)
    if data is None:
        return True
    p, w = data
    acc = 0
    for c in reversed(num):
        acc = (acc * w + c) % p
    return acc == 0


def _expand_den(den):
    """Dense integer polynomial for a denominator multiset (cached)."""
    got = _DEN_EXPAND.get(den)
    if got is None:
        poly = (_Z1,)
        for aid in den:
            poly = _pmul(poly, _atom_poly(aid))
        _DEN_EXPAND[den] = poly
        got = poly
    return got


_DEN_EXPAND = {}


def _primitive(num):
    """Content (signed by the first nonzero coefficient) and the
    primitive positive-constant part of an integer coefficient list."""
    g = _Z0
    for c in num:
        g = _gcd(g, c)
        if g == 1:
            break
    if num[0] < 0:
        g = -g
    if g != 1:
        num = [c // g for c in num]
    return g, num


def _factor_poly(p):
    """Factor integer p with nonzero constant term as const * pi atoms.

    Tries cyclotomic factors of every order up to a degree bound, then
    registers whatever remains as an opaque atom.  Returns
    (rational const, atom tuple).
    """
    g, work = _primitive(list(p))
    const = _mpq(g)
    atoms = []
    # the totient of d grows at least like sqrt(d/2), so no cyclotomic
    # of order beyond this bound can divide a polynomial of this degree
    dmax = 2 * (len(p) - 1) ** 2 + 6
    d = 1
    while len(work) > 1 and d <= dmax:
        if _totient(d) > len(work) - 1:
            d += 1
            continue
        atom = _cyclotomic(d)
        while len(atom) <= len(work) and _screen_zero(work, d):
            q = _pdivmod_low(work, atom)
            if q is None:
                break
            work = q
            atoms.append(d)
        d += 1
    if len(work) > 1:
        atoms.append(_register_opaque(tuple(work)))
    return const, tuple(sorted(atoms))


def _cancel(num, den):
    """Divide den's atoms out of num where possible (num is a list)."""
    left = []
    prev_fail = None
    for aid in den:
        # den is sorted, so equal atoms are adjacent; skip known failures
        if aid == prev_fail or not _screen_zero(num, aid):
            left.append(aid)
            prev_fail = aid
            continue
        atom = _atom_poly(aid)
        q = (_pdivmod_low(num, atom) if atom[0] == 1
             else _pdiv_exact_rat(num, atom))
        if q is None:
            left.append(aid)
            prev_fail = aid
        else:
            num = q
            prev_fail = None
    return num, tuple(left)


def _reduce(cont, num, lo, den):
    """Trim, primitivize and cancel; returns the canonical Scalar."""
    i = 0
    n = len(num)
    while i < n and not num[i]:
        i += 1
    if i == n or not cont:
        return zero
    while not num[n - 1]:
        n -= 1
    num = list(num[i:n])
    lo += i
    if den:
        num, den = _cancel(num, den)
    g, num = _primitive(num)
    return Scalar(lo, cont * g, tuple(num), den)


class Scalar:
    """Element of Q(v): value = cont * v**lo * num(v) / pi atoms(den)."""

    __slots__ = ("lo", "cont", "num", "den", "_hash")

    def __init__(self, lo, cont, num, den):
        self.lo = lo
        self.cont = cont
        self.num = num
        self.den = den
        self._hash = None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return (self.lo == other.lo and self.cont == other.cont
                    and self.den == other.den and self.num == other.num)
        if isinstance(other, (int, Fraction)) or type(other) is type(_Q0):
            return self == _scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.lo, self.cont, self.num, self.den))
        return self._hash

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        if not self.num or not other.num:
            return zero
        if not other.den and len(other.num) == 1:
            return Scalar(self.lo + other.lo, self.cont * other.cont,
                          self.num, self.den)
        if not self.den and len(self.num) == 1:
            return Scalar(self.lo + other.lo, self.cont * other.cont,
                          other.num, other.den)
        cont = self.cont * other.cont
        lo = self.lo + other.lo
        den = tuple(sorted(self.den + other.den))
        if den and den[-1] >= _OPAQUE_BASE:
            # opaque atoms may be reducible; take the generic path
            return _reduce(cont, _pmul(self.num, other.num), lo, den)
        # each numerator is already coprime to its own atoms, and the
        # cyclotomic atoms are irreducible, so cancelling each numerator
        # against the other factor's atoms fully reduces the product;
        # the product of primitive polynomials is primitive
        n1, d2 = _cancel(list(self.num), other.den)
        n2, d1 = _cancel(list(other.num), self.den)
        return Scalar(lo, cont, _pmul(n1, n2), tuple(sorted(d1 + d2)))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.lo, -self.cont, self.num, self.den)

    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        if not self.num:
            return other
        if not other.num:
            return self
        # split the contents into a common rational factor and integer
        # cofactors, so the combination stays an integer polynomial
        ca, cb = self.cont, other.cont
        g = _mpq(_gcd(ca.numerator, cb.numerator),
                 _lcm(ca.denominator, cb.denominator))
        sa = _mpz(ca / g)
        sb = _mpz(cb / g)
        if self.den == other.den:
            n1 = self.num if sa == 1 else tuple(sa * c for c in self.num)
            n2 = other.num if sb == 1 else tuple(sb * c for c in other.num)
            den = self.den
        else:
            # scale each numerator by the atoms it is missing
            extra1 = _missing(self.den, other.den)
            extra2 = _missing(other.den, self.den)
            n1 = _pmul(self.num, _expand_den(extra1)) if extra1 else self.num
            n2 = _pmul(other.num, _expand_den(extra2)) if extra2 else other.num
            if sa != 1:
                n1 = tuple(sa * c for c in n1)
            if sb != 1:
                n2 = tuple(sb * c for c in n2)
            den = tuple(sorted(self.den + extra1))
        lo = min(self.lo, other.lo)
        num = _padd_shifted(n1, self.lo - lo, n2, other.lo - lo)
        return _reduce(g, num, lo, den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by the zero scalar")
        num = _expand_den(self.den)
        if len(self.num) == 1:
            den = ()
            cont = 1 / self.cont
        else:
            c, den = _factor_poly(self.num)
            cont = 1 / (self.cont * c)
        # den's atoms are exactly the factors of the old numerator,
        # which was coprime to the old denominator, so no cancellation
        return Scalar(-self.lo, cont, num, den)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return self * other._inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self._inverse()

    def __pow__(self, k):
        if k < 0:
            return self._inverse() ** (-k)
        out = one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return scalar_str(self)


def _missing(have, want):
    """Atoms of want not matched in have (multiset difference want-have)."""
    have = list(have)
    out = []
    for aid in want:
        if aid in have:
            have.remove(aid)
        else:
            out.append(aid)
    return tuple(sorted(out))


zero = Scalar(0, _Q0, (), ())
one = Scalar(0, _Q1, (_Z1,), ())
v = Scalar(1, _Q1, (_Z1,), ())
q = Scalar(2, _Q1, (_Z1,), ())  # the quantum parameter
qq = Scalar(4, _Q1, (_Z1,), ())  # its square, used by the vertex layer


def _scalar(x):
    x = _mpq(x) if not isinstance(x, Fraction) else _mpq(x.numerator,
                                                         x.denominator)
    if not x:
        return zero
    return Scalar(0, x, (_Z1,), ())


def _coerce(x):
    if isinstance(x, (int, Fraction)) or type(x) is type(_Q0):
        return _scalar(x)
    return NotImplemented


def vpow(k):
    """v^k for any integer k (negative exponents allowed)."""
    return Scalar(k, _Q1, (_Z1,), ())


def qpow(k):
    """q^k = v^(2k)."""
    return Scalar(2 * k, _Q1, (_Z1,), ())


def qqpow(k):
    """qq^k = v^(4k)."""
    return Scalar(4 * k, _Q1, (_Z1,), ())


def is_zero(a):
    return not a.num if isinstance(a, Scalar) else a == 0


def rat(n, d=1):
    """The constant scalar n/d."""
    return _scalar(_mpq(n, d))


def substitute_power(a, k):
    """Substitute v -> v^k in the scalar a.

    For k = 0 this evaluates at v = 1.  Raises DenominatorVanishes if
    the substituted denominator is zero.
    """
    den = _expand_den(a.den)
    if not a.num:
        return zero
    if k == 0:
        dval = sum(den, _Z0)
        if not dval:
            raise DenominatorVanishes("substitution v -> 1 kills the "
                                      "denominator")
        return _scalar(a.cont * sum(a.num, _Z0) / dval)
    if k > 0:
        num = _dilate(a.num, k)
        dpoly = _dilate(den, k)
        lo = k * a.lo
    else:
        m = -k
        num = _dilate(tuple(reversed(a.num)), m)
        dpoly = _dilate(tuple(reversed(den)), m)
        lo = k * a.lo - m * (len(a.num) - 1) + m * (len(den) - 1)
    c, atoms = _factor_poly(dpoly)
    return _reduce(a.cont / c, num, lo, atoms)


def _dilate(p, k):
    out = [_Z0] * ((len(p) - 1) * k + 1) if p else []
    for i, c in enumerate(p):
        out[i * k] = c
    return out


def _int_form(a):
    """Integer numerator/denominator coefficient lists for display."""
    den = _expand_den(a.den)
    cn, cd = a.cont.numerator, a.cont.denominator
    nums = [int(cn * c) for c in a.num]
    dens = [int(cd * c) for c in den]
    g = 0
    for c in nums + dens:
        g = _igcd(g, c)
    if g > 1:
        nums = [c // g for c in nums]
        dens = [c // g for c in dens]
    if dens[-1] < 0:
        nums = [-c for c in nums]
        dens = [-c for c in dens]
    return nums, dens


def scalar_str(a):
    """Canonical text form: "num / den", ascending powers of v.

    The denominator is omitted when it equals 1.
    """
    if not a.num:
        return "0"
    nums, dens = _int_form(a)
    n = _poly_str(nums, a.lo)
    if dens == [1]:
        return n
    return "%s / %s" % (n, _poly_str(dens, 0))


def _poly_str(coeffs, lo):
    pieces = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        e = lo + i
        if e == 0:
            pieces.append(("+" if c >= 0 else "-", str(abs(c))))
            continue
        mono = "v" if e == 1 else "v^%d" % e
        if abs(c) == 1:
            pieces.append(("+" if c >= 0 else "-", mono))
        else:
            pieces.append(("+" if c >= 0 else "-", "%d*%s" % (abs(c), mono)))
    sign, head = pieces[0]
    out = ("-" if sign == "-" else "") + head
    for sign, tail in pieces[1:]:
        out += " %s %s" % (sign, tail)
    return out


class LevelPoly:
    """Polynomial in a formal level variable c with Fraction coefficients.

    Used by the counting layer, where graded dimensions are polynomials
    in the number of quasi-particle colours.  Immutable in spirit: all
    operations return new instances.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for k, val in coeffs.items():
                val = Fraction(val)
                if val != 0:
                    cleaned[int(k)] = val
        self.coeffs = cleaned

    @classmethod
    def const(cls, value):
        return cls({0: Fraction(value)})

    @classmethod
    def cvar(cls, power=1):
        return cls({power: Fraction(1)})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LevelPoly.const(other)
        if not isinstance(other, LevelPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LevelPoly.const(other)
        out = dict(self.coeffs)
        for k, val in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + val
        return LevelPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LevelPoly({k: -val for k, val in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LevelPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LevelPoly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LevelPoly.const(other)
        if not isinstance(other, LevelPoly):
            return NotImplemented
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return LevelPoly(out)

    __rmul__ = __mul__

    def at(self, cval):
        """Evaluate at a numeric level."""
        return sum((val * Fraction(cval) ** k
                    for k, val in self.coeffs.items()), Fraction(0))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for k in sorted(self.coeffs):
            val = self.coeffs[k]
            if k == 0:
                bits.append(str(val))
            elif k == 1:
                bits.append("%s*c" % val if val != 1 else "c")
            else:
                bits.append("%s*c^%d" % (val, k) if val != 1 else "c^%d" % k)
        return " + ".join(bits)
