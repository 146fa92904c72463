"""Symbolic shifted-current expressions and their r-th products.

A CurrentExpr is a finite sum of terms

    coeff * z^e * x(z*qq^{s_1}) ... x(z*qq^{s_m}) (x) t^d,

stored as a dict (e, d, (s_1,...,s_m)) -> coeff.  The r-th products
are computed symbolically: the negative-index products divide out the
iterated q-difference of the left factor (which only produces
uniformly shifted copies of its terms) and shift the right factor, so
the diagonal substitution is exact once a clearing certificate
guarantees the two-variable product is a genuine Laurent series.

Evaluation at level c composes the coproduct current right-to-left.
The composition is organised as a head-versus-rest recursion: the rest
of the word is evaluated first (one variable), the head current is
applied with a bivariate bookkeeping of (head exponent, rest exponent),
the clearing polynomial in the ratio of the two variables is
multiplied in, and the anti-diagonal sums are taken inside the
certified support region, where they are finite.
"""

from itertools import product as _iproduct

from .scalars import one, zero, vpow, qq, is_zero
from .qcalc import qfact, qbinom
from .laurent import LaurentBlock, vec_iadd
from . import fock, levelc


class PoleOnDiagonal(ValueError):
    """A term has q-adjacent shifts in the order that leaves a pole."""


class ClearingUnavailable(ValueError):
    """No admissible clearing polynomial exists for the given order."""


class Inhomogeneous(ValueError):
    """Operation requires a single t-degree."""


class CurrentExpr:
    """Finite linear combination of shifted-current monomials."""

    __slots__ = ("terms", "cert")

    def __init__(self, terms=None, cert=()):
        cleaned = {}
        if terms:
            for key, c in terms.items():
                if not is_zero(c):
                    cleaned[key] = c
        self.terms = cleaned
        self.cert = tuple(sorted(cert))

    @classmethod
    def vacuum(cls):
        return cls({(0, 0, ()): one})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, CurrentExpr):
            return NotImplemented
        return self.terms == other.terms

    def add(self, other, coeff=None):
        out = dict(self.terms)
        for key, c in other.terms.items():
            if coeff is not None:
                c = coeff * c
            s = out.get(key, zero) + c
            if is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        return CurrentExpr(out, self.cert + other.cert)

    def scale(self, coeff):
        return CurrentExpr({key: coeff * c for key, c in self.terms.items()},
                           self.cert)

    def t_degrees(self):
        return sorted({key[1] for key in self.terms})

    def render(self):
        """Canonical text form, one line per term."""
        lines = []
        for (e, d, shifts) in sorted(self.terms):
            c = self.terms[(e, d, shifts)]
            xs = "".join("x[%d]" % s for s in shifts) or "1"
            lines.append("%s * z^%d * %s * t^%d" % (c, e, xs, d))
        return "\n".join(lines) if lines else "0"

    def __repr__(self):
        return "CurrentExpr(%d terms)" % len(self.terms)


def generator(n=1):
    """The current itself with t-weight n: the single term x(z) (x) t^n."""
    if n < 0:
        raise ValueError("t-degree must be nonnegative")
    return CurrentExpr({(0, n, (0,)): one})


def wt(expr):
    """The t-degree of a homogeneous expression."""
    degs = expr.t_degrees()
    if len(degs) != 1:
        raise Inhomogeneous("t-degrees %s" % (degs,))
    return degs[0]


def _derive_term(coeff, e, shifts, r):
    """The r-fold q-difference of coeff * z^e * Π x(z*qq^s).

    Each step maps a term to (qq^e' * bumped - unbumped) / (qq - 1)
    with z-power dropping by one; bumps add 1 to every shift.  Returns
    {bump_count: coeff} with common z-power e - r.
    """
    branches = {0: coeff}
    for step in range(r):
        ecur = e - step
        new = {}
        for j, c in branches.items():
            up = c * vpow(4 * ecur) / (qq - 1)
            dn = -c / (qq - 1)
            for jj, cc in ((j + 1, up), (j, dn)):
                s = new.get(jj, zero) + cc
                if is_zero(s):
                    new.pop(jj, None)
                else:
                    new[jj] = s
        branches = new
    return branches


def rth_product(a, b, index):
    """The index-th product of two expressions; zero for index >= 0."""
    if index >= 0:
        return CurrentExpr()
    r = -index - 1
    fact = qfact(r)
    out = {}
    cert = set(a.cert) | set(b.cert)
    for (ea, ta, sa), ca in a.terms.items():
        k0 = ta + r  # argument shift of the right factor
        branches = _derive_term(ca / fact, ea, sa, r)
        for (eb, tb, sb), cb in b.terms.items():
            # clearing certificate: one admissible factor per cross pair,
            # covering every shifted copy of the left factor
            for si in sa:
                for sj in sb:
                    k = (sj + k0) - (si + r)
                    if k < 0:
                        raise ClearingUnavailable(
                            "cross pair needs factor with k = %d < 0" % k)
                    for l in range(r + 1):
                        cert.add((sj + k0) - (si + l))
            cbs = cb * vpow(4 * k0 * eb)
            sbs = tuple(s + k0 for s in sb)
            for j, cab in branches.items():
                key = (ea - r + eb, ta + tb + r,
                       tuple(s + j for s in sa) + sbs)
                s = out.get(key, zero) + cab * cbs
                if is_zero(s):
                    out.pop(key, None)
                else:
                    out[key] = s
    return CurrentExpr(out, cert)


def check_pole_free(expr):
    for (e, d, shifts) in expr.terms:
        for i in range(len(shifts)):
            for j in range(i + 1, len(shifts)):
                if shifts[j] - shifts[i] == -1:
                    raise PoleOnDiagonal("shifts %s" % (shifts,))


def _clearing_poly(shifts, extra=()):
    """Π_j (1 - qq^{1+s_j-s_1} ζ) / (1 - qq^{1+s_j-s_1}) as {ζ-power: coeff}.

    ζ is the ratio (rest variable)/(head variable).  extra lists
    additional admissible k-values to multiply in (used to exercise
    independence of the clearing choice).
    """
    poly = {0: one}
    ks = [s - shifts[0] for s in shifts[1:]]
    for k in list(ks) + list(extra):
        if k == -1:
            raise PoleOnDiagonal("q-adjacent shifts in pole order")
        if k < 0:
            raise ClearingUnavailable("factor k = %d inadmissible" % k)
        root = vpow(4 * (1 + k))
        norm = one - root
        new = {}
        for d, c in poly.items():
            for dd, cc in ((d, c / norm), (d + 1, -c * root / norm)):
                s = new.get(dd, zero) + cc
                if is_zero(s):
                    new.pop(dd, None)
                else:
                    new[dd] = s
        poly = new
    return poly


# cache: (shifts, c, frozen vec, extra) -> [hi_computed, coeffs, lo_cert]
_WORD_CACHE = {}


def clear_caches():
    _WORD_CACHE.clear()
    fock.clear_gen_cache()


def _freeze_vec(vec):
    return tuple(sorted(vec.items()))


class _FastPole(Exception):
    """A specialized pair hits the pole of a commutation factor."""


def _pair_scalar(ka, ta, kb, tb):
    """Commutation scalar for the specialized pair a(z*v^ta) b(z*v^tb),
    a on the left, relative to the order-independent normal-ordered core.

    Current-current pairs contribute the scalar part of the polynomial
    (z_a - z_b)(z_a - q^{-2} z_b); a current left of a phi contributes
    the contraction of its annihilation half with the phi exponential; a
    phi left of a current sees the once-raised charge through K^{-1}.
    """
    if ka == "x":
        if kb == "x":
            return (vpow(ta) - vpow(tb)) * (vpow(ta) - vpow(tb - 4))
        d = tb - ta
        if d == -3:
            raise _FastPole("phi argument on the contraction pole")
        return (one - vpow(d - 5)) / (one - vpow(d + 3))
    if kb == "x":
        return vpow(-4)
    return one


def _eval_word_fast(shifts, c, vec, hi):
    """Normal-ordered evaluation of a strictly ascending word.

    Each current is distributed over the tensor slots by the iterated
    coproduct; for every assignment the factor-wise operator lists are
    collapsed to one cached normal-ordered block each, so the cost per
    assignment is a single c-fold convolution instead of an m-level
    composition of full module maps.
    """
    m = len(shifts)
    out = {}
    lo_cert = 0
    for states, cf0 in vec.items():
        degs = [fock.deg(st) for st in states]
        for assign in _iproduct(range(c), repeat=m):
            items = [[] for _ in range(c)]
            for i, s in enumerate(shifts):
                l = assign[i]
                items[l].append(("x", 4 * s + 2 * l))
                for f in range(l):
                    items[f].append(("phi", 4 * s + 2 * f + 1))
            pref = cf0
            dead = False
            for fl in items:
                for a in range(len(fl)):
                    ka, ta = fl[a]
                    for b in range(a + 1, len(fl)):
                        ps = _pair_scalar(ka, ta, *fl[b])
                        if is_zero(ps):
                            dead = True
                            break
                        pref = pref * ps
                    if dead:
                        break
                if dead:
                    break
            if dead:
                continue
            los = []
            for f in range(c):
                kf = sum(1 for it in items[f] if it[0] == "x")
                los.append(0 if kf == 0 else
                           kf * states[f][1] + kf * (kf - 1) - degs[f])
            lo_a = sum(los)
            lo_cert = min(lo_cert, lo_a)
            if lo_a > hi:
                continue
            acc = {0: {(): pref}}
            rem = lo_a
            for f in range(c):
                rem -= los[f]
                blk = fock.gen_item_block(states[f], items[f],
                                          hi - (lo_a - los[f]))
                nxt = {}
                for e0, pv in acc.items():
                    cap = hi - e0 - rem
                    for e1, v1 in blk.items():
                        if e1 > cap:
                            continue
                        dst = nxt.setdefault(e0 + e1, {})
                        for pstates, pc in pv.items():
                            for st1, c1 in v1.items():
                                key = pstates + (st1,)
                                got = dst.get(key)
                                dst[key] = pc * c1 if got is None \
                                    else got + pc * c1
                acc = nxt
                if not acc:
                    break
            for e, pv in acc.items():
                vec_iadd(out.setdefault(e, {}), pv)
    return {e: v for e, v in out.items() if v}, lo_cert


def eval_word(shifts, c, vec, hi, extra_clearing=()):
    """Diagonal product of currents at the given shifts, applied to vec.

    Returns (coeffs, lo): coeffs maps plain integer exponents <= hi to
    tensor vectors; lo is the certified bound below which every
    coefficient of the true series vanishes.
    """
    if not vec:
        return {}, 0
    if not shifts:
        return {0: dict(vec)}, 0
    key = (tuple(shifts), c, _freeze_vec(vec), tuple(extra_clearing))
    got = _WORD_CACHE.get(key)
    if got is not None and got[0] >= hi:
        coeffs, lo = got[1], got[2]
        return {e: v for e, v in coeffs.items() if e <= hi}, lo
    if not extra_clearing and all(shifts[i] < shifts[i + 1]
                                  for i in range(len(shifts) - 1)):
        try:
            out, lo = _eval_word_fast(shifts, c, vec, hi)
        except _FastPole:
            pass
        else:
            _WORD_CACHE[key] = [hi, out, lo]
            return out, lo
    m = len(shifts)
    penalty = (m - 1) + len(extra_clearing)
    base = min(levelc.state_lower(states) for states in vec)
    n1 = base - penalty
    rest, lo_rest = eval_word(shifts[1:], c, vec, hi - n1, extra_clearing)
    poly = _clearing_poly(shifts, extra_clearing)
    out = {}
    s1 = shifts[0]
    for k, u in rest.items():
        for states, cf in u.items():
            lo_state = max(levelc.state_lower(states), n1)
            blk = levelc.level_x_state(states, lo_state, hi - k,
                                       arg_vpow=4 * s1)
            for k1, v in blk.items():
                e = k1 + k
                for d, pd in poly.items():
                    if k1 - d >= n1 and e <= hi:
                        vec_iadd(out.setdefault(e, {}), v, pd * cf)
    out = {e: v for e, v in out.items() if v}
    lo = n1 + lo_rest
    _WORD_CACHE[key] = [hi, out, lo]
    return out, lo


def evaluate_by_t(expr, c, vec, hi2, extra_clearing=()):
    """Evaluate termwise, grouped by t-degree: {t: (coeffs, lo)}.

    coeffs maps plain integer exponents to tensor vectors.
    """
    check_pole_free(expr)
    hi = hi2 // 2
    groups = {}
    for (e, d, shifts), coeff in expr.terms.items():
        coeffs, lo = eval_word(shifts, c, vec, hi - e, extra_clearing)
        acc, acc_lo = groups.get(d, ({}, 0))
        for k, v in coeffs.items():
            if k + e <= hi:
                vec_iadd(acc.setdefault(k + e, {}), v, coeff)
        groups[d] = ({kk: vv for kk, vv in acc.items() if vv},
                     min(acc_lo, lo + e))
    return groups


def evaluate(expr, c, vec, hi2, extra_clearing=()):
    """Evaluate the whole expression; returns a LaurentBlock."""
    groups = evaluate_by_t(expr, c, vec, hi2, extra_clearing)
    out = {}
    lo = 0
    for d, (coeffs, glo) in groups.items():
        lo = min(lo, glo)
        for e, v in coeffs.items():
            vec_iadd(out.setdefault(2 * e, {}), v)
    return LaurentBlock({E: v for E, v in out.items() if v},
                        2 * lo, hi2, True)


def blocks_equal(b1, b2, lo2, hi2):
    """Coefficient-wise equality on the doubled window [lo2, hi2]."""
    for E in range(lo2, hi2 + 1):
        v1 = b1.coeffs.get(E, {}) if E >= b1.lo or b1.lower_exact else None
        v2 = b2.coeffs.get(E, {}) if E >= b2.lo or b2.lower_exact else None
        if v1 != v2:
            return False, E
    return True, None


def check_associativity(a, b, cc, r, s, c, vectors, hi2):
    """Compare (a_r b)_s cc with its iterate expansion on test vectors.

    Returns a list of (vector index, equal, first discrepant doubled
    exponent or None).
    """
    u = wt(a)
    lhs = rth_product(rth_product(a, b, r), cc, s)
    rhs = CurrentExpr()
    l = 0
    while s + l < 0:
        coeff = qbinom(l - r - 1, l) * vpow(4 * (s + l + 1) * (r - u + 1))
        if not is_zero(coeff):
            inner = rth_product(b, cc, s + l)
            if not inner.is_zero():
                rhs = rhs.add(rth_product(a, inner, r - l), coeff)
        l += 1
    report = []
    for idx, vec in enumerate(vectors):
        bl = evaluate(lhs, c, vec, hi2)
        br = evaluate(rhs, c, vec, hi2)
        lo2 = min(bl.lo, br.lo)
        okay, where = blocks_equal(bl, br, lo2, hi2)
        report.append((idx, okay, where))
    return report
