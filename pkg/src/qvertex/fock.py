"""The level-1 Fock module and its vertex operators.

States are pairs (partition, charge): the partition is a descending
tuple of positive integers recording a product of oscillator creation
operators a(-r), and the charge h records the lattice exponential
e^{h*alpha}.  Charges are stored doubled so that the half-integer
charges of the extended lattice share one integer representation with
the integer charges of the basic module.

Vectors are dicts mapping states to scalars.  All operators below
return LaurentBlocks (or plain {exponent: vector} dicts in the fast
internal paths) whose coefficients are exact.
"""

from functools import lru_cache

from .scalars import one, zero, q, vpow, is_zero, rat
from .qcalc import qint, SYM
from .laurent import LaurentBlock, vec_iadd, vec_scale

VACUUM = ((), 0)


def state(partition=(), charge2=0):
    return (tuple(sorted(partition, reverse=True)), charge2)


def deg(st):
    """Heisenberg degree: sum of the partition."""
    return sum(st[0])


def charge2(st):
    return st[1]


def weight4(st):
    """4 * (deg + h^2), an integer for every stored state."""
    return 4 * deg(st) + st[1] * st[1]


@lru_cache(maxsize=None)
def kappa(r):
    """The oscillator pairing [2r][r]/r with symmetric q-integers."""
    return qint(2 * r, SYM) * qint(r, SYM) / rat(r)


def heis_act(r, vec):
    """Apply a(r): creation for r < 0, annihilation for r > 0."""
    if r == 0:
        raise ValueError("a(0) is not a generator")
    out = {}
    if r < 0:
        for (parts, c2), coeff in vec.items():
            st = (tuple(sorted(parts + (-r,), reverse=True)), c2)
            vec_iadd(out, {st: coeff})
        return out
    k = kappa(r)
    for (parts, c2), coeff in vec.items():
        m = parts.count(r)
        if m == 0:
            continue
        rest = list(parts)
        rest.remove(r)
        st = (tuple(rest), c2)
        vec_iadd(out, {st: coeff * k * m})
    return out


@lru_cache(maxsize=None)
def _partitions(n):
    """All partitions of n as descending tuples."""
    if n == 0:
        return ((),)
    out = []

    def rec(rem, maxpart, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rem, maxpart), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def _create_cluster(st, lam, scalar):
    """Multiply the state by Π a(-r) over the parts of lam, scaled."""
    parts, c2 = st
    new = tuple(sorted(parts + lam, reverse=True))
    return (new, c2), scalar


def _annihilate_cluster(st, lam, scalar):
    """Apply Π a(r) over the parts of lam; returns (state, scalar) or None."""
    parts, c2 = st
    remaining = list(parts)
    total = scalar
    for r in lam:
        m = remaining.count(r)
        if m == 0:
            return None
        total = total * kappa(r) * m
        remaining.remove(r)
    return (tuple(remaining), c2), total


@lru_cache(maxsize=None)
def _exp_weights(gamma_key, n):
    """Coefficient data of exp(Σ_r g_r A_r u^r) at u^n.

    Returns tuples (lam, scalar) where scalar = Π g_r^{m_r} / m_r!
    over the multiplicities m_r of the partition lam.  gamma_key names
    one of the fixed coefficient families below.
    """
    gamma = _GAMMAS[gamma_key]
    out = []
    for lam in _partitions(n):
        scalar = one
        mult = {}
        for r in lam:
            mult[r] = mult.get(r, 0) + 1
        ok = True
        for r, m in mult.items():
            g = gamma(r)
            if is_zero(g):
                ok = False
                break
            acc = one
            fact = 1
            for i in range(m):
                acc = acc * g
                fact *= i + 1
            scalar = scalar * acc / rat(fact)
        if ok:
            out.append((lam, scalar))
    return tuple(out)


# Exponential coefficient families.  Signs are folded in so that every
# operator below is exp(Σ_r gamma_r a(±r) z^{±r}) literally.
_GAMMAS = {
    # x^+(z) creation half: exp(+Σ q^{-r/2}/[r] a(-r) z^r)
    "x_minus": lambda r: vpow(-r) / qint(r, SYM),
    # x^+(z) annihilation half: exp(-Σ q^{-r/2}/[r] a(r) z^{-r})
    "x_plus": lambda r: -vpow(-r) / qint(r, SYM),
    # phi(z) creation part: exp(-(q-q^{-1}) Σ a(-r) z^r)
    "phi": lambda r: -(q - 1 / q),
    # screening creation: exp(+Σ q^{r/2}/[2r] a(-r) z^r)
    "scr_minus": lambda r: vpow(r) / qint(2 * r, SYM),
    # screening annihilation: exp(-Σ q^{r/2}/[2r] a(r) z^{-r})
    "scr_plus": lambda r: -vpow(r) / qint(2 * r, SYM),
    # inverses (negated exponents)
    "scr_minus_inv": lambda r: -vpow(r) / qint(2 * r, SYM),
    "scr_plus_inv": lambda r: vpow(r) / qint(2 * r, SYM),
}

_KINDS = {
    # kind: (gamma_key, direction) with direction +1 creation / -1 annihilation
    "Eminus_x": ("x_minus", +1),
    "Eplus_x": ("x_plus", -1),
    "phi_exp": ("phi", +1),
    "ScreenEminus": ("scr_minus", +1),
    "ScreenEplus": ("scr_plus", -1),
    "ScreenEminus_inv": ("scr_minus_inv", +1),
    "ScreenEplus_inv": ("scr_plus_inv", -1),
}


def _exp_apply_state(gamma_key, direction, st, coeff, nmax, out):
    """Accumulate exp-series application on one state into out.

    out maps plain integer exponents e to vectors; for creation the
    u^n term lands at e = n*direction... direction is +1 and exponents
    are n; for annihilation exponents are -n and n is capped by the
    Heisenberg degree of st.
    """
    if direction < 0:
        nmax = min(nmax, deg(st))
    for n in range(0, nmax + 1):
        for lam, scalar in _exp_weights(gamma_key, n):
            if direction > 0:
                key, sc = _create_cluster(st, lam, scalar)
            else:
                res = _annihilate_cluster(st, lam, scalar)
                if res is None:
                    continue
                key, sc = res
            e = n if direction > 0 else -n
            vec_iadd(out.setdefault(e, {}), {key: coeff * sc})


def exp_op_apply(kind, vec, lo2, hi2, arg_vpow=0):
    """Apply one exponential operator; returns a LaurentBlock.

    lo2/hi2 are doubled exponent bounds; arg_vpow scales the argument
    z -> z * v^arg_vpow.
    """
    gamma_key, direction = _KINDS[kind]
    out = {}
    for st, coeff in vec.items():
        tmp = {}
        nmax = hi2 // 2 if direction > 0 else -(lo2 // 2)
        if nmax < 0:
            nmax = -1
        _exp_apply_state(gamma_key, direction, st, coeff, nmax, tmp)
        for e, v in tmp.items():
            vec_iadd(out.setdefault(2 * e, {}), v)
    if arg_vpow:
        out = {E: vec_scale(v, vpow(arg_vpow * E // 2)) for E, v in out.items()}
    out = {E: v for E, v in out.items() if lo2 <= E <= hi2 and v}
    if direction > 0:
        true_lo2 = 0
    else:
        true_lo2 = -2 * max((deg(st) for st in vec), default=0)
    return LaurentBlock(out, lo2, hi2, lo2 <= true_lo2)


def x_plus_state(st, hi):
    """x^+(z) applied to one state: dict {integer exponent: vector}.

    The z^k coefficient vanishes below k = charge*2/... the certified
    lower bound is 2h - deg(st): the lattice part contributes z^{2h}
    reading the input charge, the annihilation half at most deg(st)
    negative powers.  Exponents here are plain integers.
    """
    parts, c2 = st
    if c2 % 2:
        raise ValueError("x^+ acts on the integer-charge module")
    h2 = c2  # doubled charge; z^{2h} has plain exponent c2
    lattice_e = c2
    new_c2 = c2 + 2
    lo = lattice_e - deg(st)
    # annihilation half first
    ann = {}
    _exp_apply_state("x_plus", -1, (parts, new_c2), one, deg(st), ann)
    out = {}
    for ea, veca in ann.items():
        cap = hi - lattice_e - ea
        if cap < 0:
            continue
        for sta, ca in veca.items():
            tmp = {}
            _exp_apply_state("x_minus", +1, sta, ca, cap, tmp)
            for ec, v in tmp.items():
                vec_iadd(out.setdefault(ea + ec + lattice_e, {}), v)
    return {e: v for e, v in out.items() if v and lo <= e <= hi}


def x_plus_apply(vec, lo2, hi2):
    """x^+(z) on a vector, as a LaurentBlock (doubled window)."""
    out = {}
    hi = hi2 // 2
    for st, coeff in vec.items():
        blk = x_plus_state(st, hi)
        for e, v in blk.items():
            if lo2 <= 2 * e <= hi2:
                vec_iadd(out.setdefault(2 * e, {}), v, coeff)
    true_lo2 = min((2 * (st[1] - deg(st)) for st in vec), default=0)
    return LaurentBlock(out, lo2, hi2, lo2 <= true_lo2)


def phi_state(st, hi):
    """phi(z) applied to one state: dict {integer exponent >= 0: vector}."""
    parts, c2 = st
    kinv = vpow(-2 * c2)  # K^{-1} eigenvalue q^{-2h} = v^{-2*c2}
    out = {}
    _exp_apply_state("phi", +1, st, kinv, max(hi, 0), out)
    return {e: v for e, v in out.items() if e <= hi and v}


def phi_apply(vec, lo2, hi2):
    out = {}
    hi = hi2 // 2
    for st, coeff in vec.items():
        blk = phi_state(st, hi)
        for e, v in blk.items():
            if lo2 <= 2 * e <= hi2:
                vec_iadd(out.setdefault(2 * e, {}), v, coeff)
    return LaurentBlock(out, lo2, hi2, lo2 <= 0)


def screening_minus_apply(vec, lo2, hi2, invert=False):
    """The creation-only screening exponential (no lattice part)."""
    kind = "ScreenEminus_inv" if invert else "ScreenEminus"
    return exp_op_apply(kind, vec, max(lo2, 0), hi2)


def screening_pair_apply(vec, lo2, hi2):
    """The intertwining operator: screening pair with e^{lam1}(-z)^{d_lam1}.

    On a charge-h state the lattice part contributes (-z)^h (h read
    from the input charge); output charges are shifted by +1/2.  The
    sign (-1)^h is only defined for integer input charge.
    """
    out = {}
    for st, coeff in vec.items():
        parts, c2 = st
        if c2 % 2:
            raise ValueError("(-z)^h undefined for half-integer charge h")
        h = c2 // 2
        sign = one if h % 2 == 0 else -one
        lat_e2 = c2  # doubled exponent of z^h
        shifted = (parts, c2 + 1)
        ann = {}
        _exp_apply_state("scr_plus", -1, shifted, coeff * sign, deg(st), ann)
        for ea, veca in ann.items():
            cap2 = hi2 - lat_e2 - 2 * ea
            if cap2 < 0:
                continue
            for sta, ca in veca.items():
                tmp = {}
                _exp_apply_state("scr_minus", +1, sta, ca, cap2 // 2, tmp)
                for ec, v in tmp.items():
                    E = 2 * (ea + ec) + lat_e2
                    if lo2 <= E <= hi2:
                        vec_iadd(out.setdefault(E, {}), v)
    true_lo2 = min((st[1] - 2 * deg(st) for st in vec), default=0)
    return LaurentBlock(out, lo2, hi2, lo2 <= true_lo2)


# ---- normal-ordered specialized products --------------------------------
#
# A product of currents and phi factors whose arguments are all monomial
# multiples z*v^t of one variable collapses, after normal ordering, to a
# single pair of exponentials whose coefficient families are the t-weighted
# sums of the one-operator families.  The order-dependent pairwise
# commutation scalars are left to the caller; the cached core below is
# order-independent.

_GEN_CACHE = {}


def clear_gen_cache():
    _GEN_CACHE.clear()


def _gen_gamma_keys(xts, pts):
    """Register (if needed) the summed coefficient families for the
    normal-ordered product of currents x(z*v^t), t in xts, and factors
    phi(z*v^t), t in pts.  Returns (creation key, annihilation key)."""
    km = ("gen_minus", xts, pts)
    if km not in _GAMMAS:
        def gminus(r, _x=xts, _p=pts):
            acc = zero
            for t in _x:
                acc = acc + vpow(r * (t - 1))
            acc = acc / qint(r, SYM)
            for t in _p:
                acc = acc - (q - 1 / q) * vpow(r * t)
            return acc
        _GAMMAS[km] = gminus
    kp = ("gen_plus", xts)
    if kp not in _GAMMAS:
        def gplus(r, _x=xts):
            acc = zero
            for t in _x:
                acc = acc + vpow(-r * (t + 1))
            return -acc / qint(r, SYM)
        _GAMMAS[kp] = gplus
    return km, kp


def gen_item_state(st, xts, pts, hi):
    """Normal-ordered core of Π x(z*v^t) Π phi(z*v^t) on one state.

    Returns {exponent: vector}.  Creation halves left, annihilation
    halves right; every lattice exponent and K-eigenvalue reads the
    input charge, and each pair of currents contributes one factor z^2
    (the monomial part of their commutation polynomial).  The scalar
    parts of the pairwise commutation factors, which depend on the
    operator order, are not included.
    """
    parts, c2 = st
    if c2 % 2:
        raise ValueError("integer-charge module only")
    k = len(xts)
    lat = k * c2 + k * (k - 1)
    lo = lat - deg(st)
    read = vpow(c2 * (sum(xts) - 2 * len(pts)))
    km, kp = _gen_gamma_keys(xts, pts)
    new = (parts, c2 + 2 * k)
    ann = {}
    _exp_apply_state(kp, -1, new, read, deg(st), ann)
    out = {}
    for ea, veca in ann.items():
        cap = hi - lat - ea
        if cap < 0:
            continue
        for sta, ca in veca.items():
            tmp = {}
            _exp_apply_state(km, +1, sta, ca, cap, tmp)
            for ec, v in tmp.items():
                vec_iadd(out.setdefault(ea + ec + lat, {}), v)
    return {e: v for e, v in out.items() if v and lo <= e <= hi}


def gen_item_block(st, items, hi):
    """Cached gen_item_state; items is a list of ("x"|"phi", t) pairs."""
    xts = tuple(sorted(t for kind, t in items if kind == "x"))
    pts = tuple(sorted(t for kind, t in items if kind == "phi"))
    key = (st, xts, pts)
    got = _GEN_CACHE.get(key)
    if got is None or got[0] < hi:
        got = (hi, gen_item_state(st, xts, pts, hi))
        _GEN_CACHE[key] = got
    return {e: v for e, v in got[1].items() if e <= hi}


def normal_ordered_xx_state(st, hi1, hi2):
    """:x^+(z1)x^+(z2): on one state, as {(e1, e2): vector}.

    All creation halves left, annihilation halves right, both lattice
    exponents reading the input charge; the charge rises by 2.
    """
    parts, c2 = st
    if c2 % 2:
        raise ValueError("integer-charge module only")
    lat = c2
    new = (parts, c2 + 4)
    d = deg(st)
    # annihilation in z2 then z1 (they commute), creation in both
    out = {}
    ann2 = {}
    _exp_apply_state("x_plus", -1, new, one, d, ann2)
    for e2a, v2 in ann2.items():
        for st2, c2a in v2.items():
            ann1 = {}
            _exp_apply_state("x_plus", -1, st2, c2a, deg(st2), ann1)
            for e1a, v1 in ann1.items():
                for st1, c1a in v1.items():
                    cap1 = hi1 - lat - e1a
                    if cap1 < 0:
                        continue
                    cre1 = {}
                    _exp_apply_state("x_minus", +1, st1, c1a, cap1, cre1)
                    for e1c, vc in cre1.items():
                        cap2 = hi2 - lat - e2a
                        if cap2 < 0:
                            continue
                        for stc, cc in vc.items():
                            cre2 = {}
                            _exp_apply_state("x_minus", +1, stc, cc, cap2,
                                             cre2)
                            for e2c, vf in cre2.items():
                                key = (e1a + e1c + lat, e2a + e2c + lat)
                                if key[0] <= hi1 and key[1] <= hi2:
                                    vec_iadd(out.setdefault(key, {}), vf)
    return {k: v for k, v in out.items() if v}
