"""Level-c module: c-fold tensor powers of the level-1 Fock module.

Tensor vectors are dicts mapping c-tuples of Fock states to scalars.
The positive current acts through the iterated coproduct: the l-th
summand places the current itself (argument z*q^{l-1}) on factor l and
one phi factor (arguments z*q^{1/2}, ..., z*q^{l-3/2}) on each factor
before it.  All argument shifts are folded into the single variable z
factor-by-factor, so plain applications never materialize blocks in
more than one variable.
"""

from .scalars import one, vpow, is_zero
from .laurent import LaurentBlock, vec_iadd, vec_scale
from . import fock

# per-state caches of raw factor blocks: state -> (hi, {e: vector})
_XCACHE = {}
_PHICACHE = {}
# (states, arg_vpow) -> (hi, {e: TensorVector}) for the full coproduct
_LEVELX_CACHE = {}


def clear_caches():
    _XCACHE.clear()
    _PHICACHE.clear()
    _LEVELX_CACHE.clear()


def _cached(cache, fn, st, hi):
    got = cache.get(st)
    if got is not None and got[0] >= hi:
        return got[1]
    blk = fn(st, hi)
    cache[st] = (hi, blk)
    return blk


def x_block(st, hi):
    return _cached(_XCACHE, fock.x_plus_state, st, hi)


def phi_block(st, hi):
    return _cached(_PHICACHE, fock.phi_state, st, hi)


def state_lower(states):
    """Certified lower bound of the current's action on a pure state."""
    return min(st[1] - fock.deg(st) for st in states)


def tensor_weight4(states):
    return sum(fock.weight4(st) for st in states)


def total_charge2(states):
    return sum(st[1] for st in states)


def coproduct_current_state(states, l, lo, hi, arg_vpow=0):
    """The l-th coproduct summand on a pure tensor state.

    Returns {exponent: TensorVector}; arg_vpow shifts the overall
    argument z -> z * v^arg_vpow before the printed per-factor shifts.
    """
    c = len(states)
    xlo = states[l - 1][1] - fock.deg(states[l - 1])
    # factor caps: every phi contributes >= 0 and the current >= xlo
    phicap = hi - xlo
    out = {}

    def rec(f, e_acc, prefix, coeff):
        if f == l:
            cap = hi - e_acc
            if cap < xlo:
                return
            for e, v in x_block(states[l - 1], cap).items():
                tot = e_acc + e
                if tot < lo or tot > hi:
                    continue
                sc = coeff * vpow((arg_vpow + 2 * (l - 1)) * e)
                for stx, cx in v.items():
                    key = prefix + (stx,) + states[l:]
                    vec_iadd(out.setdefault(tot, {}), {key: sc * cx})
            return
        cap = hi - e_acc - xlo
        if cap < 0:
            return
        for e, v in phi_block(states[f - 1], cap).items():
            sc = coeff * vpow((arg_vpow + 2 * f - 1) * e)
            for stp, cp in v.items():
                rec(f + 1, e_acc + e, prefix + (stp,), sc * cp)

    rec(1, 0, (), one)
    return out


def coproduct_current_apply(l, vec, lo2, hi2, arg_vpow=0):
    """Block form of the l-th coproduct summand on a tensor vector."""
    out = {}
    lo, hi = lo2 // 2, hi2 // 2
    true_lo = 0
    for states, coeff in vec.items():
        xlo = states[l - 1][1] - fock.deg(states[l - 1])
        true_lo = min(true_lo, xlo)
        for e, v in coproduct_current_state(states, l, lo, hi,
                                            arg_vpow).items():
            vec_iadd(out.setdefault(2 * e, {}), v, coeff)
    return LaurentBlock(out, lo2, hi2, lo <= true_lo)


def level_x_state(states, lo, hi, arg_vpow=0):
    """Full coproduct current on a pure tensor state: {e: TensorVector}.

    Results are cached for the unshifted argument; the scaling z ->
    z * v^arg_vpow only multiplies the coefficient of z^e by v^(e*arg).
    """
    got = _LEVELX_CACHE.get(states)
    if got is None or got[0] < hi:
        true_lo = state_lower(states)
        out = {}
        for l in range(1, len(states) + 1):
            for e, v in coproduct_current_state(states, l, true_lo,
                                                hi).items():
                vec_iadd(out.setdefault(e, {}), v)
        out = {e: v for e, v in out.items() if v}
        _LEVELX_CACHE[states] = (hi, out)
        got = (hi, out)
    if arg_vpow == 0:
        return {e: v for e, v in got[1].items() if lo <= e <= hi}
    return {e: vec_scale(v, vpow(arg_vpow * e))
            for e, v in got[1].items() if lo <= e <= hi}


def level_x_apply(vec, lo2, hi2, arg_vpow=0):
    out = {}
    lo, hi = lo2 // 2, hi2 // 2
    true_lo = 0
    for states, coeff in vec.items():
        true_lo = min(true_lo, state_lower(states))
        for e, v in level_x_state(states, lo, hi, arg_vpow).items():
            vec_iadd(out.setdefault(2 * e, {}), v, coeff)
    return LaurentBlock(out, lo2, hi2, lo <= true_lo)


def charge_profile_project(vec, profile):
    """Keep the terms whose factor-j charge equals profile[j]."""
    want = tuple(2 * r for r in profile)
    return {states: c for states, c in vec.items()
            if tuple(st[1] for st in states) == want}


def k_eigen2(states):
    """Doubled exponent s with K acting as q^(2s) ... returns Σ charges."""
    return total_charge2(states) // 2


def conjugate_scalar(shifts, p, c):
    """Scalar by which the screening conjugation multiplies a product.

    Moving the tensor-product screening operator (factors at arguments
    z*qq^(p), ..., z*qq^(p+c-1)) through a product of currents at
    argument shifts qq^n produces one factor (1 - qq^(p+f-1-n)) per
    current per tensor slot; the product collapses to this scalar on
    the diagonal because every remaining ratio factor evaluates at 1.
    """
    beta = one
    for n in shifts:
        for f in range(1, c + 1):
            beta = beta * (one - vpow(4 * (p + f - 1 - n)))
    return beta


def conjugate_by_Ec(eval_closure, shifts, p, c, invert, vec, lo2, hi2):
    """Evaluate the screening conjugation of a shifted-current product.

    eval_closure(vec, lo2, hi2) evaluates the product itself; the
    commutation relation for currents past the screening exponential
    reduces the conjugation to the scalar conjugate_scalar (or its
    inverse for invert = -1, which requires the scalar nonzero).
    """
    beta = conjugate_scalar(shifts, p, c)
    if invert < 0:
        if is_zero(beta):
            raise ZeroDivisionError("conjugation scalar vanishes; "
                                    "inverse conjugation undefined")
        base = eval_closure(vec, lo2, hi2)
        return base.scale(one / beta)
    base = eval_closure(vec, lo2, hi2)
    return base.scale(beta)


def enumerate_states(c, weight4_max, charge2_band=None):
    """All tensor basis states with 4*total weight <= weight4_max.

    Weight of one factor is deg + h^2; factors run over all partitions
    and charges fitting the bound.  charge2_band optionally restricts
    each factor's doubled charge to [-band, band].
    """
    singles = []
    band = charge2_band
    if band is None:
        band = int(weight4_max ** 0.5) + 1
    for c2 in range(-band, band + 1):
        if c2 % 2:
            continue  # basic module: integer charges
        w0 = c2 * c2
        if w0 > weight4_max:
            continue
        for n in range(0, (weight4_max - w0) // 4 + 1):
            for lam in fock._partitions(n):
                singles.append(((lam, c2), w0 + 4 * n))

    out = []

    def rec(f, acc, wleft):
        if f == c:
            out.append(tuple(acc))
            return
        for st, w in singles:
            if w <= wleft:
                acc.append(st)
                rec(f + 1, acc, wleft - w)
                acc.pop()

    rec(0, [], weight4_max)
    return out
