"""Quasi-particles, fusion, integrability, straightening, A-terms.

A quasi-particle of charge m is the m-fold iterated (-1)-product of
the generating current; a quasi-particle monomial is described by its
pairs ((m_1, r_1), ..., (m_k, r_k)) and realized as the nested product
x_{m_1, r_1}(x_{m_2, r_2}(... x_{m_k, r_k} 1)).  The straightening
algorithm rewrites an arbitrary monomial as an exact combination of
basis-form monomials (interior indices <= -2, last index <= -1,
charges <= level), and the A-term expansion groups the nested
product's terms by their shift signature, whose all-zero component is
the leading term.
"""

from .scalars import one, zero, vpow, is_zero
from .laurent import vec_iadd
from . import qva
from . import levelc
from . import fock


def quasi_particle(m):
    """The charge-m quasi-particle as a CurrentExpr."""
    if m < 1:
        raise ValueError("charge must be >= 1")
    expr = qva.generator(1)
    for _ in range(m - 1):
        expr = qva.rth_product(qva.generator(1), expr, -1)
    return expr


def monomial_expr(pairs):
    """The nested product for pairs ((m_1,r_1),...,(m_k,r_k))."""
    expr = qva.CurrentExpr.vacuum()
    for m, r in reversed(list(pairs)):
        expr = qva.rth_product(quasi_particle(m), expr, r)
    return expr


def deg_q(pairs):
    return -sum(j * r for j, (m, r) in enumerate(pairs, start=1))


def wt_pairs(pairs):
    return sum(m - r - 1 for m, r in pairs)


def is_basis_form(pairs, c):
    pairs = list(pairs)
    if any(m > c or m < 1 for m, r in pairs):
        return False
    if any(r >= 0 for m, r in pairs):
        return False
    if pairs and pairs[-1][1] > -1:
        return False
    return all(r <= -2 for m, r in pairs[:-1])


def fuse_check(m, k):
    """Structural equality of the (-1)-product of two quasi-particles
    with the fused quasi-particle."""
    if m < 1 or k < 1:
        raise ValueError("charges must be >= 1")
    return qva.rth_product(quasi_particle(m), quasi_particle(k),
                           -1) == quasi_particle(m + k)


def integrability_test(m, c, weight_bound):
    """None when the charge-m quasi-particle vanishes at level c on all
    tensor states of total weight <= weight_bound; else a witness
    (state, doubled exponent, coefficient)."""
    expr = quasi_particle(m)
    hi2 = 2 * weight_bound
    for states in levelc.enumerate_states(c, 4 * weight_bound):
        blk = qva.evaluate(expr, c, {states: one}, hi2)
        for E in sorted(blk.coeffs):
            vec = blk.coeffs[E]
            for st, coeff in sorted(vec.items()):
                if not is_zero(coeff):
                    return (states, E, coeff)
    return None


_STRAIGHTEN_CACHE = {}


def straighten(pairs, c):
    """Exact rewriting of a monomial as basis-form monomials -> scalar.

    Interior (-1)-indices are eliminated right to left; adjacent
    quasi-particles joined by a (-1)-index are fused; monomials with a
    charge above the level are dropped (they vanish identically).
    """
    pairs = tuple((int(m), int(r)) for m, r in pairs)
    for m, r in pairs:
        if m < 1:
            raise ValueError("charge must be >= 1")
        if r >= 0 and (m, r) != pairs[-1]:
            raise ValueError("interior indices must be negative")
    return _straighten(pairs, c)


def _straighten(pairs, c):
    key = (pairs, c)
    got = _STRAIGHTEN_CACHE.get(key)
    if got is not None:
        return dict(got)
    out = _straighten_step(pairs, c)
    _STRAIGHTEN_CACHE[key] = out
    return dict(out)


def _straighten_step(pairs, c):
    if any(m > c for m, r in pairs):
        return {}
    if pairs and pairs[-1][1] >= 0:
        return {}
    k = len(pairs)
    # fuse an adjacent (-1, -1) pair
    for j in range(k - 1):
        if pairs[j][1] == -1 and pairs[j + 1][1] == -1:
            fused = (pairs[:j]
                     + ((pairs[j][0] + pairs[j + 1][0], -1),)
                     + pairs[j + 2:])
            return _straighten(fused, c)
    # rewrite the rightmost interior -1; its successor has index <= -2
    target = None
    for j in range(k - 1):
        if pairs[j][1] == -1:
            target = j
    if target is None:
        if is_basis_form(pairs, c):
            return {pairs: one}
        raise ValueError("monomial %s cannot be straightened" % (pairs,))
    j = target
    u = pairs[j][0]
    b = pairs[j + 1][0]
    s = pairs[j + 1][1]
    out = {}
    head, tail = pairs[:j], pairs[j + 2:]
    fused = head + ((u + b, s),) + tail
    for mono, coeff in _straighten(fused, c).items():
        _acc(out, mono, vpow(4 * u * (s + 1)) * coeff)
    for l in range(1, -s):
        rew = head + ((u, -1 - l), (b, s + l)) + tail
        cl = -vpow(-4 * u * l)
        for mono, coeff in _straighten(rew, c).items():
            _acc(out, mono, cl * coeff)
    return out


def _acc(out, mono, coeff):
    tot = out.get(mono, zero) + coeff
    if is_zero(tot):
        out.pop(mono, None)
    else:
        out[mono] = tot


def straightened_expr(combo):
    """CurrentExpr of a straightening result (for evaluation checks)."""
    expr = qva.CurrentExpr()
    for mono, coeff in combo.items():
        expr = expr.add(monomial_expr(mono), coeff)
    return expr


def expand_A_terms(pairs):
    """Group the nested product's terms by shift signature.

    The term with shifts (s_1, ..., s_Σm) decomposes into k consecutive
    runs of lengths m_1, ..., m_k; run j starts at the base offset
    Σ_{i<j}(m_i - r_i - 1) plus the signature entry l_j in
    [0, -r_j - 1].  Returns {signature: CurrentExpr}.
    """
    pairs = tuple(pairs)
    expr = monomial_expr(pairs)
    bases = []
    acc = 0
    for m, r in pairs:
        bases.append(acc)
        acc += m - r - 1
    groups = {}
    for (e, d, shifts), coeff in expr.terms.items():
        sig = []
        pos = 0
        for (m, r), base in zip(pairs, bases):
            run = shifts[pos:pos + m]
            if tuple(run) != tuple(range(run[0], run[0] + m)):
                raise AssertionError("block is not a consecutive run")
            l = run[0] - base
            if not 0 <= l <= -r - 1:
                raise AssertionError("signature entry out of range")
            sig.append(l)
            pos += m
        grp = groups.setdefault(tuple(sig), qva.CurrentExpr())
        groups[tuple(sig)] = grp.add(
            qva.CurrentExpr({(e, d, shifts): coeff}))
    return groups


def charge_profile(pairs, c):
    """Number of quasi-particles of charge >= j, for j = 1..c."""
    return tuple(sum(1 for m, r in pairs if m >= j) for j in range(1, c + 1))


def leading_term_nonzero(pairs, c, margin=8):
    """Whether the leading term survives the charge-profile projection.

    Evaluates the all-zero-signature component on the vacuum tensor,
    projects onto the monomial's charge profile, and checks that the
    lowest surviving coefficient is nonzero.
    """
    pairs = tuple(pairs)
    if not pairs:
        return True
    if not is_basis_form(pairs, c):
        raise ValueError("monomial not in basis form")
    lead = expand_A_terms(pairs)[(0,) * len(pairs)]
    vac = {(fock.VACUUM,) * c: one}
    hi2 = 2 * deg_q(pairs) + 2 * margin
    blk = qva.evaluate(lead, c, vac, hi2)
    profile = charge_profile(pairs, c)
    for E in sorted(blk.coeffs):
        proj = levelc.charge_profile_project(blk.coeffs[E], profile)
        if any(not is_zero(cf) for cf in proj.values()):
            return True
    return False


def clear_caches():
    _STRAIGHTEN_CACHE.clear()
