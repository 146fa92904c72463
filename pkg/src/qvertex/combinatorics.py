"""Basis enumeration, diagrams, characters, and independence checks.

Basis-form monomials ((m_1, r_1), ..., (m_k, r_k)) at level c have
interior indices r_1, ..., r_{k-1} <= -2, last index r_k <= -1 and
charges 1 <= m_j <= c.  Their shapes biject with partitions into parts
with pairwise difference >= 2 (column heights of the colored Young
diagram), which drives the character computations, and the enumerated
elements are certified linearly independent by an exact rank
computation on their evaluation matrices.
"""

from fractions import Fraction

from .scalars import LevelPoly, one, is_zero
from . import qva
from . import quasiparticle
from . import fock


# ---------------------------------------------------------------------------
# enumeration

def _shapes(degq_max):
    """Column-height partitions with gaps >= 2 and <= degq_max boxes.

    Yields index tuples (r_1, ..., r_k); heights are the partial sums
    lam_j = -(r_j + ... + r_k).
    """
    def rec(total, last):
        # next column height at most last - 2 (gaps >= 2)
        for lam in range(1, min(last - 2, degq_max - total) + 1):
            yield (lam,)
            for rest in rec(total + lam, lam):
                yield (lam,) + rest

    yield ()
    for heights in rec(0, degq_max + 2):
        lams = list(heights) + [0]
        yield tuple(lams[j + 1] - lams[j] for j in range(len(heights)))


def ordering_key(pairs):
    """Sort key for the total order on basis monomials.

    Primary: the weight sum(m_j - r_j) - k; ties broken
    lexicographically on the flattened pair sequence.
    """
    pairs = tuple(pairs)
    return (sum(m - r - 1 for m, r in pairs),
            tuple(x for p in pairs for x in p))


def enumerate_basis(c, degq_max):
    """All basis-form monomials with deg_q <= degq_max, in order."""
    if c < 1 or degq_max < 0:
        raise ValueError("need c >= 1 and degq_max >= 0")
    out = []
    for shape in _shapes(degq_max):
        k = len(shape)
        labels = [()]
        for _ in range(k):
            labels = [lab + (m,) for lab in labels for m in range(1, c + 1)]
        for lab in labels:
            out.append(tuple(zip(lab, shape)))
    out.sort(key=ordering_key)
    return out


# ---------------------------------------------------------------------------
# statistics and diagrams

def diagram(pairs):
    """Colored Young diagram: columns (height, label), tallest first."""
    pairs = list(pairs)
    cols = []
    for j, (m, r) in enumerate(pairs):
        height = -sum(r2 for m2, r2 in pairs[j:])
        cols.append((height, m))
    return cols

def stats(pairs):
    """(deg_q, wt, diagram) of a basis-form monomial."""
    pairs = list(pairs)
    dq = quasiparticle.deg_q(pairs)
    wt = quasiparticle.wt_pairs(pairs)
    return dq, wt, diagram(pairs)


def diagram_str(cols):
    """ASCII rendering, columns left to right, labels in the boxes."""
    if not cols:
        return "(empty)"
    top = cols[0][0]
    width = max(len(str(m)) for h, m in cols)
    lines = []
    for row in range(top, 0, -1):
        cells = []
        for h, m in cols:
            if h >= row:
                cells.append("[%s]" % str(m).center(width))
            else:
                cells.append(" " * (width + 2))
        lines.append("".join(cells).rstrip())
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# q-series over LevelPoly coefficients

class QSeries:
    """Truncated power series in q with LevelPoly coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        coeffs = list(coeffs)
        coeffs += [LevelPoly()] * (order + 1 - len(coeffs))
        self.coeffs = coeffs[:order + 1]
        self.order = order

    @classmethod
    def const(cls, value, order):
        return cls([LevelPoly.const(value)], order)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other):
        n = min(self.order, other.order)
        return QSeries([self.coeffs[i] + other.coeffs[i]
                        for i in range(n + 1)], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return QSeries([self.coeffs[i] - other.coeffs[i]
                        for i in range(n + 1)], n)

    def __mul__(self, other):
        n = min(self.order, other.order)
        out = [LevelPoly() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs[:n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return QSeries(out, n)

    def scale(self, poly):
        return QSeries([poly * a for a in self.coeffs], self.order)

    def first_mismatch(self, other):
        n = min(self.order, other.order)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def at(self, cval):
        return [p.at(cval) for p in self.coeffs]

    def __repr__(self):
        bits = []
        for i, p in enumerate(self.coeffs):
            if p:
                bits.append("(%r)*q^%d" % (p, i))
        return " + ".join(bits) if bits else "0"


def _inv_one_minus(k, poly, order):
    """1 / (1 - poly * q^k) as a QSeries (k >= 1)."""
    out = [LevelPoly() for _ in range(order + 1)]
    term = LevelPoly.const(1)
    e = 0
    while e <= order:
        out[e] = out[e] + term
        term = term * poly
        e += k
    return QSeries(out, order)


def _qpoch_inv(r, order):
    """1 / ((q;q)_r) = prod_{i=1..r} 1/(1 - q^i)."""
    out = QSeries.const(1, order)
    for i in range(1, r + 1):
        out = out * _inv_one_minus(i, LevelPoly.const(1), order)
    return out


def character(c, order):
    """Graded count of the enumerated basis, weight c^k per element.

    With c an integer the coefficients are plain counts; with c None
    the count is kept symbolic in the level variable.
    """
    out = [LevelPoly() for _ in range(order + 1)]
    for shape in _shapes(order):
        dq = -sum(j * r for j, r in enumerate(shape, start=1))
        k = len(shape)
        if c is None:
            out[dq] = out[dq] + LevelPoly.cvar(k) if k else out[dq] + 1
        else:
            out[dq] = out[dq] + c ** k
    return QSeries(out, order)


def character_formula(c, order):
    """Closed form sum_r q^(r^2) c^r / ((q;q)_r), c symbolic if None."""
    out = QSeries.const(0, order)
    r = 0
    while r * r <= order:
        cf = LevelPoly.cvar(r) if c is None else LevelPoly.const(c ** r)
        term = _qpoch_inv(r, order).scale(cf)
        shifted = [LevelPoly()] * (r * r) + term.coeffs
        out = out + QSeries(shifted, order)
        r += 1
    return out


def series_identity_check(order):
    """Exact equality of the two series sides through the given order.

    Left side: sum_r q^(r^2) c^r / (q;q)_r.  Right side:
    (1 + sum_{s>=1} (-1)^s (1 - c q^(2s)) c^(2s) q^(s(5s-1)/2)
         * (cq;q)_{s-1} / (q;q)_s) * prod_{r>=1} 1/(1 - c q^r).
    Returns (equal, first mismatching q-power or None).
    """
    lhs = character_formula(None, order)
    cpoly = LevelPoly.cvar(1)
    bracket = QSeries.const(1, order)
    s = 1
    while s * (5 * s - 1) // 2 <= order:
        head = QSeries.const(1, order) - QSeries(
            [LevelPoly()] * (2 * s) + [cpoly], order)
        term = head.scale(LevelPoly.cvar(2 * s))
        for i in range(s - 1):
            term = term * (QSeries.const(1, order) - QSeries(
                [LevelPoly()] * (1 + i) + [cpoly], order))
        term = term * _qpoch_inv(s, order)
        shift = s * (5 * s - 1) // 2
        term = QSeries([LevelPoly()] * shift + term.coeffs, order)
        if s % 2:
            bracket = bracket - term
        else:
            bracket = bracket + term
        s += 1
    rhs = bracket
    for r in range(1, order + 1):
        rhs = rhs * _inv_one_minus(r, cpoly, order)
    return lhs == rhs, lhs.first_mismatch(rhs)


# ---------------------------------------------------------------------------
# linear independence of the enumerated basis

def default_vectors(c):
    """Test vectors: the vacuum tensor plus two low-weight excitations."""
    vac = (fock.VACUUM,) * c
    bumped = (((1,), 0),) + (fock.VACUUM,) * (c - 1)
    lowered = (((), -2),) + (fock.VACUUM,) * (c - 1)
    return [{vac: one}, {bumped: one}, {lowered: one}]


def _rows(elements, c, vectors, hi2, graded):
    """Laurent-coefficient rows; columns keyed (vector, t, E, state)."""
    rows = []
    cols = {}
    for pairs in elements:
        expr = quasiparticle.monomial_expr(pairs)
        row = {}
        for vi, vec in enumerate(vectors):
            by_t = qva.evaluate_by_t(expr, c, vec, hi2)
            for t, (coeffs, lo) in by_t.items():
                tkey = t if graded else 0
                for e, u in coeffs.items():
                    for st, cf in u.items():
                        if is_zero(cf):
                            continue
                        key = (vi, tkey, e, st)
                        if key not in cols:
                            cols[key] = len(cols)
                        j = cols[key]
                        row[j] = row.get(j, qva.zero) + cf
        rows.append(row)
    return rows, len(cols)


def _rank_at_point(rows, ncols, point):
    """Rank of the specialized rational matrix, by exact elimination."""
    mat = []
    for row in rows:
        out = {}
        for j, cf in row.items():
            val = _rational_value(cf, point)
            if val:
                out[j] = val
        mat.append(out)
    rank = 0
    for _ in range(len(mat)):
        # pick the sparsest row with a nonzero entry
        live = [r for r in mat if r]
        if not live:
            break
        row = min(live, key=len)
        mat.remove(row)
        rank += 1
        piv = next(iter(row))
        pval = row[piv]
        for other in mat:
            f = other.get(piv)
            if f is None:
                continue
            scale = f / pval
            for j, val in row.items():
                acc = other.get(j, 0) - scale * val
                if acc:
                    other[j] = acc
                else:
                    other.pop(j, None)
    return rank


def _rational_value(scalar, point):
    """Exact value of a scalar at v = point (a Fraction)."""
    from . import scalars as _s
    if not scalar.num:
        return Fraction(0)
    num = sum((Fraction(int(cc)) * point ** i
               for i, cc in enumerate(scalar.num)), Fraction(0))
    den = Fraction(1)
    for aid in scalar.den:
        p = _s._atom_poly(aid)
        den *= sum((Fraction(int(cc)) * point ** i
                    for i, cc in enumerate(p)), Fraction(0))
    cont = Fraction(int(scalar.cont.numerator), int(scalar.cont.denominator))
    return cont * point ** scalar.lo * num / den


def independence_rank(c, degq_max, window=None, vectors=None):
    """Rank report for the evaluation matrix of the enumerated basis.

    Evaluates every basis-form monomial with deg_q <= degq_max on the
    test vectors and computes the exact rank of the stacked coefficient
    matrix, both keeping the t-grading and after specializing t = 1.
    Full rank at a rational sample point certifies full generic rank;
    the sample point is varied if the first one looks degenerate.
    Returns {"count", "rank_graded", "rank_t1"}.
    """
    elements = enumerate_basis(c, degq_max)
    if vectors is None:
        vectors = default_vectors(c)
    hi2 = 2 * degq_max + 4 if window is None else window
    report = {"count": len(elements)}
    for graded, name in ((True, "rank_graded"), (False, "rank_t1")):
        rows, ncols = _rows(elements, c, vectors, hi2, graded)
        best = 0
        for point in (Fraction(9, 7), Fraction(13, 5), Fraction(23, 11)):
            best = max(best, _rank_at_point(rows, ncols, point))
            if best == len(elements):
                break
        report[name] = best
    return report
