"""Certified generic-rank computation through polynomial syzygies.

For a module action the evaluation matrix M_v has columns rho(b_j) v.
Three exact facts bound its rank over the rational function field:

  * the rank at any rational point is a lower bound;
  * a polynomial map w with w(v)^T M_v identically zero is a left
    kernel vector over Q(v), so k independent ones (witnessed by
    independence at a point) bound the rank by dim V - k;
  * a polynomial map x into the algebra with rho(x(v)) v identically
    zero is a right kernel vector, bounding the rank by dim s - k.

When the bounds meet, the generic rank is known exactly without any
elimination; otherwise fraction-free elimination decides.  Syzygies are
found in low degree by sparse exact linear algebra and re-verified by
symbolic expansion before use.
"""

import random
from fractions import Fraction
from itertools import combinations_with_replacement

from .linalg import rank
from . import symrank

MAX_SYZYGY_DEGREE = 3
MAX_UNKNOWNS = 20000
_SAMPLE_SEED = 20240601


def _monomials(coords, degree):
    """Packed monomials of the exact degree in the given coordinates."""
    out = []
    for combo in combinations_with_replacement(coords, degree):
        m = 0
        for i in combo:
            m += symrank.var_monomial(i)
        out.append(m)
    return out


def coordinate_blocks(action, dim):
    """Partition of the module coordinates into action-stable blocks.

    Coordinates linked by a nonzero matrix entry share a block; for a
    direct sum of irreducibles these are exactly the summands.
    """
    parent = list(range(dim))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in action:
        for a in range(dim):
            for b in range(dim):
                if m[a][b]:
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[ra] = rb
    groups = {}
    for c in range(dim):
        groups.setdefault(find(c), []).append(c)
    return sorted(groups.values())


def _sector_multidegrees(nblocks, degree):
    """All compositions of the degree over the blocks."""
    out = []

    def rec(pos, left, acc):
        if pos == nblocks - 1:
            out.append(tuple(acc + [left]))
            return
        for d in range(left + 1):
            rec(pos + 1, left - d, acc + [d])

    rec(0, degree, [])
    return out


def _sector_monomials(blocks, mdeg):
    """Packed monomials with the given degree in each block."""
    parts = [_monomials(blk, d) for blk, d in zip(blocks, mdeg)]
    out = [0]
    for p in parts:
        out = [m + q for m in out for q in p]
    return out


def sparse_nullspace(rows, ncols):
    """Nullspace basis of a sparse system; rows are {col: coeff} dicts.

    Returns sparse basis vectors as {col: Fraction} dicts, one per free
    column of the row echelon form.
    """
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                lead = row[c]
                pivots[c] = {k: Fraction(v) / lead for k, v in row.items()}
                break
            f = row.pop(c)
            for k, v in p.items():
                if k == c:
                    continue
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    free = [c for c in range(ncols) if c not in pivots]
    order = sorted(pivots, reverse=True)
    basis = []
    for fc in free:
        x = {fc: Fraction(1)}
        for p in order:
            s = 0
            for k, v in pivots[p].items():
                if k != p and k in x:
                    s += v * x[k]
            if s:
                x[p] = -s
        basis.append(x)
    return basis


def _action_rows_nnz(action, dim):
    """Per matrix, per row: the nonzero (column, coefficient) pairs."""
    return [[[(e, m[c][e]) for e in range(dim) if m[c][e]]
             for c in range(dim)] for m in action]


def kernel_syzygies(rep, degree, blocks=None):
    """Polynomial maps w of the exact degree with w(v)^T M_v = 0.

    Each result is a tuple of dim V sparse polynomials.  The system
    splits along the multidegree grading over the action-stable
    coordinate blocks, so each sector is solved independently; sectors
    over the size budget are skipped (missing a syzygy only costs the
    shortcut, never correctness).
    """
    d = rep.dim
    if blocks is None:
        blocks = coordinate_blocks(rep.action, d)
    block_of = {}
    for s, blk in enumerate(blocks):
        for c in blk:
            block_of[c] = s
    rows_nnz = _action_rows_nnz(rep.action, d)
    nj = len(rep.action)
    out = []
    for grade in _sector_multidegrees(len(blocks), degree + 1):
        unknowns = []      # (c, mono)
        for s, blk in enumerate(blocks):
            if grade[s] == 0:
                continue
            mdeg = tuple(g - 1 if i == s else g for i, g in enumerate(grade))
            monos = _sector_monomials(blocks, mdeg)
            unknowns.extend((c, mono) for c in blk for mono in monos)
        if not unknowns or len(unknowns) > MAX_UNKNOWNS:
            continue
        index = {um: i for i, um in enumerate(unknowns)}
        equations = {}
        for (c, mono), u in index.items():
            for j in range(nj):
                for e, coeff in rows_nnz[j][c]:
                    key = (j, mono + symrank.var_monomial(e))
                    row = equations.setdefault(key, {})
                    row[u] = row.get(u, 0) + coeff
        for x in sparse_nullspace(equations.values(), len(unknowns)):
            w = [{} for _ in range(d)]
            for u, coeff in x.items():
                c, mono = unknowns[u]
                if coeff:
                    w[c][mono] = coeff
            out.append(tuple(w))
    _verify_kernel_syzygies(rep, out)
    return out


def _verify_kernel_syzygies(rep, syzygies):
    """Exact expansion of <w(v), rho(b_j) v> for every j and syzygy."""
    d = rep.dim
    rows_nnz = _action_rows_nnz(rep.action, d)
    for w in syzygies:
        for j in range(len(rep.action)):
            total = {}
            for c in range(d):
                if not w[c]:
                    continue
                col_poly = {}
                for e, coeff in rows_nnz[j][c]:
                    col_poly[symrank.var_monomial(e)] = coeff
                if col_poly:
                    total = symrank.poly_add(total,
                                             symrank.poly_mul(w[c], col_poly))
            if total:
                raise AssertionError("kernel syzygy fails exact verification")


def stabilizer_syzygies(rep, degree, blocks=None):
    """Polynomial maps x into the algebra with rho(x(v)) v = 0.

    Each result is a tuple of dim s sparse polynomials (coefficients of
    the algebra basis).  Solved per multidegree sector over the
    coordinate blocks; oversized sectors are skipped.
    """
    d = rep.dim
    ds = len(rep.action)
    if blocks is None:
        blocks = coordinate_blocks(rep.action, d)
    nnz_all = []
    for m in rep.action:
        nnz_all.append([(a, e, m[a][e]) for a in range(d) for e in range(d)
                        if m[a][e]])
    out = []
    for mdeg in _sector_multidegrees(len(blocks), degree):
        monos = _sector_monomials(blocks, mdeg)
        nm = len(monos)
        if not nm or ds * nm > MAX_UNKNOWNS:
            continue
        equations = {}
        for j in range(ds):
            base = j * nm
            for mi, mono in enumerate(monos):
                u = base + mi
                for a, e, coeff in nnz_all[j]:
                    key = (a, mono + symrank.var_monomial(e))
                    row = equations.setdefault(key, {})
                    row[u] = row.get(u, 0) + coeff
        for x in sparse_nullspace(equations.values(), ds * nm):
            xs = [{} for _ in range(ds)]
            for u, coeff in x.items():
                j, mi = divmod(u, nm)
                if coeff:
                    xs[j][monos[mi]] = coeff
            out.append(tuple(xs))
    _verify_stabilizer_syzygies(rep, out)
    return out


def _verify_stabilizer_syzygies(rep, syzygies):
    """Exact expansion of rho(x(v)) v for every syzygy."""
    d = rep.dim
    rows_nnz = _action_rows_nnz(rep.action, d)
    for xs in syzygies:
        for a in range(d):
            total = {}
            for j in range(len(rep.action)):
                if not xs[j]:
                    continue
                col_poly = {}
                for e, coeff in rows_nnz[j][a]:
                    col_poly[symrank.var_monomial(e)] = coeff
                if col_poly:
                    total = symrank.poly_add(total,
                                             symrank.poly_mul(xs[j], col_poly))
            if total:
                raise AssertionError("stabilizer syzygy fails exact verification")


def sample_points(dim, count=40):
    pts = [
        [1] * dim,
        [1 if i % 2 == 0 else 0 for i in range(dim)],
        [0 if i % 2 == 0 else 1 for i in range(dim)],
        [i + 1 for i in range(dim)],
        [1 if i % 3 == 0 else (-1 if i % 3 == 2 else 0) for i in range(dim)],
    ]
    rnd = random.Random(_SAMPLE_SEED)
    while len(pts) < count:
        pts.append([rnd.randint(-7, 7) for _ in range(dim)])
    return pts


def _eval_matrix_rows(rep, v):
    d = rep.dim
    return [[sum(m[a][b] * v[b] for b in range(d) if v[b])
             for m in rep.action] for a in range(d)]


def generic_rank_certified(rep):
    """The exact rank of the evaluation matrix over Q(v).

    Tries the syzygy sandwich at increasing degree and falls back to
    fraction-free elimination when the bounds do not meet.
    """
    d = rep.dim
    if d == 0:
        return 0
    ds = len(rep.action)
    best_rank = 0
    best_points = []
    for v in sample_points(d):
        rows = _eval_matrix_rows(rep, v)
        rk = rank(rows, stop_at=d)
        if rk > best_rank:
            best_rank = rk
            best_points = [v]
        elif rk == best_rank and len(best_points) < 3:
            best_points.append(v)
        if best_rank == min(d, ds):
            return best_rank
    blocks = coordinate_blocks(rep.action, d)
    kernel_all = []
    stab_all = []
    for degree in range(1, MAX_SYZYGY_DEGREE + 1):
        kernel_all.extend(kernel_syzygies(rep, degree, blocks))
        stab_all.extend(stabilizer_syzygies(rep, degree, blocks))
        upper = min(d - _stack_rank_kernel(kernel_all, best_points, d),
                    ds - _stack_rank_stab(stab_all, best_points, ds))
        if upper == best_rank:
            return best_rank
    rows = symrank.linear_forms_matrix(rep.action, d)
    grank = symrank.generic_rank(rows, d)
    if grank < best_rank:
        raise AssertionError("elimination rank below a specialisation rank")
    return grank


def _stack_rank_kernel(syzygies, points, d):
    best = 0
    for v in points:
        stack = []
        for w in syzygies:
            stack.append([symrank.poly_eval(w[c], v) for c in range(d)])
        if stack:
            best = max(best, rank(stack))
    return best


def _stack_rank_stab(syzygies, points, ds):
    best = 0
    for v in points:
        stack = []
        for xs in syzygies:
            stack.append([symrank.poly_eval(xs[j], v) for j in range(ds)])
        if stack:
            best = max(best, rank(stack))
    return best
