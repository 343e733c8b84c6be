"""Independent brute-force oracles: pure monomial counting, no shared code with the engine."""

F_DINF = (2, 1)  # x^2 y
F_AINF = (2, 0)  # x^2


def _killed(a, b, f):
    return a >= f[0] and b >= f[1]


def ring_monomials(f, d, bound=60):
    """Surviving monomials x^a y^b of degree a - b = d, found by scanning a."""
    out = []
    for a in range(0, bound):
        b = a - d
        if b < 0 or b > bound:
            continue
        if not _killed(a, b, f):
            out.append((a, b))
    return out


def ideal_piece_dim(f, gens, d, bound=60):
    """dim of (monomial ideal generated by gens in R)_d, by listing ring monomials it contains."""
    count = 0
    for a, b in ring_monomials(f, d, bound):
        if any(a >= g[0] and b >= g[1] for g in gens):
            count += 1
    return count


def c_module_dim(i, d):
    """C_i = <x>(i+1) inside R(i+1)."""
    return ideal_piece_dim(F_DINF, [(1, 0)], i + 1 + d)


def d_module_dim(i, d):
    """D_i = <xy>(i) inside R(i)."""
    return ideal_piece_dim(F_DINF, [(1, 1)], i + d)


# cyclic modules R/(u)(t): (ring, relation monomial u, twist t); complete resolution
# R(t - deg u) --u--> R(t) --v--> R(t - deg u + deg f) with u v = f.
CYCLIC = {
    "C": (F_DINF, (1, 1), (1, 0)),  # relation xy, companion x
    "D": (F_DINF, (1, 0), (1, 1)),  # relation x, companion xy
    "Ky": (F_AINF, (1, 0), (1, 0)),
}


def _quot_basis(f, rel, deg):
    """Monomials of (R / (rel))_{deg}."""
    return [(a, b) for a, b in ring_monomials(f, deg) if not (a >= rel[0] and b >= rel[1])]


def cyclic_stable_hom(src, i, tgt, k):
    """dim of stable Hom between cyclic monomial modules, enumerating monomial maps.

    A map P_0 = R(i) -> N is an element n of N_{-i}; it is a cocycle when u*n = 0
    in N, and a coboundary when n = v*m for some m in N_{-(i + deg v)}.  All
    multiplications send monomials to monomials or zero, so both spaces are
    spanned by monomials.
    """
    f, u, v = CYCLIC[src]
    f2, rel, _ = CYCLIC[tgt]
    assert f == f2
    target_deg = k - i  # N = R/(rel)(k); N_{-i} = (R/(rel))_{k-i}
    basis = _quot_basis(f, rel, target_deg)

    def zero_in_n(m):
        a, b = m
        return _killed(a, b, f) or (a >= rel[0] and b >= rel[1])

    cocycles = {m for m in basis if zero_in_n((m[0] + u[0], m[1] + u[1]))}
    deg_v = v[0] - v[1]
    pre = _quot_basis(f, rel, target_deg - deg_v)
    images = set()
    for m in pre:
        img = (m[0] + v[0], m[1] + v[1])
        if not zero_in_n(img):
            images.add(img)
    return len(cocycles) - len(cocycles & images)
