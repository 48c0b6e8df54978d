#!/usr/bin/env python3
"""Generate the embedded filter tables for src/family_tables.cpp.

Computes, at 60-digit precision:
  * extremal-phase Daubechies low-pass filters, scaled so the taps sum to 1
    (support convention [-p+1, p]),
  * the edge scaling-function machinery for the interval construction:
    refinement matrices H (edge-to-edge) and h (edge-to-interior), the
    expansion of each edge function in truncated interior translates (E),
    for both edges,
  * test fixtures: half-line polynomial moments of the edge functions.

Everything is validated in-script (orthonormality, refinement residual,
polynomial reproduction) before being written out.  Run from the repo root:

    python3 scripts/generate_family_tables.py
"""

import sys
from mpmath import mp, mpf, sqrt, binomial, polyroots, matrix, lu_solve

mp.dps = 60

CHECK_TOL = mpf("1e-40")


def fail(msg):
    print("FAILED:", msg)
    sys.exit(1)


def check(cond, msg):
    if not cond:
        fail(msg)


# ----------------------------------------------------------------------------
# Daubechies filter via spectral factorization.
# ----------------------------------------------------------------------------

def poly_mul(a, b):
    out = [mpf(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def daubechies_filter(p):
    """Taps h_k for k = -p+1..p as a dict, sum 1, extremal phase."""
    if p == 1:
        return {0: mpf(1) / 2, 1: mpf(1) / 2}
    # P(y) = sum_{k<p} C(p-1+k, k) y^k, roots give the spectral factor.
    coeffs_desc = [binomial(p - 1 + k, k) for k in range(p - 1, -1, -1)]
    roots = polyroots(coeffs_desc, maxsteps=300, extraprec=240)
    zs = []
    for y in roots:
        b = 2 - 4 * y
        disc = (b * b - 4) ** mpf("0.5")
        z1 = (b + disc) / 2
        z2 = (b - disc) / 2
        zs.append(z1 if abs(z1) > 1 else z2)  # |z| > 1 branch
    poly = [mpf(1) + 0j]
    for z in zs:
        poly = poly_mul(poly, [-z, mpf(1)])
    half = [binomial(p, k) / mpf(2) ** p for k in range(p + 1)]  # ((1+z)/2)^p
    poly = poly_mul(poly, half)
    s = sum(poly)
    taps = [c / s for c in poly]
    for t in taps:
        check(abs(mp.im(t)) < CHECK_TOL, "complex residue in filter taps")
    taps = [mp.re(t) for t in taps]
    return {k - (p - 1): taps[k] for k in range(2 * p)}


def filter_checks(p, h):
    check(abs(sum(h.values()) - 1) < CHECK_TOL, "filter sum != 1")
    for r in range(p):
        m = sum(((-1) ** k) * (mpf(k) ** r if not (k == 0 and r == 0) else mpf(1)) * v
                for k, v in h.items())
        check(abs(m) < mpf("1e-35"), f"moment condition r={r} violated for p={p}")
    if p == 2:
        s3 = sqrt(3)
        expect = [(1 + s3) / 8, (3 + s3) / 8, (3 - s3) / 8, (1 - s3) / 8]
        got = [h[k] for k in range(-1, 3)]
        for a, b in zip(expect, got):
            check(abs(a - b) < CHECK_TOL, "db2 taps do not match closed form")


# ----------------------------------------------------------------------------
# Half-line machinery.  phi has support [-p+1, p]; the edge functions live on
# [0, oo) and are expansions in truncated translates phi(. - m), m in
# [-p+1, p-1].  A(u, v) = int_{-oo}^0 phi(x-u) phi(x-v) dx closes a small
# linear system under the two-scale relation.
# ----------------------------------------------------------------------------

class HalfLine:
    def __init__(self, p, h):
        self.p = p
        self.h = h
        self.c = {k: 2 * v for k, v in h.items()}  # dilation coefficients
        self.straddle = list(range(-p + 1, p - 1))  # indices with support across 0
        self._solve_tail()

    def _solve_tail(self):
        p, c = self.p, self.c
        S = self.straddle
        n = len(S)
        idx = {m: i for i, m in enumerate(S)}
        A = matrix(n * n, n * n)
        rhs = matrix(n * n, 1)
        for a in S:
            for b in S:
                row = idx[a] * n + idx[b]
                A[row, row] += 1
                for i, ci in c.items():
                    for j, cj in c.items():
                        u, v = 2 * a + i, 2 * b + j
                        w = ci * cj / 2
                        if u >= p - 1 or v >= p - 1:
                            continue  # tail integral is zero
                        if u <= -p or v <= -p:
                            if u == v:
                                rhs[row] += w
                            continue
                        A[row, idx[u] * n + idx[v]] -= w
        X = lu_solve(A, rhs)
        self.tail = {}
        for a in S:
            for b in S:
                self.tail[(a, b)] = X[idx[a] * n + idx[b]]

    def gram(self, u, v):
        """int_0^oo phi(x-u) phi(x-v) dx."""
        p = self.p
        if u <= -self.p or v <= -self.p:
            return mpf(0)
        delta = mpf(1) if u == v else mpf(0)
        if u >= p - 1 or v >= p - 1:
            return delta
        return delta - self.tail[(u, v)]

    def build_edge(self):
        """Orthonormal edge functions: E[j][m], support [0, p+j]."""
        p = self.p
        mrange = list(range(-p + 1, p))  # truncated translate indices
        raw = []
        for k in range(p):
            vec = {m: mpf(0) for m in mrange}
            for nn in range(k, 2 * p - 1):
                vec[p - 1 - nn] = binomial(nn, k)
            raw.append(vec)
        # staircase order: smallest support first (raw index p-1 downwards)
        ordered = [raw[p - 1 - j] for j in range(p)]

        def inner(a, b):
            return sum(a[m] * b[mm] * self.gram(m, mm) for m in mrange for mm in mrange)

        E = []
        for j in range(p):
            v = dict(ordered[j])
            for e in E:
                coef = inner(v, e)
                for m in mrange:
                    v[m] -= coef * e[m]
            nrm = sqrt(inner(v, v))
            for m in mrange:
                v[m] /= nrm
            E.append(v)
        # support staircase: function j uses translates m <= j only
        for j in range(p):
            for m in mrange:
                if m > j:
                    check(abs(E[j][m]) < CHECK_TOL, "edge staircase violated")
                    E[j][m] = mpf(0)
        G = [[inner(E[a], E[b]) for b in range(p)] for a in range(p)]
        for a in range(p):
            for b in range(p):
                check(abs(G[a][b] - (1 if a == b else 0)) < CHECK_TOL,
                      "edge functions not orthonormal")
        return E

    def refinement(self, E):
        """H (p x p) and hb (p x (2p-1), columns m=p..3p-2) with
        phi^E_k(x) = sqrt2 [ sum_l H[k][l] phi^E_l(2x) + sum_m hb[k][m] phi(2x-m) ]."""
        p, c = self.p, self.c
        beta = []
        for k in range(p):
            bk = {}
            for m, em in E[k].items():
                if em == 0:
                    continue
                for i, ci in c.items():
                    bk[2 * m + i] = bk.get(2 * m + i, mpf(0)) + em * ci
            beta.append(bk)
        s2 = sqrt(2)
        hb = [[mpf(0)] * (2 * p - 1) for _ in range(p)]
        for k in range(p):
            for t, bt in beta[k].items():
                if t > p + 2 * k:
                    check(abs(bt) < CHECK_TOL, "fine support beyond p+2k")
            for m in range(p, 3 * p - 1):
                hb[k][m - p] = beta[k].get(m, mpf(0)) / s2
                if m > p + 2 * k:
                    check(abs(hb[k][m - p]) < CHECK_TOL, "h staircase violated")
                    hb[k][m - p] = mpf(0)
        H = [[mpf(0)] * p for _ in range(p)]
        for k in range(p):
            for l in range(p):
                acc = mpf(0)
                for t, bt in beta[k].items():
                    for mm, emm in E[l].items():
                        if emm != 0:
                            acc += bt * emm * self.gram(t, mm)
                H[k][l] = acc / s2
        # residual: beta must be reproduced exactly by the H/hb expansion
        for k in range(p):
            rho = {}
            for l in range(p):
                for mm, emm in E[l].items():
                    rho[mm] = rho.get(mm, mpf(0)) + s2 * H[k][l] * emm
            for m in range(p, 3 * p - 1):
                rho[m] = rho.get(m, mpf(0)) + s2 * hb[k][m - p]
            keys = set(rho) | set(beta[k])
            delta = {t: beta[k].get(t, mpf(0)) - rho.get(t, mpf(0)) for t in keys}
            res = sum(delta[t] * delta[tt] * self.gram(t, tt) for t in keys for tt in keys)
            check(abs(res) < CHECK_TOL, f"refinement residual {mp.nstr(res, 5)}")
        return H, hb

    def moments(self):
        """mu_r = int x^r phi, r = 0..p-1."""
        p, h = self.p, self.h
        mu = [mpf(1)]
        for r in range(1, p):
            acc = mpf(0)
            for j in range(r):
                ms = sum(v * mpf(k) ** (r - j) for k, v in h.items())
                acc += binomial(r, j) * ms * mu[j]
            mu.append(acc / (2 ** r - 1))
        return mu

    def partial_moments(self, mu, r):
        """P_r(m) = int_0^oo x^r phi(x-m) dx on the straddle set and beyond."""
        p, h = self.p, self.h

        def full(m):
            return sum(binomial(r, j) * mu[j] * mpf(m) ** (r - j) for j in range(r + 1))

        S = list(range(-p + 1, p - 1))
        idx = {m: i for i, m in enumerate(S)}
        n = len(S)
        A = matrix(n, n)
        rhs = matrix(n, 1)
        for m in S:
            A[idx[m], idx[m]] += 1
            for i, hi in h.items():
                t = 2 * m + i
                w = hi / mpf(2) ** r
                if t >= p - 1:
                    rhs[idx[m]] += w * full(t)
                elif t <= -p:
                    continue
                else:
                    A[idx[m], idx[t]] -= w
        X = lu_solve(A, rhs)

        def P(m):
            if m >= p - 1:
                return full(m)
            if m <= -p:
                return mpf(0)
            return X[idx[m]]

        return P


def integer_values(p, h):
    """phi at the integers -p+2..p-1: eigenvector of T(n,m) = 2 h(2n-m) for
    eigenvalue 1, normalized by partition of unity."""
    from mpmath import qr_solve
    n = 2 * p - 2
    A = matrix(n + 1, n)
    for r in range(n):
        point = r - p + 2
        for c in range(n):
            m = c - p + 2
            A[r, c] = 2 * h.get(2 * point - m, mpf(0)) - (1 if r == c else 0)
    for c in range(n):
        A[n, c] = 1
    rhs = matrix(n + 1, 1)
    rhs[n] = 1
    v, _ = qr_solve(A, rhs)
    vals = {r - p + 2: v[r] for r in range(n)}

    def phi(x):
        return vals.get(x, mpf(0))

    # residual check of the two-scale relation at the integers
    for point in range(-p + 2, p):
        rhs_val = sum(2 * hv * phi(2 * point - k) for k, hv in h.items())
        check(abs(phi(point) - rhs_val) < mpf("1e-40"), "integer eigenvector residual")
    return phi


def edge_seeds(p, h, E, H, hb):
    """Edge-function values at the integers of [0, p+k], from the
    truncated-translate expansion; verified against the dilation equation."""
    phi = integer_values(p, h)
    seeds = []
    for k in range(p):
        row = [mpf(0)] * (2 * p)
        for n in range(0, p + k + 1):
            row[n] = sum(em * phi(n - m) for m, em in E[k].items())
        seeds.append(row)
    s2 = sqrt(2)
    for k in range(p):
        for n in range(0, p + k + 1):
            lhs = seeds[k][n] / s2
            rhs = sum(H[k][l] * (seeds[l][2 * n] if 2 * n < 2 * p else mpf(0))
                      for l in range(p))
            rhs += sum(hb[k][m - p] * phi(2 * n - m) for m in range(p, p + 2 * k + 1))
            check(abs(lhs - rhs) < mpf("1e-40"), f"seed dilation residual p={p} k={k} n={n}")
    return seeds


def edge_package(p, h):
    hl = HalfLine(p, h)
    E = hl.build_edge()
    H, hb = hl.refinement(E)
    seeds = edge_seeds(p, h, E, H, hb)
    mu = hl.moments()
    d = [[mpf(0)] * p for _ in range(p)]  # d[r][j] = int_0^oo x^r phi^E_j
    for r in range(p):
        P = hl.partial_moments(mu, r)
        for j in range(p):
            d[r][j] = sum(em * P(m) for m, em in E[j].items())
        # polynomial reproduction: projecting x^r back onto the edge space
        # must recover the truncated-translate coefficients M_r(m).
        for m in range(-p + 1, p):
            target = sum(binomial(r, j) * mu[j] * mpf(m) ** (r - j) for j in range(r + 1))
            got = sum(d[r][j] * E[j][m] for j in range(p))
            check(abs(got - target) < mpf("1e-35"),
                  f"polynomial reproduction failed p={p} r={r} m={m}")
    # the zero-frequency fixed point (I - H/sqrt2) v = (h/sqrt2) 1 must be solvable
    s2 = sqrt(2)
    M = matrix(p, p)
    for a in range(p):
        for b in range(p):
            M[a, b] = (1 if a == b else 0) - H[a][b] / s2
    det = mp.det(M)
    check(abs(det) > mpf("1e-10"), "singular zero-frequency system")
    return E, H, hb, d, seeds


# ----------------------------------------------------------------------------
# Emission.
# ----------------------------------------------------------------------------

def fmt(x):
    s = mp.nstr(x, 17, strip_zeros=False)
    if "e" not in s and "." not in s:
        s += ".0"
    return s


def flat(rows):
    return [fmt(v) for row in rows for v in row]


def emit_array(lines, name, values, per_line=4):
    lines.append(f"constexpr double {name}[] = {{")
    for i in range(0, len(values), per_line):
        lines.append("    " + ", ".join(values[i:i + per_line]) + ",")
    lines.append("};")


def main():
    families = {}
    for p in range(1, 9):
        h = daubechies_filter(p)
        filter_checks(p, h)
        entry = {"filter": [h[k] for k in range(-p + 1, p + 1)]}
        if p >= 2:
            # left edge: plain filter; right edge: reversed filter h'_t = h_{1-t}
            hrev = {1 - k: v for k, v in h.items()}
            El, Hl, hbl, dl, sl = edge_package(p, h)
            Er, Hr, hbr, dr, sr = edge_package(p, hrev)
            entry["left"] = (El, Hl, hbl, dl, sl)
            entry["right"] = (Er, Hr, hbr, dr, sr)
        families[p] = entry
        print(f"p={p} ok")

    src = [
        "// Generated by scripts/generate_family_tables.py -- do not edit by hand.",
        "// Regenerate with: python3 scripts/generate_family_tables.py",
        "",
        '#include "gs/detail/family_tables.hpp"',
        "",
        "namespace gs::detail {",
        "namespace {",
        "",
    ]
    for p, entry in families.items():
        emit_array(src, f"kFilterP{p}", [fmt(v) for v in entry["filter"]])
        if p >= 2:
            for side in ("left", "right"):
                _, H, hb, _, seeds = entry[side]
                emit_array(src, f"k{side.capitalize()}HP{p}", flat(H))
                emit_array(src, f"k{side.capitalize()}hP{p}", flat(hb))
                emit_array(src, f"k{side.capitalize()}SeedP{p}", flat(seeds))
        src.append("")
    src.append("constexpr FamilyTable kTables[] = {")
    for p in entry_keys(families):
        if p == 1:
            src.append("    {1, kFilterP1, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr},")
        else:
            src.append(
                f"    {{{p}, kFilterP{p}, kLeftHP{p}, kLefthP{p}, kLeftSeedP{p}, "
                f"kRightHP{p}, kRighthP{p}, kRightSeedP{p}}},")
    src += [
        "};",
        "",
        "}  // namespace",
        "",
        "const FamilyTable* family_table(int p) {",
        "    if (p < 1 || p > 8) return nullptr;",
        "    return &kTables[p - 1];",
        "}",
        "",
        "}  // namespace gs::detail",
        "",
    ]
    with open("src/family_tables.cpp", "w") as f:
        f.write("\n".join(src))

    fix = [
        "// Generated by scripts/generate_family_tables.py -- do not edit by hand.",
        "#pragma once",
        "",
        "namespace gs::testdata {",
        "",
        "// moments[r*p + j] = integral of x^r against edge function j over the",
        "// half-line that carries it (left: [0, oo), right: (-oo, 0]).",
        "struct EdgeMoments { int p; const double* left; const double* right; };",
        "",
        "namespace {",
        "",
    ]
    for p, entry in families.items():
        if p == 1:
            continue
        dl = entry["left"][3]
        dr = entry["right"][3]
        # right functions are the mirrored reversed-family edge functions:
        # int_{-oo}^0 x^r phiR_j = (-1)^r * d'_r_j
        drm = [[((-1) ** r) * dr[r][j] for j in range(p)] for r in range(p)]
        emit_array(fix, f"kLeftMomentsP{p}", flat(dl))
        emit_array(fix, f"kRightMomentsP{p}", flat(drm))
    fix += [
        "",
        "constexpr EdgeMoments kMoments[] = {",
    ]
    for p in entry_keys(families):
        if p == 1:
            continue
        fix.append(f"    {{{p}, kLeftMomentsP{p}, kRightMomentsP{p}}},")
    fix += [
        "};",
        "",
        "}  // namespace",
        "",
        "inline const EdgeMoments* edge_moments(int p) {",
        "    if (p < 2 || p > 8) return nullptr;",
        "    return &kMoments[p - 2];",
        "}",
        "",
        "}  // namespace gs::testdata",
        "",
    ]
    with open("tests/family_fixtures.hpp", "w") as f:
        f.write("\n".join(fix))
    print("wrote src/family_tables.cpp and tests/family_fixtures.hpp")


def entry_keys(families):
    return sorted(families.keys())


if __name__ == "__main__":
    main()
