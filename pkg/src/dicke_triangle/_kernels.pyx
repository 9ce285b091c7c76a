# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel backend.

Mirrors ``dicke_triangle._kernels_py`` (see that module for the shared
conventions).  The 3x3 symmetric eigenproblem is solved in closed form:
the characteristic polynomial of ``x*d + omega_a*h`` is the depressed cubic

    mu^3 - (omega_a^2 + x^2 (1+gamma^2)) mu - x^2 omega_a (1-gamma^2) = 0,

solved trigonometrically and polished with Newton steps; the ground
eigenvector comes from the best-conditioned cross product of rows of
``M - mu I``.  Near-degenerate cases fall back to a cyclic Jacobi sweep,
with the <h>-minimising tie-break convention in the degenerate subspace.
"""

from libc.math cimport sqrt, cos, sin, acos, fabs

cdef double _FOUR_PI_3 = 4.18879020478639098
cdef double _DEG_RTOL = 1e-12


cdef void _jacobi3(double m[3][3], double w[3], double v[3][3]) noexcept nogil:
    """Cyclic Jacobi diagonalisation; eigenpairs sorted ascending."""
    cdef int i, j, k, p, q, sweep
    cdef double off, app, aqq, apq, phi, t, c, s, tau, tmp
    for i in range(3):
        for j in range(3):
            v[i][j] = 1.0 if i == j else 0.0
    for sweep in range(24):
        off = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2]
        if off <= 1e-300:
            break
        for p in range(2):
            for q in range(p + 1, 3):
                apq = m[p][q]
                if fabs(apq) < 1e-300:
                    continue
                app = m[p][p]
                aqq = m[q][q]
                phi = 0.5 * (aqq - app) / apq
                t = 1.0 / (fabs(phi) + sqrt(phi * phi + 1.0))
                if phi < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                m[p][p] = app - t * apq
                m[q][q] = aqq + t * apq
                m[p][q] = 0.0
                m[q][p] = 0.0
                for k in range(3):
                    if k != p and k != q:
                        tmp = m[k][p]
                        m[k][p] = tmp - s * (m[k][q] + tau * tmp)
                        m[k][q] = m[k][q] + s * (tmp - tau * m[k][q])
                        m[p][k] = m[k][p]
                        m[q][k] = m[k][q]
                for k in range(3):
                    tmp = v[k][p]
                    v[k][p] = tmp - s * (v[k][q] + tau * tmp)
                    v[k][q] = v[k][q] + s * (tmp - tau * v[k][q])
    for i in range(3):
        w[i] = m[i][i]
    # insertion sort of the three eigenpairs
    for i in range(1, 3):
        for j in range(i, 0, -1):
            if w[j] < w[j - 1]:
                tmp = w[j]; w[j] = w[j - 1]; w[j - 1] = tmp
                for k in range(3):
                    tmp = v[k][j]; v[k][j] = v[k][j - 1]; v[k][j - 1] = tmp


cdef double _cubic_lowest(double c1, double c0, double* gap) noexcept nogil:
    """Smallest root of mu^3 - c1*mu - c0 (c1 > 0; all roots real).

    Also reports the gap to the middle root.
    """
    cdef double m, arg, phi, third, mu, mu_mid, p, dp
    cdef int it
    m = 2.0 * sqrt(c1 / 3.0)
    arg = 3.0 * c0 / (c1 * m)
    if arg > 1.0:
        arg = 1.0
    elif arg < -1.0:
        arg = -1.0
    third = acos(arg) / 3.0
    mu = m * cos(third - _FOUR_PI_3)
    mu_mid = m * cos(third - 0.5 * _FOUR_PI_3)
    for it in range(2):
        dp = 3.0 * mu * mu - c1
        if fabs(dp) > 1e-8 * c1:
            p = mu * (mu * mu - c1) - c0
            mu -= p / dp
    gap[0] = mu_mid - mu
    return mu


cdef void _ground_deg(double gamma, double w[3], double v[3][3],
                      double out[3]) noexcept nogil:
    """Expectations when the lowest level is (near-)degenerate.

    Minimises <h> over the degenerate subspace (h = diag(1, 0, -1)).
    """
    cdef double scale, p, q, r, lam, u0, u1, nrm, v0, v1, v2
    scale = fabs(w[0])
    if fabs(w[2]) > scale:
        scale = fabs(w[2])
    if w[2] - w[0] <= _DEG_RTOL * scale:
        # fully degenerate: only possible for M = mu*I; pick (0,0,1)
        out[0] = w[0]
        out[1] = 0.0
        out[2] = -1.0
        return
    # two-fold degeneracy: 2x2 projection of h onto span(v0, v1)
    p = v[0][0] * v[0][0] - v[2][0] * v[2][0]
    q = v[0][1] * v[0][1] - v[2][1] * v[2][1]
    r = v[0][0] * v[0][1] - v[2][0] * v[2][1]
    lam = 0.5 * (p + q) - sqrt(0.25 * (p - q) * (p - q) + r * r)
    if fabs(lam - p) > fabs(lam - q):
        u0 = r
        u1 = lam - p
    else:
        u0 = lam - q
        u1 = r
    nrm = sqrt(u0 * u0 + u1 * u1)
    if nrm == 0.0:
        u0 = 1.0
        u1 = 0.0
    else:
        u0 /= nrm
        u1 /= nrm
    v0 = u0 * v[0][0] + u1 * v[0][1]
    v1 = u0 * v[1][0] + u1 * v[1][1]
    v2 = u0 * v[2][0] + u1 * v[2][1]
    out[0] = w[0]
    out[1] = 2.0 * v1 * (v0 + gamma * v2)
    out[2] = v0 * v0 - v2 * v2


cdef void _atomic_ground_c(double x, double gamma, double omega_a,
                           double out[3]) noexcept nogil:
    """out = (energy, exp_d, exp_h)."""
    cdef double s, xs, oa, gx, c1, c0, mu, gap, scale
    cdef double r00, r11, r22, n01, n02, n12, best
    cdef double t01_0, t01_1, t01_2, t02_0, t02_1, t02_2, t12_0, t12_1, t12_2
    cdef double v0, v1, v2, nrm2
    cdef double m[3][3]
    cdef double w[3]
    cdef double vv[3][3]
    cdef double sub[3]

    # normalise the matrix scale so the cubic never over/underflows
    s = omega_a + fabs(x) * (1.0 + gamma)
    xs = x / s
    oa = omega_a / s
    gx = gamma * xs
    c1 = oa * oa + xs * xs * (1.0 + gamma * gamma)
    c0 = xs * xs * oa * (1.0 - gamma * gamma)
    mu = _cubic_lowest(c1, c0, &gap)
    scale = c1 if c1 > 1.0 else 1.0

    if gap > 1e-10 * scale:
        # rows of (M - mu I): (oa-mu, xs, 0), (xs, -mu, gx), (0, gx, -oa-mu)
        r00 = oa - mu
        r11 = -mu
        r22 = -oa - mu
        # cross products of row pairs; the largest is the ground eigenvector
        t01_0 = xs * gx
        t01_1 = -r00 * gx
        t01_2 = r00 * r11 - xs * xs
        t02_0 = xs * r22
        t02_1 = -r00 * r22
        t02_2 = r00 * gx
        t12_0 = r11 * r22 - gx * gx
        t12_1 = -xs * r22
        t12_2 = xs * gx
        n01 = t01_0 * t01_0 + t01_1 * t01_1 + t01_2 * t01_2
        n02 = t02_0 * t02_0 + t02_1 * t02_1 + t02_2 * t02_2
        n12 = t12_0 * t12_0 + t12_1 * t12_1 + t12_2 * t12_2
        best = n01
        if n02 > best:
            best = n02
        if n12 > best:
            best = n12
        if best > 1e-12 * scale * scale:
            if n01 >= n02 and n01 >= n12:
                v0 = t01_0; v1 = t01_1; v2 = t01_2
            elif n02 >= n12:
                v0 = t02_0; v1 = t02_1; v2 = t02_2
            else:
                v0 = t12_0; v1 = t12_1; v2 = t12_2
            nrm2 = v0 * v0 + v1 * v1 + v2 * v2
            out[0] = mu * s
            out[1] = 2.0 * v1 * (v0 + gamma * v2) / nrm2
            out[2] = (v0 * v0 - v2 * v2) / nrm2
            return

    # near-degenerate or ill-conditioned: full Jacobi diagonalisation
    m[0][0] = oa;  m[0][1] = xs;  m[0][2] = 0.0
    m[1][0] = xs;  m[1][1] = 0.0; m[1][2] = gx
    m[2][0] = 0.0; m[2][1] = gx;  m[2][2] = -oa
    _jacobi3(m, w, vv)
    scale = fabs(w[0])
    if fabs(w[2]) > scale:
        scale = fabs(w[2])
    if w[1] - w[0] <= _DEG_RTOL * scale:
        _ground_deg(xs, gamma, oa, w, vv, sub)
        out[0] = sub[0] * s
        out[1] = sub[1]
        out[2] = sub[2]
    else:
        v0 = vv[0][0]
        v1 = vv[1][0]
        v2 = vv[2][0]
        out[0] = w[0] * s
        out[1] = 2.0 * v1 * (v0 + gamma * v2)
        out[2] = v0 * v0 - v2 * v2


cdef double _atomic_energy_c(double x, double gamma, double omega_a) noexcept nogil:
    cdef double s, xs, oa, c1, c0, gap
    s = omega_a + fabs(x) * (1.0 + gamma)
    xs = x / s
    oa = omega_a / s
    c1 = oa * oa + xs * xs * (1.0 + gamma * gamma)
    c0 = xs * xs * oa * (1.0 - gamma * gamma)
    return _cubic_lowest(c1, c0, &gap) * s


def atomic_ground(double x, double gamma, double omega_a):
    """Ground state of ``x*d + omega_a*h``: ``(energy, exp_d, exp_h)``."""
    cdef double out[3]
    _atomic_ground_c(x, gamma, omega_a, out)
    return out[0], out[1], out[2]


def atomic_ground_energy(double x, double gamma, double omega_a):
    """Lowest eigenvalue only."""
    return _atomic_energy_c(x, gamma, omega_a)


def mf_energy(double[::1] a6, double omega, double omega_a, double g,
              double j_hop, double theta, double gamma):
    """Per-atom mean-field energy of the three-cavity state ``a6``."""
    cdef double c = 2.0 * sqrt(2.0) * g
    cdef double ct = cos(theta)
    cdef double st = sin(theta)
    cdef double e = 0.0
    cdef double e_hop = 0.0
    cdef double an, bn
    cdef int n, np1, nm1
    for n in range(3):
        an = a6[n]
        bn = a6[3 + n]
        e += omega * (an * an + bn * bn)
        e += _atomic_energy_c(c * an, gamma, omega_a)
    for n in range(3):
        np1 = (n + 1) % 3
        nm1 = (n + 2) % 3
        e_hop += a6[n] * (ct * (a6[np1] + a6[nm1]) - st * (a6[3 + np1] - a6[3 + nm1]))
        e_hop += a6[3 + n] * (ct * (a6[3 + np1] + a6[3 + nm1]) + st * (a6[np1] - a6[nm1]))
    return e + j_hop * e_hop


def mf_energy_grad(double[::1] a6, double omega, double omega_a, double g,
                   double j_hop, double theta, double gamma,
                   double[::1] grad_out):
    """Energy plus analytic gradient; ``grad_out`` (length 6) is overwritten."""
    cdef double c = 2.0 * sqrt(2.0) * g
    cdef double ct = cos(theta)
    cdef double st = sin(theta)
    cdef double e = 0.0
    cdef double e_hop = 0.0
    cdef double an, bn, ta, tb
    cdef double at[3]
    cdef int n, np1, nm1
    for n in range(3):
        an = a6[n]
        bn = a6[3 + n]
        e += omega * (an * an + bn * bn)
        _atomic_ground_c(c * an, gamma, omega_a, at)
        e += at[0]
        grad_out[n] = 2.0 * omega * an + c * at[1]
        grad_out[3 + n] = 2.0 * omega * bn
    for n in range(3):
        np1 = (n + 1) % 3
        nm1 = (n + 2) % 3
        ta = ct * (a6[np1] + a6[nm1]) - st * (a6[3 + np1] - a6[3 + nm1])
        tb = ct * (a6[3 + np1] + a6[3 + nm1]) + st * (a6[np1] - a6[nm1])
        e_hop += a6[n] * ta + a6[3 + n] * tb
        grad_out[n] += 2.0 * j_hop * ta
        grad_out[3 + n] += 2.0 * j_hop * tb
    return e + j_hop * e_hop
