# cython: language_level=3, boundscheck=False, wraparound=False
# cython: initializedcheck=False, cdivision=True
"""Compiled sweep kernels.

Same trial semantics as secjam._kernels_py, with the per-trial design math
inlined in C.  The arithmetic mirrors secjam.design operation for operation
(same expressions, same evaluation order, same libm calls), so on one
platform both backends produce bit-identical trial results; the channel
batches themselves are built once in numpy and shared.
"""

import numpy as np

from libc.math cimport fabs, log2, pow, sqrt

ctypedef double complex dc

cdef enum:
    MODE_CJ = 1
    MODE_DT = 2
    MODE_INF = 3

# matches design.DEGENERACY_TOL
cdef double DEGENERACY_TOL = 1e-12


cdef inline dc cpack(double re, double im) noexcept nogil:
    return re + 1j * im


cdef inline double abs2(dc z) noexcept nogil:
    return z.real * z.real + z.imag * z.imag


cdef inline dc cdivr(dc z, double r) noexcept nogil:
    return cpack(z.real / r, z.imag / r)


cdef inline double rate_value(double h2, double g2, double s2, double ps,
                              double ird, double ire) noexcept nogil:
    return log2(1.0 + ps * h2 / (ird + s2)) - log2(1.0 + ps * g2 / (ire + s2))


cdef inline double ratio_value(double e0, double e1, double e2,
                               double f0, double f1, double ps) noexcept nogil:
    return (e0 + e1 * ps + e2 * ps * ps) / (f0 + f1 * ps)


cdef int quad_roots(double a, double b, double c, double* out) noexcept nogil:
    # mirrors design._real_quadratic_roots
    cdef double disc, sq, q
    if a == 0.0:
        if b == 0.0:
            return 0
        out[0] = -c / b
        return 1
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        if disc > -8e-16 * (b * b + fabs(4.0 * a * c)):
            disc = 0.0
        else:
            return 0
    sq = sqrt(disc)
    if b >= 0.0:
        q = -0.5 * (b + sq)
    else:
        q = -0.5 * (b - sq)
    out[0] = q / a
    if q == 0.0:
        return 1
    out[1] = c / q
    return 2


def ratemax_trials(dc[::1] h_sd not None, dc[::1] h_se not None,
                   dc[:, ::1] h_sr not None, dc[:, ::1] h_rd not None,
                   dc[:, ::1] h_re not None, double sigma2, double p0):
    """Run the rate-max design on each channel row; see _kernels_py for the contract."""
    cdef Py_ssize_t trials = h_sd.shape[0]
    cdef int n = <int> h_rd.shape[1]
    if h_re.shape[1] != n or h_rd.shape[0] != trials or h_re.shape[0] != trials:
        raise ValueError("channel batch shapes disagree")

    mode_np = np.empty(trials, dtype=np.int8)
    ps_np = np.empty(trials, dtype=np.float64)
    pj_np = np.empty(trials, dtype=np.float64)
    rate_np = np.empty(trials, dtype=np.float64)
    rate_u_np = np.empty(trials, dtype=np.float64)
    cdef signed char[::1] mode = mode_np
    cdef double[::1] ps = ps_np
    cdef double[::1] pj = pj_np
    cdef double[::1] rate = rate_np
    cdef double[::1] rate_u = rate_u_np

    cdef dc[::1] v = np.empty(n, dtype=np.complex128)
    cdef dc[::1] w = np.empty(n, dtype=np.complex128)

    cdef Py_ssize_t t
    cdef int k, nr, i
    cdef dc cin, a_co, acc
    cdef double h2, g2, nrd2, nre2, gram, mu, b_co, nv, a_gain
    cdef double e0, e1, e2, f0, f1, qa, qb, qc
    cdef double dt_rate, best, best_val, val, r, s, ird, ire, cand_rate, pjv
    cdef double roots[2]
    cdef bint degenerate

    for t in range(trials):
        h2 = abs2(h_sd[t])
        g2 = abs2(h_se[t])
        dt_rate = rate_value(h2, g2, sigma2, p0, 0.0, 0.0)

        nrd2 = 0.0
        nre2 = 0.0
        cin = 0.0
        for k in range(n):
            nrd2 += abs2(h_rd[t, k])
        for k in range(n):
            nre2 += abs2(h_re[t, k])
        for k in range(n):
            cin = cin + h_rd[t, k].conjugate() * h_re[t, k]
        gram = nrd2 * nre2 - abs2(cin)
        degenerate = (n < 2) or not (gram > DEGENERACY_TOL * (nrd2 * nre2))

        ps[t] = p0
        pjv = 0.0
        rate_u[t] = dt_rate
        mode[t] = MODE_DT

        if not degenerate:
            mu = 1.0 / sqrt(nrd2 * nrd2 * nre2 - nrd2 * abs2(cin))
            a_co = -(mu * cin)
            b_co = mu * nrd2
            for k in range(n):
                v[k] = a_co * h_rd[t, k] + b_co * h_re[t, k]
            nv = 0.0
            for k in range(n):
                nv += abs2(v[k])
            nv = sqrt(nv)
            for k in range(n):
                v[k] = cdivr(v[k], nv)

            acc = 0.0
            for k in range(n):
                acc = acc + v[k].conjugate() * h_re[t, k]
            a_gain = abs2(acc)

            e0 = sigma2 * (sigma2 + p0 * a_gain)
            e1 = (h2 * p0 - sigma2) * a_gain + h2 * sigma2
            e2 = -(h2 * a_gain)
            f0 = e0
            f1 = sigma2 * (g2 - a_gain)

            qa = e2 * f1
            qb = 2.0 * (e2 * f0)
            qc = e1 * f0 - e0 * f1
            nr = quad_roots(qa, qb, qc, roots)
            best = p0
            best_val = ratio_value(e0, e1, e2, f0, f1, p0)
            for i in range(nr):
                r = roots[i]
                if 0.0 < r <= p0:
                    val = ratio_value(e0, e1, e2, f0, f1, r)
                    if val > best_val:
                        best = r
                        best_val = val

            if best < p0:
                s = sqrt(p0 - best)
                for k in range(n):
                    w[k] = s * v[k]
                acc = 0.0
                for k in range(n):
                    acc = acc + w[k].conjugate() * h_rd[t, k]
                ird = abs2(acc)
                acc = 0.0
                for k in range(n):
                    acc = acc + w[k].conjugate() * h_re[t, k]
                ire = abs2(acc)
                cand_rate = rate_value(h2, g2, sigma2, best, ird, ire)
                if cand_rate > dt_rate:
                    ps[t] = best
                    rate_u[t] = cand_rate
                    mode[t] = MODE_CJ
                    pjv = 0.0
                    for k in range(n):
                        pjv += abs2(w[k])

        pj[t] = pjv
        rate[t] = rate_u[t] if rate_u[t] > 0.0 else 0.0

    return mode_np, ps_np, pj_np, rate_np, rate_u_np


def powermin_trials(dc[::1] h_sd not None, dc[::1] h_se not None,
                    dc[:, ::1] h_sr not None, dc[:, ::1] h_rd not None,
                    dc[:, ::1] h_re not None, double sigma2, double rs0):
    """Run the power-min design on each channel row; see _kernels_py for the contract."""
    cdef Py_ssize_t trials = h_sd.shape[0]
    cdef int n = <int> h_rd.shape[1]
    if h_re.shape[1] != n or h_rd.shape[0] != trials or h_re.shape[0] != trials:
        raise ValueError("channel batch shapes disagree")

    mode_np = np.empty(trials, dtype=np.int8)
    ps_np = np.empty(trials, dtype=np.float64)
    pj_np = np.empty(trials, dtype=np.float64)
    total_np = np.empty(trials, dtype=np.float64)
    rate_np = np.empty(trials, dtype=np.float64)
    cdef signed char[::1] mode = mode_np
    cdef double[::1] ps = ps_np
    cdef double[::1] pj = pj_np
    cdef double[::1] total = total_np
    cdef double[::1] rate = rate_np

    cdef dc[::1] v = np.empty(n, dtype=np.complex128)
    cdef dc[::1] w = np.empty(n, dtype=np.complex128)

    cdef Py_ssize_t t
    cdef int k, nr, i
    cdef dc cin, acc
    cdef double h2, g2, nrd2, nre2, gram, nv2
    cdef double r2, beta, bm1, dt_den, p_dt
    cdef double e0, e1, e2, f0, f1, qa, qb, qc
    cdef double best_ps, best_rho, best_total, r, d, rho, sr
    cdef double ird, ire, rate_raw, pjv, total_cj
    cdef double roots[2]
    cdef bint degenerate, dt_ok, have_cj

    r2 = pow(2.0, rs0)
    beta = pow(2.0, -rs0)
    bm1 = beta - 1.0

    for t in range(trials):
        h2 = abs2(h_sd[t])
        g2 = abs2(h_se[t])
        dt_den = h2 - r2 * g2
        dt_ok = dt_den > 0.0
        p_dt = sigma2 * (r2 - 1.0) / dt_den if dt_ok else 0.0

        nrd2 = 0.0
        nre2 = 0.0
        cin = 0.0
        for k in range(n):
            nrd2 += abs2(h_rd[t, k])
        for k in range(n):
            nre2 += abs2(h_re[t, k])
        for k in range(n):
            cin = cin + h_rd[t, k].conjugate() * h_re[t, k]
        gram = nrd2 * nre2 - abs2(cin)
        degenerate = (n < 2) or not (gram > DEGENERACY_TOL * (nrd2 * nre2))

        have_cj = False
        best_ps = 0.0
        best_rho = 0.0
        best_total = 0.0
        pjv = 0.0
        total_cj = 0.0
        if not degenerate:
            for k in range(n):
                v[k] = cdivr((-cin) * h_rd[t, k] + nrd2 * h_re[t, k], gram)
            nv2 = 0.0
            for k in range(n):
                nv2 += abs2(v[k])

            e0 = -(bm1 * sigma2 * nv2)
            e1 = bm1 + (g2 - beta * h2) * nv2
            e2 = beta * h2 / sigma2
            f0 = bm1
            f1 = e2

            qa = e2 * f1
            qb = 2.0 * (e2 * f0)
            qc = e1 * f0 - e0 * f1
            nr = quad_roots(qa, qb, qc, roots)
            for i in range(nr):
                r = roots[i]
                if r <= 0.0:
                    continue
                d = beta * (1.0 + r * h2 / sigma2) - 1.0
                if d <= 0.0:
                    continue
                rho = r * g2 / d - sigma2
                if rho <= 0.0:
                    continue
                if (not have_cj) or (r + rho * nv2) < best_total:
                    best_ps = r
                    best_rho = rho
                    best_total = r + rho * nv2
                    have_cj = True
            if have_cj:
                sr = sqrt(best_rho)
                pjv = 0.0
                for k in range(n):
                    w[k] = sr * v[k]
                for k in range(n):
                    pjv += abs2(w[k])
                total_cj = best_ps + pjv

        if dt_ok and ((not have_cj) or p_dt <= total_cj):
            ps[t] = p_dt
            pj[t] = 0.0
            total[t] = p_dt
            rate_raw = rate_value(h2, g2, sigma2, p_dt, 0.0, 0.0)
            rate[t] = rate_raw if rate_raw > 0.0 else 0.0
            mode[t] = MODE_DT
        elif have_cj:
            acc = 0.0
            for k in range(n):
                acc = acc + w[k].conjugate() * h_rd[t, k]
            ird = abs2(acc)
            acc = 0.0
            for k in range(n):
                acc = acc + w[k].conjugate() * h_re[t, k]
            ire = abs2(acc)
            rate_raw = rate_value(h2, g2, sigma2, best_ps, ird, ire)
            ps[t] = best_ps
            pj[t] = pjv
            total[t] = total_cj
            rate[t] = rate_raw if rate_raw > 0.0 else 0.0
            mode[t] = MODE_CJ
        else:
            ps[t] = 0.0
            pj[t] = 0.0
            total[t] = 0.0
            rate[t] = 0.0
            mode[t] = MODE_INF

    return mode_np, ps_np, pj_np, total_np, rate_np
