"""Pure-Python fallback for the MPFR Hermitian-inertia kernel.

Implements the same contract as the C extension ``_inertia``: Bunch-Parlett
LDL^* factorization of H = (1 - cos(theta)) A - i sin(theta) B at a given
binary precision, returning the inertia and log2 |det H|.  Used only when
the C extension failed to build; it is markedly slower.
"""

import gmpy2
from gmpy2 import mpfr

# Bunch-Parlett threshold (1 + sqrt(17)) / 8.
_ALPHA = 0.6404


def hermitian_inertia(n, a_flat, b_flat, m, den, prec_bits, tol):
    """Inertia of (1-cos t)A - i (sin t)B with t = 2*pi*m/den.

    a_flat and b_flat are row-major length-n*n sequences with A symmetric
    and B antisymmetric.  Returns (n_plus, n_minus, n_zero, log2_absdet).
    """
    with gmpy2.context(precision=prec_bits):
        theta = 2 * gmpy2.const_pi() * m / den
        s, c = gmpy2.sin(theta), gmpy2.cos(theta)
        oc = 1 - c
        # Lower triangle of H (re, im) as nested lists, re[i][j] for j <= i.
        re = [[oc * a_flat[i * n + j] for j in range(i + 1)] for i in range(n)]
        im = [[-s * b_flat[i * n + j] for j in range(i + 1)] for i in range(n)]
        perm = list(range(n))

        def get(i, j):
            """H[perm[i]][perm[j]] for i >= j as (re, im)."""
            pi, pj = perm[i], perm[j]
            if pi >= pj:
                return re[pi][pj], im[pi][pj]
            return re[pj][pi], -im[pj][pi]

        def setv(i, j, vr, vi):
            pi, pj = perm[i], perm[j]
            if pi >= pj:
                re[pi][pj], im[pi][pj] = vr, vi
            else:
                re[pj][pi], im[pj][pi] = vr, -vi

        n_plus = n_minus = n_zero = 0
        log2_det = mpfr(0)
        k = 0
        while k < n:
            # Pivot search over the trailing block.
            maxdiag, dd = mpfr(-1), k
            for i in range(k, n):
                v = abs(get(i, i)[0])
                if v > maxdiag:
                    maxdiag, dd = v, i
            maxoff, oi, oj = mpfr(-1), k, k
            for i in range(k, n):
                for j in range(k, i):
                    vr, vi = get(i, j)
                    v = gmpy2.sqrt(vr * vr + vi * vi)
                    if v > maxoff:
                        maxoff, oi, oj = v, i, j
            if max(maxdiag, maxoff) < tol:
                n_zero += n - k
                break
            if maxdiag >= _ALPHA * maxoff:
                # 1x1 pivot.
                perm[k], perm[dd] = perm[dd], perm[k]
                p = get(k, k)[0]
                if p > 0:
                    n_plus += 1
                else:
                    n_minus += 1
                log2_det += gmpy2.log2(abs(p))
                for i in range(k + 1, n):
                    lr, li = get(i, k)
                    fr, fi = lr / p, li / p
                    for j in range(k + 1, i + 1):
                        cr, ci = get(j, k)
                        hr, hi = get(i, j)
                        # H[i][j] -= f * conj(H[j][k])
                        setv(i, j, hr - (fr * cr + fi * ci),
                             hi - (fi * cr - fr * ci))
                k += 1
            else:
                # 2x2 pivot on rows (oj, oi); block [[a, conj(b)], [b, c]].
                perm[k], perm[oj] = perm[oj], perm[k]
                if oi == k:
                    oi = oj
                perm[k + 1], perm[oi] = perm[oi], perm[k + 1]
                a = get(k, k)[0]
                br, bi = get(k + 1, k)
                cc = get(k + 1, k + 1)[0]
                det = a * cc - (br * br + bi * bi)
                # det < 0 in exact arithmetic: one eigenvalue of each sign.
                n_plus += 1
                n_minus += 1
                log2_det += gmpy2.log2(abs(det))
                for i in range(k + 2, n):
                    xr, xi = get(i, k)
                    yr, yi = get(i, k + 1)
                    # (u, v) = (x, y) * inv([[a, conj(b)], [b, c]])
                    #        = (x*c - y*b, y*a - x*conj(b)) / det
                    ur = (xr * cc - (yr * br - yi * bi)) / det
                    ui = (xi * cc - (yr * bi + yi * br)) / det
                    vr = (yr * a - (xr * br + xi * bi)) / det
                    vi = (yi * a - (xi * br - xr * bi)) / det
                    for j in range(k + 2, i + 1):
                        pr, pi_ = get(j, k)
                        qr, qi = get(j, k + 1)
                        hr, hi = get(i, j)
                        # H[i][j] -= u * conj(p) + v * conj(q)
                        dr = ur * pr + ui * pi_ + vr * qr + vi * qi
                        di = ui * pr - ur * pi_ + vi * qr - vr * qi
                        setv(i, j, hr - dr, hi - di)
                k += 2
        return n_plus, n_minus, n_zero, float(log2_det)
