/* High-precision inertia of the Hermitian knot-signature form.
 *
 * Given an integer Seifert matrix V (passed as A = V + V^T and B = V - V^T)
 * and a rational level m/n, this module computes the inertia (n_plus,
 * n_minus, n_zero) of
 *
 *     H = (1 - cos(2*pi*m/n)) * A  -  i * sin(2*pi*m/n) * B
 *
 * using MPFR arithmetic at a caller-chosen precision and a Bunch-Parlett
 * LDL^* factorization with full diagonal/off-diagonal pivoting.  Pivot
 * *selection* uses double-precision magnitude estimates (selection only
 * affects stability, not correctness); all arithmetic that determines the
 * result is done in MPFR.
 *
 * It also returns log2|det H| accumulated over the pivots, which the caller
 * uses to cross-check the exact nondegeneracy gate against a floating
 * evaluation of the Alexander polynomial on the unit circle.
 */

#define PY_SSIZE_T_CLEAN
#include <Python.h>
#include <math.h>
#include <mpfr.h>

/* Bunch-Parlett threshold (1 + sqrt(17)) / 8. */
#define BP_ALPHA 0.6404

typedef struct {
    int n;
    int *perm;      /* logical index -> physical index */
    mpfr_t *re;     /* physical n x n storage, logical lower triangle valid */
    mpfr_t *im;
} herm;

/* Logical entry (i, j) lives at physical (perm[i], perm[j]).  The full
 * Hermitian matrix is stored and kept mirrored (both (p, q) and (q, p)
 * slots updated together), so the macros are valid for any index order. */
#define RE(h, i, j) ((h)->re[(h)->perm[i] * (h)->n + (h)->perm[j]])
#define IM(h, i, j) ((h)->im[(h)->perm[i] * (h)->n + (h)->perm[j]])

/* Re-establish H[j][i] = conj(H[i][j]) after updating slot (i, j). */
#define MIRROR(h, i, j)                                        \
    do {                                                       \
        if ((i) != (j)) {                                      \
            mpfr_set(RE(h, j, i), RE(h, i, j), MPFR_RNDN);     \
            mpfr_neg(IM(h, j, i), IM(h, i, j), MPFR_RNDN);     \
        }                                                      \
    } while (0)

static double
mag2_est(herm *h, int i, int j)
{
    double x = mpfr_get_d(RE(h, i, j), MPFR_RNDN);
    double y = mpfr_get_d(IM(h, i, j), MPFR_RNDN);
    return x * x + y * y;
}

static PyObject *
hermitian_inertia(PyObject *self, PyObject *args)
{
    PyObject *a_list, *b_list;
    int n;
    long m_num, m_den, prec;
    double tol;

    if (!PyArg_ParseTuple(args, "iOOllld", &n, &a_list, &b_list,
                          &m_num, &m_den, &prec, &tol))
        return NULL;
    if (n < 0 || m_den <= 0 || prec < 53) {
        PyErr_SetString(PyExc_ValueError, "bad inertia arguments");
        return NULL;
    }
    if (n == 0)
        return Py_BuildValue("(iiid)", 0, 0, 0, 0.0);
    if (PySequence_Length(a_list) != (Py_ssize_t)n * n ||
        PySequence_Length(b_list) != (Py_ssize_t)n * n) {
        PyErr_SetString(PyExc_ValueError, "matrix data has wrong length");
        return NULL;
    }

    herm h;
    h.n = n;
    h.perm = PyMem_Malloc(n * sizeof(int));
    h.re = PyMem_Malloc((size_t)n * n * sizeof(mpfr_t));
    h.im = PyMem_Malloc((size_t)n * n * sizeof(mpfr_t));
    if (!h.perm || !h.re || !h.im) {
        PyMem_Free(h.perm); PyMem_Free(h.re); PyMem_Free(h.im);
        return PyErr_NoMemory();
    }
    for (int i = 0; i < n; i++)
        h.perm[i] = i;
    for (Py_ssize_t k = 0; k < (Py_ssize_t)n * n; k++) {
        mpfr_init2(h.re[k], prec);
        mpfr_init2(h.im[k], prec);
    }

    mpfr_t ang, c, s, omc, t0, t1, t2, t3, fr, fi, gr, gi, d, det2, logdet;
    mpfr_inits2(prec, ang, c, s, omc, t0, t1, t2, t3,
                fr, fi, gr, gi, d, det2, logdet, (mpfr_ptr)0);

    /* angle = 2*pi*m/n ; omc = 1 - cos, s = sin */
    mpfr_const_pi(ang, MPFR_RNDN);
    mpfr_mul_si(ang, ang, 2 * m_num, MPFR_RNDN);
    mpfr_div_si(ang, ang, m_den, MPFR_RNDN);
    mpfr_sin_cos(s, c, ang, MPFR_RNDN);
    mpfr_si_sub(omc, 1, c, MPFR_RNDN);

    int fail = 0;
    for (Py_ssize_t k = 0; k < (Py_ssize_t)n * n && !fail; k++) {
        PyObject *ai = PySequence_GetItem(a_list, k);
        PyObject *bi = PySequence_GetItem(b_list, k);
        long av = ai ? PyLong_AsLong(ai) : 0;
        long bv = bi ? PyLong_AsLong(bi) : 0;
        Py_XDECREF(ai); Py_XDECREF(bi);
        if (PyErr_Occurred()) { fail = 1; break; }
        mpfr_mul_si(h.re[k], omc, av, MPFR_RNDN);
        mpfr_mul_si(h.im[k], s, -bv, MPFR_RNDN);
    }

    int pos = 0, neg = 0, zero = 0;
    mpfr_set_zero(logdet, 1);
    double tol2 = tol * tol;

    int k = 0;
    while (k < n && !fail) {
        /* Scan the remaining logical block for pivot candidates
           (double-precision estimates are enough for selection). */
        int rd = k, ri = k + 1, rj = k;
        double maxdiag = -1.0, maxoff = -1.0;
        for (int i = k; i < n; i++) {
            double dd = fabs(mpfr_get_d(RE(&h, i, i), MPFR_RNDN));
            if (dd > maxdiag) { maxdiag = dd; rd = i; }
            for (int j = k; j < i; j++) {
                double oo = mag2_est(&h, i, j);
                if (oo > maxoff) { maxoff = oo; ri = i; rj = j; }
            }
        }
        maxoff = (maxoff > 0.0) ? sqrt(maxoff) : 0.0;

        if (maxdiag < tol && maxoff < tol) {
            zero += n - k;
            break;
        }

        if (maxdiag >= BP_ALPHA * maxoff) {
            /* 1x1 pivot at logical rd. */
            int tmp = h.perm[k]; h.perm[k] = h.perm[rd]; h.perm[rd] = tmp;
            mpfr_set(d, RE(&h, k, k), MPFR_RNDN);
            if (mpfr_sgn(d) > 0) pos++; else neg++;
            mpfr_abs(t0, d, MPFR_RNDN);
            mpfr_log2(t0, t0, MPFR_RNDN);
            mpfr_add(logdet, logdet, t0, MPFR_RNDN);
            for (int i = k + 1; i < n; i++) {
                mpfr_div(fr, RE(&h, i, k), d, MPFR_RNDN);
                mpfr_div(fi, IM(&h, i, k), d, MPFR_RNDN);
                for (int j = k + 1; j <= i; j++) {
                    /* H[i][j] -= f * conj(H[j][k]) */
                    mpfr_mul(t0, fr, RE(&h, j, k), MPFR_RNDN);
                    mpfr_mul(t1, fi, IM(&h, j, k), MPFR_RNDN);
                    mpfr_add(t0, t0, t1, MPFR_RNDN);
                    mpfr_sub(RE(&h, i, j), RE(&h, i, j), t0, MPFR_RNDN);
                    mpfr_mul(t0, fi, RE(&h, j, k), MPFR_RNDN);
                    mpfr_mul(t1, fr, IM(&h, j, k), MPFR_RNDN);
                    mpfr_sub(t0, t0, t1, MPFR_RNDN);
                    mpfr_sub(IM(&h, i, j), IM(&h, i, j), t0, MPFR_RNDN);
                    MIRROR(&h, i, j);
                }
            }
            k += 1;
        } else {
            /* 2x2 pivot on logical (ri, rj), ri > rj >= k.  Both diagonal
               entries are small relative to the off-diagonal entry, so the
               block has negative determinant: one eigenvalue of each sign. */
            int tmp = h.perm[k]; h.perm[k] = h.perm[rj]; h.perm[rj] = tmp;
            if (ri == k) ri = rj;  /* pivot row displaced by the swap */
            tmp = h.perm[k + 1]; h.perm[k + 1] = h.perm[ri]; h.perm[ri] = tmp;

            /* block [[a, conj(b)], [b, c]] with b = H[k+1][k] */
            mpfr_mul(det2, RE(&h, k, k), RE(&h, k + 1, k + 1), MPFR_RNDN);
            mpfr_mul(t0, RE(&h, k + 1, k), RE(&h, k + 1, k), MPFR_RNDN);
            mpfr_mul(t1, IM(&h, k + 1, k), IM(&h, k + 1, k), MPFR_RNDN);
            mpfr_sub(det2, det2, t0, MPFR_RNDN);
            mpfr_sub(det2, det2, t1, MPFR_RNDN);
            pos++; neg++;
            mpfr_abs(t0, det2, MPFR_RNDN);
            mpfr_log2(t0, t0, MPFR_RNDN);
            mpfr_add(logdet, logdet, t0, MPFR_RNDN);

            for (int i = k + 2; i < n; i++) {
                /* (x, y) = (H[i][k], H[i][k+1]) * inv(P) with
                   inv(P) = [[c, -conj(b)], [-b, a]] / det2          */
                /* x = (H[i][k]*c - H[i][k+1]*b) / det2 */
                mpfr_mul(t0, RE(&h, i, k), RE(&h, k + 1, k + 1), MPFR_RNDN);
                mpfr_mul(t1, RE(&h, i, k + 1), RE(&h, k + 1, k), MPFR_RNDN);
                mpfr_mul(t2, IM(&h, i, k + 1), IM(&h, k + 1, k), MPFR_RNDN);
                mpfr_sub(t0, t0, t1, MPFR_RNDN);
                mpfr_add(t0, t0, t2, MPFR_RNDN);
                mpfr_div(fr, t0, det2, MPFR_RNDN);
                mpfr_mul(t0, IM(&h, i, k), RE(&h, k + 1, k + 1), MPFR_RNDN);
                mpfr_mul(t1, IM(&h, i, k + 1), RE(&h, k + 1, k), MPFR_RNDN);
                mpfr_mul(t2, RE(&h, i, k + 1), IM(&h, k + 1, k), MPFR_RNDN);
                mpfr_sub(t0, t0, t1, MPFR_RNDN);
                mpfr_sub(t0, t0, t2, MPFR_RNDN);
                mpfr_div(fi, t0, det2, MPFR_RNDN);
                /* y = (-H[i][k]*conj(b) + H[i][k+1]*a) / det2 */
                mpfr_mul(t0, RE(&h, i, k + 1), RE(&h, k, k), MPFR_RNDN);
                mpfr_mul(t1, RE(&h, i, k), RE(&h, k + 1, k), MPFR_RNDN);
                mpfr_mul(t2, IM(&h, i, k), IM(&h, k + 1, k), MPFR_RNDN);
                mpfr_sub(t0, t0, t1, MPFR_RNDN);
                mpfr_sub(t0, t0, t2, MPFR_RNDN);
                mpfr_div(gr, t0, det2, MPFR_RNDN);
                mpfr_mul(t0, IM(&h, i, k + 1), RE(&h, k, k), MPFR_RNDN);
                mpfr_mul(t1, IM(&h, i, k), RE(&h, k + 1, k), MPFR_RNDN);
                mpfr_mul(t2, RE(&h, i, k), IM(&h, k + 1, k), MPFR_RNDN);
                mpfr_sub(t0, t0, t1, MPFR_RNDN);
                mpfr_add(t0, t0, t2, MPFR_RNDN);
                mpfr_div(gi, t0, det2, MPFR_RNDN);

                for (int j = k + 2; j <= i; j++) {
                    /* H[i][j] -= x*conj(H[j][k]) + y*conj(H[j][k+1]) */
                    mpfr_mul(t0, fr, RE(&h, j, k), MPFR_RNDN);
                    mpfr_mul(t1, fi, IM(&h, j, k), MPFR_RNDN);
                    mpfr_add(t0, t0, t1, MPFR_RNDN);
                    mpfr_mul(t1, gr, RE(&h, j, k + 1), MPFR_RNDN);
                    mpfr_mul(t2, gi, IM(&h, j, k + 1), MPFR_RNDN);
                    mpfr_add(t1, t1, t2, MPFR_RNDN);
                    mpfr_add(t0, t0, t1, MPFR_RNDN);
                    mpfr_sub(RE(&h, i, j), RE(&h, i, j), t0, MPFR_RNDN);

                    mpfr_mul(t0, fi, RE(&h, j, k), MPFR_RNDN);
                    mpfr_mul(t1, fr, IM(&h, j, k), MPFR_RNDN);
                    mpfr_sub(t0, t0, t1, MPFR_RNDN);
                    mpfr_mul(t1, gi, RE(&h, j, k + 1), MPFR_RNDN);
                    mpfr_mul(t2, gr, IM(&h, j, k + 1), MPFR_RNDN);
                    mpfr_sub(t1, t1, t2, MPFR_RNDN);
                    mpfr_add(t0, t0, t1, MPFR_RNDN);
                    mpfr_sub(IM(&h, i, j), IM(&h, i, j), t0, MPFR_RNDN);
                    MIRROR(&h, i, j);
                }
            }
            k += 2;
        }
    }

    double log2det = mpfr_get_d(logdet, MPFR_RNDN);

    mpfr_clears(ang, c, s, omc, t0, t1, t2, t3,
                fr, fi, gr, gi, d, det2, logdet, (mpfr_ptr)0);
    for (Py_ssize_t q = 0; q < (Py_ssize_t)n * n; q++) {
        mpfr_clear(h.re[q]);
        mpfr_clear(h.im[q]);
    }
    PyMem_Free(h.perm); PyMem_Free(h.re); PyMem_Free(h.im);
    mpfr_free_cache();

    if (fail)
        return NULL;
    return Py_BuildValue("(iiid)", pos, neg, zero, log2det);
}

static PyMethodDef methods[] = {
    {"hermitian_inertia", hermitian_inertia, METH_VARARGS,
     "hermitian_inertia(n, A_flat, B_flat, m, den, prec_bits, tol)\n"
     "-> (n_plus, n_minus, n_zero, log2_absdet)"},
    {NULL, NULL, 0, NULL}
};

static struct PyModuleDef moduledef = {
    PyModuleDef_HEAD_INIT, "_inertia", NULL, -1, methods
};

PyMODINIT_FUNC
PyInit__inertia(void)
{
    return PyModule_Create(&moduledef);
}
