# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled spectral kernels; mirrors ``_kernels_py`` operation for operation."""

from libc.math cimport fabs, sqrt, INFINITY
from libc.stdlib cimport malloc, free


cdef void _matvec(int n, int nnz, int* rows, int* cols, double* vals,
                  double* x, double* y) noexcept nogil:
    cdef int t, i, j
    cdef double w
    for i in range(n):
        y[i] = 0.0
    for t in range(nnz):
        i = rows[t]
        j = cols[t]
        w = vals[t]
        y[i] += w * x[j]
        y[j] += w * x[i]


def matvec(int n, rows, cols, vals, x):
    cdef int nnz = len(rows)
    cdef int* r = <int*> malloc(max(nnz, 1) * sizeof(int))
    cdef int* c = <int*> malloc(max(nnz, 1) * sizeof(int))
    cdef double* v = <double*> malloc(max(nnz, 1) * sizeof(double))
    cdef double* xx = <double*> malloc(max(n, 1) * sizeof(double))
    cdef double* y = <double*> malloc(max(n, 1) * sizeof(double))
    cdef int t
    try:
        for t in range(nnz):
            r[t] = rows[t]
            c[t] = cols[t]
            v[t] = vals[t]
        for t in range(n):
            xx[t] = x[t]
        _matvec(n, nnz, r, c, v, xx, y)
        return [y[t] for t in range(n)]
    finally:
        free(r); free(c); free(v); free(xx); free(y)


def quadratic_form(rows, cols, vals, x):
    cdef double total = 0.0
    cdef Py_ssize_t t
    for t in range(len(rows)):
        total += <double> vals[t] * <double> x[rows[t]] * <double> x[cols[t]]
    return 2.0 * total


def power_iteration(int n, rows, cols, vals, double rq_tol, double res_tol, long max_iter):
    cdef int nnz = len(rows)
    cdef int* r = <int*> malloc(max(nnz, 1) * sizeof(int))
    cdef int* c = <int*> malloc(max(nnz, 1) * sizeof(int))
    cdef double* v = <double*> malloc(max(nnz, 1) * sizeof(double))
    cdef double* x = <double*> malloc(n * sizeof(double))
    cdef double* ax = <double*> malloc(n * sizeof(double))
    cdef int t, i
    cdef long it
    cdef double s, rho = 0.0, prev = 0.0, residual = INFINITY, res, norm
    cdef bint have_prev = False
    cdef bint converged = False
    if r == NULL or c == NULL or v == NULL or x == NULL or ax == NULL:
        free(r); free(c); free(v); free(x); free(ax)
        raise MemoryError()
    try:
        for t in range(nnz):
            r[t] = rows[t]
            c[t] = cols[t]
            v[t] = vals[t]
        s = 1.0 / sqrt(<double> n)
        for i in range(n):
            x[i] = s
        it = max_iter
        with nogil:
            for it in range(1, max_iter + 1):
                _matvec(n, nnz, r, c, v, x, ax)
                rho = 0.0
                for i in range(n):
                    rho += x[i] * ax[i]
                residual = 0.0
                for i in range(n):
                    res = fabs(ax[i] - rho * x[i])
                    if res > residual:
                        residual = res
                if have_prev and fabs(rho - prev) <= rq_tol * fabs(rho) and residual < res_tol:
                    converged = True
                    break
                have_prev = True
                prev = rho
                norm = 0.0
                for i in range(n):
                    ax[i] += x[i]
                    norm += ax[i] * ax[i]
                norm = sqrt(norm)
                for i in range(n):
                    x[i] = ax[i] / norm
        return rho, [x[i] for i in range(n)], residual, (it if converged else max_iter), converged
    finally:
        free(r); free(c); free(v); free(x); free(ax)
