# cython: boundscheck=False, wraparound=False, cdivision=True
"""Typed port of ``bellsym._jacobi``; same rotation sequence, same results."""
from libc.math cimport sqrt, hypot, fabs

import numpy as np

cdef extern from "complex.h":
    double cabs(double complex)
    double complex conj(double complex)


def jacobi_eigh(a, double tol=1e-14, int max_sweeps=64):
    cdef const double complex[:, ::1] src = np.ascontiguousarray(a, dtype=np.complex128)
    cdef Py_ssize_t n = src.shape[0]
    A_arr = np.empty((n, n), dtype=np.complex128)
    V_arr = np.eye(n, dtype=np.complex128)
    cdef double complex[:, ::1] A = A_arr
    cdef double complex[:, ::1] V = V_arr
    cdef Py_ssize_t i, j, k, p, q
    w_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] w = w_arr
    cdef double scale = 0.0, asym = 0.0, off, limit, r, app, aqq, theta, t, c, s
    cdef double complex apq, u, ub, x, y
    cdef int sweeps = 0

    for i in range(n):
        for j in range(n):
            A[i, j] = 0.5 * (src[i, j] + conj(src[j, i]))
            scale += cabs(A[i, j]) ** 2
            asym += cabs(src[i, j] - conj(src[j, i])) ** 2
    limit = tol * sqrt(scale)

    while sweeps < max_sweeps:
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += cabs(A[i, j]) ** 2
        if sqrt(off) <= limit:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                r = cabs(apq)
                if r == 0.0:
                    continue
                u = apq / r
                ub = conj(u)
                app = A[p, p].real
                aqq = A[q, q].real
                theta = (aqq - app) / (2.0 * r)
                t = 1.0 / (fabs(theta) + hypot(theta, 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / hypot(t, 1.0)
                s = t * c

                for k in range(n):
                    x = A[k, p]
                    y = A[k, q]
                    A[k, p] = c * x - s * ub * y
                    A[k, q] = s * x + c * ub * y
                for k in range(n):
                    x = A[p, k]
                    y = A[q, k]
                    A[p, k] = c * x - s * u * y
                    A[q, k] = s * x + c * u * y
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = app - t * r
                A[q, q] = aqq + t * r

                for k in range(n):
                    x = V[k, p]
                    y = V[k, q]
                    V[k, p] = c * x - s * ub * y
                    V[k, q] = s * x + c * ub * y

    for i in range(n):
        w[i] = A[i, i].real
    return w_arr, V_arr, sweeps, sqrt(asym)
