"""Pure-Python cyclic Jacobi eigensolver for small Hermitian matrices.

Reference kernel; ``_jacobi_ext.pyx`` is a line-by-line typed port of it.
Each rotation is a phase factor that makes the pivot real followed by the
classical real Jacobi rotation that annihilates it.
"""
from math import hypot, sqrt

import numpy as np


def jacobi_eigh(a, tol=1e-14, max_sweeps=64):
    """Eigen-decompose Hermitian ``a``.

    Returns ``(w, v, sweeps, asym)`` with ``w`` in Jacobi (unsorted) order,
    the eigenvectors as the columns of ``v`` and ``asym = ||a - a^H||_F``.
    The rotations act on the Hermitian part of ``a``; callers decide whether
    ``asym`` is acceptable. Iteration stops once the off-diagonal Frobenius
    mass drops to ``tol`` times the Frobenius norm.
    """
    n = len(a)
    rows = np.asarray(a, dtype=complex).tolist()
    asym = sqrt(sum(abs(rows[i][j] - rows[j][i].conjugate()) ** 2 for i in range(n) for j in range(n)))
    A = [[0.5 * (rows[i][j] + rows[j][i].conjugate()) for j in range(n)] for i in range(n)]
    V = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]

    scale = sqrt(sum(abs(x) ** 2 for row in A for x in row))
    limit = tol * scale
    sweeps = 0
    while sweeps < max_sweeps:
        off = sqrt(sum(abs(A[i][j]) ** 2 for i in range(n) for j in range(n) if i != j))
        if off <= limit:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p][q]
                r = abs(apq)
                if r == 0.0:
                    continue
                u = apq / r
                ub = u.conjugate()
                app = A[p][p].real
                aqq = A[q][q].real
                theta = (aqq - app) / (2.0 * r)
                t = 1.0 / (abs(theta) + hypot(theta, 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / hypot(t, 1.0)
                s = t * c

                for k in range(n):
                    akp = A[k][p]
                    akq = A[k][q]
                    A[k][p] = c * akp - s * ub * akq
                    A[k][q] = s * akp + c * ub * akq
                for k in range(n):
                    apk = A[p][k]
                    aqk = A[q][k]
                    A[p][k] = c * apk - s * u * aqk
                    A[q][k] = s * apk + c * u * aqk
                A[p][q] = 0j
                A[q][p] = 0j
                A[p][p] = complex(app - t * r)
                A[q][q] = complex(aqq + t * r)

                for k in range(n):
                    vkp = V[k][p]
                    vkq = V[k][q]
                    V[k][p] = c * vkp - s * ub * vkq
                    V[k][q] = s * vkp + c * ub * vkq

    w = np.array([A[i][i].real for i in range(n)])
    return w, np.array(V, dtype=complex), sweeps, asym
