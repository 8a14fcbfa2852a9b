"""Pure-Python spectral kernels; same contract as the compiled ``_kernels``.

The matrix is passed as its strict upper triangle in coordinate form
(``rows[t] < cols[t]``, weight ``vals[t]``); the diagonal is zero.
"""

import math


def matvec(n, rows, cols, vals, x):
    y = [0.0] * n
    for t in range(len(rows)):
        i = rows[t]
        j = cols[t]
        w = vals[t]
        y[i] += w * x[j]
        y[j] += w * x[i]
    return y


def quadratic_form(rows, cols, vals, x):
    total = 0.0
    for t in range(len(rows)):
        total += vals[t] * x[rows[t]] * x[cols[t]]
    return 2.0 * total


def power_iteration(n, rows, cols, vals, rq_tol, res_tol, max_iter):
    """Power iteration on ``A + I`` from the normalised all-ones vector.

    Returns ``(rho, x, residual, iterations, converged)`` where ``rho`` is the
    Rayleigh quotient of ``A`` at the returned unit vector ``x`` and
    ``residual`` is ``max_i |(A x - rho x)_i|``.
    """
    s = 1.0 / math.sqrt(n)
    x = [s] * n
    prev = None
    rho = 0.0
    residual = math.inf
    for it in range(1, max_iter + 1):
        ax = matvec(n, rows, cols, vals, x)
        rho = 0.0
        for i in range(n):
            rho += x[i] * ax[i]
        residual = 0.0
        for i in range(n):
            r = abs(ax[i] - rho * x[i])
            if r > residual:
                residual = r
        if prev is not None and abs(rho - prev) <= rq_tol * abs(rho) and residual < res_tol:
            return rho, x, residual, it, True
        prev = rho
        norm = 0.0
        for i in range(n):
            ax[i] += x[i]
            norm += ax[i] * ax[i]
        norm = math.sqrt(norm)
        x = [v / norm for v in ax]
    return rho, x, residual, max_iter, False
