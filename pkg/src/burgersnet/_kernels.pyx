# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled per-edge update kernels (Burgers flux ``F(u) = u**2``).

Both kernels update their arrays in place in one ascending pass and return
the fluxes of ``u`` through the left and right end of the edge (positive
towards increasing x).
"""


def kinetic_step(double[::1] f1, double[::1] f2, double ghost_f2, double ghost_f1,
                 double dt, double dx, double epsilon, double v1, double v2):
    """Upwind transport of (f1, f2) followed by the exact implicit relaxation."""
    cdef Py_ssize_t n = f1.shape[0]
    cdef Py_ssize_t i
    cdef double c1 = -v1 * dt / dx
    cdef double c2 = v2 * dt / dx
    cdef double k = dt / epsilon
    cdef double r = 1.0 / (1.0 + k)
    cdef double inv = 1.0 / (v2 - v1)
    cdef double left = v1 * f1[0] + v2 * ghost_f2
    cdef double right = v1 * ghost_f1 + v2 * f2[n - 1]
    cdef double prev = ghost_f2
    cdef double nxt, cur, a1, a2, u, F
    for i in range(n):
        nxt = f1[i + 1] if i < n - 1 else ghost_f1
        a1 = f1[i] + c1 * (nxt - f1[i])
        cur = f2[i]
        a2 = cur - c2 * (cur - prev)
        prev = cur
        u = a1 + a2
        F = u * u
        f1[i] = (a1 + k * (v2 * u - F) * inv) * r
        f2[i] = (a2 + k * (F - v1 * u) * inv) * r
    return left, right


cdef inline double _godunov(double uL, double uR) nogil:
    cdef double fL = uL * uL
    cdef double fR = uR * uR
    if uL >= uR:
        return fL if fL > fR else fR
    if uL >= 0.0:
        return fL
    if uR <= 0.0:
        return fR
    return 0.0


def godunov_step(double[::1] u, double ghost_left, double ghost_right, double dt_dx):
    """Conservative first-order Godunov update with ghost states at both ends."""
    cdef Py_ssize_t n = u.shape[0]
    cdef Py_ssize_t i
    cdef double left = _godunov(ghost_left, u[0])
    cdef double right = _godunov(u[n - 1], ghost_right)
    cdef double gl = left
    cdef double gr, nxt
    for i in range(n):
        nxt = u[i + 1] if i < n - 1 else ghost_right
        gr = _godunov(u[i], nxt)
        u[i] = u[i] - dt_dx * (gr - gl)
        gl = gr
    return left, right
