# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled gate-application kernel for the dense oracle."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef struct cplx:
    double re
    double im


cdef inline cplx _mul_add(cplx p, cplx a, cplx q, cplx b) noexcept nogil:
    # p*a + q*b spelled out in reals: avoids the libgcc complex-multiply call
    cdef cplx r
    r.re = p.re * a.re - p.im * a.im + q.re * b.re - q.im * b.im
    r.im = p.re * a.im + p.im * a.re + q.re * b.im + q.im * b.re
    return r


def apply_gate(double complex[:, ::1] state, const double complex[:, ::1] m,
               Py_ssize_t tbit, Py_ssize_t cmask):
    """In-place: apply 2x2 `m` on the bit `tbit` of each row index, rows gated by `cmask`."""
    cdef Py_ssize_t dim = state.shape[0]
    cdef Py_ssize_t ncol = state.shape[1]
    cdef Py_ssize_t i, j, k
    cdef cplx a, b, m00, m01, m10, m11
    cdef cplx *rows = <cplx *> &state[0, 0]
    m00.re, m00.im = m[0, 0].real, m[0, 0].imag
    m01.re, m01.im = m[0, 1].real, m[0, 1].imag
    m10.re, m10.im = m[1, 0].real, m[1, 0].imag
    m11.re, m11.im = m[1, 1].real, m[1, 1].imag
    with nogil:
        for i in range(dim):
            if (i & tbit) or (i & cmask) != cmask:
                continue
            j = i | tbit
            for k in range(ncol):
                a = rows[i * ncol + k]
                b = rows[j * ncol + k]
                rows[i * ncol + k] = _mul_add(m00, a, m01, b)
                rows[j * ncol + k] = _mul_add(m10, a, m11, b)


def apply_cx(double complex[:, ::1] state, Py_ssize_t tbit, Py_ssize_t cmask):
    """In-place row swap for controlled-X (no arithmetic)."""
    cdef Py_ssize_t dim = state.shape[0]
    cdef Py_ssize_t ncol = state.shape[1]
    cdef Py_ssize_t i, j, k
    cdef double complex a
    with nogil:
        for i in range(dim):
            if (i & tbit) or (i & cmask) != cmask:
                continue
            j = i | tbit
            for k in range(ncol):
                a = state[i, k]
                state[i, k] = state[j, k]
                state[j, k] = a
