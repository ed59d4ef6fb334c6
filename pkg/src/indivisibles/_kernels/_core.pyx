# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: counter-based uniform stream and ordered reduction.

Must stay bit-identical with ``_pure``: same integer mixing, same uint64 ->
float64 mapping, same strictly sequential summation order.
"""

from libc.stdint cimport uint64_t

cdef uint64_t GAMMA = 0x9E3779B97F4A7C15ULL
cdef uint64_t MIX1 = 0xBF58476D1CE4E5B9ULL
cdef uint64_t MIX2 = 0x94D049BB133111EBULL
# 2^-53: maps the top 53 bits of the mixed state onto [0, 1).
cdef double SCALE = 1.0 / 9007199254740992.0


cdef inline uint64_t _mix(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    return z ^ (z >> 31)


def fill_uniform01(double[::1] out, seed, start):
    """Fill ``out`` with stream values start .. start+len(out)-1 for ``seed``."""
    cdef uint64_t s = <uint64_t> seed
    cdef uint64_t base = <uint64_t> start
    cdef Py_ssize_t i, n = out.shape[0]
    with nogil:
        for i in range(n):
            out[i] = <double> (_mix(s + (base + <uint64_t> i + 1) * GAMMA) >> 11) * SCALE


def ordered_sum(double[::1] values, double init=0.0):
    """Strictly sequential left-to-right sum, seeded with ``init``."""
    cdef double acc = init
    cdef Py_ssize_t i, n = values.shape[0]
    with nogil:
        for i in range(n):
            acc = acc + values[i]
    return acc
