# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython Gray-code minimum-weight enumeration kernel (uint64 x/z words)."""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    """
    static inline int syncqec_popcountll(unsigned long long v) {
    #if defined(__GNUC__) || defined(__clang__)
        return __builtin_popcountll(v);
    #else
        int c = 0;
        while (v) { v &= v - 1; ++c; }
        return c;
    #endif
    }
    static inline int syncqec_ctzll(unsigned long long v) {
    #if defined(__GNUC__) || defined(__clang__)
        return __builtin_ctzll(v);
    #else
        int c = 0;
        while (!(v & 1)) { v >>= 1; ++c; }
        return c;
    #endif
    }
    """
    int syncqec_popcountll(unsigned long long v) nogil
    int syncqec_ctzll(unsigned long long v) nogil


def min_weight_outside(ax, az, bx, bz, bpiv, int n):
    """Same contract as the pure-Python kernel; inputs are int sequences."""
    cdef int k = len(ax)
    cdef int nb = len(bx)
    if k > 30 or n > 64:
        raise ValueError("kernel limits: rank <= 30 and n <= 64")
    cdef uint64_t axw[32]
    cdef uint64_t azw[32]
    cdef int i
    for i in range(k):
        axw[i] = <uint64_t> ax[i]
        azw[i] = <uint64_t> az[i]
    import array
    bx_arr = array.array("Q", [int(v) for v in bx] or [0])
    bz_arr = array.array("Q", [int(v) for v in bz] or [0])
    bp_arr = array.array("q", [int(v) for v in bpiv] or [0])
    cdef uint64_t[:] bxv = bx_arr
    cdef uint64_t[:] bzv = bz_arr
    cdef int64_t[:] bpv = bp_arr

    cdef uint64_t cx = 0, cz = 0, tx, tz, total = (<uint64_t>1) << k
    cdef uint64_t idx
    cdef int best = -1, w, j, r
    cdef int64_t p
    cdef int bit
    with nogil:
        for idx in range(1, total):
            j = syncqec_ctzll(idx)
            cx ^= axw[j]
            cz ^= azw[j]
            w = syncqec_popcountll(cx | cz)
            if best != -1 and w >= best:
                continue
            tx = cx
            tz = cz
            for r in range(nb):
                p = bpv[r]
                if p < n:
                    bit = (tx >> p) & 1
                else:
                    bit = (tz >> (p - n)) & 1
                if bit:
                    tx ^= bxv[r]
                    tz ^= bzv[r]
            if tx | tz:
                best = w
    return best
