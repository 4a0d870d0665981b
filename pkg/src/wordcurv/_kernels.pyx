# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the hot kernels.

Same API and semantics as ``_kernels_py``: exact integer results, words as
bytes of character ranks.  Index/curvature scans, Booth least rotation,
cyclic palindrome test and canonical-word enumeration all run in C; the
rare words too long for 64-bit intermediate arithmetic fall back to the
pure implementation.
"""

from libc.stdlib cimport free, malloc

from . import _kernels_py as _fallback

BACKEND = "cython"

# curvature denominators are products of three terms 2*ki*kj <= L*L/2;
# keep the 64-bit intermediates safe by routing longer words to Python ints
cdef Py_ssize_t MAX_FAST_LEN = 1024


cdef long long _gcd(long long a, long long b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


def ind_terms(const unsigned char[::1] word):
    """Reduced (numerator, denominator) of the index of a word over ranks {0, 1}."""
    cdef Py_ssize_t n = word.shape[0]
    if n > MAX_FAST_LEN:
        return _fallback.ind_terms(bytes(word))
    cdef long long k0 = 0, k1 = 0, left = 0
    cdef Py_ssize_t i
    cdef unsigned char r
    for i in range(n):
        r = word[i]
        if r == 0:
            k0 += 1
            left += k1
        elif r == 1:
            k1 += 1
        else:
            raise ValueError(f"rank {r} out of range for a two-character word")
    if k0 == 0 or k1 == 0:
        raise ValueError("both characters must occur")
    cdef long long num = 2 * left - k0 * k1
    cdef long long den = 2 * k0 * k1
    cdef long long g = _gcd(num, den)
    if g > 1:
        num //= g
        den //= g
    return num, den


def curv_terms(const unsigned char[::1] word):
    """Reduced (numerator, denominator) of the curvature of a word over ranks {0, 1, 2}."""
    cdef Py_ssize_t n = word.shape[0]
    if n > MAX_FAST_LEN:
        return _fallback.curv_terms(bytes(word))
    cdef long long k0 = 0, k1 = 0, k2 = 0
    cdef long long s01 = 0, s02 = 0, s12 = 0
    cdef Py_ssize_t i
    cdef unsigned char r
    for i in range(n):
        r = word[i]
        if r == 0:
            k0 += 1
            s01 += k1
            s02 += k2
        elif r == 1:
            k1 += 1
            s12 += k2
        elif r == 2:
            k2 += 1
        else:
            raise ValueError(f"rank {r} out of range for a three-character word")
    if k0 == 0 or k1 == 0 or k2 == 0:
        raise ValueError("all three characters must occur")
    cdef long long n12 = 2 * s12 - k1 * k2, d12 = 2 * k1 * k2
    cdef long long n02 = 2 * s02 - k0 * k2, d02 = 2 * k0 * k2
    cdef long long n01 = 2 * s01 - k0 * k1, d01 = 2 * k0 * k1
    cdef long long den = d12 // _gcd(d12, d02) * d02
    den = den // _gcd(den, d01) * d01
    cdef long long num = n12 * (den // d12) - n02 * (den // d02) + n01 * (den // d01)
    cdef long long g = _gcd(num, den)
    if g > 1:
        num //= g
        den //= g
    return num, den


def least_rotation(const unsigned char[::1] word):
    """Booth's algorithm: start index of the lexicographically least rotation."""
    cdef Py_ssize_t n = word.shape[0]
    if n == 0:
        raise ValueError("empty word")
    cdef Py_ssize_t* f = <Py_ssize_t*> malloc(2 * n * sizeof(Py_ssize_t))
    if f == NULL:
        raise MemoryError()
    cdef Py_ssize_t j, k = 0, i
    cdef unsigned char sj
    try:
        for j in range(2 * n):
            f[j] = -1
        for j in range(1, 2 * n):
            sj = word[j % n]
            i = f[j - k - 1]
            while i != -1 and sj != word[(k + i + 1) % n]:
                if sj < word[(k + i + 1) % n]:
                    k = j - i - 1
                i = f[i]
            if sj != word[(k + i + 1) % n]:
                if sj < word[k % n]:
                    k = j
                f[j - k] = -1
            else:
                f[j - k] = i + 1
    finally:
        free(f)
    return k % n


def cyclic_palindrome(const unsigned char[::1] word):
    """True iff some rotation of ``word`` equals its reversal."""
    cdef Py_ssize_t n = word.shape[0]
    if n == 0:
        raise ValueError("empty word")
    cdef Py_ssize_t start, i
    cdef bint ok
    for start in range(n):
        ok = True
        for i in range(n):
            if word[(start + i) % n] != word[n - 1 - i]:
                ok = False
                break
        if ok:
            return True
    return False


def canonical_words(int length, int alphabet_size):
    """All words of the given length, in lexicographic order, that contain
    every rank and equal their own least rotation (one per rotation class).
    """
    if length < 1 or alphabet_size < 1:
        raise ValueError("length and alphabet_size must be positive")
    if alphabet_size > 255:
        raise ValueError("alphabet too large")
    out = []
    cdef unsigned char* a = <unsigned char*> malloc(length + 1)
    cdef Py_ssize_t* stack_t = <Py_ssize_t*> malloc((length + 2) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* stack_p = <Py_ssize_t*> malloc((length + 2) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* stack_j = <Py_ssize_t*> malloc((length + 2) * sizeof(Py_ssize_t))
    if a == NULL or stack_t == NULL or stack_p == NULL or stack_j == NULL:
        free(a); free(stack_t); free(stack_p); free(stack_j)
        raise MemoryError()
    cdef Py_ssize_t sp = 0, t, p, i
    cdef int j
    cdef unsigned int mask, full = (1 << alphabet_size) - 1
    try:
        a[0] = 0
        # iterative FKM: state (t, p, next value j to try at slot t; j == -1
        # means "first visit": copy a[t - p] and recurse with same period)
        stack_t[0] = 1; stack_p[0] = 1; stack_j[0] = -1
        sp = 1
        while sp > 0:
            sp -= 1
            t = stack_t[sp]; p = stack_p[sp]; j = <int> stack_j[sp]
            if t > length:
                if length % p == 0:
                    mask = 0
                    for i in range(1, length + 1):
                        mask |= (<unsigned int> 1) << a[i]
                    if mask == full:
                        out.append((<char*> a)[1:length + 1])
                continue
            if j == -1:
                # push the continuation that tries larger values next
                stack_t[sp] = t; stack_p[sp] = p; stack_j[sp] = a[t - p] + 1
                sp += 1
                a[t] = a[t - p]
                stack_t[sp] = t + 1; stack_p[sp] = p; stack_j[sp] = -1
                sp += 1
            elif j < alphabet_size:
                stack_t[sp] = t; stack_p[sp] = p; stack_j[sp] = j + 1
                sp += 1
                a[t] = <unsigned char> j
                stack_t[sp] = t + 1; stack_p[sp] = t; stack_j[sp] = -1
                sp += 1
    finally:
        free(a); free(stack_t); free(stack_p); free(stack_j)
    return out
