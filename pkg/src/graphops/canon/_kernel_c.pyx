# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled canonical-labeling kernel.

Same individualization-refinement algorithm as ``_kernel_py`` with the same
pruning constants; adjacency lives in flat uint64 word arrays and the hot
loops (splitter counting, leaf bit extraction, candidate keys) run as C.
Must return byte-identical output to the pure kernel for every input.

Candidate keys and leaf values are packed MSB-first, so their byte-wise
order coincides with the pure kernel's integer order and both kernels keep
identical survivor sets at every search node.
"""

from collections import deque

from cpython cimport array
import array

cdef extern from *:
    """
    static inline int gops_popcount64(unsigned long long x){ return __builtin_popcountll(x); }
    """
    int gops_popcount64(unsigned long long x) nogil

KEY_SPLITTER_CAP = 4
KEY_PREFIX_SINGLETONS = 32

cdef int _KEY_SPLITTER_CAP = KEY_SPLITTER_CAP
cdef int _KEY_PREFIX_SINGLETONS = KEY_PREFIX_SINGLETONS

_PYMASK64 = (1 << 64) - 1


def canonical_bits(n, rows):
    """Canonical byte string for the graph (n, adjacency bitset rows).

    Layout matches the pure kernel: 4-byte big-endian order, then the
    column-major upper-triangle bits of the canonically labeled adjacency
    matrix, packed big-endian and zero-padded to a byte boundary.
    """
    header = int(n).to_bytes(4, "big")
    if n == 1:
        return header
    packed = _complete_multipartite_bits(n, rows)
    if packed is not None:
        return header + packed
    s = _Search(n, rows)
    s.run()
    return header + s.best_bits


def _complete_multipartite_bits(n, rows):
    """Direct canonical bits for complete multipartite graphs, else None.

    Same recognition and labeling rule as the pure kernel: vertices with
    identical rows form the parts; representatives must be pairwise
    adjacent; parts are laid out in ascending size order.
    """
    cdef int v, i, j, pi, pj
    cdef long bitpos, m
    groups = {}
    for v in range(n):
        groups[rows[v]] = groups.get(rows[v], 0) + 1
    reps = []
    seen = set()
    for v in range(n):
        if rows[v] not in seen:
            seen.add(rows[v])
            reps.append(v)
    for i in range(len(reps)):
        ri = rows[reps[i]]
        for j in range(i + 1, len(reps)):
            if not ri >> reps[j] & 1:
                return None
    sizes = sorted(groups.values())
    cdef array.array part_arr = array.array("i", bytes(4 * n))
    cdef int[:] part_of = part_arr
    v = 0
    for pi, sz in enumerate(sizes):
        for i in range(sz):
            part_of[v] = pi
            v += 1
    m = (<long> n) * (n - 1) // 2
    buf = bytearray((m + 7) // 8)
    cdef unsigned char[:] B = buf
    bitpos = 0
    for j in range(1, n):
        pj = part_of[j]
        for i in range(j):
            if part_of[i] != pj:
                B[bitpos >> 3] |= <unsigned char> (128 >> (bitpos & 7))
            bitpos += 1
    return bytes(buf)


cdef class _Search:
    cdef int n, w
    cdef array.array adj_arr
    cdef unsigned long long[:] adj
    cdef array.array wmask_arr
    cdef unsigned long long[:] wmask
    cdef array.array cnt_arr
    cdef int[:] cnt
    cdef array.array scr_arr
    cdef int[:] scr
    cdef array.array hist_arr
    cdef int[:] hist
    cdef array.array verts_arr
    cdef int[:] verts
    cdef public object best_bits    # packed leaf bytes, or None
    cdef array.array best_lab
    cdef bytearray leafbuf
    cdef bytearray keybuf
    cdef public list gens

    def __init__(self, int n, rows):
        cdef int v, j
        self.n = n
        self.w = (n + 63) >> 6
        self.adj_arr = array.array("Q", bytes(8 * n * self.w))
        self.adj = self.adj_arr
        for v in range(n):
            row = rows[v]
            for j in range(self.w):
                self.adj[v * self.w + j] = (row >> (64 * j)) & _PYMASK64
        self.wmask_arr = array.array("Q", bytes(8 * self.w))
        self.wmask = self.wmask_arr
        self.cnt_arr = array.array("i", bytes(4 * n))
        self.cnt = self.cnt_arr
        self.scr_arr = array.array("i", bytes(4 * n))
        self.scr = self.scr_arr
        self.hist_arr = array.array("i", bytes(4 * (n + 2)))
        self.hist = self.hist_arr
        self.verts_arr = array.array("i", bytes(4 * _KEY_PREFIX_SINGLETONS))
        self.verts = self.verts_arr
        self.best_bits = None
        self.best_lab = None
        nbits = n * (n - 1) // 2
        self.leafbuf = bytearray((nbits + 7) // 8)
        kbits = _KEY_PREFIX_SINGLETONS * (_KEY_PREFIX_SINGLETONS - 1) // 2
        self.keybuf = bytearray((kbits + 7) // 8)
        self.gens = []

    def run(self):
        lab = array.array("i", range(self.n))
        cells = [(0, self.n)]
        self._refine(lab, cells, deque([lab[:]]), -1)
        self._search(lab, cells, ())

    # -- refinement ---------------------------------------------------

    cdef _refine(self, array.array lab, list cells, object queue, int budget):
        cdef int[:] L = lab
        cdef unsigned long long[:] W = self.wmask
        cdef unsigned long long[:] A = self.adj
        cdef int[:] CNT = self.cnt
        cdef int[:] SCR = self.scr
        cdef int[:] HIST = self.hist
        cdef int w = self.w
        cdef int i, k, j, start, size, c, pos, v, minc, maxc, t
        cdef int[:] SPL
        while queue:
            if budget == 0:
                break
            budget -= 1
            splitter = queue.popleft()
            for j in range(w):
                W[j] = 0
            SPL = splitter
            for k in range(SPL.shape[0]):
                v = SPL[k]
                W[v >> 6] |= (<unsigned long long> 1) << (v & 63)
            i = 0
            while i < len(cells):
                start, size = <tuple> cells[i]
                if size == 1:
                    i += 1
                    continue
                minc = maxc = 0
                for k in range(size):
                    v = L[start + k]
                    c = 0
                    for j in range(w):
                        c += gops_popcount64(A[v * w + j] & W[j])
                    CNT[k] = c
                    if k == 0:
                        minc = maxc = c
                    elif c < minc:
                        minc = c
                    elif c > maxc:
                        maxc = c
                if minc == maxc:
                    i += 1
                    continue
                # stable counting sort of the segment by count, ascending
                for c in range(minc, maxc + 1):
                    HIST[c] = 0
                for k in range(size):
                    HIST[CNT[k]] += 1
                parts = []
                pos = 0
                for c in range(minc, maxc + 1):
                    t = HIST[c]
                    if t > 0:
                        parts.append((start + pos, t))
                    HIST[c] = pos
                    pos += t
                for k in range(size):
                    c = CNT[k]
                    SCR[HIST[c]] = L[start + k]
                    HIST[c] += 1
                for k in range(size):
                    L[start + k] = SCR[k]
                cells[i : i + 1] = parts
                skip = 0
                for k in range(1, len(parts)):
                    if (<tuple> parts[k])[1] > (<tuple> parts[skip])[1]:
                        skip = k
                for k in range(len(parts)):
                    if k != skip:
                        ps, psz = <tuple> parts[k]
                        queue.append(lab[ps : ps + psz])
                i += len(parts)

    # -- search -------------------------------------------------------

    def _search(self, array.array lab, list cells, tuple prefix):
        cdef int ti = -1
        cdef int idx, start, size
        for idx in range(len(cells)):
            if (<tuple> cells[idx])[1] > 1:
                ti = idx
                break
        if ti < 0:
            self._process_leaf(lab)
            return
        start, size = <tuple> cells[ti]
        candidates = list(lab[start : start + size])

        scored = []
        for u in candidates:
            clab = lab[:]
            ccells = cells.copy()
            self._individualize(clab, ccells, ti, u)
            self._refine(clab, ccells, deque([clab[start : start + 1]]), _KEY_SPLITTER_CAP)
            scored.append((self._partition_key(clab, ccells), u))
        best_key = min(k for k, _ in scored)
        survivors = [u for k, u in scored if k == best_key]

        explored = set()
        parent = None
        gens_seen = -1
        for u in survivors:
            if len(self.gens) != gens_seen:
                parent = self._orbit_partition(prefix)
                gens_seen = len(self.gens)
            root = _find(parent, u) if parent is not None else u
            if root in explored:
                continue
            explored.add(root)
            clab = lab[:]
            ccells = cells.copy()
            self._individualize(clab, ccells, ti, u)
            self._refine(clab, ccells, deque([clab[start : start + 1]]), -1)
            self._search(clab, ccells, prefix + (u,))

    cdef _individualize(self, array.array lab, list cells, int ti, int u):
        cdef int[:] L = lab
        cdef int start, size, idx
        start, size = <tuple> cells[ti]
        idx = start
        while L[idx] != u:
            idx += 1
        while idx > start:
            L[idx] = L[idx - 1]
            idx -= 1
        L[start] = u
        cells[ti : ti + 1] = [(start, 1), (start + 1, size - 1)]

    def _partition_key(self, array.array lab, list cells):
        cdef int[:] L = lab
        cdef unsigned long long[:] A = self.adj
        cdef int[:] verts = self.verts
        cdef unsigned char[:] B = self.keybuf
        cdef int w = self.w
        cdef int s, sz, i, j, nv, vi, vj
        cdef long bitpos = 0
        nv = 0
        for s, sz in cells:
            if sz != 1 or nv >= _KEY_PREFIX_SINGLETONS:
                break
            verts[nv] = L[s]
            nv += 1
        cdef long nbits = nv * (nv - 1) // 2
        cdef long nbytes = (nbits + 7) // 8
        for i in range(nbytes):
            B[i] = 0
        for j in range(1, nv):
            vj = verts[j]
            for i in range(j):
                vi = verts[i]
                if (A[vj * w + (vi >> 6)] >> (vi & 63)) & 1:
                    B[bitpos >> 3] |= <unsigned char> (128 >> (bitpos & 7))
                bitpos += 1
        return (tuple(sz for _, sz in cells), bytes(self.keybuf[:nbytes]))

    def _process_leaf(self, array.array lab):
        cdef int[:] L = lab
        cdef unsigned long long[:] A = self.adj
        cdef unsigned char[:] B = self.leafbuf
        cdef int w = self.w
        cdef int n = self.n
        cdef int i, j, vi, vj
        cdef long bitpos = 0
        cdef long bi
        for bi in range(B.shape[0]):
            B[bi] = 0
        for j in range(1, n):
            vj = L[j]
            for i in range(j):
                vi = L[i]
                if (A[vj * w + (vi >> 6)] >> (vi & 63)) & 1:
                    B[bitpos >> 3] |= <unsigned char> (128 >> (bitpos & 7))
                bitpos += 1
        leaf = bytes(self.leafbuf)
        if self.best_bits is None or leaf < self.best_bits:
            self.best_bits = leaf
            self.best_lab = lab[:]
        elif leaf == self.best_bits:
            g = [0] * n
            bl = self.best_lab
            for i in range(n):
                g[bl[i]] = lab[i]
            self.gens.append(tuple(g))

    # -- automorphism orbits -------------------------------------------

    def _orbit_partition(self, tuple prefix):
        applicable = [g for g in self.gens if all(g[v] == v for v in prefix)]
        if not applicable:
            return None
        parent = list(range(self.n))
        for g in applicable:
            for v in range(self.n):
                a, b = _find(parent, v), _find(parent, g[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return parent


def _find(parent, v):
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v
