"""In-place A-order successor for codewords of bounded-degree ordered trees.

The codeword is scanned right to left (reverse pre-order).  Trailing ``s``
symbols form a chain under the last ``r``; from there the algorithm either
descends into the left brother's subtree (when that subtree ends in another
``r``) or moves one node from the chain into the left brother, rebuilding
the affected suffix as the A-order-first arrangement.  Total work over a
full enumeration is proportional to the number of trees produced.

``nchild[i]`` is the 1-based index of node ``i`` among its siblings (``1``
for the root and for only children); it bounds sibling groups by ``delta``.
"""

from .model import check_params


class GeneratorState:
    """Mutable codeword buffer plus sibling indices.

    ``writes`` and ``scans`` count symbol writes and scanned positions over
    the life of the state; ``last_touched`` is the work of the most recent
    successor call.
    """

    def __init__(self, n, delta):
        check_params(n, delta)
        self.n = n
        self.delta = delta
        self.C = ["s"] * n
        self.nchild = [1] * n
        self.exhausted = False
        self.writes = 0
        self.scans = 0
        self.last_touched = 0

    @property
    def text(self):
        return "".join(self.C)

    def __str__(self):
        return self.text

    def __repr__(self):
        return f"GeneratorState(n={self.n}, delta={self.delta}, C={self.text!r})"

    def _fill_children(self, pos, k):
        """Write the first forest of ``k`` descendants starting at ``pos``."""
        C, nchild, delta = self.C, self.nchild, self.delta
        while k > 0:
            j = delta if delta < k else k
            if j == 1:
                C[pos] = "s"
                nchild[pos] = 1
                pos += 1
                k -= 1
                continue
            C[pos] = "l"
            nchild[pos] = 1
            for t in range(2, j):
                C[pos + t - 1] = "m"
                nchild[pos + t - 1] = t
            C[pos + j - 1] = "r"
            nchild[pos + j - 1] = j
            pos += j
            k -= j

    def _fill_brothers(self, pos, k, index):
        """Write ``k`` nodes as right siblings starting at sibling ``index``.

        The group takes as many leaf siblings as ``delta`` allows; the last
        sibling (an ``r``) gets whatever nodes remain as its descendants.
        """
        C, nchild = self.C, self.nchild
        room = self.delta - index + 1
        j = room if room < k else k
        for t in range(j - 1):
            C[pos + t] = "m"
            nchild[pos + t] = index + t
        C[pos + j - 1] = "r"
        nchild[pos + j - 1] = index + j - 1
        self._fill_children(pos + j, k - j)

    def next(self):
        """Advance to the A-order successor.  Returns False at the last tree."""
        if self.exhausted:
            return False
        C = self.C
        n = self.n
        cur = n - 1
        while cur >= 0 and C[cur] == "s":
            cur -= 1
        scanned = n - cur
        if cur < 0:
            self.scans += scanned
            self.last_touched = scanned
            self.exhausted = True
            return False
        writes = 0
        # C[cur] is an 'r' heading a chain of `size` nodes that ends the word
        size = n - cur
        while True:
            i = cur - 1
            while C[i] == "s":
                i -= 1
            scanned += cur - i
            chain = cur - i  # left brother's trailing chain incl. its head at i
            if C[i] == "r":
                self._fill_brothers(cur, size, self.nchild[cur])
                writes += size
                cur = i
                size = chain
                continue
            if size == 1:
                C[i] = "s" if C[i] == "l" else "r"
                writes += 1
                if chain == 1:
                    C[cur] = "s"
                    self.nchild[cur] = 1
                    writes += 1
                else:
                    self._fill_children(i + 1, chain)
            else:
                self._fill_children(i + 1, chain)
                self._fill_brothers(cur + 1, size - 1, self.nchild[i] + 1)
                writes += size - 1
            writes += chain
            break
        self.writes += writes
        self.scans += scanned
        self.last_touched = scanned + writes
        return True

    def check(self):
        """Raise ``AssertionError`` if ``C`` or ``nchild`` are inconsistent."""
        from .codec import children_lists, validate

        report = validate("".join(self.C), self.delta, self.n)
        assert report.valid, report.describe()

        for kids in children_lists("".join(self.C)):
            for t, child in enumerate(kids, 1):
                assert self.nchild[child] == t, (child, self.nchild[child], t)
        assert self.nchild[0] == 1
        if self.exhausted:
            assert self.text == "s" * self.n


def first_codeword(n, delta):
    """State holding the A-order-first tree: each node takes as many leaf
    children as allowed and the last child receives the remaining nodes."""
    state = GeneratorState(n, delta)
    state._fill_children(1, n - 1)
    state.writes = n - 1
    return state


def last_codeword(n, delta=None):
    if delta is not None:
        check_params(n, delta)
    return "s" * n


def next_inplace(state):
    return state.next()


def iter_codewords(n, delta):
    """Yield every codeword with ``n`` nodes in A-order."""
    state = first_codeword(n, delta)
    yield state.text
    while state.next():
        yield state.text


def enumerate_codewords(n, delta, visitor=None):
    """Call ``visitor(codeword)`` on every tree in A-order; return how many."""
    state = first_codeword(n, delta)
    total = 1
    if visitor is not None:
        visitor(state.text)
        while state.next():
            total += 1
            visitor(state.text)
    else:
        step = state.next
        while step():
            total += 1
    return total
