"""Word types: finite words, ultimately periodic words, carrier-set words.

Finite words are tuples of small ints with a declared alphabet size.
LassoWord u(v) denotes u v v v ...; it is canonicalized on construction
(primitive cycle, minimal spoke), so structural equality coincides with
equality of the denoted omega-words.  KnjEncodedWord(N, j, m) denotes

    2^N  m_0 2^{M_{j+1}} 3 2^{M_{j+1}}  m_1 2^{M_{j+2}} 3 2^{M_{j+2}} ...

over the 4-letter alphabet, where m is a binary lasso and M is the block
offset from pairs.m_offset.  Block i of the expansion means the segment
m_i 2^M 3 2^M.  Such words are never ultimately periodic (the runs grow),
which is why they get their own representation.  KnjTailWord is a suffix
view used when a cut position cannot be renormalized to a carrier address.
"""

from .errors import AlphabetMismatch, InvalidAddress, NotAPrefix, WorkbenchError
from . import pairs


class FiniteWord:
    __slots__ = ("letters", "size")

    def __init__(self, letters=(), size=None):
        if isinstance(letters, str):
            letters = tuple(int(c) for c in letters)
        else:
            letters = tuple(int(x) for x in letters)
        if size is None:
            size = max(2, max(letters) + 1) if letters else 2
        if not 2 <= size <= 4:
            raise WorkbenchError(f"unsupported alphabet size {size}")
        for x in letters:
            if not 0 <= x < size:
                raise WorkbenchError(f"letter {x} outside alphabet of size {size}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "size", size)

    def __setattr__(self, *_):
        raise AttributeError("FiniteWord is immutable")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return FiniteWord(self.letters[key], self.size)
        return self.letters[key]

    def __eq__(self, other):
        # alphabet size is presentation only; words compare by letters
        if isinstance(other, FiniteWord):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        return "".join(map(str, self.letters)) if self.letters else "ε"

    def __repr__(self):
        return f"FiniteWord({str(self)!r}, size={self.size})"

    def count(self, letter: int) -> int:
        return self.letters.count(letter)


def word(text, size=None) -> FiniteWord:
    """Shorthand constructor from a digit string or letter iterable."""
    return FiniteWord(text, size)


def concat(u: FiniteWord, v: FiniteWord) -> FiniteWord:
    if u.size != v.size:
        raise AlphabetMismatch(f"cannot concatenate size {u.size} with size {v.size}")
    return FiniteWord(u.letters + v.letters, u.size)


def _primitive(cycle: tuple) -> tuple:
    n = len(cycle)
    for d in range(1, n + 1):
        if n % d == 0 and cycle[:d] * (n // d) == cycle:
            return cycle[:d]
    return cycle


def canonical_parts(spoke, cycle):
    """Canonical (spoke, cycle) letter tuples: primitive cycle, shortest
    spoke (a shared tail is absorbed into a rotation of the cycle)."""
    spoke = tuple(spoke)
    cycle = _primitive(tuple(cycle))
    if not cycle:
        raise WorkbenchError("lasso cycle must be nonempty")
    spoke = list(spoke)
    while spoke and spoke[-1] == cycle[-1]:
        spoke.pop()
        cycle = (cycle[-1],) + cycle[:-1]
    return tuple(spoke), cycle


def _letters(x):
    if isinstance(x, FiniteWord):
        return x.letters
    if isinstance(x, str):
        return tuple(int(c) for c in x)
    return tuple(int(v) for v in x)


class LassoWord:
    """The omega-word spoke . cycle^omega, stored canonically."""

    __slots__ = ("spoke", "cycle")

    def __init__(self, spoke, cycle, size=None):
        if size is None:
            if isinstance(spoke, FiniteWord):
                size = spoke.size
            if isinstance(cycle, FiniteWord):
                size = max(size or 2, cycle.size)
        u, v = canonical_parts(_letters(spoke), _letters(cycle))
        if size is None:
            size = max(2, max(u + v) + 1)
        object.__setattr__(self, "spoke", FiniteWord(u, size))
        object.__setattr__(self, "cycle", FiniteWord(v, size))

    def __setattr__(self, *_):
        raise AttributeError("LassoWord is immutable")

    @property
    def size(self):
        return max(self.spoke.size, self.cycle.size)

    def letter_at(self, i: int) -> int:
        u, v = self.spoke.letters, self.cycle.letters
        if i < len(u):
            return u[i]
        return v[(i - len(u)) % len(v)]

    def prefix(self, n: int) -> FiniteWord:
        u, v = self.spoke.letters, self.cycle.letters
        if n <= len(u):
            return FiniteWord(u[:n], self.size)
        rest = n - len(u)
        reps, tail = divmod(rest, len(v))
        return FiniteWord(u + v * reps + v[:tail], self.size)

    def __eq__(self, other):
        if isinstance(other, LassoWord):
            return (
                self.spoke.letters == other.spoke.letters
                and self.cycle.letters == other.cycle.letters
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.spoke.letters, self.cycle.letters))

    def __str__(self):
        u = "".join(map(str, self.spoke.letters))
        v = "".join(map(str, self.cycle.letters))
        return f"{u}({v})"

    def __repr__(self):
        return f"LassoWord({str(self)!r})"


def normalize(l: LassoWord) -> LassoWord:
    """Canonical representative (idempotent: construction canonicalizes)."""
    return LassoWord(l.spoke, l.cycle, size=l.size)


class KnjEncodedWord:
    """Carrier-set word: address (N, j) plus the binary block-letter lasso m."""

    __slots__ = ("n", "j", "m")

    def __init__(self, n: int, j: int, m: LassoWord):
        if j < 0 or n < 0:
            raise InvalidAddress("address components must be nonnegative")
        if n > pairs.m_offset(j):
            raise InvalidAddress(f"N={n} exceeds M_{j}={pairs.m_offset(j)}")
        if not isinstance(m, LassoWord):
            raise WorkbenchError("block letters must form a lasso")
        for x in m.spoke.letters + m.cycle.letters:
            if x not in (0, 1):
                raise WorkbenchError("block letters must be binary")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "m", m)

    def __setattr__(self, *_):
        raise AttributeError("KnjEncodedWord is immutable")

    size = 4

    def block_run(self, i: int) -> int:
        """Length of each 2-run in block i."""
        return pairs.m_offset(self.j + i + 1)

    def block_start(self, i: int) -> int:
        pos = self.n
        for k in range(i):
            pos += 2 * self.block_run(k) + 2
        return pos

    def letter_at(self, i: int) -> int:
        if i < self.n:
            return 2
        pos = self.n
        b = 0
        while True:
            run = self.block_run(b)
            if i == pos:
                return self.m.letter_at(b)
            if i <= pos + run:
                return 2
            if i == pos + run + 1:
                return 3
            if i <= pos + 2 * run + 1:
                return 2
            pos += 2 * run + 2
            b += 1

    def prefix(self, n: int) -> FiniteWord:
        out = []

        def ext(val, cnt):
            take = min(cnt, n - len(out))
            if take > 0:
                out.extend([val] * take)

        ext(2, self.n)
        b = 0
        while len(out) < n:
            run = self.block_run(b)
            ext(self.m.letter_at(b), 1)
            ext(2, run)
            ext(3, 1)
            ext(2, run)
            b += 1
        return FiniteWord(out, 4)

    def __eq__(self, other):
        if isinstance(other, KnjEncodedWord):
            return (self.n, self.j, self.m) == (other.n, other.j, other.m)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.j, self.m))

    def __str__(self):
        return f"K[{self.n},{self.j}]{self.m}"

    def __repr__(self):
        return f"KnjEncodedWord({self.n}, {self.j}, {self.m!r})"


class KnjTailWord:
    """Suffix of a carrier word at a cut that has no carrier address."""

    __slots__ = ("base", "drop")

    def __init__(self, base: KnjEncodedWord, drop: int):
        if drop < 0:
            raise WorkbenchError("drop must be nonnegative")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "drop", drop)

    def __setattr__(self, *_):
        raise AttributeError("KnjTailWord is immutable")

    size = 4

    def letter_at(self, i: int) -> int:
        return self.base.letter_at(self.drop + i)

    def prefix(self, n: int) -> FiniteWord:
        return FiniteWord(self.base.prefix(self.drop + n).letters[self.drop:], 4)

    def __eq__(self, other):
        if isinstance(other, KnjTailWord):
            return (self.base, self.drop) == (other.base, other.drop)
        return NotImplemented

    def __hash__(self):
        return hash((self.base, self.drop))

    def __repr__(self):
        return f"KnjTailWord({self.base!r}, drop={self.drop})"


# Any omega-word value handled by the deciders.
SyntheticWord = (LassoWord, KnjEncodedWord, KnjTailWord)


def prefix(w, n: int) -> FiniteWord:
    if n < 0:
        raise WorkbenchError("prefix length must be nonnegative")
    if isinstance(w, FiniteWord):
        if n > len(w):
            raise WorkbenchError("prefix longer than the word")
        return w[:n]
    if isinstance(w, SyntheticWord):
        return w.prefix(n)
    raise TypeError(f"not a word: {w!r}")


def letter_at(w, i: int) -> int:
    if isinstance(w, FiniteWord):
        return w.letters[i]
    return w.letter_at(i)


def _lasso_drop(m: LassoWord, k: int) -> LassoWord:
    """m with its first k letters removed."""
    u, v = m.spoke.letters, m.cycle.letters
    if k <= len(u):
        return LassoWord(u[k:], v, size=m.size)
    r = (k - len(u)) % len(v)
    return LassoWord((), v[r:] + v[:r], size=m.size)


def _knj_cut(base: KnjEncodedWord, n: int):
    """Suffix of a carrier word after n letters, renormalized when the cut
    lands in the leading run or in a trailing 2-run."""
    if n == 0:
        return base
    if n <= base.n:
        return KnjEncodedWord(base.n - n, base.j, base.m)
    pos = base.n
    i = 0
    while True:
        run = base.block_run(i)
        tail_start = pos + run + 2
        block_end = tail_start + run
        if tail_start <= n <= block_end:
            return KnjEncodedWord(block_end - n, base.j + i + 1, _lasso_drop(base.m, i + 1))
        if n < tail_start:
            return KnjTailWord(base, n)
        pos = block_end
        i += 1


def suffix_from(w, s: FiniteWord):
    """The word w with its prefix s removed; s must actually be a prefix."""
    if not isinstance(s, FiniteWord):
        raise TypeError("the prefix to drop must be a finite word")
    n = len(s)
    if prefix(w, n) != s:
        raise NotAPrefix(f"{s} is not a prefix of {w}")
    if isinstance(w, LassoWord):
        u, v = w.spoke.letters, w.cycle.letters
        if n <= len(u):
            return LassoWord(u[n:], v, size=w.size)
        r = (n - len(u)) % len(v)
        return LassoWord((), v[r:] + v[:r], size=w.size)
    if isinstance(w, KnjEncodedWord):
        return _knj_cut(w, n)
    if isinstance(w, KnjTailWord):
        return _knj_cut(w.base, w.drop + n)
    raise TypeError(f"not an omega-word: {w!r}")


def run_decompose(s: FiniteWord):
    """Runs of 2s between delimiter letters.

    Returns [(delimiter, following 2-run length), ...]; a nonempty leading
    2-run is reported with delimiter None.  Lossless with run_recompose.
    """
    letters = s.letters if isinstance(s, FiniteWord) else tuple(s)
    out = []
    i = 0
    n = len(letters)
    j = i
    while j < n and letters[j] == 2:
        j += 1
    if j > i:
        out.append((None, j - i))
    i = j
    while i < n:
        d = letters[i]
        i += 1
        j = i
        while j < n and letters[j] == 2:
            j += 1
        out.append((d, j - i))
        i = j
    return out


def run_recompose(runs, size=4) -> FiniteWord:
    out = []
    for d, k in runs:
        if d is not None:
            out.append(d)
        out.extend([2] * k)
    return FiniteWord(out, size)
