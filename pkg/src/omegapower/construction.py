"""Block-coded word languages over the 4-letter alphabet and their
omega-power deciders.

Finite words of interest decompose into blocks m 2^P 3 2^R after a leading
2-run.  Three families:

  pi-words   one chain of pair-enumeration steps: runs after the first
             block letter are pinned to the offsets M_{j+1}, M_{j+2}, ...
             and the final block's trailing run splits M_{j+l+1} = p_l + r_l
             at an accepted pair (guessed part ends in 1, pair in the tree).
  mu-words   at least two blocks, every P-run an M-value, and a defect in
             the second-to-last block: either P != R there (form 0) or the
             next P-run is not the successor offset (form 1).
  carrier    words 2^N m_0 2^{M_{j+1}} 3 2^{M_{j+1}} ... (see words.py).

mu-parses are unique: the block decomposition of a finite word is forced by
its letters, so membership is a deterministic scan.  pi-decompositions are
unique too: the first P-run pins j, the trailing run pins the last chain
index, and prefixes of its pair pin the interior.

For omega-powers: an infinite word is a product of mu-words of one form
iff it carries the infinite block shape, all P-runs are M-values, and that
form's defect recurs infinitely often (cuts land inside R-runs, and defect
positions with gaps >= 2 can always be selected).  On ultimately periodic
block profiles a defect recurs iff one occurs in the periodic zone; carrier
words have no defects at all.  Consequently no ultimately periodic word
lies in the M-shaped class without being a mu-product, which makes the
classification map total on lassos only through its error cases.
"""

from dataclasses import dataclass

from . import pairs
from .errors import InMuOmega, NotInP, WorkbenchError
from .rtree import RTreePresentation, r_contains
from .verdicts import Member
from .words import (
    FiniteWord,
    KnjEncodedWord,
    KnjTailWord,
    LassoWord,
    run_decompose,
)


# ---------------------------------------------------------------- finite

@dataclass(frozen=True)
class PiDecomposition:
    """j plus the chain blocks (n_i, m_i, p_i, r_i)."""

    j: int
    blocks: tuple


def _delimited_blocks(s: FiniteWord):
    """(leading 2-run, [(m, P, R), ...]) if s alternates m 2^P 3 2^R, else None."""
    runs = run_decompose(s)
    idx = 0
    lead = 0
    if runs and runs[0][0] is None:
        lead = runs[0][1]
        idx = 1
    rest = runs[idx:]
    if not rest or len(rest) % 2 != 0:
        return None
    blocks = []
    for k in range(0, len(rest), 2):
        m, p = rest[k]
        d, r = rest[k + 1]
        if m not in (0, 1) or d != 3:
            return None
        blocks.append((m, p, r))
    return lead, blocks


def pi_member(s: FiniteWord, r: RTreePresentation):
    """The unique pi-decomposition of s, or None."""
    parsed = _delimited_blocks(s)
    if parsed is None:
        return None
    n0, blocks = parsed
    l = len(blocks) - 1
    jp = pairs.m_index(blocks[0][1])
    if jp is None or jp < 1:
        return None
    j = jp - 1
    if n0 > pairs.m_offset(j):
        return None
    for i, (_, p, rr) in enumerate(blocks):
        if p != pairs.m_offset(j + i + 1):
            return None
        if i < l and rr != pairs.m_offset(j + i + 1):
            return None
    r_last = blocks[l][2]
    if r_last > pairs.m_offset(j + l + 1):
        return None
    p_last = pairs.m_offset(j + l + 1) - r_last
    qp = pairs.q_of_index(p_last)
    q0 = pairs.q_of_index(n0)
    mlist = tuple(b[0] for b in blocks)
    if len(qp) != len(q0) + l + 1:
        return None
    if qp.alpha != q0.alpha + mlist:
        return None
    if qp.beta[: len(q0)] != q0.beta:
        return None
    if qp.beta[-1] != 1 or not r_contains(r, qp):
        return None
    chain = []
    n_i = n0
    for i in range(l + 1):
        if i == l:
            p_i = p_last
        else:
            width = len(q0) + i + 1
            p_i = pairs.index_of_q(pairs.QPair(qp.beta[:width], q0.alpha + mlist[: i + 1]))
        chain.append((n_i, mlist[i], p_i, pairs.m_offset(j + i + 1) - p_i))
        n_i = p_i
    return PiDecomposition(j, tuple(chain))


def _mu_defect0(block) -> bool:
    _, p, r = block
    return p != r


def _mu_defect1(block, nxt) -> bool:
    a = pairs.m_index(block[1])
    return a is None or nxt[1] != pairs.m_offset(a + 1)


def mu0_member(s: FiniteWord) -> bool:
    parsed = _delimited_blocks(s)
    if parsed is None:
        return False
    _, blocks = parsed
    if len(blocks) < 2:
        return False
    if any(pairs.m_index(p) is None for _, p, _ in blocks):
        return False
    return _mu_defect0(blocks[-2])


def mu1_member(s: FiniteWord) -> bool:
    parsed = _delimited_blocks(s)
    if parsed is None:
        return False
    _, blocks = parsed
    if len(blocks) < 2:
        return False
    if any(pairs.m_index(p) is None for _, p, _ in blocks):
        return False
    return _mu_defect1(blocks[-2], blocks[-1])


def mu_member(s: FiniteWord) -> bool:
    parsed = _delimited_blocks(s)
    if parsed is None:
        return False
    _, blocks = parsed
    if len(blocks) < 2:
        return False
    if any(pairs.m_index(p) is None for _, p, _ in blocks):
        return False
    return _mu_defect0(blocks[-2]) or _mu_defect1(blocks[-2], blocks[-1])


def a_member(s: FiniteWord, r: RTreePresentation) -> bool:
    return mu_member(s) or pi_member(s, r) is not None


# ---------------------------------------------------------------- profiles

@dataclass(frozen=True)
class BlockProfile:
    """Infinite block structure: lead 2-run, finite head, then either an
    ultimately periodic pattern (cyc) or a carrier-shaped tail."""

    lead: int
    head: tuple  # (m, p, r) triples
    cyc: tuple = ()  # periodic pattern; empty means carrier tail
    tail_j: int = None
    tail_m: LassoWord = None

    def block(self, i: int):
        if i < len(self.head):
            return self.head[i]
        if self.cyc:
            return self.cyc[(i - len(self.head)) % len(self.cyc)]
        k = i - len(self.head)
        run = pairs.m_offset(self.tail_j + k + 1)
        return (self.tail_m.letter_at(k), run, run)


def _lasso_profile(w: LassoWord):
    """Block profile of a lasso, or None without the infinite block shape."""
    u, v = w.spoke.letters, w.cycle.letters
    if all(x == 2 for x in v):
        return None  # 2-tail: only finitely many block delimiters
    ulen, vlen = len(u), len(v)

    def letter(i):
        return u[i] if i < ulen else v[(i - ulen) % vlen]

    pos = 0
    while letter(pos) == 2:
        pos += 1
    lead = pos
    blocks = []
    seen_phase = {}
    while True:
        start = pos
        if start >= ulen:
            phase = (start - ulen) % vlen
            if phase in seen_phase:
                k = seen_phase[phase]
                return BlockProfile(lead, tuple(blocks[:k]), tuple(blocks[k:]))
            seen_phase[phase] = len(blocks)
        m = letter(pos)
        if m not in (0, 1):
            return None
        pos += 1
        p = 0
        while letter(pos) == 2:
            p += 1
            pos += 1
        if letter(pos) != 3:
            return None
        pos += 1
        rr = 0
        while letter(pos) == 2:
            rr += 1
            pos += 1
        blocks.append((m, p, rr))


def _profile_of(w):
    if isinstance(w, LassoWord):
        return _lasso_profile(w)
    if isinstance(w, KnjEncodedWord):
        return BlockProfile(w.n, (), (), w.j, w.m)
    raise TypeError(f"no block profile for {w!r}")


def _all_offsets(profile: BlockProfile) -> bool:
    window = len(profile.head) + len(profile.cyc)
    for i in range(window):
        if pairs.m_index(profile.block(i)[1]) is None:
            return False
    if profile.cyc:
        return True
    # carrier tails carry M-values by construction; spot-check the predicate
    return pairs.m_index(profile.block(window)[1]) is not None


def _recurring_defect(profile: BlockProfile) -> bool:
    """Does a mu-defect occur infinitely often?

    Periodic zone: any defect there recurs every period.  Carrier tail:
    p == r and the offsets advance to the successor in lockstep, so the
    defect predicates are identically false past the head; defects touching
    the head occur finitely often and do not count.
    """
    if profile.cyc:
        base = len(profile.head)
        for k in range(base, base + len(profile.cyc)):
            if _mu_defect0(profile.block(k)) or _mu_defect1(profile.block(k), profile.block(k + 1)):
                return True
        return False
    probe = len(profile.head)
    return _mu_defect0(profile.block(probe)) or _mu_defect1(
        profile.block(probe), profile.block(probe + 1)
    )


def mu_omega_member(w, budget: int = None) -> Member:
    """Is w an infinite product of mu-words (necessarily of a single form)?

    Exact on lassos and carrier words; the budget is accepted for interface
    stability but never binds.
    """
    if isinstance(w, KnjTailWord):
        raise TypeError("mu_omega_member expects a lasso or a carrier word")
    profile = _profile_of(w)
    if profile is None:
        return Member.NO
    if not _all_offsets(profile):
        return Member.NO
    return Member.of(bool(_recurring_defect(profile)))


# ---------------------------------------------------------------- map F

def _f_from_profile(profile: BlockProfile):
    """Classification triple (t, S, j) for an M-shaped word outside the
    mu-products: strip everything after the last defect, keep the next
    block letter and its P-run plus the closing 3; S is that block's
    trailing run and j indexes the P-run after it."""
    if not _all_offsets(profile):
        raise NotInP("block P-runs must all be offsets M_j")
    if _recurring_defect(profile):
        raise InMuOmega("defects recur; the word is a mu-product")
    last = None
    for i in range(len(profile.head)):
        if _mu_defect0(profile.block(i)) or _mu_defect1(profile.block(i), profile.block(i + 1)):
            last = i
    if last is None:
        if profile.cyc:
            raise WorkbenchError("periodic M-shaped words always carry recurring defects")
        j0 = pairs.m_index(profile.block(0)[1])
        if profile.lead > pairs.m_offset(j0 - 1):
            raise WorkbenchError(
                "carrier-shaped word whose leading run exceeds the address bound; "
                "it lies outside every carrier set and outside the mu-products"
            )
        return FiniteWord((), 4), profile.lead, j0
    letters = [2] * profile.lead
    for i in range(last + 1):
        m, p, rr = profile.block(i)
        letters += [m] + [2] * p + [3] + [2] * rr
    m1, p1, r1 = profile.block(last + 1)
    letters += [m1] + [2] * p1 + [3]
    j1 = pairs.m_index(profile.block(last + 2)[1])
    return FiniteWord(letters, 4), r1, j1


def f_map(w, budget: int = None):
    """Classification triple (t, S, j) of a word outside the mu-products.

    Raises NotInP without the M-shaped block structure and InMuOmega on
    mu-products.  On carrier words the triple is (empty, N, j+1)."""
    if isinstance(w, KnjEncodedWord):
        if mu_omega_member(w, budget) is Member.YES:
            raise InMuOmega(f"{w} is a mu-product")
        return _f_from_profile(_profile_of(w))
    if isinstance(w, LassoWord):
        profile = _profile_of(w)
        if profile is None or not _all_offsets(profile):
            raise NotInP(f"{w} lacks the M-valued infinite block shape")
        if _recurring_defect(profile):
            raise InMuOmega(f"{w} is a mu-product")
        raise WorkbenchError("periodic M-shaped words always carry recurring defects")
    raise TypeError(f"no classification for {w!r}")


def is_suitable(t, s_len: int, j: int, r=None) -> bool:
    """Can (t, S, j) classify a word?  S respects the address bound when t
    is empty; otherwise t is a mu-word ending with the letter 3; and in
    both cases appending 2^S m 2^{M_{j+1}} 3 must not land back in mu.

    The final argument is accepted for interface compatibility and ignored:
    the defining clauses never consult the tree."""
    if s_len < 0 or j < 0:
        raise WorkbenchError("S and j must be nonnegative")
    if t is None:
        t = FiniteWord((), 4)
    if len(t) == 0:
        if s_len > pairs.m_offset(j):
            return False
    else:
        if not mu_member(t):
            return False
        if t.letters[-1] != 3:
            return False
    run = pairs.m_offset(j + 1)
    for m in (0, 1):
        probe = FiniteWord(t.letters + (2,) * s_len + (m,) + (2,) * run + (3,), 4)
        if mu_member(probe):
            return False
    return True


# ---------------------------------------------------------------- carrier omega

def pi_omega_knj_member(w: KnjEncodedWord, r: RTreePresentation) -> bool:
    """Is the carrier word an infinite product of pi-words?

    Factor cuts can only split trailing 2-runs, M_{j+i+1} = p_i + r', and
    the next factor resumes at chain index p_i, so the pair chain marches
    through the blocks once and for all; a factorization exists iff
    accepted pairs can be hit infinitely often along the block letters.
    Works on the run-length block structure; letters are never materialized
    and ts_lasso_accepts is never consulted (the two stay independent)."""
    if not isinstance(w, KnjEncodedWord):
        raise TypeError("pi_omega_knj_member expects a carrier word")
    profile = _profile_of(w)
    mm = w.m
    u, v = mm.spoke.letters, mm.cycle.letters
    total = len(u) + len(v)

    def advance(ph):
        nxt = ph + 1
        return nxt if nxt < total else len(u)

    def block_letter(ph):
        m, p, rr = profile.block(ph)  # phases index blocks inside one period
        if p != rr:
            raise WorkbenchError("carrier block runs must agree")
        return m

    start = (r.run_pair(pairs.q_of_index(w.n)), 0)
    base = {}
    seen = {start}
    stack = [start]
    while stack:
        node = stack.pop()
        st, ph = node
        outs = []
        for b in (0, 1):
            st2 = r.step(st, b, block_letter(ph))
            node2 = (st2, advance(ph))
            outs.append((node2, b == 1 and st2 in r.live))
            if node2 not in seen:
                seen.add(node2)
                stack.append(node2)
        base[node] = outs
    def factor_targets(node):
        # cut states reachable by >= 1 blocks ending on an accepted pair
        out = set()
        visited = {node}
        queue = [node]
        while queue:
            cur = queue.pop(0)
            for node2, hit in base[cur]:
                if hit:
                    out.add(node2)
                if node2 not in visited:
                    visited.add(node2)
                    queue.append(node2)
        return out

    cuts = {node: factor_targets(node) for node in base}
    reachable = set(cuts[start])
    queue = list(reachable)
    while queue:
        cur = queue.pop(0)
        for nxt in cuts[cur]:
            if nxt not in reachable:
                reachable.add(nxt)
                queue.append(nxt)
    for c in reachable:
        frontier = set(cuts[c])
        queue = list(frontier)
        while queue:
            cur = queue.pop(0)
            if cur == c:
                return True
            for nxt in cuts[cur]:
                if nxt not in frontier:
                    frontier.add(nxt)
                    queue.append(nxt)
    return False


def a_omega_member(w, r: RTreePresentation, budget: int = None) -> Member:
    """Membership in the omega-power of the union language (mu plus pi).

    mu-products answer yes directly.  Otherwise the classification triple
    routes the query: carrier words reduce to pi_omega_knj_member (the
    empty-prefix class forces N = S and the word itself), and lassos
    outside the M-shaped class answer no."""
    verdict = mu_omega_member(w, budget)
    if verdict is Member.YES:
        return Member.YES
    if verdict is Member.INCONCLUSIVE:
        return Member.INCONCLUSIVE
    try:
        t, s_len, j0 = f_map(w, budget)
    except NotInP:
        return Member.NO
    jc = j0 - 1
    if len(t) == 0:
        if not is_suitable(t, s_len, jc):
            return Member.NO
        return Member.of(pi_omega_knj_member(w, r))
    # unreachable from lassos and carrier words (see module docstring)
    raise WorkbenchError("mu-prefixed classes have no representable members")
