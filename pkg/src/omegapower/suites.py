"""Verification suites: bounded dual-route comparisons with JSON reports.

Every suite runs two independent routes to the same answers over a bounded
corpus and reports case counts plus capped counterexamples.  Reports
serialize to canonical JSON (sorted keys, no volatile fields); wall-clock
time stays on the object for display but out of the canonical form, so
identical runs produce identical bytes.
"""

import itertools
import json
import time

from . import pairs
from .automata import (
    lasso_accepts,
    omega_power_automaton,
    pinf_member,
    xi1_sigma_witness,
    zero_star_one_automaton,
    zero_word_automaton,
)
from .construction import a_member, a_omega_member, f_map, mu_omega_member, pi_omega_knj_member
from .corpus import corpus_lassos, random_lassos
from .erasing import (
    a3_omega_member,
    b2_omega_member,
    e_counter_member,
    e_def_member,
    e_preimage_check,
    t_member,
)
from .errors import WorkbenchError
from .knj import KnjAddress, knj_prefix_consistent, phi, phi_inverse
from .oracles import enumerate_pairs, omega_factor_evidence
from .rtree import diag_tree, full_tree, ts_lasso_accepts
from .verdicts import Member
from .words import FiniteWord, KnjEncodedWord, LassoWord, prefix

VERSION = "0.1.0"

EXAMPLE_CAP = 10


class _Collector:
    def __init__(self):
        self.total = 0
        self.failed = 0
        self.inconclusive = 0
        self.examples = []

    def case(self, literal, expected, got):
        self.total += 1
        if expected != got:
            self.fail_only(literal, expected, got)

    def fail_only(self, literal, expected, got):
        self.failed += 1
        if len(self.examples) < EXAMPLE_CAP:
            self.examples.append([str(literal), str(expected), str(got)])

    def bulk_pass(self, count):
        self.total += count

    def undecided(self, literal):
        self.total += 1
        self.inconclusive += 1


class SuiteReport:
    def __init__(self, suite, parameters, collector, runtime_ms):
        self.suite = suite
        self.parameters = parameters
        self.cases_total = collector.total
        self.cases_failed = collector.failed
        self.cases_inconclusive = collector.inconclusive
        self.counterexamples = collector.examples
        self.runtime_ms = runtime_ms
        self.version = VERSION

    @property
    def verdict(self):
        if self.cases_failed:
            return "fail"
        if self.cases_inconclusive:
            return "inconclusive"
        return "pass"

    def to_json(self):
        return json.dumps(
            {
                "suite": self.suite,
                "parameters": self.parameters,
                "cases_total": self.cases_total,
                "cases_failed": self.cases_failed,
                "cases_inconclusive": self.cases_inconclusive,
                "counterexamples": self.counterexamples,
                "verdict": self.verdict,
                "version": self.version,
            },
            sort_keys=True,
            indent=2,
        ) + "\n"

    def summary(self):
        return (
            f"{self.suite}: {self.verdict} ({self.cases_total} cases, "
            f"{self.cases_failed} failed, {self.cases_inconclusive} inconclusive, "
            f"{self.runtime_ms} ms)"
        )


def _resolve_tree(tree):
    if tree is None or tree == "full":
        return full_tree()
    if tree == "diag":
        return diag_tree()
    return tree  # already an RTreePresentation


# ------------------------------------------------------------- corpora

def _words3_up_to(bound):
    """All letter tuples over {0,1,2} of length <= bound."""
    out = []
    for length in range(bound + 1):
        out.extend(itertools.product((0, 1, 2), repeat=length))
    return out


def _t_raw(letters):
    c = 0
    for x in letters:
        c += (x == 1) - (x == 2)
        if c < 0:
            return False
    return True


def _erase_raw(letters):
    emitted = []
    live = []
    for x in letters:
        if x == 2:
            emitted[live.pop()] = 0
        elif x == 1:
            live.append(len(emitted))
            emitted.append(1)
        else:
            emitted.append(0)
    return tuple(emitted)


def _knj_grid(max_j, m_bound):
    """Carrier addresses with j <= max_j (all N) crossed with small binary
    block lassos."""
    ms = list(corpus_lassos(2, m_bound, m_bound))
    for j in range(max_j + 1):
        for n in range(pairs.m_offset(j) + 1):
            for m in ms:
                yield KnjEncodedWord(n, j, m)


# ------------------------------------------------------------- suites

def _suite_pair_enum_roundtrip(bound, seed, tree, budget):
    bound = 10_000 if bound is None else bound
    col = _Collector()
    misses = 0
    for n in range(bound):
        if pairs.index_of_q(pairs.q_of_index(n)) != n:
            misses += 1
            col.fail_only(f"q_{n}", n, pairs.index_of_q(pairs.q_of_index(n)))
    col.bulk_pass(bound - misses)
    for n, p in enumerate(enumerate_pairs(3)):
        col.case(f"order_{n}", str(p), str(pairs.q_of_index(n)))
    for j in range(7):
        expect = pairs.QPair((1,) * j, (1,) * j)
        col.case(f"offset_{j}", str(expect), str(pairs.q_of_index(pairs.m_offset(j))))
    for n in range(min(bound, 200)):
        q = pairs.q_of_index(n)
        for m in (0, 1):
            for p in sorted(pairs.successors(n, m)):
                ext = pairs.q_of_index(p)
                ok = (
                    ext.alpha == q.alpha + (m,)
                    and ext.beta[: len(q)] == q.beta
                    and len(ext) == len(q) + 1
                )
                col.case(f"step_{n}_{m}_{p}", True, ok)
    return {"bound": bound}, col


def _suite_erase_homomorphism(bound, seed, tree, budget):
    bound = 6 if bound is None else bound
    col = _Collector()
    words = [w for w in _words3_up_to(bound) if _t_raw(w)]
    images = {w: _erase_raw(w) for w in words}
    misses = 0
    erase = _erase_raw
    for s in words:
        es = images[s]
        for t in words:
            if erase(s + t) != es + images[t]:
                misses += 1
                col.fail_only(
                    "".join(map(str, s)) + "|" + "".join(map(str, t)),
                    es + images[t],
                    erase(s + t),
                )
    col.bulk_pass(len(words) * len(words) - misses)
    return {"bound": bound, "words": len(words)}, col


def _suite_e_dual(bound, seed, tree, budget):
    bound = 10 if bound is None else bound
    col = _Collector()
    misses = 0
    count = 0
    for w in _words3_up_to(bound):
        count += 1
        if e_def_member(w) != e_counter_member(w):
            misses += 1
            col.fail_only(
                "".join(map(str, w)) or "ε", e_def_member(w), e_counter_member(w)
            )
    col.bulk_pass(count - misses)
    return {"bound": bound}, col


SIGMA2_SAMPLES = 10_000


def _suite_sigma2_main(bound, seed, tree, budget):
    bound = 4 if bound is None else bound
    seed = 20260814 if seed is None else seed
    budget = 10_000 if budget is None else budget
    col = _Collector()
    cases = list(corpus_lassos(3, bound, bound, keep=t_member))
    pool = set(cases)
    for w in random_lassos(3, SIGMA2_SAMPLES, 8, 8, seed, keep=t_member):
        if w not in pool:
            pool.add(w)
            cases.append(w)
    for w in cases:
        got = a3_omega_member(w, budget)
        want = e_preimage_check(w, budget)
        if Member.INCONCLUSIVE in (got, want):
            col.undecided(w)
        else:
            col.case(w, want.value, got.value)
    return {"bound": bound, "seed": seed, "budget": budget, "samples": SIGMA2_SAMPLES}, col


def _suite_xi_low(bound, seed, tree, budget):
    bound = 5 if bound is None else bound
    col = _Collector()
    zero_power = omega_power_automaton(zero_word_automaton())
    ones_power = omega_power_automaton(zero_star_one_automaton())
    xi1_power = omega_power_automaton(xi1_sigma_witness())
    zero_lasso = LassoWord((), (0,), size=2)
    for w in corpus_lassos(2, bound, bound):
        col.case(f"zero {w}", w == zero_lasso, lasso_accepts(zero_power, w))
        col.case(f"ones {w}", pinf_member(w), lasso_accepts(ones_power, w))
        col.case(f"xi1 {w}", b2_omega_member(w), lasso_accepts(xi1_power, w))
    return {"bound": bound}, col


def _suite_knj_roundtrip(bound, seed, tree, budget):
    bound = 2000 if bound is None else bound
    col = _Collector()
    for w in _knj_grid(2, 2):
        addr = KnjAddress(w.n, w.j)
        col.case(f"phi {w}", str(w.m), str(phi(phi_inverse(w.m, addr))))
        head = prefix(w, bound)
        col.case(f"consistent {w}", True, knj_prefix_consistent(head, addr))
        # The negative checks only bite once the prefix reaches the first
        # position where the two carrier shapes disagree.
        if w.n + 1 <= pairs.m_offset(w.j) and bound > w.n:
            wrong = KnjAddress(w.n + 1, w.j)
            col.case(f"shifted {w}", False, knj_prefix_consistent(head, wrong))
        if bound >= w.n + pairs.m_offset(w.j + 1) + 2:
            wrong_j = KnjAddress(w.n, w.j + 1)
            col.case(f"misfiled {w}", False, knj_prefix_consistent(head, wrong_j))
    return {"bound": bound}, col


def _suite_theorem2_key_equality(bound, seed, tree, budget):
    bound = 4 if bound is None else bound
    col = _Collector()
    ms = list(corpus_lassos(2, bound, bound))
    for r in (full_tree(), diag_tree()):
        for j in range(3):
            for n in range(pairs.m_offset(j) + 1):
                for m in ms:
                    w = KnjEncodedWord(n, j, m)
                    col.case(
                        f"{r.name} {w}",
                        ts_lasso_accepts(r, n, m),
                        pi_omega_knj_member(w, r),
                    )
    return {"bound": bound}, col


def _suite_mu_knj_disjoint(bound, seed, tree, budget):
    bound = 2 if bound is None else bound
    col = _Collector()
    for w in _knj_grid(2, bound):
        col.case(f"mu {w}", Member.NO.value, mu_omega_member(w).value)
        t, s_len, j1 = f_map(w)
        ok = len(t) == 0 and s_len == w.n and j1 == w.j + 1
        col.case(f"triple {w}", True, ok)
    return {"bound": bound}, col


def _mu_like(tree):
    def member(s):
        return a_member(s, tree)

    return member


def _curated_a_omega():
    """Hand-built block-shaped lassos with known mu-defect behavior."""
    m1, m2 = pairs.m_offset(1), pairs.m_offset(2)
    blk = lambda m, p, r: (m,) + (2,) * p + (3,) + (2,) * r
    return [
        LassoWord((), blk(1, m1, m1), size=4),
        LassoWord((), blk(1, m1, m1) + blk(0, m2, m2), size=4),
        LassoWord((), blk(1, m1, 2) + blk(0, m1, m1), size=4),
        LassoWord((2,) * 3, blk(0, m1, m1), size=4),
        LassoWord((), blk(1, 5, 5), size=4),
        LassoWord((1, 3), (2,), size=4),
        LassoWord((), (0,), size=4),
        LassoWord((), (2, 3), size=4),
    ]


def _suite_a_omega_decomposition(bound, seed, tree, budget):
    bound = 3 if bound is None else bound
    seed = 20260814 if seed is None else seed
    r = _resolve_tree(tree)
    col = _Collector()
    member = _mu_like(r)
    cases = list(corpus_lassos(4, 2, bound))
    pool = set(cases)
    for w in itertools.chain(_curated_a_omega(), random_lassos(4, 200, 6, 6, seed)):
        if w not in pool:
            pool.add(w)
            cases.append(w)
    for w in cases:
        got = a_omega_member(w, r)
        cap = 4 * (len(w.spoke) + len(w.cycle)) + 8
        want = omega_factor_evidence(w, member, cap)
        col.case(w, want.value, got.value)
    for w in _knj_grid(1, 2):
        got = a_omega_member(w, r)
        want = Member.of(ts_lasso_accepts(r, w.n, w.m))
        col.case(w, want.value, got.value)
    return {"bound": bound, "seed": seed, "tree": r.name}, col


SUITES = {
    "pair-enum-roundtrip": _suite_pair_enum_roundtrip,
    "erase-homomorphism": _suite_erase_homomorphism,
    "E-dual-characterization": _suite_e_dual,
    "sigma2-main": _suite_sigma2_main,
    "xi-low-witnesses": _suite_xi_low,
    "knj-roundtrip": _suite_knj_roundtrip,
    "theorem2-key-equality": _suite_theorem2_key_equality,
    "mu-knj-disjoint": _suite_mu_knj_disjoint,
    "a-omega-decomposition": _suite_a_omega_decomposition,
}


def run_suite(name, bound=None, seed=None, tree=None, budget=None) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise WorkbenchError(
            f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}"
        ) from None
    t0 = time.monotonic()
    params, col = fn(bound=bound, seed=seed, tree=tree, budget=budget)
    runtime_ms = int((time.monotonic() - t0) * 1000)
    return SuiteReport(name, params, col, runtime_ms)
