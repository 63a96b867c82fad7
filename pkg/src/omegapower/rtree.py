"""Prefix-closed binary-pair trees presented as complete DFAs.

A presentation runs over the pair alphabet {(b,a) : b,a in {0,1}}; a pair of
equal-length binary words belongs to the tree iff reading its letter list
from the initial state ends in a live state.  Prefix closure is structural:
the initial state is live and no transition out of a non-live state enters a
live one, so once a run dies it stays dead.

JSON delta keys are two digits, guessed branch bit first: key "ba" covers
the pair letter (beta bit b, alpha bit a).

ts_lasso_accepts(r, start, alpha) decides whether, starting from pair index
`start`, the input lasso alpha can be read with guessed bits so that
accepted pairs (nonempty guessed part ending in 1, pair inside the tree)
occur infinitely often.  Accepted lassos come with a replayable witness of
guessed bits.
"""

import json
from dataclasses import dataclass

from . import pairs
from .errors import WorkbenchError
from .words import LassoWord

_KEYS = ("00", "01", "10", "11")


@dataclass(frozen=True)
class RTreePresentation:
    name: str
    states: tuple
    initial: str
    live: frozenset
    delta: dict  # state -> {"ba": state}

    def validate(self):
        if self.initial not in self.states:
            raise WorkbenchError("initial state unknown")
        if self.initial not in self.live:
            raise WorkbenchError("initial state must be live (the empty pair is in every tree)")
        for q in self.live:
            if q not in self.states:
                raise WorkbenchError(f"live state {q!r} unknown")
        for q in self.states:
            row = self.delta.get(q)
            if row is None or sorted(row) != sorted(_KEYS):
                raise WorkbenchError(f"state {q!r} must have all four pair transitions")
            for key, t in row.items():
                if t not in self.states:
                    raise WorkbenchError(f"transition into unknown state {t!r}")
                if q not in self.live and t in self.live:
                    raise WorkbenchError(
                        f"prefix closure violated: dead state {q!r} reaches live {t!r} on {key}"
                    )
        return self

    def step(self, state, b: int, a: int):
        return self.delta[state][f"{b}{a}"]

    def run_pair(self, pair: pairs.QPair):
        state = self.initial
        for b, a in pair.letters():
            state = self.step(state, b, a)
        return state


def full_tree() -> RTreePresentation:
    return RTreePresentation(
        name="full",
        states=("live",),
        initial="live",
        live=frozenset({"live"}),
        delta={"live": {k: "live" for k in _KEYS}},
    ).validate()


def diag_tree() -> RTreePresentation:
    """Pairs whose components are equal."""
    return RTreePresentation(
        name="diag",
        states=("eq", "bad"),
        initial="eq",
        live=frozenset({"eq"}),
        delta={
            "eq": {"00": "eq", "11": "eq", "01": "bad", "10": "bad"},
            "bad": {k: "bad" for k in _KEYS},
        },
    ).validate()


def tree_from_json(text: str, name: str = "custom") -> RTreePresentation:
    try:
        data = json.loads(text)
        delta = {q: dict(row) for q, row in data["delta"].items()}
        return RTreePresentation(
            name=data.get("name", name),
            states=tuple(data["states"]),
            initial=data["initial"],
            live=frozenset(data["live"]),
            delta=delta,
        ).validate()
    except WorkbenchError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise WorkbenchError(f"malformed tree document: {exc}") from exc


def tree_to_json(r: RTreePresentation) -> str:
    return json.dumps(
        {
            "name": r.name,
            "states": list(r.states),
            "initial": r.initial,
            "live": sorted(r.live),
            "delta": {q: dict(sorted(row.items())) for q, row in sorted(r.delta.items())},
        },
        indent=2,
        sort_keys=True,
    )


def r_contains(r: RTreePresentation, pair: pairs.QPair) -> bool:
    return r.run_pair(pair) in r.live


def qf_member(r: RTreePresentation, n: int) -> bool:
    """Accepting pair indices: guessed part nonempty, ends in 1, pair in r."""
    p = pairs.q_of_index(n)
    if not p.beta or p.beta[-1] != 1:
        return False
    return r_contains(r, p)


def _product(r: RTreePresentation, start: int, alpha: LassoWord):
    """Reachable product graph of (tree state, lasso position) under free
    guessed bits.  Edge payload: (target node, guessed bit, accepting hit)."""
    u, v = alpha.spoke.letters, alpha.cycle.letters
    total = len(u) + len(v)

    def letter(pos):
        return u[pos] if pos < len(u) else v[pos - len(u)]

    def advance(pos):
        nxt = pos + 1
        return nxt if nxt < total else len(u)

    for x in u + v:
        if x not in (0, 1):
            raise WorkbenchError("input lasso must be binary")
    start_state = r.run_pair(pairs.q_of_index(start))
    root = (start_state, 0)
    edges = {}
    stack = [root]
    seen = {root}
    while stack:
        st, pos = stack.pop()
        a = letter(pos)
        out = []
        for b in (0, 1):
            st2 = r.step(st, b, a)
            node = (st2, advance(pos))
            hit = b == 1 and st2 in r.live
            out.append((node, b, hit))
            if node not in seen:
                seen.add(node)
                stack.append(node)
        edges[(st, pos)] = out
    return root, edges


def _path(edges, src, dst):
    """Guessed-bit choices along a shortest path src -> dst ([] if equal)."""
    if src == dst:
        return []
    back = {}
    queue = [src]
    while queue:
        cur = queue.pop(0)
        for node, b, _ in edges[cur]:
            if node in back or node == src:
                continue
            back[node] = (cur, b)
            if node == dst:
                choices = []
                while node != src:
                    prev, bb = back[node]
                    choices.append(bb)
                    node = prev
                return list(reversed(choices))
            queue.append(node)
    return None


def ts_lasso_witness(r: RTreePresentation, start: int, alpha: LassoWord):
    """A replayable run witness: guessed bits for a path to a loop that
    contains an accepting hit, or None if no accepting run exists."""
    root, edges = _product(r, start, alpha)
    for src, out in edges.items():
        for node, b, hit in out:
            if not hit:
                continue
            closing = _path(edges, node, src)
            if closing is None:
                continue
            lead = _path(edges, root, src)
            if lead is None:
                continue
            return {
                "start_index": start,
                "prefix": lead,
                "loop": [b] + closing,
            }
    return None


def ts_lasso_accepts(r: RTreePresentation, start: int, alpha: LassoWord) -> bool:
    return ts_lasso_witness(r, start, alpha) is not None


def ts_replay(r: RTreePresentation, start: int, alpha: LassoWord, witness) -> bool:
    """Check a witness: replay its guessed bits and confirm the loop closes
    on the same product node and contains a hit."""
    u, v = alpha.spoke.letters, alpha.cycle.letters
    total = len(u) + len(v)

    def letter(pos):
        return u[pos] if pos < len(u) else v[pos - len(u)]

    def advance(pos):
        nxt = pos + 1
        return nxt if nxt < total else len(u)

    state = r.run_pair(pairs.q_of_index(witness["start_index"]))
    pos = 0
    for b in witness["prefix"]:
        state = r.step(state, b, letter(pos))
        pos = advance(pos)
    anchor = (state, pos)
    hit = False
    if not witness["loop"]:
        return False
    for b in witness["loop"]:
        state = r.step(state, b, letter(pos))
        pos = advance(pos)
        if b == 1 and state in r.live:
            hit = True
    return hit and (state, pos) == anchor and witness["start_index"] == start


def derived_b_member(r: RTreePresentation, alpha: LassoWord) -> bool:
    """The omega-language coded by the tree, evaluated from the root."""
    return ts_lasso_accepts(r, 0, alpha)


def load_tree(source: str) -> RTreePresentation:
    """Resolve "full", "diag", or a JSON file path."""
    if source == "full":
        return full_tree()
    if source == "diag":
        return diag_tree()
    with open(source, "r", encoding="utf-8") as fh:
        return tree_from_json(fh.read())
