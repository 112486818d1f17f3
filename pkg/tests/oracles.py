"""Brute-force reference implementations used to cross-check the library.

Nothing here calls into the code paths it checks; each function evaluates
a definition as literally as is practical.
"""
from itertools import permutations

from enact.terms import Interaction


def brute_interleavings(t1, t2):
    """Permutations of the tagged events of both traces that keep each trace's order."""
    tagged = [(0, i) for i in range(len(t1))] + [(1, j) for j in range(len(t2))]
    out = set()
    for perm in permutations(tagged):
        left = [i for side, i in perm if side == 0]
        right = [j for side, j in perm if side == 1]
        if left == sorted(left) and right == sorted(right):
            out.add(tuple(t1[i] if side == 0 else t2[i] for side, i in perm))
    return out


def brute_closure(pairs):
    """Warshall's algorithm over the elements named in ``pairs``."""
    nodes = sorted({x for p in pairs for x in p})
    reach = {(x, y): (x, y) in pairs for x in nodes for y in nodes}
    for k in nodes:
        for i in nodes:
            for j in nodes:
                if reach[i, k] and reach[k, j]:
                    reach[i, j] = True
    return {p for p, r in reach.items() if r}


def _before(trace, e1, e2):
    return any(
        trace[i] == e1 and trace[j] == e2
        for i in range(len(trace))
        for j in range(len(trace))
        if i <= j
    )


def brute_moi_before(moi, trace, i1, i2):
    a, b, m1 = i1.sender, i1.receiver, i1.message
    c, d, m2 = i2.sender, i2.receiver, i2.message
    s1, r1 = ("!", a, m1), ("?", b, m1)
    s2, r2 = ("!", c, m2), ("?", d, m2)
    first, second = {
        "SS": (s1, s2), "SR": (s1, r2), "RS": (r1, s2), "RR": (r1, r2),
    }[moi]
    keyed = tuple((e.kind.value, e.agent, e.message) for e in trace)
    return _before(keyed, first, second)


_SHAPES: dict = {}


def complete_shapes(n):
    """Orderings of the 2n events (k, 0)=send k and (k, 1)=receive k with each send first."""
    if n not in _SHAPES:
        events = [(k, s) for k in range(n) for s in (0, 1)]
        _SHAPES[n] = [
            p for p in permutations(events)
            if all(p.index((k, 0)) < p.index((k, 1)) for k in range(n))
        ]
    return _SHAPES[n]


def brute_moi_chain(chain, moi):
    """Event traces of ``I1 . I2 . ... . In`` under ``moi`` by permutation filtering.

    Works on the shapes directly: event (k, 0) is the send of interaction k
    and (k, 1) its receive, so each MOI picks one of each pair.
    """
    first = 0 if moi[0] == "S" else 1
    second = 0 if moi[1] == "S" else 1
    n = len(chain)
    out = set()
    for shape in complete_shapes(n):
        pos = {ev: p for p, ev in enumerate(shape)}
        if all(pos[k, first] <= pos[k + 1, second] for k in range(n - 1)):
            out.add(tuple(chain[k].send if s == 0 else chain[k].receive for k, s in shape))
    return out


def brute_lang_E(trace, interactions):  # noqa: N802
    dom = range(len(trace))
    sends = {i.send for i in interactions}
    receives = {i.receive for i in interactions}
    alphabet = sends | receives
    if any(e not in alphabet for e in trace):
        return False
    for i in dom:
        for j in dom:
            if trace[i] == trace[j] and trace[i] in sends and i != j:
                return False
            if trace[i] == trace[j] and trace[i] in receives and i != j:
                return False
    for i in dom:
        if trace[i] in receives:
            matching = [x.send for x in interactions if x.receive == trace[i]]
            if not any(trace[j] == matching[0] and j < i for j in dom):
                return False
    return True


def brute_causal(trace, e1, e2):
    """Least fixed point of the causal-send relation by Kleene iteration."""
    dom = range(len(trace))
    rel = set()
    for i in dom:
        for j in dom:
            x, y = trace[i], trace[j]
            if x.is_send and y.is_send and i < j and (x.agent == y.agent or x.message == y.message):
                rel.add((x, y))
    while True:
        sends = {e for e in trace if e.is_send}
        new = {(x, z) for x in sends for y in sends for z in sends if (x, y) in rel and (y, z) in rel}
        if new <= rel:
            return (e1, e2) in rel
        rel |= new


def _fifo_holds(trace, pairs):
    dom = range(len(trace))
    for p, q in pairs:
        for i in dom:
            if trace[i] != p.receive:
                continue
            for j in dom:
                if trace[j] != q.receive:
                    continue
                for k in dom:
                    if trace[k] != p.send:
                        continue
                    for l in dom:
                        if trace[l] == q.send and k < l and not i < j:
                            return False
    return True


def brute_in_cm(cm: int, trace, interactions):
    """Evaluate the communication-model formula by enumerating the quantified indices."""
    interactions = list(interactions)
    if not brute_lang_E(trace, interactions):
        return False
    dom = range(len(trace))
    if cm == 1:
        for x in interactions:
            for k in dom:
                if k >= 1 and trace[k - 1] == x.send and trace[k] != x.receive:
                    return False
        return True
    if cm == 2:
        return _fifo_holds(trace, [(p, q) for p in interactions for q in interactions])
    if cm == 3:
        return _fifo_holds(trace, [(p, q) for p in interactions for q in interactions if p.sender == q.sender])
    if cm == 4:
        return _fifo_holds(trace, [(p, q) for p in interactions for q in interactions if p.receiver == q.receiver])
    if cm == 5:
        for p in interactions:
            for q in interactions:
                if (p.sender, p.receiver) != (q.sender, q.receiver):
                    continue
                for i in dom:
                    for j in dom:
                        if trace[i] == p.receive and trace[j] == q.receive and brute_causal(trace, p.send, q.send) and not i < j:
                            return False
        return True
    return True


def well_formed_traces(interactions, max_len=None):
    """Every trace in the well-formed language over ``interactions`` (partial ones included)."""
    interactions = list(interactions)
    events = [i.send for i in interactions] + [i.receive for i in interactions]
    sender_of = {i.receive: i.send for i in interactions}
    out = []

    def grow(prefix, used):
        out.append(tuple(prefix))
        if max_len is not None and len(prefix) >= max_len:
            return
        for e in events:
            if e in used:
                continue
            if e in sender_of and sender_of[e] not in used:
                continue
            prefix.append(e)
            used.add(e)
            grow(prefix, used)
            used.discard(e)
            prefix.pop()

    grow([], set())
    return out


def canonical_chains(n_max, n_agents):
    """Chains of interactions up to agent renaming (agents named by first use)."""
    names = "abcdefgh"[:n_agents]
    result = []

    def grow(chain, used):
        if chain:
            result.append(tuple(chain))
        if len(chain) == n_max:
            return
        pool = list(names[:used]) + ([names[used]] if used < n_agents else [])
        for s in pool:
            s_used = max(used, names.index(s) + 1)
            pool2 = list(names[:s_used]) + ([names[s_used]] if s_used < n_agents else [])
            for r in pool2:
                if r == s:
                    continue
                r_used = max(s_used, names.index(r) + 1)
                chain.append(Interaction(s, r, f"M{len(chain) + 1}"))
                grow(chain, r_used)
                chain.pop()

    grow([], 0)
    return result


def canonical_interaction_sets(n_max, n_agents):
    """Distinct sets of the chains' interactions, up to renaming agents and messages.

    Membership in a communication model ignores the order a chain lists its
    interactions in, and only compares names for equality, so one
    representative per isomorphism class covers every chain.
    """
    names = "abcdefgh"[:n_agents]
    reps = {}
    for chain in canonical_chains(n_max, n_agents):
        best = None
        for perm in permutations(names):
            rename = dict(zip(names, perm))
            key = tuple(sorted((rename[i.sender], rename[i.receiver]) for i in chain))
            if best is None or key < best:
                best = key
        reps.setdefault(best, tuple(Interaction(s, r, f"M{k + 1}") for k, (s, r) in enumerate(best)))
    return list(reps.values())
