"""Admissible edge labelings of trees and their signed enumeration.

Vertices of an n-tree carry integer labels k_1..k_n; the working quantity is
always the shifted label k_v + v.  An edge labeling l_1..l_{n-1} (shifted:
l_e + e) is admissible for (T, k) when every edge e = (p, q) satisfies

    min(k_p+p, k_q+q) <= l_e + e < max(k_p+p, k_q+q),

which is impossible if the endpoint labels coincide.  An edge whose tail
carries the larger label is an inversion.

A tree-sequence labeling chain (T_1..T_n, l_1..l_n) fixes l_n = k and asks
l_{i-1} to be admissible for (T_i, l_i); its sign is (-1)^{#inversions}
times the product of the tree signs.  ``signed_count`` evaluates the signed
total without materializing the chains, by a memoized recursion over levels.

The "weak" machinery pins selected edges to the labels of selected vertices
(one pinned edge per chosen vertex, exclusions keeping the pin unique) and
is what finite differences of the signed count turn into: applying the
forward difference in the coordinates of a vertex set R turns the level-m
admissibility into weak R-admissibility.
"""

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, product

from .trees import tree_sign


@dataclass(frozen=True)
class AdmissibleLabeling:
    labels: tuple            # l_1..l_{n-1}, unshifted
    inversions: frozenset    # edge names


@dataclass(frozen=True)
class GTTreeSequence:
    levels: tuple            # (l_1, ..., l_n), level i is an i-tuple, l_n = k
    inversions: tuple        # sorted tuple of (level, edge name) pairs
    sign: int

    def to_json(self):
        return {"levels": [list(l) for l in self.levels],
                "inversions": [list(p) for p in self.inversions],
                "sign": self.sign}


def shifted_vertex_labels(k):
    """k_v + v for v = 1..n, as a dict."""
    return {v: kv + v for v, kv in enumerate(k, start=1)}


def inversion_edges(tree, k):
    """Edge names whose tail label exceeds the head label.

    Returns None when some edge has equal endpoint labels (no admissible
    labeling exists at all in that case).
    """
    lab = shifted_vertex_labels(k)
    out = []
    for name in tree.edge_names():
        t, h = tree.edge(name)
        if lab[t] == lab[h]:
            return None
        if lab[t] > lab[h]:
            out.append(name)
    return frozenset(out)


def _edge_ranges(tree, k):
    """Per-edge unshifted admissible values, or None if an edge is blocked."""
    lab = shifted_vertex_labels(k)
    ranges = []
    for name in tree.edge_names():
        t, h = tree.edge(name)
        lo, hi = lab[t], lab[h]
        if lo == hi:
            return None
        if lo > hi:
            lo, hi = hi, lo
        ranges.append(range(lo - name, hi - name))   # shifted value in [lo, hi)
    return ranges


def admissible_labelings(tree, k):
    """All admissible labelings of (tree, k), lexicographic in l."""
    ranges = _edge_ranges(tree, k)
    if ranges is None:
        return []
    inv = inversion_edges(tree, k)
    return [AdmissibleLabeling(l, inv) for l in product(*ranges)]


class SequenceCounter:
    """Signed enumeration of labeling chains over one tree sequence.

    Memo tables are shared across evaluation points, which is what makes
    grid sweeps cheap: the level-i table is keyed by the level-i vector.
    """

    def __init__(self, seq):
        self.seq = seq
        self.tree_sign = seq.sign()
        self._memo = [None] + [dict() for _ in range(seq.order)]

    def _raw(self, level, values):
        if level == 1:
            return 1
        memo = self._memo[level]
        try:
            return memo[values]
        except KeyError:
            pass
        tree = self.seq.tree(level)
        ranges = _edge_ranges(tree, values)
        if ranges is None:
            memo[values] = 0
            return 0
        inv = inversion_edges(tree, values)
        total = 0
        for l in product(*ranges):
            total += self._raw(level - 1, l)
        result = (-1) ** len(inv) * total
        memo[values] = result
        return result

    def __call__(self, k):
        k = tuple(k)
        if len(k) != self.seq.order:
            raise ValueError("k must have length %d" % self.seq.order)
        return self.tree_sign * self._raw(self.seq.order, k)


def signed_count(seq, k):
    """Signed number of labeling chains for (seq, k)."""
    return SequenceCounter(seq)(k)


def enumerate_sequences(seq, k):
    """All labeling chains, sorted lexicographically on (l_1, l_2, ...).

    Each chain records per-level inversions and its sign including the tree
    sequence sign.  Materializes the whole set; use signed_count for totals.
    """
    n = seq.order
    k = tuple(k)
    base_sign = seq.sign()
    out = []

    def descend(level, values, levels_acc, inv_acc):
        if level == 1:
            levels = tuple(reversed(levels_acc + [values]))
            inversions = tuple(sorted(inv_acc))
            sign = base_sign * (-1) ** len(inversions)
            out.append(GTTreeSequence(levels, inversions, sign))
            return
        tree = seq.tree(level)
        ranges = _edge_ranges(tree, values)
        if ranges is None:
            return
        inv = inversion_edges(tree, values)
        tagged = [(level, e) for e in sorted(inv)]
        for l in product(*ranges):
            descend(level - 1, l, levels_acc + [values], inv_acc + tagged)

    descend(n, k, [], [])
    out.sort(key=lambda g: g.levels)
    return out


# --- weak admissibility -------------------------------------------------


@dataclass(frozen=True)
class WeakWitness:
    """One weakly R-admissible labeling with its bookkeeping.

    ``assignment`` maps each pinned vertex r to its pinned edge i(r);
    ``dominating`` maps each doubly pinned edge to the endpoint chosen as the
    edge's maximum.  ``min_pinned`` lists the r in R that sit at the minimum
    of their own pinned edge (each contributes -1 to the sign, on top of the
    -1 per inversion edge).  ``strict`` marks injective assignments.
    """
    labels: tuple
    assignment: tuple        # sorted tuple of (vertex, edge name)
    dominating: tuple        # sorted tuple of (edge name, vertex)
    inversions: frozenset
    min_pinned: frozenset
    sign: int
    strict: bool


def weak_admissible_witnesses(tree, k, R):
    """All weak witnesses for the vertex set R (R empty: plain admissibility).

    For each r in R exactly one incident edge carries the label k_r + r; the
    other edges obey the usual open-ended interval but may not touch the
    label of any endpoint that lies in R.  Edges pinned from both sides earn
    one witness per choice of dominating endpoint.
    """
    R = tuple(sorted(R))
    n = tree.n
    if any(not 1 <= r <= n for r in R):
        raise ValueError("R must consist of vertices")
    lab = shifted_vertex_labels(k)
    names = list(tree.edge_names())

    if not R:
        plain = admissible_labelings(tree, k)
        return [WeakWitness(a.labels, (), (), a.inversions, frozenset(),
                            (-1) ** len(a.inversions), True)
                for a in plain]

    out = []
    incident = {r: tree.incident_edges(r) for r in R}
    for choice in product(*(incident[r] for r in R)):
        assignment = dict(zip(R, choice))
        pins = {}
        ok = True
        for r, e in assignment.items():
            val = lab[r]
            if pins.get(e, val) != val:
                ok = False
                break
            pins[e] = val
        if not ok:
            continue
        # uniqueness: no second pinned edge at a pinned vertex may carry its label
        for r in R:
            for e in incident[r]:
                if e != assignment[r] and e in pins and pins[e] == lab[r]:
                    ok = False
        if not ok:
            continue
        by_edge = defaultdict(list)
        for r, e in assignment.items():
            by_edge[e].append(r)
        free = [e for e in names if e not in pins]
        value_lists = []
        for e in free:
            t, h = tree.edge(e)
            lo, hi = min(lab[t], lab[h]), max(lab[t], lab[h])
            excluded = {lab[v] for v in (t, h) if v in set(R)}
            vals = [x for x in range(lo, hi) if x not in excluded]
            value_lists.append(vals)
        shared = sorted(e for e, rs in by_edge.items() if len(rs) == 2)
        for combo in product(*value_lists):
            shifted = dict(pins)
            shifted.update(zip(free, combo))
            for dom_choice in product(*(by_edge[e] for e in shared)):
                dominating = dict(zip(shared, dom_choice))
                inversions = []
                maxima = {}
                for e in names:
                    t, h = tree.edge(e)
                    if lab[t] != lab[h]:
                        mx = t if lab[t] > lab[h] else h
                    elif e in dominating:
                        mx = dominating[e]
                    else:
                        (mx,) = by_edge[e]
                    maxima[e] = mx
                    if t == mx:
                        inversions.append(e)
                min_pinned = frozenset(r for r in R if maxima[assignment[r]] != r)
                sign = (-1) ** len(inversions) * (-1) ** len(min_pinned)
                labels = tuple(shifted[e] - e for e in names)
                out.append(WeakWitness(labels,
                                       tuple(sorted(assignment.items())),
                                       tuple(sorted(dominating.items())),
                                       frozenset(inversions), min_pinned,
                                       sign, not shared))
    out.sort(key=lambda w: (w.labels, w.assignment, w.dominating))
    return out


def edge_admissible_witnesses(tree, k, edge_set):
    """Witnesses for the edge-pinned variant: each edge r in edge_set carries
    the label of one of its endpoints t(r), the map t is injective, and the
    pinned edge of each chosen vertex is unique.  Remaining edges follow the
    usual interval, avoiding the labels of chosen endpoints."""
    edge_set = tuple(sorted(edge_set))
    lab = shifted_vertex_labels(k)
    names = list(tree.edge_names())
    if any(e not in names for e in edge_set):
        raise ValueError("edge_set must consist of edge names")
    out = []
    endpoint_options = [tree.edge(e) for e in edge_set]
    for targets in product(*endpoint_options):
        if len(set(targets)) != len(targets):
            continue                       # t must be injective
        t_map = dict(zip(edge_set, targets))
        pins = {e: lab[v] for e, v in t_map.items()}
        chosen = set(targets)
        ok = True
        for e, v in t_map.items():
            for other in tree.incident_edges(v):
                if other == e:
                    continue
                if other in pins and pins[other] == lab[v]:
                    ok = False             # second pinned edge carries the label
        if not ok:
            continue
        free = [e for e in names if e not in pins]
        value_lists = []
        for e in free:
            p, q = tree.edge(e)
            lo, hi = min(lab[p], lab[q]), max(lab[p], lab[q])
            excluded = {lab[v] for v in (p, q) if v in chosen}
            value_lists.append([x for x in range(lo, hi) if x not in excluded])
        for combo in product(*value_lists):
            shifted = dict(pins)
            shifted.update(zip(free, combo))
            inversions = []
            minima = {}
            for e in names:
                p, q = tree.edge(e)
                if lab[p] != lab[q]:
                    mx = p if lab[p] > lab[q] else q
                else:
                    mx = t_map[e]          # equal labels force e into edge_set
                minima[e] = q if mx == p else p
                if p == mx:
                    inversions.append(e)
            pinned_minima = frozenset(e for e in edge_set if t_map[e] == minima[e])
            sign = (-1) ** len(inversions) * (-1) ** len(pinned_minima)
            labels = tuple(shifted[e] - e for e in names)
            out.append(WeakWitness(labels,
                                   tuple(sorted((v, e) for e, v in t_map.items())),
                                   (), frozenset(inversions),
                                   pinned_minima, sign, True))
    out.sort(key=lambda w: (w.labels, w.assignment))
    return out


class RestrictedCounter:
    """Signed enumeration with one level replaced by a pinned variant.

    mode "vertex": level m uses weak R-admissibility (R a set of vertices of
    T_m); mode "edge": level m uses the edge-pinned variant (R a set of edge
    names of T_m).  Levels other than m are ordinary.
    """

    def __init__(self, seq, m, R, mode="vertex"):
        if not 2 <= m <= seq.order:
            raise ValueError("restriction level out of range")
        self.seq = seq
        self.m = m
        self.R = tuple(sorted(R))
        self.mode = mode
        self.tree_sign = seq.sign()
        self._plain = SequenceCounter(seq)
        self._memo = [None] + [dict() for _ in range(seq.order)]

    def _witnesses(self, tree, values):
        if self.mode == "vertex":
            return weak_admissible_witnesses(tree, values, self.R)
        if self.mode == "edge":
            return edge_admissible_witnesses(tree, values, self.R)
        raise ValueError("unknown mode %r" % self.mode)

    def _count(self, level, values):
        if level < self.m:
            return self._plain._raw(level, values)
        memo = self._memo[level]
        try:
            return memo[values]
        except KeyError:
            pass
        tree = self.seq.tree(level)
        if level == self.m:
            total = 0
            for w in self._witnesses(tree, values):
                total += w.sign * self._plain._raw(level - 1, w.labels)
        else:
            ranges = _edge_ranges(tree, values)
            if ranges is None:
                memo[values] = 0
                return 0
            inv = inversion_edges(tree, values)
            total = 0
            for l in product(*ranges):
                total += self._count(level - 1, l)
            total *= (-1) ** len(inv)
        memo[values] = total
        return total

    def __call__(self, k):
        return self.tree_sign * self._count(self.seq.order, tuple(k))


def restricted_signed_count(seq, k, m, R=(), mode="vertex"):
    """Signed count with level m pinned on the vertex set (or edge set) R."""
    return RestrictedCounter(seq, m, R, mode=mode)(k)


def size_restricted_signed_count(seq, k, m, rho):
    """Sum of vertex-restricted counts over all rho-subsets R of [m]."""
    if rho == 0:
        return signed_count(seq, k)
    total = 0
    for R in combinations(range(1, m + 1), rho):
        total += restricted_signed_count(seq, k, m, R, mode="vertex")
    return total


def signed_count_filtered(seq, k, level, distinct_pairs):
    """Signed count keeping only chains where the given edge pairs of
    T_level carry distinct labels (shifted comparison, l_e + e)."""
    pairs = [tuple(p) for p in distinct_pairs]

    def passes(labels):
        for a, b in pairs:
            if labels[a - 1] + a == labels[b - 1] + b:
                return False
        return True

    n = seq.order
    plain = SequenceCounter(seq)
    memo = {}

    def walk(lvl, values):
        if lvl == 1:
            return 1
        if lvl < level:
            return plain._raw(lvl, values)
        key = (lvl, values)
        if key in memo:
            return memo[key]
        tree = seq.tree(lvl)
        ranges = _edge_ranges(tree, values)
        if ranges is None:
            memo[key] = 0
            return 0
        inv = inversion_edges(tree, values)
        total = 0
        for l in product(*ranges):
            if lvl == level and not passes(l):
                continue
            total += walk(lvl - 1, l)
        total *= (-1) ** len(inv)
        memo[key] = total
        return total

    return seq.sign() * walk(n, tuple(k))
