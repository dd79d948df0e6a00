"""Rewrite rules on boundary words and the crossing-condition verifier.

With a and b such that a b a-bar b-bar is a counterclockwise rhombus, the
eight rules are the four swaps ab->ba, bā->āb, āb̄->b̄ā, b̄a->ab̄ and the four
cancellations of adjacent antiparallel letters.  For a fixed matching of the
letters, greedily cancelling matched neighbours and swapping neighbours whose
chords cross empties the word exactly when the matching satisfies the
crossing condition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .boundary import (
    BoundaryWord,
    Matching,
    ProjectionWord,
    canonical_matching,
    direction_classes,
    from_symbols,
    normalize_pair,
    project,
)
from .geometry import anti_word, antiparallel, is_ccw_pair


class RewriteRule(NamedTuple):
    name: str
    lhs: str
    rhs: str
    kind: str  # "swap" or "cancel"


# symbols: a, b and their bars written A, B
RULES: tuple[RewriteRule, ...] = (
    RewriteRule("ab->ba", "ab", "ba", "swap"),
    RewriteRule("bā->āb", "bA", "Ab", "swap"),
    RewriteRule("āb̄->b̄ā", "AB", "BA", "swap"),
    RewriteRule("b̄a->ab̄", "Ba", "aB", "swap"),
    RewriteRule("aā->ε", "aA", "", "cancel"),
    RewriteRule("āa->ε", "Aa", "", "cancel"),
    RewriteRule("bb̄->ε", "bB", "", "cancel"),
    RewriteRule("b̄b->ε", "Bb", "", "cancel"),
)
RULES_BY_NAME = {r.name: r for r in RULES}


class RewriteError(ValueError):
    pass


def _symbol_table(w: ProjectionWord) -> dict[int, str]:
    m = 4 * w.n
    return {w.a % m: "a", w.b % m: "b", antiparallel(w.a, w.n): "A", antiparallel(w.b, w.n): "B"}


def step(w: ProjectionWord, rule: RewriteRule | str, pos: int) -> ProjectionWord:
    """Apply one rule at ``pos`` (linear, no wrap-around)."""
    if isinstance(rule, str):
        rule = RULES_BY_NAME[rule]
    if not is_ccw_pair(w.a, w.b, w.n):
        raise RewriteError("a, b must span a counterclockwise rhombus")
    table = _symbol_table(w)
    sym = "".join(table[x] for x in w.letters)
    if sym[pos : pos + 2] != rule.lhs:
        raise RewriteError(f"{rule.name} does not apply at position {pos}")
    inv = {v: k for k, v in table.items()}
    letters = list(w.letters[:pos]) + [inv[s] for s in rule.rhs] + list(w.letters[pos + 2 :])
    positions = list(w.positions[:pos]) + list(w.positions[pos : pos + len(rule.rhs)][::-1]) + list(w.positions[pos + 2 :])
    return ProjectionWord(w.n, w.a, w.b, tuple(letters), tuple(positions))


class TraceStep(NamedTuple):
    kind: str  # "swap" or "cancel"
    pos: int  # index of the first letter in the current word; wraps when last
    x: int
    y: int


@dataclass
class ReductionResult:
    success: bool
    trace: list[TraceStep] | None = None
    stuck: list[int] = field(default_factory=list)
    bad_pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.success


class _Fenwick:
    def __init__(self, size: int):
        self.t = [0] * (size + 1)
        for i in range(1, size + 1):
            self.t[i] += 1
            j = i + (i & -i)
            if j <= size:
                self.t[j] += self.t[i]

    def add(self, i: int, v: int) -> None:
        i += 1
        while i < len(self.t):
            self.t[i] += v
            i += i & -i

    def prefix(self, i: int) -> int:
        s = 0
        while i > 0:
            s += self.t[i]
            i -= i & -i
        return s


def reduce_circular(letters: Sequence[int], partner: Sequence[int], n: int, *, trace: bool = False) -> ReductionResult:
    """Reduce a circular word under a fixed matching.

    Moves are found with a worklist: every letter is examined once as the left
    member of a neighbouring pair, and only the pairs touched by a move are
    re-examined.  The order is deterministic.
    """
    L = len(letters)
    m = 4 * n
    if L == 0:
        return ReductionResult(True, [] if trace else None)
    if L % 2 or sorted(partner) != list(range(L)):
        return ReductionResult(False, None, list(letters))
    nxt = [(i + 1) % L for i in range(L)]
    prv = [(i - 1) % L for i in range(L)]
    label = list(range(L))  # circular order of the live nodes
    alive = [True] * L
    live = L
    fen = _Fenwick(L) if trace else None
    steps: list[TraceStep] = []
    work = list(range(L - 1, -1, -1))
    while work and live:
        x = work.pop()
        if not alive[x]:
            continue
        y = nxt[x]
        if y == x:
            break
        if partner[x] == y:
            if trace:
                steps.append(TraceStep("cancel", fen.prefix(label[x]), letters[x], letters[y]))
            p, q = prv[x], nxt[y]
            alive[x] = alive[y] = False
            live -= 2
            if fen:
                fen.add(label[x], -1)
                fen.add(label[y], -1)
            if live:
                nxt[p], prv[q] = q, p
                work.append(p)
            continue
        lx = label[x]
        px, py = partner[x], partner[y]
        if (label[py] - lx) % L > (label[px] - lx) % L:
            # chords cross; swap only along a ccw rhombus
            if not 0 < (letters[y] - letters[x]) % m < 2 * n:
                return ReductionResult(False, steps if trace else None, _live_word(letters, label, alive), (letters[x], letters[y]))
            if trace:
                steps.append(TraceStep("swap", fen.prefix(lx), letters[x], letters[y]))
            p, q = prv[x], nxt[y]
            nxt[p], prv[y], nxt[y], prv[x], nxt[x], prv[q] = y, p, x, y, q, x
            label[x], label[y] = label[y], lx
            work.append(x)
            work.append(p)
    if live:
        return ReductionResult(False, steps if trace else None, _live_word(letters, label, alive))
    return ReductionResult(True, steps if trace else None)


def _live_word(letters, label, alive) -> list[int]:
    idx = sorted((label[i], i) for i in range(len(letters)) if alive[i])
    return [letters[i] for _, i in idx]


def replay(letters: Sequence[int], trace: Sequence[TraceStep]) -> list[int]:
    """Apply a trace to a circular word given as a list; returns the final word."""
    word = list(letters)
    for s in trace:
        L = len(word)
        i, j = s.pos, (s.pos + 1) % L
        if (word[i], word[j]) != (s.x, s.y):
            raise RewriteError(f"trace step {s} does not match the word")
        if s.kind == "swap":
            word[i], word[j] = word[j], word[i]
        elif j == 0:
            word = word[1:-1]
        else:
            del word[i : i + 2]
    return word


# -- matchings ---------------------------------------------------------------


def _noncrossing_matchings(seq: list[tuple[int, bool]]):
    """All non-crossing perfect matchings pairing opposite-sign entries."""
    if not seq:
        yield []
        return
    (p0, s0), rest = seq[0], seq[1:]
    bal = 1 if s0 else -1
    for j, (pj, sj) in enumerate(rest):
        if sj != s0 and bal == (1 if s0 else -1):
            # rest[:j] must be balanced on its own
            inner, outer = rest[:j], rest[j + 1 :]
            for mi in _noncrossing_matchings(inner):
                for mo in _noncrossing_matchings(outer):
                    yield [(p0, pj)] + mi + mo
        bal += 1 if sj else -1


def candidate_matchings(letters: Sequence[int], n: int):
    """Every matching in which each family {x, x-bar} is non-crossing."""
    m = 4 * n
    fams: dict[int, list[tuple[int, bool]]] = {}
    for i, x in enumerate(letters):
        fams.setdefault(x % (2 * n), []).append((i, x % m < 2 * n))
    per_family = []
    for seq in fams.values():
        opts = list(_noncrossing_matchings(seq))
        if not opts:
            return
        per_family.append(opts)
    for combo in itertools.product(*per_family):
        partner = [-1] * len(letters)
        for fam in combo:
            for i, j in fam:
                partner[i], partner[j] = j, i
        yield Matching(tuple(partner))


def reduce_to_empty(w, matching: Matching | None = None, n: int | None = None, *, trace: bool = True) -> ReductionResult:
    """Decide whether the circular word reduces to the empty word.

    With a matching, the greedy reduction uses it; without one, every matching
    whose families are non-crossing is tried (a word satisfying the crossing
    condition must use one of those).
    """
    if isinstance(w, (BoundaryWord, ProjectionWord)):
        letters, n = list(w.letters), w.n
    else:
        letters = list(w)
    if matching is not None:
        return reduce_circular(letters, matching.partner, n, trace=trace)
    last = ReductionResult(False, None, letters)
    for cand in candidate_matchings(letters, n):
        res = reduce_circular(letters, cand.partner, n, trace=trace)
        if res:
            return res
        last = res
    return last


def crossing_oracle(letters: Sequence[int], n: int) -> bool:
    """Brute force: does any matching of letters with antiparallel letters
    satisfy the crossing condition?  Exponential; for small words only."""
    m = 4 * n
    L = len(letters)
    if L % 2:
        return False
    by_dir: dict[int, list[int]] = {}
    for i, x in enumerate(letters):
        by_dir.setdefault(x % m, []).append(i)
    fams = []
    for x, occ in by_dir.items():
        if x < 2 * n:
            opp = by_dir.get(x + 2 * n, [])
            if len(opp) != len(occ):
                return False
            fams.append((occ, opp))
        elif x - 2 * n not in by_dir:
            return False
    choices = [[list(zip(occ, perm)) for perm in itertools.permutations(opp)] for occ, opp in fams]
    for combo in itertools.product(*choices):
        chords = [c for fam in combo for c in fam]
        if _chords_ok(chords, letters, L, n):
            return True
    return False


def _chords_ok(chords, letters, L, n) -> bool:
    m = 4 * n
    for (i1, j1), (i2, j2) in itertools.combinations(chords, 2):
        # rotate so the first chord starts at 0
        a2, b2, e1 = (i2 - i1) % L, (j2 - i1) % L, (j1 - i1) % L
        if (a2 < e1) == (b2 < e1):
            continue
        # order along the circle: x ... y ... x-bar ... y-bar
        x = letters[i1]
        y = letters[i2] if a2 < e1 else letters[j2]
        if not 0 < (y - x) % m < 2 * n:
            return False
    return True


# -- verifier ----------------------------------------------------------------


@dataclass
class PairResult:
    a: int
    b: int
    ok: bool
    length: int
    stuck: list[int] = field(default_factory=list)


@dataclass
class CrossingReport:
    n: int
    pairs: list[PairResult]

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.pairs)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list[PairResult]:
        return [p for p in self.pairs if not p.ok]


def crossing_condition(w: BoundaryWord) -> CrossingReport:
    """Run the reduction on every projection onto two direction classes."""
    n = w.n
    classes = direction_classes(w)
    results = []
    for x, y in itertools.combinations(classes, 2):
        a, b = normalize_pair(x, y, n)
        pw = project(w, a, b)
        res = reduce_circular(pw.letters, canonical_matching(pw).partner, n)
        if not res:
            res = reduce_to_empty(pw, trace=False)
        results.append(PairResult(a, b, res.success, len(pw), res.stuck))
    return CrossingReport(n, results)


def cyclic_swap(u: Sequence[int], split: int, n: int) -> list[int]:
    """xy => y x-bar for u = xy split at ``split``."""
    x, y = list(u[:split]), list(u[split:])
    return y + anti_word(x, n)


# -- half-word derivations ---------------------------------------------------


@dataclass
class HalfDerivation:
    words: list[str]
    final: str
    reversal_reached: bool
    full_word_reduces: bool

    @property
    def ok(self) -> bool:
        return self.reversal_reached and self.full_word_reduces


def _swap_to(word: str, target: str) -> bool:
    """Transform ``word`` into ``target`` using swap rules only (adjacent
    transpositions allowed by the rule table)."""
    allowed = {r.lhs for r in RULES if r.kind == "swap"}
    w = list(word)
    if sorted(w) != sorted(target):
        return False
    for i, ch in enumerate(target):
        j = w.index(ch, i)
        while j > i:
            if w[j - 1] + w[j] not in allowed:
                return False
            w[j - 1], w[j] = w[j], w[j - 1]
            j -= 1
    return "".join(w) == target


def _cancel_all(word: str) -> str:
    pairs = {"aA", "Aa", "bB", "Bb"}
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i : i + 2] in pairs:
                word = word[:i] + word[i + 2 :]
                changed = True
                break
    return word


def half_word_derivation(i: int, j: int, n: int = 5, a: int = 1, b: int = 3) -> HalfDerivation:
    """Replay the half-word derivation for u = (ba)^i (bā)^j, j >= 1.

    Letters are abstract: 'a', 'b', and capitals for bars.  Each displayed
    step is checked with legal swaps or cancellations.
    """
    if j < 1 or i < 0:
        raise ValueError("need i >= 0 and j >= 1")
    u = "ba" * i + "bA" * j
    words = [u]
    if i < j:
        w1 = "b" * i + "a" * i + "A" * i + "b" * i + "bA" * (j - i)
        ok = _swap_to(u, w1)
        w2 = _cancel_all(w1)
        ok = ok and w2 == "b" * (2 * i) + "bA" * (j - i)
        final = "Ab" * (j - i) + "b" * (2 * i)
        ok = ok and _swap_to(w2, final)
        words += [w1, w2, final]
        v = w2
    else:
        w1 = "ba" * (i - j) + "b" * j + "a" * j + "A" * j + "b" * j
        ok = _swap_to(u, w1)
        w2 = _cancel_all(w1)
        ok = ok and w2 == "ba" * (i - j) + "b" * (2 * j)
        final = "b" * (2 * j) + "ab" * (i - j)
        ok = ok and _swap_to(w2, final)
        words += [w1, w2, final]
        v = w2
    reached = ok and final == v[::-1]
    pw = from_symbols(u + u.translate(str.maketrans("abAB", "ABab")), a, b, n)
    full = reduce_to_empty(pw, trace=False).success
    return HalfDerivation(words, final, reached, full)
