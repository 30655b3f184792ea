"""Incremental derivative-chain engine for bulk smoothness work.

The whole tower w, rho(w), rho(rho(w)), ... is kept as one small tail state
per level, so appending a letter costs O(tower height) and is exactly
undoable.  That makes prefix-pruned enumeration and the concatenation scans
run orders of magnitude faster than re-deriving every candidate from scratch.

The state update uses the fact that rho(w) is the interior run lengths of w
framed by a ``b`` on each side where the corresponding boundary run is longer
than ``a``.  Only the last run of a level ever changes, and each change
touches at most one letter of the level above:

* a run growing past length ``a`` emits ``b`` upward (the boundary pad);
* a run closing at length ``a`` emits ``a`` upward (it just became interior);
* a run closing at length ``b`` emits nothing (its ``b`` went up already);
* a run closing at any other interior length, or growing past ``b``, kills
  smoothness for every extension, so the branch is pruned.

The first run of a level is exempt from the interior rule, as is the last
(still growing) run.  Correctness against the literal closure/derivative
composition is enforced by exhaustive tests at small lengths.
"""

from __future__ import annotations

from itertools import groupby

from .core import Alphabet, EPSILON, Word

__all__ = ["ChainState", "is_smooth_fast", "fast_derivative", "SmoothEnumerator",
           "visit_smooth_extensions"]

# Trail entry kinds for undo.
_EXTENDED = 0
_NEW_RUN = 1
_NEW_LEVEL = 2


class ChainState:
    """Mutable derivative tower supporting push(letter) / pop() in LIFO order."""

    __slots__ = ("a", "b", "levels", "_trail", "_marks")

    def __init__(self, ab: Alphabet):
        self.a = ab.a
        self.b = ab.b
        # One [run_count, last_letter, last_run_length] per level.
        self.levels: list[list[int]] = []
        self._trail: list[tuple[int, int, int, int]] = []
        self._marks: list[int] = []

    def push(self, letter: int) -> bool:
        """Append ``letter`` at level 0; update the tower.

        Returns False and leaves the state untouched when no smooth word
        extends the current one by ``letter``.
        """
        a = self.a
        b = self.b
        levels = self.levels
        trail = self._trail
        mark = len(trail)
        i = 0
        x = letter
        while True:
            if i == len(levels):
                levels.append([1, x, 1])
                trail.append((i, _NEW_LEVEL, 0, 0))
                break
            lv = levels[i]
            if x == lv[1]:
                n = lv[2] + 1
                if n > b:
                    self._undo_to(mark)
                    return False
                lv[2] = n
                trail.append((i, _EXTENDED, 0, 0))
                if n == a + 1:
                    # Run crossed a: its boundary pad (or eventual interior b) goes up.
                    x = b
                    i += 1
                    continue
                break
            else:
                run_count, closed_letter, closed_len = lv
                emit = 0
                if run_count >= 2:
                    # The closing run becomes interior; only lengths a and b survive.
                    if closed_len == a:
                        emit = a
                    elif closed_len != b:
                        self._undo_to(mark)
                        return False
                lv[0] = run_count + 1
                lv[1] = x
                lv[2] = 1
                trail.append((i, _NEW_RUN, closed_letter, closed_len))
                if emit:
                    x = emit
                    i += 1
                    continue
                break
        self._marks.append(mark)
        return True

    def pop(self) -> None:
        """Undo the most recent successful push (strictly LIFO)."""
        self._undo_to(self._marks.pop())

    def _undo_to(self, mark: int) -> None:
        trail = self._trail
        levels = self.levels
        while len(trail) > mark:
            i, kind, prev_letter, prev_len = trail.pop()
            if kind == _EXTENDED:
                levels[i][2] -= 1
            elif kind == _NEW_RUN:
                lv = levels[i]
                lv[0] -= 1
                lv[1] = prev_letter
                lv[2] = prev_len
            else:
                levels.pop()

    def depth(self) -> int:
        return len(self.levels)


def is_smooth_fast(letters, ab: Alphabet) -> bool:
    """Smoothness test via the incremental engine; letters outside {a, b} fail."""
    a = ab.a
    b = ab.b
    state = ChainState(ab)
    push = state.push
    for c in letters:
        if (c != a and c != b) or not push(c):
            return False
    return True


def fast_derivative(letters, b: int) -> tuple[int, ...]:
    """Derivative of a known-differentiable word, as a plain tuple.

    No validation: callers must only pass words whose smoothness (hence
    differentiability) is already established.
    """
    lens = [sum(1 for _ in group) for _, group in groupby(letters)]
    if not lens:
        return ()
    if len(lens) == 1:
        return (b,) if lens[0] == b else ()
    out = lens if lens[0] == b else lens[1:]
    if lens[-1] != b:
        out = out[:-1]
    return tuple(out)


def _enumerate_by_dfs(ab: Alphabet, n: int) -> list[list[Word]]:
    """All smooth words of each length 0..n, lexicographic within a length."""
    by_len: list[list[Word]] = [[] for _ in range(n + 1)]
    by_len[0].append(EPSILON)
    if n == 0:
        return by_len
    state = ChainState(ab)
    letters = (ab.a, ab.b)
    path: list[int] = []

    def extend() -> None:
        depth = len(path)
        if depth:
            by_len[depth].append(Word._wrap(tuple(path)))
        if depth == n:
            return
        for c in letters:
            if state.push(c):
                path.append(c)
                extend()
                path.pop()
                state.pop()

    extend()
    return by_len


class SmoothEnumerator:
    """Prefix-pruned smooth-word enumeration with an in-memory memo.

    Optionally backed by a disk cache (see :mod:`smoothwords.cache`); the
    cache is advisory and a cold run recomputes everything identically.
    """

    def __init__(self, cache=None):
        self.cache = cache
        self._memo: dict[tuple[int, int], list[list[Word]]] = {}

    def up_to(self, ab: Alphabet, n: int) -> list[list[Word]]:
        """Smooth words grouped by length; index i holds exactly length i.

        The returned list may extend beyond n when more was already computed.
        """
        if n < 0:
            raise ValueError("length bound must be >= 0")
        key = (ab.a, ab.b)
        have = self._memo.get(key)
        if have is not None and len(have) > n:
            return have
        by_len = self.cache.load_range(ab, n) if self.cache is not None else None
        if by_len is None:
            by_len = _enumerate_by_dfs(ab, n)
            if self.cache is not None:
                self.cache.store_range(ab, by_len)
        self._memo[key] = by_len
        return by_len

    def of_length(self, ab: Alphabet, n: int) -> list[Word]:
        return self.up_to(ab, n)[n]

    def flat(self, ab: Alphabet, max_len: int, min_len: int = 0) -> list[Word]:
        """Smooth words with min_len <= |w| <= max_len in shortlex order."""
        by_len = self.up_to(ab, max_len)
        return [w for length in range(min_len, max_len + 1) for w in by_len[length]]


def visit_smooth_extensions(ab: Alphabet, seed, max_extra: int, visit) -> None:
    """Call ``visit(v)`` for every word v (including ()) with |v| <= max_extra
    such that seed+v is smooth.  Does nothing if seed itself is not smooth."""
    a = ab.a
    b = ab.b
    state = ChainState(ab)
    for c in seed:
        if (c != a and c != b) or not state.push(c):
            return
    letters = (a, b)
    path: list[int] = []

    def extend() -> None:
        visit(tuple(path))
        if len(path) == max_extra:
            return
        for c in letters:
            if state.push(c):
                path.append(c)
                extend()
                path.pop()
                state.pop()

    extend()
