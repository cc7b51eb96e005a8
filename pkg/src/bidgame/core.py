"""Interned arena of game forms.

A game form is a pair of option sets (Left's and Right's), each option being
another, previously interned form.  The arena stores every distinct form
exactly once and hands out integer ids, so structural equality of forms is
just ``==`` on ids and memo tables throughout the engine can key on ints.

The arena is append-only and interning is serialized by a lock, so ids and
option tuples may be shared freely across threads.
"""
from __future__ import annotations

import threading
from typing import Iterable, Iterator

GameId = int

_OptionKey = tuple[tuple[int, ...], tuple[int, ...]]


class Arena:
    """Append-only store of structurally unique game forms.

    Option sets are kept sorted and duplicate-free, which makes interning
    canonical: two forms with equal option sets on both sides always map to
    the same id.  Options must be interned before their parent, so the id
    order is a topological order of the (acyclic) form DAG and ``birthday``
    is computable at intern time.
    """

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self._left: list[tuple[GameId, ...]] = []
        self._right: list[tuple[GameId, ...]] = []
        self._birthday: list[int] = []
        self._index: dict[_OptionKey, GameId] = {}
        self._conj: dict[GameId, GameId] = {}
        self._sum: dict[tuple[GameId, GameId], GameId] = {}
        self._names: dict[GameId, str] = {}
        self._named_seeded = False

        self.zero: GameId = self.intern((), ())
        self.star: GameId = self.intern((self.zero,), (self.zero,))
        self.up: GameId = self.intern((self.zero,), (self.star,))
        self.down: GameId = self.intern((self.star,), (self.zero,))
        for gid, name in ((self.zero, "0"), (self.star, "*"),
                          (self.up, "^"), (self.down, "v")):
            self._names[gid] = name

    def __len__(self) -> int:
        return len(self._left)

    def __contains__(self, gid: GameId) -> bool:
        return 0 <= gid < len(self._left)

    def intern(self, left: Iterable[GameId], right: Iterable[GameId]) -> GameId:
        """Return the canonical id for the form with the given option sets."""
        l = tuple(sorted(set(left)))
        r = tuple(sorted(set(right)))
        with self._lock:
            n = len(self._left)
            for opt in l + r:
                if not 0 <= opt < n:
                    raise ValueError(f"unknown game id {opt!r} used as option")
            key = (l, r)
            found = self._index.get(key)
            if found is not None:
                return found
            gid = n
            self._left.append(l)
            self._right.append(r)
            bd = 0
            if l or r:
                bd = 1 + max(self._birthday[opt] for opt in l + r)
            self._birthday.append(bd)
            self._index[key] = gid
            return gid

    def _check(self, gid: GameId) -> None:
        if not 0 <= gid < len(self._left):
            raise ValueError(f"unknown game id {gid!r}")

    def left_options(self, gid: GameId) -> tuple[GameId, ...]:
        self._check(gid)
        return self._left[gid]

    def right_options(self, gid: GameId) -> tuple[GameId, ...]:
        self._check(gid)
        return self._right[gid]

    def options(self, gid: GameId) -> tuple[GameId, ...]:
        """All options of the form, both sides, duplicate-free and sorted."""
        self._check(gid)
        return tuple(sorted(set(self._left[gid] + self._right[gid])))

    def birthday(self, gid: GameId) -> int:
        self._check(gid)
        return self._birthday[gid]

    def is_left_terminal(self, gid: GameId) -> bool:
        return not self.left_options(gid)

    def is_right_terminal(self, gid: GameId) -> bool:
        return not self.right_options(gid)

    def conjugate(self, gid: GameId) -> GameId:
        """The form with the players' roles swapped throughout."""
        self._check(gid)
        hit = self._conj.get(gid)
        if hit is not None:
            return hit
        # Iterative post-order so very tall forms (long integer chains) do
        # not hit the interpreter recursion limit.
        stack = [gid]
        while stack:
            g = stack[-1]
            if g in self._conj:
                stack.pop()
                continue
            pending = [o for o in self._left[g] + self._right[g]
                       if o not in self._conj]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            cg = self.intern((self._conj[o] for o in self._right[g]),
                             (self._conj[o] for o in self._left[g]))
            self._conj[g] = cg
            self._conj.setdefault(cg, g)
        return self._conj[gid]

    def sum(self, a: GameId, b: GameId) -> GameId:
        """Disjunctive sum: play in either component, the other is untouched.

        Memoized on the unordered pair, so the operation is commutative at
        the id level; associativity also holds at the id level because both
        associations intern the same option sets.
        """
        self._check(a)
        self._check(b)
        if a == self.zero:
            return b
        if b == self.zero:
            return a
        key = (a, b) if a <= b else (b, a)
        hit = self._sum.get(key)
        if hit is not None:
            return hit
        left = [self.sum(al, b) for al in self._left[a]]
        left += [self.sum(a, bl) for bl in self._left[b]]
        right = [self.sum(ar, b) for ar in self._right[a]]
        right += [self.sum(a, br) for br in self._right[b]]
        gid = self.intern(left, right)
        self._sum[key] = gid
        return gid

    def sum_all(self, ids: Iterable[GameId]) -> GameId:
        total = self.zero
        for g in ids:
            total = self.sum(total, g)
        return total

    def followers(self, gid: GameId) -> Iterator[GameId]:
        """The form and everything reachable from it by moves, each once."""
        self._check(gid)
        seen = {gid}
        stack = [gid]
        while stack:
            g = stack.pop()
            yield g
            for o in self._left[g] + self._right[g]:
                if o not in seen:
                    seen.add(o)
                    stack.append(o)

    # -- naming ------------------------------------------------------------

    def register_name(self, gid: GameId, name: str) -> None:
        self._check(gid)
        self._names.setdefault(gid, name)

    def name_of(self, gid: GameId) -> str | None:
        return self._names.get(gid)

    def parse(self, text: str, **kwargs) -> GameId:
        from . import notation

        return notation.parse(self, text, **kwargs)

    def render(self, gid: GameId, style: str = "literal") -> str:
        from . import notation

        return notation.render(self, gid, style)
