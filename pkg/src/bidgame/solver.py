"""Memoized backward induction over forms and budget states.

Every position, terminal or not, starts with a bidding round; the round
winner must move on their own side and loses if they cannot.  The value of a
position is therefore the value of the simultaneous bid matrix whose entries
are the values of the follower positions with the winner moving optimally.
The matrix always has a pure saddle point (some Left bid wins against every
Right bid, or some Right bid wins against every Left bid); the explorer's
determinacy suite checks this over its enumeration range.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .auction import Bid, BudgetState, Player, all_states, legal_bids, resolve
from .core import Arena, GameId


class Outcome(enum.IntEnum):
    """Who wins under optimal play; Left-wins ranks above Right-wins."""

    R = 0
    L = 1

    @staticmethod
    def win_for(player: Player) -> "Outcome":
        return Outcome.L if player is Player.LEFT else Outcome.R

    @property
    def winner(self) -> Player:
        return Player.LEFT if self is Outcome.L else Player.RIGHT

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class OutcomeVector:
    """Partial outcomes over every budget state, in vector order."""

    tb: int
    entries: tuple[Outcome, ...]

    def entry(self, state: BudgetState) -> Outcome:
        if state.tb != self.tb:
            raise ValueError("budget state has a different total budget")
        if state.marker is Player.LEFT:
            return self.entries[self.tb - state.left]
        return self.entries[2 * self.tb + 1 - state.left]

    def letters(self) -> str:
        return "".join(str(o) for o in self.entries)

    def monotone_ok(self) -> bool:
        """Within each marker block, more budget is never worse for Left."""
        half = self.tb + 1
        blocks = (self.entries[:half], self.entries[half:])
        return all(b[i] >= b[i + 1] for b in blocks for i in range(self.tb))

    def marker_worth_ok(self) -> bool:
        """Holding the marker is worth at most one budget unit."""
        return all(self.entries[self.tb - p] <= self.entries[2 * self.tb - p]
                   for p in range(self.tb))

    def all_equal(self, outcome: Outcome) -> bool:
        return all(o is outcome for o in self.entries)

    def to_json(self) -> dict:
        return {"tb": self.tb, "vector": self.letters(),
                "order": [s.label() for s in all_states(self.tb)]}


def outcome_leq(a: OutcomeVector, b: OutcomeVector) -> bool:
    """Pointwise comparison of outcome vectors with L above R."""
    if a.tb != b.tb:
        raise ValueError("outcome vectors have different total budgets")
    return all(x <= y for x, y in zip(a.entries, b.entries))


@dataclass(frozen=True)
class BidMatrix:
    """Round outcomes per bid pair, Left bids as rows, Right bids as columns."""

    left_bids: tuple[Bid, ...]
    right_bids: tuple[Bid, ...]
    rows: tuple[tuple[Outcome, ...], ...]

    def has_all_l_row(self) -> bool:
        return any(all(o is Outcome.L for o in row) for row in self.rows)

    def has_all_r_column(self) -> bool:
        return any(all(row[j] is Outcome.R for row in self.rows)
                   for j in range(len(self.right_bids)))

    def determinate(self) -> bool:
        return self.has_all_l_row() != self.has_all_r_column()


@dataclass(frozen=True)
class StrategyEntry:
    """Optimal prescription for one player at one position and state."""

    position: GameId
    state: BudgetState
    player: Player
    value: Outcome
    best_bid: Bid
    winning_move: GameId | None
    zero_bid_optimal: bool


class Solver:
    """Shared-memo outcome solver over an arena.

    Memo tables key on (total budget, form id, Left budget, marker), one
    table per total budget.  Entries are immutable, so concurrent queries
    may at worst recompute an identical value.
    """

    def __init__(self, arena: Arena) -> None:
        self.arena = arena
        self._outcome: dict[int, dict[tuple[GameId, int, Player], Outcome]] = {}
        self._zero_bid: dict[int, dict[tuple[GameId, int, Player, Player], bool]] = {}

    # -- outcomes -----------------------------------------------------------

    def partial_outcome(self, g: GameId, state: BudgetState) -> Outcome:
        memo = self._outcome.setdefault(state.tb, {})
        key = (g, state.left, state.marker)
        hit = memo.get(key)
        if hit is not None:
            return hit
        value = Outcome.R
        right_bids = legal_bids(state, Player.RIGHT)
        for lb in legal_bids(state, Player.LEFT):
            if all(self._round_outcome(g, state, lb, rb) is Outcome.L
                   for rb in right_bids):
                value = Outcome.L
                break
        memo[key] = value
        return value

    def _round_outcome(self, g: GameId, state: BudgetState, left_bid: Bid,
                       right_bid: Bid) -> Outcome:
        """Outcome of one resolved round, the bid winner moving optimally."""
        result = resolve(state, left_bid, right_bid)
        return self._move_outcome(g, result.winner, result.next_state)

    def _move_outcome(self, g: GameId, mover: Player,
                      state: BudgetState) -> Outcome:
        options = (self.arena.left_options(g) if mover is Player.LEFT
                   else self.arena.right_options(g))
        if not options:
            return Outcome.win_for(mover.opponent)
        want = Outcome.win_for(mover)
        for o in options:
            if self.partial_outcome(o, state) is want:
                return want
        return Outcome.win_for(mover.opponent)

    def outcome_vector(self, g: GameId, tb: int) -> OutcomeVector:
        return OutcomeVector(tb, tuple(self.partial_outcome(g, s)
                                       for s in all_states(tb)))

    def bid_matrix(self, g: GameId, state: BudgetState) -> BidMatrix:
        left_bids = legal_bids(state, Player.LEFT)
        right_bids = legal_bids(state, Player.RIGHT)
        rows = tuple(tuple(self._round_outcome(g, state, lb, rb)
                           for rb in right_bids) for lb in left_bids)
        return BidMatrix(left_bids, right_bids, rows)

    # -- strategies ----------------------------------------------------------

    def _guaranteed(self, g: GameId, state: BudgetState, player: Player,
                    bid: Bid) -> Outcome:
        """Worst-case round outcome for the player committing to one bid."""
        opponent_bids = legal_bids(state, player.opponent)
        if player is Player.LEFT:
            outs = (self._round_outcome(g, state, bid, ob)
                    for ob in opponent_bids)
            return min(outs)
        outs = (self._round_outcome(g, state, ob, bid)
                for ob in opponent_bids)
        return max(outs)

    def best_bid(self, g: GameId, state: BudgetState, player: Player) -> Bid:
        """First bid (smallest amount, keep before give) achieving the value."""
        value = self.partial_outcome(g, state)
        for bid in legal_bids(state, player):
            if self._guaranteed(g, state, player, bid) == value:
                return bid
        raise AssertionError("no bid achieves the memoized value")

    def best_move(self, g: GameId, mover: Player,
                  state: BudgetState) -> GameId | None:
        """The mover's option after winning a bid: lowest id achieving their best."""
        options = (self.arena.left_options(g) if mover is Player.LEFT
                   else self.arena.right_options(g))
        if not options:
            return None
        want = Outcome.win_for(mover)
        for o in options:  # options are sorted by id
            if self.partial_outcome(o, state) is want:
                return o
        return options[0]

    def best_response(self, g: GameId, state: BudgetState,
                      player: Player) -> StrategyEntry:
        value = self.partial_outcome(g, state)
        bid = self.best_bid(g, state, player)
        opponent_bid = self.best_bid(g, state, player.opponent)
        if player is Player.LEFT:
            result = resolve(state, bid, opponent_bid)
        else:
            result = resolve(state, opponent_bid, bid)
        move = None
        if result.winner is player:
            move = self.best_move(g, player, result.next_state)
        return StrategyEntry(g, state, player, value, bid, move,
                             self.zero_bid_optimal(g, state, player))

    # -- zero-bid analysis ----------------------------------------------------

    def zero_bid_optimal(self, g: GameId, state: BudgetState,
                         player: Player) -> bool:
        """Whether the player has a strategy that bids zero at every round it
        reaches and still achieves the optimal value at every position it can
        be brought to.

        The opponent is unconstrained: any legal bid, and after a won round
        any move.  The zero-bidding player's own moves belong to the strategy
        and are chosen, so a round the player wins (only a tie as marker
        holder; a zero bid never wins strictly, which also makes the marker
        flag on it irrelevant) needs just one option that preserves the value
        and keeps the property.
        """
        memo = self._zero_bid.setdefault(state.tb, {})
        key = (g, state.left, state.marker, player)
        hit = memo.get(key)
        if hit is not None:
            return hit
        value = self.partial_outcome(g, state)
        zero = Bid(0)
        mine = Outcome.win_for(player)
        ok = True
        for ob in legal_bids(state, player.opponent):
            if player is Player.LEFT:
                result = resolve(state, zero, ob)
            else:
                result = resolve(state, ob, zero)
            nxt = result.next_state
            if result.winner is player:
                options = (self.arena.left_options(g)
                           if player is Player.LEFT
                           else self.arena.right_options(g))
                if not options:
                    ok = value is not mine  # won the bid, cannot move, lose
                else:
                    ok = any((value is not mine
                              or self.partial_outcome(o, nxt) is mine)
                             and self.zero_bid_optimal(o, nxt, player)
                             for o in options)
            else:
                options = (self.arena.left_options(g)
                           if player.opponent is Player.LEFT
                           else self.arena.right_options(g))
                if value is mine and options:
                    ok = (self._move_outcome(g, player.opponent, nxt)
                          is mine)
                if ok:
                    ok = all(self.zero_bid_optimal(o, nxt, player)
                             for o in options)
            if not ok:
                break
        memo[key] = ok
        return ok

    def zero_bid_optimal_everywhere(self, g: GameId, tb: int,
                                    player: Player) -> bool:
        return all(self.zero_bid_optimal(g, s, player) for s in all_states(tb))
