"""One bidding round: legal bids and exact resolution.

Both players simultaneously bid an amount from their share of the total
budget; the marker holder may attach the marker to the bid.  The holder wins
ties, but a won tie always hands the marker over.  The round winner pays the
bid amount to the loser and must then move.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass


class Player(enum.Enum):
    LEFT = "Left"
    RIGHT = "Right"

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BudgetState:
    """Total budget, Left's share of it, and who holds the marker."""

    tb: int
    left: int
    marker: Player

    def __post_init__(self) -> None:
        if self.tb < 0:
            raise ValueError("total budget must be non-negative")
        if not 0 <= self.left <= self.tb:
            raise ValueError(f"left budget {self.left} outside [0, {self.tb}]")

    @property
    def right(self) -> int:
        return self.tb - self.left

    def budget_of(self, player: Player) -> int:
        return self.left if player is Player.LEFT else self.right

    def holds_marker(self, player: Player) -> bool:
        return self.marker is player

    def mirrored(self) -> "BudgetState":
        """Swap the players' roles: budgets trade places, the marker flips."""
        return BudgetState(self.tb, self.right, self.marker.opponent)

    def label(self) -> str:
        """Short display form; the combining hat marks Left as marker holder."""
        hat = "̂" if self.marker is Player.LEFT else ""
        return f"{self.left}{hat}"

    def to_json(self) -> dict:
        return {"tb": self.tb, "left_budget": self.left,
                "marker": str(self.marker)}


def all_states(tb: int) -> tuple[BudgetState, ...]:
    """Every budget state for a total budget, in vector order.

    Vector order is Left-side first: marker-with-Left states from the full
    share down to zero, then marker-with-Right states likewise.
    """
    hatted = [BudgetState(tb, p, Player.LEFT) for p in range(tb, -1, -1)]
    plain = [BudgetState(tb, p, Player.RIGHT) for p in range(tb, -1, -1)]
    return tuple(hatted + plain)


@dataclass(frozen=True)
class Bid:
    """A bid amount; include_marker is meaningful only for the marker holder."""

    amount: int
    include_marker: bool = False

    def label(self) -> str:
        if self.include_marker:
            return f"{self.amount}+marker"
        return str(self.amount)

    def to_json(self) -> dict:
        return {"amount": self.amount, "include_marker": self.include_marker}


@dataclass(frozen=True)
class RoundResult:
    winner: Player
    next_state: BudgetState


def legal_bids(state: BudgetState, player: Player) -> tuple[Bid, ...]:
    """All bids available to the player, smallest amount first, keep before give."""
    budget = state.budget_of(player)
    if state.holds_marker(player):
        return tuple(Bid(m, inc) for m in range(budget + 1)
                     for inc in (False, True))
    return tuple(Bid(m) for m in range(budget + 1))


def _validate(state: BudgetState, bid: Bid, player: Player) -> None:
    if bid.amount < 0 or bid.amount > state.budget_of(player):
        raise ValueError(
            f"illegal bid {bid.amount} for {player} with budget "
            f"{state.budget_of(player)}")
    if bid.include_marker and not state.holds_marker(player):
        raise ValueError(f"{player} cannot include a marker they do not hold")


def resolve(state: BudgetState, left_bid: Bid, right_bid: Bid) -> RoundResult:
    """Resolve one bidding round; the winner pays their bid to the loser.

    The holder wins ties but then loses the marker regardless of the
    include_marker flag; on a strict win the flag decides whether the marker
    travels.  When the non-holder outbids the holder, the marker stays put.
    """
    _validate(state, left_bid, Player.LEFT)
    _validate(state, right_bid, Player.RIGHT)
    l, r = left_bid.amount, right_bid.amount
    if state.marker is Player.LEFT:
        if l > r:
            marker = Player.RIGHT if left_bid.include_marker else Player.LEFT
            return RoundResult(Player.LEFT,
                               BudgetState(state.tb, state.left - l, marker))
        if l == r:
            return RoundResult(Player.LEFT,
                               BudgetState(state.tb, state.left - l, Player.RIGHT))
        return RoundResult(Player.RIGHT,
                           BudgetState(state.tb, state.left + r, Player.LEFT))
    if r > l:
        marker = Player.LEFT if right_bid.include_marker else Player.RIGHT
        return RoundResult(Player.RIGHT,
                           BudgetState(state.tb, state.left + r, marker))
    if r == l:
        return RoundResult(Player.RIGHT,
                           BudgetState(state.tb, state.left + r, Player.LEFT))
    return RoundResult(Player.LEFT,
                       BudgetState(state.tb, state.left - l, Player.RIGHT))
