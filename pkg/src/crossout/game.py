"""Turn-by-turn dinner game against the crossout strategy.

Alice and Bob alternate taking items from the board; Bob always has the
last move, so Alice starts even-length games and Bob starts odd ones.
Alice prefers higher values, Bob prefers positions further right.

The engine plays the backward-induction strategy: schedule the remaining
moves in reverse order and give each scheduled mover the opponent's least
favorite unassigned item; the engine then takes whatever the current move
was assigned.  Because the last mover is always Bob, this reverse pass is
exactly the crossout marking restricted to the remaining positions, and on
a fresh board it reproduces the full marking with play order equal to the
marking order reversed.

States are immutable snapshots; applying a move returns a new state, so
undo and what-if branches are free.
"""
from __future__ import annotations

from dataclasses import dataclass

from .correspondence import encode
from .errors import ValidationError
from .marking import (
    ALICE,
    BOB,
    crossout_mark,
    crossout_sequence,
    random_permutation,
    validate_permutation,
)
from .stats import stat_bundle


class GameStateError(RuntimeError):
    """Operation not valid in the current game state."""


class IllegalMoveError(ValueError):
    """Move outside the remaining positions."""


@dataclass(frozen=True)
class Move:
    number: int
    player: str
    position: int


@dataclass(frozen=True)
class GameState:
    w: tuple[int, ...]
    remaining: frozenset[int]
    history: tuple[Move, ...]
    human_role: str | None = None

    @property
    def size(self) -> int:
        return len(self.w)

    def mover(self, move_number: int) -> str:
        """Mover of the given 1-based move; Bob takes the final move."""
        return BOB if (self.size - move_number) % 2 == 0 else ALICE

    @property
    def game_over(self) -> bool:
        return not self.remaining

    @property
    def turn(self) -> str | None:
        if self.game_over:
            return None
        return self.mover(len(self.history) + 1)

    def value_at(self, position: int) -> int:
        return self.w[position - 1]

    def eaten_by(self, player: str) -> tuple[int, ...]:
        """Positions eaten by the player, in play order."""
        return tuple(m.position for m in self.history if m.player == player)

    def to_json(self) -> dict:
        return {
            "n": self.size,
            "w": list(self.w),
            "human_role": self.human_role,
            "turn": self.turn,
            "game_over": self.game_over,
            "remaining": sorted(self.remaining),
            "history": [
                {
                    "move": m.number,
                    "player": m.player,
                    "position": m.position,
                    "value": self.value_at(m.position),
                }
                for m in self.history
            ],
            "paths": partial_paths(self),
            "final": final_summary(self) if self.game_over else None,
        }


def new_game(n_or_w, human_role: str | None = None, seed=None) -> GameState:
    """Start a game from an explicit permutation or a seeded random one."""
    if human_role not in (None, ALICE, BOB):
        raise ValidationError(f"human_role must be 'A', 'B' or None, got {human_role!r}")
    if isinstance(n_or_w, int):
        w = random_permutation(n_or_w, seed)
    else:
        w = validate_permutation(n_or_w)
    return GameState(
        w=w,
        remaining=frozenset(range(1, len(w) + 1)),
        history=(),
        human_role=human_role,
    )


def legal_moves(state: GameState) -> tuple[int, ...]:
    return tuple(sorted(state.remaining))


def apply_move(state: GameState, position: int) -> GameState:
    if state.game_over:
        raise GameStateError("the game is over")
    if position not in state.remaining:
        raise IllegalMoveError(f"position {position} not in remaining")
    move = Move(len(state.history) + 1, state.turn, position)
    return GameState(
        w=state.w,
        remaining=state.remaining - {position},
        history=state.history + (move,),
        human_role=state.human_role,
    )


def analysis(state: GameState) -> dict[int, str]:
    """Predicted eater of every remaining position under optimal play from
    here: the reverse-induction assignment of the remaining subgame."""
    return dict(crossout_sequence(state.w, state.remaining))


def engine_move(state: GameState) -> int:
    """The crossout-optimal position for the current mover.

    The current move is the one assigned last in the reverse pass, so this
    is the final position of the restricted marking order.
    """
    if state.game_over:
        raise GameStateError("the game is over")
    if state.human_role is not None and state.turn == state.human_role:
        raise GameStateError("it is the human's turn")
    seq = crossout_sequence(state.w, state.remaining)
    return seq[-1][0]


def playout_optimal(w_or_state) -> GameState:
    """Run both sides with the engine until the game ends."""
    if isinstance(w_or_state, GameState):
        state = w_or_state
        if state.human_role is not None:
            raise GameStateError("optimal playout needs the engine on both sides")
    else:
        state = new_game(w_or_state)
    while not state.game_over:
        state = apply_move(state, engine_move(state))
    return state


def no_trade_check(state: GameState) -> bool:
    """True when no pair (i eaten by Bob, j eaten by Alice, i < j) exists
    that both players would rather swap, i.e. with w(i) > w(j)."""
    if not state.game_over:
        raise GameStateError("the game is not over")
    eater = {m.position: m.player for m in state.history}
    size = state.size
    for i in range(1, size + 1):
        if eater[i] != BOB:
            continue
        for j in range(i + 1, size + 1):
            if eater[j] == ALICE and state.w[i - 1] > state.w[j - 1]:
                return False
    return True


def partial_paths(state: GameState) -> dict:
    """Panel data for both paths as revealed by the moves so far.

    Eaten positions are replayed in reverse play order, which is the tail
    of the marking order, and labeled by the usual counting rules within
    that revealed subsequence.  Labels therefore refine as play continues
    and, once the game ends, agree with the encode output whenever both
    sides played the engine strategy.  Down steps are reported sorted by
    path position; a null label marks the structurally unlabeled final
    down step.
    """
    size = state.size
    even = size % 2 == 0
    pa_len = size if even else size + 1
    pb_len = size + 2 if even else size + 1
    rev_a = list(reversed(state.eaten_by(ALICE)))
    rev_b = list(reversed(state.eaten_by(BOB)))

    pa_entries = []
    for i, pos in enumerate(rev_a):
        v = state.value_at(pos)
        label = 1 + sum(1 for prev in rev_a[:i] if state.value_at(prev) > v)
        pa_entries.append((v, label))
    if not even:
        pa_entries.append((pa_len, None))

    pb_entries = []
    for i, pos in enumerate(rev_b):
        label = 1 + sum(1 for prev in rev_b[:i] if prev > pos)
        pb_entries.append((pos + 1, label))
    if even:
        pb_entries.append((pb_len, None))

    def panel(length, entries):
        entries.sort(key=lambda e: e[0])
        return {
            "length": length,
            "down": [d for d, _ in entries],
            "labels": [label for _, label in entries],
        }

    return {
        "parity": "even" if even else "odd",
        "pa": panel(pa_len, pa_entries),
        "pb": panel(pb_len, pb_entries),
    }


def final_summary(state: GameState) -> dict:
    """Post-game panel: the tuple and statistics of w itself (the optimal
    assignment), plus facts about the play that actually happened."""
    marking = crossout_mark(state.w)
    return {
        "tuple": encode(state.w).to_json(),
        "stats": stat_bundle(state.w).to_json(),
        "optimal_marks": marking.marks,
        "no_trade": no_trade_check(state),
        "allocation": {
            str(m.position): m.player for m in state.history
        },
    }
