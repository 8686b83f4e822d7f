"""Game values: a finite round count or the distinguished robbers-win outcome.

Finite values are plain ints.  ``ROBBERS_WIN`` is a singleton sentinel rather
than a large number so that bound arithmetic can never silently treat an
unwinnable game as finite.
"""

from __future__ import annotations

from typing import Union


class RobbersWin:
    """Outcome of a position the cops cannot win from."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "RobbersWin"

    def __eq__(self, other) -> bool:
        return isinstance(other, RobbersWin)

    def __hash__(self) -> int:
        return hash("RobbersWin")

    # Robbers-win compares above every finite value, which lets callers use
    # max()/min() over mixed sequences without special cases.
    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, RobbersWin)

    def __gt__(self, other) -> bool:
        return not isinstance(other, RobbersWin)

    def __ge__(self, other) -> bool:
        return True


ROBBERS_WIN = RobbersWin()

GameValue = Union[int, RobbersWin]


def is_finite(value: GameValue) -> bool:
    return not isinstance(value, RobbersWin)


def value_to_json(value: GameValue):
    """JSON form: an integer, or the string ``"robbers_win"``."""
    return int(value) if is_finite(value) else "robbers_win"


def value_from_json(obj) -> GameValue:
    if obj == "robbers_win":
        return ROBBERS_WIN
    return int(obj)
