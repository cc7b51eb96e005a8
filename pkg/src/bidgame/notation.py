"""Bracket notation for game forms.

Grammar (whitespace insignificant, UTF-8):

    game      := "{" opts "|" opts "}" | shorthand
    opts      := empty | game ("," game)*
    shorthand := "0" | "*" | "^" | "v" | int | int "/" pow2 | "-" shorthand
    int       := [1-9][0-9]*
    pow2      := power-of-two literal | "2^" exponent

"^" is {0|*}, "v" is {*|0}.  Integer and dyadic shorthands expand to their
defining forms at parse time; the arena only ever stores forms.
"""
from __future__ import annotations

from .core import Arena, GameId
from .numbers import (MAX_EXPONENT, MAX_INTEGER, DyadicValue, dyadic_form,
                      integer_form)


class NotationError(ValueError):
    """Syntax error in game notation, with the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    def __init__(self, arena: Arena, text: str, max_integer: int,
                 max_exponent: int) -> None:
        self.arena = arena
        self.text = text
        self.pos = 0
        self.max_integer = max_integer
        self.max_exponent = max_exponent

    def error(self, message: str) -> NotationError:
        return NotationError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            raise self.error(f"expected {char!r}")
        self.pos += 1

    def parse(self) -> GameId:
        g = self.game()
        if self.peek():
            raise self.error("trailing input after game")
        return g

    def game(self) -> GameId:
        c = self.peek()
        if c == "{":
            return self.braces()
        return self.shorthand()

    def braces(self) -> GameId:
        self.expect("{")
        left = self.opts()
        self.expect("|")
        right = self.opts()
        self.expect("}")
        return self.arena.intern(left, right)

    def opts(self) -> list[GameId]:
        if self.peek() in ("|", "}"):
            return []
        out = [self.game()]
        while self.peek() == ",":
            self.pos += 1
            out.append(self.game())
        return out

    def shorthand(self) -> GameId:
        c = self.peek()
        if c == "-":
            self.pos += 1
            return self.arena.conjugate(self.shorthand())
        if c == "*":
            self.pos += 1
            return self.arena.star
        if c == "^":
            self.pos += 1
            return self.arena.up
        if c == "v":
            self.pos += 1
            return self.arena.down
        if c == "0":
            self.pos += 1
            return self.arena.zero
        if c.isdigit():
            n = self.integer()
            if self.peek() != "/":
                return integer_form(self.arena, n, max_integer=self.max_integer)
            self.pos += 1
            k = self.pow2()
            value = DyadicValue.make(n, k)
            return dyadic_form(self.arena, value, max_integer=self.max_integer,
                               max_exponent=self.max_exponent)
        raise self.error("expected a game")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def pow2(self) -> int:
        """Denominator: a power-of-two literal or 2^k; returns the exponent."""
        base = self.integer()
        if base == 2 and self.peek() == "^":
            self.pos += 1
            k = self.integer()
            if k > self.max_exponent:
                raise self.error(f"exponent {k} exceeds bound {self.max_exponent}")
            return k
        if base < 1 or base & (base - 1):
            raise self.error(f"denominator {base} is not a power of two")
        k = base.bit_length() - 1
        if k > self.max_exponent:
            raise self.error(f"exponent {k} exceeds bound {self.max_exponent}")
        return k


def parse(arena: Arena, text: str, *, max_integer: int = MAX_INTEGER,
          max_exponent: int = MAX_EXPONENT) -> GameId:
    """Parse bracket notation into an interned form id."""
    return _Parser(arena, text, max_integer, max_exponent).parse()


def _seed_names(arena: Arena) -> None:
    # Small integers and unit dyadics register their names when built, so
    # named rendering recognizes them even if the caller never parsed one.
    if arena._named_seeded:
        return
    arena._named_seeded = True
    integer_form(arena, 10)
    from .numbers import unit_dyadic_form

    unit_dyadic_form(arena, 6)


def render(arena: Arena, gid: GameId, style: str = "literal") -> str:
    """Render a form; the literal style round-trips through ``parse``."""
    if style not in ("literal", "named"):
        raise ValueError(f"unknown style {style!r}")
    if style == "named":
        _seed_names(arena)
    memo: dict[GameId, str] = {}

    def go(g: GameId) -> str:
        hit = memo.get(g)
        if hit is not None:
            return hit
        if style == "named":
            name = arena.name_of(g)
            if name is not None:
                memo[g] = name
                return name
        elif g == arena.zero:
            memo[g] = "0"
            return "0"
        left = ",".join(go(o) for o in arena.left_options(g))
        right = ",".join(go(o) for o in arena.right_options(g))
        text = "{" + left + "|" + right + "}"
        memo[g] = text
        return text

    return go(gid)
