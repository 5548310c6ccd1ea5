"""Exception hierarchy shared by every module and mapped to exit code 2 by the CLI."""

from __future__ import annotations


class SmgError(Exception):
    """Base class for all input, validation and cap errors."""


class ParseError(SmgError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class AssociativityError(SmgError):
    def __init__(self, witness: tuple[str, str, str], lhs: str, rhs: str):
        self.witness = witness
        x, y, z = witness
        super().__init__(
            f"table is not associative: ({x}{_dot}{y}){_dot}{z} = {lhs} "
            f"but {x}{_dot}({y}{_dot}{z}) = {rhs} (witness x={x}, y={y}, z={z})"
        )


_dot = "*"


class CapExceededError(SmgError):
    def __init__(self, what: str, size: int, cap: int, flag: str | None = None):
        self.size = size
        self.cap = cap
        hint = f"; raise it with {flag}" if flag else ""
        super().__init__(f"{what} has size {size}, above the cap of {cap}{hint}")


class CommutativeSemigroupError(SmgError):
    def __init__(self, what: str = "commuting graph"):
        super().__init__(
            f"{what} is undefined for a commutative semigroup (its vertex set would be empty)"
        )


class GraphError(SmgError):
    pass
