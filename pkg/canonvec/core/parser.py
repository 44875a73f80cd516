from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .errors import CanonvecError
from .permutation import Permutation, Vector, from_cycles


class ParseError(CanonvecError, ValueError):
    """Custom exception for cycle-notation, vector and group-file errors."""
    pass


class CycleParser:
    """
        Parses cycle notation such as "(1,2,3)(4,5)" into a Permutation.
        Points are 1-based, cycles must be disjoint, "()" is the identity.
        Whitespace is allowed between tokens.
    """
    def __init__(self, text: str, n: int):
        if n < 1:
            raise ParseError(f"degree must be positive, got {n}")
        self.text = text
        self.n = n
        self.index = 0
        self.seen = set()

    # --------------------------
    # Utility methods
    # --------------------------
    def peek(self) -> Optional[str]:
        """Return the current non-blank character without advancing the pointer."""
        self._skip_blanks()
        return self.text[self.index] if self.index < len(self.text) else None

    def advance(self) -> Optional[str]:
        """Return the current non-blank character and advance the pointer."""
        char = self.peek()
        if char is not None:
            self.index += 1
        return char

    def _skip_blanks(self):
        while self.index < len(self.text) and self.text[self.index].isspace():
            self.index += 1

    # --------------------------
    # Main parse entry
    # --------------------------
    def parse(self) -> Permutation:
        """Parse the full text and return the permutation."""
        if self.peek() is None:
            raise ParseError("empty permutation; write () for the identity")
        cycles = []
        while self.peek() is not None:
            if self.peek() != "(":
                raise ParseError(f"Unexpected character '{self.peek()}' at position {self.index + 1}")
            cycles.append(self._parse_cycle())
        return from_cycles(self.n, [c for c in cycles if c])

    def _parse_cycle(self) -> List[int]:
        self.advance()  # skip '('
        points = []
        if self.peek() == ")":
            self.advance()
            return points
        points.append(self._parse_point())
        while self.peek() == ",":
            self.advance()
            points.append(self._parse_point())
        if self.advance() != ")":
            raise ParseError(f"Expected ')' or ',' at position {self.index}")
        return points

    def _parse_point(self) -> int:
        start = self.index if self.peek() is not None else len(self.text)
        token = ""
        while (c := self.peek()) is not None and _is_number(c):
            token += self.advance()
            if self.index < len(self.text) and self.text[self.index].isspace():
                break
        if not token:
            found = self.peek()
            raise ParseError(
                f"Expected a point at position {start + 1}, found "
                + (f"'{found}'" if found is not None else "end of text")
            )
        point = int(token)
        if not 1 <= point <= self.n:
            raise ParseError(f"point '{token}' at position {start + 1} is out of range 1..{self.n}")
        if point in self.seen:
            raise ParseError(f"point '{token}' at position {start + 1} is repeated")
        self.seen.add(point)
        return point - 1


def _is_number(token: str) -> bool:
    # ASCII digits only: str.isdigit also accepts superscripts that int() rejects
    return token.isascii() and token.isdecimal()


def parse_permutation(text: str, n: int) -> Permutation:
    return CycleParser(text, n).parse()


def format_permutation(p: Permutation) -> str:
    return str(p)


def parse_vector(line: str, n: Optional[int] = None) -> Vector:
    """Parse "2,1,0" (blanks allowed) into a vector, optionally checking its length."""
    tokens = [t.strip() for t in line.strip().split(",")]
    if tokens == [""]:
        raise ParseError("empty vector")
    entries = []
    for k, token in enumerate(tokens, start=1):
        if not _is_number(token):
            raise ParseError(f"entry {k} '{token}' is not a non-negative integer")
        entries.append(int(token))
    if n is not None and len(entries) != n:
        raise ParseError(f"vector has {len(entries)} entries, expected {n}")
    return tuple(entries)


def format_vector(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


# --------------------------
# Group files
# --------------------------

def parse_group_text(text: str) -> Tuple[int, List[Permutation]]:
    """
    Parse a group file: first meaningful line "degree n", then one generator
    per line in cycle notation. Blank lines and lines starting with '#' are ignored.
    """
    n = None
    generators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            head = line.split()
            if len(head) != 2 or head[0] != "degree" or not _is_number(head[1]) or int(head[1]) < 1:
                raise ParseError(f"line {lineno}: expected 'degree n' header, found '{line}'")
            n = int(head[1])
            continue
        try:
            generators.append(parse_permutation(line, n))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if n is None:
        raise ParseError("missing 'degree n' header")
    return n, generators


def load_group_file(path: Path) -> Tuple[int, List[Permutation]]:
    return parse_group_text(Path(path).read_text(encoding="utf-8"))


def format_group_text(n: int, generators: Sequence[Permutation]) -> str:
    lines = [f"degree {n}"] + [format_permutation(g) for g in generators]
    return "\n".join(lines) + "\n"
