"""Sign patterns: p x d arrays over {+1, -1}.

A pattern can be packed into a ``p*d``-bit integer code.  Cells are read in
row-major order and cell ``k`` (0-based) is stored in bit ``p*d - 1 - k``, a set
bit meaning a ``-`` sign.  With this layout ``format(code, "0{pd}b")`` spells the
pattern row by row, and integer order on codes is lexicographic order on those
bitstrings.
"""

from __future__ import annotations

import numpy as np

__all__ = ["SignPattern", "PatternParseError", "parse_pattern", "format_pattern"]


class PatternParseError(ValueError):
    """Malformed pattern text; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SignPattern:
    """Immutable p x d sign pattern.

    ``signs[i-1, j-1]`` is the sign at row ``i`` and column ``j`` (1-based in the
    combinatorial API, 0-based in the array).
    """

    __slots__ = ("_signs", "_key")

    def __init__(self, signs):
        arr = np.array(signs, dtype=np.int8)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"a sign pattern must be a non-empty 2-d array, got shape {arr.shape}")
        if not np.all((arr == 1) | (arr == -1)):
            raise ValueError("sign pattern entries must be +1 or -1")
        arr.setflags(write=False)
        self._signs = arr
        self._key = (arr.shape, arr.tobytes())

    @property
    def signs(self) -> np.ndarray:
        return self._signs

    @property
    def p(self) -> int:
        return self._signs.shape[0]

    @property
    def d(self) -> int:
        return self._signs.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._signs.shape

    def __getitem__(self, ij) -> int:
        """1-based access: ``pattern[i, j]``."""
        i, j = ij
        if not (1 <= i <= self.p and 1 <= j <= self.d):
            raise IndexError(f"cell ({i}, {j}) outside a {self.p}x{self.d} pattern")
        return int(self._signs[i - 1, j - 1])

    def __eq__(self, other):
        return isinstance(other, SignPattern) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"SignPattern({self.to_string('/')!r})"

    # constructors

    @classmethod
    def full(cls, p: int, d: int, sign: int = 1) -> SignPattern:
        return cls(np.full((p, d), sign, dtype=np.int8))

    @classmethod
    def from_function(cls, p: int, d: int, negative) -> SignPattern:
        """Pattern with ``-`` exactly where ``negative(i, j)`` holds (1-based)."""
        arr = np.ones((p, d), dtype=np.int8)
        for i in range(1, p + 1):
            for j in range(1, d + 1):
                if negative(i, j):
                    arr[i - 1, j - 1] = -1
        return cls(arr)

    @classmethod
    def from_rows(cls, rows) -> SignPattern:
        """From strings such as ``["+-+", "+-+"]``."""
        return parse_pattern("\n".join(rows))

    @classmethod
    def from_string(cls, text: str) -> SignPattern:
        """From ``"+-+/+-+"`` or newline-separated rows."""
        return parse_pattern(text.replace("/", "\n"))

    @classmethod
    def from_code(cls, code: int, p: int, d: int) -> SignPattern:
        n = p * d
        if not 0 <= code < (1 << n):
            raise ValueError(f"code {code} out of range for a {p}x{d} pattern")
        bits = np.array([(code >> (n - 1 - k)) & 1 for k in range(n)], dtype=np.int8)
        return cls((1 - 2 * bits).reshape(p, d))

    # conversions

    @property
    def code(self) -> int:
        c = 0
        for s in self._signs.ravel():
            c = (c << 1) | (1 if s < 0 else 0)
        return c

    def bitstring(self) -> str:
        return "".join("1" if s < 0 else "0" for s in self._signs.ravel())

    def to_string(self, sep: str = "\n") -> str:
        return sep.join("".join("+" if s > 0 else "-" for s in row) for row in self._signs)

    def reverse(self) -> SignPattern:
        """180 degree rotation: ``e'[i, j] = e[p+1-i, d+1-j]``."""
        return SignPattern(self._signs[::-1, ::-1])

    def submatrix(self, rows, cols) -> SignPattern:
        """Sub-pattern on 1-based index ranges or sequences."""
        r = [i - 1 for i in rows]
        c = [j - 1 for j in cols]
        return SignPattern(self._signs[np.ix_(r, c)])

    def with_row(self, row, at_end: bool = True) -> SignPattern:
        row = np.asarray(row, dtype=np.int8).reshape(1, -1)
        parts = (self._signs, row) if at_end else (row, self._signs)
        return SignPattern(np.vstack(parts))


def parse_pattern(text: str) -> SignPattern:
    """Parse the pattern file format.

    An optional header line ``"p d"`` is followed by ``p`` lines of ``d``
    characters from ``{+, -}``.  Blank lines and ``#`` comments are skipped.
    """
    lines = [(n, raw.rstrip("\r")) for n, raw in enumerate(text.split("\n"), start=1)]
    body = [(n, ln) for n, ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if not body:
        raise PatternParseError("empty pattern", 1, 1)
    header = None
    first_n, first = body[0]
    tokens = first.split()
    if tokens and all(tok.isdigit() for tok in tokens):
        if len(tokens) != 2:
            raise PatternParseError("header must be 'p d'", first_n, 1)
        header = (int(tokens[0]), int(tokens[1]))
        body = body[1:]
    rows = []
    width = None
    for n, ln in body:
        stripped = ln.strip()
        offset = len(ln) - len(ln.lstrip())
        row = []
        for c, ch in enumerate(stripped, start=offset + 1):
            if ch == "+":
                row.append(1)
            elif ch in "-−":
                row.append(-1)
            else:
                raise PatternParseError(f"unexpected character {ch!r}", n, c)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise PatternParseError(f"row has {len(row)} signs, expected {width}", n, offset + 1)
        rows.append(row)
    if not rows:
        raise PatternParseError("header without pattern rows", first_n, 1)
    if header is not None and header != (len(rows), width):
        raise PatternParseError(
            f"header says {header[0]}x{header[1]} but body is {len(rows)}x{width}", first_n, 1
        )
    return SignPattern(rows)


def format_pattern(pattern: SignPattern, header: bool = True) -> str:
    body = pattern.to_string("\n")
    return (f"{pattern.p} {pattern.d}\n" if header else "") + body + "\n"
