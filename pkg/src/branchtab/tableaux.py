"""Semistandard (skew) tableau enumeration, reading words, and ballot tests.

Symbols are integers 1..n.  A barred alphabet 1 < 1' < 2 < 2' < ... < k < k'
is encoded on 1..2k with odd symbols unbarred (2i-1 = i) and even symbols
barred (2i = i-bar); the encoding gives a single total order.
"""

from typing import NamedTuple

from .partitions import padded, contains


class Alphabet(NamedTuple):
    size: int
    barred: bool = False


def barred_alphabet(k: int) -> Alphabet:
    """The 2k-symbol alphabet 1 < 1-bar < ... < k < k-bar."""
    return Alphabet(2 * k, barred=True)


class Tableau(NamedTuple):
    """A semistandard filling of outer/inner; rows[r] covers the cells of row r."""

    outer: tuple
    inner: tuple
    rows: tuple

    def cells(self):
        pad = padded(self.inner, len(self.outer))
        for r, row in enumerate(self.rows):
            for j, value in enumerate(row):
                yield r, pad[r] + j, value


def enumerate_ssyt(outer, inner=(), alphabet=1, max_content=None, cell_filter=None):
    """Yield every semistandard filling of outer/inner with symbols 1..n.

    Cells are filled row by row, left to right, trying symbols in increasing
    order, so the stream is deterministic and lexicographic by the row-major
    reading of the filling.  max_content caps how many times each symbol may
    be used (index s-1 for symbol s).  cell_filter(rows, r, c, v) is called
    after each tentative placement and prunes the subtree when it returns
    False; it must never reject a placement that admits a valid completion.
    """
    if not contains(outer, inner):
        return
    n = alphabet.size if isinstance(alphabet, Alphabet) else int(alphabet)
    pad = padded(inner, len(outer))
    cells = [(r, c) for r in range(len(outer)) for c in range(pad[r], outer[r])]
    rows = [[] for _ in range(len(outer))]
    counts = [0] * (n + 1)

    def fill(i):
        if i == len(cells):
            yield Tableau(tuple(outer), tuple(inner), tuple(tuple(row) for row in rows))
            return
        r, c = cells[i]
        low = 1
        if c > pad[r]:
            low = rows[r][-1]  # weakly increasing along the row
        if r > 0 and c >= pad[r - 1]:
            low = max(low, rows[r - 1][c - pad[r - 1]] + 1)  # strict down columns
        for v in range(low, n + 1):
            if max_content is not None and counts[v] >= max_content[v - 1]:
                continue
            rows[r].append(v)
            counts[v] += 1
            if cell_filter is None or cell_filter(rows, r, c, v):
                yield from fill(i + 1)
            counts[v] -= 1
            rows[r].pop()

    yield from fill(0)


def word(tableau: Tableau) -> tuple:
    """Read each row right to left, rows top to bottom."""
    out = []
    for row in tableau.rows:
        out.extend(reversed(row))
    return tuple(out)


def content(tableau: Tableau, size: int) -> tuple:
    counts = [0] * size
    for row in tableau.rows:
        for v in row:
            counts[v - 1] += 1
    return tuple(counts)


def is_lattice_word(letters) -> bool:
    """Every prefix has at least as many i's as (i+1)'s, for every i."""
    counts = {}
    for v in letters:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def is_lr_tableau(tableau: Tableau) -> bool:
    """Littlewood-Richardson condition on the reading word."""
    return is_lattice_word(word(tableau))


def symbol_text(symbol: int, barred: bool) -> str:
    if not barred:
        return str(symbol)
    if symbol % 2 == 1:
        return str((symbol + 1) // 2)
    return f"{symbol // 2}~"


def tableau_text(tableau: Tableau, barred: bool = False) -> str:
    """Rows as comma-separated symbols, rows joined by '/'; bars shown as '~'."""
    return "/".join(
        ",".join(symbol_text(v, barred) for v in row) for row in tableau.rows
    )
