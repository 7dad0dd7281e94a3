"""Partitions, generalized partitions, skew-shape predicates, and group labels.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple () is the empty partition.  A generalized partition (the label of a
rational GL_k representation) is a pair (plus, minus) of partitions.  Skew
shapes are passed around as (outer, inner) pairs of partitions.
"""

from dataclasses import dataclass


class InvalidLabelError(ValueError):
    """A partition, generalized partition, or weight is not valid for its group."""


def as_partition(parts) -> tuple:
    """Canonicalize an iterable of row lengths into a partition tuple.

    Trailing zeros are stripped; anything not weakly decreasing or containing
    a negative part raises InvalidLabelError.
    """
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise InvalidLabelError(f"nonpositive part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InvalidLabelError(f"parts not weakly decreasing: {parts}")
    return parts


def size(parts) -> int:
    return sum(parts)


def conjugate(parts) -> tuple:
    """Transpose of the Young diagram."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > c) for c in range(parts[0]))


def contains(outer, inner) -> bool:
    """True iff the diagram of inner fits inside the diagram of outer."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def has_even_rows(parts) -> bool:
    return all(p % 2 == 0 for p in parts)


def has_even_columns(parts) -> bool:
    return has_even_rows(conjugate(parts))


def skew_size(outer, inner) -> int:
    return sum(outer) - sum(inner)


def padded(parts, n):
    """parts extended with zeros to length n."""
    return tuple(parts) + (0,) * (n - len(parts))


def is_strip(outer, inner) -> bool:
    """True iff outer/inner has at most one box in each column."""
    if not contains(outer, inner):
        return False
    pad = padded(inner, len(outer))
    # one box per column <=> rows interlace: inner_i >= outer_{i+1}
    return all(pad[i] >= outer[i + 1] for i in range(len(outer) - 1))


def is_double_strip(outer, inner) -> bool:
    """True iff outer/inner has at most two boxes in each column."""
    if not contains(outer, inner):
        return False
    pad = padded(inner, len(outer))
    return all(pad[i] >= outer[i + 2] for i in range(len(outer) - 2))


# ---------------------------------------------------------------------------
# classical groups and their label sets


@dataclass(frozen=True)
class Group:
    """One of the classical groups O_k, GL_k, Sp_{2k}; rank is always k."""

    family: str  # "O", "GL", or "Sp"
    rank: int

    def __post_init__(self):
        if self.family not in ("O", "GL", "Sp"):
            raise InvalidLabelError(f"unknown group family {self.family!r}")
        if self.rank < 1:
            raise InvalidLabelError(f"rank must be >= 1, got {self.rank}")

    def display(self) -> str:
        """The conventional name: O5, GL4, Sp6 (Sp shows 2k, not k)."""
        n = 2 * self.rank if self.family == "Sp" else self.rank
        return f"{self.family}{n}"

    @staticmethod
    def parse(text: str) -> "Group":
        for family in ("GL", "Sp", "O"):
            if text.startswith(family):
                try:
                    n = int(text[len(family):])
                except ValueError:
                    break
                if family == "Sp":
                    if n % 2 != 0 or n < 2:
                        raise InvalidLabelError(
                            f"Sp groups are named Sp2, Sp4, ...: got {text!r}")
                    return Group("Sp", n // 2)
                if n < 1:
                    break
                return Group(family, n)
        raise InvalidLabelError(f"cannot parse group name {text!r}")


def orthogonal(k: int) -> Group:
    return Group("O", k)


def general_linear(k: int) -> Group:
    return Group("GL", k)


def symplectic(two_k: int) -> Group:
    """Sp_{2k}, named by the matrix size 2k."""
    if two_k % 2 != 0:
        raise InvalidLabelError(f"symplectic matrix size must be even: {two_k}")
    return Group("Sp", two_k // 2)


def is_gl_label(label) -> bool:
    """Generalized partitions are (plus, minus) pairs of partition tuples."""
    return (
        isinstance(label, tuple)
        and len(label) == 2
        and all(isinstance(part, tuple) for part in label)
    )


def in_k_hat(group: Group, label) -> bool:
    """Whether label indexes an irreducible rational representation of group.

    O_k: first two columns of the diagram hold at most k boxes.
    GL_k: len(plus) + len(minus) <= k.
    Sp_{2k}: at most k rows.
    """
    k = group.rank
    if group.family == "GL":
        if not is_gl_label(label):
            raise InvalidLabelError(f"GL label must be a (plus, minus) pair: {label}")
        plus, minus = label
        return len(plus) + len(minus) <= k
    if is_gl_label(label):
        raise InvalidLabelError(f"{group.family} label must be a single partition")
    if group.family == "O":
        col1 = len(label)
        col2 = sum(1 for p in label if p >= 2)
        return col1 + col2 <= k
    return len(label) <= k  # Sp


def associated_partition(parts, k: int) -> tuple:
    """Replace the first-column length l by k - l, keeping all other columns.

    Defined for members of the O_k label set; an involution on it.
    """
    if not in_k_hat(Group("O", k), parts):
        raise InvalidLabelError(f"{parts} is not an O_{k} label")
    rest = tuple(p - 1 for p in parts if p >= 2)  # columns 2, 3, ...
    height = k - len(parts)
    return tuple(
        (rest[i] + 1) if i < len(rest) else 1 for i in range(height)
    )


def weight_vector_valid(group: Group, delta) -> bool:
    """Whether delta labels an irreducible of the minimal subgroup of group.

    Entries live in {0,1} for O, in Z for GL, in N for Sp; the length is the
    rank in every case.
    """
    if len(delta) != group.rank:
        return False
    if group.family == "O":
        return all(d in (0, 1) for d in delta)
    if group.family == "Sp":
        return all(isinstance(d, int) and d >= 0 for d in delta)
    return all(isinstance(d, int) for d in delta)


# ---------------------------------------------------------------------------
# generalized-partition conversions


def gl_label(plus, minus) -> tuple:
    return (as_partition(plus), as_partition(minus))


def gl_vector_to_label(vector) -> tuple:
    """Split a weakly decreasing integer vector into (plus, minus) partitions."""
    vector = tuple(int(v) for v in vector)
    if any(vector[i] < vector[i + 1] for i in range(len(vector) - 1)):
        raise InvalidLabelError(f"vector not weakly decreasing: {vector}")
    plus = tuple(v for v in vector if v > 0)
    minus = tuple(-v for v in reversed(vector) if v < 0)
    return (plus, minus)


def gl_label_to_vector(label, k: int) -> tuple:
    """Inverse of gl_vector_to_label once the total length k is fixed."""
    plus, minus = label
    if len(plus) + len(minus) > k:
        raise InvalidLabelError(f"{label} does not fit in GL_{k}")
    zeros = (0,) * (k - len(plus) - len(minus))
    return plus + zeros + tuple(-m for m in reversed(minus))


# ---------------------------------------------------------------------------
# text encodings (shared by the CLI and by table keys)


def parse_partition(text: str) -> tuple:
    text = text.strip()
    if text in ("", "0"):
        return ()
    return as_partition(int(t) for t in text.split(","))


def format_partition(parts) -> str:
    return ",".join(str(p) for p in parts) if parts else "0"


def parse_gl_text(text: str, k: int) -> tuple:
    """Parse either 'plus|minus' or a length-k integer vector like 2,1,-2,-2."""
    if "|" in text:
        plus_text, minus_text = text.split("|", 1)
        return gl_label(parse_partition(plus_text), parse_partition(minus_text))
    vector = tuple(int(t) for t in text.split(",")) if text.strip() else ()
    if len(vector) != k:
        raise InvalidLabelError(
            f"GL_{k} vector must have {k} entries, got {text!r}")
    return gl_vector_to_label(vector)


def format_gl_label(label, k: int) -> str:
    return ",".join(str(v) for v in gl_label_to_vector(label, k))


def parse_weight(text: str) -> tuple:
    text = text.strip()
    if text == "":
        return ()
    return tuple(int(t) for t in text.split(","))


def format_weight(delta) -> str:
    return ",".join(str(d) for d in delta)


# ---------------------------------------------------------------------------
# enumeration helpers used by the branching formulas and the oracles


def partitions_of(n, max_length=None, max_part=None):
    """Yield all partitions of n, largest part first, optionally bounded."""
    if max_length is None:
        max_length = n
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_length <= 0 or max_part <= 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, max_length - 1, first):
            yield (first,) + rest


def partitions_containing(inner, total, max_length=None, row_caps=None):
    """Yield partitions of the given total that contain inner.

    row_caps, when given, bounds each row: result[i] <= row_caps[i] (rows
    beyond len(row_caps) are forbidden).  max_length bounds the number of rows.
    """
    inner = tuple(inner)
    if total < sum(inner):
        return
    if max_length is None:
        max_length = max(total, len(inner))
    if row_caps is not None:
        max_length = min(max_length, len(row_caps))
    if len(inner) > max_length:
        return

    def build(row, prev, remaining, acc):
        if remaining == 0:
            if row >= len(inner):
                yield tuple(acc)
            return
        if row == max_length:
            return
        low = max(inner[row], 1) if row < len(inner) else 1
        high = min(prev, remaining)
        if row_caps is not None:
            high = min(high, row_caps[row])
        tail = sum(inner[row + 1:])
        for part in range(high, low - 1, -1):
            if remaining - part < tail:
                continue
            acc.append(part)
            yield from build(row + 1, part, remaining - part, acc)
            acc.pop()

    yield from build(0, total, total, [])


def strip_subpartitions(outer):
    """Yield every mu contained in outer with outer/mu a (horizontal) strip."""
    outer = tuple(outer)

    def build(row, acc):
        if row == len(outer):
            yield as_partition(acc)
            return
        low = outer[row + 1] if row + 1 < len(outer) else 0
        for part in range(outer[row], low - 1, -1):
            acc.append(part)
            yield from build(row + 1, acc)
            acc.pop()

    yield from build(0, [])


def double_strip_subpartitions(outer):
    """Yield every mu contained in outer with outer/mu a double strip."""
    outer = tuple(outer)

    def build(row, acc):
        if row == len(outer):
            yield as_partition(acc)
            return
        low = outer[row + 2] if row + 2 < len(outer) else 0
        high = min(outer[row], acc[-1] if acc else outer[row])
        for part in range(high, low - 1, -1):
            acc.append(part)
            yield from build(row + 1, acc)
            acc.pop()

    yield from build(0, [])
