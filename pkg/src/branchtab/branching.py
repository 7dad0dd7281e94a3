"""Branching multiplicities from a classical group to block-diagonal subgroups.

Two computation routes are provided: the stable Littlewood-Richardson sum for
arbitrary block sizes (valid in a stated stable range), and the fully general
count of K-tableaux for the minimal subgroup, together with the one-step
recursion that connects them.  Closed forms for one-row and one-column shapes
round out the module.
"""

from functools import lru_cache
from math import comb

from . import partitions as pt
from .lr import generalized_lr
from .partitions import Group, InvalidLabelError, in_k_hat, weight_vector_valid
from .tableaux import Tableau, content, enumerate_ssyt, is_lr_tableau, word


class StableRangeError(ValueError):
    """The stable branching formula was invoked outside its proven range."""


def _validate_label(group: Group, label):
    if not in_k_hat(group, label):
        raise InvalidLabelError(f"{label} is not a valid {group.display()} label")


def _validate_weight(group: Group, delta):
    if not weight_vector_valid(group, delta):
        raise InvalidLabelError(
            f"{tuple(delta)} is not a valid weight for the minimal subgroup of "
            f"{group.display()}")


def weight_dimension(group: Group, delta) -> int:
    """Dimension of the minimal-subgroup irreducible labeled by delta."""
    if group.family == "Sp":
        out = 1
        for d in delta:
            out *= d + 1
        return out
    return 1


def weight_to_rank1_labels(group: Group, delta) -> list:
    """The rank-1 factor labels corresponding to a minimal-subgroup weight."""
    _validate_weight(group, delta)
    if group.family == "O":
        return [(1,) if d else () for d in delta]
    if group.family == "Sp":
        return [(d,) if d else () for d in delta]
    return [((d,), ()) if d > 0 else ((), (-d,)) if d < 0 else ((), ())
            for d in delta]


# ---------------------------------------------------------------------------
# K-tableaux (minimal subgroup): enumeration, counting, weight tables
#
# The per-family first-column constraints below say exactly that every
# restriction of the filling to entries <= i has a shape that is still a
# valid label at rank i.


def _o_prune(rows, r, c, v):
    # necessary partial form of: at most i boxes with entry <= i in columns 1-2
    if c > 1:
        return True
    seen = 0
    for row in rows[:r + 1]:
        for j, val in enumerate(row[:2]):
            if val <= v:
                seen += 1
    return seen <= v


def _o_tableau_ok(tab: Tableau, k: int) -> bool:
    firstcols = sorted(v for _, c, v in tab.cells() if c <= 1)
    for count, v in enumerate(firstcols, start=1):
        if count > v:
            return False
    return True


def _o_weight(tab: Tableau, k: int) -> tuple:
    return tuple(c % 2 for c in content(tab, k))


def _col1_prune(rows, r, c, v):
    if c > 0:
        return True
    seen = sum(1 for row in rows[:r + 1] if row and row[0] <= v)
    return seen <= v


def _first_column_cumulative(tab: Tableau, k: int) -> list:
    """f[i] = number of first-column entries <= i, for i = 0..k."""
    f = [0] * (k + 1)
    for _, c, v in tab.cells():
        if c == 0:
            f[v] += 1
    for i in range(1, k + 1):
        f[i] += f[i - 1]
    return f


def _sp_prune(rows, r, c, v):
    if v % 2 == 0 and r == 0:
        return False  # a barred entry in the first row can never be ballot
    if c > 0:
        return True
    i = (v + 1) // 2
    seen = sum(1 for row in rows[:r + 1] if row and row[0] <= 2 * i)
    return seen <= i


def _sp_tableau_ok(tab: Tableau, k: int) -> bool:
    f = _first_column_cumulative(tab, 2 * k)
    return all(f[2 * i] <= i for i in range(1, k + 1))


def _is_sp_ballot(tab: Tableau) -> bool:
    counts = {}
    for v in word(tab):
        counts[v] = counts.get(v, 0) + 1
        if v % 2 == 0 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def _sp_weight(tab: Tableau, k: int) -> tuple:
    c = content(tab, 2 * k)
    return tuple(c[2 * i] - c[2 * i + 1] for i in range(k))


def _gl_candidates(shape, k: int) -> list:
    out = []
    for tab in enumerate_ssyt(shape, (), k, cell_filter=_col1_prune):
        out.append((tab, _first_column_cumulative(tab, k), content(tab, k)))
    return out


def enumerate_k_tableaux(group: Group, lam, delta=None):
    """Yield the K-tableaux of shape lam (pairs of tableaux for GL).

    With delta given, only tableaux of that weight are produced; the order is
    the canonical enumeration order either way.
    """
    _validate_label(group, lam)
    if delta is not None:
        delta = tuple(delta)
        _validate_weight(group, delta)
    k = group.rank
    if group.family == "O":
        for tab in enumerate_ssyt(lam, (), k, cell_filter=_o_prune):
            if _o_tableau_ok(tab, k) and (delta is None or _o_weight(tab, k) == delta):
                yield tab
    elif group.family == "Sp":
        for tab in enumerate_ssyt(lam, (), 2 * k, cell_filter=_sp_prune):
            if (_sp_tableau_ok(tab, k) and _is_sp_ballot(tab)
                    and (delta is None or _sp_weight(tab, k) == delta)):
                yield tab
    else:
        plus, minus = lam
        minus_side = _gl_candidates(minus, k)
        for tab_p, f_p, content_p in _gl_candidates(plus, k):
            for tab_m, f_m, content_m in minus_side:
                if any(f_p[i] + f_m[i] > i for i in range(1, k + 1)):
                    continue
                weight = tuple(content_p[i] - content_m[i] for i in range(k))
                if delta is None or weight == delta:
                    yield (tab_p, tab_m)


def k_tableau_weight(group: Group, item) -> tuple:
    """Weight of one entry from enumerate_k_tableaux."""
    k = group.rank
    if group.family == "O":
        return _o_weight(item, k)
    if group.family == "Sp":
        return _sp_weight(item, k)
    tab_p, tab_m = item
    cp, cm = content(tab_p, k), content(tab_m, k)
    return tuple(cp[i] - cm[i] for i in range(k))


@lru_cache(maxsize=None)
def _k_tableau_table(group: Group, lam) -> dict:
    table = {}
    for item in enumerate_k_tableaux(group, lam):
        w = k_tableau_weight(group, item)
        table[w] = table.get(w, 0) + 1
    return table


def k_tableau_table(group: Group, lam) -> dict:
    """Map weight -> number of K-tableaux of shape lam with that weight."""
    _validate_label(group, lam)
    return dict(_k_tableau_table(group, _freeze(lam)))


def k_tableau_count(group: Group, lam, delta) -> int:
    """The branching multiplicity of delta in lam, counted by K-tableaux."""
    _validate_label(group, lam)
    delta = tuple(delta)
    _validate_weight(group, delta)
    return _k_tableau_table(group, _freeze(lam)).get(delta, 0)


def _freeze(lam):
    if pt.is_gl_label(lam):
        return (tuple(lam[0]), tuple(lam[1]))
    return tuple(lam)


# ---------------------------------------------------------------------------
# one-step branching (rank k to rank k-1 times rank 1) and its iteration


def two_letter_lr_weights(outer, inner) -> dict:
    """Counts of lattice fillings of outer/inner with 1s and 2s, by #1 - #2."""
    out = {}
    for tab in enumerate_ssyt(outer, inner, 2):
        if is_lr_tableau(tab):
            c = content(tab, 2)
            d = c[0] - c[1]
            out[d] = out.get(d, 0) + 1
    return out


def one_step_branch(group: Group, lam) -> dict:
    """Branching table of lam one block down: (sub-label, rank-1 weight) -> count.

    O and GL steps are multiplicity-free (strip conditions); the Sp step counts
    two-letter lattice fillings of the skew between consecutive labels.
    """
    _validate_label(group, lam)
    k = group.rank
    if k < 2:
        raise InvalidLabelError("one-step branching requires rank >= 2")
    sub = Group(group.family, k - 1)
    table = {}
    if group.family == "O":
        for mu in pt.strip_subpartitions(lam):
            if in_k_hat(sub, mu):
                table[(mu, pt.skew_size(lam, mu) % 2)] = 1
    elif group.family == "GL":
        plus, minus = lam
        for mu_p in pt.strip_subpartitions(plus):
            for mu_m in pt.strip_subpartitions(minus):
                if len(mu_p) + len(mu_m) <= k - 1:
                    d = pt.skew_size(plus, mu_p) - pt.skew_size(minus, mu_m)
                    table[((mu_p, mu_m), d)] = 1
    else:
        for mu in pt.double_strip_subpartitions(lam):
            if len(mu) <= k - 1:
                for d, ways in two_letter_lr_weights(lam, mu).items():
                    table[(mu, d)] = table.get((mu, d), 0) + ways
    return table


def _rank1_weight(group: Group, label) -> int:
    if group.family == "GL":
        plus, minus = label
        return sum(plus) - sum(minus)
    return sum(label)


def iterate_branch(group: Group, lam) -> dict:
    """Full minimal-subgroup table of lam, built by composing one-step tables."""
    _validate_label(group, lam)
    state = {_freeze(lam): {(): 1}}
    for i in range(group.rank, 1, -1):
        level = Group(group.family, i)
        nxt = {}
        for label, suffixes in state.items():
            for (mu, d), mult in one_step_branch(level, label).items():
                dest = nxt.setdefault(mu, {})
                for suffix, ways in suffixes.items():
                    key = (d,) + suffix
                    dest[key] = dest.get(key, 0) + mult * ways
        state = nxt
    result = {}
    for label, suffixes in state.items():
        d1 = _rank1_weight(group, label)
        for suffix, ways in suffixes.items():
            key = (d1,) + suffix
            result[key] = result.get(key, 0) + ways
    return result


def assoc_symmetry_pair(lam, mu, delta, k):
    """Image of (lam, mu, delta) under the determinant-twist symmetry of O_k."""
    if delta not in (0, 1):
        raise InvalidLabelError(f"delta must be 0 or 1, got {delta}")
    if k < 2:
        raise InvalidLabelError("the symmetry needs rank k >= 2")
    lam_bar = pt.associated_partition(lam, k)
    mu_bar = pt.associated_partition(mu, k - 1)
    return lam_bar, mu_bar, 1 - delta


# ---------------------------------------------------------------------------
# stable branching rule (arbitrary blocks, in range)


def stable_range_violation(group: Group, blocks, lam, mus, n_or_pq):
    """Explain which stable-range hypothesis fails, or None if all hold."""
    blocks = tuple(blocks)
    if not blocks or any(b < 1 for b in blocks):
        raise InvalidLabelError(f"blocks must be positive integers: {blocks}")
    if sum(blocks) != group.rank:
        raise InvalidLabelError(
            f"blocks {blocks} sum to {sum(blocks)}, not the rank {group.rank}")
    if len(mus) != len(blocks):
        raise InvalidLabelError(
            f"got {len(mus)} subgroup labels for {len(blocks)} blocks")
    smallest = min(blocks)
    if group.family == "GL":
        p, q = n_or_pq
        if p < 1 or q < 1:
            return f"p and q must be positive, got p={p}, q={q}"
        if p + q > 1 + smallest:
            return (f"p+q = {p + q} exceeds 1 + min block size = {1 + smallest}")
        plus, minus = lam
        if len(plus) > p or len(minus) > q:
            return (f"lambda needs at most p={p} positive and q={q} negative "
                    f"parts, got {len(plus)} and {len(minus)}")
        for i, mu in enumerate(mus):
            mu_p, mu_m = mu
            if len(mu_p) > p or len(mu_m) > q:
                return (f"mu_{i + 1} needs at most p={p} positive and q={q} "
                        f"negative parts, got {len(mu_p)} and {len(mu_m)}")
        return None
    n = n_or_pq
    if n < 1:
        return f"n must be positive, got {n}"
    if group.family == "O":
        if 2 * n > 1 + smallest:
            return (f"n = {n} exceeds (1 + min block size)/2 = "
                    f"{(1 + smallest) / 2:g}")
    else:
        if n > 1 + smallest:
            return f"n = {n} exceeds 1 + min block size = {1 + smallest}"
    if len(lam) > n:
        return f"lambda has {len(lam)} rows, more than n = {n}"
    for i, mu in enumerate(mus):
        if len(mu) > n:
            return f"mu_{i + 1} has {len(mu)} rows, more than n = {n}"
    return None


def stable_range_ok(group: Group, blocks, lam, mus, n_or_pq) -> bool:
    return stable_range_violation(group, blocks, lam, mus, n_or_pq) is None


def _nu_tuples(count, total, max_length, keep):
    if count == 0:
        if total == 0:
            yield ()
        return
    for first_size in range(total + 1):
        for nu in pt.partitions_of(first_size, max_length=max_length):
            if keep(nu):
                for rest in _nu_tuples(count - 1, total - first_size,
                                       max_length, keep):
                    yield (nu,) + rest


def stable_branch(group: Group, blocks, lam, mus, n_or_pq) -> int:
    """Branching multiplicity via the stable LR-sum formula.

    Raises StableRangeError outside the proven range rather than returning an
    unsupported number.
    """
    blocks = tuple(blocks)
    _validate_label(group, lam)
    for b, mu in zip(blocks, mus):
        _validate_label(Group(group.family, b), mu)
    problem = stable_range_violation(group, blocks, lam, mus, n_or_pq)
    if problem is not None:
        raise StableRangeError(problem)
    r = len(blocks)
    if group.family == "GL":
        p, q = n_or_pq
        plus, minus = lam
        budget_p = sum(plus) - sum(sum(mu[0]) for mu in mus)
        budget_m = sum(minus) - sum(sum(mu[1]) for mu in mus)
        if budget_p != budget_m or budget_p < 0:
            return 0
        total = 0
        for nus in _nu_tuples(r - 1, budget_p, min(p, q), lambda nu: True):
            factor_p = generalized_lr(plus, [mu[0] for mu in mus] + list(nus))
            if factor_p == 0:
                continue
            factor_m = generalized_lr(minus, [mu[1] for mu in mus] + list(nus))
            total += factor_p * factor_m
        return total

    budget = sum(lam) - sum(sum(mu) for mu in mus)
    if budget < 0:
        return 0
    keep = pt.has_even_rows if group.family == "O" else pt.has_even_columns
    total = 0
    for nus in _nu_tuples(r - 1, budget, n_or_pq, keep):
        total += generalized_lr(lam, list(mus) + list(nus))
    return total


# ---------------------------------------------------------------------------
# closed forms for one-row and one-column shapes


def multiset_number(k: int, n: int) -> int:
    """Number of n-element multisets drawn from k distinct elements."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    if k <= 0:
        return 0
    return comb(k + n - 1, n)


def ballot_number(x: int, y: int) -> int:
    """Sequences of x unmarked and y marked terms, marks never ahead."""
    if y < 0 or x < y:
        return 0
    numerator = (x - y + 1) * comb(x + y + 1, y)
    quotient, remainder = divmod(numerator, x + y + 1)
    assert remainder == 0
    return quotient


def multiplicity_one_row(group: Group, row_spec, delta) -> int:
    """Branching multiplicity when the shape is a single row.

    row_spec is the row length a for O and Sp, and a pair (b, c) of the
    positive and negative row lengths for GL.
    """
    delta = tuple(delta)
    _validate_weight(group, delta)
    k = group.rank
    if group.family == "GL":
        b, c = row_spec
        if b < 0 or c < 0:
            raise InvalidLabelError(f"row lengths must be nonnegative: {row_spec}")
        lam = ((b,) if b else (), (c,) if c else ())
        _validate_label(group, lam)
        if sum(delta) != b - c:
            return 0
        rem = b + c - sum(abs(d) for d in delta)
        if rem < 0 or rem % 2:
            return 0
        return multiset_number(k - 1, rem // 2)
    a = int(row_spec)
    if a < 0:
        raise InvalidLabelError(f"row length must be nonnegative: {a}")
    lam = (a,) if a else ()
    _validate_label(group, lam)
    if group.family == "Sp":
        return 1 if a == sum(delta) else 0
    rem = a - sum(delta)
    if rem < 0 or rem % 2:
        return 0
    return multiset_number(k - 1, rem // 2)


def multiplicity_one_column(group: Group, col_spec, delta) -> int:
    """Branching multiplicity when the shape is a single column.

    col_spec is the column height a for O and Sp, and a pair (b, c) of the
    positive and negative column heights for GL.
    """
    delta = tuple(delta)
    _validate_weight(group, delta)
    k = group.rank
    if group.family == "GL":
        b, c = col_spec
        if b < 0 or c < 0 or b + c > k:
            raise InvalidLabelError(
                f"column heights must be nonnegative with b + c <= {k}: {col_spec}")
        if any(abs(d) > 1 for d in delta) or sum(delta) != b - c:
            return 0
        a = b + c
    else:
        a = int(col_spec)
        if not 0 <= a <= k:
            raise InvalidLabelError(f"column height must be in 0..{k}: {a}")
        if group.family == "O":
            return 1 if a == sum(delta) else 0
        if any(d > 1 for d in delta):
            return 0
    abs_sum = sum(abs(d) for d in delta)
    rem = a - abs_sum
    if rem < 0 or rem % 2:
        return 0
    return ballot_number((2 * k - a - abs_sum) // 2, rem // 2)
