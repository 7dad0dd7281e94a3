"""Cross-validation sweeps comparing independent computation routes.

Each check returns (instances, failure): how many instances were verified and
None on full agreement, otherwise a short description of the first mismatch.
The checks pit the tableau counts against the chain recursion, the stable LR
sum, the closed forms, and the monomial-arithmetic oracles.
"""

from itertools import product

from . import partitions as pt
from .partitions import Group
from .branching import (
    assoc_symmetry_pair,
    enumerate_k_tableaux,
    iterate_branch,
    k_tableau_count,
    k_tableau_table,
    multiplicity_one_column,
    multiplicity_one_row,
    one_step_branch,
    stable_branch,
    weight_dimension,
    weight_to_rank1_labels,
)
from .lr import lr_coefficient, lr_tableaux, pieri_coefficient, schur_multiply
from .oracles import (
    chain_oracle,
    group_dimension,
    howe_graded_dimension_check,
    schur_product_expansion,
)
from .tableaux import tableau_text, word


# ---------------------------------------------------------------------------
# label sweeps


def o_labels(k, max_size):
    for n in range(max_size + 1):
        for lam in pt.partitions_of(n):
            if pt.in_k_hat(Group("O", k), lam):
                yield lam


def sp_labels(k, max_size):
    for n in range(max_size + 1):
        yield from pt.partitions_of(n, max_length=k)


def gl_labels(k, max_size):
    for total in range(max_size + 1):
        for a in range(total + 1):
            for plus in pt.partitions_of(a):
                for minus in pt.partitions_of(total - a):
                    if len(plus) + len(minus) <= k:
                        yield (plus, minus)


def desk_scale_labels(max_size=6, o_max=5, gl_max=4, sp_max=3):
    for k in range(1, o_max + 1):
        for lam in o_labels(k, max_size):
            yield Group("O", k), lam
    for k in range(1, gl_max + 1):
        for lam in gl_labels(k, max_size):
            yield Group("GL", k), lam
    for k in range(1, sp_max + 1):
        for lam in sp_labels(k, max_size):
            yield Group("Sp", k), lam


def weak_compositions(total, slots):
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, slots - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# golden examples


def check_lr_golden():
    """The worked 4-row LR example: coefficient 3 with known reading words."""
    lam, mu, nu = (6, 5, 3, 1), (5, 2, 1), (4, 3)
    tabs = list(lr_tableaux(lam, mu, nu))
    words = ["".join(map(str, word(t))) for t in tabs]
    if len(tabs) != 3:
        return 1, f"LR golden count: expected 3, got {len(tabs)}"
    if words != ["1111222", "1211212", "1211221"]:
        return 1, f"LR golden words: got {words}"
    if lr_coefficient(lam, mu, nu) != 3:
        return 1, "lr_coefficient disagrees with its own tableau listing"
    return 1, None


WORKED_EXAMPLES = [
    (Group("O", 5), (2, 2), (0, 0, 0, 0, 0), 5,
     ["2,2/4,4", "2,2/5,5", "3,3/4,4", "3,3/5,5", "4,4/5,5"]),
    (Group("GL", 4), ((2, 1), (2, 2)), (2, -1, -2, 0), 1,
     [("1,1/4", "2,3/3,4")]),
    (Group("Sp", 3), (2, 2), (0, 0, 0), 3,
     ["2,2/2~,2~", "2,3/2~,3~", "3,3/3~,3~"]),
]


def check_worked_examples():
    """Three hand-verifiable multiplicities (5, 1, 3) with their tableau lists."""
    checked = 0
    for group, lam, delta, expected, listing in WORKED_EXAMPLES:
        count = k_tableau_count(group, lam, delta)
        if count != expected:
            return checked, (f"{group.display()} {lam} {delta}: "
                             f"expected {expected}, got {count}")
        items = list(enumerate_k_tableaux(group, lam, delta))
        if group.family == "GL":
            texts = [(tableau_text(p), tableau_text(m)) for p, m in items]
        else:
            texts = [tableau_text(t, barred=group.family == "Sp") for t in items]
        if texts != listing:
            return checked, f"{group.display()} {lam} listing: got {texts}"
        checked += 1
    value = stable_branch(Group("Sp", 3), (1, 1, 1), (2, 2), [(), (), ()], 2)
    if value != 3:
        return checked, f"stable Sp example: expected 3, got {value}"
    checked += 1
    value = stable_branch(Group("O", 5), (3, 2), (2,), [(), ()], 1)
    if value != 1:
        return checked, f"stable O example: expected 1, got {value}"
    checked += 1
    return checked, None


# ---------------------------------------------------------------------------
# route-equivalence sweeps


def _chain_probes(group, table, lam):
    keys = set(table)
    if group.family == "O":
        keys.update(product((0, 1), repeat=group.rank))
    elif group.family == "Sp":
        top = sum(lam)
        if group.rank <= 3 and top <= 6:
            keys.update(product(range(top + 1), repeat=group.rank))
    else:
        for key in list(keys):
            keys.add((key[0] + 1,) + key[1:])
            keys.add((key[0] - 1,) + key[1:])
    return keys


def check_route_equivalence(max_size=6, o_max=5, gl_max=4, sp_max=3):
    """iterate_branch, k_tableau_table, and chain_oracle must agree entrywise."""
    checked = 0
    for group, lam in desk_scale_labels(max_size, o_max, gl_max, sp_max):
        table = k_tableau_table(group, lam)
        iterated = iterate_branch(group, lam)
        if table != iterated:
            return checked, (f"{group.display()} {lam}: tableau table and "
                             f"one-step iteration differ")
        for delta in _chain_probes(group, table, lam):
            if chain_oracle(group, lam, delta) != table.get(delta, 0):
                return checked, (f"{group.display()} {lam} {delta}: chain count "
                                 f"differs from tableau count")
            checked += 1
    return checked, None


def check_stable_minimal(max_size=6, o_max=5, gl_max=4, sp_max=3):
    """All-ones blocks: the stable LR sum must match the tableau count."""
    checked = 0

    def compare(group, lam, delta, n_or_pq):
        nonlocal checked
        mus = weight_to_rank1_labels(group, delta)
        got = stable_branch(group, (1,) * group.rank, lam, mus, n_or_pq)
        expected = k_tableau_count(group, lam, delta)
        checked += 1
        if got != expected:
            return (f"{group.display()} {lam} {delta}: stable {got} "
                    f"vs tableau {expected}")
        return None

    for k in range(1, o_max + 1):
        group = Group("O", k)
        for lam in o_labels(k, max_size):
            if len(lam) > 1:
                continue
            for delta in product((0, 1), repeat=k):
                err = compare(group, lam, delta, 1)
                if err:
                    return checked, err
    for k in range(1, sp_max + 1):
        group = Group("Sp", k)
        for lam in sp_labels(k, max_size):
            if len(lam) > 2:
                continue
            for delta in product(range(sum(lam) + 1), repeat=k):
                err = compare(group, lam, delta, 2)
                if err:
                    return checked, err
    for k in range(1, gl_max + 1):
        group = Group("GL", k)
        for b in range(max_size + 1):
            for c in range(max_size + 1 - b):
                lam = ((b,) if b else (), (c,) if c else ())
                if not pt.in_k_hat(group, lam):
                    continue
                support = set()
                for s in range(abs(b - c), b + c + 1, 2):
                    pos, neg = (s + b - c) // 2, (s - b + c) // 2
                    for delta in _signed_weights(k, pos, neg):
                        support.add(delta)
                support.update(k_tableau_table(group, lam))
                # a few deliberate zero probes outside the forced support
                support.add((b + c + 1,) + (0,) * (k - 1))
                if k > 1:
                    support.add((b - c + 1,) + (0,) * (k - 1))
                for delta in support:
                    err = compare(group, lam, delta, (1, 1))
                    if err:
                        return checked, err
    return checked, None


def _signed_weights(k, positive_total, negative_total):
    for pos in weak_compositions(positive_total, k):
        for neg in weak_compositions(negative_total, k):
            if all(p == 0 or m == 0 for p, m in zip(pos, neg)):
                yield tuple(p - m for p, m in zip(pos, neg))


TRANSITIVITY_CASES = [
    # group, blocks, n_or_pq, shapes
    (Group("O", 5), (3, 2), 1, [(a,) if a else () for a in range(5)]),
    (Group("O", 6), (3, 3), 2, [(1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1)]),
    (Group("Sp", 3), (2, 1), 2, [(), (1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1)]),
    (Group("Sp", 2), (1, 1), 2, [(2,), (1, 1), (2, 2), (2, 1)]),
    (Group("GL", 4), (2, 2), (1, 1),
     [((b,) if b else (), (c,) if c else ()) for b in range(3) for c in range(3)]),
    (Group("GL", 4), (2, 2), (2, 1),
     [((2, 1), ()), ((1, 1), (1,)), ((2, 2), (1,)), ((2, 1), (2,))]),
]


def _block_labels(group, block, length_bound, size_bound):
    sub = Group(group.family, block)
    if group.family == "GL":
        p, q = length_bound
        out = []
        for total in range(size_bound[0] + size_bound[1] + 1):
            for a in range(total + 1):
                for plus in pt.partitions_of(a, max_length=p):
                    if sum(plus) > size_bound[0]:
                        continue
                    for minus in pt.partitions_of(total - a, max_length=q):
                        if sum(minus) <= size_bound[1] and pt.in_k_hat(sub, (plus, minus)):
                            out.append((plus, minus))
        return out
    return [lam for n in range(size_bound + 1)
            for lam in pt.partitions_of(n, max_length=length_bound)
            if pt.in_k_hat(sub, lam)]


def check_transitivity():
    """Two-block stable branching composed with factor tableau counts."""
    checked = 0
    for group, blocks, n_or_pq, shapes in TRANSITIVITY_CASES:
        a, b = blocks
        sub_a, sub_b = Group(group.family, a), Group(group.family, b)
        for lam in shapes:
            if group.family == "GL":
                p, q = n_or_pq
                bound = (sum(lam[0]), sum(lam[1]))
                labels_a = _block_labels(group, a, (p, q), bound)
                labels_b = _block_labels(group, b, (p, q), bound)
            else:
                labels_a = _block_labels(group, a, n_or_pq, sum(lam))
                labels_b = _block_labels(group, b, n_or_pq, sum(lam))
            pair_terms = []
            for mu1 in labels_a:
                for mu2 in labels_b:
                    value = stable_branch(group, blocks, lam, [mu1, mu2], n_or_pq)
                    if value:
                        pair_terms.append((mu1, mu2, value))
            table_a = {mu: k_tableau_table(sub_a, mu) for mu in labels_a}
            table_b = {mu: k_tableau_table(sub_b, mu) for mu in labels_b}
            full = k_tableau_table(group, lam)
            deltas = set(full)
            for mu1, mu2, value in pair_terms:
                for d1 in table_a[mu1]:
                    for d2 in table_b[mu2]:
                        deltas.add(d1 + d2)
            for delta in deltas:
                d1, d2 = delta[:a], delta[a:]
                total = sum(
                    value * table_a[mu1].get(d1, 0) * table_b[mu2].get(d2, 0)
                    for mu1, mu2, value in pair_terms)
                if total != full.get(delta, 0):
                    return checked, (f"{group.display()} blocks {blocks} {lam} "
                                     f"{delta}: composed {total} vs "
                                     f"{full.get(delta, 0)}")
                checked += 1
    return checked, None


def check_corollary_closure(max_row=8, max_rank=6):
    """One-row and one-column closed forms against direct enumeration."""
    checked = 0

    def compare(group, table, formula, deltas):
        nonlocal checked
        for delta in deltas:
            got = formula(delta)
            expected = table.get(tuple(delta), 0)
            checked += 1
            if got != expected:
                return f"{group.display()}: {tuple(delta)}: {got} vs {expected}"
        return None

    for k in range(1, max_rank + 1):
        o_group, sp_group, gl_group = Group("O", k), Group("Sp", k), Group("GL", k)
        bits = list(product((0, 1), repeat=k))
        trits = list(product((0, 1, 2), repeat=k))
        signed_trits = list(product((-1, 0, 1), repeat=k)) if k <= 6 else []
        for a in range(max_row + 1):
            lam = (a,) if a else ()
            # O rows: full 0/1 box
            if pt.in_k_hat(o_group, lam):
                table = k_tableau_table(o_group, lam)
                err = compare(o_group, table,
                              lambda d: multiplicity_one_row(o_group, a, d), bits)
                if err:
                    return checked, "one-row " + err
            # Sp rows: union of supports plus zero probes
            if pt.in_k_hat(sp_group, lam):
                table = k_tableau_table(sp_group, lam)
                deltas = set(table)
                deltas.update(weak_compositions(a, k))
                deltas.add((a + 1,) + (0,) * (k - 1))
                if a >= 1:
                    deltas.add((a - 1,) + (0,) * (k - 1))
                err = compare(sp_group, table,
                              lambda d: multiplicity_one_row(sp_group, a, d),
                              deltas)
                if err:
                    return checked, "one-row " + err
        # GL rows: union of supports plus zero probes
        for b in range(max_row + 1):
            for c in range(max_row + 1 - b):
                lam = ((b,) if b else (), (c,) if c else ())
                if not pt.in_k_hat(gl_group, lam):
                    continue
                table = k_tableau_table(gl_group, lam)
                deltas = set(table)
                for s in range(abs(b - c), b + c + 1, 2):
                    pos, neg = (s + b - c) // 2, (s - b + c) // 2
                    deltas.update(_signed_weights(k, pos, neg))
                deltas.add((b + c + 1,) + (0,) * (k - 1))
                deltas.add((b - c + 1,) + (0,) * (k - 1))
                err = compare(
                    gl_group, table,
                    lambda d: multiplicity_one_row(gl_group, (b, c), d), deltas)
                if err:
                    return checked, "one-row " + err
        # columns
        for a in range(k + 1):
            lam = (1,) * a
            table = k_tableau_table(o_group, lam)
            err = compare(o_group, table,
                          lambda d: multiplicity_one_column(o_group, a, d), bits)
            if err:
                return checked, "one-column " + err
            if pt.in_k_hat(sp_group, lam):
                table = k_tableau_table(sp_group, lam)
                err = compare(sp_group, table,
                              lambda d: multiplicity_one_column(sp_group, a, d),
                              trits)
                if err:
                    return checked, "one-column " + err
        for b in range(max_rank + 1):
            for c in range(max_rank + 1 - b):
                if b + c > k:
                    continue
                lam = ((1,) * b, (1,) * c)
                table = k_tableau_table(gl_group, lam)
                err = compare(
                    gl_group, table,
                    lambda d: multiplicity_one_column(gl_group, (b, c), d),
                    signed_trits)
                if err:
                    return checked, "one-column " + err
    return checked, None


def check_assoc_symmetry(max_size=6, max_rank=5):
    """Determinant-twist symmetry of the one-step orthogonal rule."""
    checked = 0
    for k in range(2, max_rank + 1):
        for lam in o_labels(k, max_size):
            lam_bar = pt.associated_partition(lam, k)
            table = one_step_branch(Group("O", k), lam)
            table_bar = one_step_branch(Group("O", k), lam_bar)
            if len(table) != len(table_bar):
                return checked, f"O_{k} {lam}: table sizes differ under the twist"
            for (mu, delta), value in table.items():
                _, mu_bar, delta_bar = assoc_symmetry_pair(lam, mu, delta, k)
                if table_bar.get((mu_bar, delta_bar), 0) != value:
                    return checked, (f"O_{k} {lam} ({mu},{delta}): twisted entry "
                                     f"missing or different")
                checked += 1
            # strip/parity predicate identity, including labels not under lam
            for mu in o_labels(k - 1, max_size + 2):
                for delta in (0, 1):
                    _, mu_bar, delta_bar = assoc_symmetry_pair(lam, mu, delta, k)
                    lhs = (pt.is_strip(lam, mu)
                           and pt.skew_size(lam, mu) % 2 == delta)
                    rhs = (pt.is_strip(lam_bar, mu_bar)
                           and pt.skew_size(lam_bar, mu_bar) % 2 == delta_bar)
                    if lhs != rhs:
                        return checked, (f"O_{k} {lam} {mu} {delta}: strip/parity "
                                         f"predicate not twist-invariant")
                    checked += 1
    return checked, None


# ---------------------------------------------------------------------------
# oracle sweeps


def check_lr_oracle(max_total=8):
    """Monomial-arithmetic expansions against LR tableau enumeration."""
    checked = 0
    for total in range(max_total + 1):
        n = max(total, 1)
        for size_mu in range(total + 1):
            for mu in pt.partitions_of(size_mu):
                for nu in pt.partitions_of(total - size_mu):
                    if mu > nu:
                        continue  # the product is symmetric
                    expansion = schur_product_expansion(mu, nu, n)
                    direct = {}
                    for lam in pt.partitions_of(total, max_length=n):
                        c = lr_coefficient(lam, mu, nu)
                        if c:
                            direct[lam] = c
                    if direct != expansion:
                        return checked, f"product {mu} * {nu}: expansions differ"
                    folded = schur_multiply({mu: 1}, nu)
                    if folded != expansion:
                        return checked, (f"product {mu} * {nu}: schur_multiply "
                                         f"differs from the oracle")
                    checked += 1
    return checked, None


def check_howe(max_dim=4, max_degree=4):
    """Graded dimension identities for the three duality settings."""
    checked = 0
    for n in range(1, max_dim + 1):
        for d in range(max_degree + 1):
            for setting in ("SM", "AM"):
                if not howe_graded_dimension_check(setting, n, d):
                    return checked, f"{setting} n={n} d={d} failed"
                checked += 1
    for p in range(1, max_dim + 1):
        for q in range(1, max_dim + 1):
            for d in range(max_degree + 1):
                if not howe_graded_dimension_check("MM", (p, q), d):
                    return checked, f"MM p={p} q={q} d={d} failed"
                checked += 1
    return checked, None


def check_dimension_identity(max_size=6, o_max=5, gl_max=4, sp_max=3):
    """Weight-table masses must add up to the Weyl dimension products."""
    checked = 0
    for group, lam in desk_scale_labels(max_size, o_max, gl_max, sp_max):
        table = k_tableau_table(group, lam)
        total = sum(count * weight_dimension(group, delta)
                    for delta, count in table.items())
        expected = group_dimension(group, lam)
        if total != expected:
            return checked, (f"{group.display()} {lam}: weight mass {total} "
                             f"vs dimension {expected}")
        checked += 1
    return checked, None


def check_pieri(max_size=8):
    """Pieri rule agrees with single-row LR coefficients."""
    checked = 0
    for n in range(max_size + 1):
        for lam in pt.partitions_of(n):
            for mu_size in range(n + 1):
                for mu in pt.partitions_of(mu_size):
                    if not pt.contains(lam, mu):
                        continue
                    m = n - mu_size
                    direct = pieri_coefficient(lam, mu, m)
                    via_lr = lr_coefficient(lam, mu, (m,) if m else ())
                    if direct != via_lr:
                        return checked, f"Pieri {lam}/{mu}, m={m}: {direct} vs {via_lr}"
                    checked += 1
    return checked, None


# ---------------------------------------------------------------------------
# harness


QUICK_CHECKS = [
    ("lr-golden", check_lr_golden),
    ("worked-examples", check_worked_examples),
    ("route-equivalence", lambda: check_route_equivalence(4, 3, 2, 2)),
    ("stable-minimal", lambda: check_stable_minimal(3, 3, 2, 2)),
    ("corollary-closure", lambda: check_corollary_closure(4, 3)),
    ("assoc-symmetry", lambda: check_assoc_symmetry(4, 4)),
    ("lr-oracle", lambda: check_lr_oracle(5)),
    ("howe-graded-dimensions", lambda: check_howe(3, 3)),
    ("dimension-identity", lambda: check_dimension_identity(4, 3, 2, 2)),
]

FULL_CHECKS = [
    ("lr-golden", check_lr_golden),
    ("worked-examples", check_worked_examples),
    ("pieri", check_pieri),
    ("route-equivalence", check_route_equivalence),
    ("stable-minimal", check_stable_minimal),
    ("transitivity", check_transitivity),
    ("corollary-closure", check_corollary_closure),
    ("assoc-symmetry", check_assoc_symmetry),
    ("lr-oracle", check_lr_oracle),
    ("howe-graded-dimensions", check_howe),
    ("dimension-identity", check_dimension_identity),
]


def run_checks(level: str):
    """Run the named level; yields (name, instances, failure) per check."""
    checks = QUICK_CHECKS if level == "quick" else FULL_CHECKS
    for name, check in checks:
        instances, failure = check()
        yield name, instances, failure
