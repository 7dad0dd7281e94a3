"""Independent cross-checks for the main computation paths.

The LR oracle works with explicit monomial expansions of Schur polynomials
(never with skew tableaux); the chain oracle counts label chains directly
(never filling a tableau); the dimension oracles are the classical Weyl
product formulas, admitted here as standard external plumbing and used only
on the checking side of identities.  Everything is exact integer arithmetic
and deliberately naive.
"""

from functools import lru_cache
from math import comb

from . import partitions as pt
from .partitions import Group, InvalidLabelError, as_partition, in_k_hat

_ORACLE_DEGREE_LIMIT = 12  # keeps monomial expansions at desk scale


# ---------------------------------------------------------------------------
# Schur polynomials as explicit monomial maps


@lru_cache(maxsize=None)
def _schur_poly(lam: tuple, n: int) -> dict:
    # peel the last variable: every power of x_n sits on a horizontal strip
    if len(lam) > n:
        return {}
    if n == 0:
        return {(): 1}
    poly = {}
    for mu in pt.strip_subpartitions(lam):
        power = sum(lam) - sum(mu)
        for exps, coeff in _schur_poly(mu, n - 1).items():
            key = exps + (power,)
            poly[key] = poly.get(key, 0) + coeff
    return poly


def schur_polynomial(lam, n: int) -> dict:
    """Monomial expansion of the Schur polynomial in n variables."""
    return dict(_schur_poly(as_partition(lam), n))


def poly_product(a: dict, b: dict) -> dict:
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            new = out.get(key, 0) + ca * cb
            if new:
                out[key] = new
            elif key in out:
                del out[key]
    return out


def decompose_schur(poly: dict, n: int) -> dict:
    """Write a symmetric polynomial as a sum of Schur polynomials.

    Repeatedly subtracts the Schur polynomial of the lexicographically
    leading exponent, which for a symmetric polynomial is always a partition.
    """
    poly = {e: c for e, c in poly.items() if c}
    result = {}
    while poly:
        lead = max(poly)
        if tuple(sorted(lead, reverse=True)) != lead:
            raise ValueError(f"input is not symmetric: leading exponent {lead}")
        coeff = poly[lead]
        lam = as_partition(lead)
        result[lam] = coeff
        for exps, c in _schur_poly(lam, n).items():
            new = poly.get(exps, 0) - coeff * c
            if new:
                poly[exps] = new
            elif exps in poly:
                del poly[exps]
    return result


@lru_cache(maxsize=None)
def _schur_product_expansion(mu: tuple, nu: tuple, n: int) -> dict:
    return decompose_schur(
        poly_product(_schur_poly(mu, n), _schur_poly(nu, n)), n)


def schur_product_expansion(mu, nu, n: int) -> dict:
    """Full Schur expansion of the product, via monomial arithmetic."""
    mu, nu = as_partition(mu), as_partition(nu)
    if sum(mu) + sum(nu) > _ORACLE_DEGREE_LIMIT:
        raise ValueError(
            f"oracle refuses |mu|+|nu| > {_ORACLE_DEGREE_LIMIT} to bound memory")
    return dict(_schur_product_expansion(mu, nu, n))


def lr_oracle(lam, mu, nu, n: int) -> int:
    """LR coefficient read off from the monomial-expansion route.

    A single coefficient is already stable once n bounds the lengths of all
    three partitions, so large-degree queries stay affordable by keeping n
    small; recovering a complete expansion needs n >= |mu|+|nu| instead (see
    schur_product_expansion).
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if n < max(len(lam), len(mu), len(nu), 1):
        raise ValueError("need at least max-length many variables")
    degree = sum(mu) + sum(nu)
    if comb(n + degree - 1, degree) > 500_000:
        raise ValueError("monomial expansion too large for the oracle")
    return dict(_schur_product_expansion(mu, nu, n)).get(lam, 0)


# ---------------------------------------------------------------------------
# Weyl dimension products (external standard formulas, checking side only)


def gl_dimension(label, rank: int) -> int:
    """Dimension of the rational GL irreducible with the given label.

    Accepts a partition or a generalized (plus, minus) pair; the latter is
    evaluated on its integer highest-weight vector.
    """
    if pt.is_gl_label(label):
        vector = pt.gl_label_to_vector(label, rank)
    else:
        lam = as_partition(label)
        if len(lam) > rank:
            raise InvalidLabelError(f"{lam} has more than {rank} rows")
        vector = pt.padded(lam, rank)
    num = den = 1
    for i in range(rank):
        for j in range(i + 1, rank):
            num *= vector[i] - vector[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def symplectic_dimension(lam, k: int) -> int:
    """Dimension of the Sp_{2k} irreducible labeled by lam."""
    lam = as_partition(lam)
    if not in_k_hat(Group("Sp", k), lam):
        raise InvalidLabelError(f"{lam} is not an Sp_{2 * k} label")
    row = pt.padded(lam, k)
    a = [row[i] + k - i for i in range(k)]
    rho = [k - i for i in range(k)]
    num = den = 1
    for i in range(k):
        num *= a[i]
        den *= rho[i]
        for j in range(i + 1, k):
            num *= (a[i] - a[j]) * (a[i] + a[j])
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    assert num % den == 0
    return num // den


def orthogonal_dimension(lam, k: int) -> int:
    """Dimension of the O_k irreducible labeled by lam.

    Tall labels are first flipped to their determinant twist (same dimension);
    for even k a label with exactly k/2 rows restricts to two rotation-group
    irreducibles of equal size, doubling the type-D product.
    """
    lam = as_partition(lam)
    if not in_k_hat(Group("O", k), lam):
        raise InvalidLabelError(f"{lam} is not an O_{k} label")
    if 2 * len(lam) > k:
        lam = pt.associated_partition(lam, k)
    m = k // 2
    row = pt.padded(lam, m)
    num = den = 1
    if k % 2 == 1:
        a = [2 * row[i] + 2 * (m - i) - 1 for i in range(m)]
        rho = [2 * (m - i) - 1 for i in range(m)]
        for i in range(m):
            num *= a[i]
            den *= rho[i]
            for j in range(i + 1, m):
                num *= (a[i] - a[j]) * (a[i] + a[j])
                den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
        assert num % den == 0
        return num // den
    a = [row[i] + m - 1 - i for i in range(m)]
    rho = [m - 1 - i for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            num *= (a[i] - a[j]) * (a[i] + a[j])
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    assert num % den == 0
    dim = num // den
    return 2 * dim if len(lam) == m else dim


def group_dimension(group: Group, label) -> int:
    """Dimension of the irreducible of group labeled by label."""
    if group.family == "GL":
        return gl_dimension(label, group.rank)
    if group.family == "Sp":
        return symplectic_dimension(label, group.rank)
    return orthogonal_dimension(label, group.rank)


# ---------------------------------------------------------------------------
# graded dimension identities from the duality decompositions


def _poly_space_dimension(nvars: int, degree: int) -> int:
    if degree == 0:
        return 1
    if nvars == 0:
        return 0
    return comb(nvars + degree - 1, degree)


def howe_graded_dimension_check(setting: str, dims, degree: int) -> bool:
    """Exact degree-d dimension match for one of the settings SM, MM, AM.

    SM: polynomials on symmetric matrices vs even-row labels of size 2d.
    AM: polynomials on alternating matrices vs even-column labels of size 2d.
    MM: polynomials on p-by-q matrices vs paired labels of size d.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if setting == "MM":
        p, q = dims
        lhs = _poly_space_dimension(p * q, degree)
        rhs = sum(
            gl_dimension(nu, p) * gl_dimension(nu, q)
            for nu in pt.partitions_of(degree, max_length=min(p, q)))
        return lhs == rhs
    n = dims
    if setting == "SM":
        lhs = _poly_space_dimension(n * (n + 1) // 2, degree)
        keep = pt.has_even_rows
    elif setting == "AM":
        lhs = _poly_space_dimension(n * (n - 1) // 2, degree)
        keep = pt.has_even_columns
    else:
        raise ValueError(f"unknown setting {setting!r}")
    rhs = sum(
        gl_dimension(nu, n)
        for nu in pt.partitions_of(2 * degree, max_length=n) if keep(nu))
    return lhs == rhs


# ---------------------------------------------------------------------------
# chain counts (the recursion side of the chain/tableau bijection)


def double_strip_fill_weights(outer, inner) -> dict:
    """Counts of two-letter lattice fillings of a double strip, by #1 - #2.

    Row r of the skew carries forced 1s under the next row, forced 2s over the
    previous row, and a free weakly-increasing stretch in between; reading the
    word row by row, the running #1 - #2 balance must stay nonnegative exactly
    when each row's 2-count stays at most the balance entering the row.
    """
    outer = tuple(outer)
    if not pt.is_double_strip(outer, inner):
        return {}
    pad = pt.padded(inner, len(outer))
    states = {0: 1}
    for r in range(len(outer)):
        length = outer[r] - pad[r]
        forced_two = max(0, outer[r] - pad[r - 1]) if r > 0 else 0
        forced_one = max(0, outer[r + 1] - pad[r]) if r + 1 < len(outer) else 0
        free = length - forced_one - forced_two
        nxt = {}
        for balance, ways in states.items():
            for twos in range(forced_two, forced_two + free + 1):
                if twos <= balance:
                    key = balance + length - 2 * twos
                    nxt[key] = nxt.get(key, 0) + ways
        states = nxt
    return states


def chain_oracle(group: Group, lam, delta) -> int:
    """Count label chains from rank 1 up to lam matching the weight delta.

    This never builds a tableau: each descent step enumerates the sub-labels
    allowed at the lower rank, and the symplectic filling counts come from the
    row balance recursion in double_strip_fill_weights.
    """
    if not in_k_hat(group, lam):
        raise InvalidLabelError(f"{lam} is not a valid {group.display()} label")
    delta = tuple(delta)
    if not pt.weight_vector_valid(group, delta):
        raise InvalidLabelError(f"invalid weight {delta} for {group.display()}")
    family = group.family

    @lru_cache(maxsize=None)
    def chains(i, label):
        if i == 1:
            if family == "GL":
                value = sum(label[0]) - sum(label[1])
            else:
                value = sum(label)
            return 1 if value == delta[0] else 0
        step = delta[i - 1]
        total = 0
        if family == "O":
            for mu in pt.strip_subpartitions(label):
                if (in_k_hat(Group("O", i - 1), mu)
                        and pt.skew_size(label, mu) % 2 == step):
                    total += chains(i - 1, mu)
        elif family == "GL":
            plus, minus = label
            for mu_p in pt.strip_subpartitions(plus):
                for mu_m in pt.strip_subpartitions(minus):
                    if (len(mu_p) + len(mu_m) <= i - 1
                            and pt.skew_size(plus, mu_p)
                            - pt.skew_size(minus, mu_m) == step):
                        total += chains(i - 1, (mu_p, mu_m))
        else:
            for mu in pt.double_strip_subpartitions(label):
                if len(mu) <= i - 1:
                    ways = double_strip_fill_weights(label, mu).get(step, 0)
                    if ways:
                        total += ways * chains(i - 1, mu)
        return total

    frozen = (tuple(lam[0]), tuple(lam[1])) if family == "GL" else tuple(lam)
    return chains(group.rank, frozen)
