"""The multi-ball transition representation of positive braid words.

Model: a word on n strands is a bowling alley with n lanes.  Bowl u_i balls
into the lane entering at position i, at most N per lane.  At the crossing
sigma_i the lane entering at position i passes OVER the lane at position i+1
and exits at position i+1.  If the over lane carries a balls and the under
lane b:

* a <= b: nothing can fall; the counts ride across, so positions i and i+1
  swap their entries (weight 1).
* a > b: with weight q nothing falls (entries swap); with weight 1 - q
  exactly a - b balls drop to the under lane, which leaves the count tuple
  unchanged (the over lane keeps b and exits below, the under lane now
  carries a and exits above).

States are n-tuples with 0 <= u_i <= N, indexed in mixed radix base N+1.
``rho_matrix`` pushes every basis state through the word as a sparse
distribution; the (v, u) entry of the result is the probability that bowling
u collects v.  Composition convention: the matrix of w_1 ... w_m is
M(w_m) @ ... @ M(w_1) acting on column vectors of input distributions.

The check_* functions verify, in exact arithmetic, the braid relation, far
commutativity, the quadratic relation (q + sigma)(1 - sigma) = 0, the kernel
of the alternating window elements together with their factorization, and
the inverse formula sigma^{-1} = q^{-1}(sigma + q - 1) at rational q.
"""

from __future__ import annotations

from fractions import Fraction

from .braid import BraidWord, HeckeElement, specht_element, specht_half
from .matrix import Matrix, TransitionMatrix, matrices_equal_entry
from .qpoly import ONE, ONE_MINUS_Q, Q, QPoly
from .report import CheckReport

BallState = tuple[int, ...]


def state_index(u: BallState, N: int) -> int:
    """Mixed-radix index of a state: sum of u_i (N+1)^(i-1)."""
    idx = 0
    for pos in range(len(u) - 1, -1, -1):
        c = u[pos]
        if not 0 <= c <= N:
            raise ValueError(f"count {c} at position {pos + 1} outside 0..{N}")
        idx = idx * (N + 1) + c
    return idx


def index_state(idx: int, n: int, N: int) -> BallState:
    if not 0 <= idx < (N + 1) ** n:
        raise ValueError(f"index {idx} outside 0..{(N + 1) ** n - 1}")
    out = []
    for _ in range(n):
        idx, c = divmod(idx, N + 1)
        out.append(c)
    return tuple(out)


def all_states(n: int, N: int):
    """All ball states in index order."""
    return (index_state(idx, n, N) for idx in range((N + 1) ** n))


def apply_generator(i: int, u: BallState) -> list[tuple[BallState, QPoly]]:
    """Branches of one crossing sigma_i applied to state u."""
    n = len(u)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    a, b = u[i - 1], u[i]
    swapped = u[: i - 1] + (b, a) + u[i + 1 :]
    if a <= b:
        return [(swapped, ONE)]
    return [(swapped, Q), (u, ONE_MINUS_Q)]


def _validate_sizes(n: int, N: int) -> None:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if N < 1:
        raise ValueError(f"need N >= 1 (N = 0 is the trivial representation), got {N}")


def _push_distribution(
    letters: tuple[int, ...], dist: dict[BallState, QPoly]
) -> dict[BallState, QPoly]:
    for i in letters:
        nxt: dict[BallState, QPoly] = {}
        for u, w in dist.items():
            for v, branch in apply_generator(i, u):
                acc = nxt.get(v)
                total = w * branch if acc is None else acc + w * branch
                if total:
                    nxt[v] = total
                elif v in nxt:
                    del nxt[v]
        dist = nxt
    return dist


def rho_matrix(word: BraidWord, N: int) -> TransitionMatrix:
    """The transition matrix of a word, built column by column."""
    _validate_sizes(word.n, N)
    dim = (N + 1) ** word.n
    cols: dict[int, dict[int, QPoly]] = {}
    for idx in range(dim):
        u = index_state(idx, word.n, N)
        dist = _push_distribution(word.letters, {u: ONE})
        cols[idx] = {state_index(v, N): w for v, w in dist.items()}
    return TransitionMatrix(dim, cols)


def generator_matrix(i: int, n: int, N: int) -> TransitionMatrix:
    return rho_matrix(BraidWord(n, (i,)), N)


def rho_element(x: HeckeElement, N: int) -> Matrix:
    """Linear extension: the matrix of a formal combination of words."""
    _validate_sizes(x.n, N)
    out = Matrix((N + 1) ** x.n)
    for word, coeff in x.terms:
        out = out + rho_matrix(word, N).scale(coeff)
    return out


def _fmt_state(u: BallState) -> str:
    return "[" + ",".join(str(c) for c in u) + "]"


def _record_matrix_equal(
    report: CheckReport,
    label: str,
    got: Matrix,
    expected: Matrix,
    n: int,
    N: int,
) -> None:
    diff = matrices_equal_entry(got, expected)
    def describe():
        i, j, gv, ev = diff
        return (
            f"{label}: u={_fmt_state(index_state(j, n, N))} "
            f"v={_fmt_state(index_state(i, n, N))} expected {ev} actual {gv}"
        )
    report.record(diff is None, describe)


def check_braid_relation(n: int, N: int) -> CheckReport:
    """rho(sigma_i sigma_{i+1} sigma_i) = rho(sigma_{i+1} sigma_i sigma_{i+1})."""
    _validate_sizes(n, N)
    if n < 3:
        raise ValueError(f"braid relation needs n >= 3, got {n}")
    report = CheckReport(name=f"braid-relation n={n} N={N}")
    for i in range(1, n - 1):
        left = rho_matrix(BraidWord(n, (i, i + 1, i)), N)
        right = rho_matrix(BraidWord(n, (i + 1, i, i + 1)), N)
        _record_matrix_equal(
            report, f"{i} {i+1} {i} vs {i+1} {i} {i+1}", left, right, n, N
        )
    return report


def check_far_commutativity(n: int, N: int) -> CheckReport:
    """rho(sigma_i sigma_j) = rho(sigma_j sigma_i) for |i - j| > 1."""
    _validate_sizes(n, N)
    if n < 4:
        raise ValueError(f"far commutativity needs n >= 4, got {n}")
    report = CheckReport(name=f"far-commutativity n={n} N={N}")
    for i in range(1, n):
        for j in range(i + 2, n):
            left = rho_matrix(BraidWord(n, (i, j)), N)
            right = rho_matrix(BraidWord(n, (j, i)), N)
            _record_matrix_equal(report, f"{i} {j} vs {j} {i}", left, right, n, N)
    return report


def check_hecke(n: int, N: int, corrupt: bool = False) -> CheckReport:
    """(q I + rho(sigma_i)) @ (I - rho(sigma_i)) = 0 for every generator.

    ``corrupt`` is a test-only negative control: it perturbs the first
    generator matrix so the check must fail and report the entry.
    """
    _validate_sizes(n, N)
    if n < 2:
        raise ValueError(f"quadratic relation needs n >= 2, got {n}")
    dim = (N + 1) ** n
    ident = Matrix.identity(dim)
    report = CheckReport(name=f"hecke-quadratic n={n} N={N}")
    for i in range(1, n):
        m = Matrix(dim, rho_matrix(BraidWord(n, (i,)), N).cols)
        if corrupt and i == 1:
            m = m + Matrix(dim, {0: {0: ONE}})
        product = (ident.scale(Q) + m) @ (ident - m)
        _record_matrix_equal(
            report, f"(q+sigma_{i})(1-sigma_{i})", product, Matrix(dim), n, N
        )
    return report


def check_specht(n: int, N: int, k: int) -> CheckReport:
    """The alternating window element x_k dies under rho, factors through
    (1 - sigma_i) for every window position i, and satisfies
    rho(x_k) @ rho(sigma_j) = -q rho(x_k) for window generators j."""
    _validate_sizes(n, N)
    x = specht_element(n, N, k)
    dim = (N + 1) ** n
    rho_x = rho_element(x, N)
    report = CheckReport(name=f"specht-kernel n={n} N={N} k={k}")
    _record_matrix_equal(report, f"rho(x_{k})", rho_x, Matrix(dim), n, N)
    ident = Matrix.identity(dim)
    for i in range(k, k + N + 1):
        half = rho_element(specht_half(n, N, k, i), N)
        gen = Matrix(dim, generator_matrix(i, n, N).cols)
        factored = half @ (ident - gen)
        _record_matrix_equal(
            report, f"rho(x_{k}) = rho(half_{i})(I - sigma_{i})", rho_x, factored, n, N
        )
        twisted = rho_x @ gen
        _record_matrix_equal(
            report, f"rho(x_{k}) sigma_{i} = -q rho(x_{k})", twisted, rho_x.scale(-Q), n, N
        )
    return report


def check_inverse(n: int, N: int, x: Fraction) -> CheckReport:
    """At q = x != 0, rho(sigma_i) * x^{-1}(rho(sigma_i) + (x - 1) I) = I."""
    _validate_sizes(n, N)
    if n < 2:
        raise ValueError(f"inverse check needs n >= 2, got {n}")
    x = Fraction(x)
    if x == 0:
        raise ValueError("q = 0 is not invertible")
    dim = (N + 1) ** n
    ident = Matrix.identity(dim, one=Fraction(1))
    report = CheckReport(name=f"inverse-formula n={n} N={N} q={x}")
    for i in range(1, n):
        m = rho_matrix(BraidWord(n, (i,)), N).eval_at(x)
        candidate = (m + ident.scale(x - 1)).scale(1 / x)
        _record_matrix_equal(report, f"sigma_{i} sigma_{i}^-1", m @ candidate, ident, n, N)
    return report


def check_stochastic(
    n: int, N: int, *, words: int = 100, max_len: int = 8, seed: int = 0
) -> CheckReport:
    """Random words: columns sum to 1 and entries respect total ball count."""
    import random

    _validate_sizes(n, N)
    rng = random.Random(seed)
    report = CheckReport(name=f"stochastic n={n} N={N} words={words}")
    for _ in range(words):
        length = rng.randint(0, max_len)
        letters = tuple(rng.randint(1, n - 1) for _ in range(length)) if n > 1 else ()
        word = BraidWord(n, letters)
        m = rho_matrix(word, N)
        sums = m.column_sums()
        for j in range(m.dim):
            report.record(
                sums.get(j) == ONE,
                lambda j=j, word=word, sums=sums: (
                    f"word '{word}': column {_fmt_state(index_state(j, n, N))} "
                    f"sums to {sums.get(j)}"
                ),
            )
        conserved = True
        bad = None
        for i, j, _v in m.entries_sorted():
            if sum(index_state(i, n, N)) != sum(index_state(j, n, N)):
                conserved = False
                bad = (i, j)
                break
        report.record(
            conserved,
            lambda word=word, bad=bad: (
                f"word '{word}': ball count changes "
                f"{_fmt_state(index_state(bad[1], n, N))} -> "
                f"{_fmt_state(index_state(bad[0], n, N))}"
            ),
        )
    return report
