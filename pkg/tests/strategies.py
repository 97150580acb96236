"""Hypothesis strategies shared across test modules."""

from hypothesis import strategies as st

from twomorita.nnimat import NNIMatrix, assemble_blocks


def block_matrices(draw_sizes, max_entry):
    @st.composite
    def build(draw):
        a, b, c = draw(draw_sizes)
        A = NNIMatrix.from_rows(
            [[draw(st.integers(0, max_entry)) for _ in range(b)] for _ in range(a)], cols=b)
        B = NNIMatrix.from_rows(
            [[draw(st.integers(0, max_entry)) for _ in range(c)] for _ in range(b)], cols=c)
        return a, b, c, A, B

    return build()


def unpermute(block: NNIMatrix, perm) -> NNIMatrix:
    """The matrix ``M`` with ``M.permuted(perm) == block``."""
    n = block.rows
    rows = [[0] * n for _ in range(n)]
    for k in range(n):
        for l in range(n):
            rows[perm[k]][perm[l]] = block[k, l]
    return NNIMatrix.from_rows(rows, cols=n)


@st.composite
def idempotents(draw, max_n=5, max_entry=2):
    sizes = st.tuples(st.integers(0, max_n), st.integers(0, max_n), st.integers(0, max_n)).filter(
        lambda t: 1 <= sum(t) <= max_n)
    a, b, c, A, B = draw(block_matrices(sizes, max_entry))
    n = a + b + c
    perm = draw(st.permutations(range(n)))
    return unpermute(assemble_blocks(a, b, c, A, B), perm)
