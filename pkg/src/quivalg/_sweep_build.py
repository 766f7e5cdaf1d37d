"""cffi build script for the level-sweep quotient kernel."""

from pathlib import Path

from cffi import FFI

ffibuilder = FFI()

ffibuilder.cdef(
    """
    typedef struct sweep_state sweep_state;

    sweep_state *qs_new(int32_t n_arrows, int64_t basis_bound);
    void qs_free(sweep_state *st);
    void qs_set_trie(sweep_state *st, const int32_t *tgt, const int32_t *src,
                     const int32_t *parent, const int32_t *last,
                     const int32_t *first, const int32_t *suffix,
                     const int32_t *child_start, const int32_t *left_start,
                     const int32_t *left_ext, const int32_t *out_rank,
                     const int32_t *in_rank);
    int qs_add_pin(sweep_state *st, int64_t pid);
    int qs_init_levels(sweep_state *st, int64_t n_vertices, int64_t lvl1_hi);
    int qs_level(sweep_state *st, int64_t lo, int64_t hi,
                 const int64_t *seed_data, int64_t seed_len);
    int64_t qs_basis_alive(const sweep_state *st);
    int64_t qs_last_new_basis(const sweep_state *st);
    int64_t qs_side_total(const sweep_state *st);
    int64_t qs_basis_pids(const sweep_state *st, int64_t *out, int64_t cap);
    int64_t qs_action(sweep_state *st, int64_t bi, int32_t ai,
                      int64_t *out_pids, int64_t *out_nums, int64_t *out_den,
                      int64_t out_cap);
    """
)

_here = Path(__file__).resolve().parent

ffibuilder.set_source(
    "quivalg._sweep_c",
    (_here / "_sweep.c").read_text(),
    extra_compile_args=["-O2"],
)

if __name__ == "__main__":
    ffibuilder.compile(verbose=True)
