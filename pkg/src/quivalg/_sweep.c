/* Level-by-level construction of a path algebra quotient in quotient
 * coordinates.
 *
 * Every path gets a class: basis, or a residue row over basis paths.
 * Rows are stored as [den, n, (pid, num) * n] with pids strictly
 * descending, den > 0, gcd(den, nums) = 1.  Level L runs in phases:
 *
 *   pass 1  the class of p*a folds from the class of p through the
 *           right-multiplication table of basis paths.  Children of
 *           basis paths are candidates, decided by this level's rows.
 *
 *   pass 2  relation rows whose longest term sits at level L, plus one
 *           left-consistency row per path q = a*s whose suffix s is not
 *           basis: class(q) - sum c_b class(a*b) over class(s).  Rows
 *           reduce against the candidate echelon; a row whose lead is
 *           an older basis path kills it (side row) and translate rows
 *           for the dead path are injected until the collapse settles.
 *
 *   resolve unpivoted candidates become basis; pivoted ones take their
 *           echelon residue; stored rows are patched candidate-free and
 *           the multiplication tables are extended.
 *
 * The imposed rows span exactly the ideal rows with lead length <= L,
 * so basis and residues agree with direct echelonization of
 * span{u*r*v} under the length-then-lex path order.  Acceptance is
 * checked by the driver on the extracted tables.
 *
 * Arithmetic is int64 with overflow checks; any overflow aborts the
 * run and the driver falls back to exact big integers.
 */

#include <stdint.h>
#include <stdlib.h>
#include <string.h>

#define QS_OK 0
#define QS_OVERFLOW 1
#define QS_NOMEM 2
#define QS_BOUND 3
#define QS_INTERNAL 4

#define OFF_UNSET (-1)
#define OFF_BASIS (-2)

/* scratch roles: 0,1 insert pair; 2,3 class/unit pair; 4,5 accumulate
 * pair; 6 stable row copy; 7 spare */
#define NSCRATCH 8

typedef struct {
    int64_t *data;
    int64_t len;
    int64_t cap;
} buf_t;

static int buf_reserve(buf_t *b, int64_t need)
{
    int64_t nc;
    int64_t *nd;
    if (need <= b->cap) return QS_OK;
    nc = b->cap ? b->cap : 1024;
    while (nc < need) nc *= 2;
    nd = (int64_t *)realloc(b->data, (size_t)nc * sizeof(int64_t));
    if (!nd) return QS_NOMEM;
    b->data = nd;
    b->cap = nc;
    return QS_OK;
}

static int64_t gcd64(int64_t a, int64_t b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

typedef struct sweep_state {
    const int32_t *tgt;
    const int32_t *src;
    const int32_t *parent;
    const int32_t *last;
    const int32_t *first;
    const int32_t *suffix;
    const int32_t *child_start;
    const int32_t *left_start;
    const int32_t *left_ext;
    const int32_t *out_rank;
    const int32_t *in_rank;
    int32_t n_arrows;

    int64_t n_pids;
    int32_t *side_slot;
    int32_t *bpos;      /* pid -> basis position, kept after death */

    int64_t *basis_pid;
    uint8_t *basis_dead;
    int64_t basis_len;
    int64_t basis_cap;
    int64_t basis_alive;

    buf_t tab_arena;    /* persistent rows: tables, side rows, pins */
    int64_t *tab_right; /* pos * n_arrows + ai -> offset or -1 */
    int64_t *tab_left;

    int64_t *side_rows;
    int64_t side_len;
    int64_t side_cap;
    int64_t side_total;

    buf_t win_arena[2];
    int64_t *win_off[2];
    int64_t win_lo[2], win_hi[2];
    int64_t win_cap_entries[2];
    int cur;

    int64_t *pin_pids;
    int64_t *pin_offs;
    int64_t pin_len;
    int64_t pin_cap;
    int64_t pins_pending;

    int64_t cand_lo, cand_hi;
    int32_t *cand_slot;
    int64_t cand_slot_cap;
    int64_t *cand_rows;
    int64_t *cand_pivot;
    int64_t cand_len, cand_cap;
    buf_t cand_arena;

    int64_t *patch;
    int64_t patch_len, patch_cap;
    uint8_t *winserted; /* per level pid: dead-parent row already imposed */
    int64_t winserted_cap;

    int64_t *kills;
    int64_t kills_len, kills_cap;

    buf_t scratch[NSCRATCH];

    int64_t basis_bound;
    int64_t last_new_basis;
} sweep_state;

/* ---------------------------------------------------------------- rows */

static void row_normalize(int64_t *row)
{
    int64_t den = row[0], n = row[1], g, i;
    if (!n) {
        row[0] = 1;
        return;
    }
    g = den;
    for (i = 0; i < n && g != 1; i++)
        g = gcd64(g, row[3 + 2 * i]);
    if (g > 1) {
        row[0] = den / g;
        for (i = 0; i < n; i++)
            row[3 + 2 * i] /= g;
    }
}

/* out = x + (cnum/cden) * y; cden > 0 */
static int row_addmul(const int64_t *x, const int64_t *y, int64_t cnum,
                      int64_t cden, int64_t *out)
{
    int64_t dx = x[0], dy = y[0], nx = x[1], ny = y[1];
    int64_t fx, fy, dout, i = 0, j = 0, o = 0;
    if (__builtin_mul_overflow(dy, cden, &fx)) return QS_OVERFLOW;
    if (__builtin_mul_overflow(cnum, dx, &fy)) return QS_OVERFLOW;
    if (__builtin_mul_overflow(dx, fx, &dout)) return QS_OVERFLOW;
    while (i < nx || j < ny) {
        int64_t xp = (i < nx) ? x[2 + 2 * i] : -1;
        int64_t yp = (j < ny) ? y[2 + 2 * j] : -1;
        int64_t v;
        if (xp > yp) {
            if (__builtin_mul_overflow(x[3 + 2 * i], fx, &v)) return QS_OVERFLOW;
            out[2 + 2 * o] = xp;
            out[3 + 2 * o] = v;
            o++;
            i++;
        } else if (yp > xp) {
            if (__builtin_mul_overflow(y[3 + 2 * j], fy, &v)) return QS_OVERFLOW;
            if (v) {
                out[2 + 2 * o] = yp;
                out[3 + 2 * o] = v;
                o++;
            }
            j++;
        } else {
            int64_t v1, v2;
            if (__builtin_mul_overflow(x[3 + 2 * i], fx, &v1)) return QS_OVERFLOW;
            if (__builtin_mul_overflow(y[3 + 2 * j], fy, &v2)) return QS_OVERFLOW;
            if (__builtin_add_overflow(v1, v2, &v)) return QS_OVERFLOW;
            if (v) {
                out[2 + 2 * o] = xp;
                out[3 + 2 * o] = v;
                o++;
            }
            i++;
            j++;
        }
    }
    out[0] = dout;
    out[1] = o;
    row_normalize(out);
    return QS_OK;
}

/* scratch[dst] += (cnum/cden) * row, via scratch[dst ^ 1] */
static int acc_addmul(sweep_state *st, int dst, const int64_t *row,
                      int64_t cnum, int64_t cden)
{
    buf_t *a = &st->scratch[dst];
    buf_t *t = &st->scratch[dst ^ 1];
    int rc = buf_reserve(t, 2 + 2 * (a->data[1] + row[1]));
    if (rc) return rc;
    rc = row_addmul(a->data, row, cnum, cden, t->data);
    if (rc) return rc;
    {
        buf_t tmp = *a;
        *a = *t;
        *t = tmp;
    }
    return QS_OK;
}

static int acc_init(sweep_state *st, int dst)
{
    int rc = buf_reserve(&st->scratch[dst], 2);
    if (rc) return rc;
    st->scratch[dst].data[0] = 1;
    st->scratch[dst].data[1] = 0;
    return QS_OK;
}

static int unit_into(sweep_state *st, int dst, int64_t pid)
{
    int rc = buf_reserve(&st->scratch[dst], 4);
    if (rc) return rc;
    st->scratch[dst].data[0] = 1;
    st->scratch[dst].data[1] = 1;
    st->scratch[dst].data[2] = pid;
    st->scratch[dst].data[3] = 1;
    return QS_OK;
}

/* residue form of the working row c*lead + tail: lead = -(tail)/c, the
 * row denominator cancels.  Writes scratch[dst]. */
static int residue_of_lead(sweep_state *st, const int64_t *w, int dst)
{
    int64_t n = w[1], c = w[3], i;
    buf_t *d = &st->scratch[dst];
    int rc = buf_reserve(d, 2 + 2 * (n - 1));
    if (rc) return rc;
    d->data[0] = (c < 0) ? -c : c;
    d->data[1] = n - 1;
    for (i = 1; i < n; i++) {
        d->data[2 * i] = w[2 + 2 * i];
        d->data[2 * i + 1] = (c < 0) ? w[3 + 2 * i] : -w[3 + 2 * i];
    }
    row_normalize(d->data);
    return QS_OK;
}

/* ------------------------------------------------------------- storage */

static int64_t arena_put(buf_t *a, const int64_t *row, int *rc)
{
    int64_t need = a->len + 2 + 2 * row[1];
    int64_t off = a->len;
    *rc = buf_reserve(a, need);
    if (*rc) return -1;
    memcpy(a->data + off, row, (size_t)(2 + 2 * row[1]) * sizeof(int64_t));
    a->len = need;
    return off;
}

static int ensure_pid_maps(sweep_state *st, int64_t n_pids)
{
    int64_t i;
    int32_t *ns, *nb;
    if (n_pids <= st->n_pids) return QS_OK;
    ns = (int32_t *)realloc(st->side_slot, (size_t)n_pids * 4);
    if (!ns) return QS_NOMEM;
    st->side_slot = ns;
    nb = (int32_t *)realloc(st->bpos, (size_t)n_pids * 4);
    if (!nb) return QS_NOMEM;
    st->bpos = nb;
    for (i = st->n_pids; i < n_pids; i++) {
        st->side_slot[i] = -1;
        st->bpos[i] = -1;
    }
    st->n_pids = n_pids;
    return QS_OK;
}

static int basis_add(sweep_state *st, int64_t pid)
{
    if (st->basis_len == st->basis_cap) {
        int64_t nc = st->basis_cap ? st->basis_cap * 2 : 256;
        int64_t *np = (int64_t *)realloc(st->basis_pid, (size_t)nc * 8);
        uint8_t *nd;
        int64_t *nr, *nl;
        if (!np) return QS_NOMEM;
        st->basis_pid = np;
        nd = (uint8_t *)realloc(st->basis_dead, (size_t)nc);
        if (!nd) return QS_NOMEM;
        st->basis_dead = nd;
        nr = (int64_t *)realloc(st->tab_right,
                                (size_t)(nc * st->n_arrows) * 8);
        if (!nr) return QS_NOMEM;
        st->tab_right = nr;
        nl = (int64_t *)realloc(st->tab_left,
                                (size_t)(nc * st->n_arrows) * 8);
        if (!nl) return QS_NOMEM;
        st->tab_left = nl;
        st->basis_cap = nc;
    }
    {
        int64_t pos = st->basis_len++;
        int32_t ai;
        st->basis_pid[pos] = pid;
        st->basis_dead[pos] = 0;
        st->bpos[pid] = (int32_t)pos;
        for (ai = 0; ai < st->n_arrows; ai++) {
            st->tab_right[pos * st->n_arrows + ai] = -1;
            st->tab_left[pos * st->n_arrows + ai] = -1;
        }
        st->basis_alive++;
    }
    return QS_OK;
}

static int win_find(const sweep_state *st, int64_t pid, int *which)
{
    int w;
    for (w = 0; w < 2; w++) {
        if (pid >= st->win_lo[w] && pid < st->win_hi[w]) {
            *which = w;
            return 1;
        }
    }
    return 0;
}

static int copy_row(sweep_state *st, int dst, const int64_t *row)
{
    int rc = buf_reserve(&st->scratch[dst], 2 + 2 * row[1]);
    if (rc) return rc;
    memcpy(st->scratch[dst].data, row, (size_t)(2 + 2 * row[1]) * 8);
    return QS_OK;
}

/* copy the class row of pid into scratch[dst]; live basis and pending
 * candidates come out as their own unit row */
static int class_into(sweep_state *st, int64_t pid, int dst)
{
    int w;
    if (win_find(st, pid, &w)) {
        int64_t off = st->win_off[w][pid - st->win_lo[w]];
        if (off == OFF_UNSET)
            return unit_into(st, dst, pid);
        if (off == OFF_BASIS) {
            if (st->bpos[pid] >= 0 && st->basis_dead[st->bpos[pid]])
                return copy_row(st, dst, st->tab_arena.data
                                + st->side_rows[st->side_slot[pid]]);
            return unit_into(st, dst, pid);
        }
        return copy_row(st, dst, st->win_arena[w].data + off);
    }
    if (st->bpos[pid] >= 0) {
        if (!st->basis_dead[st->bpos[pid]])
            return unit_into(st, dst, pid);
        return copy_row(st, dst, st->tab_arena.data
                        + st->side_rows[st->side_slot[pid]]);
    }
    {
        int64_t i;
        for (i = 0; i < st->pin_len; i++)
            if (st->pin_pids[i] == pid && st->pin_offs[i] >= 0)
                return copy_row(st, dst,
                                st->tab_arena.data + st->pin_offs[i]);
    }
    return QS_INTERNAL;
}

/* extension pid of bpid by arrow ai on the given side, or -1 */
static int64_t ext_pid(const sweep_state *st, int64_t bpid, int32_t ai,
                       int side)
{
    if (!side) {
        int32_t r = st->out_rank[(int64_t)st->tgt[bpid] * st->n_arrows + ai];
        if (r >= 0 && st->child_start[bpid] >= 0)
            return st->child_start[bpid] + r;
        return -1;
    } else {
        int32_t r = st->in_rank[(int64_t)st->src[bpid] * st->n_arrows + ai];
        if (r >= 0 && st->left_start[bpid] >= 0)
            return st->left_ext[st->left_start[bpid] + r];
        return -1;
    }
}

/* accumulate (cnum/cden) * class(b.ai | ai.b) into scratch[dst]; b must
 * carry a basis position (alive or dead) */
static int ext_into(sweep_state *st, int dst, int64_t bpid, int32_t ai,
                    int side, int64_t cnum, int64_t cden)
{
    int64_t bp = st->bpos[bpid];
    int64_t off;
    if (bp < 0) return QS_INTERNAL;
    off = (side ? st->tab_left : st->tab_right)[bp * st->n_arrows + ai];
    if (off >= 0)
        return acc_addmul(st, dst, st->tab_arena.data + off, cnum, cden);
    {
        int64_t cid = ext_pid(st, bpid, ai, side);
        int rc;
        if (cid < 0) return QS_OK; /* incomposable: contributes zero */
        rc = class_into(st, cid, 2);
        if (rc) return rc;
        return acc_addmul(st, dst, st->scratch[2].data, cnum, cden);
    }
}

/* scratch[dst] = fold of scratch[6] under arrow ai on the given side */
static int fold_scratch6(sweep_state *st, int dst, int32_t ai, int side)
{
    int64_t den = st->scratch[6].data[0];
    int64_t n = st->scratch[6].data[1], k;
    int rc = acc_init(st, dst);
    if (rc) return rc;
    for (k = 0; k < n; k++) {
        rc = ext_into(st, dst, st->scratch[6].data[2 + 2 * k], ai, side,
                      st->scratch[6].data[3 + 2 * k], den);
        if (rc) return rc;
    }
    return QS_OK;
}

/* ------------------------------------------------- echelon and collapse */

static int cand_store(sweep_state *st, const int64_t *row, int64_t pivot)
{
    int rc;
    int64_t off = arena_put(&st->cand_arena, row, &rc);
    if (rc) return rc;
    if (st->cand_len == st->cand_cap) {
        int64_t nc = st->cand_cap ? st->cand_cap * 2 : 64;
        int64_t *nr = (int64_t *)realloc(st->cand_rows, (size_t)nc * 8);
        int64_t *np;
        if (!nr) return QS_NOMEM;
        st->cand_rows = nr;
        np = (int64_t *)realloc(st->cand_pivot, (size_t)nc * 8);
        if (!np) return QS_NOMEM;
        st->cand_pivot = np;
        st->cand_cap = nc;
    }
    st->cand_rows[st->cand_len] = off;
    st->cand_pivot[st->cand_len] = pivot;
    st->cand_slot[pivot - st->cand_lo] = (int32_t)st->cand_len;
    st->cand_len++;
    return QS_OK;
}

static int push_kill(sweep_state *st, int64_t pos)
{
    if (st->kills_len == st->kills_cap) {
        int64_t nc = st->kills_cap ? st->kills_cap * 2 : 64;
        int64_t *nk = (int64_t *)realloc(st->kills, (size_t)nc * 8);
        if (!nk) return QS_NOMEM;
        st->kills = nk;
        st->kills_cap = nc;
    }
    st->kills[st->kills_len++] = pos;
    return QS_OK;
}

/* drop the lead term of the working row and add cnum/cden times res */
static int eliminate_lead(sweep_state *st, const int64_t *res)
{
    buf_t *w = &st->scratch[0];
    buf_t *t = &st->scratch[1];
    int64_t cnum = w->data[3], cden = w->data[0];
    int64_t i, n2 = w->data[1] - 1;
    int rc;
    for (i = 0; i < n2; i++) {
        w->data[2 + 2 * i] = w->data[4 + 2 * i];
        w->data[3 + 2 * i] = w->data[5 + 2 * i];
    }
    w->data[1] = n2;
    rc = buf_reserve(t, 2 + 2 * (n2 + res[1]));
    if (rc) return rc;
    rc = row_addmul(w->data, res, cnum, cden, t->data);
    if (rc) return rc;
    {
        buf_t tmp = *w;
        *w = *t;
        *t = tmp;
    }
    return QS_OK;
}

/* insert the row in scratch[0]; rows surviving candidate elimination
 * with an older basis lead kill that basis path */
static int row_insert(sweep_state *st)
{
    buf_t *w = &st->scratch[0];
    int rc;

    for (;;) {
        int64_t n = w->data[1], lead;
        if (!n) return QS_OK;
        lead = w->data[2];
        if (lead >= st->cand_lo && lead < st->cand_hi && st->bpos[lead] < 0
            && st->side_slot[lead] < 0) {
            int64_t slot = st->cand_slot[lead - st->cand_lo];
            if (slot < 0) {
                rc = residue_of_lead(st, w->data, 1);
                if (rc) return rc;
                return cand_store(st, st->scratch[1].data, lead);
            }
            rc = eliminate_lead(st,
                                st->cand_arena.data + st->cand_rows[slot]);
            if (rc) return rc;
            continue;
        }
        if (st->side_slot[lead] >= 0) {
            rc = eliminate_lead(st, st->tab_arena.data
                                + st->side_rows[st->side_slot[lead]]);
            if (rc) return rc;
            continue;
        }
        {
            int64_t pos = st->bpos[lead];
            int64_t off;
            if (pos < 0 || st->basis_dead[pos]) return QS_INTERNAL;
            rc = residue_of_lead(st, w->data, 1);
            if (rc) return rc;
            off = arena_put(&st->tab_arena, st->scratch[1].data, &rc);
            if (rc) return rc;
            if (st->side_len == st->side_cap) {
                int64_t nc = st->side_cap ? st->side_cap * 2 : 64;
                int64_t *nr =
                    (int64_t *)realloc(st->side_rows, (size_t)nc * 8);
                if (!nr) return QS_NOMEM;
                st->side_rows = nr;
                st->side_cap = nc;
            }
            st->side_rows[st->side_len] = off;
            st->side_slot[lead] = (int32_t)st->side_len;
            st->side_len++;
            st->side_total++;
            st->basis_dead[pos] = 1;
            st->basis_alive--;
            return push_kill(st, pos);
        }
    }
}

/* after basis path x died: impose class(x.a) = fold(res(x), a) and the
 * left analogue, reading classes from tables or the current level */
static int inject_translates(sweep_state *st, int64_t pos)
{
    int32_t ai;
    int side, rc;
    int64_t xpid = st->basis_pid[pos];
    for (ai = 0; ai < st->n_arrows; ai++) {
        for (side = 0; side < 2; side++) {
            int64_t off = (side ? st->tab_left : st->tab_right)
                [pos * st->n_arrows + ai];
            rc = acc_init(st, 4);
            if (rc) return rc;
            if (off >= 0) {
                rc = acc_addmul(st, 4, st->tab_arena.data + off, 1, 1);
                if (rc) return rc;
            } else {
                int64_t cid = ext_pid(st, xpid, ai, side);
                if (cid < 0) continue;
                if (cid >= st->cand_hi) continue; /* beyond this level */
                rc = class_into(st, cid, 2);
                if (rc) return rc;
                rc = acc_addmul(st, 4, st->scratch[2].data, 1, 1);
                if (rc) return rc;
            }
            rc = copy_row(st, 6, st->tab_arena.data
                          + st->side_rows[st->side_slot[xpid]]);
            if (rc) return rc;
            {
                int64_t den = st->scratch[6].data[0];
                int64_t nn = st->scratch[6].data[1], k;
                for (k = 0; k < nn; k++) {
                    rc = ext_into(st, 4, st->scratch[6].data[2 + 2 * k], ai,
                                  side, -st->scratch[6].data[3 + 2 * k],
                                  den);
                    if (rc) return rc;
                }
            }
            {
                buf_t tmp = st->scratch[0];
                st->scratch[0] = st->scratch[4];
                st->scratch[4] = tmp;
            }
            rc = row_insert(st);
            if (rc) return rc;
        }
    }
    return QS_OK;
}

static int drain_kills(sweep_state *st)
{
    int rc;
    while (st->kills_len) {
        int64_t pos = st->kills[--st->kills_len];
        rc = inject_translates(st, pos);
        if (rc) return rc;
    }
    return QS_OK;
}

/* ------------------------------------------------------------ the API */

sweep_state *qs_new(int32_t n_arrows, int64_t basis_bound)
{
    sweep_state *st = (sweep_state *)calloc(1, sizeof(sweep_state));
    if (!st) return NULL;
    st->n_arrows = n_arrows;
    st->basis_bound = basis_bound;
    st->cur = 1;
    return st;
}

void qs_free(sweep_state *st)
{
    int i;
    if (!st) return;
    free(st->side_slot);
    free(st->bpos);
    free(st->basis_pid);
    free(st->basis_dead);
    free(st->tab_arena.data);
    free(st->tab_right);
    free(st->tab_left);
    free(st->side_rows);
    for (i = 0; i < 2; i++) {
        free(st->win_arena[i].data);
        free(st->win_off[i]);
    }
    free(st->pin_pids);
    free(st->pin_offs);
    free(st->cand_slot);
    free(st->cand_rows);
    free(st->cand_pivot);
    free(st->cand_arena.data);
    free(st->patch);
    free(st->winserted);
    free(st->kills);
    for (i = 0; i < NSCRATCH; i++)
        free(st->scratch[i].data);
    free(st);
}

void qs_set_trie(sweep_state *st, const int32_t *tgt, const int32_t *src,
                 const int32_t *parent, const int32_t *last,
                 const int32_t *first, const int32_t *suffix,
                 const int32_t *child_start, const int32_t *left_start,
                 const int32_t *left_ext, const int32_t *out_rank,
                 const int32_t *in_rank)
{
    st->tgt = tgt;
    st->src = src;
    st->parent = parent;
    st->last = last;
    st->first = first;
    st->suffix = suffix;
    st->child_start = child_start;
    st->left_start = left_start;
    st->left_ext = left_ext;
    st->out_rank = out_rank;
    st->in_rank = in_rank;
}

int qs_add_pin(sweep_state *st, int64_t pid)
{
    int64_t i;
    for (i = 0; i < st->pin_len; i++)
        if (st->pin_pids[i] == pid) return QS_OK;
    if (st->pin_len == st->pin_cap) {
        int64_t nc = st->pin_cap ? st->pin_cap * 2 : 32;
        int64_t *np = (int64_t *)realloc(st->pin_pids, (size_t)nc * 8);
        int64_t *no;
        if (!np) return QS_NOMEM;
        st->pin_pids = np;
        no = (int64_t *)realloc(st->pin_offs, (size_t)nc * 8);
        if (!no) return QS_NOMEM;
        st->pin_offs = no;
        st->pin_cap = nc;
    }
    st->pin_pids[st->pin_len] = pid;
    st->pin_offs[st->pin_len] = -1;
    st->pin_len++;
    st->pins_pending++;
    return QS_OK;
}

int qs_init_levels(sweep_state *st, int64_t n_vertices, int64_t lvl1_hi)
{
    int64_t pid;
    int rc = ensure_pid_maps(st, lvl1_hi);
    int w;
    if (rc) return rc;
    for (pid = 0; pid < lvl1_hi; pid++) {
        rc = basis_add(st, pid);
        if (rc) return rc;
    }
    for (pid = n_vertices; pid < lvl1_hi; pid++) {
        int64_t unit[4];
        int64_t off;
        int32_t ai = st->last[pid];
        unit[0] = 1;
        unit[1] = 1;
        unit[2] = pid;
        unit[3] = 1;
        off = arena_put(&st->tab_arena, unit, &rc);
        if (rc) return rc;
        st->tab_right[(int64_t)st->bpos[st->src[pid]] * st->n_arrows + ai] =
            off;
        st->tab_left[(int64_t)st->bpos[st->tgt[pid]] * st->n_arrows + ai] =
            off;
    }
    st->win_lo[0] = 0;
    st->win_hi[0] = n_vertices;
    st->win_lo[1] = n_vertices;
    st->win_hi[1] = lvl1_hi;
    for (w = 0; w < 2; w++) {
        int64_t n = st->win_hi[w] - st->win_lo[w], i;
        int64_t *no = (int64_t *)realloc(st->win_off[w],
                                         (size_t)(n > 0 ? n : 1) * 8);
        if (!no) return QS_NOMEM;
        st->win_off[w] = no;
        st->win_cap_entries[w] = n;
        for (i = 0; i < n; i++)
            no[i] = OFF_BASIS;
    }
    st->cur = 1;
    st->last_new_basis = lvl1_hi - n_vertices;
    st->cand_lo = st->cand_hi = 0;
    return QS_OK;
}

/* store scratch[src] as the class of pid in the current window */
static int store_class(sweep_state *st, int64_t pid, int src, int patch)
{
    int rc;
    int cur = st->cur;
    int64_t off = arena_put(&st->win_arena[cur], st->scratch[src].data, &rc);
    if (rc) return rc;
    st->win_off[cur][pid - st->win_lo[cur]] = off;
    if (patch) {
        if (st->patch_len == st->patch_cap) {
            int64_t nc = st->patch_cap ? st->patch_cap * 2 : 1024;
            int64_t *np = (int64_t *)realloc(st->patch, (size_t)nc * 8);
            if (!np) return QS_NOMEM;
            st->patch = np;
            st->patch_cap = nc;
        }
        st->patch[st->patch_len++] = pid;
    }
    return QS_OK;
}

static int is_live_basis_unit(const sweep_state *st, int64_t pid)
{
    const int64_t *r = st->scratch[6].data;
    return r[1] == 1 && r[0] == 1 && r[2] == pid && r[3] == 1
        && st->bpos[pid] >= 0 && !st->basis_dead[st->bpos[pid]];
}

int qs_level(sweep_state *st, int64_t lo, int64_t hi,
             const int64_t *seed_data, int64_t seed_len)
{
    int rc = ensure_pid_maps(st, hi);
    int cur = 1 - st->cur;
    int64_t pid, i;
    int64_t new_basis = 0;

    if (rc) return rc;

    st->cand_lo = lo;
    st->cand_hi = hi;
    if (st->cand_slot_cap < hi - lo) {
        int32_t *ns =
            (int32_t *)realloc(st->cand_slot, (size_t)(hi - lo) * 4);
        if (!ns) return QS_NOMEM;
        st->cand_slot = ns;
        st->cand_slot_cap = hi - lo;
    }
    for (i = 0; i < hi - lo; i++)
        st->cand_slot[i] = -1;
    st->cand_len = 0;
    st->cand_arena.len = 0;
    st->patch_len = 0;
    if (st->winserted_cap < hi - lo) {
        uint8_t *nw = (uint8_t *)realloc(st->winserted, (size_t)(hi - lo));
        if (!nw) return QS_NOMEM;
        st->winserted = nw;
        st->winserted_cap = hi - lo;
    }
    memset(st->winserted, 0, (size_t)(hi - lo));

    st->win_arena[cur].len = 0;
    if (st->win_cap_entries[cur] < hi - lo) {
        int64_t *no =
            (int64_t *)realloc(st->win_off[cur],
                               (size_t)(hi - lo > 0 ? hi - lo : 1) * 8);
        if (!no) return QS_NOMEM;
        st->win_off[cur] = no;
        st->win_cap_entries[cur] = hi - lo;
    }
    st->win_lo[cur] = lo;
    st->win_hi[cur] = hi;
    for (i = 0; i < hi - lo; i++)
        st->win_off[cur][i] = OFF_UNSET;
    st->cur = cur;

    /* pass 1 */
    for (pid = lo; pid < hi; pid++) {
        int64_t par = st->parent[pid];
        int64_t k, nt;
        int has_cand = 0;
        rc = class_into(st, par, 6);
        if (rc) return rc;
        if (is_live_basis_unit(st, par))
            continue; /* candidate */
        rc = fold_scratch6(st, 4, st->last[pid], 0);
        if (rc) return rc;
        nt = st->scratch[4].data[1];
        for (k = 0; k < nt; k++) {
            int64_t tp = st->scratch[4].data[2 + 2 * k];
            if (tp >= lo && tp < hi) {
                has_cand = 1;
                break;
            }
        }
        rc = store_class(st, pid, 4, has_cand);
        if (rc) return rc;
    }

    /* pass 2a: left-consistency rows */
    for (pid = lo; pid < hi; pid++) {
        int64_t s = st->suffix[pid];
        int32_t a = st->first[pid];
        int64_t den, n, k;
        rc = class_into(st, s, 6);
        if (rc) return rc;
        if (is_live_basis_unit(st, s))
            continue;
        rc = class_into(st, pid, 2);
        if (rc) return rc;
        rc = acc_init(st, 4);
        if (rc) return rc;
        rc = acc_addmul(st, 4, st->scratch[2].data, 1, 1);
        if (rc) return rc;
        den = st->scratch[6].data[0];
        n = st->scratch[6].data[1];
        for (k = 0; k < n; k++) {
            rc = ext_into(st, 4, st->scratch[6].data[2 + 2 * k], a, 1,
                          -st->scratch[6].data[3 + 2 * k], den);
            if (rc) return rc;
        }
        {
            buf_t tmp = st->scratch[0];
            st->scratch[0] = st->scratch[4];
            st->scratch[4] = tmp;
        }
        rc = row_insert(st);
        if (rc) return rc;
        rc = drain_kills(st);
        if (rc) return rc;
    }

    /* pass 2b: relation rows topping out at this level */
    {
        int64_t posn = 0;
        while (posn < seed_len) {
            int64_t den = seed_data[posn];
            int64_t n = seed_data[posn + 1], k;
            rc = acc_init(st, 4);
            if (rc) return rc;
            for (k = 0; k < n; k++) {
                rc = class_into(st, seed_data[posn + 2 + 2 * k], 2);
                if (rc) return rc;
                rc = acc_addmul(st, 4, st->scratch[2].data,
                                seed_data[posn + 3 + 2 * k], den);
                if (rc) return rc;
            }
            {
                buf_t tmp = st->scratch[0];
                st->scratch[0] = st->scratch[4];
                st->scratch[4] = tmp;
            }
            rc = row_insert(st);
            if (rc) return rc;
            rc = drain_kills(st);
            if (rc) return rc;
            posn += 2 + 2 * n;
        }
    }

    /* candidates whose parent died during this level: their class is the
     * fold of the parent residue; impose it as a row, iterating because
     * such rows can kill further parents */
    for (;;) {
        int changed = 0;
        for (pid = lo; pid < hi; pid++) {
            int64_t par;
            if (st->win_off[cur][pid - lo] != OFF_UNSET) continue;
            if (st->winserted[pid - lo]) continue;
            par = st->parent[pid];
            if (st->bpos[par] >= 0 && !st->basis_dead[st->bpos[par]])
                continue;
            st->winserted[pid - lo] = 1;
            changed = 1;
            rc = class_into(st, par, 6);
            if (rc) return rc;
            rc = fold_scratch6(st, 4, st->last[pid], 0);
            if (rc) return rc;
            rc = unit_into(st, 0, pid);
            if (rc) return rc;
            rc = acc_addmul(st, 0, st->scratch[4].data, -1, 1);
            if (rc) return rc;
            rc = row_insert(st);
            if (rc) return rc;
            rc = drain_kills(st);
            if (rc) return rc;
        }
        if (!changed) break;
    }

    /* assign classes */
    for (pid = lo; pid < hi; pid++) {
        if (st->win_off[cur][pid - lo] != OFF_UNSET) continue;
        if (st->cand_slot[pid - lo] >= 0) {
            rc = copy_row(st, 4, st->cand_arena.data
                          + st->cand_rows[st->cand_slot[pid - lo]]);
            if (rc) return rc;
            rc = store_class(st, pid, 4, 1);
            if (rc) return rc;
        } else if (!st->winserted[pid - lo]) {
            rc = basis_add(st, pid);
            if (rc) return rc;
            st->win_off[cur][pid - lo] = OFF_BASIS;
            new_basis++;
            if (st->basis_alive > st->basis_bound) return QS_BOUND;
        } else {
            /* dead-parent candidate never pivoted: class = parent fold */
            rc = class_into(st, st->parent[pid], 6);
            if (rc) return rc;
            rc = fold_scratch6(st, 4, st->last[pid], 0);
            if (rc) return rc;
            rc = store_class(st, pid, 4, 1);
            if (rc) return rc;
        }
    }

    /* patch stored rows candidate-free: killed candidates reference only
     * smaller pids, so repeated substitution terminates */
    for (i = 0; i < st->patch_len; i++) {
        int64_t ppid = st->patch[i];
        for (;;) {
            int64_t off = st->win_off[cur][ppid - lo];
            const int64_t *row = st->win_arena[cur].data + off;
            int64_t n = row[1], k;
            int dirty = 0;
            for (k = 0; k < n; k++) {
                int64_t tp = row[2 + 2 * k];
                if (tp >= lo && tp < hi && st->win_off[cur][tp - lo] >= 0) {
                    dirty = 1;
                    break;
                }
            }
            if (!dirty) break;
            rc = acc_init(st, 4);
            if (rc) return rc;
            for (k = 0; k < n; k++) {
                int64_t tp, tn;
                row = st->win_arena[cur].data + off; /* arena may move */
                tp = row[2 + 2 * k];
                tn = row[3 + 2 * k];
                if (tp >= lo && tp < hi && st->win_off[cur][tp - lo] >= 0)
                    rc = class_into(st, tp, 2);
                else
                    rc = unit_into(st, 2, tp);
                if (rc) return rc;
                row = st->win_arena[cur].data + off;
                rc = acc_addmul(st, 4, st->scratch[2].data, tn, row[0]);
                if (rc) return rc;
            }
            rc = store_class(st, ppid, 4, 0);
            if (rc) return rc;
        }
    }

    /* persist tables and pins */
    for (pid = lo; pid < hi; pid++) {
        int64_t off = st->win_off[cur][pid - lo];
        int64_t unit[4];
        const int64_t *row;
        int64_t bp;
        if (off == OFF_BASIS) {
            unit[0] = 1;
            unit[1] = 1;
            unit[2] = pid;
            unit[3] = 1;
            row = unit;
        } else {
            row = st->win_arena[cur].data + off;
        }
        bp = st->bpos[st->parent[pid]];
        if (bp >= 0) {
            int64_t toff = arena_put(&st->tab_arena, row, &rc);
            if (rc) return rc;
            st->tab_right[bp * st->n_arrows + st->last[pid]] = toff;
        }
        bp = st->bpos[st->suffix[pid]];
        if (bp >= 0) {
            int64_t toff = arena_put(&st->tab_arena, row, &rc);
            if (rc) return rc;
            st->tab_left[bp * st->n_arrows + st->first[pid]] = toff;
        }
        if (st->pins_pending > 0) {
            for (i = 0; i < st->pin_len; i++) {
                if (st->pin_pids[i] == pid && st->pin_offs[i] < 0) {
                    st->pin_offs[i] = arena_put(&st->tab_arena, row, &rc);
                    if (rc) return rc;
                    st->pins_pending--;
                }
            }
        }
    }

    st->last_new_basis = new_basis;
    return QS_OK;
}

int64_t qs_basis_alive(const sweep_state *st) { return st->basis_alive; }
int64_t qs_last_new_basis(const sweep_state *st)
{
    return st->last_new_basis;
}
int64_t qs_side_total(const sweep_state *st) { return st->side_total; }

int64_t qs_basis_pids(const sweep_state *st, int64_t *out, int64_t cap)
{
    int64_t i, n = 0;
    for (i = 0; i < st->basis_len; i++) {
        if (st->basis_dead[i]) continue;
        if (n == cap) return -1;
        out[n++] = st->basis_pid[i];
    }
    return n;
}

/* right-action row of the bi-th alive basis path under arrow ai, with
 * dead basis paths substituted away.  Returns the term count, or -1 if
 * absent/incomposable, -2 on overflow, -3 if out_cap is short, -4 on
 * internal error. */
int64_t qs_action(sweep_state *st, int64_t bi, int32_t ai, int64_t *out_pids,
                  int64_t *out_nums, int64_t *out_den, int64_t out_cap)
{
    int64_t pos = -1, i, seen = -1;
    int rc;
    for (i = 0; i < st->basis_len; i++) {
        if (st->basis_dead[i]) continue;
        seen++;
        if (seen == bi) {
            pos = i;
            break;
        }
    }
    if (pos < 0) return -4;
    {
        int64_t off = st->tab_right[pos * st->n_arrows + ai];
        if (off < 0) return -1;
        rc = copy_row(st, 0, st->tab_arena.data + off);
        if (rc) return -4;
    }
    for (;;) {
        int64_t *row = st->scratch[0].data;
        int64_t n = row[1], k, hit = -1;
        for (k = 0; k < n; k++) {
            if (st->side_slot[row[2 + 2 * k]] >= 0) {
                hit = k;
                break;
            }
        }
        if (hit < 0) break;
        {
            const int64_t *res = st->tab_arena.data
                + st->side_rows[st->side_slot[row[2 + 2 * hit]]];
            int64_t cnum = row[3 + 2 * hit], cden = row[0];
            int64_t n2 = n - 1;
            for (k = hit; k < n2; k++) {
                row[2 + 2 * k] = row[4 + 2 * k];
                row[3 + 2 * k] = row[5 + 2 * k];
            }
            row[1] = n2;
            rc = buf_reserve(&st->scratch[1], 2 + 2 * (n2 + res[1]));
            if (rc) return -4;
            rc = row_addmul(st->scratch[0].data, res, cnum, cden,
                            st->scratch[1].data);
            if (rc) return -2;
            {
                buf_t tmp = st->scratch[0];
                st->scratch[0] = st->scratch[1];
                st->scratch[1] = tmp;
            }
        }
    }
    {
        const int64_t *row = st->scratch[0].data;
        if (row[1] > out_cap) return -3;
        for (i = 0; i < row[1]; i++) {
            out_pids[i] = row[2 + 2 * i];
            out_nums[i] = row[3 + 2 * i];
        }
        *out_den = row[0];
        return row[1];
    }
}
