#include "isodual/matrix.hpp"

#include <algorithm>

namespace isodual {

namespace {

// r_target -= c * r_source, in place over the field
void row_axpy(const Field& f, int32_t* target, const int32_t* source, int n,
              int64_t c) {
    if (c == 0) return;
    for (int j = 0; j < n; ++j) {
        if (source[j] == 0) continue;
        target[j] = static_cast<int32_t>(f.sub(target[j], f.mul(c, source[j])));
    }
}

void row_scale(const Field& f, int32_t* r, int n, int64_t c) {
    for (int j = 0; j < n; ++j)
        if (r[j] != 0) r[j] = static_cast<int32_t>(f.mul(r[j], c));
}

MatGF nullspace_of_rref(const FieldPtr& fp, const MatGF& r,
                        const std::vector<int>& pivots, int cols) {
    const Field& f = *fp;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    int nfree = cols - static_cast<int>(pivots.size());
    MatGF basis(fp, nfree, cols);
    int bi = 0;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        basis.set(bi, c, 1);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            basis.set(bi, pivots[pr], f.neg(r.at(static_cast<int>(pr), c)));
        ++bi;
    }
    return basis;
}

} // namespace

RrefResult rref(const MatGF& m) {
    RrefResult out;
    out.reduced = m;
    MatGF& a = out.reduced;
    const Field& f = *m.field();
    int pr = 0;
    for (int c = 0; c < a.cols() && pr < a.rows(); ++c) {
        int sel = -1;
        for (int r = pr; r < a.rows(); ++r)
            if (a.at(r, c) != 0) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = 0; j < a.cols(); ++j) {
                int64_t t = a.at(pr, j);
                a.set(pr, j, a.at(sel, j));
                a.set(sel, j, t);
            }
        row_scale(f, a.row(pr), a.cols(), f.inv(a.at(pr, c)));
        for (int r = 0; r < a.rows(); ++r)
            if (r != pr && a.at(r, c) != 0)
                row_axpy(f, a.row(r), a.row(pr), a.cols(), a.at(r, c));
        out.pivots.push_back(c);
        ++pr;
    }
    out.rank = pr;
    return out;
}

int rank(const MatGF& m) { return rref(m).rank; }

MatGF nullspace(const MatGF& m) {
    RrefResult r = rref(m);
    return nullspace_of_rref(m.field(), r.reduced, r.pivots, m.cols());
}

bool rowspace_equal(const MatGF& a, const MatGF& b) {
    if (a.cols() != b.cols() || !a.field()->same(*b.field())) return false;
    RrefResult ra = rref(a), rb = rref(b);
    if (ra.rank != rb.rank || ra.pivots != rb.pivots) return false;
    for (int i = 0; i < ra.rank; ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (ra.reduced.at(i, j) != rb.reduced.at(i, j)) return false;
    return true;
}

SolveResult solve_linear(const MatGF& a, const std::vector<int64_t>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw Error("DimensionMismatch", "right-hand side length != rows");
    MatGF aug(a.field(), a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
        aug.set(r, a.cols(), b[r]);
    }
    RrefResult rr = rref(aug);
    SolveResult out;
    out.kernel = nullspace(a);
    for (int c : rr.pivots)
        if (c == a.cols()) { out.has_solution = false; return out; }
    out.has_solution = true;
    out.x.assign(a.cols(), 0);
    for (size_t i = 0; i < rr.pivots.size(); ++i)
        out.x[rr.pivots[i]] = rr.reduced.at(static_cast<int>(i), a.cols());
    return out;
}

MatGF transpose(const MatGF& m) {
    MatGF t(m.field(), m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) t.set(c, r, m.at(r, c));
    return t;
}

MatGF matmul(const MatGF& a, const MatGF& b) {
    if (a.cols() != b.rows() || !a.field()->same(*b.field()))
        throw Error("DimensionMismatch", "incompatible shapes in matmul");
    const Field& f = *a.field();
    MatGF out(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            int64_t aik = a.at(i, k);
            if (aik == 0) continue;
            const int32_t* brow = b.row(k);
            int32_t* orow = out.row(i);
            for (int j = 0; j < b.cols(); ++j) {
                if (brow[j] == 0) continue;
                orow[j] = static_cast<int32_t>(f.add(orow[j], f.mul(aik, brow[j])));
            }
        }
    return out;
}

bool is_zero(const MatGF& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) return false;
    return true;
}

MatGF identity(const FieldPtr& f, int n) {
    MatGF m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

OnlineRref::OnlineRref(FieldPtr f, int cols) : f_(std::move(f)), cols_(cols) {}

bool OnlineRref::insert(const std::vector<int64_t>& row) {
    const Field& f = *f_;
    std::vector<int32_t> w(cols_);
    for (int j = 0; j < cols_; ++j) w[j] = static_cast<int32_t>(row[j]);
    // reduce against existing pivot rows
    for (size_t i = 0; i < pivots_.size(); ++i) {
        int64_t c = w[pivots_[i]];
        if (c != 0) row_axpy(f, w.data(), rows_[i].data(), cols_, c);
    }
    int lead = -1;
    for (int j = 0; j < cols_; ++j)
        if (w[j] != 0) { lead = j; break; }
    if (lead < 0) return false;
    row_scale(f, w.data(), cols_, f.inv(w[lead]));
    // back-substitute into existing rows to keep the state fully reduced
    for (size_t i = 0; i < rows_.size(); ++i) {
        int64_t c = rows_[i][lead];
        if (c != 0) row_axpy(f, rows_[i].data(), w.data(), cols_, c);
    }
    // insert keeping pivot order
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
}

MatGF OnlineRref::matrix() const {
    MatGF m(f_, static_cast<int>(rows_.size()), cols_);
    for (size_t i = 0; i < rows_.size(); ++i)
        for (int j = 0; j < cols_; ++j) m.set(static_cast<int>(i), j, rows_[i][j]);
    return m;
}

MatGF OnlineRref::kernel() const {
    return nullspace_of_rref(f_, matrix(), pivots_, cols_);
}

} // namespace isodual
