#include "admcube/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace admcube {

Matrix::Matrix(Ring ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error("Matrix: negative dimension");
    e_.assign(static_cast<std::size_t>(rows) * cols, Elem(ring_, 0));
}

Matrix Matrix::identity(const Ring& ring, int n) {
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Elem(ring, 1));
    return m;
}

Matrix Matrix::scalar(const Ring& ring, int n, const Elem& a) {
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, a);
    return m;
}

Matrix Matrix::from_int_rows(const Ring& ring, int rows, int cols,
                             std::initializer_list<long> entries) {
    if (static_cast<int>(entries.size()) != rows * cols) {
        throw Error("from_int_rows: entry count mismatch");
    }
    Matrix m(ring, rows, cols);
    auto it = entries.begin();
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m.set(i, j, Elem(ring, Int(*it++)));
    }
    return m;
}

void Matrix::set(int i, int j, Elem v) {
    if (v.ring() != ring_) throw Error("Matrix::set: ring mismatch");
    e_[static_cast<std::size_t>(i) * cols_ + j] = std::move(v);
}

Matrix Matrix::transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    }
    return t;
}

Matrix Matrix::hcat(const Matrix& o) const {
    if (o.rows_ != rows_ || o.ring_ != ring_) throw Error("hcat: shape/ring mismatch");
    Matrix m(ring_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
        for (int j = 0; j < o.cols_; ++j) m.set(i, cols_ + j, o.at(i, j));
    }
    return m;
}

Matrix Matrix::vcat(const Matrix& o) const {
    if (o.cols_ != cols_ || o.ring_ != ring_) throw Error("vcat: shape/ring mismatch");
    Matrix m(ring_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(rows_ + i, j, o.at(i, j));
    return m;
}

Matrix Matrix::cols_subset(const std::vector<int>& idx) const {
    Matrix m(ring_, rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < static_cast<int>(idx.size()); ++j) {
        for (int i = 0; i < rows_; ++i) m.set(i, j, at(i, idx[j]));
    }
    return m;
}

Matrix Matrix::rows_subset(const std::vector<int>& idx) const {
    Matrix m(ring_, static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < static_cast<int>(idx.size()); ++i) {
        for (int j = 0; j < cols_; ++j) m.set(i, j, at(idx[i], j));
    }
    return m;
}

Matrix Matrix::submatrix(const std::vector<int>& ri, const std::vector<int>& ci) const {
    Matrix m(ring_, static_cast<int>(ri.size()), static_cast<int>(ci.size()));
    for (int i = 0; i < static_cast<int>(ri.size()); ++i) {
        for (int j = 0; j < static_cast<int>(ci.size()); ++j) m.set(i, j, at(ri[i], ci[j]));
    }
    return m;
}

Matrix Matrix::minor_matrix(int drop_row, int drop_col) const {
    std::vector<int> ri, ci;
    for (int i = 0; i < rows_; ++i)
        if (i != drop_row) ri.push_back(i);
    for (int j = 0; j < cols_; ++j)
        if (j != drop_col) ci.push_back(j);
    return submatrix(ri, ci);
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols_ != o.rows_ || ring_ != o.ring_) throw Error("mul: shape/ring mismatch");
    Matrix m(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < o.cols_; ++j) {
            Elem s(ring_, 0);
            for (int k = 0; k < cols_; ++k) s = admcube::add(s, admcube::mul(at(i, k), o.at(k, j)));
            m.set(i, j, std::move(s));
        }
    }
    return m;
}

Matrix Matrix::add(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_)
        throw Error("add: shape/ring mismatch");
    Matrix m(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, admcube::add(at(i, j), o.at(i, j)));
    return m;
}

Matrix Matrix::sub(const Matrix& o) const { return add(o.negate()); }

Matrix Matrix::negate() const {
    Matrix m(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, neg(at(i, j)));
    return m;
}

Matrix Matrix::scaled(const Elem& a) const {
    Matrix m(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, admcube::mul(a, at(i, j)));
    return m;
}

bool Matrix::is_zero() const {
    for (const Elem& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << admcube::to_string(at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// Tracks d = u*a*v together with u, v and their exact inverses under
// elementary row/column operations.
struct SnfWorker {
    Matrix d, u, uinv, v, vinv;

    explicit SnfWorker(const Matrix& a)
        : d(a),
          u(Matrix::identity(a.ring(), a.rows())),
          uinv(Matrix::identity(a.ring(), a.rows())),
          v(Matrix::identity(a.ring(), a.cols())),
          vinv(Matrix::identity(a.ring(), a.cols())) {}

    void swap_rows(Matrix& m, int i, int k) {
        for (int j = 0; j < m.cols(); ++j) {
            Elem t = m.at(i, j);
            m.set(i, j, m.at(k, j));
            m.set(k, j, t);
        }
    }
    void swap_cols(Matrix& m, int i, int k) {
        for (int r = 0; r < m.rows(); ++r) {
            Elem t = m.at(r, i);
            m.set(r, i, m.at(r, k));
            m.set(r, k, t);
        }
    }

    void rswap(int i, int k) {
        if (i == k) return;
        swap_rows(d, i, k);
        swap_rows(u, i, k);
        swap_cols(uinv, i, k);
    }
    void cswap(int j, int k) {
        if (j == k) return;
        swap_cols(d, j, k);
        swap_cols(v, j, k);
        swap_rows(vinv, j, k);
    }
    // row_i += q * row_k
    void raddmul(int i, int k, const Elem& q) {
        if (q.is_zero()) return;
        for (int j = 0; j < d.cols(); ++j) d.set(i, j, add(d.at(i, j), mul(q, d.at(k, j))));
        for (int j = 0; j < u.cols(); ++j) u.set(i, j, add(u.at(i, j), mul(q, u.at(k, j))));
        // uinv := uinv * E^{-1}: col_k -= q * col_i
        for (int r = 0; r < uinv.rows(); ++r)
            uinv.set(r, k, sub(uinv.at(r, k), mul(q, uinv.at(r, i))));
    }
    // col_j += q * col_k
    void caddmul(int j, int k, const Elem& q) {
        if (q.is_zero()) return;
        for (int r = 0; r < d.rows(); ++r) d.set(r, j, add(d.at(r, j), mul(q, d.at(r, k))));
        for (int r = 0; r < v.rows(); ++r) v.set(r, j, add(v.at(r, j), mul(q, v.at(r, k))));
        // vinv := F^{-1} * vinv: row_k -= q * row_j
        for (int c = 0; c < vinv.cols(); ++c)
            vinv.set(k, c, sub(vinv.at(k, c), mul(q, vinv.at(j, c))));
    }
    // row_i *= unit
    void rscale(int i, const Elem& unit) {
        Elem inv = *classify(unit).inverse;
        for (int j = 0; j < d.cols(); ++j) d.set(i, j, mul(unit, d.at(i, j)));
        for (int j = 0; j < u.cols(); ++j) u.set(i, j, mul(unit, u.at(i, j)));
        for (int r = 0; r < uinv.rows(); ++r) uinv.set(r, i, mul(inv, uinv.at(r, i)));
    }
};

// Smith normal form over the integers: smallest-absolute-value pivoting to
// control entry growth (desk-scale matrices, no modular tricks needed).
void snf_integer(SnfWorker& w) {
    Matrix& d = w.d;
    const int r = d.rows(), c = d.cols();
    const int dl = std::min(r, c);
    for (int k = 0; k < dl; ++k) {
        for (;;) {
            // locate smallest nonzero |entry| in the trailing block
            int pi = -1, pj = -1;
            Int best;
            for (int i = k; i < r; ++i) {
                for (int j = k; j < c; ++j) {
                    if (d.at(i, j).is_zero()) continue;
                    Int a = int_abs(d.at(i, j).num());
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0) return;  // trailing block is zero; done
            w.rswap(k, pi);
            w.cswap(k, pj);

            bool clean = true;
            for (int i = k + 1; i < r; ++i) {
                if (d.at(i, k).is_zero()) continue;
                Int q = int_fdiv_q(d.at(i, k).num(), d.at(k, k).num());
                w.raddmul(i, k, Elem(d.ring(), -q));
                if (!d.at(i, k).is_zero()) clean = false;
            }
            for (int j = k + 1; j < c; ++j) {
                if (d.at(k, j).is_zero()) continue;
                Int q = int_fdiv_q(d.at(k, j).num(), d.at(k, k).num());
                w.caddmul(j, k, Elem(d.ring(), -q));
                if (!d.at(k, j).is_zero()) clean = false;
            }
            if (!clean) continue;  // remainders left; re-pivot on a smaller entry

            // pivot must divide the whole trailing block for d_1 | d_2 | ...
            int bi = -1, bj = -1;
            for (int i = k + 1; i < r && bi < 0; ++i) {
                for (int j = k + 1; j < c; ++j) {
                    Int rem = d.at(i, j).num() % d.at(k, k).num();
                    if (rem != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
                }
            }
            if (bi < 0) break;
            w.raddmul(k, bi, Elem(d.ring(), 1));
        }
        if (d.at(k, k).num() < 0) w.rscale(k, Elem(d.ring(), -1));
    }
}

// Over a field: Gaussian elimination to diag(1,...,1,0,...).
void snf_field(SnfWorker& w) {
    Matrix& d = w.d;
    const int r = d.rows(), c = d.cols();
    const int dl = std::min(r, c);
    for (int k = 0; k < dl; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < r && pi < 0; ++i) {
            for (int j = k; j < c; ++j) {
                if (!d.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi < 0) return;
        w.rswap(k, pi);
        w.cswap(k, pj);
        w.rscale(k, *classify(d.at(k, k)).inverse);
        for (int i = k + 1; i < r; ++i) {
            if (!d.at(i, k).is_zero()) w.raddmul(i, k, neg(d.at(i, k)));
        }
        for (int j = k + 1; j < c; ++j) {
            if (!d.at(k, j).is_zero()) w.caddmul(j, k, neg(d.at(k, j)));
        }
    }
}

Matrix lift_to_integers(const Matrix& a) {
    Ring z = Ring::integers();
    Matrix m(z, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.set(i, j, Elem(z, a.at(i, j).num()));
    return m;
}

Matrix reduce_mod(const Matrix& a, const Ring& ring) {
    Matrix m(ring, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.set(i, j, Elem(ring, a.at(i, j).num()));
    return m;
}

// A unit u of Z/m with u * (d/g) == 1 mod m/g, where g = gcd(d, m). Used to
// rotate diagonal entries onto their canonical divisor representative.
Int unit_scaling_to_canonical(const Int& d, const Int& m) {
    Int g = int_gcd(d, m);
    Int w = int_divexact(d, g);
    Int mg = int_divexact(m, g);
    if (mg == 1) return Int(1);  // d generates the zero residue class pattern
    Int p, q;
    int_gcdext(int_mod(w, mg), mg, p, q);
    Int u = int_mod(p, mg);
    while (int_gcd(u, m) != 1) u += mg;  // lift to a unit mod m
    return u;
}

}  // namespace

SnfResult smith_normal_form(const Matrix& a) {
    const Ring& ring = a.ring();
    if (ring.kind() == RingKind::IntegersMod) {
        SnfWorker w(lift_to_integers(a));
        snf_integer(w);
        SnfResult res{reduce_mod(w.u, ring), reduce_mod(w.uinv, ring), reduce_mod(w.d, ring),
                      reduce_mod(w.v, ring), reduce_mod(w.vinv, ring)};
        // canonicalize diagonal entries to gcd(d, m) by unit row scalings
        const Int& m = ring.modulus();
        const int dl = std::min(a.rows(), a.cols());
        for (int k = 0; k < dl; ++k) {
            Int d = res.d.at(k, k).num();
            if (d == 0) continue;
            Int g = int_gcd(d, m);
            if (g == d) continue;
            Int u = unit_scaling_to_canonical(d, m);
            Elem ue(ring, u);
            Elem ui = *classify(ue).inverse;
            for (int j = 0; j < res.d.cols(); ++j) res.d.set(k, j, mul(ue, res.d.at(k, j)));
            for (int j = 0; j < res.u.cols(); ++j) res.u.set(k, j, mul(ue, res.u.at(k, j)));
            for (int i = 0; i < res.uinv.rows(); ++i)
                res.uinv.set(i, k, mul(ui, res.uinv.at(i, k)));
        }
        return res;
    }
    SnfWorker w(a);
    if (ring.is_field()) {
        snf_field(w);
    } else {
        snf_integer(w);
    }
    return SnfResult{std::move(w.u), std::move(w.uinv), std::move(w.d), std::move(w.v),
                     std::move(w.vinv)};
}

std::vector<Elem> snf_diagonal(const Matrix& a) {
    SnfResult s = smith_normal_form(a);
    std::vector<Elem> out;
    const int dl = std::min(a.rows(), a.cols());
    out.reserve(dl);
    for (int k = 0; k < dl; ++k) out.push_back(s.d.at(k, k));
    return out;
}

Matrix kernel_basis(const Matrix& a) {
    const Ring& ring = a.ring();
    const int r = a.rows(), c = a.cols();
    if (c == 0) return Matrix(ring, 0, 0);
    if (r == 0) return Matrix::identity(ring, c);
    SnfResult s = smith_normal_form(a);
    const int dl = std::min(r, c);
    std::vector<std::pair<int, Elem>> gens;  // (coordinate, coefficient)
    for (int j = 0; j < c; ++j) {
        if (j >= dl) {
            gens.emplace_back(j, Elem(ring, 1));
            continue;
        }
        const Elem& d = s.d.at(j, j);
        if (d.is_zero()) {
            gens.emplace_back(j, Elem(ring, 1));
        } else if (ring.kind() == RingKind::IntegersMod && !is_unit(d)) {
            // annihilator of the canonical divisor d: (m/d)
            Int ann = int_divexact(ring.modulus(), int_gcd(d.num(), ring.modulus()));
            gens.emplace_back(j, Elem(ring, ann));
        }
    }
    Matrix y(ring, c, static_cast<int>(gens.size()));
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) y.set(gens[g].first, g, gens[g].second);
    return s.v.mul(y);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    const Ring& ring = a.ring();
    if (b.rows() != a.rows() || b.ring() != ring) throw Error("solve: shape/ring mismatch");
    const int r = a.rows(), c = a.cols(), k = b.cols();
    SnfResult s = smith_normal_form(a);
    Matrix cb = s.u.mul(b);
    Matrix y(ring, c, k);
    const int dl = std::min(r, c);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < k; ++j) {
            const Elem& rhs = cb.at(i, j);
            if (i >= dl) {
                if (!rhs.is_zero()) return std::nullopt;
                continue;
            }
            const Elem& d = s.d.at(i, i);
            if (d.is_zero()) {
                if (!rhs.is_zero()) return std::nullopt;
                continue;
            }
            switch (ring.kind()) {
                case RingKind::Integers: {
                    if (rhs.num() % d.num() != 0) return std::nullopt;
                    y.set(i, j, Elem(ring, int_divexact(rhs.num(), d.num())));
                    break;
                }
                case RingKind::Rationals:
                case RingKind::PrimeField:
                    y.set(i, j, div_by_unit(rhs, d));
                    break;
                case RingKind::IntegersMod: {
                    // d is the canonical divisor gcd(d, m); d*y = rhs solvable
                    // iff d | rhs as integers
                    if (rhs.num() % d.num() != 0) return std::nullopt;
                    y.set(i, j, Elem(ring, int_divexact(rhs.num(), d.num())));
                    break;
                }
            }
        }
    }
    return s.v.mul(y);
}

Matrix row_hermite(const Matrix& a) {
    const Ring& ring = a.ring();
    if (ring.kind() == RingKind::IntegersMod) {
        throw Error("row_hermite: not defined over Z/m (lift first)");
    }
    Matrix m = a;
    const int r = m.rows(), c = m.cols();
    auto swap_rows = [&](int i, int k) {
        if (i == k) return;
        for (int j = 0; j < c; ++j) {
            Elem t = m.at(i, j);
            m.set(i, j, m.at(k, j));
            m.set(k, j, t);
        }
    };
    auto row_addmul = [&](int i, int k, const Elem& q) {
        for (int j = 0; j < c; ++j) m.set(i, j, add(m.at(i, j), mul(q, m.at(k, j))));
    };
    auto row_scale = [&](int i, const Elem& u) {
        for (int j = 0; j < c; ++j) m.set(i, j, mul(u, m.at(i, j)));
    };

    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        if (ring.kind() == RingKind::Integers) {
            for (;;) {
                int pi = -1;
                Int best;
                for (int i = row; i < r; ++i) {
                    if (m.at(i, col).is_zero()) continue;
                    Int v = int_abs(m.at(i, col).num());
                    if (pi < 0 || v < best) {
                        best = v;
                        pi = i;
                    }
                }
                if (pi < 0) break;
                swap_rows(row, pi);
                if (m.at(row, col).num() < 0) row_scale(row, Elem(ring, -1));
                bool clean = true;
                for (int i = row + 1; i < r; ++i) {
                    if (m.at(i, col).is_zero()) continue;
                    Int q = int_fdiv_q(m.at(i, col).num(), m.at(row, col).num());
                    row_addmul(i, row, Elem(ring, -q));
                    if (!m.at(i, col).is_zero()) clean = false;
                }
                if (clean) break;
            }
            if (m.at(row, col).is_zero()) continue;
            for (int i = 0; i < row; ++i) {
                Int q = int_fdiv_q(m.at(i, col).num(), m.at(row, col).num());
                row_addmul(i, row, Elem(ring, -q));
            }
            ++row;
        } else {
            int pi = -1;
            for (int i = row; i < r; ++i) {
                if (!m.at(i, col).is_zero()) {
                    pi = i;
                    break;
                }
            }
            if (pi < 0) continue;
            swap_rows(row, pi);
            row_scale(row, *classify(m.at(row, col)).inverse);
            for (int i = 0; i < r; ++i) {
                if (i != row && !m.at(i, col).is_zero()) row_addmul(i, row, neg(m.at(i, col)));
            }
            ++row;
        }
    }
    std::vector<int> keep;
    for (int i = 0; i < row; ++i) keep.push_back(i);
    return m.rows_subset(keep);
}

namespace {

Elem det_memo(const Matrix& a, uint32_t mask, std::unordered_map<uint32_t, Elem>& memo) {
    if (mask == 0) return Elem(a.ring(), 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int t = __builtin_popcount(mask);
    Elem s(a.ring(), 0);
    int ord = 0;
    for (int j = 0; j < a.cols(); ++j) {
        if (!(mask & (1u << j))) continue;
        const Elem& entry = a.at(t - 1, j);
        if (!entry.is_zero()) {
            Elem term = mul(entry, det_memo(a, mask & ~(1u << j), memo));
            s = ((t - 1 + ord) % 2 == 0) ? add(s, term) : sub(s, term);
        }
        ++ord;
    }
    memo.emplace(mask, s);
    return s;
}

}  // namespace

Elem det(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error("det: matrix not square");
    const int n = a.rows();
    if (n == 0) return Elem(a.ring(), 1);
    if (n > 16) throw Error("det: matrix too large for subset expansion");
    std::unordered_map<uint32_t, Elem> memo;
    return det_memo(a, (n == 32 ? ~0u : (1u << n) - 1), memo);
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Elem> minors(const Matrix& a, int t) {
    if (t < 1 || t > std::min(a.rows(), a.cols())) throw Error("minors: t out of range");
    std::vector<Elem> out;
    for (const auto& ri : subsets_lex(a.rows(), t)) {
        for (const auto& ci : subsets_lex(a.cols(), t)) {
            out.push_back(det(a.submatrix(ri, ci)));
        }
    }
    return out;
}

Matrix adjugate(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error("adjugate: matrix not square");
    const int n = a.rows();
    if (n == 0) return Matrix(a.ring(), 0, 0);
    Matrix adj(a.ring(), n, n);
    if (n == 1) {
        adj.set(0, 0, Elem(a.ring(), 1));
        return adj;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Elem d = det(a.minor_matrix(j, i));
            adj.set(i, j, ((i + j) % 2 == 0) ? d : neg(d));
        }
    }
    return adj;
}

}  // namespace admcube
