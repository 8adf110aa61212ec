#pragma once

#include "qhowe/laurent.hpp"
#include "qhowe/rational_fn.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qhowe {

struct UnknownBasisKey : std::runtime_error {
    UnknownBasisKey() : std::runtime_error("basis key outside operator domain") {}
};
struct NoSolution : std::runtime_error {
    NoSolution() : std::runtime_error("linear system has no solution") {}
};
struct NonUniqueSolution : std::runtime_error {
    NonUniqueSolution() : std::runtime_error("linear system has a nontrivial kernel") {}
};

inline bool is_zero(const mpq_class& x) { return x == 0; }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }

// Finitely supported combination of basis keys; zero entries never stored.
template <class Key>
class Vect {
public:
    using Map = std::map<Key, LaurentPoly>;

    Vect() = default;
    Vect(const Key& k, const LaurentPoly& c = LaurentPoly(1)) { add(k, c); }

    void add(const Key& k, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = entries_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    void add(const Vect& o, const LaurentPoly& scale = LaurentPoly(1)) {
        if (scale.is_zero()) return;
        for (const auto& [k, c] : o.entries_) add(k, c * scale);
    }
    Vect scaled(const LaurentPoly& s) const {
        Vect r;
        r.add(*this, s);
        return r;
    }
    LaurentPoly coeff(const Key& k) const {
        auto it = entries_.find(k);
        return it == entries_.end() ? LaurentPoly() : it->second;
    }
    const Map& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    Vect& operator+=(const Vect& o) {
        add(o);
        return *this;
    }
    Vect& operator-=(const Vect& o) {
        add(o, LaurentPoly(-1));
        return *this;
    }
    friend Vect operator+(Vect a, const Vect& b) { return a += b; }
    friend Vect operator-(Vect a, const Vect& b) { return a -= b; }
    friend bool operator==(const Vect& a, const Vect& b) { return a.entries_ == b.entries_; }

private:
    Map entries_;
};

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    F& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<F>& data() const { return data_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const F& x = a(i, k);
                if (is_zero(x)) continue;
                for (size_t j = 0; j < b.cols_; ++j)
                    if (!is_zero(b(k, j))) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

    template <class G, class Fn>
    Matrix<G> map(Fn fn) const {
        Matrix<G> r(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
        return r;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<F> data_;
};

template <class Key>
struct LinOp {
    std::function<Vect<Key>(const Key&)> action;
    std::vector<Key> domain;
    std::vector<Key> codomain;
};

template <class Key>
Vect<Key> apply(const LinOp<Key>& op, const Vect<Key>& x) {
    Vect<Key> out;
    for (const auto& [k, c] : x) {
        bool known = false;
        for (const auto& d : op.domain)
            if (d == k) {
                known = true;
                break;
            }
        if (!known) throw UnknownBasisKey();
        out.add(op.action(k), c);
    }
    return out;
}

// Column j holds the coordinates of action(domain[j]).
template <class Key>
Matrix<LaurentPoly> matrix_of(const LinOp<Key>& op) {
    std::map<Key, size_t> index;
    for (size_t i = 0; i < op.codomain.size(); ++i) index.emplace(op.codomain[i], i);
    Matrix<LaurentPoly> m(op.codomain.size(), op.domain.size());
    for (size_t j = 0; j < op.domain.size(); ++j)
        for (const auto& [k, c] : op.action(op.domain[j])) {
            auto it = index.find(k);
            if (it == index.end()) throw UnknownBasisKey();
            m(it->second, j) = c;
        }
    return m;
}

// Incremental reduced row echelon form over a field, sparse rows.
template <class F>
class RowReducer {
public:
    using Row = std::map<size_t, F>;

    explicit RowReducer(size_t ncols) : ncols_(ncols) {}

    // Reduces r against the current basis; returns true if it was independent.
    bool insert(Row r) {
        reduce(r);
        if (r.empty()) return false;
        size_t p = r.begin()->first;
        F inv = F(1) / r.begin()->second;
        for (auto& [c, x] : r) x *= inv;
        for (auto& [q, row] : pivots_) {
            auto it = row.find(p);
            if (it == row.end()) continue;
            F f = it->second;
            axpy(row, r, -f);
        }
        pivots_.emplace(p, std::move(r));
        return true;
    }
    void reduce(Row& r) const {
        for (auto it = r.begin(); it != r.end();) {
            auto pv = pivots_.find(it->first);
            if (pv == pivots_.end()) {
                ++it;
                continue;
            }
            F f = it->second;
            size_t key = it->first;
            axpy(r, pv->second, -f);
            it = r.upper_bound(key);
        }
    }
    bool contains(Row r) const {
        reduce(r);
        return r.empty();
    }
    size_t rank() const { return pivots_.size(); }
    size_t ncols() const { return ncols_; }
    const std::map<size_t, Row>& pivots() const { return pivots_; }

    std::vector<std::vector<F>> kernel() const {
        std::vector<std::vector<F>> out;
        for (size_t f = 0; f < ncols_; ++f) {
            if (pivots_.count(f)) continue;
            std::vector<F> x(ncols_, F(0));
            x[f] = F(1);
            for (const auto& [p, row] : pivots_) {
                auto it = row.find(f);
                if (it != row.end()) x[p] = -it->second;
            }
            out.push_back(std::move(x));
        }
        return out;
    }

private:
    static void axpy(Row& y, const Row& x, const F& a) {
        for (const auto& [c, v] : x) {
            auto [it, fresh] = y.try_emplace(c, a * v);
            if (!fresh) {
                it->second += a * v;
                if (is_zero(it->second)) y.erase(it);
            } else if (is_zero(it->second)) {
                y.erase(it);
            }
        }
    }

    size_t ncols_;
    std::map<size_t, Row> pivots_;
};

template <class F>
typename RowReducer<F>::Row to_row(const std::vector<F>& v) {
    typename RowReducer<F>::Row r;
    for (size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) r.emplace(i, v[i]);
    return r;
}

template <class F>
std::vector<F> solve_in_field(const Matrix<F>& m, const std::vector<F>& b, bool unique) {
    const size_t n = m.cols();
    RowReducer<F> red(n + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        typename RowReducer<F>::Row r;
        for (size_t j = 0; j < n; ++j)
            if (!is_zero(m(i, j))) r.emplace(j, m(i, j));
        if (!is_zero(b[i])) r.emplace(n, b[i]);
        red.insert(std::move(r));
    }
    if (red.pivots().count(n)) throw NoSolution();
    if (unique && red.rank() < n) throw NonUniqueSolution();
    std::vector<F> x(n, F(0));
    for (const auto& [p, row] : red.pivots()) {
        auto it = row.find(n);
        if (it != row.end()) x[p] = it->second;
    }
    for (size_t i = 0; i < m.rows(); ++i) {
        F acc(0);
        for (size_t j = 0; j < n; ++j)
            if (!is_zero(m(i, j))) acc += m(i, j) * x[j];
        if (!(acc == b[i])) throw std::logic_error("solve_exact back-substitution check failed");
    }
    return x;
}

// Exact solve of M x = b over Q(v).
std::vector<RationalFn> solve_exact(const Matrix<LaurentPoly>& m, const std::vector<LaurentPoly>& b,
                                    bool unique = true);

Matrix<RationalFn> to_rational(const Matrix<LaurentPoly>& m);
// Specialization v -> value; non-authoritative fast mode only.
mpq_class evaluate(const LaurentPoly& p, const mpq_class& value);
Matrix<mpq_class> evaluate(const Matrix<LaurentPoly>& m, const mpq_class& value);

// Flattened row-major coordinates.
template <class F>
typename RowReducer<F>::Row flatten(const Matrix<F>& m) {
    return to_row(m.data());
}

// Basis of {X : X M = M X for all M in ops}.
template <class F>
std::vector<Matrix<F>> commutant(const std::vector<Matrix<F>>& ops) {
    if (ops.empty()) throw std::invalid_argument("commutant of empty operator list");
    const size_t n = ops.front().rows();
    RowReducer<F> red(n * n);
    for (const auto& mat : ops) {
        if (mat.rows() != n || mat.cols() != n) throw std::invalid_argument("commutant needs square matrices of one size");
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                typename RowReducer<F>::Row r;
                auto add = [&](size_t idx, const F& c) {
                    if (is_zero(c)) return;
                    auto [it, fresh] = r.try_emplace(idx, c);
                    if (!fresh) {
                        it->second += c;
                        if (is_zero(it->second)) r.erase(it);
                    }
                };
                for (size_t k = 0; k < n; ++k) {
                    add(i * n + k, mat(k, j));
                    add(k * n + j, -mat(i, k));
                }
                red.insert(std::move(r));
            }
    }
    std::vector<Matrix<F>> out;
    for (const auto& x : red.kernel()) {
        Matrix<F> m(n, n);
        for (size_t i = 0; i < n * n; ++i) m(i / n, i % n) = x[i];
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace qhowe
