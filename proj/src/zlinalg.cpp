#include "burnside/zlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace burnside {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntVec IntMatrix::row(size_t i) const {
    return IntVec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void IntMatrix::set_row(size_t i, const IntVec& v) {
    std::copy(v.begin(), v.end(), e_.begin() + i * cols_);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

void IntMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::add_row(size_t i, size_t j, const Int& c) {
    for (size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::negate_row(size_t i) {
    for (size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_col(size_t i, size_t j, const Int& c) {
    for (size_t r = 0; r < rows_; ++r) at(r, i) += c * at(r, j);
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    IntMatrix r(rows_ + o.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t i = 0; i < o.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n" : "") << "[";
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "]";
    }
    return os.str();
}

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

// Makes h(i, c) zero using row r as pivot, applying the same unimodular
// transform to u. When the pivot already divides the target a plain
// subtraction is used, so clean rows never pick up new entries; otherwise
// the [[s, t], [-b/g, a/g]] combination puts gcd(a, b) at the pivot.
void xgcd_row_step(IntMatrix& h, IntMatrix& u, size_t r, size_t i, size_t c) {
    Int a = h.at(r, c), b = h.at(i, c);
    if (a != 0 && b % a == 0) {
        Int q = b / a;
        h.add_row(i, r, -q);
        u.add_row(i, r, -q);
        return;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int ag = a / g, bg = b / g;
    for (IntMatrix* m : {&h, &u}) {
        size_t n = m->cols();
        for (size_t k = 0; k < n; ++k) {
            Int top = s * m->at(r, k) + t * m->at(i, k);
            Int bot = -bg * m->at(r, k) + ag * m->at(i, k);
            m->at(r, k) = top;
            m->at(i, k) = bot;
        }
    }
}

// Column analogue: combines columns r and j, pivoting on row c.
void xgcd_col_step(IntMatrix& h, IntMatrix& v, size_t r, size_t j, size_t c) {
    Int a = h.at(c, r), b = h.at(c, j);
    if (a != 0 && b % a == 0) {
        Int q = b / a;
        h.add_col(j, r, -q);
        v.add_col(j, r, -q);
        return;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int ag = a / g, bg = b / g;
    for (IntMatrix* m : {&h, &v}) {
        size_t n = m->rows();
        for (size_t k = 0; k < n; ++k) {
            Int left = s * m->at(k, r) + t * m->at(k, j);
            Int right = -bg * m->at(k, r) + ag * m->at(k, j);
            m->at(k, r) = left;
            m->at(k, j) = right;
        }
    }
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
    HnfResult res{m, IntMatrix::identity(m.rows())};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = m.rows();
        for (size_t i = r; i < m.rows(); ++i)
            if (h.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == m.rows()) continue;
        h.swap_rows(r, piv);
        u.swap_rows(r, piv);
        for (size_t i = r + 1; i < m.rows(); ++i)
            if (h.at(i, c) != 0) xgcd_row_step(h, u, r, i, c);
        if (h.at(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
            if (q != 0) {
                h.add_row(i, r, -q);
                u.add_row(i, r, -q);
            }
        }
        ++r;
    }
    return res;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    size_t nmin = std::min(m.rows(), m.cols());

    for (size_t t = 0; t < nmin; ++t) {
        // pivot: smallest nonzero magnitude in the trailing block
        size_t pi = m.rows(), pj = m.cols();
        for (size_t i = t; i < m.rows(); ++i)
            for (size_t j = t; j < m.cols(); ++j) {
                if (a.at(i, j) == 0) continue;
                if (pi == m.rows() ||
                    mpz_cmpabs(a.at(i, j).get_mpz_t(), a.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m.rows()) break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (size_t i = t + 1; i < m.rows(); ++i)
                if (a.at(i, t) != 0) {
                    xgcd_row_step(a, u, t, i, t);
                    dirty = true;
                }
            for (size_t j = t + 1; j < m.cols(); ++j)
                if (a.at(t, j) != 0) {
                    xgcd_col_step(a, v, t, j, t);
                    dirty = true;
                }
            if (dirty) continue;
            // divisibility sweep so the diagonal forms a chain
            size_t bi = 0;
            bool ok = true;
            for (size_t i = t + 1; i < m.rows() && ok; ++i)
                for (size_t j = t + 1; j < m.cols() && ok; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        bi = i;
                        ok = false;
                    }
            if (ok) break;
            a.add_row(t, bi, 1);
            u.add_row(t, bi, 1);
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SnfResult res;
    res.factors.resize(nmin);
    for (size_t i = 0; i < nmin; ++i) res.factors[i] = a.at(i, i);
    res.u = std::move(u);
    res.v = std::move(v);
    return res;
}

size_t rank(const IntMatrix& m) {
    IntMatrix h = hermite_normal_form(m).h;
    size_t r = 0;
    for (size_t i = 0; i < h.rows(); ++i) {
        bool nz = false;
        for (size_t j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) {
                nz = true;
                break;
            }
        if (nz) ++r;
    }
    return r;
}

namespace {

IntMatrix nonzero_rows(const IntMatrix& h) {
    std::vector<size_t> keep;
    for (size_t i = 0; i < h.rows(); ++i)
        for (size_t j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) {
                keep.push_back(i);
                break;
            }
    IntMatrix r(keep.size(), h.cols());
    for (size_t i = 0; i < keep.size(); ++i) r.set_row(i, h.row(keep[i]));
    return r;
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& m) {
    HnfResult hr = hermite_normal_form(m);
    std::vector<size_t> zero;
    for (size_t i = 0; i < hr.h.rows(); ++i) {
        bool nz = false;
        for (size_t j = 0; j < hr.h.cols(); ++j)
            if (hr.h.at(i, j) != 0) {
                nz = true;
                break;
            }
        if (!nz) zero.push_back(i);
    }
    IntMatrix k(zero.size(), m.rows());
    for (size_t i = 0; i < zero.size(); ++i) k.set_row(i, hr.u.row(zero[i]));
    return nonzero_rows(hermite_normal_form(k).h);
}

RatVec solve_unitriangular_rational(const RatMatrix& t, const RatVec& b) {
    if (t.rows() != t.cols() || b.size() != t.rows())
        throw zlinalg_error("solve_unitriangular_rational: shape mismatch");
    size_t n = t.rows();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (t.at(i, j) != 0)
                throw non_triangular_error("nonzero entry above the diagonal at (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")");
    for (size_t i = 0; i < n; ++i)
        if (t.at(i, i) == 0)
            throw singular_diagonal_error("zero diagonal at " + std::to_string(i));
    RatVec x(n);
    for (size_t i = 0; i < n; ++i) {
        Rat acc = b[i];
        for (size_t j = 0; j < i; ++j) acc -= t.at(i, j) * x[j];
        x[i] = acc / t.at(i, i);
        x[i].canonicalize();
    }
    return x;
}

namespace {

// Expresses v over the nonzero rows of an HNF matrix; returns false when v is
// not in the row lattice. On success *coeffs gets one coefficient per row of
// h (zero rows included, with coefficient 0).
bool reduce_over_hnf(const IntMatrix& h, const IntVec& v, IntVec* coeffs) {
    IntVec rem = v;
    IntVec c(h.rows());
    for (size_t i = 0; i < h.rows(); ++i) {
        size_t piv = h.cols();
        for (size_t j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) {
                piv = j;
                break;
            }
        if (piv == h.cols()) continue;
        if (rem[piv] % h.at(i, piv) != 0) return false;
        Int q = rem[piv] / h.at(i, piv);
        if (q != 0)
            for (size_t j = 0; j < h.cols(); ++j) rem[j] -= q * h.at(i, j);
        c[i] = q;
    }
    for (const Int& x : rem)
        if (x != 0) return false;
    if (coeffs) *coeffs = std::move(c);
    return true;
}

}  // namespace

bool lattice_contains(const IntMatrix& h, const IntVec& v) {
    if (v.size() != h.cols()) throw zlinalg_error("lattice_contains: length mismatch");
    return reduce_over_hnf(h, v, nullptr);
}

std::vector<Int> quotient_invariants(const IntMatrix& ambient_basis, const IntMatrix& sub_basis) {
    if (sub_basis.rows() > 0 && sub_basis.cols() != ambient_basis.cols())
        throw zlinalg_error("quotient_invariants: column mismatch");
    HnfResult ha = hermite_normal_form(ambient_basis);
    IntMatrix basis = nonzero_rows(ha.h);
    size_t k = basis.rows();

    // each sub row in coordinates of the ambient HNF basis
    IntMatrix coords(sub_basis.rows(), k);
    for (size_t i = 0; i < sub_basis.rows(); ++i) {
        IntVec c;
        if (!reduce_over_hnf(basis, sub_basis.row(i), &c))
            throw not_a_sublattice_error("row " + std::to_string(i) +
                                         " of the sublattice is not in the ambient lattice");
        for (size_t j = 0; j < k; ++j) coords.at(i, j) = c[j];
    }

    std::vector<Int> d = smith_normal_form(coords).factors;
    std::vector<Int> out;
    for (const Int& x : d)
        if (x != 0) out.push_back(x);
    while (out.size() < k) out.emplace_back(0);
    return out;
}

IntMatrix congruence_solution_lattice(const IntMatrix& forms, const std::vector<Int>& moduli) {
    if (moduli.size() != forms.rows())
        throw zlinalg_error("congruence_solution_lattice: one modulus per form required");
    size_t n = forms.cols(), j = forms.rows();
    // variables (x | y), equation column per form: forms_j . x - m_j y_j = 0
    IntMatrix m(n + j, j);
    for (size_t q = 0; q < j; ++q) {
        for (size_t i = 0; i < n; ++i) m.at(i, q) = forms.at(q, i);
        m.at(n + q, q) = -moduli[q];
    }
    IntMatrix ker = integer_kernel(m);
    IntMatrix proj(ker.rows(), n);
    for (size_t i = 0; i < ker.rows(); ++i)
        for (size_t c = 0; c < n; ++c) proj.at(i, c) = ker.at(i, c);
    return nonzero_rows(hermite_normal_form(proj).h);
}

}  // namespace burnside
