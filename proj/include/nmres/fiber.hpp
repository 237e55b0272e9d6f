#pragma once

#include <vector>

#include "nmres/param_scalar.hpp"

namespace nmres {

/// Covector in the orthonormal frame at the working point: n ParamScalar
/// components. The metric there is the identity, so g(u, v) = sum u_i v_i.
class Covector {
  public:
    explicit Covector(int n) : comp_(n) {}
    explicit Covector(std::vector<ParamScalar> comp) : comp_(std::move(comp)) {}

    static Covector basis(int n, int i) {
        Covector v(n);
        v.comp_[i] = ParamScalar::one();
        return v;
    }
    static Covector zero(int n) { return Covector(n); }

    int n() const { return static_cast<int>(comp_.size()); }
    const ParamScalar& operator[](int i) const { return comp_[i]; }
    ParamScalar& operator[](int i) { return comp_[i]; }

    friend Covector operator+(const Covector& u, const Covector& v);
    Covector scaled(const ParamScalar& c) const;

    /// g(u, v) in the orthonormal frame.
    friend ParamScalar inner(const Covector& u, const Covector& v);

    bool is_zero() const;

  private:
    std::vector<ParamScalar> comp_;
};

/// Endomorphism of the 2^n-dimensional exterior-algebra fiber, as a dense
/// matrix of exact scalars. Rows/columns are indexed by subsets of {1..n}
/// ordered by (cardinality, lexicographic).
class FiberEndo {
  public:
    FiberEndo(int n, int dim) : n_(n), dim_(dim), m_(dim * dim) {}

    static FiberEndo zero(int n);
    static FiberEndo identity(int n);

    int n() const { return n_; }
    int dim() const { return dim_; }

    const ParamScalar& at(int r, int c) const { return m_[r * dim_ + c]; }
    ParamScalar& at(int r, int c) { return m_[r * dim_ + c]; }

    bool is_zero() const;
    ParamScalar trace() const;

    FiberEndo operator-() const;
    friend FiberEndo operator+(const FiberEndo& x, const FiberEndo& y);
    friend FiberEndo operator-(const FiberEndo& x, const FiberEndo& y);
    friend FiberEndo operator*(const FiberEndo& x, const FiberEndo& y);
    FiberEndo scaled(const ParamScalar& c) const;
    FiberEndo& operator+=(const FiberEndo& y);

    friend bool operator==(const FiberEndo& x, const FiberEndo& y) {
        return x.n_ == y.n_ && x.m_ == y.m_;
    }
    friend bool operator!=(const FiberEndo& x, const FiberEndo& y) { return !(x == y); }

    /// Tr(x * y) without forming the product.
    static ParamScalar trace_product(const FiberEndo& x, const FiberEndo& y);

  private:
    int n_;
    int dim_;
    std::vector<ParamScalar> m_;
};

/// The exterior-algebra fiber in dimension n with its basis bookkeeping and
/// the matrix representations of all covector actions.
class Fiber {
  public:
    explicit Fiber(int n);

    int n() const { return n_; }
    int dim() const { return dim_; }

    /// subset bitmask of basis element #k, in (|I|, lex) order
    unsigned mask_of(int k) const { return masks_[k]; }
    int index_of(unsigned mask) const { return index_[mask]; }

    FiberEndo zero() const { return FiberEndo::zero(n_); }
    FiberEndo identity() const { return FiberEndo::identity(n_); }

    /// Exterior multiplication by v.
    FiberEndo eps(const Covector& v) const;
    /// Interior multiplication (metric adjoint of eps).
    FiberEndo iota(const Covector& v) const;

    FiberEndo c(const Covector& v) const;       // eps - iota
    FiberEndo c_hat(const Covector& v) const;   // eps + iota
    FiberEndo c_tilde(const Covector& v, const Params& p) const;  // a*eps - b*iota
    FiberEndo c_bar(const Covector& v, const Params& p) const;    // b*eps - a*iota

    /// Trace recomputed in a permuted basis; must agree with FiberEndo::trace.
    ParamScalar trace_permuted(const FiberEndo& m, const std::vector<int>& perm) const;

  private:
    int n_;
    int dim_;
    std::vector<unsigned> masks_;
    std::vector<int> index_;
};

/// Shared n = 4 fiber used by the residue pipeline.
const Fiber& fiber4();

}  // namespace nmres
