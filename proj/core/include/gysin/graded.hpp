// Finite graded GF(2) vector spaces and degree-homogeneous maps between them.

#ifndef GYSIN_GRADED_HPP
#define GYSIN_GRADED_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gysin/gf2.hpp"

namespace gysin {

struct BasisElement {
    std::string name;
    int degree = 0;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

// A homogeneous element: a coordinate vector inside one degree.
struct Element {
    int degree = 0;
    gf2::BitVec coords;
};

// A graded space carries a named basis in a fixed "global" order (the order
// used by the file format). Degree-local coordinates number the basis
// elements of one degree in global order.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<BasisElement> basis);
    // dims[k] basis elements in degree k, named "<prefix><k>_<i>".
    static GradedSpace from_dims(const std::vector<std::size_t>& dims, const std::string& prefix = "e");
    static GradedSpace from_dims(const std::map<int, std::size_t>& dims, const std::string& prefix = "e");

    std::size_t dim(int degree) const noexcept;
    std::size_t total_dim() const noexcept { return basis_.size(); }
    // One past the highest degree with a basis element (0 for the zero space).
    int degree_bound() const noexcept { return static_cast<int>(by_degree_.size()); }
    std::map<int, std::size_t> dims() const;
    bool is_zero() const noexcept { return basis_.empty(); }

    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    const BasisElement& element(std::size_t global) const { return basis_.at(global); }
    const std::vector<std::size_t>& indices_in_degree(int degree) const;
    std::size_t local_index(std::size_t global) const { return local_.at(global); }

    gf2::BitVec to_global(const Element& e) const;
    gf2::BitVec to_global(int degree, const gf2::BitVec& local) const { return to_global(Element{degree, local}); }
    // Degree-local coordinates of a global vector; throws if it has
    // components outside `degree`.
    gf2::BitVec to_local(const gf2::BitVec& global, int degree) const;
    // Degree of a nonzero homogeneous global vector, or -1 if not homogeneous.
    int homogeneous_degree(const gf2::BitVec& global) const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.basis_ == b.basis_; }

private:
    std::vector<BasisElement> basis_;
    std::vector<std::vector<std::size_t>> by_degree_;
    std::vector<std::size_t> local_;
};

std::size_t norm(const GradedSpace& e);
std::size_t total_dim(const GradedSpace& e);
bool is_connected(const GradedSpace& e);
bool is_biconnected(const GradedSpace& e);

// A map raising degree by `shift`, stored as one block per source degree.
class GradedMap {
public:
    GradedMap() = default;
    // Zero map.
    GradedMap(const GradedSpace& source, const GradedSpace& target, int shift);
    GradedMap(std::vector<std::size_t> source_dims, std::vector<std::size_t> target_dims, int shift);

    // Splits a dense matrix over the full global bases (rows = target,
    // cols = source). Throws GradingError naming the first offending entry.
    static GradedMap from_dense(const gf2::Matrix& dense, const GradedSpace& source, const GradedSpace& target,
                                int shift);
    static GradedMap identity(const GradedSpace& space);

    int shift() const noexcept { return shift_; }
    std::size_t source_dim(int degree) const noexcept;
    std::size_t target_dim(int degree) const noexcept;
    int source_degree_bound() const noexcept { return static_cast<int>(source_dims_.size()); }
    int target_degree_bound() const noexcept { return static_cast<int>(target_dims_.size()); }
    const std::vector<std::size_t>& source_dims() const noexcept { return source_dims_; }
    const std::vector<std::size_t>& target_dims() const noexcept { return target_dims_; }

    // Block from source degree k to target degree k + shift.
    const gf2::Matrix& block(int degree) const;
    gf2::Matrix& block(int degree);

    gf2::BitVec apply(int degree, const gf2::BitVec& local) const;
    gf2::Matrix to_dense(const GradedSpace& source, const GradedSpace& target) const;
    std::size_t rank() const;
    bool is_zero() const;

    friend bool operator==(const GradedMap&, const GradedMap&) = default;

private:
    std::vector<std::size_t> source_dims_;
    std::vector<std::size_t> target_dims_;
    int shift_ = 0;
    std::vector<gf2::Matrix> blocks_;
    gf2::Matrix empty_;
};

// g after f.
GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap operator+(const GradedMap& a, const GradedMap& b);

struct GradingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True iff every entry of `dense` linking degree k to a degree other than
// k + shift is zero.
bool check_graded(const gf2::Matrix& dense, const GradedSpace& source, const GradedSpace& target, int shift);

std::vector<std::size_t> dims_vector(const GradedSpace& e);

}  // namespace gysin

#endif  // GYSIN_GRADED_HPP
